//! Orders, preorders and finite topologies on a small labelled set; the
//! adjunctions tying them to the digraph complexes; the dictionary between
//! preorders and topologies.
//!
//! Everything is exhaustively enumerated over bit-relations, so the guards
//! keep n at four or below.

use crate::complex::{ComplexError, FinitePoset};
use crate::digraph::{dag_complex, disds_complex, ordered_pairs, Digraph, DigraphError};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PosetError {
    #[error("n = {0} exceeds the enumeration guard n <= {1}")]
    Guard(usize, usize),
    #[error("relation is not a preorder")]
    NotPreorder,
    #[error("family of opens is not a topology")]
    NotTopology,
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Digraph(#[from] DigraphError),
}

const MAX_N: usize = 4;

fn guard(n: usize) -> Result<(), PosetError> {
    if n > MAX_N && std::env::var("HEMI_MAX_FACES").is_err() {
        return Err(PosetError::Guard(n, MAX_N));
    }
    Ok(())
}

/// A binary relation on `1..=n`, stored as an n*n bit mask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Relation {
    n: usize,
    bits: u32,
}

impl Relation {
    pub fn new(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        assert!(n * n <= 32);
        let mut bits = 0u32;
        for (a, b) in pairs {
            assert!((1..=n).contains(&a) && (1..=n).contains(&b));
            bits |= 1 << ((a - 1) * n + (b - 1));
        }
        Relation { n, bits }
    }

    /// The diagonal-only relation (the trivial order).
    pub fn diagonal(n: usize) -> Self {
        Relation::new(n, (1..=n).map(|i| (i, i)))
    }

    /// The full relation (the complete preorder).
    pub fn full(n: usize) -> Self {
        Relation::new(
            n,
            (1..=n).flat_map(|a| (1..=n).map(move |b| (a, b))),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.bits >> ((a - 1) * self.n + (b - 1)) & 1 == 1
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 1..=self.n {
            for b in 1..=self.n {
                if self.contains(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn is_reflexive(&self) -> bool {
        (1..=self.n).all(|a| self.contains(a, a))
    }

    pub fn is_transitive(&self) -> bool {
        for a in 1..=self.n {
            for b in 1..=self.n {
                if self.contains(a, b) {
                    for c in 1..=self.n {
                        if self.contains(b, c) && !self.contains(a, c) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    pub fn is_antisymmetric(&self) -> bool {
        for a in 1..=self.n {
            for b in a + 1..=self.n {
                if self.contains(a, b) && self.contains(b, a) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_preorder(&self) -> bool {
        self.is_reflexive() && self.is_transitive()
    }

    pub fn is_order(&self) -> bool {
        self.is_preorder() && self.is_antisymmetric()
    }

    /// Containment of relations (refinement order on (pre)orders).
    pub fn subset_of(&self, other: &Relation) -> bool {
        assert_eq!(self.n, other.n);
        self.bits & !other.bits == 0
    }

    /// Render the off-diagonal pairs, e.g. "{12,21}".
    pub fn label(&self) -> String {
        let parts: Vec<String> = self
            .pairs()
            .into_iter()
            .filter(|&(a, b)| a != b)
            .map(|(a, b)| format!("{a}{b}"))
            .collect();
        format!("{{{}}}", parts.join(","))
    }
}

/// Reflexive-transitive closure of a digraph: the least preorder whose
/// strict part contains the edges.
pub fn transitive_closure(g: &Digraph) -> Relation {
    let n = g.n();
    let mut reach = vec![vec![false; n + 1]; n + 1];
    for v in 1..=n {
        reach[v][v] = true;
    }
    for (a, b) in g.edges() {
        reach[a][b] = true;
    }
    for k in 1..=n {
        for a in 1..=n {
            if reach[a][k] {
                for b in 1..=n {
                    if reach[k][b] {
                        reach[a][b] = true;
                    }
                }
            }
        }
    }
    Relation::new(
        n,
        (1..=n)
            .flat_map(|a| (1..=n).map(move |b| (a, b)))
            .filter(|&(a, b)| reach[a][b]),
    )
}

/// The strict part of a preorder as a digraph: all off-diagonal pairs.
pub fn strict_digraph(r: &Relation) -> Result<Digraph, PosetError> {
    if !r.is_preorder() {
        return Err(PosetError::NotPreorder);
    }
    Ok(Digraph::new(
        r.n(),
        r.pairs().into_iter().filter(|&(a, b)| a != b),
    )
    .expect("strict part of a preorder is loop-free"))
}

/// All partial orders on `1..=n`, sorted by bit pattern.
pub fn enumerate_orders(n: usize) -> Result<Vec<Relation>, PosetError> {
    guard(n)?;
    Ok(enumerate_transitive(n, true))
}

/// All preorders on `1..=n`, sorted by bit pattern.
pub fn enumerate_preorders(n: usize) -> Result<Vec<Relation>, PosetError> {
    guard(n)?;
    Ok(enumerate_transitive(n, false))
}

fn enumerate_transitive(n: usize, antisymmetric: bool) -> Vec<Relation> {
    let off_diag: Vec<(usize, usize)> = ordered_pairs(n);
    let diagonal = Relation::diagonal(n).bits;
    let mut out = Vec::new();
    for mask in 0u32..1 << off_diag.len() {
        let mut bits = diagonal;
        for (k, &(a, b)) in off_diag.iter().enumerate() {
            if mask >> k & 1 == 1 {
                bits |= 1 << ((a - 1) * n + (b - 1));
            }
        }
        let r = Relation { n, bits };
        if r.is_transitive() && (!antisymmetric || r.is_antisymmetric()) {
            out.push(r);
        }
    }
    out.sort();
    out
}

fn inclusion_poset(relations: &[Relation]) -> FinitePoset {
    let labels: Vec<String> = relations.iter().map(Relation::label).collect();
    FinitePoset::from_leq(labels, |i, j| relations[i].subset_of(&relations[j]))
        .expect("inclusion of relations is a partial order")
}

/// The poset of nontrivial partial orders (the trivial order removed),
/// ordered by inclusion of relations.
pub fn poset_of_orders(n: usize) -> Result<(FinitePoset, Vec<Relation>), PosetError> {
    let orders: Vec<Relation> = enumerate_orders(n)?
        .into_iter()
        .filter(|r| *r != Relation::diagonal(n))
        .collect();
    Ok((inclusion_poset(&orders), orders))
}

/// The poset of proper preorders (trivial and complete removed), ordered by
/// inclusion of relations.
pub fn poset_of_preorders(n: usize) -> Result<(FinitePoset, Vec<Relation>), PosetError> {
    let preorders: Vec<Relation> = enumerate_preorders(n)?
        .into_iter()
        .filter(|r| *r != Relation::diagonal(n) && *r != Relation::full(n))
        .collect();
    Ok((inclusion_poset(&preorders), preorders))
}

/// The poset of all preorders including both ends, by inclusion.
pub fn full_preorder_poset(n: usize) -> Result<FinitePoset, PosetError> {
    let preorders = enumerate_preorders(n)?;
    Ok(inclusion_poset(&preorders))
}

/// The poset of all topologies including both ends, by strength.
pub fn full_topology_poset(n: usize) -> Result<FinitePoset, PosetError> {
    let topologies = enumerate_topologies(n)?;
    let labels: Vec<String> = topologies.iter().map(FiniteTopology::label).collect();
    FinitePoset::from_leq(labels, |i, j| topologies[i].weaker_or_equal(&topologies[j]))
        .map_err(PosetError::from)
}

/// A topology on `1..=n`: the family of open sets as subset bit masks.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct FiniteTopology {
    n: usize,
    opens: BTreeSet<u32>,
}

impl FiniteTopology {
    pub fn new(n: usize, opens: BTreeSet<u32>) -> Result<Self, PosetError> {
        let full = (1u32 << n) - 1;
        if !opens.contains(&0) || !opens.contains(&full) {
            return Err(PosetError::NotTopology);
        }
        for &a in &opens {
            if a & !full != 0 {
                return Err(PosetError::NotTopology);
            }
            for &b in &opens {
                if !opens.contains(&(a | b)) || !opens.contains(&(a & b)) {
                    return Err(PosetError::NotTopology);
                }
            }
        }
        Ok(FiniteTopology { n, opens })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn opens(&self) -> &BTreeSet<u32> {
        &self.opens
    }

    pub fn num_opens(&self) -> usize {
        self.opens.len()
    }

    pub fn discrete(n: usize) -> Self {
        FiniteTopology {
            n,
            opens: (0..1u32 << n).collect(),
        }
    }

    pub fn indiscrete(n: usize) -> Self {
        FiniteTopology {
            n,
            opens: [0, (1u32 << n) - 1].into_iter().collect(),
        }
    }

    /// Weaker-or-equal: every open of `self` is open in `other`.
    pub fn weaker_or_equal(&self, other: &FiniteTopology) -> bool {
        assert_eq!(self.n, other.n);
        self.opens.is_subset(&other.opens)
    }

    pub fn label(&self) -> String {
        let parts: Vec<String> = self.opens.iter().map(|m| format!("{m:x}")).collect();
        format!("T[{}]", parts.join(","))
    }
}

/// The Alexandrov topology of a preorder: opens are the upper order ideals.
/// Note the correspondence reverses the two natural orders: the trivial
/// preorder yields the discrete topology.
pub fn topology_from_preorder(r: &Relation) -> Result<FiniteTopology, PosetError> {
    if !r.is_preorder() {
        return Err(PosetError::NotPreorder);
    }
    let n = r.n();
    let mut opens = BTreeSet::new();
    'subsets: for mask in 0u32..1 << n {
        for x in 1..=n {
            if mask >> (x - 1) & 1 == 1 {
                for y in 1..=n {
                    if r.contains(x, y) && mask >> (y - 1) & 1 == 0 {
                        continue 'subsets;
                    }
                }
            }
        }
        opens.insert(mask);
    }
    FiniteTopology::new(n, opens)
}

/// The specialisation preorder of a topology: `x <= y` iff the least open
/// neighbourhood of `x` contains that of `y`.
pub fn preorder_from_topology(t: &FiniteTopology) -> Relation {
    let n = t.n();
    let least_open = |x: usize| -> u32 {
        let mut acc = (1u32 << n) - 1;
        for &open in t.opens() {
            if open >> (x - 1) & 1 == 1 {
                acc &= open;
            }
        }
        acc
    };
    let neighbourhoods: Vec<u32> = (1..=n).map(least_open).collect();
    Relation::new(
        n,
        (1..=n).flat_map(|a| (1..=n).map(move |b| (a, b))).filter(|&(a, b)| {
            neighbourhoods[a - 1] & neighbourhoods[b - 1] == neighbourhoods[b - 1]
        }),
    )
}

/// Kolmogorov separation: distinct points have distinct least open
/// neighbourhoods, i.e. the specialisation preorder is an order.
pub fn is_t0(t: &FiniteTopology) -> bool {
    preorder_from_topology(t).is_antisymmetric()
}

/// All topologies on `1..=n`, enumerated directly over families of subsets
/// (independently of the preorder dictionary).
pub fn enumerate_topologies(n: usize) -> Result<Vec<FiniteTopology>, PosetError> {
    guard(n)?;
    let full = (1u32 << n) - 1;
    let free: Vec<u32> = (1..full).collect();
    let mut out = Vec::new();
    for mask in 0u64..1 << free.len() {
        let mut opens: BTreeSet<u32> = [0, full].into_iter().collect();
        for (k, &subset) in free.iter().enumerate() {
            if mask >> k & 1 == 1 {
                opens.insert(subset);
            }
        }
        if let Ok(t) = FiniteTopology::new(n, opens) {
            out.push(t);
        }
    }
    Ok(out)
}

/// The poset of topologies ordered by strength, with the indiscrete bottom
/// and discrete top removed.
pub fn poset_of_topologies(n: usize) -> Result<(FinitePoset, Vec<FiniteTopology>), PosetError> {
    let kept: Vec<FiniteTopology> = enumerate_topologies(n)?
        .into_iter()
        .filter(|t| *t != FiniteTopology::discrete(n) && *t != FiniteTopology::indiscrete(n))
        .collect();
    let labels: Vec<String> = kept.iter().map(FiniteTopology::label).collect();
    let poset = FinitePoset::from_leq(labels, |i, j| kept[i].weaker_or_equal(&kept[j]))
        .expect("strength is a partial order");
    Ok((poset, kept))
}

/// The poset of T0 topologies ordered by strength, with only the discrete
/// top removed (the indiscrete topology is not T0 for n >= 2).
pub fn poset_of_t0_topologies(n: usize) -> Result<(FinitePoset, Vec<FiniteTopology>), PosetError> {
    let kept: Vec<FiniteTopology> = enumerate_topologies(n)?
        .into_iter()
        .filter(|t| is_t0(t) && *t != FiniteTopology::discrete(n))
        .collect();
    let labels: Vec<String> = kept.iter().map(FiniteTopology::label).collect();
    let poset = FinitePoset::from_leq(labels, |i, j| kept[i].weaker_or_equal(&kept[j]))
        .expect("strength is a partial order");
    Ok((poset, kept))
}

/// Result of checking an adjoint pair of monotone maps between posets.
#[derive(Debug, Clone)]
pub struct GaloisCheck {
    pub holds: bool,
    pub f_monotone: bool,
    pub g_monotone: bool,
    pub adjunction: bool,
    pub unit_counit: bool,
    pub triple_identities: bool,
    pub witness: Option<String>,
}

/// Verify that `f: s -> t` and `g: t -> s` (as index tables) form a Galois
/// connection: both maps monotone, `f(a) >= b iff a >= g(b)`, the
/// unit/counit inequalities, and the derived identities `fgf = f`,
/// `gfg = g`.
pub fn galois_check(s: &FinitePoset, t: &FinitePoset, f: &[usize], g: &[usize]) -> GaloisCheck {
    assert_eq!(f.len(), s.len());
    assert_eq!(g.len(), t.len());
    let mut witness = None;

    let mut f_monotone = true;
    for a in 0..s.len() {
        for b in 0..s.len() {
            if s.leq(a, b) && !t.leq(f[a], f[b]) {
                f_monotone = false;
                witness.get_or_insert(format!(
                    "f not monotone at {} <= {}",
                    s.label(a),
                    s.label(b)
                ));
            }
        }
    }
    let mut g_monotone = true;
    for a in 0..t.len() {
        for b in 0..t.len() {
            if t.leq(a, b) && !s.leq(g[a], g[b]) {
                g_monotone = false;
                witness.get_or_insert(format!(
                    "g not monotone at {} <= {}",
                    t.label(a),
                    t.label(b)
                ));
            }
        }
    }
    let mut adjunction = true;
    for a in 0..s.len() {
        for b in 0..t.len() {
            if t.leq(b, f[a]) != s.leq(g[b], a) {
                adjunction = false;
                witness.get_or_insert(format!(
                    "adjunction fails at ({}, {})",
                    s.label(a),
                    t.label(b)
                ));
            }
        }
    }
    let mut unit_counit = true;
    for a in 0..s.len() {
        if !s.leq(g[f[a]], a) {
            unit_counit = false;
            witness.get_or_insert(format!("g(f({})) not below it", s.label(a)));
        }
    }
    for b in 0..t.len() {
        if !t.leq(b, f[g[b]]) {
            unit_counit = false;
            witness.get_or_insert(format!("f(g({})) not above it", t.label(b)));
        }
    }
    let mut triple_identities = true;
    for a in 0..s.len() {
        if f[g[f[a]]] != f[a] {
            triple_identities = false;
            witness.get_or_insert(format!("fgf differs from f at {}", s.label(a)));
        }
    }
    for b in 0..t.len() {
        if g[f[g[b]]] != g[b] {
            triple_identities = false;
            witness.get_or_insert(format!("gfg differs from g at {}", t.label(b)));
        }
    }
    GaloisCheck {
        holds: f_monotone && g_monotone && adjunction && unit_counit && triple_identities,
        f_monotone,
        g_monotone,
        adjunction,
        unit_counit,
        triple_identities,
        witness,
    }
}

/// The adjoint pair between nontrivial orders and nonempty acyclic-digraph
/// faces: an order maps to its strict digraph, a face to its
/// reflexive-transitive closure. Returns the two posets, the maps, and
/// whether closure-after-strict is the identity on orders.
pub struct DagOrderConnection {
    pub orders: FinitePoset,
    pub faces: FinitePoset,
    pub to_face: Vec<usize>,
    pub to_order: Vec<usize>,
    pub closure_of_strict_is_identity: bool,
}

pub fn dag_order_connection(n: usize) -> Result<DagOrderConnection, PosetError> {
    guard(n)?;
    let (orders_poset, orders) = poset_of_orders(n)?;
    let complex = dag_complex(n)?;
    let faces_poset = complex.face_poset();
    let pairs = ordered_pairs(n);

    // Face poset elements sorted as in face_poset(); rebuild that order.
    let mut faces: Vec<Vec<u32>> = complex.faces().cloned().collect();
    faces.sort_unstable_by_key(|f| (f.len(), f.clone()));
    let face_index = |face: &Vec<u32>| -> usize {
        faces.binary_search_by_key(&(face.len(), face.clone()), |f| (f.len(), f.clone()))
            .expect("face present")
    };

    let to_face: Vec<usize> = orders
        .iter()
        .map(|r| {
            let g = strict_digraph(r).expect("orders are preorders");
            let face: Vec<u32> = pairs
                .iter()
                .enumerate()
                .filter(|(_, p)| g.has_edge(p.0, p.1))
                .map(|(k, _)| k as u32)
                .collect();
            face_index(&face)
        })
        .collect();
    let to_order: Vec<usize> = faces
        .iter()
        .map(|face| {
            let g = Digraph::new(n, face.iter().map(|&v| pairs[v as usize]))
                .expect("faces are valid edge sets");
            let closure = transitive_closure(&g);
            orders
                .iter()
                .position(|r| *r == closure)
                .expect("closures of acyclic graphs are nontrivial orders")
        })
        .collect();
    let closure_of_strict_is_identity =
        (0..orders.len()).all(|i| to_order[to_face[i]] == i);
    Ok(DagOrderConnection {
        orders: orders_poset,
        faces: faces_poset,
        to_face,
        to_order,
        closure_of_strict_is_identity,
    })
}

/// The analogous adjoint pair between proper preorders and nonempty faces
/// of the non-strongly-connected complex.
pub struct PreorderDisdsConnection {
    pub preorders: FinitePoset,
    pub faces: FinitePoset,
    pub to_face: Vec<usize>,
    pub to_preorder: Vec<usize>,
}

pub fn preorder_disds_connection(n: usize) -> Result<PreorderDisdsConnection, PosetError> {
    guard(n)?;
    let (pre_poset, preorders) = poset_of_preorders(n)?;
    let complex = disds_complex(n)?;
    let faces_poset = complex.face_poset();
    let pairs = ordered_pairs(n);
    let mut faces: Vec<Vec<u32>> = complex.faces().cloned().collect();
    faces.sort_unstable_by_key(|f| (f.len(), f.clone()));
    let face_index = |face: &Vec<u32>| -> usize {
        faces.binary_search_by_key(&(face.len(), face.clone()), |f| (f.len(), f.clone()))
            .expect("face present")
    };
    let to_face: Vec<usize> = preorders
        .iter()
        .map(|r| {
            let g = strict_digraph(r).expect("preorders validated");
            let face: Vec<u32> = pairs
                .iter()
                .enumerate()
                .filter(|(_, p)| g.has_edge(p.0, p.1))
                .map(|(k, _)| k as u32)
                .collect();
            face_index(&face)
        })
        .collect();
    let to_preorder: Vec<usize> = faces
        .iter()
        .map(|face| {
            let g = Digraph::new(n, face.iter().map(|&v| pairs[v as usize]))
                .expect("faces are valid edge sets");
            let closure = transitive_closure(&g);
            preorders
                .iter()
                .position(|r| *r == closure)
                .expect("closures of non-strongly-connected graphs are proper preorders")
        })
        .collect();
    Ok(PreorderDisdsConnection {
        preorders: pre_poset,
        faces: faces_poset,
        to_face,
        to_preorder,
    })
}
