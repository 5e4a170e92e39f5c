//! Directed graphs on a labelled vertex set, the simplicial complexes of
//! acyclic and of non-strongly-connected digraphs, the type-A root system
//! dictionary, and the spherical encoding of weighted DAGs.

use crate::complex::{ComplexError, SimplicialComplex};
use crate::exact::{QVector, Rational};
use crate::sphere::{self, Configuration, SphereError};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DigraphError {
    #[error("edge ({0},{1}) is a loop")]
    Loop(usize, usize),
    #[error("edge ({0},{1}) repeated")]
    DuplicateEdge(usize, usize),
    #[error("edge ({0},{1}) outside vertex range 1..={2}")]
    VertexRange(usize, usize, usize),
    #[error("n = {0} exceeds the enumeration guard n <= {1} (set HEMI_MAX_FACES to override)")]
    Guard(usize, usize),
    #[error("weights must be nonnegative")]
    NegativeWeight,
    #[error("all weights are zero")]
    AllZeroWeights,
    #[error("underlying digraph must be acyclic")]
    NotAcyclic,
    #[error("vector must be nonzero with zero coordinate sum")]
    BadVector,
    #[error("invalid digraph JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Sphere(#[from] SphereError),
}

/// A digraph on vertices `1..=n`: a set of ordered pairs of distinct
/// vertices, no loops, no duplicates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct DigraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    weights: Vec<String>,
}

impl Digraph {
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, DigraphError> {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(DigraphError::Loop(a, b));
            }
            if a < 1 || a > n || b < 1 || b > n {
                return Err(DigraphError::VertexRange(a, b, n));
            }
            if !set.insert((a, b)) {
                return Err(DigraphError::DuplicateEdge(a, b));
            }
        }
        Ok(Digraph { n, edges: set })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a, b))
    }

    pub fn is_acyclic(&self) -> bool {
        // Colour DFS: 0 unseen, 1 on stack, 2 done.
        let mut colour = vec![0u8; self.n + 1];
        let adj = self.adjacency();
        fn visit(v: usize, adj: &[Vec<usize>], colour: &mut [u8]) -> bool {
            colour[v] = 1;
            for &w in &adj[v] {
                match colour[w] {
                    1 => return false,
                    0 => {
                        if !visit(w, adj, colour) {
                            return false;
                        }
                    }
                    _ => {}
                }
            }
            colour[v] = 2;
            true
        }
        (1..=self.n).all(|v| colour[v] != 0 || visit(v, &adj, &mut colour))
    }

    pub fn is_strongly_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let adj = self.adjacency();
        let radj = {
            let mut r = vec![Vec::new(); self.n + 1];
            for &(a, b) in &self.edges {
                r[b].push(a);
            }
            r
        };
        let reaches_all = |adj: &[Vec<usize>]| {
            let mut seen = vec![false; self.n + 1];
            let mut stack = vec![1usize];
            seen[1] = true;
            let mut count = 1;
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        count += 1;
                        stack.push(w);
                    }
                }
            }
            count == self.n
        };
        reaches_all(&adj) && reaches_all(&radj)
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n + 1];
        for &(a, b) in &self.edges {
            adj[a].push(b);
        }
        adj
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(DigraphJson {
            n: self.n,
            edges: self.edges.iter().map(|&(a, b)| [a, b]).collect(),
            weights: Vec::new(),
        })
        .expect("digraph serialises")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self, DigraphError> {
        let parsed: DigraphJson =
            serde_json::from_value(value.clone()).map_err(|e| DigraphError::Json(e.to_string()))?;
        Digraph::new(parsed.n, parsed.edges.iter().map(|e| (e[0], e[1])))
    }
}

/// The ordered pairs of distinct elements of `1..=n`, lexicographically.
/// This fixed order is the shared vertex order of every complex below and
/// of the root system.
pub fn ordered_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * (n.max(1) - 1));
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                pairs.push((i, j));
            }
        }
    }
    pairs
}

pub fn pair_label(pair: (usize, usize)) -> String {
    format!("({},{})", pair.0, pair.1)
}

fn pair_labels(n: usize) -> Vec<String> {
    ordered_pairs(n).into_iter().map(pair_label).collect()
}

fn guard(n: usize, max: usize) -> Result<(), DigraphError> {
    if n > max && std::env::var("HEMI_MAX_FACES").is_err() {
        return Err(DigraphError::Guard(n, max));
    }
    Ok(())
}

fn edge_subset_graph(n: usize, pairs: &[(usize, usize)], face: &[u32]) -> Digraph {
    let edges: BTreeSet<(usize, usize)> = face.iter().map(|&v| pairs[v as usize]).collect();
    Digraph { n, edges }
}

/// The complex of all acyclic digraphs on `n` vertices, on the vertex set
/// of ordered pairs.
pub fn dag_complex(n: usize) -> Result<SimplicialComplex, DigraphError> {
    guard(n, 5)?;
    let pairs = ordered_pairs(n);
    let budget = crate::max_faces_budget();
    Ok(SimplicialComplex::enumerate_hereditary(
        pair_labels(n),
        |face| edge_subset_graph(n, &pairs, face).is_acyclic(),
        budget,
    )?)
}

/// The complex of all digraphs on `n` vertices that are not strongly
/// connected.
pub fn disds_complex(n: usize) -> Result<SimplicialComplex, DigraphError> {
    guard(n, 4)?;
    let pairs = ordered_pairs(n);
    let budget = crate::max_faces_budget();
    Ok(SimplicialComplex::enumerate_hereditary(
        pair_labels(n),
        |face| !edge_subset_graph(n, &pairs, face).is_strongly_connected(),
        budget,
    )?)
}

/// The maximal faces of the non-strongly-connected complex: one edge set
/// per ordered bipartition `(A1, A2)` of the vertex set into nonempty
/// parts, with everything inside each part in both directions and all
/// edges from the first part to the second.
pub fn disds_facets(n: usize) -> Vec<BTreeSet<(usize, usize)>> {
    assert!(n >= 2);
    let mut facets = Vec::with_capacity((1 << n) - 2);
    for mask in 1..(1u32 << n) - 1 {
        let a1: Vec<usize> = (1..=n).filter(|&v| mask >> (v - 1) & 1 == 1).collect();
        let a2: Vec<usize> = (1..=n).filter(|&v| mask >> (v - 1) & 1 == 0).collect();
        let mut edges = BTreeSet::new();
        for &x in &a1 {
            for &y in &a1 {
                if x != y {
                    edges.insert((x, y));
                }
            }
        }
        for &x in &a2 {
            for &y in &a2 {
                if x != y {
                    edges.insert((x, y));
                }
            }
        }
        for &x in &a1 {
            for &y in &a2 {
                edges.insert((x, y));
            }
        }
        facets.push(edges);
    }
    facets
}

/// The type-A root system: the vectors `e_j - e_i` in `Q^n`, labelled by
/// ordered pairs in the same order as the digraph complexes.
pub fn root_system(n: usize) -> Configuration {
    assert!(n >= 2);
    let points: Vec<QVector> = ordered_pairs(n)
        .iter()
        .map(|&(i, j)| {
            let mut v = QVector::zeros(n);
            v.set(j - 1, Rational::from_integer(1.into()));
            v.set(i - 1, Rational::from_integer((-1).into()));
            v
        })
        .collect();
    Configuration::new(points, pair_labels(n)).expect("root vectors are nonzero")
}

/// Outcome of comparing the digraph complexes with the hemisphere nerves of
/// the root system.
#[derive(Debug, Clone)]
pub struct IdentificationReport {
    pub n: usize,
    pub stel_equal: bool,
    pub bstel_equal: bool,
    pub counterexample: Option<Vec<String>>,
}

impl IdentificationReport {
    pub fn holds(&self) -> bool {
        self.stel_equal && self.bstel_equal
    }
}

/// Face-set equality of the acyclic-digraph complex with the constellation
/// complex of the root system, and of the non-strongly-connected complex
/// with the big constellation complex, under the pair <-> root bijection.
pub fn verify_identifications(n: usize) -> Result<IdentificationReport, DigraphError> {
    guard(n, 4)?;
    let roots = root_system(n).essentialize();
    let dag = dag_complex(n)?;
    let stel = sphere::stel_complex(&roots)?;
    let disds = disds_complex(n)?;
    let bstel = sphere::bstel_complex(&roots)?;
    let stel_equal = dag.face_sets_equal(&stel);
    let bstel_equal = disds.face_sets_equal(&bstel);
    let counterexample = if !stel_equal {
        dag.first_face_not_in(&stel)
            .or_else(|| stel.first_face_not_in(&dag))
    } else if !bstel_equal {
        disds
            .first_face_not_in(&bstel)
            .or_else(|| bstel.first_face_not_in(&disds))
    } else {
        None
    };
    Ok(IdentificationReport {
        n,
        stel_equal,
        bstel_equal,
        counterexample,
    })
}

/// An acyclic digraph with positive rational edge weights; zero-weight
/// edges are dropped on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedDag {
    graph: Digraph,
    weights: BTreeMap<(usize, usize), Rational>,
}

impl WeightedDag {
    pub fn new(
        n: usize,
        weighted_edges: impl IntoIterator<Item = ((usize, usize), Rational)>,
    ) -> Result<Self, DigraphError> {
        let mut kept = Vec::new();
        let mut weights = BTreeMap::new();
        for ((a, b), w) in weighted_edges {
            if w < Rational::zero() {
                return Err(DigraphError::NegativeWeight);
            }
            if w.is_zero() {
                continue;
            }
            kept.push((a, b));
            if weights.insert((a, b), w).is_some() {
                return Err(DigraphError::DuplicateEdge(a, b));
            }
        }
        let graph = Digraph::new(n, kept)?;
        if !graph.is_acyclic() {
            return Err(DigraphError::NotAcyclic);
        }
        Ok(WeightedDag { graph, weights })
    }

    pub fn graph(&self) -> &Digraph {
        &self.graph
    }

    pub fn weight(&self, a: usize, b: usize) -> Option<&Rational> {
        self.weights.get(&(a, b))
    }

    pub fn weights(&self) -> impl Iterator<Item = (&(usize, usize), &Rational)> {
        self.weights.iter()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(DigraphJson {
            n: self.graph.n,
            edges: self.graph.edges.iter().map(|&(a, b)| [a, b]).collect(),
            weights: self
                .graph
                .edges
                .iter()
                .map(|e| crate::exact::format_rational(&self.weights[e]))
                .collect(),
        })
        .expect("weighted dag serialises")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self, DigraphError> {
        let parsed: DigraphJson =
            serde_json::from_value(value.clone()).map_err(|e| DigraphError::Json(e.to_string()))?;
        if parsed.weights.len() != parsed.edges.len() {
            return Err(DigraphError::Json(
                "weights must align with edges".to_string(),
            ));
        }
        let mut weighted = Vec::new();
        for (e, w) in parsed.edges.iter().zip(&parsed.weights) {
            let w =
                crate::exact::parse_rational(w).map_err(|e| DigraphError::Json(e.to_string()))?;
            weighted.push(((e[0], e[1]), w));
        }
        WeightedDag::new(parsed.n, weighted)
    }
}

/// The ray representative of a weighted DAG on the sphere: the weighted sum
/// of the root vectors of its edges. The vector is not normalised; the
/// spherical point is an irrational rescaling, and only the ray matters.
pub fn encode_dag(w: &WeightedDag) -> Result<QVector, DigraphError> {
    if w.weights.is_empty() {
        return Err(DigraphError::AllZeroWeights);
    }
    let n = w.graph.n;
    let mut x = QVector::zeros(n);
    for (&(i, j), weight) in &w.weights {
        let mut term = QVector::zeros(n);
        term.set(j - 1, weight.clone());
        term.set(i - 1, -weight.clone());
        x = x.add(&term);
    }
    debug_assert!(!x.is_zero(), "roots of a DAG lie in an open halfspace");
    Ok(x)
}

/// Read a weighted DAG back from a zero-sum vector: an edge `(i, j)` with
/// weight `rho(x_j - x_i)` for every coordinate pair with `x_i < x_j`. The
/// result follows the coordinate order, so it is always acyclic.
pub fn decode_vector_with(
    x: &QVector,
    rho: impl Fn(&Rational) -> Rational,
) -> Result<WeightedDag, DigraphError> {
    let n = x.dim();
    let sum: Rational = x.iter().cloned().sum();
    if x.is_zero() || !sum.is_zero() {
        return Err(DigraphError::BadVector);
    }
    let mut weighted = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i != j && x.get(i - 1) < x.get(j - 1) {
                let gap = x.get(j - 1) - x.get(i - 1);
                weighted.push(((i, j), rho(&gap)));
            }
        }
    }
    let dag = WeightedDag::new(n, weighted)?;
    debug_assert!(dag.graph().is_acyclic());
    Ok(dag)
}

/// Decoding with the identity weight: edge weight `x_j - x_i`.
pub fn decode_vector(x: &QVector) -> Result<WeightedDag, DigraphError> {
    decode_vector_with(x, Clone::clone)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{classify_pseudomanifold, reduced_homology, PseudomanifoldReport};
    use crate::exact::{rat, rat_int};
    use itertools::Itertools;

    #[test]
    fn acyclicity_and_strong_connectivity() {
        let cycle = Digraph::new(3, [(1, 2), (2, 3), (3, 1)]).unwrap();
        assert!(!cycle.is_acyclic());
        assert!(cycle.is_strongly_connected());
        let empty = Digraph::new(3, []).unwrap();
        assert!(empty.is_acyclic());
        assert!(!empty.is_strongly_connected());
        let single = Digraph::new(1, []).unwrap();
        assert!(single.is_acyclic());
        assert!(single.is_strongly_connected());
    }

    #[test]
    fn constructor_validation() {
        assert!(matches!(
            Digraph::new(3, [(1, 1)]),
            Err(DigraphError::Loop(1, 1))
        ));
        assert!(matches!(
            Digraph::new(3, [(1, 2), (1, 2)]),
            Err(DigraphError::DuplicateEdge(1, 2))
        ));
        assert!(matches!(
            Digraph::new(2, [(1, 3)]),
            Err(DigraphError::VertexRange(1, 3, 2))
        ));
    }

    #[test]
    fn bipartition_digraphs_are_never_strongly_connected() {
        for n in 2..=4 {
            for facet in disds_facets(n) {
                let g = Digraph::new(n, facet.iter().copied()).unwrap();
                assert!(!g.is_strongly_connected());
            }
        }
    }

    /// Brute-force oracle over all edge subsets.
    fn brute_force_faces(
        n: usize,
        keep: impl Fn(&Digraph) -> bool,
    ) -> Vec<BTreeSet<(usize, usize)>> {
        let pairs = ordered_pairs(n);
        let mut out = Vec::new();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: BTreeSet<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|&(k, _)| mask >> k & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            let g = Digraph {
                n,
                edges: edges.clone(),
            };
            if keep(&g) {
                out.push(edges);
            }
        }
        out
    }

    #[test]
    fn dag_complex_matches_brute_force() {
        for n in [3, 4] {
            let complex = dag_complex(n).unwrap();
            let oracle = brute_force_faces(n, Digraph::is_acyclic);
            // Oracle includes the empty graph; the complex stores nonempty faces.
            assert_eq!(complex.num_faces() + 1, oracle.len());
            if n == 3 {
                assert_eq!(oracle.len(), 25);
            } else {
                assert_eq!(oracle.len(), 543);
            }
            let pairs = ordered_pairs(n);
            for edges in &oracle {
                if edges.is_empty() {
                    continue;
                }
                let face: Vec<u32> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(_, p)| edges.contains(p))
                    .map(|(k, _)| k as u32)
                    .collect();
                assert!(complex.contains(&face));
            }
        }
    }

    #[test]
    fn disds_complex_matches_brute_force() {
        for n in [3, 4] {
            let complex = disds_complex(n).unwrap();
            let oracle = brute_force_faces(n, |g| !g.is_strongly_connected());
            assert_eq!(complex.num_faces() + 1, oracle.len());
            if n == 3 {
                assert_eq!(complex.num_faces(), 45);
            } else {
                assert_eq!(complex.num_faces(), 2489);
            }
        }
    }

    #[test]
    fn dag_complex_guard() {
        assert!(matches!(dag_complex(6), Err(DigraphError::Guard(6, 5))));
        assert!(matches!(disds_complex(5), Err(DigraphError::Guard(5, 4))));
    }

    #[test]
    fn disds_facet_shapes() {
        let f2 = disds_facets(2);
        assert_eq!(f2.len(), 2);
        assert!(f2.iter().all(|f| f.len() == 1));

        let f3 = disds_facets(3);
        assert_eq!(f3.len(), 6);
        assert!(f3.iter().all(|f| f.len() == 4));

        let f4 = disds_facets(4);
        assert_eq!(f4.len(), 14);
        let sizes = f4.iter().map(BTreeSet::len).counts();
        assert_eq!(sizes[&9], 8); // 1+3 and 3+1 bipartitions
        assert_eq!(sizes[&8], 6); // 2+2 bipartitions
    }

    #[test]
    fn disds_facets_match_maximal_faces() {
        for n in [3, 4] {
            let complex = disds_complex(n).unwrap();
            let pairs = ordered_pairs(n);
            let from_complex: BTreeSet<BTreeSet<(usize, usize)>> = complex
                .facets()
                .into_iter()
                .map(|f| f.iter().map(|&v| pairs[v as usize]).collect())
                .collect();
            let from_formula: BTreeSet<BTreeSet<(usize, usize)>> =
                disds_facets(n).into_iter().collect();
            assert_eq!(from_complex, from_formula);
        }
    }

    #[test]
    fn root_system_telescoping() {
        let c = root_system(4);
        let pairs = ordered_pairs(4);
        let index = |p: (usize, usize)| pairs.iter().position(|&q| q == p).unwrap();
        for (i, j, k) in (1..=4).tuple_combinations() {
            let a_ij = c.point(index((i, j)));
            let a_jk = c.point(index((j, k)));
            let a_ik = c.point(index((i, k)));
            assert_eq!(a_ij.add(a_jk), *a_ik);
        }
        assert!(sphere::is_ample(&c));
        assert!(sphere::is_antipodal(&c));
    }

    #[test]
    fn identifications_for_small_n() {
        for n in [2, 3] {
            let report = verify_identifications(n).unwrap();
            assert!(report.holds(), "identification failed: {report:?}");
        }
    }

    #[test]
    fn dag3_from_total_order_facets() {
        // The six total orders generate the whole acyclic complex by
        // downward closure: 24 nonempty faces.
        use crate::complex::SimplicialComplex;
        let pairs = ordered_pairs(3);
        let complex = dag_complex(3).unwrap();
        let facet_ids: Vec<Vec<usize>> = complex
            .facets()
            .into_iter()
            .map(|f| f.iter().map(|&v| v as usize).collect())
            .collect();
        assert_eq!(facet_ids.len(), 6);
        let labels: Vec<String> = pairs.iter().map(|&p| pair_label(p)).collect();
        let rebuilt = SimplicialComplex::from_facets(labels, &facet_ids).unwrap();
        assert_eq!(rebuilt.num_faces(), 24);
        assert!(rebuilt.face_sets_equal(&complex));
    }

    #[test]
    fn dag_complex_sits_inside_disds_complex() {
        for n in 2..=4 {
            let dag = dag_complex(n).unwrap();
            let disds = disds_complex(n).unwrap();
            for face in dag.faces() {
                assert!(disds.contains(face));
            }
        }
    }

    #[test]
    fn dag3_homology_and_structure() {
        let k = dag_complex(3).unwrap();
        assert!(reduced_homology(&k).is_sphere_wedge(1, 1));
        match classify_pseudomanifold(&k) {
            PseudomanifoldReport::Pure {
                dim,
                facet_count,
                pseudomanifold,
                with_boundary,
                ..
            } => {
                assert_eq!((dim, facet_count), (2, 6));
                assert!(pseudomanifold && with_boundary);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn encode_simple_graphs() {
        let single = WeightedDag::new(2, [((1, 2), rat_int(1))]).unwrap();
        assert_eq!(encode_dag(&single).unwrap(), QVector::from_ints(&[-1, 1]));

        let chain = WeightedDag::new(
            3,
            [
                ((1, 2), rat_int(1)),
                ((2, 3), rat_int(1)),
                ((1, 3), rat_int(1)),
            ],
        )
        .unwrap();
        assert_eq!(encode_dag(&chain).unwrap(), QVector::from_ints(&[-2, 0, 2]));
    }

    #[test]
    fn encoding_is_not_injective() {
        // A 2-edge path and the same weight mass on the shortcut edge give
        // different graphs with the same ray representative.
        let path = WeightedDag::new(3, [((1, 2), rat_int(1)), ((2, 3), rat_int(1))]).unwrap();
        let shortcut = WeightedDag::new(3, [((1, 3), rat_int(1))]).unwrap();
        assert_ne!(path, shortcut);
        assert_eq!(encode_dag(&path).unwrap(), encode_dag(&shortcut).unwrap());
    }

    #[test]
    fn decode_examples() {
        let w = decode_vector(&QVector::from_ints(&[-1, 1])).unwrap();
        assert_eq!(w.graph().edge_count(), 1);
        assert_eq!(w.weight(1, 2), Some(&rat_int(2)));

        let w = decode_vector(&QVector::from_ints(&[-2, 0, 2])).unwrap();
        assert_eq!(w.weight(1, 2), Some(&rat_int(2)));
        assert_eq!(w.weight(2, 3), Some(&rat_int(2)));
        assert_eq!(w.weight(1, 3), Some(&rat_int(4)));

        // Equal coordinates produce no edge.
        let w = decode_vector(&QVector::from_ints(&[1, 1, -2])).unwrap();
        assert_eq!(w.weight(1, 2), None);
        assert_eq!(w.weight(3, 1), Some(&rat_int(3)));

        assert!(decode_vector(&QVector::from_ints(&[1, 1])).is_err());
        assert!(decode_vector(&QVector::from_ints(&[0, 0])).is_err());
    }

    #[test]
    fn encode_after_decode_scales_by_n() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for _ in 0..100 {
            let n = rng.gen_range(3..=6);
            let mut coords: Vec<Rational> = (0..n - 1)
                .map(|_| rat(rng.gen_range(-9..=9), rng.gen_range(1..=4)))
                .collect();
            let tail: Rational = -coords.iter().cloned().sum::<Rational>();
            coords.push(tail);
            let x = QVector::new(coords);
            if x.is_zero() {
                continue;
            }
            let decoded = decode_vector(&x).unwrap();
            assert!(decoded.graph().is_acyclic());
            let back = encode_dag(&decoded).unwrap();
            assert_eq!(back, x.scale(&rat_int(n as i64)));
        }
    }

    #[test]
    fn weighted_dag_validation() {
        assert!(matches!(
            WeightedDag::new(3, [((1, 2), rat_int(-1))]),
            Err(DigraphError::NegativeWeight)
        ));
        // Zero weights are dropped; all-zero means no encoding.
        let w = WeightedDag::new(3, [((1, 2), rat_int(0))]).unwrap();
        assert!(matches!(encode_dag(&w), Err(DigraphError::AllZeroWeights)));
        assert!(matches!(
            WeightedDag::new(2, [((1, 2), rat_int(1)), ((2, 1), rat_int(1))]),
            Err(DigraphError::NotAcyclic)
        ));
    }

    #[test]
    fn json_round_trips() {
        let g = Digraph::new(4, [(1, 2), (3, 4)]).unwrap();
        assert_eq!(Digraph::from_json(&g.to_json()).unwrap(), g);
        let w = WeightedDag::new(3, [((1, 2), rat(1, 2)), ((2, 3), rat_int(3))]).unwrap();
        assert_eq!(WeightedDag::from_json(&w.to_json()).unwrap(), w);
    }
}
