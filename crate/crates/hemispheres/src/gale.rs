//! The combinatorial side of Gale duality for the acyclic-digraph space:
//! minimal non-faces, nerve complexes of polytopes given by facet data, the
//! Alexander-dual comparison, and the lattice of unions of directed cycles.

use crate::complex::{alexander_dual, ComplexError, FinitePoset, SimplicialComplex};
use crate::digraph::{ordered_pairs, pair_label};
use crate::sphere::{self, Configuration, SphereError};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GaleError {
    #[error("ground set of {0} vertices exceeds the enumeration guard")]
    TooManyVertices(usize),
    #[error("facet lists may not contain one another")]
    NestedFacets,
    #[error("vertex {0} lies in no facet")]
    UncoveredVertex(usize),
    #[error("facet vertex {0} out of range")]
    VertexRange(usize),
    #[error("configuration is not doubly ample")]
    NotDoublyAmple,
    #[error("n = {0} exceeds the enumeration guard n <= {1}")]
    Guard(usize, usize),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Sphere(#[from] SphereError),
}

/// Vertex-facet incidence data of a polytope: which vertices lie on which
/// facet. Facets form an antichain and cover every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetIncidence {
    labels: Vec<String>,
    facets: Vec<BTreeSet<usize>>,
}

impl FacetIncidence {
    pub fn new(labels: Vec<String>, facets: Vec<BTreeSet<usize>>) -> Result<Self, GaleError> {
        let m = labels.len();
        for f in &facets {
            for &v in f {
                if v >= m {
                    return Err(GaleError::VertexRange(v));
                }
            }
        }
        for (i, f) in facets.iter().enumerate() {
            for (j, g) in facets.iter().enumerate() {
                if i != j && f.is_subset(g) {
                    return Err(GaleError::NestedFacets);
                }
            }
        }
        for v in 0..m {
            if !facets.iter().any(|f| f.contains(&v)) {
                return Err(GaleError::UncoveredVertex(v));
            }
        }
        Ok(FacetIncidence { labels, facets })
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn facets(&self) -> &[BTreeSet<usize>] {
        &self.facets
    }

    pub fn facet_sizes(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.facets.iter().map(BTreeSet::len).collect();
        sizes.sort_unstable();
        sizes
    }
}

/// Inclusion-minimal subsets of the vertex label set that are not faces.
pub fn minimal_nonfaces(k: &SimplicialComplex) -> Result<Vec<Vec<u32>>, GaleError> {
    let m = k.labels().len();
    if m > 22 && std::env::var("HEMI_MAX_FACES").is_err() {
        return Err(GaleError::TooManyVertices(m));
    }
    let mut face_masks: std::collections::HashSet<u64> = std::collections::HashSet::new();
    for face in k.faces() {
        face_masks.insert(face.iter().fold(0u64, |acc, &v| acc | 1 << v));
    }
    let is_face = |mask: u64| mask == 0 || face_masks.contains(&mask);
    let mut out = Vec::new();
    for mask in 1u64..1 << m {
        if is_face(mask) {
            continue;
        }
        let mut minimal = true;
        let mut bits = mask;
        while bits != 0 {
            let low = bits & bits.wrapping_neg();
            if !is_face(mask & !low) {
                minimal = false;
                break;
            }
            bits &= !low;
        }
        if minimal {
            out.push((0..m as u32).filter(|&v| mask >> v & 1 == 1).collect());
        }
    }
    out.sort_unstable_by_key(|f: &Vec<u32>| (f.len(), f.clone()));
    Ok(out)
}

/// The nerve complex of facet data: faces are the vertex sets lying in a
/// single facet.
pub fn nerve_complex(fi: &FacetIncidence) -> SimplicialComplex {
    let facets: Vec<Vec<usize>> = fi
        .facets
        .iter()
        .map(|f| f.iter().copied().collect())
        .collect();
    SimplicialComplex::from_facets(fi.labels.clone(), &facets)
        .expect("validated facet data closes downward")
}

/// Doubly ample: removing any single point still leaves an ample
/// configuration (every open hemisphere holds at least two points).
pub fn is_doubly_ample(c: &Configuration) -> bool {
    if !sphere::is_ample(c) {
        return false;
    }
    (0..c.len()).all(|skip| {
        let points: Vec<_> = c
            .points()
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != skip)
            .map(|(_, p)| p.clone())
            .collect();
        let smaller = Configuration::with_default_labels(points).expect("nonzero points remain");
        sphere::is_ample(&smaller)
    })
}

/// Report of the duality between the constellation complex of a doubly
/// ample configuration and the nerve complex rebuilt from its minimal
/// non-faces.
#[derive(Debug, Clone)]
pub struct GaleReport {
    pub vertex_count: usize,
    pub minimal_nonface_count: usize,
    pub facet_sizes: Vec<usize>,
    pub dual_equals_stel: bool,
}

/// Build the facet data whose facets are complements of the minimal
/// non-faces of the constellation complex, and verify that the Alexander
/// dual of its nerve complex is the constellation complex again.
pub fn gale_duality_check(c: &Configuration) -> Result<GaleReport, GaleError> {
    if !is_doubly_ample(c) {
        return Err(GaleError::NotDoublyAmple);
    }
    let e = c.essentialize();
    let stel = sphere::stel_complex(&e)?;
    let m = stel.labels().len();
    let nonfaces = minimal_nonfaces(&stel)?;
    let facets: Vec<BTreeSet<usize>> = nonfaces
        .iter()
        .map(|nf| {
            let inside: BTreeSet<usize> = nf.iter().map(|&v| v as usize).collect();
            (0..m).filter(|v| !inside.contains(v)).collect()
        })
        .collect();
    let fi = FacetIncidence::new(stel.labels().to_vec(), facets)?;
    let nerve = nerve_complex(&fi);
    let dual = alexander_dual(&nerve, stel.labels())?;
    Ok(GaleReport {
        vertex_count: m,
        minimal_nonface_count: nonfaces.len(),
        facet_sizes: fi.facet_sizes(),
        dual_equals_stel: dual.face_sets_equal(&stel),
    })
}

/// All simple directed cycles on `1..=n`, as sorted lists of indices into
/// the ordered-pair vertex set. Each cycle is enumerated once by fixing its
/// least vertex first.
pub fn simple_cycles(n: usize) -> Vec<Vec<u32>> {
    let pairs = ordered_pairs(n);
    let index = |a: usize, b: usize| -> u32 {
        pairs
            .iter()
            .position(|&p| p == (a, b))
            .expect("valid ordered pair") as u32
    };
    let mut cycles = Vec::new();
    let mut vertices: Vec<usize> = (1..=n).collect();
    // choose the support, smallest element anchored first
    fn visit(
        rest: &[usize],
        path: &mut Vec<usize>,
        anchor: usize,
        cycles: &mut Vec<Vec<usize>>,
    ) {
        if !path.is_empty() {
            let mut cycle = vec![anchor];
            cycle.extend(path.iter().copied());
            cycles.push(cycle);
        }
        for (k, &v) in rest.iter().enumerate() {
            let mut remaining = rest.to_vec();
            remaining.remove(k);
            path.push(v);
            visit(&remaining, path, anchor, cycles);
            path.pop();
        }
    }
    let mut raw: Vec<Vec<usize>> = Vec::new();
    for start in 0..vertices.len() {
        let anchor = vertices[start];
        let rest: Vec<usize> = vertices[start + 1..].to_vec();
        let mut path = Vec::new();
        visit(&rest, &mut path, anchor, &mut raw);
    }
    vertices.clear();
    for cycle in raw {
        // close the walk anchor -> ... -> anchor into edges
        let mut edges: Vec<u32> = Vec::with_capacity(cycle.len());
        for w in cycle.windows(2) {
            edges.push(index(w[0], w[1]));
        }
        edges.push(index(*cycle.last().expect("nonempty"), cycle[0]));
        edges.sort_unstable();
        cycles.push(edges);
    }
    cycles.sort_unstable_by_key(|c: &Vec<u32>| (c.len(), c.clone()));
    cycles
}

/// Facet data of the polytope dual to the acyclic-digraph space: the ground
/// set is all ordered pairs, one facet per simple directed cycle, namely
/// its complement.
pub fn cycle_polytope_facets(n: usize) -> Result<FacetIncidence, GaleError> {
    let pairs = ordered_pairs(n);
    let labels: Vec<String> = pairs.iter().map(|&p| pair_label(p)).collect();
    let m = labels.len();
    let facets: Vec<BTreeSet<usize>> = simple_cycles(n)
        .into_iter()
        .map(|cycle| {
            let inside: BTreeSet<usize> = cycle.into_iter().map(|v| v as usize).collect();
            (0..m).filter(|v| !inside.contains(v)).collect()
        })
        .collect();
    FacetIncidence::new(labels, facets)
}

/// The lattice of unions of simple directed cycles, together with the empty
/// set as bottom; the top is the full pair set.
#[derive(Debug, Clone)]
pub struct CycleLattice {
    n: usize,
    pair_count: usize,
    generators: Vec<u32>,
    elements: Vec<u32>,
}

impl CycleLattice {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn full_mask(&self) -> u32 {
        ((1u64 << self.pair_count) - 1) as u32
    }

    /// Proper elements: everything except the empty bottom and the full top.
    pub fn proper_elements(&self) -> Vec<u32> {
        self.elements
            .iter()
            .copied()
            .filter(|&e| e != 0 && e != self.full_mask())
            .collect()
    }

    /// The proper part as an inclusion-ordered poset.
    pub fn proper_poset(&self) -> FinitePoset {
        let proper = self.proper_elements();
        let pairs = ordered_pairs(self.n);
        let labels: Vec<String> = proper
            .iter()
            .map(|&mask| {
                let names: Vec<String> = pairs
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &(a, b))| format!("{a}{b}"))
                    .collect();
                format!("{{{}}}", names.join(","))
            })
            .collect();
        FinitePoset::from_leq(labels, |i, j| proper[i] & !proper[j] == 0)
            .expect("inclusion of masks is a partial order")
    }
}

/// Union closure of the simple directed cycles.
pub fn cycle_lattice(n: usize) -> Result<CycleLattice, GaleError> {
    if n > 4 && std::env::var("HEMI_MAX_FACES").is_err() {
        return Err(GaleError::Guard(n, 4));
    }
    let pair_count = ordered_pairs(n).len();
    let generators: Vec<u32> = simple_cycles(n)
        .into_iter()
        .map(|cycle| cycle.into_iter().fold(0u32, |acc, v| acc | 1 << v))
        .collect();
    let mut elements: BTreeSet<u32> = [0u32].into_iter().collect();
    let mut frontier: Vec<u32> = vec![0];
    while let Some(e) = frontier.pop() {
        for &g in &generators {
            let u = e | g;
            if elements.insert(u) {
                frontier.push(u);
            }
        }
    }
    Ok(CycleLattice {
        n,
        pair_count,
        generators,
        elements: elements.into_iter().collect(),
    })
}

/// Nonempty intersections of the cycle-polytope facets, as vertex masks;
/// complementation maps these onto the proper cycle lattice, reversing
/// inclusion.
pub fn facet_intersections(fi: &FacetIncidence) -> BTreeSet<u64> {
    let masks: Vec<u64> = fi
        .facets()
        .iter()
        .map(|f| f.iter().fold(0u64, |acc, &v| acc | 1 << v))
        .collect();
    let mut out: BTreeSet<u64> = BTreeSet::new();
    let mut frontier: Vec<u64> = Vec::new();
    for &m in &masks {
        if out.insert(m) {
            frontier.push(m);
        }
    }
    while let Some(e) = frontier.pop() {
        for &m in &masks {
            let inter = e & m;
            if inter != 0 && out.insert(inter) {
                frontier.push(inter);
            }
        }
    }
    out
}
