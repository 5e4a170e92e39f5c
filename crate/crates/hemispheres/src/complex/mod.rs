//! Simplicial complexes with explicit face sets, their integral homology,
//! order complexes of posets, ordered sums, combinatorial Alexander duality
//! and pseudomanifold classification.

mod homology;
mod poset;

pub use homology::{reduced_homology, HomologyProfile};
pub use poset::FinitePoset;

use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashSet};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ComplexError {
    #[error("facet contains a duplicated vertex")]
    DuplicateVertex,
    #[error("facet uses vertex index {0} but only {1} labels are declared")]
    UnknownVertex(usize, usize),
    #[error("enumeration exceeds the face budget of {0} (set HEMI_MAX_FACES to raise)")]
    FaceBudget(usize),
    #[error("Alexander dual rejects the full simplex and its boundary")]
    AlexanderDegenerate,
    #[error("ground set must contain every vertex label of the complex")]
    GroundMismatch,
    #[error("{0}")]
    InvalidPoset(String),
}

/// An abstract simplicial complex: a downward-closed family of subsets of a
/// labelled vertex set. The empty face is treated as always present but is
/// not stored. A separate `void` state (no faces at all) is kept distinct
/// from the complex whose only face is the empty one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    faces: HashSet<Vec<u32>>,
    void: bool,
}

#[derive(Serialize, Deserialize)]
struct ComplexJson {
    vertices: Vec<String>,
    facets: Vec<Vec<String>>,
}

impl SimplicialComplex {
    /// The void complex: no faces, not even the empty one.
    pub fn void() -> Self {
        SimplicialComplex {
            labels: Vec::new(),
            faces: HashSet::new(),
            void: true,
        }
    }

    /// The empty complex on the given labels: only the empty face.
    pub fn empty(labels: Vec<String>) -> Self {
        SimplicialComplex {
            labels,
            faces: HashSet::new(),
            void: false,
        }
    }

    /// Downward closure of the given facets.
    pub fn from_facets(
        labels: Vec<String>,
        facets: &[Vec<usize>],
    ) -> Result<Self, ComplexError> {
        let n = labels.len();
        let mut complex = Self::empty(labels);
        for facet in facets {
            let mut sorted: Vec<u32> = Vec::with_capacity(facet.len());
            for &v in facet {
                if v >= n {
                    return Err(ComplexError::UnknownVertex(v, n));
                }
                sorted.push(v as u32);
            }
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                return Err(ComplexError::DuplicateVertex);
            }
            complex.insert_closed(&sorted);
        }
        Ok(complex)
    }

    /// Insert a single face known to keep the family downward closed.
    pub(crate) fn insert_face_unchecked(&mut self, face: Vec<u32>) {
        debug_assert!(face.windows(2).all(|w| w[0] < w[1]));
        if !face.is_empty() {
            self.faces.insert(face);
        }
    }

    /// Insert a face together with all of its subsets.
    fn insert_closed(&mut self, face: &[u32]) {
        if face.is_empty() || self.faces.contains(face) {
            return;
        }
        self.faces.insert(face.to_vec());
        let mut sub = Vec::with_capacity(face.len() - 1);
        for skip in 0..face.len() {
            sub.clear();
            sub.extend(face.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v));
            self.insert_closed(&sub);
        }
    }

    /// Enumerate all faces of a hereditary predicate by extending known
    /// faces with vertices of larger index only, so every face is produced
    /// exactly once. The predicate must be downward closed.
    pub fn enumerate_hereditary(
        labels: Vec<String>,
        mut is_face: impl FnMut(&[u32]) -> bool,
        budget: usize,
    ) -> Result<Self, ComplexError> {
        let n = labels.len();
        let mut complex = Self::empty(labels);
        let mut frontier: Vec<Vec<u32>> = Vec::new();
        for v in 0..n as u32 {
            let face = vec![v];
            if is_face(&face) {
                complex.faces.insert(face.clone());
                frontier.push(face);
            }
        }
        while let Some(face) = frontier.pop() {
            let last = *face.last().expect("frontier faces are nonempty");
            for v in last + 1..n as u32 {
                let mut candidate = face.clone();
                candidate.push(v);
                if is_face(&candidate) {
                    if complex.faces.len() >= budget {
                        return Err(ComplexError::FaceBudget(budget));
                    }
                    complex.faces.insert(candidate.clone());
                    frontier.push(candidate);
                }
            }
        }
        Ok(complex)
    }

    pub fn is_void(&self) -> bool {
        self.void
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: u32) -> &str {
        &self.labels[v as usize]
    }

    /// Number of nonempty faces.
    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    /// Dimension: `None` for the void complex, `Some(-1)` for the empty one.
    pub fn dim(&self) -> Option<i64> {
        if self.void {
            return None;
        }
        Some(
            self.faces
                .iter()
                .map(|f| f.len() as i64 - 1)
                .max()
                .unwrap_or(-1),
        )
    }

    pub fn contains(&self, face: &[u32]) -> bool {
        if face.is_empty() {
            return !self.void;
        }
        debug_assert!(face.windows(2).all(|w| w[0] < w[1]));
        self.faces.contains(face)
    }

    pub fn faces(&self) -> impl Iterator<Item = &Vec<u32>> {
        self.faces.iter()
    }

    /// Vertices actually present as faces (labels may be unused).
    pub fn vertices(&self) -> Vec<u32> {
        let mut vs: Vec<u32> = self
            .faces
            .iter()
            .filter(|f| f.len() == 1)
            .map(|f| f[0])
            .collect();
        vs.sort_unstable();
        vs
    }

    /// Faces grouped and sorted per dimension, for deterministic processing.
    pub fn faces_by_dim(&self) -> Vec<Vec<Vec<u32>>> {
        let Some(dim) = self.dim() else { return Vec::new() };
        if dim < 0 {
            return Vec::new();
        }
        let mut levels: Vec<Vec<Vec<u32>>> = vec![Vec::new(); dim as usize + 1];
        for f in &self.faces {
            levels[f.len() - 1].push(f.clone());
        }
        for level in &mut levels {
            level.sort_unstable();
        }
        levels
    }

    /// Maximal faces.
    pub fn facets(&self) -> Vec<Vec<u32>> {
        let n = self.labels.len() as u32;
        let mut out: Vec<Vec<u32>> = self
            .faces
            .iter()
            .filter(|f| {
                !(0..n).any(|v| {
                    if f.binary_search(&v).is_ok() {
                        return false;
                    }
                    let mut sup = f.to_vec();
                    let pos = sup.binary_search(&v).unwrap_err();
                    sup.insert(pos, v);
                    self.faces.contains(&sup)
                })
            })
            .cloned()
            .collect();
        out.sort_unstable_by_key(|f| (f.len(), f.clone()));
        out
    }

    /// Alternating sum of nonempty face counts.
    pub fn euler_characteristic(&self) -> i64 {
        self.faces
            .iter()
            .map(|f| if f.len() % 2 == 1 { 1 } else { -1 })
            .sum()
    }

    /// Equality of face sets, requiring identical label vectors.
    pub fn face_sets_equal(&self, other: &SimplicialComplex) -> bool {
        self.labels == other.labels && self.void == other.void && self.faces == other.faces
    }

    /// The first face of `self` missing from `other`, if any (label form).
    pub fn first_face_not_in(&self, other: &SimplicialComplex) -> Option<Vec<String>> {
        let mut diff: Vec<&Vec<u32>> = self.faces.difference(&other.faces).collect();
        diff.sort_unstable();
        diff.first()
            .map(|f| f.iter().map(|&v| self.labels[v as usize].clone()).collect())
    }

    /// Inclusion-ordered poset of nonempty faces.
    pub fn face_poset(&self) -> FinitePoset {
        let mut faces: Vec<Vec<u32>> = self.faces.iter().cloned().collect();
        faces.sort_unstable_by_key(|f| (f.len(), f.clone()));
        let labels: Vec<String> = faces
            .iter()
            .map(|f| {
                let names: Vec<&str> = f.iter().map(|&v| self.labels[v as usize].as_str()).collect();
                format!("{{{}}}", names.join(","))
            })
            .collect();
        let leq = |a: &Vec<u32>, b: &Vec<u32>| a.iter().all(|v| b.binary_search(v).is_ok());
        FinitePoset::from_leq(labels, |i, j| leq(&faces[i], &faces[j]))
            .expect("inclusion is a partial order")
    }

    pub fn to_json(&self) -> serde_json::Value {
        let facets = self
            .facets()
            .into_iter()
            .map(|f| {
                f.iter()
                    .map(|&v| self.labels[v as usize].clone())
                    .collect::<Vec<String>>()
            })
            .collect();
        serde_json::to_value(ComplexJson {
            vertices: self.labels.clone(),
            facets,
        })
        .expect("complex serialises")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self, ComplexError> {
        let parsed: ComplexJson = serde_json::from_value(value.clone())
            .map_err(|e| ComplexError::InvalidPoset(e.to_string()))?;
        let index: BTreeMap<&str, usize> = parsed
            .vertices
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect();
        let mut facets = Vec::new();
        for facet in &parsed.facets {
            let mut ids = Vec::with_capacity(facet.len());
            for l in facet {
                let Some(&i) = index.get(l.as_str()) else {
                    return Err(ComplexError::UnknownVertex(usize::MAX, parsed.vertices.len()));
                };
                ids.push(i);
            }
            facets.push(ids);
        }
        Self::from_facets(parsed.vertices, &facets)
    }
}

/// Purity and pseudomanifold structure of a complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PseudomanifoldReport {
    /// No nonempty faces at all.
    Degenerate,
    /// Maximal faces of several dimensions.
    NotPure { facet_dims: Vec<usize> },
    Pure {
        dim: usize,
        facet_count: usize,
        /// facets-per-ridge -> number of ridges with that incidence count
        ridge_histogram: BTreeMap<usize, usize>,
        /// every ridge lies in one or two facets
        pseudomanifold: bool,
        /// some ridge lies in exactly one facet
        with_boundary: bool,
    },
}

pub fn classify_pseudomanifold(k: &SimplicialComplex) -> PseudomanifoldReport {
    let facets = k.facets();
    if facets.is_empty() {
        return PseudomanifoldReport::Degenerate;
    }
    let mut dims: Vec<usize> = facets.iter().map(|f| f.len() - 1).collect();
    dims.sort_unstable();
    dims.dedup();
    if dims.len() > 1 {
        return PseudomanifoldReport::NotPure { facet_dims: dims };
    }
    let dim = dims[0];
    // Count, for every ridge, the facets containing it. In a pure complex
    // each (dim-1)-face is a ridge of at least one facet.
    let mut incidence: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
    for facet in &facets {
        if dim == 0 {
            // The only ridge is the empty face, contained in every facet.
            *incidence.entry(Vec::new()).or_insert(0) += 1;
            continue;
        }
        for skip in 0..facet.len() {
            let ridge: Vec<u32> = facet
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, &v)| v)
                .collect();
            *incidence.entry(ridge).or_insert(0) += 1;
        }
    }
    let mut ridge_histogram: BTreeMap<usize, usize> = BTreeMap::new();
    for count in incidence.values() {
        *ridge_histogram.entry(*count).or_insert(0) += 1;
    }
    let pseudomanifold = incidence.values().all(|&c| c == 1 || c == 2);
    let with_boundary = incidence.values().any(|&c| c == 1);
    PseudomanifoldReport::Pure {
        dim,
        facet_count: facets.len(),
        ridge_histogram,
        pseudomanifold,
        with_boundary,
    }
}

/// Combinatorial Alexander dual of `k` inside the given ground vertex set:
/// `I` is a face iff the complement of `I` in the ground set is not a face
/// of `k`. The full simplex and its boundary are rejected.
pub fn alexander_dual(
    k: &SimplicialComplex,
    ground: &[String],
) -> Result<SimplicialComplex, ComplexError> {
    let m = ground.len();
    let budget = crate::max_faces_budget();
    if m >= usize::BITS as usize - 1 || (1usize << m) > budget.saturating_mul(16) {
        return Err(ComplexError::FaceBudget(budget));
    }
    let position: BTreeMap<&str, u32> = ground
        .iter()
        .enumerate()
        .map(|(i, l)| (l.as_str(), i as u32))
        .collect();
    if position.len() != m {
        return Err(ComplexError::GroundMismatch);
    }
    // Lift the faces of k into ground coordinates.
    let mut lifted: HashSet<u64> = HashSet::new();
    for face in k.faces() {
        let mut mask = 0u64;
        for &v in face {
            let Some(&p) = position.get(k.label(v)) else {
                return Err(ComplexError::GroundMismatch);
            };
            mask |= 1 << p;
        }
        lifted.insert(mask);
    }
    let total = 1u64 << m;
    if lifted.len() as u64 == total - 1 {
        return Err(ComplexError::AlexanderDegenerate); // full simplex
    }
    if lifted.len() as u64 == total - 2 && !lifted.contains(&(total - 1)) {
        return Err(ComplexError::AlexanderDegenerate); // boundary of simplex
    }
    let mut dual = SimplicialComplex::empty(ground.to_vec());
    let full = total - 1;
    for mask in 1..total {
        let complement = full & !mask;
        let complement_is_face = complement == 0 || lifted.contains(&complement);
        if !complement_is_face {
            let face: Vec<u32> = (0..m as u32).filter(|&v| mask >> v & 1 == 1).collect();
            dual.faces.insert(face);
        }
    }
    Ok(dual)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(n: usize) -> Vec<String> {
        (1..=n).map(|i| i.to_string()).collect()
    }

    #[test]
    fn full_triangle_has_seven_faces() {
        let k = SimplicialComplex::from_facets(labels(3), &[vec![0, 1, 2]]).unwrap();
        assert_eq!(k.num_faces(), 7);
        assert_eq!(k.dim(), Some(2));
    }

    #[test]
    fn triangle_boundary() {
        let k =
            SimplicialComplex::from_facets(labels(3), &[vec![0, 1], vec![1, 2], vec![0, 2]])
                .unwrap();
        assert_eq!(k.num_faces(), 6);
        assert_eq!(k.dim(), Some(1));
        assert_eq!(k.facets().len(), 3);
    }

    #[test]
    fn duplicate_vertex_rejected() {
        assert!(matches!(
            SimplicialComplex::from_facets(labels(3), &[vec![0, 0, 1]]),
            Err(ComplexError::DuplicateVertex)
        ));
    }

    #[test]
    fn hereditary_enumeration_matches_closure() {
        // Faces = subsets of {0,1,2,3} with at most 2 elements.
        let pred = |f: &[u32]| f.len() <= 2;
        let k = SimplicialComplex::enumerate_hereditary(labels(4), pred, 1 << 10).unwrap();
        assert_eq!(k.num_faces(), 4 + 6);
    }

    #[test]
    fn classify_examples() {
        let tetra_boundary = SimplicialComplex::from_facets(
            labels(4),
            &[vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]],
        )
        .unwrap();
        match classify_pseudomanifold(&tetra_boundary) {
            PseudomanifoldReport::Pure {
                dim,
                facet_count,
                pseudomanifold,
                with_boundary,
                ..
            } => {
                assert_eq!((dim, facet_count), (2, 4));
                assert!(pseudomanifold && !with_boundary);
            }
            other => panic!("unexpected report {other:?}"),
        }

        let path = SimplicialComplex::from_facets(labels(3), &[vec![0, 1], vec![1, 2]]).unwrap();
        match classify_pseudomanifold(&path) {
            PseudomanifoldReport::Pure {
                dim,
                pseudomanifold,
                with_boundary,
                ..
            } => {
                assert_eq!(dim, 1);
                assert!(pseudomanifold && with_boundary);
            }
            other => panic!("unexpected report {other:?}"),
        }
    }

    #[test]
    fn alexander_dual_rejects_degenerate_inputs() {
        let full = SimplicialComplex::from_facets(labels(3), &[vec![0, 1, 2]]).unwrap();
        assert!(matches!(
            alexander_dual(&full, &labels(3)),
            Err(ComplexError::AlexanderDegenerate)
        ));
        let boundary =
            SimplicialComplex::from_facets(labels(3), &[vec![0, 1], vec![1, 2], vec![0, 2]])
                .unwrap();
        assert!(matches!(
            alexander_dual(&boundary, &labels(3)),
            Err(ComplexError::AlexanderDegenerate)
        ));
    }

    #[test]
    fn alexander_dual_is_an_involution() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let m = rng.gen_range(3..=6);
            let ground = labels(m);
            // Random downward-closed family from random generating sets.
            let mut facets = Vec::new();
            for _ in 0..rng.gen_range(1..=4) {
                let size = rng.gen_range(1..=m.min(3));
                let mut f: Vec<usize> = (0..m).collect();
                for i in (1..f.len()).rev() {
                    f.swap(i, rng.gen_range(0..=i));
                }
                f.truncate(size);
                facets.push(f);
            }
            let k = SimplicialComplex::from_facets(ground.clone(), &facets).unwrap();
            let Ok(dual) = alexander_dual(&k, &ground) else {
                continue; // degenerate draw
            };
            let Ok(double) = alexander_dual(&dual, &ground) else {
                continue;
            };
            let k_masks: std::collections::BTreeSet<Vec<u32>> = k.faces().cloned().collect();
            let d_masks: std::collections::BTreeSet<Vec<u32>> = double.faces().cloned().collect();
            assert_eq!(k_masks, d_masks, "double dual differs from original");
        }
    }

    #[test]
    fn alexander_dual_worked_examples() {
        use crate::complex::reduced_homology;
        // Two isolated points inside a 4-element ground set: reduced Betti
        // numbers satisfy the degree swap j <-> m - 3 - j with m = 4.
        let k = SimplicialComplex::from_facets(labels(4), &[vec![0], vec![1]]).unwrap();
        let dual = alexander_dual(&k, &labels(4)).unwrap();
        let h_k = reduced_homology(&k);
        let h_dual = reduced_homology(&dual);
        for j in 0..4usize {
            let partner = 1i64 - j as i64; // m - 3 - j
            let expected = if partner < 0 { 0 } else { h_k.betti(partner as usize) };
            assert_eq!(h_dual.betti(j), expected, "degree {j}");
        }
        // The circle on three of five ground vertices pairs degrees j and 2 - j.
        let k = SimplicialComplex::from_facets(
            labels(5),
            &[vec![0, 1], vec![1, 2], vec![0, 2]],
        )
        .unwrap();
        let dual = alexander_dual(&k, &labels(5)).unwrap();
        let h_k = reduced_homology(&k);
        let h_dual = reduced_homology(&dual);
        for j in 0..5usize {
            let partner = 2i64 - j as i64;
            let expected = if partner < 0 { 0 } else { h_k.betti(partner as usize) };
            assert_eq!(h_dual.betti(j), expected, "degree {j}");
        }
    }

    #[test]
    fn json_round_trip() {
        let k =
            SimplicialComplex::from_facets(labels(3), &[vec![0, 1], vec![1, 2], vec![0, 2]])
                .unwrap();
        let j = k.to_json();
        let back = SimplicialComplex::from_json(&j).unwrap();
        assert!(k.face_sets_equal(&back));
    }
}
