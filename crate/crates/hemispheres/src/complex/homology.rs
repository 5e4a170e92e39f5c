//! Reduced integral homology from Smith normal forms of boundary matrices.

use super::SimplicialComplex;
use crate::exact::{smith_normal_form, IntMatrix};
use num_bigint::BigInt;
use std::collections::HashMap;

/// Reduced Betti numbers and torsion coefficients per degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyProfile {
    betti: Vec<usize>,
    torsion: Vec<Vec<BigInt>>,
    euler: i64,
    /// True for the empty (but not void) complex, whose only reduced
    /// homology sits in degree -1.
    empty_complex: bool,
}

impl HomologyProfile {
    pub fn betti(&self, degree: usize) -> usize {
        self.betti.get(degree).copied().unwrap_or(0)
    }

    pub fn betti_vector(&self) -> &[usize] {
        &self.betti
    }

    pub fn torsion(&self, degree: usize) -> &[BigInt] {
        self.torsion.get(degree).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.iter().all(|t| t.is_empty())
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.euler
    }

    pub fn is_empty_complex(&self) -> bool {
        self.empty_complex
    }

    /// All reduced homology vanishes (in every degree, including -1).
    pub fn is_acyclic(&self) -> bool {
        !self.empty_complex && self.betti.iter().all(|&b| b == 0) && self.is_torsion_free()
    }

    /// Homology of a wedge of `count` spheres of the given dimension
    /// (`count` zero means acyclicity).
    pub fn is_sphere_wedge(&self, dim: usize, count: usize) -> bool {
        if !self.is_torsion_free() || self.empty_complex {
            return false;
        }
        self.betti
            .iter()
            .enumerate()
            .all(|(k, &b)| if k == dim { b == count } else { b == 0 })
            && (count == 0 || self.betti.len() > dim)
    }

    /// Compact rendering such as `b~1=1` or `0` for total acyclicity.
    pub fn describe(&self) -> String {
        if self.empty_complex {
            return "b~(-1)=1".to_string();
        }
        let parts: Vec<String> = self
            .betti
            .iter()
            .enumerate()
            .filter(|(_, &b)| b > 0)
            .map(|(k, &b)| format!("b~{k}={b}"))
            .chain(
                self.torsion
                    .iter()
                    .enumerate()
                    .filter(|(_, t)| !t.is_empty())
                    .map(|(k, t)| format!("t{k}={t:?}")),
            )
            .collect();
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(", ")
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let torsion: Vec<Vec<serde_json::Value>> = self
            .torsion
            .iter()
            .map(|t| {
                t.iter()
                    .map(|d| {
                        // Torsion coefficients fit in a machine word at this
                        // scale; keep a string fallback for safety.
                        u64::try_from(d).map_or_else(
                            |_| serde_json::Value::String(d.to_string()),
                            serde_json::Value::from,
                        )
                    })
                    .collect()
            })
            .collect();
        serde_json::json!({
            "betti": self.betti,
            "torsion": torsion,
            "euler": self.euler,
        })
    }
}

/// Boundary matrix from degree `k` faces to degree `k-1` faces, with signs
/// from the fixed global vertex order.
fn boundary_matrix(lower: &[Vec<u32>], upper: &[Vec<u32>]) -> IntMatrix {
    let index: HashMap<&[u32], usize> = lower
        .iter()
        .enumerate()
        .map(|(i, f)| (f.as_slice(), i))
        .collect();
    let mut triplets = Vec::with_capacity(upper.len() * (lower.first().map_or(1, |f| f.len() + 1)));
    for (col, face) in upper.iter().enumerate() {
        let mut sub = Vec::with_capacity(face.len() - 1);
        for skip in 0..face.len() {
            sub.clear();
            sub.extend(
                face.iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &v)| v),
            );
            let row = *index
                .get(sub.as_slice())
                .expect("complex is downward closed");
            let sign = if skip % 2 == 0 { 1 } else { -1 };
            triplets.push((row, col, BigInt::from(sign)));
        }
    }
    IntMatrix::from_triplets(lower.len(), upper.len(), triplets)
}

/// Check that consecutive boundary maps compose to zero.
fn boundaries_compose_to_zero(lower: &[Vec<u32>], mid: &[Vec<u32>], upper: &[Vec<u32>]) -> bool {
    let lower_index: HashMap<&[u32], usize> = lower
        .iter()
        .enumerate()
        .map(|(i, f)| (f.as_slice(), i))
        .collect();
    let mid_index: HashMap<&[u32], usize> = mid
        .iter()
        .enumerate()
        .map(|(i, f)| (f.as_slice(), i))
        .collect();
    let signed_faces = |face: &[u32]| -> Vec<(Vec<u32>, i64)> {
        (0..face.len())
            .map(|skip| {
                let sub: Vec<u32> = face
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &v)| v)
                    .collect();
                (sub, if skip % 2 == 0 { 1 } else { -1 })
            })
            .collect()
    };
    for face in upper {
        let mut acc: HashMap<usize, i64> = HashMap::new();
        for (mid_face, s1) in signed_faces(face) {
            debug_assert!(mid_index.contains_key(mid_face.as_slice()));
            for (low_face, s2) in signed_faces(&mid_face) {
                let row = lower_index[low_face.as_slice()];
                *acc.entry(row).or_insert(0) += s1 * s2;
            }
        }
        if acc.values().any(|&v| v != 0) {
            return false;
        }
    }
    true
}

/// Reduced homology over the integers in every degree.
pub fn reduced_homology(k: &SimplicialComplex) -> HomologyProfile {
    if k.is_void() {
        return HomologyProfile {
            betti: Vec::new(),
            torsion: Vec::new(),
            euler: 0,
            empty_complex: false,
        };
    }
    let levels = k.faces_by_dim();
    if levels.is_empty() {
        return HomologyProfile {
            betti: Vec::new(),
            torsion: Vec::new(),
            euler: 0,
            empty_complex: true,
        };
    }
    let dim = levels.len() - 1;

    // ranks[k] = rank of the boundary map from degree k; degree 0 maps onto
    // the (-1)-degree augmentation, so its rank is one.
    let mut ranks = vec![0usize; dim + 2];
    let mut torsion: Vec<Vec<BigInt>> = vec![Vec::new(); dim + 1];
    ranks[0] = 1;
    for deg in 1..=dim {
        let snf = smith_normal_form(&boundary_matrix(&levels[deg - 1], &levels[deg]));
        ranks[deg] = snf.rank;
        let nontrivial = snf.nontrivial_factors();
        if !nontrivial.is_empty() {
            torsion[deg - 1] = nontrivial;
        }
        if deg >= 2 {
            assert!(
                boundaries_compose_to_zero(&levels[deg - 2], &levels[deg - 1], &levels[deg]),
                "boundary maps fail to compose to zero in degree {deg}"
            );
        }
    }

    let mut betti = Vec::with_capacity(dim + 1);
    for deg in 0..=dim {
        let faces = levels[deg].len();
        let b = faces - ranks[deg] - ranks[deg + 1];
        betti.push(b);
    }

    let euler: i64 = levels
        .iter()
        .enumerate()
        .map(|(deg, faces)| {
            let f = faces.len() as i64;
            if deg % 2 == 0 {
                f
            } else {
                -f
            }
        })
        .sum();
    let alt_betti: i64 = betti
        .iter()
        .enumerate()
        .map(|(deg, &b)| if deg % 2 == 0 { b as i64 } else { -(b as i64) })
        .sum();
    assert_eq!(
        euler - 1,
        alt_betti,
        "Euler characteristic disagrees with Betti numbers"
    );

    HomologyProfile {
        betti,
        torsion,
        euler,
        empty_complex: false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::SimplicialComplex;

    fn labels(n: usize) -> Vec<String> {
        (1..=n).map(|i| i.to_string()).collect()
    }

    #[test]
    fn circle_has_first_betti_one() {
        let k =
            SimplicialComplex::from_facets(labels(3), &[vec![0, 1], vec![1, 2], vec![0, 2]])
                .unwrap();
        let h = reduced_homology(&k);
        assert_eq!(h.betti(0), 0);
        assert_eq!(h.betti(1), 1);
        assert!(h.is_sphere_wedge(1, 1));
    }

    #[test]
    fn cone_is_acyclic() {
        let k = SimplicialComplex::from_facets(labels(3), &[vec![0, 1, 2]]).unwrap();
        assert!(reduced_homology(&k).is_acyclic());
    }

    #[test]
    fn three_isolated_points() {
        let k = SimplicialComplex::from_facets(labels(3), &[vec![0], vec![1], vec![2]]).unwrap();
        let h = reduced_homology(&k);
        assert_eq!(h.betti(0), 2);
        assert_eq!(h.euler_characteristic(), 3);
    }

    #[test]
    fn two_sphere_from_tetrahedron_boundary() {
        let k = SimplicialComplex::from_facets(
            labels(4),
            &[vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]],
        )
        .unwrap();
        assert!(reduced_homology(&k).is_sphere_wedge(2, 1));
    }

    #[test]
    fn projective_plane_torsion() {
        // Minimal 6-vertex triangulation of the real projective plane
        // (hemi-icosahedron): 15 edges, every edge in exactly two triangles.
        let facets: Vec<Vec<usize>> = vec![
            vec![0, 1, 2],
            vec![0, 2, 3],
            vec![0, 3, 4],
            vec![0, 4, 5],
            vec![0, 5, 1],
            vec![1, 2, 4],
            vec![2, 3, 5],
            vec![3, 4, 1],
            vec![4, 5, 2],
            vec![5, 1, 3],
        ];
        let k = SimplicialComplex::from_facets(labels(6), &facets).unwrap();
        let h = reduced_homology(&k);
        assert_eq!(h.betti_vector(), &[0, 0, 0]);
        assert_eq!(h.torsion(1), &[num_bigint::BigInt::from(2)]);
        assert!(!h.is_torsion_free());
    }

    #[test]
    fn empty_and_void_complexes() {
        let empty = SimplicialComplex::empty(Vec::new());
        let h = reduced_homology(&empty);
        assert!(h.is_empty_complex());
        assert!(!h.is_acyclic());
        let void = SimplicialComplex::void();
        let hv = reduced_homology(&void);
        assert!(!hv.is_empty_complex());
        assert!(hv.is_acyclic());
    }
}
