//! Central hyperplane arrangements: intersection lattices, Möbius
//! invariants, the dictionary with antipodal spherical configurations, and
//! the fiber checks for the comparison map onto the ordered sum.

use crate::complex::{ComplexError, FinitePoset, SimplicialComplex};
use crate::exact::{parse_rational, QMatrix, QVector, Subspace};
use crate::sphere::{self, Configuration, SphereError};
use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ArrangementError {
    #[error("normals must be nonzero")]
    ZeroNormal,
    #[error("normals have inconsistent dimensions")]
    DimensionMismatch,
    #[error("normals do not span the ambient space")]
    NotSpanning,
    #[error("configuration is not antipodal")]
    NotAntipodal,
    #[error("configuration is not ample")]
    NotAmple,
    #[error("invalid arrangement JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Sphere(#[from] SphereError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// A central hyperplane arrangement, each hyperplane given by a nonzero
/// normal vector; repetitions are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrangement {
    dim: usize,
    normals: Vec<QVector>,
}

#[derive(Serialize, Deserialize)]
struct ArrangementJson {
    dim: usize,
    normals: Vec<Vec<String>>,
}

impl Arrangement {
    pub fn new(dim: usize, normals: Vec<QVector>) -> Result<Self, ArrangementError> {
        if normals.iter().any(|n| n.dim() != dim) {
            return Err(ArrangementError::DimensionMismatch);
        }
        if normals.iter().any(QVector::is_zero) {
            return Err(ArrangementError::ZeroNormal);
        }
        Ok(Arrangement { dim, normals })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.normals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.normals.is_empty()
    }

    pub fn normals(&self) -> &[QVector] {
        &self.normals
    }

    pub fn spans(&self) -> bool {
        QMatrix::from_rows(self.normals.clone())
            .expect("normals are rectangular")
            .rank()
            == self.dim
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(ArrangementJson {
            dim: self.dim,
            normals: self
                .normals
                .iter()
                .map(|p| p.iter().map(crate::exact::format_rational).collect())
                .collect(),
        })
        .expect("arrangement serialises")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self, ArrangementError> {
        let parsed: ArrangementJson = serde_json::from_value(value.clone())
            .map_err(|e| ArrangementError::Json(e.to_string()))?;
        let mut normals = Vec::with_capacity(parsed.normals.len());
        for entries in &parsed.normals {
            if entries.len() != parsed.dim {
                return Err(ArrangementError::DimensionMismatch);
            }
            let mut coords = Vec::with_capacity(entries.len());
            for s in entries {
                coords.push(parse_rational(s).map_err(|e| ArrangementError::Json(e.to_string()))?);
            }
            normals.push(QVector::new(coords));
        }
        Arrangement::new(parsed.dim, normals)
    }
}

/// The essential braid arrangement on `n` letters: the hyperplanes
/// `x_i = x_j` rewritten in coordinates of the sum-zero subspace, so the
/// normals span the ambient space of dimension `n - 1`.
pub fn braid_arrangement(n: usize) -> Arrangement {
    assert!(n >= 2);
    let mut raw = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            let mut v = QVector::zeros(n);
            v.set(j - 1, crate::exact::rat_int(1));
            v.set(i - 1, crate::exact::rat_int(-1));
            raw.push(v);
        }
    }
    let c = Configuration::with_default_labels(raw).expect("braid normals nonzero");
    let e = c.essentialize();
    Arrangement::new(e.dim(), e.points().to_vec()).expect("essential normals valid")
}

/// All intersections of hyperplanes of the arrangement, ordered by
/// inclusion, with Möbius values from the bottom element. Every element is
/// canonically identified both by the saturated set of hyperplanes
/// containing it and by its subspace in reduced echelon form.
#[derive(Debug, Clone)]
pub struct IntersectionLattice {
    ambient: usize,
    /// flats as subspaces, sorted by (dimension, hyperplane set)
    elements: Vec<Subspace>,
    /// index sets of hyperplanes containing each flat (saturated)
    hyperplanes: Vec<Vec<usize>>,
    leq: Vec<Vec<bool>>,
    mobius: Vec<BigInt>,
    zero: usize,
    one: usize,
}

impl IntersectionLattice {
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn element(&self, i: usize) -> &Subspace {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[Subspace] {
        &self.elements
    }

    pub fn hyperplanes_through(&self, i: usize) -> &[usize] {
        &self.hyperplanes[i]
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    pub fn mobius_from_bottom(&self, i: usize) -> &BigInt {
        &self.mobius[i]
    }

    pub fn bottom(&self) -> usize {
        self.zero
    }

    pub fn top(&self) -> usize {
        self.one
    }

    /// Covering pairs of the inclusion order.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j && self.leq[i][j] {
                    let covered = (0..n)
                        .all(|k| k == i || k == j || !(self.leq[i][k] && self.leq[k][j]));
                    if covered {
                        edges.push((i, j));
                    }
                }
            }
        }
        edges
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "ambient_dim": self.ambient,
            "elements": self
                .elements
                .iter()
                .enumerate()
                .map(|(i, s)| {
                    serde_json::json!({
                        "index": i,
                        "dim": s.dim(),
                        "hyperplanes": self.hyperplanes[i],
                        "mobius": self.mobius[i].to_string(),
                    })
                })
                .collect::<Vec<_>>(),
            "hasse": self.hasse_edges(),
        })
    }
}

/// Build the intersection lattice of a spanning arrangement.
pub fn intersection_lattice(a: &Arrangement) -> Result<IntersectionLattice, ArrangementError> {
    if !a.spans() {
        return Err(ArrangementError::NotSpanning);
    }
    let d = a.dim;
    let r = a.len();
    // A flat is canonically the saturated index set of hyperplanes that
    // contain it; its subspace is the kernel of those normals.
    let subspace_of = |indices: &[usize]| -> Subspace {
        if indices.is_empty() {
            return Subspace::full(d);
        }
        let rows: Vec<QVector> = indices.iter().map(|&i| a.normals[i].clone()).collect();
        let m = QMatrix::from_rows(rows).expect("normal rows rectangular");
        let kernel = m.nullspace();
        Subspace::span(d, kernel.rows())
    };
    let saturate = |flat: &Subspace| -> Vec<usize> {
        (0..r)
            .filter(|&i| {
                flat.basis()
                    .rows()
                    .iter()
                    .all(|b| b.dot(&a.normals[i]).is_zero())
            })
            .collect()
    };

    let mut masks: Vec<Vec<usize>> = Vec::new();
    let mut flats: Vec<Subspace> = Vec::new();
    let top_mask = saturate(&Subspace::full(d));
    masks.push(top_mask);
    flats.push(Subspace::full(d));
    let mut frontier = vec![0usize];
    while let Some(idx) = frontier.pop() {
        let current = masks[idx].clone();
        for i in 0..r {
            if current.contains(&i) {
                continue;
            }
            let mut extended = current.clone();
            extended.push(i);
            let flat = subspace_of(&extended);
            let saturated = saturate(&flat);
            if !masks.contains(&saturated) {
                masks.push(saturated);
                flats.push(flat);
                frontier.push(masks.len() - 1);
            }
        }
    }

    // Sort by decreasing codimension is not needed; by increasing dim for
    // the Möbius recursion from the bottom.
    let mut order: Vec<usize> = (0..flats.len()).collect();
    order.sort_by_key(|&i| (flats[i].dim(), masks[i].clone()));
    let elements: Vec<Subspace> = order.iter().map(|&i| flats[i].clone()).collect();
    let hyperplanes: Vec<Vec<usize>> = order.iter().map(|&i| masks[i].clone()).collect();

    let n = elements.len();
    let leq: Vec<Vec<bool>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    // X <= Y iff X is contained in Y iff Y's hyperplane set
                    // is contained in X's.
                    hyperplanes[j].iter().all(|h| hyperplanes[i].contains(h))
                })
                .collect()
        })
        .collect();
    let zero = (0..n)
        .find(|&i| elements[i].dim() == 0)
        .expect("spanning arrangement has bottom {0}");
    let one = (0..n)
        .find(|&i| elements[i].dim() == d)
        .expect("ambient space is the top");

    // mu(0, x) by the defining recursion, in order of increasing dimension.
    let mut mobius: Vec<BigInt> = vec![BigInt::zero(); n];
    for i in 0..n {
        if i == zero {
            mobius[i] = BigInt::from(1);
            continue;
        }
        let mut acc = BigInt::zero();
        for j in 0..n {
            if j != i && leq[j][i] {
                acc += &mobius[j];
            }
        }
        mobius[i] = -acc;
    }
    // Defining identity: the mu-values over each lower interval sum to zero.
    for i in 0..n {
        if i != zero {
            let total: BigInt = (0..n).filter(|&j| leq[j][i]).map(|j| mobius[j].clone()).sum();
            assert!(total.is_zero(), "Moebius recursion identity violated");
        }
    }

    Ok(IntersectionLattice {
        ambient: d,
        elements,
        hyperplanes,
        leq,
        mobius,
        zero,
        one,
    })
}

/// The Möbius invariant: absolute value of mu over the full interval, with
/// the signed value retained. For a rank-d geometric lattice the sign is
/// (-1)^d, which is asserted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MobiusInvariant {
    pub signed: BigInt,
    pub absolute: BigInt,
}

pub fn mobius_invariant(l: &IntersectionLattice) -> MobiusInvariant {
    let signed = l.mobius[l.one].clone();
    let expected_sign_negative = l.ambient % 2 == 1;
    assert_eq!(
        signed < BigInt::zero(),
        expected_sign_negative && !signed.is_zero(),
        "Moebius invariant sign differs from (-1)^dim"
    );
    let absolute = if signed < BigInt::zero() {
        -signed.clone()
    } else {
        signed.clone()
    };
    MobiusInvariant { signed, absolute }
}

/// The antipodal spherical configuration of an arrangement: both unit-free
/// normals of every hyperplane, labelled `i` and `-i`.
pub fn config_from_arrangement(a: &Arrangement) -> Configuration {
    let mut points = Vec::with_capacity(2 * a.len());
    let mut labels = Vec::with_capacity(2 * a.len());
    for (i, n) in a.normals.iter().enumerate() {
        points.push(n.clone());
        labels.push(format!("{}", i + 1));
        points.push(n.neg());
        labels.push(format!("-{}", i + 1));
    }
    Configuration::new(points, labels).expect("arrangement normals are nonzero")
}

/// The arrangement induced by an antipodal ample configuration: one
/// hyperplane per antipodal ray pair, with multiplicity.
pub fn arrangement_from_config(c: &Configuration) -> Result<Arrangement, ArrangementError> {
    if !sphere::is_antipodal(c) {
        return Err(ArrangementError::NotAntipodal);
    }
    if !sphere::is_ample(c) {
        return Err(ArrangementError::NotAmple);
    }
    let e = c.essentialize();
    let mut counted: std::collections::BTreeMap<Vec<BigInt>, usize> = Default::default();
    for p in e.points() {
        let mut ray = p.primitive_ray();
        // orient each ray pair by its first nonzero coordinate
        let flip = ray
            .iter()
            .find(|v| !v.is_zero())
            .map(|v| v < &&BigInt::zero())
            .unwrap_or(false);
        if flip {
            ray = ray.iter().map(|v| -v).collect();
        }
        *counted.entry(ray).or_insert(0) += 1;
    }
    let mut normals = Vec::new();
    for (ray, count) in counted {
        assert!(count % 2 == 0, "antipodal configuration pairs its rays");
        let v = QVector::new(ray.into_iter().map(crate::exact::Rational::from_integer).collect());
        for _ in 0..count / 2 {
            normals.push(v.clone());
        }
    }
    Arrangement::new(e.dim(), normals)
}

/// The proper part of the dual lattice: orthogonal complements of the
/// proper flats, ordered by inclusion.
pub fn proper_dual_poset(l: &IntersectionLattice) -> FinitePoset {
    let (poset, _) = proper_dual_poset_with_flats(l);
    poset
}

/// As `proper_dual_poset`, also returning the complement subspaces aligned
/// with the poset elements.
pub fn proper_dual_poset_with_flats(l: &IntersectionLattice) -> (FinitePoset, Vec<Subspace>) {
    let proper: Vec<usize> = (0..l.len())
        .filter(|&i| i != l.bottom() && i != l.top())
        .collect();
    let flats: Vec<Subspace> = proper
        .iter()
        .map(|&i| l.elements[i].orthogonal_complement())
        .collect();
    let labels: Vec<String> = proper
        .iter()
        .enumerate()
        .map(|(k, &i)| format!("W{}(dim {})", k + 1, l.elements[i].dim()))
        .collect();
    let poset = FinitePoset::from_leq(labels, |i, j| flats[j].contains(&flats[i]))
        .expect("inclusion of subspaces is a partial order");
    (poset, flats)
}

/// Full diagnostic of the comparison map from the closed-hemisphere nerve
/// to the ordered sum of the open-hemisphere nerve and the proper dual
/// lattice: well-definedness of ridges, monotonicity, contractibility of
/// the simplex-type fibers, acyclicity of the flat-type fibers, and
/// equality of each flat fiber with its halfspace nerve.
#[derive(Debug, Clone)]
pub struct QuillenReport {
    pub faces_checked: usize,
    pub well_defined: bool,
    pub monotone: bool,
    pub simplex_fibers: usize,
    pub simplex_fibers_with_greatest: usize,
    pub flat_fibers: usize,
    pub flat_fibers_acyclic: usize,
    pub flat_fibers_matching_nerve: usize,
    pub failures: Vec<String>,
}

impl QuillenReport {
    pub fn all_pass(&self) -> bool {
        self.well_defined
            && self.monotone
            && self.simplex_fibers == self.simplex_fibers_with_greatest
            && self.flat_fibers == self.flat_fibers_acyclic
            && self.flat_fibers == self.flat_fibers_matching_nerve
            && self.failures.is_empty()
    }
}

pub fn quillen_map_check(c: &Configuration) -> Result<QuillenReport, ArrangementError> {
    if !sphere::is_antipodal(c) {
        return Err(ArrangementError::NotAntipodal);
    }
    if !sphere::is_ample(c) {
        return Err(ArrangementError::NotAmple);
    }
    let e = c.essentialize();
    let bstel = sphere::bstel_complex(&e)?;
    let stel = sphere::stel_complex(&e)?;
    let proper_flats = sphere::dual_lattice_flats(&e)?;
    let mut failures = Vec::new();

    // Ridges of all faces; the map sends open-hemisphere faces to
    // themselves and every other face to its ridge.
    let mut faces: Vec<Vec<u32>> = bstel.faces().cloned().collect();
    faces.sort_unstable_by_key(|f| (f.len(), f.clone()));
    let mut ridges: std::collections::HashMap<Vec<u32>, Subspace> = Default::default();
    let mut well_defined = true;
    for face in &faces {
        let idx: Vec<usize> = face.iter().map(|&v| v as usize).collect();
        let w = sphere::ridge(&e, &idx)?;
        if stel.contains(face) {
            if !w.is_zero() {
                well_defined = false;
                failures.push(format!("open-hemisphere face {face:?} has nonzero ridge"));
            }
        } else if w.is_zero() || w.is_full() || !proper_flats.contains(&w) {
            well_defined = false;
            failures.push(format!("face {face:?} has ridge outside the proper dual lattice"));
        }
        ridges.insert(face.clone(), w);
    }

    // Monotonicity on covering pairs: remove one vertex at a time.
    let mut monotone = true;
    for face in &faces {
        if face.len() < 2 {
            continue;
        }
        let w_face = &ridges[face];
        for skip in 0..face.len() {
            let sub: Vec<u32> = face
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != skip)
                .map(|(_, &v)| v)
                .collect();
            let w_sub = &ridges[&sub];
            let sub_in_stel = stel.contains(&sub);
            let face_in_stel = stel.contains(face);
            let ok = match (sub_in_stel, face_in_stel) {
                // inclusion of simplices, or simplex below any flat
                (true, _) => true,
                // a non-simplex face cannot sit below a simplex one
                (false, true) => false,
                (false, false) => w_face.contains(w_sub),
            };
            if !ok {
                monotone = false;
                failures.push(format!("map not monotone on {sub:?} <= {face:?}"));
            }
        }
    }

    // Simplex-type fibers: everything below a fixed open-hemisphere face;
    // that poset has the face itself as greatest element.
    let mut simplex_fibers = 0;
    let mut simplex_fibers_with_greatest = 0;
    for face in stel.faces() {
        simplex_fibers += 1;
        let below: Vec<&Vec<u32>> = faces
            .iter()
            .filter(|g| g.iter().all(|v| face.binary_search(v).is_ok()))
            .collect();
        let has_greatest = below
            .iter()
            .any(|g| *g == face)
            && below.iter().all(|g| g.len() <= face.len());
        if has_greatest {
            simplex_fibers_with_greatest += 1;
        } else {
            failures.push(format!("fiber below simplex {face:?} lacks a greatest element"));
        }
    }

    // Flat-type fibers: acyclic and equal to the halfspace nerve. The
    // fibers reuse the ridge cache; the nerve side recomputes everything
    // from halfspace feasibility, keeping the comparison two-route.
    let mut flat_fibers = 0;
    let mut flat_fibers_acyclic = 0;
    let mut flat_fibers_matching_nerve = 0;
    for flat in &proper_flats {
        flat_fibers += 1;
        let mut fiber = SimplicialComplex::empty(bstel.labels().to_vec());
        for face in &faces {
            if flat.contains(&ridges[face]) {
                fiber.insert_face_unchecked(face.clone());
            }
        }
        let h = crate::complex::reduced_homology(&fiber);
        if h.is_acyclic() {
            flat_fibers_acyclic += 1;
        } else {
            failures.push(format!(
                "fiber of a dim-{} flat is not acyclic: {}",
                flat.dim(),
                h.describe()
            ));
        }
        let nerve = sphere::halfspace_nerve(&e, flat)?;
        if fiber.face_sets_equal(&nerve) {
            flat_fibers_matching_nerve += 1;
        } else {
            failures.push(format!(
                "fiber and halfspace nerve differ on a dim-{} flat",
                flat.dim()
            ));
        }
    }

    Ok(QuillenReport {
        faces_checked: faces.len(),
        well_defined,
        monotone,
        simplex_fibers,
        simplex_fibers_with_greatest,
        flat_fibers,
        flat_fibers_acyclic,
        flat_fibers_matching_nerve,
        failures,
    })
}

/// Seeded random spanning arrangement with small integer normals, for the
/// randomized verification suites.
pub fn random_spanning_arrangement(
    rng: &mut impl rand::Rng,
    dim: usize,
    hyperplanes: usize,
) -> Arrangement {
    loop {
        let normals: Vec<QVector> = (0..hyperplanes)
            .map(|_| loop {
                let v: Vec<i64> = (0..dim).map(|_| rng.gen_range(-3..=3)).collect();
                if v.iter().any(|&x| x != 0) {
                    break QVector::from_ints(&v);
                }
            })
            .collect();
        let a = Arrangement::new(dim, normals).expect("nonzero rows");
        if a.spans() {
            return a;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::reduced_homology;
    use crate::digraph;

    #[test]
    fn boolean_lattice_of_the_coordinate_cross() {
        let a = Arrangement::new(
            2,
            vec![QVector::from_ints(&[1, 0]), QVector::from_ints(&[0, 1])],
        )
        .unwrap();
        let l = intersection_lattice(&a).unwrap();
        assert_eq!(l.len(), 4);
        let m = mobius_invariant(&l);
        assert_eq!(m.absolute, BigInt::from(1));
        assert_eq!(m.signed, BigInt::from(1)); // (-1)^2
    }

    #[test]
    fn braid3_lattice_and_mobius() {
        let a = braid_arrangement(3);
        assert_eq!(a.dim(), 2);
        assert_eq!(a.len(), 3);
        let l = intersection_lattice(&a).unwrap();
        // {0}, three lines, the plane.
        assert_eq!(l.len(), 5);
        let dims: Vec<usize> = l.elements().iter().map(Subspace::dim).collect();
        assert_eq!(dims.iter().filter(|&&d| d == 1).count(), 3);
        let m = mobius_invariant(&l);
        assert_eq!(m.absolute, BigInt::from(2));
        assert_eq!(m.signed, BigInt::from(2)); // (-1)^2 * 2
    }

    #[test]
    fn hasse_edges_of_the_boolean_plane() {
        let a = Arrangement::new(
            2,
            vec![QVector::from_ints(&[1, 0]), QVector::from_ints(&[0, 1])],
        )
        .unwrap();
        let l = intersection_lattice(&a).unwrap();
        let hasse = l.hasse_edges();
        // 0 covered by both lines, both lines covered by the plane.
        assert_eq!(hasse.len(), 4);
        for (lo, hi) in hasse {
            assert!(l.leq(lo, hi));
            assert_eq!(l.element(lo).dim() + 1, l.element(hi).dim());
        }
    }

    #[test]
    fn braid_mobius_is_factorial() {
        for n in 3..=6 {
            let l = intersection_lattice(&braid_arrangement(n)).unwrap();
            let expected: u64 = (1..n as u64).product();
            assert_eq!(mobius_invariant(&l).absolute, BigInt::from(expected));
        }
    }

    #[test]
    fn generic_lines_mobius() {
        // Three generic lines in the plane: mu = 2 by direct recursion on
        // the five-element lattice.
        let a = Arrangement::new(
            2,
            vec![
                QVector::from_ints(&[1, 0]),
                QVector::from_ints(&[0, 1]),
                QVector::from_ints(&[1, 1]),
            ],
        )
        .unwrap();
        let l = intersection_lattice(&a).unwrap();
        assert_eq!(l.len(), 5);
        assert_eq!(mobius_invariant(&l).absolute, BigInt::from(2));
    }

    #[test]
    fn repeated_hyperplanes_collapse() {
        let once = Arrangement::new(1, vec![QVector::from_ints(&[1])]).unwrap();
        let thrice = Arrangement::new(
            1,
            vec![
                QVector::from_ints(&[1]),
                QVector::from_ints(&[2]),
                QVector::from_ints(&[-5]),
            ],
        )
        .unwrap();
        let l1 = intersection_lattice(&once).unwrap();
        let l3 = intersection_lattice(&thrice).unwrap();
        assert_eq!(l1.len(), 2);
        assert_eq!(l3.len(), 2);
        assert_eq!(
            mobius_invariant(&l1).absolute,
            mobius_invariant(&l3).absolute
        );
    }

    #[test]
    fn non_spanning_rejected() {
        let a = Arrangement::new(
            2,
            vec![QVector::from_ints(&[1, 0]), QVector::from_ints(&[2, 0])],
        )
        .unwrap();
        assert!(matches!(
            intersection_lattice(&a),
            Err(ArrangementError::NotSpanning)
        ));
    }

    #[test]
    fn configuration_round_trip() {
        let a = braid_arrangement(3);
        let c = config_from_arrangement(&a);
        assert_eq!(c.len(), 6);
        assert!(sphere::is_antipodal(&c));
        assert!(sphere::is_ample(&c));
        let back = arrangement_from_config(&c).unwrap();
        assert_eq!(back.len(), a.len());
        let l1 = intersection_lattice(&a).unwrap();
        let l2 = intersection_lattice(&back).unwrap();
        assert_eq!(l1.len(), l2.len());
        assert_eq!(
            mobius_invariant(&l1).absolute,
            mobius_invariant(&l2).absolute
        );
    }

    #[test]
    fn inverse_requires_antipodality() {
        let c = Configuration::with_default_labels(vec![
            QVector::from_ints(&[1, 0]),
            QVector::from_ints(&[0, 1]),
            QVector::from_ints(&[-1, -1]),
        ])
        .unwrap();
        assert!(matches!(
            arrangement_from_config(&c),
            Err(ArrangementError::NotAntipodal)
        ));
    }

    #[test]
    fn braid_config_matches_roots() {
        // The configuration of the braid arrangement is the root system up
        // to scaling and relabelling: same nerve complexes.
        let c = config_from_arrangement(&braid_arrangement(3)).essentialize();
        let stel = sphere::stel_complex(&c).unwrap();
        assert_eq!(stel.num_faces(), 24);
        let roots = digraph::root_system(3).essentialize();
        let stel_roots = sphere::stel_complex(&roots).unwrap();
        assert_eq!(stel.num_faces(), stel_roots.num_faces());
        let h1 = reduced_homology(&stel);
        let h2 = reduced_homology(&stel_roots);
        assert_eq!(h1.betti_vector(), h2.betti_vector());
    }

    #[test]
    fn dual_poset_of_braid3_is_an_antichain() {
        let l = intersection_lattice(&braid_arrangement(3)).unwrap();
        let p = proper_dual_poset(&l);
        assert_eq!(p.len(), 3);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(p.leq(i, j), i == j);
            }
        }
        let k = p.order_complex().unwrap();
        let h = reduced_homology(&k);
        assert_eq!(h.betti(0), 2); // = mu
    }

    #[test]
    fn dual_poset_of_boolean_plane() {
        let a = Arrangement::new(
            2,
            vec![QVector::from_ints(&[1, 0]), QVector::from_ints(&[0, 1])],
        )
        .unwrap();
        let l = intersection_lattice(&a).unwrap();
        let p = proper_dual_poset(&l);
        assert_eq!(p.len(), 2);
        assert!(!p.leq(0, 1) && !p.leq(1, 0));
    }

    #[test]
    fn bjorner_wedge_for_braid4() {
        let l = intersection_lattice(&braid_arrangement(4)).unwrap();
        let mu = mobius_invariant(&l).absolute;
        assert_eq!(mu, BigInt::from(6));
        let p = proper_dual_poset(&l);
        // Partition lattice of [4] minus ends: 15 - 2 elements.
        assert_eq!(p.len(), 13);
        let h = reduced_homology(&p.order_complex().unwrap());
        assert!(h.is_sphere_wedge(1, 6));
    }

    #[test]
    fn quillen_check_braid3() {
        let c = config_from_arrangement(&braid_arrangement(3));
        let report = quillen_map_check(&c).unwrap();
        assert!(report.all_pass(), "failures: {:?}", report.failures);
        assert_eq!(report.faces_checked, 45);
        assert_eq!(report.flat_fibers, 3);
    }

    #[test]
    fn quillen_rejects_non_antipodal() {
        let c = Configuration::with_default_labels(vec![
            QVector::from_ints(&[1, 0]),
            QVector::from_ints(&[-1, 0]),
            QVector::from_ints(&[0, 1]),
            QVector::from_ints(&[0, -1]),
            QVector::from_ints(&[1, 1]),
        ])
        .unwrap();
        assert!(matches!(
            quillen_map_check(&c),
            Err(ArrangementError::NotAntipodal)
        ));
    }

    #[test]
    fn json_round_trip() {
        let a = braid_arrangement(3);
        let back = Arrangement::from_json(&a.to_json()).unwrap();
        assert_eq!(a, back);
    }
}
