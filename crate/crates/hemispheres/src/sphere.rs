//! Spherical point configurations and the nerves of their hemisphere
//! coverings.
//!
//! Points are kept as exact rational vectors and never normalised: every
//! predicate here depends only on the ray through each point, so "on the
//! sphere" is a conceptual statement, not a numerical one. The open and
//! closed hemisphere tests are decided through the cone generated by the
//! selected points: a set of points lies in an open hemisphere iff its cone
//! is strictly convex (equivalently, the origin is not in the convex hull),
//! and in a closed hemisphere iff its cone is not the whole ambient space.

use crate::complex::{ComplexError, SimplicialComplex};
use crate::exact::{
    cone_contains, parse_rational, zero_in_convex_hull, LinearSystem, QMatrix, QVector, Rational,
    Subspace,
};
use num_traits::One;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SphereError {
    #[error("configuration points must be nonzero")]
    ZeroPoint,
    #[error("points have inconsistent dimensions")]
    DimensionMismatch,
    #[error("labels must be distinct and match the number of points")]
    BadLabels,
    #[error("operation requires a spanning configuration; essentialize first")]
    NotSpanning,
    #[error("{0} points exceed the enumeration guard of {1}")]
    TooManyPoints(usize, usize),
    #[error("flat is not a proper element of the dual intersection lattice")]
    FlatNotInLattice,
    #[error("index {0} is out of range")]
    IndexRange(usize),
    #[error("invalid configuration JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// Enumeration guard for nerve constructions, unless HEMI_MAX_FACES is set.
pub const MAX_ENUMERATION_POINTS: usize = 22;

/// A finite multiset of nonzero rational vectors, viewed as rays.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    dim: usize,
    points: Vec<QVector>,
    labels: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct ConfigurationJson {
    dim: usize,
    points: Vec<Vec<String>>,
    #[serde(default)]
    labels: Vec<String>,
}

impl Configuration {
    pub fn new(points: Vec<QVector>, labels: Vec<String>) -> Result<Self, SphereError> {
        let Some(first) = points.first() else {
            return Err(SphereError::DimensionMismatch);
        };
        let dim = first.dim();
        if points.iter().any(|p| p.dim() != dim) {
            return Err(SphereError::DimensionMismatch);
        }
        if points.iter().any(|p| p.is_zero()) {
            return Err(SphereError::ZeroPoint);
        }
        if labels.len() != points.len() {
            return Err(SphereError::BadLabels);
        }
        {
            let mut sorted = labels.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != labels.len() {
                return Err(SphereError::BadLabels);
            }
        }
        Ok(Configuration { dim, points, labels })
    }

    /// Points labelled `1..=m`.
    pub fn with_default_labels(points: Vec<QVector>) -> Result<Self, SphereError> {
        let labels = (1..=points.len()).map(|i| i.to_string()).collect();
        Self::new(points, labels)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, i: usize) -> &QVector {
        &self.points[i]
    }

    pub fn points(&self) -> &[QVector] {
        &self.points
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Replace a point by a positive rational multiple of itself; predicates
    /// must be unaffected (rays are what matters).
    pub fn scale_point(&self, i: usize, factor: &Rational) -> Configuration {
        assert!(factor > &Rational::from_integer(0.into()));
        let mut points = self.points.clone();
        points[i] = points[i].scale(factor);
        Configuration {
            dim: self.dim,
            points,
            labels: self.labels.clone(),
        }
    }

    pub fn spans_ambient(&self) -> bool {
        let m = QMatrix::from_rows(self.points.clone()).expect("points are rectangular");
        m.rank() == self.dim
    }

    /// Rewrite the points in coordinates of a rational basis of their span,
    /// producing a configuration that spans its ambient space. All ray
    /// predicates are invariant under this change of coordinates.
    pub fn essentialize(&self) -> Configuration {
        let mut m = QMatrix::from_rows(self.points.clone()).expect("points are rectangular");
        let pivots = m.rref();
        let d = pivots.len();
        if d == self.dim {
            return self.clone();
        }
        // Rows of the RREF form a basis; a point's coordinates in that basis
        // can be read off at the pivot columns.
        let points: Vec<QVector> = self
            .points
            .iter()
            .map(|z| {
                let coords = QVector::new(pivots.iter().map(|&c| z.get(c).clone()).collect());
                debug_assert!({
                    let mut rebuilt = QVector::zeros(self.dim);
                    for (k, row) in m.rows()[..d].iter().enumerate() {
                        rebuilt = rebuilt.add(&row.scale(coords.get(k)));
                    }
                    rebuilt == *z
                });
                coords
            })
            .collect();
        Configuration {
            dim: d,
            points,
            labels: self.labels.clone(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(ConfigurationJson {
            dim: self.dim,
            points: self
                .points
                .iter()
                .map(|p| p.iter().map(crate::exact::format_rational).collect())
                .collect(),
            labels: self.labels.clone(),
        })
        .expect("configuration serialises")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self, SphereError> {
        let parsed: ConfigurationJson =
            serde_json::from_value(value.clone()).map_err(|e| SphereError::Json(e.to_string()))?;
        let mut points = Vec::with_capacity(parsed.points.len());
        for entries in &parsed.points {
            if entries.len() != parsed.dim {
                return Err(SphereError::DimensionMismatch);
            }
            let mut coords = Vec::with_capacity(entries.len());
            for s in entries {
                coords.push(parse_rational(s).map_err(|e| SphereError::Json(e.to_string()))?);
            }
            points.push(QVector::new(coords));
        }
        if parsed.labels.is_empty() {
            Self::with_default_labels(points)
        } else {
            Self::new(points, parsed.labels)
        }
    }
}

fn selected(c: &Configuration, index_set: &[usize]) -> Result<Vec<QVector>, SphereError> {
    index_set
        .iter()
        .map(|&i| c.points.get(i).cloned().ok_or(SphereError::IndexRange(i)))
        .collect()
}

/// Do the selected points lie in a single open hemisphere? Requires a
/// spanning configuration. The empty set does, by convention.
pub fn in_open_hemisphere(c: &Configuration, index_set: &[usize]) -> Result<bool, SphereError> {
    if !c.spans_ambient() {
        return Err(SphereError::NotSpanning);
    }
    if index_set.is_empty() {
        return Ok(true);
    }
    Ok(!zero_in_convex_hull(&selected(c, index_set)?))
}

/// Do the selected points lie in a single closed hemisphere? True iff the
/// cone they generate is not the whole ambient space, which is probed with
/// the 2d unit directions.
pub fn in_closed_hemisphere(c: &Configuration, index_set: &[usize]) -> Result<bool, SphereError> {
    if !c.spans_ambient() {
        return Err(SphereError::NotSpanning);
    }
    if index_set.is_empty() {
        return Ok(true);
    }
    let sel = selected(c, index_set)?;
    Ok(!cone_is_everything(&sel, c.dim))
}

fn cone_is_everything(generators: &[QVector], dim: usize) -> bool {
    for j in 0..dim {
        let e = QVector::unit(dim, j);
        if !cone_contains(generators, &e) || !cone_contains(generators, &e.neg()) {
            return false;
        }
    }
    true
}

/// The ridge of the cone generated by the selected points: the largest
/// linear subspace inside the cone. It is spanned by exactly those
/// generators whose negatives also lie in the cone.
pub fn ridge(c: &Configuration, index_set: &[usize]) -> Result<Subspace, SphereError> {
    if !c.spans_ambient() {
        return Err(SphereError::NotSpanning);
    }
    let sel = selected(c, index_set)?;
    let in_ridge: Vec<QVector> = sel
        .iter()
        .filter(|z| cone_contains(&sel, &z.neg()))
        .cloned()
        .collect();
    Ok(Subspace::span(c.dim, &in_ridge))
}

fn enumeration_guard(c: &Configuration) -> Result<usize, SphereError> {
    let budget = crate::max_faces_budget();
    if std::env::var("HEMI_MAX_FACES").is_err() && c.len() > MAX_ENUMERATION_POINTS {
        return Err(SphereError::TooManyPoints(c.len(), MAX_ENUMERATION_POINTS));
    }
    Ok(budget)
}

/// The constellation complex: faces are the index sets lying in a common
/// open hemisphere.
pub fn stel_complex(c: &Configuration) -> Result<SimplicialComplex, SphereError> {
    if !c.spans_ambient() {
        return Err(SphereError::NotSpanning);
    }
    let budget = enumeration_guard(c)?;
    let points = c.points.clone();
    Ok(SimplicialComplex::enumerate_hereditary(
        c.labels.clone(),
        |face| {
            let sel: Vec<QVector> = face.iter().map(|&v| points[v as usize].clone()).collect();
            !zero_in_convex_hull(&sel)
        },
        budget,
    )?)
}

/// The big constellation complex: faces are the index sets lying in a
/// common closed hemisphere.
pub fn bstel_complex(c: &Configuration) -> Result<SimplicialComplex, SphereError> {
    if !c.spans_ambient() {
        return Err(SphereError::NotSpanning);
    }
    let budget = enumeration_guard(c)?;
    let points = c.points.clone();
    let dim = c.dim;
    Ok(SimplicialComplex::enumerate_hereditary(
        c.labels.clone(),
        |face| {
            let sel: Vec<QVector> = face.iter().map(|&v| points[v as usize].clone()).collect();
            !cone_is_everything(&sel, dim)
        },
        budget,
    )?)
}

/// Ample: every open hemisphere of the essential span contains a point;
/// equivalently the cone over all points is the whole essential space.
pub fn is_ample(c: &Configuration) -> bool {
    let e = c.essentialize();
    cone_is_everything(&e.points, e.dim)
}

/// Antipodal: the multiset of rays is closed under negation, with
/// multiplicities and up to positive scaling.
pub fn is_antipodal(c: &Configuration) -> bool {
    let mut counts: HashMap<Vec<num_bigint::BigInt>, i64> = HashMap::new();
    for p in &c.points {
        *counts.entry(p.primitive_ray()).or_insert(0) += 1;
        *counts.entry(p.neg().primitive_ray()).or_insert(0) -= 1;
    }
    counts.values().all(|&v| v == 0)
}

/// All subspaces spanned by subsets of the configuration points. With the
/// zero subspace and the full span removed these are the proper elements of
/// the dual intersection lattice of the induced arrangement.
pub fn dual_lattice_flats(c: &Configuration) -> Result<Vec<Subspace>, SphereError> {
    if !c.spans_ambient() {
        return Err(SphereError::NotSpanning);
    }
    let mut flats: Vec<Subspace> = Vec::new();
    let mut frontier: Vec<Subspace> = Vec::new();
    for p in &c.points {
        let line = Subspace::span(c.dim, std::slice::from_ref(p));
        if !flats.contains(&line) {
            flats.push(line.clone());
            frontier.push(line);
        }
    }
    while let Some(flat) = frontier.pop() {
        for p in &c.points {
            if flat.contains_vector(p) {
                continue;
            }
            let mut vectors: Vec<QVector> = flat.basis().rows().to_vec();
            vectors.push(p.clone());
            let bigger = Subspace::span(c.dim, &vectors);
            if !flats.contains(&bigger) {
                flats.push(bigger.clone());
                frontier.push(bigger);
            }
        }
    }
    let mut proper: Vec<Subspace> = flats
        .into_iter()
        .filter(|f| !f.is_zero() && !f.is_full())
        .collect();
    proper.sort_by_key(|f| f.dim());
    Ok(proper)
}

fn validate_flat(c: &Configuration, flat: &Subspace) -> Result<(), SphereError> {
    if flat.ambient_dim() != c.dim {
        return Err(SphereError::DimensionMismatch);
    }
    let proper = dual_lattice_flats(c)?;
    if !proper.contains(flat) {
        return Err(SphereError::FlatNotInLattice);
    }
    Ok(())
}

/// The subcomplex of the big constellation complex whose faces have ridge
/// contained in the given flat. This is the preimage, under the comparison
/// map to the ordered sum, of everything below the flat.
pub fn quillen_fiber(c: &Configuration, flat: &Subspace) -> Result<SimplicialComplex, SphereError> {
    validate_flat(c, flat)?;
    let bstel = bstel_complex(c)?;
    let mut kept = SimplicialComplex::empty(bstel.labels().to_vec());
    for face in bstel.faces() {
        let index_set: Vec<usize> = face.iter().map(|&v| v as usize).collect();
        let w = ridge(c, &index_set)?;
        if flat.contains(&w) {
            kept.insert_face_unchecked(face.clone());
        }
    }
    Ok(kept)
}

/// The nerve of the shifted closed halfspace family attached to a flat:
/// `I` is a face iff some vector `u` satisfies `<u, z_i> >= 0` for selected
/// points inside the flat and `<u, z_i> >= 1` for those outside.
pub fn halfspace_nerve(
    c: &Configuration,
    flat: &Subspace,
) -> Result<SimplicialComplex, SphereError> {
    validate_flat(c, flat)?;
    let budget = enumeration_guard(c)?;
    let points = c.points.clone();
    let dim = c.dim;
    let in_flat: Vec<bool> = points.iter().map(|p| flat.contains_vector(p)).collect();
    Ok(SimplicialComplex::enumerate_hereditary(
        c.labels.clone(),
        |face| {
            let mut sys = LinearSystem::new(dim);
            for &v in face {
                let rhs = if in_flat[v as usize] {
                    Rational::from_integer(0.into())
                } else {
                    Rational::one()
                };
                sys.add_ge(points[v as usize].clone(), rhs);
            }
            sys.is_feasible()
        },
        budget,
    )?)
}
