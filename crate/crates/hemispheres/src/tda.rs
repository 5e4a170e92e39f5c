//! Vietoris--Rips filtrations at exact squared-distance scales, persistence
//! over the two-element field, and the two hemisphere endpoints of the
//! geodesic ball filtration of an antipodal configuration.
//!
//! Birth values are squared Euclidean diameters: a simplex enters the
//! filtration at the largest squared pairwise distance among its vertices.
//! Squaring keeps every value rational for rational inputs.

use crate::arrangement::{self, ArrangementError};
use crate::complex::{reduced_homology, HomologyProfile, SimplicialComplex};
use crate::exact::{format_rational, QVector, Rational};
use crate::sphere::{self, Configuration, SphereError};
use itertools::Itertools;
use num_bigint::BigInt;
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum TdaError {
    #[error("{0} points exceed the filtration guard of {1}")]
    TooManyPoints(usize, usize),
    #[error("points have inconsistent dimensions")]
    DimensionMismatch,
    #[error("configuration must be antipodal and ample")]
    NotAntipodalAmple,
    #[error(transparent)]
    Sphere(#[from] SphereError),
    #[error(transparent)]
    Arrangement(#[from] ArrangementError),
}

pub const MAX_FILTRATION_POINTS: usize = 16;

/// An ordered simplicial filtration: simplices with their birth values,
/// sorted by (value, dimension, vertex order), faces never after cofaces.
#[derive(Debug, Clone)]
pub struct Filtration {
    simplices: Vec<(Vec<u32>, Rational)>,
}

impl Filtration {
    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn simplices(&self) -> &[(Vec<u32>, Rational)] {
        &self.simplices
    }

    /// All distinct birth values in increasing order.
    pub fn critical_values(&self) -> Vec<Rational> {
        let mut values: Vec<Rational> = self.simplices.iter().map(|(_, v)| v.clone()).collect();
        values.sort();
        values.dedup();
        values
    }

    /// The complex of all simplices born at or before the given value.
    pub fn complex_at(&self, value: &Rational) -> SimplicialComplex {
        let max_vertex = self
            .simplices
            .iter()
            .flat_map(|(s, _)| s.iter().copied())
            .max()
            .map_or(0, |v| v as usize + 1);
        let labels = (1..=max_vertex).map(|i| i.to_string()).collect();
        let mut k = SimplicialComplex::empty(labels);
        for (simplex, birth) in &self.simplices {
            if birth <= value {
                k.insert_face_unchecked(simplex.clone());
            }
        }
        k
    }
}

/// The Vietoris--Rips filtration of a point cloud up to the given simplex
/// dimension, with squared-diameter birth values.
pub fn vr_filtration(points: &[QVector], max_dim: usize) -> Result<Filtration, TdaError> {
    let m = points.len();
    if m > MAX_FILTRATION_POINTS && std::env::var("HEMI_MAX_FACES").is_err() {
        return Err(TdaError::TooManyPoints(m, MAX_FILTRATION_POINTS));
    }
    if m > 0 && points.iter().any(|p| p.dim() != points[0].dim()) {
        return Err(TdaError::DimensionMismatch);
    }
    let mut dist = vec![vec![Rational::from_integer(0.into()); m]; m];
    for i in 0..m {
        for j in i + 1..m {
            let diff = points[i].sub(&points[j]);
            let d2 = diff.dot(&diff);
            dist[i][j] = d2.clone();
            dist[j][i] = d2;
        }
    }
    let mut simplices = Vec::new();
    for size in 1..=(max_dim + 1).min(m) {
        for subset in (0..m as u32).combinations(size) {
            let birth = subset
                .iter()
                .tuple_combinations()
                .map(|(&a, &b)| dist[a as usize][b as usize].clone())
                .max()
                .unwrap_or_else(|| Rational::from_integer(0.into()));
            simplices.push((subset, birth));
        }
    }
    simplices.sort_by(|(s1, v1), (s2, v2)| {
        v1.cmp(v2)
            .then(s1.len().cmp(&s2.len()))
            .then(s1.cmp(s2))
    });
    // Monotone by construction: every face has diameter at most its coface's.
    debug_assert!({
        let position: HashMap<&[u32], usize> = simplices
            .iter()
            .enumerate()
            .map(|(i, (s, _))| (s.as_slice(), i))
            .collect();
        simplices.iter().all(|(s, _)| {
            s.len() == 1
                || (0..s.len()).all(|skip| {
                    let sub: Vec<u32> = s
                        .iter()
                        .enumerate()
                        .filter(|&(k, _)| k != skip)
                        .map(|(_, &v)| v)
                        .collect();
                    position[sub.as_slice()] < position[s.as_slice()]
                })
        })
    });
    Ok(Filtration { simplices })
}

/// One interval of persistent homology.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bar {
    pub degree: usize,
    pub birth: Rational,
    pub death: Option<Rational>,
}

/// A persistence diagram: the multiset of bars, zero-length pairs dropped.
#[derive(Debug, Clone)]
pub struct PersistenceDiagram {
    bars: Vec<Bar>,
}

impl PersistenceDiagram {
    pub fn bars(&self) -> &[Bar] {
        &self.bars
    }

    pub fn bars_of_degree(&self, degree: usize) -> Vec<&Bar> {
        self.bars.iter().filter(|b| b.degree == degree).collect()
    }

    pub fn infinite_bars(&self) -> Vec<&Bar> {
        self.bars.iter().filter(|b| b.death.is_none()).collect()
    }

    /// Betti number over the two-element field at a given filtration value.
    pub fn betti_at(&self, degree: usize, value: &Rational) -> usize {
        self.bars
            .iter()
            .filter(|b| {
                b.degree == degree
                    && b.birth <= *value
                    && b.death.as_ref().map_or(true, |d| d > value)
            })
            .count()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.bars
                .iter()
                .map(|b| {
                    serde_json::json!({
                        "degree": b.degree,
                        "birth": format_rational(&b.birth),
                        "death": b.death.as_ref().map(format_rational),
                    })
                })
                .collect(),
        )
    }
}

/// Standard boundary-matrix column reduction over the two-element field.
/// Deterministic: columns are processed in filtration order.
pub fn persistence(f: &Filtration) -> PersistenceDiagram {
    let n = f.simplices.len();
    let position: HashMap<&[u32], usize> = f
        .simplices
        .iter()
        .enumerate()
        .map(|(i, (s, _))| (s.as_slice(), i))
        .collect();

    // Column i holds the indices of the boundary faces, as a sorted set.
    let mut columns: Vec<Vec<usize>> = Vec::with_capacity(n);
    for (simplex, _) in &f.simplices {
        let mut col = Vec::new();
        if simplex.len() > 1 {
            for skip in 0..simplex.len() {
                let sub: Vec<u32> = simplex
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != skip)
                    .map(|(_, &v)| v)
                    .collect();
                col.push(position[sub.as_slice()]);
            }
            col.sort_unstable();
        }
        columns.push(col);
    }

    let mut low_owner: HashMap<usize, usize> = HashMap::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 0..n {
        loop {
            let Some(&low) = columns[j].last() else { break };
            match low_owner.get(&low) {
                None => {
                    low_owner.insert(low, j);
                    pairs.push((low, j));
                    break;
                }
                Some(&owner) => {
                    let other = columns[owner].clone();
                    columns[j] = symmetric_difference(&columns[j], &other);
                }
            }
        }
    }

    let paired: HashMap<usize, usize> = pairs.iter().copied().collect();
    let dying: std::collections::HashSet<usize> = pairs.iter().map(|&(_, j)| j).collect();
    let mut bars = Vec::new();
    for i in 0..n {
        let (simplex, birth) = &f.simplices[i];
        if let Some(&j) = paired.get(&i) {
            let death = &f.simplices[j].1;
            if death > birth {
                bars.push(Bar {
                    degree: simplex.len() - 1,
                    birth: birth.clone(),
                    death: Some(death.clone()),
                });
            }
        } else if !dying.contains(&i) {
            bars.push(Bar {
                degree: simplex.len() - 1,
                birth: birth.clone(),
                death: None,
            });
        }
    }
    bars.sort_by(|a, b| {
        (a.degree, &a.birth, &a.death).cmp(&(b.degree, &b.birth, &b.death))
    });
    PersistenceDiagram { bars }
}

fn symmetric_difference(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// The comparison of the two hemisphere endpoints of the geodesic ball
/// filtration of an antipodal ample configuration: just below the quarter
/// turn the nerve is the open-hemisphere one, exactly at it the closed one.
#[derive(Debug, Clone)]
pub struct EndpointReport {
    pub essential_dim: usize,
    pub mobius: BigInt,
    pub stel_homology: HomologyProfile,
    pub bstel_homology: HomologyProfile,
    pub stel_is_sphere: bool,
    pub bstel_is_wedge: bool,
}

impl EndpointReport {
    pub fn all_pass(&self) -> bool {
        self.stel_is_sphere && self.bstel_is_wedge
    }
}

pub fn hemisphere_cech_endpoints(
    c: &Configuration,
) -> Result<(SimplicialComplex, SimplicialComplex, EndpointReport), TdaError> {
    if !sphere::is_antipodal(c) || !sphere::is_ample(c) {
        return Err(TdaError::NotAntipodalAmple);
    }
    let e = c.essentialize();
    let d = e.dim();
    let stel = sphere::stel_complex(&e)?;
    let bstel = sphere::bstel_complex(&e)?;
    let arrangement = arrangement::arrangement_from_config(&e)?;
    let lattice = arrangement::intersection_lattice(&arrangement)?;
    let mobius = arrangement::mobius_invariant(&lattice).absolute;
    let stel_homology = reduced_homology(&stel);
    let bstel_homology = reduced_homology(&bstel);
    let stel_is_sphere = stel_homology.is_sphere_wedge(d - 1, 1);
    let wedge_count: usize = mobius.to_string().parse().unwrap_or(usize::MAX);
    let bstel_is_wedge = bstel_homology.is_sphere_wedge(2 * d - 2, wedge_count);
    let report = EndpointReport {
        essential_dim: d,
        mobius,
        stel_homology,
        bstel_homology,
        stel_is_sphere,
        bstel_is_wedge,
    };
    Ok((stel, bstel, report))
}
