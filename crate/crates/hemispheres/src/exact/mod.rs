//! Exact rational linear algebra: scalars, vectors, matrices, row reduction,
//! canonical subspaces, Smith normal form and LP feasibility.
//!
//! Everything in this module is exact; no floating point is used anywhere.

mod lp;
mod snf;

pub use lp::{cone_contains, nonneg_solution, system_feasible, zero_in_convex_hull, LinearSystem};
pub use snf::{smith_normal_form, IntMatrix, SmithForm};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

/// Arbitrary-precision rational scalar, always in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExactError {
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("matrix rows have unequal lengths")]
    RaggedMatrix,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
}

pub fn rat(num: i64, den: i64) -> Rational {
    assert!(den != 0, "zero denominator");
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(num: i64) -> Rational {
    Rational::from_integer(BigInt::from(num))
}

/// Renders `p/q`, or just `p` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational, ExactError> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num.parse().map_err(|_| ExactError::Parse(s.to_string()))?;
    let d: BigInt = den.parse().map_err(|_| ExactError::Parse(s.to_string()))?;
    if d.is_zero() {
        return Err(ExactError::ZeroDenominator);
    }
    Ok(Rational::new(n, d))
}

/// Dense vector of rationals.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QVector {
    entries: Vec<Rational>,
}

impl QVector {
    pub fn new(entries: Vec<Rational>) -> Self {
        QVector { entries }
    }

    pub fn zeros(dim: usize) -> Self {
        QVector {
            entries: vec![Rational::zero(); dim],
        }
    }

    /// Standard basis vector `e_i`.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.entries[i] = Rational::one();
        v
    }

    pub fn from_ints(entries: &[i64]) -> Self {
        QVector {
            entries: entries.iter().map(|&n| rat_int(n)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize) -> &Rational {
        &self.entries[i]
    }

    pub fn set(&mut self, i: usize, value: Rational) {
        self.entries[i] = value;
    }

    pub fn iter(&self) -> impl Iterator<Item = &Rational> {
        self.entries.iter()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn dot(&self, other: &QVector) -> Rational {
        assert_eq!(self.dim(), other.dim());
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn add(&self, other: &QVector) -> QVector {
        assert_eq!(self.dim(), other.dim());
        QVector::new(
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &QVector) -> QVector {
        assert_eq!(self.dim(), other.dim());
        QVector::new(
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn neg(&self) -> QVector {
        QVector::new(self.entries.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, s: &Rational) -> QVector {
        QVector::new(self.entries.iter().map(|a| a * s).collect())
    }

    /// The primitive integer vector on the same ray: all denominators
    /// cleared, integer gcd one, direction preserved.
    pub fn primitive_ray(&self) -> Vec<BigInt> {
        let mut lcm = BigInt::one();
        for e in &self.entries {
            lcm = lcm.lcm(e.denom());
        }
        let ints: Vec<BigInt> = self
            .entries
            .iter()
            .map(|e| e.numer() * (&lcm / e.denom()))
            .collect();
        let mut gcd = BigInt::zero();
        for v in &ints {
            gcd = gcd.gcd(v);
        }
        if gcd.is_zero() {
            return ints;
        }
        ints.into_iter().map(|v| v / &gcd).collect()
    }
}

/// Dense rectangular matrix of rationals, stored by rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: Vec<QVector>,
    cols: usize,
}

impl QMatrix {
    pub fn from_rows(rows: Vec<QVector>) -> Result<Self, ExactError> {
        let cols = rows.first().map_or(0, |r| r.dim());
        if rows.iter().any(|r| r.dim() != cols) {
            return Err(ExactError::RaggedMatrix);
        }
        Ok(QMatrix { rows, cols })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let rows: Vec<QVector> = rows.iter().map(|r| QVector::from_ints(r)).collect();
        Self::from_rows(rows).expect("integer literal rows are rectangular")
    }

    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        QMatrix {
            rows: vec![QVector::zeros(ncols); nrows],
            cols: ncols,
        }
    }

    pub fn identity(n: usize) -> Self {
        QMatrix {
            rows: (0..n).map(|i| QVector::unit(n, i)).collect(),
            cols: n,
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &QVector {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[QVector] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        self.rows[i].get(j)
    }

    pub fn transpose(&self) -> QMatrix {
        let mut out = QMatrix::zeros(self.cols, self.nrows());
        for (i, r) in self.rows.iter().enumerate() {
            for j in 0..self.cols {
                out.rows[j].set(i, r.get(j).clone());
            }
        }
        out
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let nrows = self.nrows();
        let ncols = self.ncols();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..ncols {
            if r == nrows {
                break;
            }
            let Some(p) = (r..nrows).find(|&i| !self.rows[i].get(c).is_zero()) else {
                continue;
            };
            self.rows.swap(r, p);
            let inv = self.rows[r].get(c).clone();
            if !inv.is_one() {
                self.rows[r] = self.rows[r].scale(&(Rational::one() / inv));
            }
            for i in 0..nrows {
                if i != r && !self.rows[i].get(c).is_zero() {
                    let factor = self.rows[i].get(c).clone();
                    self.rows[i] = self.rows[i].sub(&self.rows[r].scale(&factor));
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Rank over the rationals via exact Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis rows of the kernel `{x : M x = 0}`.
    pub fn nullspace(&self) -> QMatrix {
        let mut m = self.clone();
        let pivots = m.rref();
        let ncols = self.ncols();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in (0..ncols).filter(|c| !pivot_set.contains(c)) {
            let mut v = QVector::zeros(ncols);
            v.set(free, Rational::one());
            for (prow, &pcol) in pivots.iter().enumerate() {
                v.set(pcol, -m.rows[prow].get(free).clone());
            }
            basis.push(v);
        }
        QMatrix::from_rows(basis).expect("kernel basis is rectangular")
    }

    /// One solution `x` of `M x = b`, if the system is consistent.
    pub fn solve(&self, b: &QVector) -> Option<QVector> {
        assert_eq!(self.nrows(), b.dim());
        let ncols = self.ncols();
        let mut aug_rows = Vec::with_capacity(self.nrows());
        for (i, r) in self.rows.iter().enumerate() {
            let mut entries: Vec<Rational> = r.entries.clone();
            entries.push(b.get(i).clone());
            aug_rows.push(QVector::new(entries));
        }
        let mut aug = QMatrix::from_rows(aug_rows).expect("augmented rows rectangular");
        let pivots = aug.rref();
        if pivots.contains(&ncols) {
            return None;
        }
        let mut x = QVector::zeros(ncols);
        for (prow, &pcol) in pivots.iter().enumerate() {
            x.set(pcol, aug.rows[prow].get(ncols).clone());
        }
        Some(x)
    }
}

/// Rank over the rationals; thin alias kept for call-site readability.
pub fn rational_rank(m: &QMatrix) -> usize {
    m.rank()
}

/// A linear subspace of `Q^ambient` in canonical form: the basis matrix is
/// in reduced row echelon form with no zero rows, so two subspaces are equal
/// iff their representations are identical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: QMatrix,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: QMatrix::zeros(0, ambient),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace::span(ambient, &(0..ambient).map(|i| QVector::unit(ambient, i)).collect::<Vec<_>>())
    }

    pub fn span(ambient: usize, vectors: &[QVector]) -> Self {
        assert!(vectors.iter().all(|v| v.dim() == ambient));
        let mut m = QMatrix::from_rows(vectors.to_vec()).expect("span vectors rectangular");
        let pivots = m.rref();
        let basis_rows: Vec<QVector> = m.rows[..pivots.len()].to_vec();
        Subspace {
            ambient,
            basis: QMatrix::from_rows(basis_rows).expect("rref rows rectangular"),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.nrows()
    }

    pub fn basis(&self) -> &QMatrix {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn contains_vector(&self, v: &QVector) -> bool {
        assert_eq!(v.dim(), self.ambient);
        // Reduce v against the RREF basis and check what is left.
        let mut v = v.clone();
        for row in self.basis.rows() {
            let pivot = row
                .iter()
                .position(|e| e.is_one())
                .expect("rref rows have a unit pivot");
            let coeff = v.get(pivot).clone();
            if !coeff.is_zero() {
                v = v.sub(&row.scale(&coeff));
            }
        }
        v.is_zero()
    }

    /// Whether `other` is contained in `self`.
    pub fn contains(&self, other: &Subspace) -> bool {
        assert_eq!(self.ambient, other.ambient);
        other.basis.rows().iter().all(|r| self.contains_vector(r))
    }

    /// Orthogonal complement with respect to the standard inner product.
    pub fn orthogonal_complement(&self) -> Subspace {
        if self.dim() == 0 {
            return Subspace::full(self.ambient);
        }
        let kernel = self.basis.nullspace();
        Subspace::span(self.ambient, kernel.rows())
    }
}
