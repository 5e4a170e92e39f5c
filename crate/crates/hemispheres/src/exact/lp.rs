//! Exact rational LP feasibility.
//!
//! Every geometric predicate in this crate reduces to the question whether
//! `A x = b` has a solution with `x >= 0`. That question is decided by a
//! phase-1 simplex over the rationals with Bland's pivoting rule, which
//! cannot cycle, so termination is unconditional. The instances are tiny
//! (at most a few dozen columns), so a dense tableau is used.

use super::{QMatrix, QVector, Rational};
use num_traits::{One, Zero};

/// A system of linear constraints `<row_i, x> (>= | =) rhs_i` over free
/// variables, used for half-space intersection tests.
#[derive(Debug, Clone)]
pub struct LinearSystem {
    dim: usize,
    rows: Vec<(QVector, Rational)>,
}

impl LinearSystem {
    pub fn new(dim: usize) -> Self {
        LinearSystem { dim, rows: Vec::new() }
    }

    /// Add the constraint `<coeffs, u> >= rhs` for a free vector `u`.
    pub fn add_ge(&mut self, coeffs: QVector, rhs: Rational) {
        assert_eq!(coeffs.dim(), self.dim);
        self.rows.push((coeffs, rhs));
    }

    /// Decide whether some `u` (unrestricted in sign) satisfies every
    /// constraint. Encodes `u = p - q` with `p, q >= 0` and slack variables.
    pub fn is_feasible(&self) -> bool {
        let m = self.rows.len();
        if m == 0 {
            return true;
        }
        let d = self.dim;
        let n = 2 * d + m;
        let mut a = QMatrix::zeros(m, n);
        let mut b = QVector::zeros(m);
        for (i, (coeffs, rhs)) in self.rows.iter().enumerate() {
            for j in 0..d {
                a.rows[i].set(j, coeffs.get(j).clone());
                a.rows[i].set(d + j, -coeffs.get(j).clone());
            }
            a.rows[i].set(2 * d + i, -Rational::one());
            b.set(i, rhs.clone());
        }
        nonneg_solution(&a, &b).is_some()
    }
}

/// True iff the origin is a convex combination of the given vectors.
pub fn zero_in_convex_hull(vs: &[QVector]) -> bool {
    if vs.is_empty() {
        return false;
    }
    let d = vs[0].dim();
    assert!(vs.iter().all(|v| v.dim() == d));
    let k = vs.len();
    let mut a = QMatrix::zeros(d + 1, k);
    for (j, v) in vs.iter().enumerate() {
        for i in 0..d {
            a.rows[i].set(j, v.get(i).clone());
        }
        a.rows[d].set(j, Rational::one());
    }
    let mut b = QVector::zeros(d + 1);
    b.set(d, Rational::one());
    nonneg_solution(&a, &b).is_some()
}

/// True iff `target` is a nonnegative combination of the generators.
pub fn cone_contains(generators: &[QVector], target: &QVector) -> bool {
    if generators.is_empty() {
        return target.is_zero();
    }
    let d = target.dim();
    assert!(generators.iter().all(|g| g.dim() == d));
    let k = generators.len();
    let mut a = QMatrix::zeros(d, k);
    for (j, g) in generators.iter().enumerate() {
        for i in 0..d {
            a.rows[i].set(j, g.get(i).clone());
        }
    }
    nonneg_solution(&a, target).is_some()
}

/// Convenience wrapper returning only feasibility of `A x = b, x >= 0`.
pub fn system_feasible(a: &QMatrix, b: &QVector) -> bool {
    nonneg_solution(a, b).is_some()
}

/// Find `x >= 0` with `A x = b`, if one exists, by phase-1 simplex with
/// Bland's rule.
pub fn nonneg_solution(a: &QMatrix, b: &QVector) -> Option<Vec<Rational>> {
    let m = a.nrows();
    let n = a.ncols();
    assert_eq!(b.dim(), m);
    if m == 0 {
        return Some(vec![Rational::zero(); n]);
    }

    // Tableau rows: structural columns 0..n, artificial n..n+m, rhs at n+m.
    let width = n + m + 1;
    let mut t: Vec<Vec<Rational>> = Vec::with_capacity(m);
    for i in 0..m {
        let flip = b.get(i) < &Rational::zero();
        let mut row = vec![Rational::zero(); width];
        for j in 0..n {
            let v = a.get(i, j).clone();
            row[j] = if flip { -v } else { v };
        }
        row[n + i] = Rational::one();
        row[n + m] = if flip { -b.get(i).clone() } else { b.get(i).clone() };
        t.push(row);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    // Reduced costs for "minimise the sum of artificials": initially the
    // negated column sums for structural columns, zero on the artificials.
    let mut cost = vec![Rational::zero(); width];
    for j in 0..n {
        let mut s = Rational::zero();
        for row in &t {
            s += &row[j];
        }
        cost[j] = -s;
    }
    let mut objective: Rational = t.iter().map(|row| row[n + m].clone()).sum();
    let zero = Rational::zero();

    loop {
        // Bland: entering column = least index with negative reduced cost.
        let Some(enter) = (0..n + m).find(|&j| cost[j] < zero) else {
            break;
        };
        // Ratio test; ties by least basis variable index (Bland).
        let mut leave: Option<(usize, Rational)> = None;
        for (i, row) in t.iter().enumerate() {
            if row[enter] > zero {
                let ratio = &row[n + m] / &row[enter];
                match &leave {
                    None => leave = Some((i, ratio)),
                    Some((li, lr)) => {
                        if ratio < *lr || (ratio == *lr && basis[i] < basis[*li]) {
                            leave = Some((i, ratio));
                        }
                    }
                }
            }
        }
        let (pivot_row, _) =
            leave.expect("phase-1 objective is bounded, a leaving row always exists");

        // Normalise pivot row, then eliminate the entering column elsewhere.
        let pv = t[pivot_row][enter].clone();
        if !pv.is_one() {
            for v in t[pivot_row].iter_mut() {
                if !v.is_zero() {
                    *v /= &pv;
                }
            }
        }
        let prow = t[pivot_row].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i != pivot_row && !row[enter].is_zero() {
                let f = row[enter].clone();
                for (v, p) in row.iter_mut().zip(&prow) {
                    if !p.is_zero() {
                        *v -= &f * p;
                    }
                }
            }
        }
        if !cost[enter].is_zero() {
            let f = cost[enter].clone();
            for (v, p) in cost.iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *v -= &f * p;
                }
            }
            objective += &f * &prow[n + m];
        }
        basis[pivot_row] = enter;
    }

    if !objective.is_zero() {
        return None;
    }
    let mut x = vec![Rational::zero(); n];
    for (i, &var) in basis.iter().enumerate() {
        if var < n {
            x[var] = t[i][n + m].clone();
        }
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rat_int};

    fn v(entries: &[i64]) -> QVector {
        QVector::from_ints(entries)
    }

    #[test]
    fn midpoint_of_antipodes() {
        assert!(zero_in_convex_hull(&[v(&[1, 0]), v(&[-1, 0])]));
        assert!(!zero_in_convex_hull(&[v(&[1, 0])]));
        assert!(!zero_in_convex_hull(&[]));
    }

    #[test]
    fn three_cycle_roots_surround_origin() {
        // alpha_12 + alpha_23 + alpha_31 = 0 in R^3.
        let a12 = v(&[-1, 1, 0]);
        let a23 = v(&[0, -1, 1]);
        let a31 = v(&[1, 0, -1]);
        assert!(zero_in_convex_hull(&[a12, a23, a31]));
    }

    #[test]
    fn cone_membership_basics() {
        assert!(cone_contains(&[v(&[1, 0]), v(&[0, 1])], &v(&[1, 1])));
        assert!(!cone_contains(&[v(&[1, 0])], &v(&[-1, 0])));
        assert!(cone_contains(&[], &v(&[0, 0])));
        assert!(!cone_contains(&[], &v(&[1, 0])));
        // Opposite roots span a line: -alpha_12 is reachable.
        assert!(cone_contains(&[v(&[-1, 1]), v(&[1, -1])], &v(&[1, -1])));
    }

    #[test]
    fn solution_witness_is_valid() {
        let a = QMatrix::from_int_rows(&[&[1, 1, 0], &[0, 1, 1]]);
        let b = v(&[3, 2]);
        let x = nonneg_solution(&a, &b).unwrap();
        for xi in &x {
            assert!(*xi >= rat_int(0));
        }
        for i in 0..2 {
            let lhs: Rational = (0..3).map(|j| a.get(i, j) * &x[j]).sum();
            assert_eq!(lhs, *b.get(i));
        }
    }

    #[test]
    fn infeasible_system_detected() {
        // x1 = 1 and x1 = -1 simultaneously.
        let a = QMatrix::from_int_rows(&[&[1], &[1]]);
        let b = QVector::new(vec![rat_int(1), rat_int(-1)]);
        assert!(nonneg_solution(&a, &b).is_none());
    }

    #[test]
    fn free_variable_systems() {
        // u_x >= 1 and u_x <= -1 cannot hold together.
        let mut sys = LinearSystem::new(2);
        sys.add_ge(v(&[1, 0]), rat_int(1));
        sys.add_ge(v(&[-1, 0]), rat_int(1));
        assert!(!sys.is_feasible());

        let mut sys = LinearSystem::new(2);
        sys.add_ge(v(&[1, 0]), rat_int(1));
        sys.add_ge(v(&[0, 1]), rat_int(1));
        sys.add_ge(v(&[1, 1]), rat(0, 1));
        assert!(sys.is_feasible());
    }

    #[test]
    fn cone_additivity_spot_checks() {
        let gens = [v(&[1, 2, 0]), v(&[0, 1, 1]), v(&[1, 0, 3])];
        let t1 = v(&[1, 4, 2]); // g0 + 2 g1
        let t2 = v(&[1, 1, 4]); // g1 + g2
        assert!(cone_contains(&gens, &t1));
        assert!(cone_contains(&gens, &t2));
        assert!(cone_contains(&gens, &t1.add(&t2)));
        assert!(!cone_contains(&gens, &v(&[0, 0, -1])));
    }
}
