//! Smith normal form over the integers.
//!
//! Boundary matrices of the complexes built here are large but extremely
//! sparse with almost all pivots equal to ±1, so the computation runs in two
//! stages: a sparse elimination that peels off unit pivots (chosen to
//! minimise fill), followed by the classical gcd pivot-and-reduce on the
//! small dense core that remains.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, BTreeSet};

/// Sparse integer matrix given by explicit entries.
#[derive(Debug, Clone)]
pub struct IntMatrix {
    nrows: usize,
    ncols: usize,
    rows: Vec<BTreeMap<usize, BigInt>>,
}

impl IntMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        IntMatrix {
            nrows,
            ncols,
            rows: vec![BTreeMap::new(); nrows],
        }
    }

    pub fn from_triplets(
        nrows: usize,
        ncols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, BigInt)>,
    ) -> Self {
        let mut m = Self::zeros(nrows, ncols);
        for (i, j, v) in triplets {
            assert!(i < nrows && j < ncols);
            if !v.is_zero() {
                m.rows[i].insert(j, v);
            }
        }
        m
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zeros(nrows, ncols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), ncols, "ragged rows");
            for (j, &v) in r.iter().enumerate() {
                if v != 0 {
                    m.rows[i].insert(j, BigInt::from(v));
                }
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }
}

/// Invariant factors `d_1 | d_2 | ... | d_r` of an integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub diagonal: Vec<BigInt>,
    pub rank: usize,
}

impl SmithForm {
    /// Invariant factors greater than one (the torsion part of the cokernel).
    pub fn nontrivial_factors(&self) -> Vec<BigInt> {
        self.diagonal.iter().filter(|d| !d.is_one()).cloned().collect()
    }
}

/// Smith normal form: returns the invariant factors, all positive, each
/// dividing the next, with `rank` equal to the rank of the matrix.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    // Working copy with a column index for pivot search.
    let mut rows: Vec<BTreeMap<usize, BigInt>> = m.rows.clone();
    let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); m.ncols];
    for (i, r) in rows.iter().enumerate() {
        for &j in r.keys() {
            col_rows[j].insert(i);
        }
    }
    let mut live_rows: BTreeSet<usize> = (0..m.nrows).filter(|&i| !rows[i].is_empty()).collect();

    // Shortest-row-first pivot queue with lazy invalidation: a row is
    // revisited whenever an elimination changes it.
    let mut queue: std::collections::BinaryHeap<std::cmp::Reverse<(usize, usize)>> = live_rows
        .iter()
        .map(|&i| std::cmp::Reverse((rows[i].len(), i)))
        .collect();

    let mut unit_pivots = 0usize;
    while let Some(std::cmp::Reverse((len, pi))) = queue.pop() {
        if !live_rows.contains(&pi) || rows[pi].len() != len {
            continue; // stale entry
        }
        // Within the shortest row, prefer the ±1 entry in the lightest column.
        let best = rows[pi]
            .iter()
            .filter(|(_, v)| v.abs().is_one())
            .min_by_key(|(&j, _)| col_rows[j].len())
            .map(|(&j, _)| j);
        let Some(pj) = best else {
            continue; // no unit entry now; the row re-enters if modified
        };

        // Clear column pj using row pi, then drop the pivot row and column.
        let pivot_row = rows[pi].clone();
        let pivot_val = pivot_row[&pj].clone();
        let targets: Vec<usize> = col_rows[pj].iter().copied().filter(|&i| i != pi).collect();
        for t in targets {
            let factor = &rows[t][&pj] / &pivot_val;
            for (&j, v) in &pivot_row {
                let entry = rows[t].entry(j).or_insert_with(BigInt::zero);
                *entry -= &factor * v;
                if entry.is_zero() {
                    rows[t].remove(&j);
                    col_rows[j].remove(&t);
                } else {
                    col_rows[j].insert(t);
                }
            }
            if rows[t].is_empty() {
                live_rows.remove(&t);
            } else {
                queue.push(std::cmp::Reverse((rows[t].len(), t)));
            }
        }
        for (&j, _) in &pivot_row {
            col_rows[j].remove(&pi);
        }
        rows[pi].clear();
        live_rows.remove(&pi);
        unit_pivots += 1;
    }

    // Densify whatever is left and finish with gcd pivoting.
    let live: Vec<usize> = live_rows.iter().copied().collect();
    let live_cols: Vec<usize> = {
        let mut s = BTreeSet::new();
        for &i in &live {
            s.extend(rows[i].keys().copied());
        }
        s.into_iter().collect()
    };
    let col_pos: BTreeMap<usize, usize> =
        live_cols.iter().enumerate().map(|(p, &j)| (j, p)).collect();
    let mut dense: Vec<Vec<BigInt>> = live
        .iter()
        .map(|&i| {
            let mut row = vec![BigInt::zero(); live_cols.len()];
            for (&j, v) in &rows[i] {
                row[col_pos[&j]] = v.clone();
            }
            row
        })
        .collect();

    let mut core = dense_smith(&mut dense);

    let mut diagonal = vec![BigInt::one(); unit_pivots];
    diagonal.append(&mut core);
    let rank = diagonal.len();
    enforce_divisibility(&mut diagonal);
    SmithForm { diagonal, rank }
}

/// Classical Smith reduction of a small dense matrix; returns the nonzero
/// diagonal entries (positive, not yet divisibility-sorted).
fn dense_smith(a: &mut Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let nrows = a.len();
    let ncols = a.first().map_or(0, |r| r.len());
    let mut diag = Vec::new();
    let mut k = 0;
    while k < nrows.min(ncols) {
        // Find entry of least absolute value in the trailing block.
        let mut pivot: Option<(usize, usize)> = None;
        for i in k..nrows {
            for j in k..ncols {
                if !a[i][j].is_zero()
                    && pivot.map_or(true, |(pi, pj)| a[i][j].abs() < a[pi][pj].abs())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        a.swap(k, pi);
        for row in a.iter_mut() {
            row.swap(k, pj);
        }

        let mut clean = true;
        for i in k + 1..nrows {
            if !a[i][k].is_zero() {
                let q = div_nearest(&a[i][k], &a[k][k]);
                if !q.is_zero() {
                    for j in k..ncols {
                        let sub = &q * &a[k][j];
                        a[i][j] -= sub;
                    }
                }
                if !a[i][k].is_zero() {
                    clean = false;
                }
            }
        }
        for j in k + 1..ncols {
            if !a[k][j].is_zero() {
                let q = div_nearest(&a[k][j], &a[k][k]);
                if !q.is_zero() {
                    for i in k..nrows {
                        let sub = &q * &a[i][k];
                        a[i][j] -= sub;
                    }
                }
                if !a[k][j].is_zero() {
                    clean = false;
                }
            }
        }
        if !clean {
            continue; // smaller remainders now exist; repick the pivot
        }
        diag.push(a[k][k].abs());
        k += 1;
    }
    diag
}

/// Rounded division: the quotient minimising `|a - q*b|`.
fn div_nearest(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    if r.abs() * 2 > b.abs() {
        if r.sign() == b.sign() {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

/// Pairwise gcd/lcm passes until each diagonal entry divides the next.
fn enforce_divisibility(diag: &mut [BigInt]) {
    let n = diag.len();
    if n < 2 {
        return;
    }
    loop {
        let mut changed = false;
        for i in 0..n - 1 {
            for j in i + 1..n {
                if !(&diag[j] % &diag[i]).is_zero() {
                    let g = diag[i].gcd(&diag[j]);
                    let l = (&diag[i] / &g) * &diag[j];
                    diag[i] = g;
                    diag[j] = l;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::QMatrix;

    fn snf_of(rows: &[&[i64]]) -> SmithForm {
        smith_normal_form(&IntMatrix::from_int_rows(rows))
    }

    #[test]
    fn zero_matrix_has_rank_zero() {
        let s = snf_of(&[&[0, 0, 0], &[0, 0, 0]]);
        assert_eq!(s.rank, 0);
        assert!(s.diagonal.is_empty());
    }

    #[test]
    fn identity_matrix() {
        let s = snf_of(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(s.rank, 3);
        assert_eq!(s.diagonal, vec![1.into(), 1.into(), 1.into()]);
    }

    #[test]
    fn two_by_two_with_no_unit_entries() {
        // d1 = gcd of entries = 2, d1*d2 = |det| = 8.
        let s = snf_of(&[&[2, 4], &[6, 8]]);
        assert_eq!(s.diagonal, vec![BigInt::from(2), BigInt::from(4)]);
    }

    #[test]
    fn known_four_by_four() {
        let s = snf_of(&[
            &[-6, 111, -36, 6],
            &[5, -672, 210, 74],
            &[0, -255, 81, 24],
            &[-7, 255, -81, -10],
        ]);
        assert_eq!(
            s.diagonal,
            vec![BigInt::from(1), BigInt::from(3), BigInt::from(21)]
        );
        assert_eq!(s.rank, 3);
    }

    /// Independent oracle: gcd of all k×k minors, by enumeration.
    fn minor_gcd(rows: &[Vec<i64>], k: usize) -> BigInt {
        use itertools::Itertools;
        let nr = rows.len();
        let nc = rows[0].len();
        let mut g = BigInt::zero();
        for rsel in (0..nr).combinations(k) {
            for csel in (0..nc).combinations(k) {
                let sub: Vec<Vec<BigInt>> = rsel
                    .iter()
                    .map(|&i| csel.iter().map(|&j| BigInt::from(rows[i][j])).collect())
                    .collect();
                g = g.gcd(&det(&sub));
            }
        }
        g
    }

    fn det(m: &[Vec<BigInt>]) -> BigInt {
        let n = m.len();
        if n == 0 {
            return BigInt::one();
        }
        if n == 1 {
            return m[0][0].clone();
        }
        let mut acc = BigInt::zero();
        for j in 0..n {
            if m[0][j].is_zero() {
                continue;
            }
            let minor: Vec<Vec<BigInt>> = (1..n)
                .map(|i| (0..n).filter(|&c| c != j).map(|c| m[i][c].clone()).collect())
                .collect();
            let term = &m[0][j] * det(&minor);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    #[test]
    fn invariant_factor_products_match_minor_gcds() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let rows: Vec<Vec<i64>> = (0..5)
                .map(|_| (0..5).map(|_| rng.gen_range(-5..=5)).collect())
                .collect();
            let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
            let s = snf_of(&refs);

            let qrows: Vec<crate::exact::QVector> = rows
                .iter()
                .map(|r| crate::exact::QVector::from_ints(r))
                .collect();
            let qrank = QMatrix::from_rows(qrows).unwrap().rank();
            assert_eq!(s.rank, qrank, "SNF rank disagrees with rational rank");

            let mut product = BigInt::one();
            for (k, d) in s.diagonal.iter().enumerate() {
                product *= d;
                assert_eq!(
                    product,
                    minor_gcd(&rows, k + 1),
                    "product of first {} invariant factors",
                    k + 1
                );
            }
            for w in s.diagonal.windows(2) {
                assert!((&w[1] % &w[0]).is_zero(), "divisibility chain violated");
            }
        }
    }
}
