//! Hermite and Smith normal forms with their unimodular transforms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMat;

/// Column Hermite normal form: `hnf = input · transform`.
#[derive(Debug, Clone)]
pub struct Hnf {
    pub hnf: IntMat,
    pub transform: IntMat,
    /// Number of nonzero columns; they are the leading ones.
    pub rank: usize,
    /// Row of the pivot in each nonzero column.
    pub pivot_rows: Vec<usize>,
}

/// Smith normal form: `diagonal = left · input · right`.
#[derive(Debug, Clone)]
pub struct Snf {
    pub diagonal: IntMat,
    pub left: IntMat,
    pub right: IntMat,
}

impl Snf {
    /// Nonzero diagonal entries, in order (each divides the next).
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let k = self.diagonal.rows().min(self.diagonal.cols());
        (0..k)
            .map(|i| self.diagonal[(i, i)].clone())
            .take_while(|d| !d.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    if e.gcd.is_negative() {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

/// Column-style HNF. Pivots are positive and entries to the left of a pivot
/// (same row) lie in `[0, pivot)`. Entries above a pivot are zero.
pub fn hnf(m: &IntMat) -> Hnf {
    let (rows, cols) = (m.rows(), m.cols());
    let mut h = m.clone();
    let mut u = IntMat::identity(cols);
    let mut k = 0;
    let mut pivot_rows = Vec::new();
    for r in 0..rows {
        if k == cols {
            break;
        }
        for j in k + 1..cols {
            if h[(r, j)].is_zero() {
                continue;
            }
            let a = h[(r, k)].clone();
            let b = h[(r, j)].clone();
            let (g, x, y) = ext_gcd(&a, &b);
            let (bg, ag) = (&b / &g, &a / &g);
            // [x -b/g; y a/g] has determinant one
            h.combine_cols(k, j, &x, &y, &-&bg, &ag);
            u.combine_cols(k, j, &x, &y, &-&bg, &ag);
        }
        if h[(r, k)].is_zero() {
            continue;
        }
        if h[(r, k)].is_negative() {
            h.negate_col(k);
            u.negate_col(k);
        }
        let pivot = h[(r, k)].clone();
        for j in 0..k {
            let q = h[(r, j)].div_floor(&pivot);
            if !q.is_zero() {
                h.add_col_multiple(j, k, &-&q);
                u.add_col_multiple(j, k, &-&q);
            }
        }
        pivot_rows.push(r);
        k += 1;
    }
    Hnf { hnf: h, transform: u, rank: k, pivot_rows }
}

/// Smith normal form with a divisibility chain of non-negative diagonal entries.
pub fn snf(m: &IntMat) -> Snf {
    let (rows, cols) = (m.rows(), m.cols());
    let mut s = m.clone();
    let mut left = IntMat::identity(rows);
    let mut right = IntMat::identity(cols);
    for t in 0..rows.min(cols) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let v = &s[(i, j)];
                    if v.is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| v.abs() < s[(bi, bj)].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else {
                return Snf { diagonal: s, left, right };
            };
            s.swap_rows(t, bi);
            left.swap_rows(t, bi);
            s.swap_cols(t, bj);
            right.swap_cols(t, bj);

            let pivot = s[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..rows {
                let q = s[(i, t)].div_floor(&pivot);
                if !q.is_zero() {
                    s.add_row_multiple(i, t, &-&q);
                    left.add_row_multiple(i, t, &-&q);
                }
                clean &= s[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                let q = s[(t, j)].div_floor(&pivot);
                if !q.is_zero() {
                    s.add_col_multiple(j, t, &-&q);
                    right.add_col_multiple(j, t, &-&q);
                }
                clean &= s[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            let offender = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !s[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    s.add_row_multiple(t, i, &BigInt::one());
                    left.add_row_multiple(t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if s[(t, t)].is_negative() {
            s.negate_row(t);
            left.negate_row(t);
        }
    }
    Snf { diagonal: s, left, right }
}
