//! Gaussian elimination over exact rationals.

use num_traits::{One, Zero};

use super::Rat;

/// Reduced row echelon form of an augmented system `[a | b]`.
struct Echelon {
    rows: Vec<Vec<Rat>>,
    rhs: Vec<Rat>,
    pivots: Vec<usize>,
}

fn eliminate(a: &[Vec<Rat>], b: &[Rat], cols: usize) -> Echelon {
    let mut rows: Vec<Vec<Rat>> = a.to_vec();
    let mut rhs: Vec<Rat> = b.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        rhs.swap(r, p);
        let inv = Rat::one() / &rows[r][c];
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        rhs[r] *= &inv;
        let pivot_row = rows[r][c..].to_vec();
        let pivot_rhs = rhs[r].clone();
        for (i, (row, b)) in rows.iter_mut().zip(rhs.iter_mut()).enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row[c..].iter_mut().zip(&pivot_row) {
                *x -= &f * p;
            }
            *b -= &f * &pivot_rhs;
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    Echelon { rows, rhs, pivots }
}

pub fn rank(a: &[Vec<Rat>], cols: usize) -> usize {
    let zeros = vec![Rat::zero(); a.len()];
    eliminate(a, &zeros, cols).pivots.len()
}

/// Some solution of `a x = b` (free variables set to zero), or `None` when
/// the system is inconsistent.
pub fn solve(a: &[Vec<Rat>], b: &[Rat], cols: usize) -> Option<Vec<Rat>> {
    let e = eliminate(a, b, cols);
    let rank = e.pivots.len();
    if e.rhs[rank..].iter().any(|x| !x.is_zero()) {
        return None;
    }
    let mut x = vec![Rat::zero(); cols];
    for (i, &c) in e.pivots.iter().enumerate() {
        x[c] = e.rhs[i].clone();
    }
    Some(x)
}

/// The solution of `a x = b` when it exists and is unique.
pub fn solve_unique(a: &[Vec<Rat>], b: &[Rat], cols: usize) -> Option<Vec<Rat>> {
    let e = eliminate(a, b, cols);
    let rank = e.pivots.len();
    if rank < cols || e.rhs[rank..].iter().any(|x| !x.is_zero()) {
        return None;
    }
    let mut x = vec![Rat::zero(); cols];
    for (i, &c) in e.pivots.iter().enumerate() {
        x[c] = e.rhs[i].clone();
    }
    Some(x)
}

/// A basis of `{x : a x = 0}`.
pub fn nullspace(a: &[Vec<Rat>], cols: usize) -> Vec<Vec<Rat>> {
    let zeros = vec![Rat::zero(); a.len()];
    let e = eliminate(a, &zeros, cols);
    let free: Vec<usize> = (0..cols).filter(|c| !e.pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rat::zero(); cols];
            v[f] = Rat::one();
            for (i, &c) in e.pivots.iter().enumerate() {
                v[c] = -e.rows[i][f].clone();
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{rat, ratio};

    fn rows(v: &[&[i64]]) -> Vec<Vec<Rat>> {
        v.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()
    }

    #[test]
    fn unique_solution() {
        let a = rows(&[&[2, 0], &[0, 1]]);
        assert_eq!(solve_unique(&a, &[rat(1), rat(2)], 2), Some(vec![ratio(1, 2), rat(2)]));
    }

    #[test]
    fn inconsistent_and_underdetermined() {
        let a = rows(&[&[1, 1], &[2, 2]]);
        assert_eq!(solve(&a, &[rat(1), rat(3)], 2), None);
        assert_eq!(solve(&a, &[rat(1), rat(2)], 2), Some(vec![rat(1), rat(0)]));
        assert_eq!(solve_unique(&a, &[rat(1), rat(2)], 2), None);
        assert_eq!(rank(&a, 2), 1);
    }

    #[test]
    fn nullspace_basis() {
        let a = rows(&[&[1, 1, 1]]);
        let ns = nullspace(&a, 3);
        assert_eq!(ns.len(), 2);
        for v in ns {
            assert!(crate::lattice::dot(&a[0], &v).is_zero());
        }
        assert!(nullspace(&rows(&[&[1, 0], &[0, 1]]), 2).is_empty());
        assert_eq!(nullspace(&[], 2).len(), 2);
    }
}
