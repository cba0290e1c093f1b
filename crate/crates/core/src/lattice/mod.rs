//! Exact integer and rational linear algebra.
//!
//! Everything here is arbitrary precision. The integer side provides the
//! normal forms and the lattice operations built on them (kernels,
//! saturation, quotient groups); the rational side is plain Gaussian
//! elimination over `Rat`.

mod group;
mod intmat;
pub mod linalg;
mod normal_form;
mod rat;

pub use group::{in_lattice, quotient_group, FiniteAbelianGroup};
pub use intmat::IntMat;
pub use normal_form::{hnf, snf, Hnf, Snf};
pub use rat::{
    common_denominator, dot, dot_int, format_rat, int_to_rat, parse_rat, rat, rat_to_int, ratio, to_f64, Rat,
};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

pub fn gcd_all<'a>(v: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    v.into_iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

/// Divides out the content of `v`, keeping its direction.
pub fn primitive(v: &[BigInt]) -> Result<Vec<BigInt>> {
    let g = gcd_all(v);
    if g.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(v.iter().map(|x| x / &g).collect())
}

/// Splits a nonzero integer vector as `label · primitive`.
pub fn split_content(v: &[BigInt]) -> Result<(BigInt, Vec<BigInt>)> {
    let g = gcd_all(v);
    if g.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok((g.clone(), v.iter().map(|x| x / &g).collect()))
}

pub fn is_primitive(v: &[BigInt]) -> bool {
    gcd_all(v) == BigInt::from(1)
}

/// Basis (as rows) of the saturated lattice `{x ∈ Z^cols : M x = 0}`.
pub fn kernel_lattice_basis(m: &IntMat) -> IntMat {
    let h = hnf(m);
    let u = &h.transform;
    let basis: Vec<Vec<BigInt>> = (h.rank..m.cols()).map(|j| u.col(j)).collect();
    canonical_basis(&IntMat::from_rows(m.cols(), &basis))
}

/// Hermite-reduced basis of the row lattice: rows are the nonzero columns of
/// the column HNF of the transpose, so leading entries are positive.
pub fn canonical_basis(rows: &IntMat) -> IntMat {
    let h = hnf(&rows.transpose());
    let basis: Vec<Vec<BigInt>> = (0..h.rank).map(|j| h.hnf.col(j)).collect();
    IntMat::from_rows(rows.cols(), &basis)
}

/// Basis (as rows) of `span_Q(generators) ∩ Z^cols`.
pub fn saturate(generators: &IntMat) -> IntMat {
    let perp = kernel_lattice_basis(generators);
    if perp.rows() == 0 {
        return IntMat::identity(generators.cols());
    }
    kernel_lattice_basis(&perp)
}

pub fn rank(m: &IntMat) -> usize {
    hnf(m).rank
}

/// Unimodular `A` with `A·v = e_0` for a primitive vector `v`.
pub fn unimodular_sending_to_e0(v: &[BigInt]) -> Result<IntMat> {
    let g = gcd_all(v);
    if g.is_zero() {
        return Err(Error::ZeroVector);
    }
    assert!(g == BigInt::from(1), "unimodular_sending_to_e0 needs a primitive vector");
    let row = IntMat::from_rows(v.len(), &[v.to_vec()]);
    let s = snf(&row);
    // s.left is [±1] and s.left·v^T·right = e_0^T
    let sign = s.left[(0, 0)].clone();
    let mut a = s.right.transpose();
    if sign.is_negative() {
        for i in 0..a.rows() {
            a.negate_row(i);
        }
    }
    Ok(a)
}
