use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::normal_form::{hnf, snf};
use super::IntMat;
use crate::error::{Error, Result};

/// A finitely generated abelian group `Z^free_rank ⊕ Z/d_1 ⊕ … ⊕ Z/d_k`
/// with `d_1 | d_2 | … | d_k` and every `d_i ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteAbelianGroup {
    invariant_factors: Vec<BigInt>,
    free_rank: usize,
}

impl FiniteAbelianGroup {
    pub fn trivial() -> Self {
        FiniteAbelianGroup { invariant_factors: Vec::new(), free_rank: 0 }
    }

    pub fn cyclic(order: u64) -> Self {
        Self::from_diagonal(&[BigInt::from(order)], 0)
    }

    /// Builds the group from an SNF diagonal: ones are dropped, zeros are
    /// not allowed here (pass them through `free_rank`).
    pub fn from_diagonal(diagonal: &[BigInt], free_rank: usize) -> Self {
        let invariant_factors = diagonal.iter().filter(|d| !d.is_one()).cloned().collect::<Vec<_>>();
        debug_assert!(invariant_factors.iter().all(|d| d > &BigInt::one()));
        debug_assert!(invariant_factors.windows(2).all(|w| (&w[1] % &w[0]).is_zero()));
        FiniteAbelianGroup { invariant_factors, free_rank }
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty() && self.free_rank == 0
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Product of the invariant factors; `None` for infinite groups.
    pub fn order(&self) -> Option<BigInt> {
        self.is_finite().then(|| self.invariant_factors.iter().product())
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "trivial");
        }
        let mut parts: Vec<String> = self.invariant_factors.iter().map(|d| format!("Z_{d}")).collect();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        write!(f, "{}", parts.join(" x "))
    }
}

/// Coordinates of `v` in the lattice basis given by the nonzero columns of a
/// column HNF, or `None` when `v` is not in the lattice.
fn hnf_coordinates(h: &IntMat, pivot_rows: &[usize], v: &[BigInt]) -> Option<Vec<BigInt>> {
    let mut residual = v.to_vec();
    let mut coords = Vec::with_capacity(pivot_rows.len());
    for (j, &r) in pivot_rows.iter().enumerate() {
        let pivot = &h[(r, j)];
        if !(&residual[r] % pivot).is_zero() {
            return None;
        }
        let c = &residual[r] / pivot;
        if !c.is_zero() {
            for (i, x) in residual.iter_mut().enumerate() {
                *x -= &c * &h[(i, j)];
            }
        }
        coords.push(c);
    }
    residual.iter().all(Zero::is_zero).then_some(coords)
}

/// The group `⟨ambient⟩ / ⟨sub⟩`, both given by generating rows.
///
/// The ambient rows need not be independent. A sublattice of lower rank
/// shows up as positive `free_rank`.
pub fn quotient_group(ambient: &IntMat, sub: &IntMat) -> Result<FiniteAbelianGroup> {
    if sub.cols() != ambient.cols() {
        return Err(Error::DimensionMismatch { expected: ambient.cols(), found: sub.cols() });
    }
    let h = hnf(&ambient.transpose());
    let basis = h.hnf;
    let k = h.rank;
    let mut coords = Vec::with_capacity(sub.rows());
    for i in 0..sub.rows() {
        coords.push(hnf_coordinates(&basis, &h.pivot_rows, sub.row(i)).ok_or(Error::NotInLattice)?);
    }
    let c = IntMat::from_rows(k, &coords);
    let factors = snf(&c).invariant_factors();
    let rank = factors.len();
    Ok(FiniteAbelianGroup::from_diagonal(&factors, k - rank))
}

/// Whether `v` lies in the integer row span of `generators`.
pub fn in_lattice(generators: &IntMat, v: &[BigInt]) -> bool {
    let h = hnf(&generators.transpose());
    hnf_coordinates(&h.hnf, &h.pivot_rows, v).is_some()
}
