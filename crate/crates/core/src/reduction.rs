//! Presenting a toric contact manifold of Reeb type as a torus reduction of
//! an odd sphere `S^{2N−1}` with a deformed contact form `η_a`.
//!
//! The weight map `β: Z^N → Z^{n+1}` sends `e_i` to the i-th inward cone
//! normal `m̂_i q̂_i`. Its kernel is the reduction torus `T^{N−n−1}` with
//! weight matrix `W`, and `a` is a positive solution of `β a = ς`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::contact::ToricContactDatum;
use crate::error::{Error, Result};
use crate::lattice::{
    dot_int, format_rat, int_to_rat, kernel_lattice_basis, linalg, quotient_group, rank, rat, snf,
    FiniteAbelianGroup, IntMat, Rat,
};
use crate::polytope::hrep::{Constraint, HalfSpaces};
use crate::polytope::{ConeFacet, LabeledFacet, LabeledPolytope};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpherePresentation {
    /// `(n+1) × N`, columns the inward cone normals.
    pub beta: IntMat,
    /// `(N−n−1) × N`, rows a basis of the kernel lattice of `beta`.
    pub weights: IntMat,
    pub deformation: Vec<Rat>,
}

impl SpherePresentation {
    /// Number of complex coordinates; the sphere is `S^{2N−1}`.
    pub fn n(&self) -> usize {
        self.beta.cols()
    }

    pub fn is_sphere(&self) -> bool {
        self.weights.rows() == 0
    }

    /// `β a`.
    pub fn reeb(&self) -> Vec<Rat> {
        (0..self.beta.rows()).map(|i| dot_int(&self.deformation, self.beta.row(i))).collect()
    }

    fn check_shapes(&self) -> Result<()> {
        let n = self.n();
        if self.weights.cols() != n {
            return Err(Error::DimensionMismatch { expected: n, found: self.weights.cols() });
        }
        if self.deformation.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: self.deformation.len() });
        }
        Ok(())
    }
}

pub fn build_beta(d: &ToricContactDatum) -> Result<IntMat> {
    let cone = d.polytope().cone_over(&d.integral_reeb()?)?;
    let cols: Vec<Vec<BigInt>> = cone.facets().iter().map(ConeFacet::scaled_normal).collect();
    let beta = IntMat::from_cols(d.ambient_dim(), &cols);
    if rank(&beta) != d.ambient_dim() {
        return Err(Error::BetaNotSurjective);
    }
    Ok(beta)
}

pub fn kernel_torus_weights(beta: &IntMat) -> Result<IntMat> {
    if rank(beta) != beta.rows() {
        return Err(Error::BetaNotSurjective);
    }
    Ok(kernel_lattice_basis(beta))
}

fn rows_as_rat(m: &IntMat) -> Vec<Vec<Rat>> {
    (0..m.rows()).map(|i| int_to_rat(m.row(i))).collect()
}

/// Among the solutions of `β a = ς`, the one maximizing `min_i a_i`, with
/// ties going to the lexicographically smallest `a`.
pub fn deformation_vector(d: &ToricContactDatum, beta: &IntMat) -> Result<Vec<Rat>> {
    if beta.rows() != d.ambient_dim() {
        return Err(Error::DimensionMismatch { expected: d.ambient_dim(), found: beta.rows() });
    }
    let n = beta.cols();
    let a0 = linalg::solve(&rows_as_rat(beta), d.reeb(), n).ok_or(Error::BetaNotSurjective)?;
    let w = kernel_torus_weights(beta)?;
    let k = w.rows();
    if k == 0 {
        return if a0.iter().all(Signed::is_positive) { Ok(a0) } else { Err(Error::NoPositiveSolution) };
    }

    // Variables (t_1..t_k, s): s − (Wᵀ t)_i ≤ a0_i.
    let inequalities = (0..n)
        .map(|i| {
            let mut coeffs: Vec<Rat> = (0..k).map(|r| Rat::from_integer(-&w[(r, i)])).collect();
            coeffs.push(Rat::one());
            Constraint { coeffs, rhs: a0[i].clone() }
        })
        .collect();
    let region = HalfSpaces { dim: k + 1, equalities: Vec::new(), inequalities };
    let candidates = region.vertices_unchecked().into_iter().map(|v| {
        let (t, s) = v.coords.split_at(k);
        let a: Vec<Rat> = (0..n)
            .map(|i| &a0[i] + (0..k).map(|r| &t[r] * Rat::from_integer(w[(r, i)].clone())).sum::<Rat>())
            .collect();
        (s[0].clone(), a)
    });
    let best = candidates.fold(None::<(Rat, Vec<Rat>)>, |best, (s, a)| match best {
        Some((bs, ba)) if bs > s || (bs == s && ba <= a) => Some((bs, ba)),
        _ => Some((s, a)),
    });
    match best {
        Some((s, a)) if s.is_positive() => Ok(a),
        _ => Err(Error::NoPositiveSolution),
    }
}

pub fn synthesize(d: &ToricContactDatum) -> Result<SpherePresentation> {
    let beta = build_beta(d)?;
    let weights = kernel_torus_weights(&beta)?;
    let deformation = deformation_vector(d, &beta)?;
    Ok(SpherePresentation { beta, weights, deformation })
}

/// The polytope `{α : ⟨α, β_i⟩ ≥ 0} ∩ {⟨α, β a⟩ = 1}` with labels read off
/// the columns of `β`, together with `ς = β a`.
pub fn reduced_polytope(pres: &SpherePresentation) -> Result<(LabeledPolytope, Vec<Rat>)> {
    pres.check_shapes()?;
    let facets = pres
        .beta
        .col_vecs()
        .iter()
        .map(|c| {
            let f = ConeFacet::from_vector(c)?;
            LabeledFacet::new(f.normal.iter().map(|x| -x).collect(), f.label, Rat::zero())
        })
        .collect::<Result<Vec<_>>>()?;
    let polytope = LabeledPolytope::new(pres.beta.rows(), facets)?;
    Ok((polytope, pres.reeb()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum DiffSpace {
    /// Vertices of the polytope in the characteristic hyperplane.
    Polytope,
    /// Vertices of `{s ≥ 0, W s = 0, Σ a_j s_j = 1}` in `R^N`.
    ZeroSet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum DiffSide {
    OnlyInDatum,
    OnlyInPresentation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexDiff {
    pub space: DiffSpace,
    pub side: DiffSide,
    pub coords: Vec<Rat>,
}

impl fmt::Display for VertexDiff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let space = match self.space {
            DiffSpace::Polytope => "polytope",
            DiffSpace::ZeroSet => "zero set",
        };
        let side = match self.side {
            DiffSide::OnlyInDatum => "only in datum",
            DiffSide::OnlyInPresentation => "only in presentation",
        };
        let coords: Vec<String> = self.coords.iter().map(format_rat).collect();
        write!(f, "{space} vertex ({}) {side}", coords.join(", "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    BetaWeightsNonzero,
    ReebMismatch,
    NonPositiveDeformation(usize),
    WeightRowCount { expected: usize, found: usize },
    WeightsNotSaturated,
    BetaNotSurjective,
    FacetMismatch,
    ReducedPolytope(Error),
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::BetaWeightsNonzero => write!(f, "beta * weights^T is not zero"),
            Failure::ReebMismatch => write!(f, "beta * deformation differs from the characteristic vector"),
            Failure::NonPositiveDeformation(i) => write!(f, "deformation entry {i} is not positive"),
            Failure::WeightRowCount { expected, found } => {
                write!(f, "weight matrix has {found} rows, expected {expected}")
            }
            Failure::WeightsNotSaturated => write!(f, "weight rows do not span a saturated lattice"),
            Failure::BetaNotSurjective => write!(f, "beta not surjective"),
            Failure::FacetMismatch => write!(f, "cone facets differ from the datum"),
            Failure::ReducedPolytope(e) => write!(f, "reduced polytope: {e}"),
        }
    }
}

/// Stabilizer of the reduction torus at the points of the zero set lying
/// over one vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexStabilizer {
    pub vertex: usize,
    pub active: BTreeSet<usize>,
    pub group: FiniteAbelianGroup,
}

impl VertexStabilizer {
    pub fn is_finite(&self) -> bool {
        self.group.is_finite()
    }

    pub fn order(&self) -> Option<BigInt> {
        self.group.order()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub polytope_match: bool,
    pub vertex_diff: Vec<VertexDiff>,
    pub failures: Vec<Failure>,
    pub local_freeness: Vec<VertexStabilizer>,
    pub smooth: bool,
}

impl VerificationReport {
    pub fn locally_free(&self) -> bool {
        self.local_freeness.iter().all(VertexStabilizer::is_finite)
    }

    pub fn holds(&self) -> bool {
        self.polytope_match && self.vertex_diff.is_empty() && self.failures.is_empty() && self.locally_free()
    }
}

fn diff_sets(space: DiffSpace, datum: &BTreeSet<Vec<Rat>>, pres: &BTreeSet<Vec<Rat>>, out: &mut Vec<VertexDiff>) {
    for coords in datum.difference(pres) {
        out.push(VertexDiff { space, side: DiffSide::OnlyInDatum, coords: coords.clone() });
    }
    for coords in pres.difference(datum) {
        out.push(VertexDiff { space, side: DiffSide::OnlyInPresentation, coords: coords.clone() });
    }
}

fn zero_set_vertices(pres: &SpherePresentation) -> BTreeSet<Vec<Rat>> {
    let n = pres.n();
    let mut equalities: Vec<Constraint> = rows_as_rat(&pres.weights)
        .into_iter()
        .map(|coeffs| Constraint { coeffs, rhs: Rat::zero() })
        .collect();
    equalities.push(Constraint { coeffs: pres.deformation.clone(), rhs: Rat::one() });
    let inequalities = (0..n)
        .map(|i| {
            let mut coeffs = vec![Rat::zero(); n];
            coeffs[i] = rat(-1);
            Constraint { coeffs, rhs: Rat::zero() }
        })
        .collect();
    HalfSpaces { dim: n, equalities, inequalities }
        .vertices_unchecked()
        .into_iter()
        .map(|v| v.coords)
        .collect()
}

fn stabilizer(weights: &IntMat, active: &BTreeSet<usize>) -> FiniteAbelianGroup {
    let k = weights.rows();
    if k == 0 {
        return FiniteAbelianGroup::trivial();
    }
    let free: Vec<usize> = (0..weights.cols()).filter(|j| !active.contains(j)).collect();
    let sub = weights.select_cols(&free).transpose();
    quotient_group(&IntMat::identity(k), &sub).expect("every integer vector lies in Z^k")
}

fn is_saturated(weights: &IntMat) -> bool {
    snf(weights).invariant_factors().iter().all(One::is_one)
}

/// Checks that `pres` reduces to exactly the datum `d`.
///
/// Shape errors are returned as `Err`. Everything else, including a
/// presentation that violates its own invariants, is recorded in the report.
pub fn verify_presentation(pres: &SpherePresentation, d: &ToricContactDatum) -> Result<VerificationReport> {
    if pres.beta.rows() != d.ambient_dim() {
        return Err(Error::DimensionMismatch { expected: d.ambient_dim(), found: pres.beta.rows() });
    }
    pres.check_shapes()?;
    let n = pres.n();
    let mut failures = Vec::new();

    if !pres.beta.mul(&pres.weights.transpose()).is_zero() {
        failures.push(Failure::BetaWeightsNonzero);
    }
    if pres.reeb() != d.reeb() {
        failures.push(Failure::ReebMismatch);
    }
    for (i, a) in pres.deformation.iter().enumerate() {
        if !a.is_positive() {
            failures.push(Failure::NonPositiveDeformation(i));
        }
    }
    let beta_rank = rank(&pres.beta);
    if beta_rank != d.ambient_dim() {
        failures.push(Failure::BetaNotSurjective);
    }
    let expected_rows = n.saturating_sub(beta_rank);
    if pres.weights.rows() != expected_rows {
        failures.push(Failure::WeightRowCount { expected: expected_rows, found: pres.weights.rows() });
    }
    if !is_saturated(&pres.weights) {
        failures.push(Failure::WeightsNotSaturated);
    }

    let datum_vertices: BTreeSet<Vec<Rat>> = d.vertices().iter().map(|v| v.coords.clone()).collect();
    let mut vertex_diff = Vec::new();
    let mut polytope_match = false;
    match reduced_polytope(pres).and_then(|(p, reeb)| Ok((p.vertices(&reeb)?, p, reeb))) {
        Ok((vertices, polytope, reeb)) => {
            let got: BTreeSet<Vec<Rat>> = vertices.into_iter().map(|v| v.coords).collect();
            diff_sets(DiffSpace::Polytope, &datum_vertices, &got, &mut vertex_diff);
            let facets_match = match (d.integral_reeb(), crate::lattice::rat_to_int(&reeb)) {
                (Ok(ours), Some(theirs)) => {
                    let mut a: Vec<ConeFacet> = d.polytope().cone_over(&ours)?.facets().to_vec();
                    let mut b: Vec<ConeFacet> = polytope.cone_over(&theirs)?.facets().to_vec();
                    a.sort();
                    b.sort();
                    a == b
                }
                _ => false,
            };
            if !facets_match {
                failures.push(Failure::FacetMismatch);
            }
            polytope_match = vertex_diff.is_empty() && facets_match;
        }
        Err(e) => failures.push(Failure::ReducedPolytope(e)),
    }

    let expected_zero_set: BTreeSet<Vec<Rat>> = d
        .vertices()
        .iter()
        .map(|v| (0..n).map(|j| dot_int(&v.coords, &pres.beta.col(j))).collect())
        .collect();
    diff_sets(DiffSpace::ZeroSet, &expected_zero_set, &zero_set_vertices(pres), &mut vertex_diff);

    let local_freeness: Vec<VertexStabilizer> = d
        .vertices()
        .par_iter()
        .enumerate()
        .map(|(i, v)| VertexStabilizer {
            vertex: i,
            active: v.facets.clone(),
            group: stabilizer(&pres.weights, &v.facets),
        })
        .collect();
    let smooth = local_freeness.iter().all(|s| s.group.is_trivial());

    Ok(VerificationReport { polytope_match, vertex_diff, failures, local_freeness, smooth })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::ratio;
    use crate::sphere::{weighted_simplex, WeightVector};

    fn sphere(a: &[u64]) -> ToricContactDatum {
        weighted_simplex(&WeightVector::new(a.to_vec()).unwrap()).unwrap()
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    pub(crate) fn cube() -> ToricContactDatum {
        let facets = vec![
            LabeledFacet::from_i64(&[0, -1, 0, 0], 1, rat(0)).unwrap(),
            LabeledFacet::from_i64(&[0, 0, -1, 0], 1, rat(0)).unwrap(),
            LabeledFacet::from_i64(&[0, 0, 0, -1], 1, rat(0)).unwrap(),
            LabeledFacet::from_i64(&[-1, 1, 0, 0], 1, rat(0)).unwrap(),
            LabeledFacet::from_i64(&[-1, 0, 1, 0], 1, rat(0)).unwrap(),
            LabeledFacet::from_i64(&[-1, 0, 0, 1], 2, rat(0)).unwrap(),
        ];
        ToricContactDatum::new(LabeledPolytope::new(4, facets).unwrap(), &big(&[1, 0, 0, 0])).unwrap()
    }

    #[test]
    fn standard_simplex_is_its_own_sphere() {
        let d = sphere(&[1, 1, 1]);
        let p = synthesize(&d).unwrap();
        assert_eq!(p.beta, IntMat::identity(3));
        assert_eq!(p.weights.rows(), 0);
        assert_eq!(p.deformation, vec![rat(1); 3]);
        let r = verify_presentation(&p, &d).unwrap();
        assert!(r.holds() && r.smooth, "{r:?}");
    }

    #[test]
    fn weighted_segment() {
        let d = sphere(&[1, 2]);
        let p = synthesize(&d).unwrap();
        assert_eq!(p.beta, IntMat::from_i64(&[&[2, 0], &[0, 1]]));
        assert_eq!(p.deformation, vec![ratio(1, 2), rat(2)]);
        let (poly, reeb) = reduced_polytope(&p).unwrap();
        assert_eq!(&poly, d.polytope());
        assert_eq!(reeb, vec![rat(1), rat(2)]);
        let r = verify_presentation(&p, &d).unwrap();
        assert!(r.holds() && r.smooth);
    }

    #[test]
    fn small_kernel() {
        let beta = IntMat::from_i64(&[&[1, 0, 1], &[0, 1, 1]]);
        assert_eq!(kernel_torus_weights(&beta).unwrap(), IntMat::from_i64(&[&[1, 1, -1]]));
        let degenerate = IntMat::from_i64(&[&[1, 1], &[1, 1]]);
        assert_eq!(kernel_torus_weights(&degenerate).unwrap_err(), Error::BetaNotSurjective);
    }

    #[test]
    fn cube_fixture() {
        let d = cube();
        let p = synthesize(&d).unwrap();
        assert_eq!((p.beta.rows(), p.beta.cols()), (4, 6));
        assert_eq!((p.weights.rows(), p.weights.cols()), (2, 6));
        assert!(p.beta.mul(&p.weights.transpose()).is_zero());
        let q = ratio(1, 4);
        assert_eq!(p.deformation, vec![q.clone(), q.clone(), ratio(1, 2), q.clone(), q.clone(), q]);
        let (poly, reeb) = reduced_polytope(&p).unwrap();
        assert_eq!(&poly, d.polytope());
        assert_eq!(reeb, d.reeb());
        let r = verify_presentation(&p, &d).unwrap();
        assert!(r.holds(), "{r:?}");
        assert_eq!(r.local_freeness.len(), 8);
        assert!(!r.smooth);
        let orders: BTreeSet<BigInt> = r.local_freeness.iter().map(|s| s.order().unwrap()).collect();
        assert_eq!(orders, BTreeSet::from([BigInt::from(1), BigInt::from(2)]));
    }

    #[test]
    fn tampering_is_detected() {
        let d = cube();
        let p = synthesize(&d).unwrap();
        let mut bad = p.clone();
        bad.weights[(0, 0)] += 1;
        let r = verify_presentation(&bad, &d).unwrap();
        assert!(!r.holds());
        assert!(r.failures.contains(&Failure::BetaWeightsNonzero));
        assert!(!r.vertex_diff.is_empty());

        let mut bad = p;
        bad.deformation[2] += rat(1);
        let r = verify_presentation(&bad, &d).unwrap();
        assert!(r.failures.contains(&Failure::ReebMismatch));
        assert!(!r.polytope_match);
    }

    #[test]
    fn shape_errors() {
        let d = sphere(&[1, 1, 1]);
        let mut p = synthesize(&d).unwrap();
        p.deformation.pop();
        assert!(matches!(verify_presentation(&p, &d), Err(Error::DimensionMismatch { .. })));
        let other = sphere(&[1, 1]);
        let p = synthesize(&other).unwrap();
        assert!(matches!(verify_presentation(&p, &d), Err(Error::DimensionMismatch { .. })));
    }
}
