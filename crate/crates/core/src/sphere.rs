//! Odd spheres `S^{2n+1} ⊂ C^{n+1}` with the deformed contact forms
//! `η_a = Σ(x_i dy_i − y_i dx_i) / Σ a_i(x_i² + y_i²)`.
//!
//! The Reeb field of `η_a` is `Σ a_i (x_i ∂_{y_i} − y_i ∂_{x_i})`, so the
//! characteristic vector is `a` itself and the moment polytope is the
//! weighted simplex `{r ≥ 0, Σ a_i r_i = 1}`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::contact::ToricContactDatum;
use crate::error::{Error, Result};
use crate::lattice::{common_denominator, rat, to_f64, Rat};
use crate::polytope::{LabeledFacet, LabeledPolytope};

/// Default tolerance for double-precision checks.
pub const DEFAULT_TOL: f64 = 1e-9;

const CHUNK: usize = 512;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightVector(Vec<u64>);

impl WeightVector {
    pub fn new(weights: Vec<u64>) -> Result<Self> {
        if weights.len() < 2 {
            return Err(Error::AmbientTooSmall);
        }
        if weights.contains(&0) {
            return Err(Error::NonPositiveWeight);
        }
        Ok(WeightVector(weights))
    }

    /// Clears denominators of positive rational weights. The result may
    /// have a nontrivial gcd; see [`WeightVector::normalized`].
    pub fn from_rationals(weights: &[Rat]) -> Result<Self> {
        use num_traits::{Signed, ToPrimitive};
        if weights.iter().any(|w| !w.is_positive()) {
            return Err(Error::NonPositiveWeight);
        }
        let den = Rat::from_integer(common_denominator(weights));
        let ints = weights
            .iter()
            .map(|w| (w * &den).to_integer().to_u64().ok_or_else(|| Error::Parse("weight too large".into())))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ints)
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn gcd(&self) -> u64 {
        self.0.iter().fold(0, |g, &a| g.gcd(&a))
    }

    pub fn normalized(&self) -> Self {
        let g = self.gcd();
        WeightVector(self.0.iter().map(|a| a / g).collect())
    }

    fn require_normalized(&self) -> Result<()> {
        match self.gcd() {
            1 => Ok(()),
            g => Err(Error::WeightsNotNormalized(g)),
        }
    }

    /// `gcd{a_j : j ≠ i}`: the order of the generic stabilizer of the Reeb
    /// circle on `{z_i = 0}`.
    pub fn complementary_gcd(&self, i: usize) -> u64 {
        self.0.iter().enumerate().filter(|&(j, _)| j != i).fold(0, |g, (_, &a)| g.gcd(&a))
    }
}

/// The weighted simplex with labels `m_i = gcd{a_j : j ≠ i}`.
pub fn weighted_simplex(a: &WeightVector) -> Result<ToricContactDatum> {
    a.require_normalized()?;
    let dim = a.len();
    let facets = (0..dim)
        .map(|i| {
            let mut p = vec![BigInt::from(0); dim];
            p[i] = BigInt::from(-1);
            LabeledFacet::new(p, BigInt::from(a.complementary_gcd(i)), rat(0))
        })
        .collect::<Result<Vec<_>>>()?;
    let reeb: Vec<BigInt> = a.0.iter().map(|&x| BigInt::from(x)).collect();
    ToricContactDatum::new(LabeledPolytope::new(dim, facets)?, &reeb)
}

/// `μ_i = (x_i² + y_i²) / Σ_j a_j (x_j² + y_j²)` for `z = (x_0, y_0, …, x_n, y_n)`.
pub fn moment_eval(a: &WeightVector, z: &[f64]) -> Result<Vec<f64>> {
    if z.len() != 2 * a.len() {
        return Err(Error::DimensionMismatch { expected: 2 * a.len(), found: z.len() });
    }
    let radii: Vec<f64> = z.chunks_exact(2).map(|c| c[0] * c[0] + c[1] * c[1]).collect();
    let weighted: f64 = radii.iter().zip(&a.0).map(|(r, &w)| r * w as f64).sum();
    if weighted == 0.0 {
        return Err(Error::ZeroPoint);
    }
    Ok(radii.into_iter().map(|r| r / weighted).collect())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleViolation {
    pub index: usize,
    pub facet_violation: f64,
    pub hyperplane_residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleReport {
    pub weights: Vec<u64>,
    pub count: usize,
    pub seed: u64,
    pub tol: f64,
    pub max_facet_violation: f64,
    pub max_hyperplane_residual: f64,
    pub violations: Vec<SampleViolation>,
}

impl SampleReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Draws `count` Gaussian points of `C^{n+1}`, maps them through the moment
/// map and checks each image against the weighted simplex's facets and
/// hyperplane. Chunk `k` uses ChaCha stream `k` of `seed`, so the result does
/// not depend on the thread count.
pub fn convexity_sample_check(a: &WeightVector, count: usize, seed: u64, tol: f64) -> Result<SampleReport> {
    let datum = weighted_simplex(a)?;
    let facets: Vec<(Vec<f64>, f64)> = datum
        .polytope()
        .facets()
        .iter()
        .map(|f| (f.scaled_normal().iter().map(|x| to_f64(&Rat::from_integer(x.clone()))).collect(), to_f64(f.offset())))
        .collect();
    let reeb: Vec<f64> = a.0.iter().map(|&x| x as f64).collect();
    let dim = 2 * a.len();

    let chunks = count.div_ceil(CHUNK);
    let per_chunk: Vec<Vec<(usize, f64, f64)>> = (0..chunks)
        .into_par_iter()
        .map(|k| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(k as u64);
            let start = k * CHUNK;
            let end = (start + CHUNK).min(count);
            let mut out = Vec::with_capacity(end - start);
            let mut z = vec![0.0f64; dim];
            for index in start..end {
                for x in z.iter_mut() {
                    *x = StandardNormal.sample(&mut rng);
                }
                let Ok(mu) = moment_eval(a, &z) else { continue };
                let facet = facets
                    .iter()
                    .map(|(y, lambda)| y.iter().zip(&mu).map(|(a, b)| a * b).sum::<f64>() - lambda)
                    .fold(0.0f64, f64::max);
                let residual = (reeb.iter().zip(&mu).map(|(a, b)| a * b).sum::<f64>() - 1.0).abs();
                out.push((index, facet, residual));
            }
            out
        })
        .collect();

    let mut report = SampleReport {
        weights: a.0.clone(),
        count,
        seed,
        tol,
        max_facet_violation: 0.0,
        max_hyperplane_residual: 0.0,
        violations: Vec::new(),
    };
    for (index, facet, residual) in per_chunk.into_iter().flatten() {
        report.max_facet_violation = report.max_facet_violation.max(facet);
        report.max_hyperplane_residual = report.max_hyperplane_residual.max(residual);
        if facet > tol || residual > tol {
            report.violations.push(SampleViolation { index, facet_violation: facet, hyperplane_residual: residual });
        }
    }
    Ok(report)
}

/// Leaf-holonomy order of Reeb orbits through points whose nonzero
/// coordinates are exactly `support`: the Reeb flow `z_j ↦ e^{i a_j t} z_j`
/// returns to such a point after `2π / gcd{a_j : j ∈ support}`, against a
/// generic period of `2π`.
pub fn reeb_orbit_order(a: &WeightVector, support: &BTreeSet<usize>) -> Result<u64> {
    a.require_normalized()?;
    if support.is_empty() {
        return Err(Error::EmptySupport);
    }
    if let Some(&i) = support.iter().find(|&&i| i >= a.len()) {
        return Err(Error::DimensionMismatch { expected: a.len(), found: i + 1 });
    }
    Ok(support.iter().fold(0u64, |g, &j| g.gcd(&a.0[j])))
}
