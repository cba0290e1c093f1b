use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::hrep::{Constraint, HalfSpaces};
use super::{LabeledFacet, LabeledPolytope};
use crate::error::{Error, Result};
use crate::lattice::{int_to_rat, linalg, rat_to_int, split_content, Rat};

/// Inward cone facet `⟨x, label·normal⟩ ≥ 0` with a primitive normal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConeFacet {
    pub normal: Vec<BigInt>,
    pub label: BigInt,
}

impl ConeFacet {
    pub fn scaled_normal(&self) -> Vec<BigInt> {
        self.normal.iter().map(|x| x * &self.label).collect()
    }

    /// Decomposes a nonzero integer vector as `label · primitive`.
    pub fn from_vector(v: &[BigInt]) -> Result<Self> {
        let (label, normal) = split_content(v)?;
        Ok(ConeFacet { normal, label })
    }
}

/// Homogeneous H-representation of a polyhedral cone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentCone {
    ambient_dim: usize,
    facets: Vec<ConeFacet>,
}

impl MomentCone {
    pub fn new(ambient_dim: usize, facets: Vec<ConeFacet>) -> Result<Self> {
        if let Some(f) = facets.iter().find(|f| f.normal.len() != ambient_dim) {
            return Err(Error::DimensionMismatch { expected: ambient_dim, found: f.normal.len() });
        }
        Ok(MomentCone { ambient_dim, facets })
    }

    /// The facet `⟨α, m p⟩ ≤ λ` of a slice at level `⟨α, ς⟩ = 1` becomes
    /// `⟨x, λς − m p⟩ ≥ 0` on the cone.
    pub(crate) fn over(polytope: &LabeledPolytope, reeb: &[BigInt]) -> Result<Self> {
        if reeb.len() != polytope.ambient_dim() {
            return Err(Error::DimensionMismatch { expected: polytope.ambient_dim(), found: reeb.len() });
        }
        let reeb = int_to_rat(reeb);
        let mut facets = Vec::with_capacity(polytope.len());
        for (i, f) in polytope.facets().iter().enumerate() {
            let y = int_to_rat(&f.scaled_normal());
            let v: Vec<Rat> = reeb.iter().zip(&y).map(|(s, y)| s * f.offset() - y).collect();
            if v.iter().all(Zero::is_zero) {
                return Err(Error::DegenerateFacet(i));
            }
            let v = rat_to_int(&v).ok_or(Error::NonIntegralConeNormal(i))?;
            facets.push(ConeFacet::from_vector(&v)?);
        }
        Ok(MomentCone { ambient_dim: polytope.ambient_dim(), facets })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn facets(&self) -> &[ConeFacet] {
        &self.facets
    }

    fn halfspaces(&self) -> HalfSpaces {
        HalfSpaces {
            dim: self.ambient_dim,
            equalities: Vec::new(),
            inequalities: self
                .facets
                .iter()
                .map(|f| Constraint {
                    coeffs: int_to_rat(&f.scaled_normal()).into_iter().map(|x| -x).collect(),
                    rhs: Rat::zero(),
                })
                .collect(),
        }
    }

    /// Contains no line.
    pub fn is_strongly_convex(&self) -> bool {
        self.halfspaces().lineality().is_empty()
    }

    /// Extreme rays of the cone modulo its lineality space, as primitive
    /// integer vectors in lexicographic order.
    pub fn extreme_rays(&self) -> Vec<Vec<BigInt>> {
        self.halfspaces().recession_rays()
    }

    pub fn is_full_dimensional(&self) -> bool {
        let h = self.halfspaces();
        let mut rows: Vec<Vec<Rat>> = h.lineality();
        rows.extend(self.extreme_rays().iter().map(|r| int_to_rat(r)));
        linalg::rank(&rows, self.ambient_dim) == self.ambient_dim
    }

    /// Whether `⟨x, v⟩ > 0` for every nonzero `x` in the cone.
    pub fn is_positive_on(&self, v: &[BigInt]) -> bool {
        if v.len() != self.ambient_dim || !self.is_strongly_convex() {
            return false;
        }
        let rays = self.extreme_rays();
        !rays.is_empty()
            && rays
                .iter()
                .all(|r| r.iter().zip(v).map(|(a, b)| a * b).sum::<BigInt>().is_positive())
    }

    /// Slices the cone at `⟨α, ς′⟩ = 1`. Each cone facet `(q̂, m̂)` becomes the
    /// polytope facet with normal `−q̂`, label `m̂` and offset zero.
    pub fn slice(&self, reeb: &[BigInt]) -> Result<LabeledPolytope> {
        if reeb.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, found: reeb.len() });
        }
        if !self.is_positive_on(reeb) {
            return Err(Error::NotInDualCone);
        }
        let facets = self
            .facets
            .iter()
            .map(|f| LabeledFacet::new(f.normal.iter().map(|x| -x).collect(), f.label.clone(), Rat::zero()))
            .collect::<Result<Vec<_>>>()?;
        LabeledPolytope::new(self.ambient_dim, facets)
    }
}
