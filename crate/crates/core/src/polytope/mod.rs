//! Labeled rational polytopes living in a characteristic hyperplane.
//!
//! A facet is stored as a primitive outward normal `p`, a positive integer
//! label `m` and a rational offset `λ`; the facet inequality is
//! `⟨α, m·p⟩ ≤ λ`. The polytope itself is the intersection of all facet
//! half-spaces with the hyperplane `⟨α, ς⟩ = 1`.

mod cone;
pub(crate) mod hrep;

pub use cone::{ConeFacet, MomentCone};

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::{gcd_all, int_to_rat, rat_to_int, Rat};
use hrep::{Constraint, HalfSpaces};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabeledFacet {
    normal: Vec<BigInt>,
    label: BigInt,
    offset: Rat,
}

fn format_vec(v: &[BigInt]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

impl LabeledFacet {
    /// Rejects zero or non-primitive normals and labels below one. The
    /// non-primitive message suggests the equivalent primitive form.
    pub fn new(normal: Vec<BigInt>, label: BigInt, offset: Rat) -> Result<Self> {
        if label < BigInt::one() {
            return Err(Error::InvalidFacet(format!("label must be a positive integer, got {label}")));
        }
        let g = gcd_all(&normal);
        if g.is_zero() {
            return Err(Error::InvalidFacet("zero normal".into()));
        }
        if !g.is_one() {
            let p: Vec<BigInt> = normal.iter().map(|x| x / &g).collect();
            return Err(Error::InvalidFacet(format!(
                "normal not primitive; write label {}, normal {}",
                &label * &g,
                format_vec(&p)
            )));
        }
        Ok(LabeledFacet { normal, label, offset })
    }

    pub fn from_i64(normal: &[i64], label: u64, offset: Rat) -> Result<Self> {
        Self::new(normal.iter().map(|&x| BigInt::from(x)).collect(), BigInt::from(label), offset)
    }

    pub fn normal(&self) -> &[BigInt] {
        &self.normal
    }

    pub fn label(&self) -> &BigInt {
        &self.label
    }

    pub fn offset(&self) -> &Rat {
        &self.offset
    }

    /// `m·p`, the vector paired against `α` in the facet inequality.
    pub fn scaled_normal(&self) -> Vec<BigInt> {
        self.normal.iter().map(|x| x * &self.label).collect()
    }

    fn constraint(&self) -> Constraint {
        Constraint { coeffs: int_to_rat(&self.scaled_normal()), rhs: self.offset.clone() }
    }

    /// `⟨α, m·p⟩ − λ`; non-positive on the polytope.
    pub fn slack(&self, point: &[Rat]) -> Rat {
        crate::lattice::dot_int(point, &self.scaled_normal()) - &self.offset
    }

    pub fn with_offset(&self, offset: Rat) -> Self {
        LabeledFacet { offset, ..self.clone() }
    }
}

/// A vertex with the indices of the facets active at it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vertex {
    pub coords: Vec<Rat>,
    pub facets: BTreeSet<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledPolytope {
    ambient_dim: usize,
    facets: Vec<LabeledFacet>,
}

impl LabeledPolytope {
    pub fn new(ambient_dim: usize, facets: Vec<LabeledFacet>) -> Result<Self> {
        if ambient_dim < 2 {
            return Err(Error::AmbientTooSmall);
        }
        if let Some(f) = facets.iter().find(|f| f.normal.len() != ambient_dim) {
            return Err(Error::DimensionMismatch { expected: ambient_dim, found: f.normal.len() });
        }
        if facets.len() < ambient_dim {
            return Err(Error::TooFewFacets { needed: ambient_dim, found: facets.len() });
        }
        for (i, f) in facets.iter().enumerate() {
            let ratio = &f.offset / Rat::from_integer(f.label.clone());
            let dup = facets[..i]
                .iter()
                .any(|g| g.normal == f.normal && &g.offset / Rat::from_integer(g.label.clone()) == ratio);
            if dup {
                return Err(Error::DuplicateFacet(i));
            }
        }
        Ok(LabeledPolytope { ambient_dim, facets })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Dimension of the polytope inside the hyperplane, `ambient_dim − 1`.
    pub fn dim(&self) -> usize {
        self.ambient_dim - 1
    }

    pub fn facets(&self) -> &[LabeledFacet] {
        &self.facets
    }

    pub fn len(&self) -> usize {
        self.facets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    fn check_len(&self, v: &[Rat]) -> Result<()> {
        if v.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, found: v.len() });
        }
        Ok(())
    }

    fn check_reeb(&self, reeb: &[Rat]) -> Result<()> {
        self.check_len(reeb)?;
        if reeb.iter().all(Zero::is_zero) {
            return Err(Error::ZeroReeb);
        }
        Ok(())
    }

    pub(crate) fn halfspaces(&self, reeb: &[Rat]) -> HalfSpaces {
        HalfSpaces {
            dim: self.ambient_dim,
            equalities: vec![Constraint { coeffs: reeb.to_vec(), rhs: Rat::one() }],
            inequalities: self.facets.iter().map(LabeledFacet::constraint).collect(),
        }
    }

    /// All vertices of the slice `⟨α, ς⟩ = 1`, sorted lexicographically.
    pub fn vertices(&self, reeb: &[Rat]) -> Result<Vec<Vertex>> {
        self.check_reeb(reeb)?;
        let raw = self.halfspaces(reeb).vertices()?;
        Ok(raw.into_iter().map(|v| Vertex { coords: v.coords, facets: v.active }).collect())
    }

    /// Exactly `n` facets at every vertex.
    pub fn is_simple(&self, reeb: &[Rat]) -> Result<bool> {
        let n = self.dim();
        Ok(self.vertices(reeb)?.iter().all(|v| v.facets.len() == n))
    }

    /// Facet data is integral by construction, so this is integrality of ς.
    pub fn is_rational(&self, reeb: &[Rat]) -> bool {
        rat_to_int(reeb).is_some()
    }

    pub fn contains(&self, reeb: &[Rat], point: &[Rat]) -> Result<bool> {
        self.check_len(reeb)?;
        self.check_len(point)?;
        Ok(self.halfspaces(reeb).satisfies(point))
    }

    /// Indices of the facets whose closure contains `point`.
    pub fn faces_containing(&self, reeb: &[Rat], point: &[Rat]) -> Result<BTreeSet<usize>> {
        if !self.contains(reeb, point)? {
            return Err(Error::PointNotInPolytope);
        }
        Ok(self
            .facets
            .iter()
            .enumerate()
            .filter(|(_, f)| f.slack(point).is_zero())
            .map(|(i, _)| i)
            .collect())
    }

    /// Cone over the polytope with apex at the origin.
    pub fn cone_over(&self, reeb: &[BigInt]) -> Result<MomentCone> {
        MomentCone::over(self, reeb)
    }

    /// Same facets with every offset multiplied by `c`.
    pub fn scale_offsets(&self, c: &Rat) -> LabeledPolytope {
        LabeledPolytope {
            ambient_dim: self.ambient_dim,
            facets: self.facets.iter().map(|f| f.with_offset(&f.offset * c)).collect(),
        }
    }

    pub fn has_zero_offsets(&self) -> bool {
        self.facets.iter().all(|f| f.offset.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{rat, ratio};

    pub(crate) fn orthant_facets(dim: usize) -> Vec<LabeledFacet> {
        (0..dim)
            .map(|i| {
                let mut p = vec![0i64; dim];
                p[i] = -1;
                LabeledFacet::from_i64(&p, 1, rat(0)).unwrap()
            })
            .collect()
    }

    fn rv(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn standard_simplex_vertices() {
        let p = LabeledPolytope::new(3, orthant_facets(3)).unwrap();
        let v = p.vertices(&rv(&[1, 1, 1])).unwrap();
        let coords: Vec<_> = v.iter().map(|v| v.coords.clone()).collect();
        assert_eq!(coords, vec![rv(&[0, 0, 1]), rv(&[0, 1, 0]), rv(&[1, 0, 0])]);
        assert_eq!(v[2].facets, BTreeSet::from([1, 2]));
        assert!(p.is_simple(&rv(&[1, 1, 1])).unwrap());
    }

    #[test]
    fn weighted_segment_vertices() {
        let p = LabeledPolytope::new(2, orthant_facets(2)).unwrap();
        let v = p.vertices(&rv(&[1, 2])).unwrap();
        let coords: Vec<_> = v.iter().map(|v| v.coords.clone()).collect();
        assert_eq!(coords, vec![vec![rat(0), ratio(1, 2)], rv(&[1, 0])]);
        assert!(p.is_simple(&rv(&[1, 2])).unwrap());
    }

    #[test]
    fn infeasible_region() {
        let facets = vec![
            LabeledFacet::from_i64(&[1, 0], 1, rat(-1)).unwrap(),
            LabeledFacet::from_i64(&[-1, 0], 1, rat(0)).unwrap(),
        ];
        let p = LabeledPolytope::new(2, facets).unwrap();
        assert_eq!(p.vertices(&rv(&[1, 1])).unwrap_err(), Error::Empty);
    }

    #[test]
    fn unbounded_slice() {
        // a single ray α = (1 − s, s)
        let facets = vec![
            LabeledFacet::from_i64(&[0, -1], 1, rat(0)).unwrap(),
            LabeledFacet::from_i64(&[1, 1], 1, rat(5)).unwrap(),
        ];
        let p = LabeledPolytope::new(2, facets).unwrap();
        assert_eq!(p.vertices(&rv(&[1, 1])).unwrap_err(), Error::Unbounded);
        assert_eq!(p.vertices(&rv(&[1, 1])).unwrap_err().to_string(), "polytope unbounded in characteristic hyperplane");
    }

    #[test]
    fn square_pyramid_is_not_simple() {
        // hyperplane α_0 = 1; base α_3 ≥ 0, four sides ±α_1 + α_3 ≤ 1, ±α_2 + α_3 ≤ 1
        let facets = vec![
            LabeledFacet::from_i64(&[0, 0, 0, -1], 1, rat(0)).unwrap(),
            LabeledFacet::from_i64(&[-1, 1, 0, 1], 1, rat(0)).unwrap(),
            LabeledFacet::from_i64(&[-1, -1, 0, 1], 1, rat(0)).unwrap(),
            LabeledFacet::from_i64(&[-1, 0, 1, 1], 1, rat(0)).unwrap(),
            LabeledFacet::from_i64(&[-1, 0, -1, 1], 1, rat(0)).unwrap(),
        ];
        let p = LabeledPolytope::new(4, facets).unwrap();
        let reeb = rv(&[1, 0, 0, 0]);
        let v = p.vertices(&reeb).unwrap();
        assert_eq!(v.len(), 5);
        let apex = v.iter().find(|v| v.coords == rv(&[1, 0, 0, 1])).unwrap();
        assert_eq!(apex.facets.len(), 4);
        assert!(!p.is_simple(&reeb).unwrap());
    }

    #[test]
    fn segment_is_simple() {
        let facets = vec![
            LabeledFacet::from_i64(&[1, 0], 1, rat(3)).unwrap(),
            LabeledFacet::from_i64(&[-1, 0], 1, rat(2)).unwrap(),
        ];
        let p = LabeledPolytope::new(2, facets).unwrap();
        assert!(p.is_simple(&rv(&[0, 1])).unwrap());
    }

    #[test]
    fn rationality() {
        let p = LabeledPolytope::new(3, orthant_facets(3)).unwrap();
        assert!(p.is_rational(&rv(&[1, 1, 1])));
        assert!(!p.is_rational(&[rat(1), ratio(3, 2), rat(1)]));
        let p = LabeledPolytope::new(2, orthant_facets(2)).unwrap();
        assert!(p.is_rational(&rv(&[2, 4])));
    }

    #[test]
    fn membership_and_active_facets() {
        let p = LabeledPolytope::new(3, orthant_facets(3)).unwrap();
        let reeb = rv(&[1, 1, 1]);
        let bary = vec![ratio(1, 3); 3];
        assert!(p.contains(&reeb, &bary).unwrap());
        assert!(p.faces_containing(&reeb, &bary).unwrap().is_empty());
        assert!(!p.contains(&reeb, &rv(&[2, -1, 0])).unwrap());
        assert_eq!(p.faces_containing(&reeb, &rv(&[2, -1, 0])).unwrap_err(), Error::PointNotInPolytope);
        assert_eq!(p.faces_containing(&reeb, &rv(&[1, 0, 0])).unwrap(), BTreeSet::from([1, 2]));
        let mid = vec![ratio(1, 2), ratio(1, 2), rat(0)];
        assert_eq!(p.faces_containing(&reeb, &mid).unwrap(), BTreeSet::from([2]));
        assert!(p.contains(&reeb, &[rat(1)]).is_err());

        let seg = LabeledPolytope::new(2, orthant_facets(2)).unwrap();
        assert!(seg.contains(&rv(&[1, 2]), &[rat(0), ratio(1, 2)]).unwrap());
    }

    #[test]
    fn facet_validation() {
        let err = LabeledFacet::from_i64(&[2, 4], 1, rat(0)).unwrap_err();
        assert_eq!(err.to_string(), "normal not primitive; write label 2, normal (1,2)");
        assert!(LabeledFacet::from_i64(&[1, 0], 0, rat(0)).is_err());
        assert!(LabeledFacet::from_i64(&[0, 0], 1, rat(0)).is_err());
    }

    #[test]
    fn polytope_validation() {
        assert_eq!(
            LabeledPolytope::new(3, orthant_facets(2)).unwrap_err(),
            Error::DimensionMismatch { expected: 3, found: 2 }
        );
        let mut f = orthant_facets(3);
        f.truncate(2);
        assert!(matches!(LabeledPolytope::new(3, f).unwrap_err(), Error::TooFewFacets { .. }));
        let mut f = orthant_facets(3);
        f.push(LabeledFacet::from_i64(&[-1, 0, 0], 2, rat(0)).unwrap());
        assert_eq!(LabeledPolytope::new(3, f).unwrap_err(), Error::DuplicateFacet(3));
    }
}
