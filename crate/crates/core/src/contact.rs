//! Toric contact data `(Δ, ς)` and their combinatorial invariants.
//!
//! Leaf holonomy is computed on the leaf space side: the torus acting there
//! is `T/S¹_ς`, whose lattice is `Z^{n+1}/Z·ς₀` with `ς₀` the primitive
//! vector along ς. Facet normals are projected into that quotient, the
//! isotropy lattice at a face is the saturation of the projected normals,
//! and the holonomy group is that lattice modulo the span of
//! `m_i · primitive(projected p_i)`.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{
    dot, int_to_rat, linalg, primitive, quotient_group, rat_to_int, saturate, unimodular_sending_to_e0,
    FiniteAbelianGroup, IntMat, Rat,
};
use crate::polytope::{LabeledPolytope, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReebMode {
    /// ς must be integral; the polytope is rational.
    Rational,
    /// ς may be any nonzero rational vector; geometry only.
    Irrational,
}

/// A validated labeled polytope together with its characteristic vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToricContactDatum {
    polytope: LabeledPolytope,
    reeb: Vec<Rat>,
    mode: ReebMode,
    vertices: Vec<Vertex>,
}

/// Checks everything a datum promises: compact, simple, full-dimensional in
/// the hyperplane, every vertex on `⟨α, ς⟩ = 1`, no redundant facets, and
/// an integral ς in rational mode.
pub fn validate_datum(polytope: LabeledPolytope, reeb: Vec<Rat>, mode: ReebMode) -> Result<ToricContactDatum> {
    if reeb.len() != polytope.ambient_dim() {
        return Err(Error::DimensionMismatch { expected: polytope.ambient_dim(), found: reeb.len() });
    }
    if mode == ReebMode::Rational && !polytope.is_rational(&reeb) {
        return Err(Error::NonIntegralReeb);
    }
    let vertices = polytope.vertices(&reeb)?;
    if vertices.iter().any(|v| dot(&v.coords, &reeb) != Rat::from_integer(1.into())) {
        return Err(Error::VertexOffHyperplane);
    }
    let n = polytope.dim();
    let base = &vertices[0].coords;
    let diffs: Vec<Vec<Rat>> = vertices[1..]
        .iter()
        .map(|v| v.coords.iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    if linalg::rank(&diffs, polytope.ambient_dim()) != n {
        return Err(Error::NotFullDimensional);
    }
    if vertices.iter().any(|v| v.facets.len() != n) {
        return Err(Error::NotSimple);
    }
    for i in 0..polytope.len() {
        if !vertices.iter().any(|v| v.facets.contains(&i)) {
            return Err(Error::RedundantFacet(i));
        }
    }
    Ok(ToricContactDatum { polytope, reeb, mode, vertices })
}

/// Invariants attached to one face of the polytope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceInvariants {
    /// Facets containing the face; empty for the whole polytope.
    pub face: BTreeSet<usize>,
    /// Primitive normals spanning the isotropy algebra.
    pub isotropy_basis: Vec<Vec<BigInt>>,
    pub holonomy: FiniteAbelianGroup,
    /// A point in the relative interior of the face.
    pub sample_point: Vec<Rat>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Regularity {
    Regular,
    QuasiRegular,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub regularity: Regularity,
    pub per_face: Vec<FaceInvariants>,
    /// Every compact toric contact manifold of Reeb type carries a
    /// compatible invariant Sasakian structure, so this is always true.
    pub sasakian_compatible: bool,
}

impl ClassificationReport {
    pub fn nontrivial_faces(&self) -> impl Iterator<Item = &FaceInvariants> {
        self.per_face.iter().filter(|f| !f.holonomy.is_trivial())
    }
}

/// Projection `Z^{n+1} → Z^{n+1}/Z·ς₀ ≅ Z^n`.
struct LeafSpaceLattice {
    transform: IntMat,
}

impl LeafSpaceLattice {
    fn new(reeb: &[BigInt]) -> Result<Self> {
        let reeb0 = primitive(reeb)?;
        Ok(LeafSpaceLattice { transform: unimodular_sending_to_e0(&reeb0)? })
    }

    fn project(&self, v: &[BigInt]) -> Vec<BigInt> {
        self.transform.mul_vec(v)[1..].to_vec()
    }
}

impl ToricContactDatum {
    /// Rational-mode datum from an integer characteristic vector.
    pub fn new(polytope: LabeledPolytope, reeb: &[BigInt]) -> Result<Self> {
        validate_datum(polytope, int_to_rat(reeb), ReebMode::Rational)
    }

    pub fn polytope(&self) -> &LabeledPolytope {
        &self.polytope
    }

    pub fn reeb(&self) -> &[Rat] {
        &self.reeb
    }

    pub fn mode(&self) -> ReebMode {
        self.mode
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn ambient_dim(&self) -> usize {
        self.polytope.ambient_dim()
    }

    /// Dimension `n` of the polytope (the manifold has dimension `2n+1`).
    pub fn dim(&self) -> usize {
        self.polytope.dim()
    }

    pub fn n_facets(&self) -> usize {
        self.polytope.len()
    }

    pub fn is_rational(&self) -> bool {
        rat_to_int(&self.reeb).is_some()
    }

    /// The integral characteristic vector; refused in irrational mode.
    pub fn integral_reeb(&self) -> Result<Vec<BigInt>> {
        match (self.mode, rat_to_int(&self.reeb)) {
            (ReebMode::Rational, Some(v)) => Ok(v),
            _ => Err(Error::IrrationalMode),
        }
    }

    /// Primitive normals of the facets through `point`.
    pub fn isotropy_algebra(&self, point: &[Rat]) -> Result<Vec<Vec<BigInt>>> {
        let face = self.polytope.faces_containing(&self.reeb, point)?;
        Ok(face.iter().map(|&i| self.polytope.facets()[i].normal().to_vec()).collect())
    }

    fn check_face(&self, face: &BTreeSet<usize>) -> Result<()> {
        if face.iter().any(|&i| i >= self.n_facets()) || !self.vertices.iter().any(|v| face.is_subset(&v.facets)) {
            return Err(Error::NotAFace);
        }
        Ok(())
    }

    /// Leaf holonomy group of points whose moment image lies in the relative
    /// interior of the face cut out by `face`.
    pub fn holonomy(&self, face: &BTreeSet<usize>) -> Result<FiniteAbelianGroup> {
        let reeb = self.integral_reeb()?;
        self.check_face(face)?;
        let lattice = LeafSpaceLattice::new(&reeb)?;
        self.holonomy_in(&lattice, face)
    }

    fn holonomy_in(&self, lattice: &LeafSpaceLattice, face: &BTreeSet<usize>) -> Result<FiniteAbelianGroup> {
        if face.is_empty() {
            return Ok(FiniteAbelianGroup::trivial());
        }
        let n = self.dim();
        let mut directions = Vec::with_capacity(face.len());
        let mut generators = Vec::with_capacity(face.len());
        for &i in face {
            let f = &self.polytope.facets()[i];
            let projected = lattice.project(f.normal());
            let dir = primitive(&projected).map_err(|_| Error::DegenerateFacet(i))?;
            generators.push(dir.iter().map(|x| x * f.label()).collect::<Vec<_>>());
            directions.push(dir);
        }
        let isotropy = saturate(&IntMat::from_rows(n, &directions));
        quotient_group(&isotropy, &IntMat::from_rows(n, &generators))
    }

    /// All faces as facet sets, from the whole polytope (empty set) down to
    /// the vertices, each with the indices of the vertices it contains.
    pub fn faces(&self) -> Vec<(BTreeSet<usize>, Vec<usize>)> {
        let mut faces: BTreeMap<(usize, BTreeSet<usize>), Vec<usize>> = BTreeMap::new();
        for v in &self.vertices {
            let active: Vec<usize> = v.facets.iter().copied().collect();
            for mask in 0u64..(1 << active.len()) {
                let subset: BTreeSet<usize> =
                    active.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &i)| i).collect();
                faces.entry((subset.len(), subset)).or_default();
            }
        }
        faces
            .into_keys()
            .map(|(_, face)| {
                let members = (0..self.vertices.len()).filter(|&k| face.is_subset(&self.vertices[k].facets)).collect();
                (face, members)
            })
            .collect()
    }

    fn barycenter(&self, members: &[usize]) -> Vec<Rat> {
        let count = Rat::from_integer(BigInt::from(members.len()));
        let mut sum = vec![Rat::zero(); self.ambient_dim()];
        for &k in members {
            for (s, x) in sum.iter_mut().zip(&self.vertices[k].coords) {
                *s += x;
            }
        }
        sum.into_iter().map(|s| s / &count).collect()
    }

    /// Walks the whole face lattice. Regular exactly when every holonomy
    /// group is trivial and every label is one.
    pub fn classify(&self) -> Result<ClassificationReport> {
        let reeb = self.integral_reeb()?;
        let lattice = LeafSpaceLattice::new(&reeb)?;
        let mut per_face = Vec::new();
        for (face, members) in self.faces() {
            let holonomy = self.holonomy_in(&lattice, &face)?;
            let isotropy_basis = face.iter().map(|&i| self.polytope.facets()[i].normal().to_vec()).collect();
            per_face.push(FaceInvariants { face, isotropy_basis, holonomy, sample_point: self.barycenter(&members) });
        }
        let labels_one = self.polytope.facets().iter().all(|f| f.label() == &BigInt::from(1));
        let regularity = if labels_one && per_face.iter().all(|f| f.holonomy.is_trivial()) {
            Regularity::Regular
        } else {
            Regularity::QuasiRegular
        };
        Ok(ClassificationReport { regularity, per_face, sasakian_compatible: true })
    }

    /// Re-slices the moment cone with another characteristic vector. Each
    /// facet keeps the label of its cone facet.
    pub fn perturb_reeb(&self, reeb: &[BigInt]) -> Result<ToricContactDatum> {
        let cone = self.polytope.cone_over(&self.integral_reeb()?)?;
        let sliced = cone.slice(reeb)?;
        validate_datum(sliced, int_to_rat(reeb), ReebMode::Rational)
    }

    /// Rescales the contact form by a positive constant: offsets scale by
    /// `c` and ς by `1/c`. Non-integral results come back in irrational mode.
    pub fn rescale(&self, c: &Rat) -> Result<ToricContactDatum> {
        if !c.is_positive() {
            return Err(Error::NonPositiveScale);
        }
        let polytope = self.polytope.scale_offsets(c);
        let reeb: Vec<Rat> = self.reeb.iter().map(|x| x / c).collect();
        let mode = if rat_to_int(&reeb).is_some() { ReebMode::Rational } else { ReebMode::Irrational };
        validate_datum(polytope, reeb, mode)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{rat, ratio};
    use crate::polytope::LabeledFacet;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn orthant(labels: &[u64]) -> LabeledPolytope {
        let dim = labels.len();
        let facets = (0..dim)
            .map(|i| {
                let mut p = vec![0i64; dim];
                p[i] = -1;
                LabeledFacet::from_i64(&p, labels[i], rat(0)).unwrap()
            })
            .collect();
        LabeledPolytope::new(dim, facets).unwrap()
    }

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    #[test]
    fn validates_examples() {
        let d = ToricContactDatum::new(orthant(&[1, 1, 1]), &big(&[1, 1, 1])).unwrap();
        assert_eq!(d.vertices().len(), 3);
        let d = ToricContactDatum::new(orthant(&[2, 1]), &big(&[1, 2])).unwrap();
        assert_eq!(d.vertices().len(), 2);
        let err = validate_datum(orthant(&[1, 1, 1]), vec![rat(1), ratio(3, 2), rat(1)], ReebMode::Rational).unwrap_err();
        assert_eq!(err, Error::NonIntegralReeb);
        let ok = validate_datum(orthant(&[1, 1, 1]), vec![rat(1), ratio(3, 2), rat(1)], ReebMode::Irrational).unwrap();
        assert_eq!(ok.vertices()[0].coords, vec![rat(0), rat(0), rat(1)]);
        assert_eq!(ok.holonomy(&set(&[0])).unwrap_err(), Error::IrrationalMode);
    }

    #[test]
    fn rejects_bad_data() {
        // ς with a negative entry: the orthant slice is unbounded
        assert_eq!(ToricContactDatum::new(orthant(&[1, 1]), &big(&[1, -1])).unwrap_err(), Error::Unbounded);
        // redundant facet α_0 ≤ 5 never touches the simplex
        let mut facets = orthant(&[1, 1, 1]).facets().to_vec();
        facets.push(LabeledFacet::from_i64(&[1, 0, 0], 1, rat(5)).unwrap());
        let p = LabeledPolytope::new(3, facets).unwrap();
        assert_eq!(ToricContactDatum::new(p, &big(&[1, 1, 1])).unwrap_err(), Error::RedundantFacet(3));
    }

    #[test]
    fn isotropy_examples() {
        let d = ToricContactDatum::new(orthant(&[1, 1, 1]), &big(&[1, 1, 1])).unwrap();
        assert!(d.isotropy_algebra(&[ratio(1, 3), ratio(1, 3), ratio(1, 3)]).unwrap().is_empty());
        let iso = d.isotropy_algebra(&[rat(1), rat(0), rat(0)]).unwrap();
        assert_eq!(iso, vec![big(&[0, -1, 0]), big(&[0, 0, -1])]);
        assert_eq!(crate::lattice::rank(&IntMat::from_rows(3, &iso)), 2);
        assert_eq!(d.isotropy_algebra(&[rat(2), rat(0), rat(-1)]).unwrap_err(), Error::PointNotInPolytope);

        let seg = ToricContactDatum::new(orthant(&[2, 1]), &big(&[1, 2])).unwrap();
        assert_eq!(seg.isotropy_algebra(&[rat(0), ratio(1, 2)]).unwrap(), vec![big(&[-1, 0])]);
    }

    #[test]
    fn holonomy_examples() {
        let d = ToricContactDatum::new(orthant(&[1, 1, 1]), &big(&[1, 1, 1])).unwrap();
        for (face, _) in d.faces() {
            assert!(d.holonomy(&face).unwrap().is_trivial());
        }
        let seg = ToricContactDatum::new(orthant(&[2, 1]), &big(&[1, 2])).unwrap();
        assert_eq!(seg.holonomy(&set(&[0])).unwrap(), FiniteAbelianGroup::cyclic(2));
        assert!(seg.holonomy(&set(&[1])).unwrap().is_trivial());
        assert_eq!(seg.holonomy(&set(&[0, 1])).unwrap_err(), Error::NotAFace);
        assert_eq!(seg.holonomy(&set(&[7])).unwrap_err(), Error::NotAFace);
    }

    #[test]
    fn non_unimodular_vertex() {
        // triangle in α_2 = 1 with normals (1,0), (1,2), (−1,−1); the first
        // two meet at a vertex with index-2 normal lattice
        let facets = vec![
            LabeledFacet::from_i64(&[1, 0, 0], 1, rat(0)).unwrap(),
            LabeledFacet::from_i64(&[1, 2, 0], 1, rat(0)).unwrap(),
            LabeledFacet::from_i64(&[-1, -1, 0], 1, rat(1)).unwrap(),
        ];
        let d = ToricContactDatum::new(LabeledPolytope::new(3, facets).unwrap(), &big(&[0, 0, 1])).unwrap();
        assert_eq!(d.holonomy(&set(&[0, 1])).unwrap(), FiniteAbelianGroup::cyclic(2));
        assert!(d.holonomy(&set(&[0, 2])).unwrap().is_trivial());
        assert_eq!(d.classify().unwrap().regularity, Regularity::QuasiRegular);
    }

    #[test]
    fn classify_examples() {
        let d = ToricContactDatum::new(orthant(&[1, 1, 1]), &big(&[1, 1, 1])).unwrap();
        let r = d.classify().unwrap();
        assert_eq!(r.regularity, Regularity::Regular);
        assert_eq!(r.per_face.len(), 7);
        assert!(r.sasakian_compatible);
        assert!(r.per_face[0].face.is_empty());
        assert!(r.per_face[0].isotropy_basis.is_empty());

        let seg = ToricContactDatum::new(orthant(&[2, 1]), &big(&[1, 2])).unwrap();
        let r = seg.classify().unwrap();
        assert_eq!(r.regularity, Regularity::QuasiRegular);
        let bad: Vec<_> = r.nontrivial_faces().collect();
        assert_eq!(bad.len(), 1);
        assert_eq!(bad[0].face, set(&[0]));
        assert_eq!(bad[0].sample_point, vec![rat(0), ratio(1, 2)]);

        let w = ToricContactDatum::new(orthant(&[1, 1, 1]), &big(&[1, 1, 2])).unwrap();
        let coords: Vec<_> = w.vertices().iter().map(|v| v.coords.clone()).collect();
        assert!(coords.contains(&vec![rat(0), rat(0), ratio(1, 2)]));
        let r = w.classify().unwrap();
        assert_eq!(r.regularity, Regularity::QuasiRegular);
        let bad: Vec<_> = r.nontrivial_faces().map(|f| f.face.clone()).collect();
        assert_eq!(bad, vec![set(&[0, 1])]);
    }

    #[test]
    fn sample_points_lie_in_their_faces() {
        let d = ToricContactDatum::new(orthant(&[1, 1, 2]), &big(&[2, 2, 1])).unwrap();
        for f in d.classify().unwrap().per_face {
            assert_eq!(d.polytope().faces_containing(d.reeb(), &f.sample_point).unwrap(), f.face);
        }
    }

    #[test]
    fn perturbation() {
        let d = ToricContactDatum::new(orthant(&[1, 1, 1]), &big(&[1, 1, 1])).unwrap();
        let w = d.perturb_reeb(&big(&[1, 1, 2])).unwrap();
        assert_eq!(w.polytope(), &orthant(&[1, 1, 1]));
        assert_eq!(w.reeb(), &[rat(1), rat(1), rat(2)]);
        let back = w.perturb_reeb(&big(&[1, 1, 1])).unwrap();
        assert_eq!(back.vertices(), d.vertices());
        assert_eq!(d.perturb_reeb(&big(&[1, -1, 1])).unwrap_err(), Error::NotInDualCone);
    }

    #[test]
    fn rescaling() {
        let d = ToricContactDatum::new(orthant(&[1, 1, 1]), &big(&[1, 1, 1])).unwrap();
        assert_eq!(d.rescale(&rat(1)).unwrap(), d);
        let big2 = d.rescale(&rat(2)).unwrap();
        assert_eq!(big2.mode(), ReebMode::Irrational);
        assert_eq!(big2.reeb(), &[ratio(1, 2), ratio(1, 2), ratio(1, 2)]);
        assert_eq!(big2.vertices()[2].coords, vec![rat(2), rat(0), rat(0)]);
        assert_eq!(big2.rescale(&ratio(1, 2)).unwrap(), d);
        assert_eq!(d.rescale(&rat(0)).unwrap_err(), Error::NonPositiveScale);
        assert_eq!(d.rescale(&rat(-1)).unwrap_err(), Error::NonPositiveScale);

        let seg = ToricContactDatum::new(orthant(&[1, 1]), &big(&[2, 4])).unwrap();
        let half = seg.rescale(&ratio(1, 2)).unwrap();
        assert_eq!(half.mode(), ReebMode::Rational);
        assert_eq!(half.integral_reeb().unwrap(), big(&[4, 8]));
    }
}
