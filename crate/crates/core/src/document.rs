//! JSON documents for data, presentations and reports.
//!
//! Rationals travel as strings `"p/q"` so nothing is ever rounded. Integers
//! are written as JSON numbers when they fit in an `i64` and as decimal
//! strings otherwise; both spellings are accepted on input.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::contact::{validate_datum, ClassificationReport, ReebMode, Regularity, ToricContactDatum};
use crate::error::{Error, Result};
use crate::lattice::{format_rat, parse_rat, FiniteAbelianGroup, IntMat, Rat};
use crate::polytope::{LabeledFacet, LabeledPolytope, MomentCone};
use crate::reduction::{DiffSide, DiffSpace, SpherePresentation, VerificationReport};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Int(pub BigInt);

impl Serialize for Int {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(x) => s.serialize_i64(x),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Scalar {
    Signed(i64),
    Unsigned(u64),
    Text(String),
}

impl<'de> Deserialize<'de> for Int {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match Scalar::deserialize(d)? {
            Scalar::Signed(x) => Ok(Int(x.into())),
            Scalar::Unsigned(x) => Ok(Int(x.into())),
            Scalar::Text(s) => s
                .trim()
                .parse::<BigInt>()
                .map(Int)
                .map_err(|_| serde::de::Error::custom(format!("not an integer: {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatString(pub Rat);

impl Serialize for RatString {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rat(&self.0))
    }
}

impl<'de> Deserialize<'de> for RatString {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match Scalar::deserialize(d)? {
            Scalar::Signed(x) => Ok(RatString(Rat::from_integer(x.into()))),
            Scalar::Unsigned(x) => Ok(RatString(Rat::from_integer(x.into()))),
            Scalar::Text(s) => parse_rat(&s).map(RatString).map_err(serde::de::Error::custom),
        }
    }
}

fn ints(v: &[BigInt]) -> Vec<Int> {
    v.iter().cloned().map(Int).collect()
}

fn unints(v: Vec<Int>) -> Vec<BigInt> {
    v.into_iter().map(|x| x.0).collect()
}

fn rats(v: &[Rat]) -> Vec<RatString> {
    v.iter().cloned().map(RatString).collect()
}

fn zero_offset() -> RatString {
    RatString(Rat::zero())
}

fn rational_mode() -> ReebMode {
    ReebMode::Rational
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FacetDocument {
    pub normal: Vec<Int>,
    pub label: Int,
    #[serde(default = "zero_offset")]
    pub offset: RatString,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DatumDocument {
    pub ambient_dim: usize,
    pub facets: Vec<FacetDocument>,
    pub reeb: Vec<RatString>,
    #[serde(default = "rational_mode")]
    pub mode: ReebMode,
}

impl DatumDocument {
    pub fn from_datum(d: &ToricContactDatum) -> Self {
        DatumDocument {
            ambient_dim: d.ambient_dim(),
            facets: d
                .polytope()
                .facets()
                .iter()
                .map(|f| FacetDocument {
                    normal: ints(f.normal()),
                    label: Int(f.label().clone()),
                    offset: RatString(f.offset().clone()),
                })
                .collect(),
            reeb: rats(d.reeb()),
            mode: d.mode(),
        }
    }

    pub fn into_datum(self) -> Result<ToricContactDatum> {
        if self.reeb.len() != self.ambient_dim {
            return Err(Error::Parse(format!(
                "reeb has {} entries but ambient_dim is {}",
                self.reeb.len(),
                self.ambient_dim
            )));
        }
        let facets = self
            .facets
            .into_iter()
            .enumerate()
            .map(|(i, f)| {
                if f.normal.len() != self.ambient_dim {
                    return Err(Error::Parse(format!(
                        "facet {i}: normal has {} entries but ambient_dim is {}",
                        f.normal.len(),
                        self.ambient_dim
                    )));
                }
                LabeledFacet::new(unints(f.normal), f.label.0, f.offset.0)
                    .map_err(|e| Error::Parse(format!("facet {i}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let polytope = LabeledPolytope::new(self.ambient_dim, facets)?;
        validate_datum(polytope, self.reeb.into_iter().map(|r| r.0).collect(), self.mode)
    }
}

pub fn parse_datum(text: &str) -> Result<ToricContactDatum> {
    let doc: DatumDocument = serde_json::from_str(text).map_err(|e| Error::Parse(format!("syntax error: {e}")))?;
    doc.into_datum()
}

pub fn datum_to_json(d: &ToricContactDatum) -> String {
    to_json(&DatumDocument::from_datum(d))
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("documents are always serializable")
}

fn matrix_rows(m: &IntMat) -> Vec<Vec<Int>> {
    (0..m.rows()).map(|i| ints(m.row(i))).collect()
}

fn rows_matrix(name: &str, n: usize, rows: Vec<Vec<Int>>) -> Result<IntMat> {
    if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
        return Err(Error::Parse(format!("{name} row {i} has {} entries but N is {n}", r.len())));
    }
    let rows: Vec<Vec<BigInt>> = rows.into_iter().map(unints).collect();
    Ok(IntMat::from_rows(n, &rows))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationDocument {
    #[serde(rename = "N")]
    pub n: usize,
    pub beta: Vec<Vec<Int>>,
    pub weights: Vec<Vec<Int>>,
    pub deformation: Vec<RatString>,
}

impl PresentationDocument {
    pub fn from_presentation(p: &SpherePresentation) -> Self {
        PresentationDocument {
            n: p.n(),
            beta: matrix_rows(&p.beta),
            weights: matrix_rows(&p.weights),
            deformation: rats(&p.deformation),
        }
    }

    pub fn into_presentation(self) -> Result<SpherePresentation> {
        let beta = rows_matrix("beta", self.n, self.beta)?;
        let weights = rows_matrix("weights", self.n, self.weights)?;
        if self.deformation.len() != self.n {
            return Err(Error::Parse(format!(
                "deformation has {} entries but N is {}",
                self.deformation.len(),
                self.n
            )));
        }
        Ok(SpherePresentation { beta, weights, deformation: self.deformation.into_iter().map(|r| r.0).collect() })
    }
}

pub fn parse_presentation(text: &str) -> Result<SpherePresentation> {
    let doc: PresentationDocument =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("syntax error: {e}")))?;
    doc.into_presentation()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConeFacetDocument {
    pub normal: Vec<Int>,
    pub label: Int,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConeDocument {
    pub ambient_dim: usize,
    pub facets: Vec<ConeFacetDocument>,
    pub rays: Vec<Vec<Int>>,
    pub strongly_convex: bool,
}

impl ConeDocument {
    pub fn from_cone(c: &MomentCone) -> Self {
        ConeDocument {
            ambient_dim: c.ambient_dim(),
            facets: c
                .facets()
                .iter()
                .map(|f| ConeFacetDocument { normal: ints(&f.normal), label: Int(f.label.clone()) })
                .collect(),
            rays: c.extreme_rays().iter().map(|r| ints(r)).collect(),
            strongly_convex: c.is_strongly_convex(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupDocument {
    pub name: String,
    pub invariant_factors: Vec<Int>,
    pub free_rank: usize,
    pub order: Option<Int>,
}

impl GroupDocument {
    pub fn from_group(g: &FiniteAbelianGroup) -> Self {
        GroupDocument {
            name: g.to_string(),
            invariant_factors: ints(g.invariant_factors()),
            free_rank: g.free_rank(),
            order: g.order().map(Int),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FaceDocument {
    pub face: Vec<usize>,
    pub isotropy_basis: Vec<Vec<Int>>,
    pub holonomy: GroupDocument,
    pub sample_point: Vec<RatString>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationDocument {
    pub regularity: Regularity,
    pub sasakian_compatible: bool,
    pub faces: Vec<FaceDocument>,
}

impl ClassificationDocument {
    pub fn from_report(r: &ClassificationReport) -> Self {
        ClassificationDocument {
            regularity: r.regularity,
            sasakian_compatible: r.sasakian_compatible,
            faces: r
                .per_face
                .iter()
                .map(|f| FaceDocument {
                    face: f.face.iter().copied().collect(),
                    isotropy_basis: f.isotropy_basis.iter().map(|v| ints(v)).collect(),
                    holonomy: GroupDocument::from_group(&f.holonomy),
                    sample_point: rats(&f.sample_point),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexDiffDocument {
    pub space: &'static str,
    pub side: &'static str,
    pub coords: Vec<RatString>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StabilizerDocument {
    pub vertex: usize,
    pub active: Vec<usize>,
    pub finite: bool,
    pub group: GroupDocument,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationDocument {
    pub holds: bool,
    pub polytope_match: bool,
    pub smooth: bool,
    pub vertex_diff: Vec<VertexDiffDocument>,
    pub failures: Vec<String>,
    pub local_freeness: Vec<StabilizerDocument>,
}

impl VerificationDocument {
    pub fn from_report(r: &VerificationReport) -> Self {
        VerificationDocument {
            holds: r.holds(),
            polytope_match: r.polytope_match,
            smooth: r.smooth,
            vertex_diff: r
                .vertex_diff
                .iter()
                .map(|d| VertexDiffDocument {
                    space: match d.space {
                        DiffSpace::Polytope => "polytope",
                        DiffSpace::ZeroSet => "zero-set",
                    },
                    side: match d.side {
                        DiffSide::OnlyInDatum => "only-in-datum",
                        DiffSide::OnlyInPresentation => "only-in-presentation",
                    },
                    coords: rats(&d.coords),
                })
                .collect(),
            failures: r.failures.iter().map(ToString::to_string).collect(),
            local_freeness: r
                .local_freeness
                .iter()
                .map(|s| StabilizerDocument {
                    vertex: s.vertex,
                    active: s.active.iter().copied().collect(),
                    finite: s.is_finite(),
                    group: GroupDocument::from_group(&s.group),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexDocument {
    pub coords: Vec<RatString>,
    pub facets: Vec<usize>,
}

pub fn vertex_documents(d: &ToricContactDatum) -> Vec<VertexDocument> {
    d.vertices()
        .iter()
        .map(|v| VertexDocument { coords: rats(&v.coords), facets: v.facets.iter().copied().collect() })
        .collect()
}
