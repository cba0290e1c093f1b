use thiserror::Error;

/// Everything that can go wrong across the crate.
///
/// Messages are part of the CLI contract: they are printed verbatim on
/// input errors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero vector has no primitive representative")]
    ZeroVector,
    #[error("subgroup not contained in ambient lattice")]
    NotInLattice,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("polytope unbounded in characteristic hyperplane")]
    Unbounded,
    #[error("empty polytope")]
    Empty,
    #[error("point not in polytope")]
    PointNotInPolytope,
    #[error("{0}")]
    InvalidFacet(String),
    #[error("duplicate facet {0}")]
    DuplicateFacet(usize),
    #[error("redundant facet {0}: it touches no vertex")]
    RedundantFacet(usize),
    #[error("need at least {needed} facets, found {found}")]
    TooFewFacets { needed: usize, found: usize },
    #[error("ambient dimension must be at least 2")]
    AmbientTooSmall,

    #[error("degenerate facet under coning (facet {0})")]
    DegenerateFacet(usize),
    #[error("cone normal decomposition not integral (facet {0})")]
    NonIntegralConeNormal(usize),
    #[error("characteristic vector not in interior of dual cone")]
    NotInDualCone,

    #[error("vertex off characteristic hyperplane")]
    VertexOffHyperplane,
    #[error("polytope not simple")]
    NotSimple,
    #[error("polytope not full-dimensional in the characteristic hyperplane")]
    NotFullDimensional,
    #[error("characteristic vector not integral: a rational polytope needs the characteristic vector in the lattice of circle subgroups")]
    NonIntegralReeb,
    #[error("characteristic vector is zero")]
    ZeroReeb,
    #[error("holonomy and classification need an integral characteristic vector (datum is in irrational mode)")]
    IrrationalMode,
    #[error("not a face")]
    NotAFace,

    #[error("beta not surjective")]
    BetaNotSurjective,
    #[error("no positive solution for the deformation vector")]
    NoPositiveSolution,

    #[error("non-positive weight")]
    NonPositiveWeight,
    #[error("weights have gcd {0}; divide it out first")]
    WeightsNotNormalized(u64),
    #[error("empty support")]
    EmptySupport,
    #[error("zero point has no moment image")]
    ZeroPoint,
    #[error("scale factor must be positive")]
    NonPositiveScale,

    #[error("{0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
