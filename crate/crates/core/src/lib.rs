//! Toric contact manifolds of Reeb type, computed exactly.
//!
//! A compact toric contact manifold of Reeb type is determined by a labeled
//! rational polytope sitting in the hyperplane `⟨α, ς⟩ = 1` cut out by its
//! characteristic vector `ς`. This crate validates such data, computes
//! isotropy and leaf holonomy at every face, moves between polytopes and
//! their moment cones, and presents each datum as a torus reduction of an
//! odd sphere with a deformed contact form.
//!
//! All arithmetic is over arbitrary-precision integers and rationals. The
//! only floating point lives in [`sphere`], which samples explicit moment
//! maps.

pub mod cli;
pub mod contact;
pub mod document;
pub mod error;
pub mod lattice;
pub mod polytope;
pub mod reduction;
pub mod sphere;

pub use contact::{validate_datum, ClassificationReport, ReebMode, Regularity, ToricContactDatum};
pub use error::{Error, Result};
pub use reduction::{synthesize, verify_presentation, SpherePresentation, VerificationReport};
