//! Exact computation of equivariant Chow rings, strong cycles, and
//! good-moduli-space pushforwards for torus quotient stacks.
//!
//! Everything here is exact: unbounded integers for lattice work,
//! rationals for cone/polytope feasibility, per-degree integer lattice
//! reduction for the graded rings. No floating point anywhere.

pub mod cones;
pub mod lattice;
pub mod matrix;
pub mod polytope;
pub mod rational;
pub mod reichstein;
pub mod report;
pub mod scenario;
pub mod space_chow;
pub mod stack_chow;
pub mod strata;
pub mod strong;

use thiserror::Error;

/// Errors surfaced by the library. Input problems carry positional
/// diagnostics where the scenario parser can provide them.
#[derive(Debug, Error)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("polytope is unbounded")]
    Unbounded,

    #[error("polytope is empty")]
    EmptyPolytope,

    #[error("polytope is degenerate (not full-dimensional in its affine hull)")]
    DegeneratePolytope,

    #[error("vector lies outside the cone")]
    OutsideCone,

    #[error("presentation has no character data")]
    MissingCharacter,

    #[error("presentation has no excised data")]
    MissingExcised,

    #[error("character and excised data are inconsistent: {0}")]
    Inconsistent(String),

    #[error("slice is empty")]
    EmptySlice,

    #[error("slice does not meet the open set: {0}")]
    ExcisedSlice(String),

    #[error("support is unstable: {0}")]
    UnstableSupport(String),

    #[error("semistable locus is empty")]
    EmptySemistable,

    #[error("presentation is not properly stable")]
    NotProperlyStable,

    #[error("presentation is already Deligne-Mumford")]
    AlreadyDeligneMumford,

    #[error("stack classes belong to different rings")]
    RingMismatch,

    #[error("class has no slice decomposition in degree {0}")]
    NoSliceDecomposition(usize),

    #[error("pullback is not well defined: {0}")]
    PullbackNotWellDefined(String),

    #[error("fan is not a refinement: {0}")]
    NotRefinement(String),

    #[error("piecewise-linear function is not Cartier on cone {0}")]
    NotCartier(usize),

    #[error("cycle dimensions disagree: {0}")]
    CycleDimension(String),

    #[error("infinite generic stabilizer; cycle not eligible for pushforward")]
    InfiniteStabilizer,
}

pub type Result<T> = std::result::Result<T, Error>;
