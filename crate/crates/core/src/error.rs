//! Crate-wide error type.

use crate::subset::Subset;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground set size {0} exceeds the supported bound of 16")]
    GroundSetTooLarge(usize),

    #[error("rank axiom violated: {0}")]
    AxiomViolation(AxiomViolation),

    #[error("basis list is empty")]
    EmptyBases,

    #[error("bases are not equicardinal: {0:?} vs {1:?}")]
    NonEquicardinalBases(Subset, Subset),

    #[error("element {element} out of range for ground set of size {n}")]
    OutOfRange { element: usize, n: usize },

    #[error("matroid has a loop; the operation requires a loopless matroid")]
    HasLoop,

    #[error("matroid has rank zero; no Chow ring data")]
    RankZero,

    #[error("product has degree {degree} above the top degree {top}")]
    DegreeOverflow { degree: usize, top: usize },

    #[error("element has degree {got}, expected pure degree {want}")]
    WrongDegree { got: usize, want: usize },

    #[error("flag is not a maximal chain of flats: {0}")]
    FlagNotMaximal(String),

    #[error("element {0} is a coloop; the operation requires a non-coloop")]
    IsColoop(usize),

    #[error("input weight is not balanced at cone {0}")]
    UnbalancedInput(String),

    #[error("balanced lift is not unique")]
    NonUniqueLift,

    #[error("no balanced lift exists")]
    NoBalancedLift,

    #[error("csm routes disagree at dimension {dim}, cone {cone}: degree route {degree_route} vs divisor route {divisor_route}")]
    RouteMismatch {
        dim: usize,
        cone: String,
        degree_route: i64,
        divisor_route: i64,
    },

    #[error("unknown identity name: {0}")]
    UnknownIdentity(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

/// First counterexample found by the rank-axiom validator.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AxiomViolation {
    #[error("rk({set:?}) = {rank} exceeds |{set:?}| = {size}")]
    Cardinality { set: Subset, rank: u8, size: usize },

    #[error("monotonicity fails: rk({a:?}) = {rank_a} > rk({b:?}) = {rank_b} with {a:?} ⊆ {b:?}")]
    Monotonicity {
        a: Subset,
        b: Subset,
        rank_a: u8,
        rank_b: u8,
    },

    #[error("submodularity fails for the pair {a:?}, {b:?}")]
    Submodularity { a: Subset, b: Subset },
}
