use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid root system {family}{rank}")]
    InvalidRootSystem { family: String, rank: usize },

    #[error("unknown family string `{0}`")]
    UnknownFamily(String),

    #[error("weight has {got} coordinates, expected {expected}")]
    RankMismatch { expected: usize, got: usize },

    #[error("{0:?} is not a root")]
    NotARoot(Vec<i64>),

    #[error("weight {0} is not dominant integral")]
    NotDominantIntegral(String),

    #[error("weight {0} is singular (some pairing of nu+rho vanishes)")]
    Singular(String),

    #[error("invalid Satake data: {0}")]
    InvalidSatake(String),

    #[error("weight {0} is not in the special lattice")]
    NotSpecial(String),

    #[error("region (lambda + R_J) cap Omega_J is unbounded for J = {0:?}")]
    UnboundedRegion(Vec<usize>),

    #[error("coweight is degenerate for this Weyl element: <w(alpha~_{0}), zeta> = 0")]
    DegenerateCoweight(usize),

    #[error("coweight is not dominant regular")]
    InvalidCoweight,

    #[error("index {index} out of range (restricted rank {rank})")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("denominator {0:?} is not a nonzero nonnegative combination of simple roots")]
    NotPositiveRoot(Vec<i64>),

    #[error("weight {weight} lies outside the reliable window (height {height} > cutoff {cutoff})")]
    OutsideWindow {
        weight: String,
        height: i64,
        cutoff: i64,
    },

    #[error("anchors of characters live in different root systems")]
    CharacterMismatch,

    #[error("unknown catalog entry `{0}`")]
    UnknownPair(String),

    #[error("invalid parameter for `{name}`: {reason}")]
    InvalidParameter { name: String, reason: String },

    #[error("pair-spec parse error: {0}")]
    PairSpec(String),
}

pub type Result<T> = std::result::Result<T, Error>;
