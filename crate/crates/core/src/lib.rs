//! Exact combinatorics of line-bundle cohomology on complete symmetric
//! varieties.
//!
//! The core is generic over an exact scalar (see [`Scalar`]); the aliases
//! below fix the default `Rational64`. Use the `Big*` aliases when
//! intermediate values may overflow 64 bits.

pub mod catalog;
pub mod charring;
pub mod checks;
pub mod cohomology;
pub mod error;
pub mod exact_rank2;
pub mod linalg;
pub mod pairspec;
pub mod polyhedron;
pub mod rootsys;
pub mod scalar;
pub mod sympair;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Default scalar.
pub type Q = num_rational::Rational64;
/// Arbitrary-precision scalar.
pub type BigQ = num_rational::BigRational;

pub type Weight = rootsys::Weight<Q>;
pub type RootSystem = rootsys::RootSystem<Q>;
pub type SymmetricPair = sympair::SymmetricPair<Q>;
pub type VirtualModule = cohomology::VirtualModule<Q>;
pub type CohomologyTable = cohomology::CohomologyTable<Q>;
pub type FormalCharacter = charring::FormalCharacter<Q>;
pub type CellLocalData = charring::CellLocalData<Q>;

pub type BigWeight = rootsys::Weight<BigQ>;
pub type BigRootSystem = rootsys::RootSystem<BigQ>;
pub type BigSymmetricPair = sympair::SymmetricPair<BigQ>;
