//! Combinatorial 1-dimensional oriented bordism categories and their
//! exact rational cocycles.
//!
//! The library models objects of the homotopy bordism category as ordered
//! lists of orientation signs, morphisms as arc matchings plus a circle
//! count, and provides:
//!
//! * composition with exact circle accounting, the reduced quotient, and
//!   chain tracing ([`bordism`], [`chain`]),
//! * the simplicial set of cyclic configurations with the averaged and
//!   reduced sign cocycles ([`cyclic_sign`]),
//! * the cocycles `alpha`, `beta_hat`, and `gamma_k` on bordism chains
//!   ([`cocycle`]),
//! * Connes' cyclic category, its embedding into bordisms, and Igusa's
//!   Chern cocycle ([`cyclic`]).
//!
//! All arithmetic is exact: cocycle values are arbitrary-precision
//! rationals, never floats.

pub mod bordism;
pub mod chain;
pub mod cocycle;
pub mod cyclic;
pub mod cyclic_sign;
pub mod json;

pub use bordism::{Bordism, BoundaryPoint, End, Sign, ZeroManifold};
pub use chain::{Chain, CircleTrace, FaceMode};
pub use cocycle::{alpha, beta_hat, circle_config, coboundary, gamma, kappa_coefficient};
pub use cyclic::CyclicMap;
pub use cyclic_sign::CyclicConfiguration;

/// Exact rational scalar used for all cocycle values.
pub type Rational = num::BigRational;

/// Convenience constructor for a [`Rational`] from machine integers.
pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("object mismatch: target of the first morphism differs from source of the second")]
    ObjectMismatch,
    #[error("invalid bordism: {0}")]
    InvalidBordism(String),
    #[error("malformed chain: {0}")]
    MalformedChain(String),
    #[error("index {index} out of range (limit {limit})")]
    IndexOutOfRange { index: usize, limit: usize },
    #[error("morphism is not reduced (has {0} circles)")]
    NotReduced(usize),
    #[error("chain has length {got}, expected {expected}")]
    ChainLength { expected: usize, got: usize },
    #[error("tuple positions must be pairwise distinct")]
    DuplicatePositions,
    #[error("tuple must have odd length")]
    EvenTuple,
    #[error("position {index} out of range for cyclic length {limit}")]
    PositionOutOfRange { index: usize, limit: usize },
    #[error("configuration has {got} label classes, expected {expected}")]
    BadLabelCount { expected: usize, got: usize },
    #[error("label {0} out of range")]
    LabelOutOfRange(usize),
    #[error("label {0} has no points")]
    EmptyLabelClass(usize),
    #[error("empty cyclic word")]
    EmptyWord,
    #[error("the two points coincide")]
    IdenticalPoints,
    #[error("values are not weakly monotone with span at most m")]
    NotMonotone,
    #[error("not an F1-morphism: {0}")]
    NotF1Morphism(String),
    #[error("cyclic map is not injective")]
    NotInjective,
    #[error("glued chain has {0} circles, expected exactly one")]
    NotOneCircle(usize),
    #[error("circle misses wall {0}")]
    MissesWall(usize),
    #[error("infeasible parameters: {0}")]
    Infeasible(String),
}

pub type Result<T> = std::result::Result<T, Error>;
