//! Exact diagram calculus for interpolating (Deligne-type) categories.
//!
//! The crate is organized bottom-up:
//!
//! * [`partition`] — integer partitions, a×b-duality, Littlewood-Richardson
//!   coefficients, Specht (standard-tableau) dimensions.
//! * [`diagram`] — flavored diagrams (Brauer, walled Brauer, Temperley-Lieb,
//!   partition-category, periplectic): construction, enumeration, composition
//!   with loop counting, tensor, reflection, planarity, slice decomposition.
//! * [`linalg`] — exact sparse/dense row reduction over the rationals.
//! * [`algebra`] — linear combinations of diagrams: products with loop
//!   evaluation, Markov trace and Gram radicals, two-sided ideal closures,
//!   Jones-Wenzl elements.
//! * [`classifier`] — the combinatorial classification of thick tensor ideals:
//!   parameter tables, rectangle labels, membership predicates, Hom-dimension
//!   predictions and critical-rank kernel dimensions.
//! * [`oracle`] — brute-force Schur-Weyl oracle: exact matrix realizations of
//!   diagrams on tensor powers of (super) vector spaces, ranks and kernels of
//!   the comparison maps, periplectic structure constants.
//! * [`cache`], [`report`] — disk cache and report plumbing for the thin CLI.
//!
//! All arithmetic is exact ([`Scalar`] is an arbitrary-precision rational);
//! there is no floating point anywhere.

pub mod algebra;
pub mod cache;
pub mod classifier;
pub mod diagram;
pub mod linalg;
pub mod oracle;
pub mod partition;
pub mod report;

/// Exact scalar type used throughout: arbitrary-precision rational.
pub type Scalar = num_rational::BigRational;

/// Shorthand for constructing a `Scalar` from an integer.
pub fn scalar(n: i64) -> Scalar {
    Scalar::from_integer(n.into())
}

/// Errors shared across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("flavor mismatch: {0}")]
    FlavorMismatch(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("enumeration bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("memory budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("no solution: {0}")]
    NoSolution(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
