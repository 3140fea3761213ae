//! Exact-arithmetic toolkit for simultaneous Diophantine approximation of
//! rationals by rationals with smaller denominator.
//!
//! Everything here is computed over arbitrary-precision integers and
//! rationals; no floating point enters any result. The main objects are
//!
//! - [`lattice::Lattice`]: full-rank rational lattices with a canonical
//!   Hermite-normal-form fingerprint, including the approximation lattice
//!   `Λ(n)` of a target vector, its polar and its orthogonal section;
//! - [`bodies::Gauge`]: distance functions of bounded star bodies (sup and
//!   Euclidean norms, the generalized honeycomb, the two-parameter convex
//!   body `B₁(α,β)` and the per-target body derived from it, and symmetric
//!   convex polygons);
//! - [`minima`]: exact successive minima over any gauge/lattice pair,
//!   denominator-constrained approximation minima, and exhaustive ratio
//!   sweeps over all targets up to a height bound;
//! - [`construct`]: manufacture of primitive integer vectors `n(t)` whose
//!   scaled lattices converge to a prescribed rational lattice;
//! - [`decompose`]: brute-force optimal integer vector decompositions
//!   `n = u·p + v·q`, the associated height-product statistic, and certified
//!   lower bounds for it.
//!
//! The `starlat` binary exposes each operation as a subcommand; the crate's
//! `examples/` directory shows one runnable program per capability.

pub mod bodies;
pub mod cli;
pub mod construct;
pub mod decompose;
pub mod exact;
pub mod lattice;
pub mod minima;

pub use exact::{IntegerMatrix, Rational, RationalMatrix};

/// Library-wide error type.
///
/// `IdentityViolation` is reserved for exact mathematical identities that the
/// underlying results guarantee; seeing one means a bug, not bad input, and
/// the CLI maps it to a distinct exit code.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("singular matrix")]
    Singular,

    #[error("vector is not primitive (gcd {0})")]
    NotPrimitive(num_bigint::BigInt),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("region is unbounded")]
    Unbounded,

    #[error("search exhausted: {0}")]
    SearchExhausted(String),

    #[error("exact identity violated: {0}")]
    IdentityViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
