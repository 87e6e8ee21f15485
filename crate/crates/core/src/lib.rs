//! Exact intersection pairings on moduli spaces of rank-two stable bundles,
//! computed from symmetric-function generating series.
//!
//! The crate is organised bottom-up:
//!
//! * [`symcore`]: partitions and symmetric functions in the `m`, `e`, `h` bases
//! * [`series`]: truncated power series in `T` over the symmetric functions
//! * [`schur`]: skew Schur functions and Kostka numbers
//! * [`pairings`]: Chern number polynomials and pairings of cohomology classes
//! * [`mod2`]: parity tables and nilpotency certificates

pub mod error;
pub mod mod2;
pub mod pairings;
pub mod rational;
pub mod schur;
pub mod series;
pub mod symcore;

pub use rational::Rational;

/// Version string recorded in CLI output and cache keys.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
