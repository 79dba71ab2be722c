//! Exact positivity invariants of divisors on surfaces and mechanical
//! hypothesis checks for Diophantine approximation theorems built on them.
//!
//! The crate is organized bottom-up:
//!
//! * [`algebra`]: rationals, sparse polynomials over ℚ, resultants,
//!   squarefree decomposition, interval square roots, exact linear algebra.
//! * [`surface`]: catalogued surfaces given by Picard lattice data,
//!   Zariski decomposition, volumes, point blowups.
//! * [`positivity`]: beta constants by exact volume integration, Seshadri
//!   constants, and certified lower bounds.
//! * [`local`]: intersection multiplicities of plane curves and curves on
//!   ℙ¹×ℙ¹, intersection profiles, vanishing orders.
//! * [`oracle`]: brute-force section spaces and filtrations giving finite-N
//!   beta approximants that are independent of the volume engine.
//! * [`heights`]: local Weil heights over ℚ under a fixed normalization.
//! * [`checkers`]: certificate-backed verdicts for theorem hypotheses.
//! * [`regress`]: the pinned regression table replayed by `dpt regress`.

pub mod algebra;
pub mod checkers;
pub mod error;
pub mod heights;
pub mod local;
pub mod oracle;
pub mod par;
pub mod positivity;
pub mod regress;
pub mod surface;

pub use algebra::{Polynomial, Rational, RationalInterval};
pub use error::{Error, Result};
