//! Exact global optimization of polynomials over real algebraic sets.
//!
//! Given an objective `f` and constraints `F = (f_1, ..., f_s)` with rational
//! coefficients, [`optimize::optimize`] computes a certified representation of
//! `inf { f(x) : f_1(x) = ... = f_s(x) = 0, x real }`: a univariate annihilator
//! together with an isolating interval, a decision whether the infimum is
//! attained, and an exact minimizer encoding when it is.
//!
//! All arithmetic is exact rational arithmetic; no floating point is used
//! anywhere in the decision path.

pub mod arith;
pub mod geometry;
pub mod groebner;
pub mod mpoly;
pub mod optimize;
pub mod oracle;
pub mod problem;
pub mod report;
pub mod zerodim;

pub use arith::{AlgebraicNumber, Interval, Rational, UPoly};
