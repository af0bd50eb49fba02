//! Exact scalar arithmetic: arbitrary-precision rationals, univariate
//! polynomials, real root isolation and real algebraic numbers.

mod algebraic;
mod interval;
mod rational;
mod resultant;
mod sturm;
mod upoly;

pub use algebraic::{alg_compare, rational_below, rational_between, sign_at, AlgebraicNumber};
pub use interval::Interval;
pub use rational::{
    dyadic_in_open_interval, parse_rational, rat, rat_i, render_decimal, Rational,
};
pub use resultant::{bivariate_resultant, BiPoly};
pub use sturm::{real_root_isolation, SturmChain};
pub use upoly::UPoly;
