//! Sparse multivariate polynomials over the rationals: monomial orders,
//! arithmetic, differentiation, Jacobian minors and linear coordinate changes.

mod coords;
mod jacobian;
mod order;
mod poly;
mod ring;

pub use coords::CoordinateChange;
pub use jacobian::{jacobian, minors, truncated_jacobian};
pub use order::MonomialOrder;
pub use poly::MPoly;
pub use ring::{Monomial, Ring};
