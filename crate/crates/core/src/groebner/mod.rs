//! Gröbner-basis engine and ideal-theoretic toolkit: reduction, Buchberger,
//! dimension, elimination, saturation and Noether-position testing.

pub(crate) mod engine;
mod elim;
pub(crate) mod fglm;
mod ideal;

pub use elim::{
    elimination_ideal, intersect, noether_position_check, noether_position_check_with_base,
    saturate, saturate_ideal,
};
pub use fglm::{minimal_polynomial, quotient_basis, LinearTrap, Quotient};
pub use ideal::{basis_is_zero_dimensional, monic_basis, normal_form, Ideal};
