//! Zero-dimensional system solving: rational univariate representations,
//! radical extraction, annihilators of polynomial images, and real-point
//! extraction with interval coordinates.

mod image;
mod points;
mod radical;
mod rur;

pub use image::image_annihilator;
pub use points::{enclose_at_root, point_box, real_points, RealPoint};
pub use radical::zero_dim_radical;
pub use rur::{rur, RationalParametrization, RurError};
