//! Geometric constructions over the constraint variety: singular and
//! critical loci, the leveled polar varieties and their saturated curves,
//! non-properness bounds, sample points and real-emptiness decisions.

mod nonproper;
mod problem;
mod samples;

pub use nonproper::set_of_non_properness;
pub use problem::{CurveWithFibration, GeometryError, ProblemGeometry};
pub use samples::{is_empty, real_sample_points, SampleError};
