//! The top-level solver: assumption checks, random changes of coordinates
//! with genericity verification, extremum-candidate assembly, the infimum
//! search loop, and result packaging.

mod candidates;
mod coords;
mod findinf;
mod solve;

pub use candidates::{collect_candidates, CandidateSource, CandidateValue};
pub use coords::{minimizer_in_original_coordinates, random_coordinate_change, verify_genericity};
pub use findinf::find_infimum;
pub use solve::{
    check_assumptions, optimize, Diagnostics, Minimizer, OptimizationResult, Outcome,
    SolveConfig, SolveError, SolveMetadata,
};
