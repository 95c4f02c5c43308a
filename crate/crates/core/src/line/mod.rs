//! Exact solver for instances whose centers must lie on a given line.

mod feasibility;
mod intervals;
mod radii;

pub use feasibility::{feasibility_tables, feasible, feasible_bool, Color, ConstrainedSolution, FeasibilityTables};
pub use intervals::{
    coverage_at, half_width, next_index, point_interval, sorted_intervals, CandidateCenters, Coverage, Interval,
};
pub use radii::{
    candidate_radii, candidate_roots, is_exceptional, least_feasible, signatures, solve_constrained, CandidateRadii,
    Gap, PairSignature, Side,
};
