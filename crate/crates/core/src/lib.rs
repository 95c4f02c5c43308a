//! Alpha-separated red-blue `(p+q)`-center clustering.
//!
//! Given points in `R^d`, budgets `p` and `q` and a separation `α >= 0`,
//! place `p` red and `q` blue centers so that every red center is at least
//! `α` from every blue center and the union of equal-radius balls around all
//! centers covers the points with the smallest possible radius.
//!
//! * [`approx`] solves the general problem with a bi-criteria guarantee:
//!   radius within `8r*`, separation relaxed to `3α/4`.
//! * [`line`] solves exactly when all centers must lie on a given line.
//! * [`oracle`] holds brute-force reference solvers used for validation.
//! * [`io`] and [`cli`] provide the JSON file formats and command line.

pub mod approx;
pub mod cli;
pub mod error;
pub mod geometry;
pub mod io;
pub mod line;
pub mod oracle;

pub use approx::{solve_approx, BranchOutcome};
pub use error::{Error, Result};
pub use geometry::{
    covering_radius, distance, to_x_axis, tolerance, verify, AxisFrame, Instance, Line, Point,
    Solution, VerificationReport,
};
pub use line::{candidate_radii, feasible, feasible_bool, solve_constrained, ConstrainedSolution};
