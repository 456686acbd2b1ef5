//! Exact polyhedral engine: rationals, simplex, hulls and lattice staircases.

pub mod lp;
pub mod polytope;
pub mod rational;
pub mod staircase;

pub use lp::{LinearProgram, LpOutcome, Relation};
pub use polytope::{feasible_box, hull_normalize, min_max_ratio, BoxMode, Polytope};
pub use rational::{format_rational, int, parse_rational, rat, Extended, Rational, RationalVector};
pub use staircase::{dominates, minimal_elements, staircase_antichain, StaircaseMode, StaircaseRegion};
