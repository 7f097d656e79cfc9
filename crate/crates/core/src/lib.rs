//! Exact solvers for the maximum weight convex polytope problem.
//!
//! Given weighted points in `R^d`, find a convex polytope whose enclosed
//! points have maximum total weight. The crate provides:
//!
//! * [`solver1d`]: maximum-sum interval over x-sorted weights, `O(n log n)`.
//! * [`solver2d`]: an `O(n^3)` dynamic program over a top concave chain and a
//!   bottom convex chain between the leftmost and rightmost polygon vertices.
//! * [`oracle`]: exhaustive subset search for any dimension, used as ground truth.
//! * [`reduction`]: maximum independent set to 4D instances on the moment
//!   curve, with decoding and a checker for the edge gadgets.
//! * [`generators`]: seeded uniform instances and the regular-polygon family
//!   on which polytopes with few vertices approximate poorly.
//!
//! All arithmetic is exact ([`geometry::Rational`]).

pub mod bench;
pub mod error;
pub mod generators;
pub mod geometry;
pub mod model;
pub mod oracle;
pub mod reduction;
pub mod solver1d;
pub mod solver2d;

pub use error::{Error, Result};
pub use geometry::{Point, Rational};
pub use model::{EmptyPolicy, Instance, Solution, WeightedPoint};

/// Solve with the specialized solver for the instance's dimension, falling
/// back to the exhaustive oracle above two dimensions.
pub fn solve_auto(instance: &Instance, policy: EmptyPolicy, oracle_limit: usize) -> Result<Solution> {
    match instance.dimension() {
        1 => solver1d::solve_1d(instance, policy),
        2 => solver2d::solve_2d(instance, policy),
        _ => oracle::solve_bruteforce(instance, policy, oracle_limit),
    }
}
