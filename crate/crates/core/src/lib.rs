//! Stacked balls and stacked spheres.
//!
//! * [`complex`]: simplices, stacked balls, boundary spheres, dual trees.
//! * [`constructions`]: gluing and the extremal families with large transversal number.
//! * [`solver`]: exact minimum transversal by branch and bound, plus greedy and brute force.
//! * [`linear37`]: transversals of size at most `ceil(3n/7)` for linear stacked 2-spheres.
//! * [`io`] and [`cli`]: instance files and the command-line front end.

pub mod cli;
pub mod complex;
pub mod constructions;
pub mod error;
pub mod io;
pub mod linear37;
pub mod solver;
pub mod verify;

pub use complex::{FacetHypergraph, Simplex, StackedBall, StackedSphere, Vertex};
pub use error::{Error, Result};
