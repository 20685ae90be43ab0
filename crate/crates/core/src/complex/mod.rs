//! Simplicial ground types: simplices, stacked balls, their boundary spheres and dual trees.

mod ball;
mod dual;
mod labeling;
mod simplex;
mod sphere;

pub use ball::{Attachment, StackedBall};
pub use dual::DualTree;
pub use labeling::canonical_block_labeling;
pub use simplex::{Simplex, Vertex};
pub use sphere::{FacetHypergraph, StackedSphere};
