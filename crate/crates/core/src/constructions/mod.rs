//! Gluing of stacked balls and generators for the extremal families.

mod families;
mod glue;
mod random;

pub use families::{
    general2_block, general2_leaf_vertex, general_block, general_leaf_vertex,
    general_lower_bound, general_lower_bound_2, general_phi, linear_lower_bound, path_ball,
    FamilyInstance, GENERAL2_PHI,
};
pub use glue::{chain_glue_general, chain_glue_linear, glue, GlueResult};
pub use random::{
    enumerate_linear_balls, linear_ball_from_choices, random_ball, random_linear_ball,
    LinearBalls,
};
