//! Test polygons and a brute-force oracle for tiny windows.

mod brute;
mod comb;
mod outlines;
mod random;
mod sliver;

pub use brute::{
    brute_force_best_grid_polygon, enumerate_grid_polygons, objective_value, Objective, MAX_WINDOW_CELLS,
};
pub use comb::{comb_polygon, comb_polygon_with, CombLayout, CombParams, COMB_PAD};
pub use outlines::{outline, outline_names};
pub use random::{random_simple_polygon, random_star_polygon};
pub use sliver::{diagonal_sliver, thin_sliver};
