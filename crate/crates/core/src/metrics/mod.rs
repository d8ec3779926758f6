//! Certified similarity measurements between polygons and grid polygons.

mod frechet;
mod hausdorff;
pub mod index;
mod narrowness;
mod symdiff;

use serde::{Deserialize, Serialize};

pub use frechet::{frechet_closed, frechet_decide};
pub use hausdorff::{
    directed_segments, hausdorff_boundary, hausdorff_boundary_undirected, hausdorff_region, region_directed,
    region_within, segments_within, Region, RegionOracle,
};
pub use index::SegmentIndex;
pub use narrowness::{narrowness, narrowness_bruteforce, NarrownessWitness, WitnessPoint};
pub use symdiff::{symmetric_difference_area, symmetric_difference_normalized};

/// A measured distance with a certified absolute error bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DistanceResult<T> {
    pub value: T,
    pub error_bound: T,
}

impl<T> DistanceResult<T> {
    pub fn new(value: T, error_bound: T) -> Self {
        DistanceResult { value, error_bound }
    }
}
