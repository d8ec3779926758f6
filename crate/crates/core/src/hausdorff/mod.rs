//! Grid polygons with bounded Hausdorff distance to a simple polygon.

mod build;
mod classify;
mod post;
mod trace;

pub use build::{
    build_q1_q2, build_q3, build_q4, construct_from_classification, construct_hausdorff, HausdorffBuild,
    Q4Strategy, Stage,
};
pub use classify::{classify_cells, CellClassification};
pub use post::{postprocess, PostprocessConfig};
pub use trace::trace_classify_cells;
