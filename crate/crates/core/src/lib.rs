//! Maps simple polygons onto simple grid polygons with guaranteed Hausdorff
//! distance, and under a narrowness assumption, guaranteed Fréchet distance.
//!
//! The geometric core is generic over [`Scalar`] (`f32` or `f64`); the type
//! aliases at the crate root fix it to `f64`, which is what the experiment
//! harness and the CLI use.

// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod experiment;
pub mod fixtures;
pub mod frechet;
pub mod geom;
pub mod grid;
pub mod hausdorff;
pub mod io;
pub mod metrics;
pub mod scalar;
pub mod svg;

pub use error::{Error, Result};
pub use grid::{Adjacency, Cell, CellSet, GridCycle, GridVertex};
pub use scalar::Scalar;

pub type Point = geom::Point<f64>;
pub type Rect = geom::Rect<f64>;
pub type Polygon = geom::Polygon<f64>;
pub type PathPosition = geom::PathPosition<f64>;
pub type DistanceResult = metrics::DistanceResult<f64>;
pub type CellClassification = hausdorff::CellClassification;
pub type HausdorffBuild = hausdorff::HausdorffBuild;
pub type FrechetBuild = frechet::FrechetBuild<f64>;
pub type VisitMapping = frechet::VisitMapping<f64>;
