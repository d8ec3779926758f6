//! Grid polygons with bounded Fréchet distance for narrow-enough polygons.

mod construct;
mod visits;

pub use construct::{construct_frechet, degenerate_expand, FrechetBuild};
pub use visits::{remove_duplicates, trace_visits, Visit, VisitMapping};
