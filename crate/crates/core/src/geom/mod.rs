//! Planar geometry kernel: points, rectangles, simple polygons.

mod point;
mod polygon;
pub mod simple;

pub use point::{closest_on_segment, dist_to_segment, orient, Point, Rect};
pub use polygon::{
    clip_to_rect, is_simple, point_in_polygon, signed_area, winding_number, Containment, PathPosition,
    Polygon,
};
