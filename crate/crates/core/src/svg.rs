//! SVG rendering of a polygon over a cell set.

use std::fmt::Write as _;

use crate::{CellSet, Polygon, Rect};

/// Pixels per grid unit.
pub const PIXELS_PER_UNIT: f64 = 20.0;
/// Margin around the inputs, in grid units.
pub const MARGIN: f64 = 0.5;

/// Bounding box of both inputs inflated by [`MARGIN`], in grid coordinates.
pub fn view_box(p: &Polygon, q: &CellSet) -> Rect {
    let b = p.bbox();
    let b = match q.rect::<f64>() {
        Some(r) => b.union(&r),
        None => b,
    };
    b.inflate(MARGIN)
}

/// Renders filled cells, thin grid lines over the view and the polygon
/// outline on top. The y axis points up, so coordinates are written negated.
/// Output depends only on the inputs.
pub fn render_svg(p: &Polygon, q: &CellSet) -> String {
    let vb = view_box(p, q);
    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="{} {} {} {}">"#,
        vb.width() * PIXELS_PER_UNIT,
        vb.height() * PIXELS_PER_UNIT,
        vb.min.x,
        -vb.max.y,
        vb.width(),
        vb.height()
    )
    .unwrap();
    s.push_str(r##"<g fill="#9ecae1" stroke="#3182bd" stroke-width="0.02">"##);
    s.push('\n');
    for c in q.iter() {
        writeln!(
            s,
            r#"<rect x="{}" y="{}" width="1" height="1"/>"#,
            c.col,
            -(c.row + 1)
        )
        .unwrap();
    }
    s.push_str("</g>\n");
    s.push_str(r##"<g stroke="#bdbdbd" stroke-width="0.01">"##);
    s.push('\n');
    let (x0, x1) = (vb.min.x.ceil() as i64, vb.max.x.floor() as i64);
    let (y0, y1) = (vb.min.y.ceil() as i64, vb.max.y.floor() as i64);
    for x in x0..=x1 {
        writeln!(
            s,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            x, -vb.max.y, x, -vb.min.y
        )
        .unwrap();
    }
    for y in y0..=y1 {
        writeln!(
            s,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            vb.min.x, -y, vb.max.x, -y
        )
        .unwrap();
    }
    s.push_str("</g>\n");
    let pts: Vec<String> = p.vertices().iter().map(|v| format!("{},{}", v.x, -v.y)).collect();
    writeln!(
        s,
        r##"<polygon points="{}" fill="none" stroke="#d62728" stroke-width="0.05" stroke-linejoin="round"/>"##,
        pts.join(" ")
    )
    .unwrap();
    s.push_str("</svg>\n");
    s
}
