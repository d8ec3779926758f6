//! A few hand-digitized outlines for the stand-in corpus.

use crate::error::Result;
use crate::geom::{Point, Polygon};

const OUTLINES: &[(&str, &[(f64, f64)])] = &[
    (
        "island",
        &[
            (0.0, 2.1),
            (0.8, 0.9),
            (2.2, 0.4),
            (3.1, 1.2),
            (4.0, 0.2),
            (5.6, 0.0),
            (6.1, 1.4),
            (7.3, 1.9),
            (7.0, 3.2),
            (5.9, 3.6),
            (6.4, 4.8),
            (5.2, 5.5),
            (4.1, 4.6),
            (3.3, 5.9),
            (2.0, 5.2),
            (1.6, 3.9),
            (0.5, 3.6),
        ],
    ),
    (
        "peninsula",
        &[
            (0.0, 0.0),
            (6.0, 0.0),
            (6.0, 1.5),
            (3.6, 1.7),
            (3.4, 2.2),
            (4.1, 3.0),
            (4.4, 4.6),
            (4.0, 6.0),
            (3.5, 4.8),
            (3.0, 3.1),
            (2.2, 2.3),
            (1.1, 2.4),
            (0.2, 1.6),
        ],
    ),
    (
        "lake",
        &[
            (1.0, 0.0),
            (2.5, 0.6),
            (3.7, 0.1),
            (5.0, 0.9),
            (4.6, 2.0),
            (5.3, 3.1),
            (4.2, 3.5),
            (3.9, 4.7),
            (2.6, 4.1),
            (1.4, 4.9),
            (0.7, 3.7),
            (1.3, 2.6),
            (0.1, 1.5),
        ],
    ),
    (
        "fjord",
        &[
            (0.0, 0.0),
            (8.0, 0.0),
            (8.0, 5.0),
            (4.3, 5.0),
            (4.1, 2.2),
            (3.8, 2.1),
            (3.7, 4.0),
            (3.3, 4.1),
            (3.2, 1.4),
            (2.6, 1.3),
            (2.5, 5.0),
            (0.0, 5.0),
        ],
    ),
];

/// Names of the built-in outlines, in a fixed order.
pub fn outline_names() -> Vec<&'static str> {
    OUTLINES.iter().map(|(n, _)| *n).collect()
}

/// Built-in outline by name.
pub fn outline(name: &str) -> Option<Result<Polygon<f64>>> {
    OUTLINES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, pts)| Polygon::new(pts.iter().map(|&(x, y)| Point::new(x, y)).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn outlines_are_simple() {
        for n in outline_names() {
            let p = outline(n).unwrap().unwrap();
            assert!(p.area() > 1.0, "{n}");
        }
        assert!(outline("nope").is_none());
    }
}
