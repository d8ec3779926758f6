use std::f64::consts::FRAC_PI_6;

use crate::error::{Error, Result};
use crate::geom::{Point, Polygon};

/// Strip of uniform `width` around a zigzag centerline of total `length`.
///
/// The centerline has `turns + 1` equal pieces alternating between +30° and
/// -30° from the x-axis; `turns = 0` gives a plain rectangle.
pub fn thin_sliver(length: f64, width: f64, turns: usize) -> Result<Polygon<f64>> {
    if !(width > 0.0) || !(length > 0.0) {
        return Err(Error::InvalidArgument(
            "sliver length and width must be positive".into(),
        ));
    }
    let pieces = turns + 1;
    let piece = length / pieces as f64;
    let dirs: Vec<Point<f64>> = (0..pieces)
        .map(|k| {
            let a = if turns == 0 {
                0.0
            } else if k % 2 == 0 {
                FRAC_PI_6
            } else {
                -FRAC_PI_6
            };
            Point::new(a.cos(), a.sin())
        })
        .collect();
    let mut center = vec![Point::new(0.0, 0.0)];
    for d in &dirs {
        let last = *center.last().unwrap();
        center.push(last + *d * piece);
    }
    let normal = |d: Point<f64>| Point::new(-d.y, d.x);
    let h = width / 2.0;
    // offset of each centerline vertex, mitered at the joints
    let offsets: Vec<Point<f64>> = (0..=pieces)
        .map(|i| {
            if i == 0 {
                normal(dirs[0]) * h
            } else if i == pieces {
                normal(dirs[pieces - 1]) * h
            } else {
                let (n0, n1) = (normal(dirs[i - 1]), normal(dirs[i]));
                let m = n0 + n1;
                let m = m * (1.0 / m.norm());
                m * (h / m.dot(n0))
            }
        })
        .collect();
    let mut ring: Vec<Point<f64>> = center.iter().zip(&offsets).map(|(&c, &o)| c - o).collect();
    ring.extend(center.iter().zip(&offsets).rev().map(|(&c, &o)| c + o));
    Polygon::new(ring)
}

/// Thin parallelogram along the diagonal of `[0,2]²` with horizontal
/// thickness `t`.
pub fn diagonal_sliver(t: f64) -> Result<Polygon<f64>> {
    Polygon::new(vec![
        Point::new(0.0, 0.0),
        Point::new(t, 0.0),
        Point::new(2.0, 2.0),
        Point::new(2.0 - t, 2.0),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rectangle_when_straight() {
        let p = thin_sliver(10.0, 0.5, 0).unwrap();
        assert_eq!(p.len(), 4);
        assert!((p.area() - 5.0).abs() < 1e-12);
    }

    #[test]
    fn zigzag_keeps_area() {
        for w in [0.5, 1e-2, 1e-4] {
            let p = thin_sliver(12.0, w, 5).unwrap();
            assert!((p.area() - 12.0 * w).abs() < 1e-6 * 12.0, "{}", p.area());
        }
    }
}
