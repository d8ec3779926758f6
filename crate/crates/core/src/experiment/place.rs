use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::{Cell, CellSet, Point, Polygon};

/// Uniformly scales `p` so its bounding box has area `r`, with the bounding
/// box's minimum corner moved to the origin.
pub fn scale_to_resolution(p: &Polygon, r: f64) -> Result<Polygon> {
    if !(r > 0.0) || !r.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "resolution must be positive, got {r}"
        )));
    }
    let b = p.bbox();
    if b.is_degenerate() {
        return Err(Error::DegenerateBoundingBox);
    }
    let s = (r / b.area()).sqrt();
    Ok(p.translate(Point::new(-b.min.x, -b.min.y)).scale(s))
}

/// Translates an anchored polygon by an offset in `[0, 1)²`.
pub fn place(p: &Polygon, offset: (f64, f64)) -> Result<Polygon> {
    let (dx, dy) = offset;
    if !(0.0..1.0).contains(&dx) || !(0.0..1.0).contains(&dy) {
        return Err(Error::InvalidArgument(format!(
            "offset ({dx}, {dy}) outside [0, 1)²"
        )));
    }
    Ok(p.translate(Point::new(dx, dy)))
}

/// The `k × k` offsets `{0, 1/k, ..., (k-1)/k}²`, ordered by `dx` then `dy`.
pub fn grid_offsets(k: usize) -> Vec<(f64, f64)> {
    let t = |i: usize| i as f64 / k as f64;
    (0..k).flat_map(|i| (0..k).map(move |j| (t(i), t(j)))).collect()
}

/// `count` uniform offsets in `[0, 1)²`, reproducible per seed.
pub fn random_offsets(count: usize, seed: u64) -> Vec<(f64, f64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| (rng.gen_range(0.0..1.0), rng.gen_range(0.0..1.0)))
        .collect()
}

/// All cells covered by `p` for at least half their area. Not necessarily a
/// grid polygon.
pub fn optimal_baseline(p: &Polygon) -> CellSet {
    let b = p.bbox();
    let mut out = CellSet::new();
    for row in b.min.y.floor() as i64..b.max.y.ceil() as i64 {
        for col in b.min.x.floor() as i64..b.max.x.ceil() as i64 {
            let c = Cell::new(col, row);
            if p.clip_area(&c.rect()) >= 0.5 {
                out.insert(c);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rect(w: f64, h: f64) -> Polygon {
        Polygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(w, 0.0),
            Point::new(w, h),
            Point::new(0.0, h),
        ])
        .unwrap()
    }

    #[test]
    fn scaling() {
        let b = scale_to_resolution(&rect(1.0, 1.0), 100.0).unwrap().bbox();
        assert_eq!((b.width(), b.height()), (10.0, 10.0));
        let p = scale_to_resolution(&rect(2.0, 8.0).translate(Point::new(3.0, -1.0)), 64.0).unwrap();
        let b = p.bbox();
        assert!((b.width() - 4.0).abs() < 1e-12 && (b.height() - 16.0).abs() < 1e-12);
        assert_eq!(b.min, Point::new(0.0, 0.0));
        let q = scale_to_resolution(&p, 64.0).unwrap();
        for (a, b) in p.vertices().iter().zip(q.vertices()) {
            assert!(a.dist(*b) < 1e-12);
        }
        assert!(scale_to_resolution(&p, 0.0).is_err());
    }

    #[test]
    fn placement() {
        let p = rect(1.0, 1.0);
        assert_eq!(place(&p, (0.0, 0.0)).unwrap(), p);
        assert!(place(&p, (1.0, 0.0)).is_err());
        let g = grid_offsets(5);
        assert_eq!(g.len(), 25);
        assert_eq!(g[1], (0.0, 0.2));
        assert_eq!(g[24], (0.8, 0.8));
        assert_eq!(random_offsets(4, 9), random_offsets(4, 9));
        assert_ne!(random_offsets(4, 9), random_offsets(4, 10));
    }

    #[test]
    fn baseline() {
        assert_eq!(
            optimal_baseline(&rect(2.0, 2.0)),
            CellSet::from_pairs(&[(0, 0), (0, 1), (1, 0), (1, 1)])
        );
        assert!(optimal_baseline(&rect(0.49, 1.0)).is_empty());
        assert_eq!(optimal_baseline(&rect(0.51, 1.0)), CellSet::from_pairs(&[(0, 0)]));
    }
}
