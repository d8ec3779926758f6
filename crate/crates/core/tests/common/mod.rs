#![allow(dead_code)]

use gridify_core::experiment::{place, scale_to_resolution};
use gridify_core::fixtures::random_simple_polygon;
use gridify_core::{Point, Polygon};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SQRT_2: f64 = std::f64::consts::SQRT_2;

pub fn poly(v: &[(f64, f64)]) -> Polygon {
    Polygon::new(v.iter().map(|&(x, y)| Point::new(x, y)).collect()).unwrap()
}

pub fn rect(x0: f64, y0: f64, x1: f64, y1: f64) -> Polygon {
    poly(&[(x0, y0), (x1, y0), (x1, y1), (x0, y1)])
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random simple polygon scaled to resolution `r` and placed at `offset`.
pub fn placed(n: usize, seed: u64, r: f64, offset: (f64, f64)) -> Polygon {
    let p = random_simple_polygon(n, seed).unwrap();
    place(&scale_to_resolution(&p, r).unwrap(), offset).unwrap()
}

/// Even-odd ray casting towards +x, independent of the library's winding test.
pub fn ray_cast(ring: &[Point], p: Point) -> bool {
    let n = ring.len();
    let mut inside = false;
    for i in 0..n {
        let (a, b) = (ring[i], ring[(i + 1) % n]);
        if (a.y > p.y) != (b.y > p.y) {
            let x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if x > p.x {
                inside = !inside;
            }
        }
    }
    inside
}

/// Monte-Carlo estimate of the area of `{p in window : f(p)}`.
pub fn monte_carlo(
    x0: f64,
    y0: f64,
    x1: f64,
    y1: f64,
    samples: usize,
    seed: u64,
    f: impl Fn(Point) -> bool,
) -> f64 {
    let mut r = rng(seed);
    let hits = (0..samples)
        .filter(|_| f(Point::new(r.gen_range(x0..x1), r.gen_range(y0..y1))))
        .count();
    (x1 - x0) * (y1 - y0) * hits as f64 / samples as f64
}

pub fn dist_to_segments(p: Point, segs: &[(Point, Point)]) -> f64 {
    segs.iter()
        .map(|&(a, b)| gridify_core::geom::dist_to_segment(p, a, b))
        .fold(f64::INFINITY, f64::min)
}

/// Points every `step` along each segment, endpoints included.
pub fn sample_segments(segs: &[(Point, Point)], step: f64) -> Vec<Point> {
    let mut out = Vec::new();
    for &(a, b) in segs {
        let k = (a.dist(b) / step).ceil().max(1.0) as usize;
        out.extend((0..=k).map(|i| a.lerp(b, i as f64 / k as f64)));
    }
    out
}
