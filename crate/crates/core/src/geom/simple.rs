//! Edge-pair intersection search for simplicity checks.

use super::point::{orient, Point, Rect};
use crate::scalar::Scalar;

fn sign<T: Scalar>(v: T) -> i8 {
    if v > T::zero() {
        1
    } else if v < T::zero() {
        -1
    } else {
        0
    }
}

fn on_segment<T: Scalar>(a: Point<T>, b: Point<T>, p: Point<T>) -> bool {
    p.x >= a.x.min(b.x) && p.x <= a.x.max(b.x) && p.y >= a.y.min(b.y) && p.y <= a.y.max(b.y)
}

/// Closed segment intersection, touching included.
pub fn segments_intersect<T: Scalar>(a: Point<T>, b: Point<T>, c: Point<T>, d: Point<T>) -> bool {
    let o1 = sign(orient(a, b, c));
    let o2 = sign(orient(a, b, d));
    let o3 = sign(orient(c, d, a));
    let o4 = sign(orient(c, d, b));
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return true;
    }
    (o1 == 0 && on_segment(a, b, c))
        || (o2 == 0 && on_segment(a, b, d))
        || (o3 == 0 && on_segment(c, d, a))
        || (o4 == 0 && on_segment(c, d, b))
}

/// Edges `i` (`v -> w`) and `i + 1` (`w -> x`) overlap beyond their shared vertex.
fn adjacent_overlap<T: Scalar>(v: Point<T>, w: Point<T>, x: Point<T>) -> bool {
    orient(v, w, x) == T::zero() && (v - w).dot(x - w) > T::zero()
}

fn check_pair<T: Scalar>(ring: &[Point<T>], i: usize, j: usize) -> bool {
    let n = ring.len();
    let (a, b) = (ring[i], ring[(i + 1) % n]);
    let (c, d) = (ring[j], ring[(j + 1) % n]);
    if (i + 1) % n == j {
        adjacent_overlap(a, b, d)
    } else if (j + 1) % n == i {
        adjacent_overlap(c, d, b)
    } else {
        segments_intersect(a, b, c, d)
    }
}

/// Returns the lexicographically first pair of offending edges, if any.
///
/// Edges are bucketed on a uniform grid sized to the vertex count, so only
/// edges sharing a bucket are tested against each other.
pub fn first_intersection<T: Scalar>(ring: &[Point<T>]) -> Option<(usize, usize)> {
    let n = ring.len();
    if n < 3 {
        return None;
    }
    let bb = Rect::bounding(ring)?;
    let side = ((n as f64).sqrt().ceil() as usize).clamp(1, 256);
    let w = bb.width().to_f64_lossy().max(1e-300);
    let h = bb.height().to_f64_lossy().max(1e-300);
    let to_bucket = |v: f64, lo: f64, extent: f64| -> usize {
        (((v - lo) / extent * side as f64).floor().max(0.0) as usize).min(side - 1)
    };
    let (x0, y0) = (bb.min.x.to_f64_lossy(), bb.min.y.to_f64_lossy());
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); side * side];
    for i in 0..n {
        let (a, b) = (ring[i], ring[(i + 1) % n]);
        let (ax, ay, bx, by) = (
            a.x.to_f64_lossy(),
            a.y.to_f64_lossy(),
            b.x.to_f64_lossy(),
            b.y.to_f64_lossy(),
        );
        let c0 = to_bucket(ax.min(bx), x0, w);
        let c1 = to_bucket(ax.max(bx), x0, w);
        let r0 = to_bucket(ay.min(by), y0, h);
        let r1 = to_bucket(ay.max(by), y0, h);
        for r in r0..=r1 {
            for c in c0..=c1 {
                buckets[r * side + c].push(i);
            }
        }
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for b in &buckets {
        for (k, &i) in b.iter().enumerate() {
            for &j in &b[k + 1..] {
                pairs.push((i.min(j), i.max(j)));
            }
        }
    }
    pairs.sort_unstable();
    pairs.dedup();
    pairs.into_iter().find(|&(i, j)| check_pair(ring, i, j))
}

/// Quadratic reference scan over all edge pairs.
pub fn first_intersection_bruteforce<T: Scalar>(ring: &[Point<T>]) -> Option<(usize, usize)> {
    let n = ring.len();
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .find(|&(i, j)| check_pair(ring, i, j))
}
