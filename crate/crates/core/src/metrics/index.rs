//! Uniform-grid bucketing of segments for nearest-point queries.

use crate::geom::{closest_on_segment, Point, Rect};
use crate::scalar::Scalar;

pub struct SegmentIndex<T> {
    segs: Vec<(Point<T>, Point<T>)>,
    origin: Point<T>,
    cell: T,
    nx: usize,
    ny: usize,
    buckets: Vec<Vec<u32>>,
}

impl<T: Scalar> SegmentIndex<T> {
    pub fn new(segs: Vec<(Point<T>, Point<T>)>) -> Self {
        let pts: Vec<Point<T>> = segs.iter().flat_map(|&(a, b)| [a, b]).collect();
        let bb = Rect::bounding(&pts).unwrap_or(Rect::from_bounds(T::zero(), T::zero(), T::one(), T::one()));
        let n = segs.len().max(1);
        let extent = bb.width().max(bb.height()).max(T::lit(1e-9));
        let total: T = segs.iter().fold(T::zero(), |acc, &(a, b)| acc + a.dist(b));
        let mean = total / T::lit(n as f64);
        // aim for a handful of segments per bucket
        let by_count = extent / T::lit((n as f64).sqrt().max(1.0));
        let cell = by_count.max(mean).max(extent / T::lit(512.0));
        let nx = ((bb.width() / cell).to_f64_lossy().floor() as usize + 1).min(513);
        let ny = ((bb.height() / cell).to_f64_lossy().floor() as usize + 1).min(513);
        let mut idx = SegmentIndex {
            segs,
            origin: bb.min,
            cell,
            nx,
            ny,
            buckets: vec![Vec::new(); nx * ny],
        };
        for (k, &(a, b)) in idx.segs.iter().enumerate() {
            let (c0, r0) = idx.bucket_of(Point::new(a.x.min(b.x), a.y.min(b.y)));
            let (c1, r1) = idx.bucket_of(Point::new(a.x.max(b.x), a.y.max(b.y)));
            for r in r0..=r1 {
                for c in c0..=c1 {
                    idx.buckets[r * nx + c].push(k as u32);
                }
            }
        }
        idx
    }

    pub fn from_ring(ring: &[Point<T>]) -> Self {
        let n = ring.len();
        Self::new((0..n).map(|i| (ring[i], ring[(i + 1) % n])).collect())
    }

    pub fn segments(&self) -> &[(Point<T>, Point<T>)] {
        &self.segs
    }

    fn bucket_of(&self, p: Point<T>) -> (usize, usize) {
        let clamp = |v: T, n: usize| -> usize {
            let f = v.to_f64_lossy().floor();
            if f < 0.0 {
                0
            } else {
                (f as usize).min(n - 1)
            }
        };
        (
            clamp((p.x - self.origin.x) / self.cell, self.nx),
            clamp((p.y - self.origin.y) / self.cell, self.ny),
        )
    }

    /// Distance from `p` to the nearest segment and the nearest point itself.
    pub fn nearest(&self, p: Point<T>) -> (T, Point<T>) {
        let (d, q, _) = self.nearest_segment(p);
        (d, q)
    }

    /// Like [`Self::nearest`], also returning the index of the nearest segment.
    pub fn nearest_segment(&self, p: Point<T>) -> (T, Point<T>, usize) {
        let mut best = T::infinity();
        let mut best_pt = p;
        let mut best_k = 0;
        if self.segs.is_empty() {
            return (best, best_pt, best_k);
        }
        let (bx, by) = self.bucket_of(p);
        let max_ring = self.nx.max(self.ny);
        for ring in 0..=max_ring {
            if ring >= 1 && best <= self.cell * T::lit((ring - 1) as f64) {
                break;
            }
            let r = ring as i64;
            let (bx, by) = (bx as i64, by as i64);
            for dy in -r..=r {
                let y = by + dy;
                if y < 0 || y >= self.ny as i64 {
                    continue;
                }
                let step = if dy == -r || dy == r { 1 } else { (2 * r).max(1) };
                let mut dx = -r;
                while dx <= r {
                    let x = bx + dx;
                    if x >= 0 && x < self.nx as i64 {
                        for &k in &self.buckets[y as usize * self.nx + x as usize] {
                            let (a, b) = self.segs[k as usize];
                            let (q, _) = closest_on_segment(p, a, b);
                            let d = p.dist(q);
                            if d < best {
                                best = d;
                                best_pt = q;
                                best_k = k as usize;
                            }
                        }
                    }
                    dx += step;
                }
            }
        }
        (best, best_pt, best_k)
    }

    /// Calls `f` with the index of every segment stored in a bucket overlapping `r`
    /// (possibly more than once).
    pub fn for_each_near(&self, r: &Rect<T>, mut f: impl FnMut(usize)) {
        let (c0, r0) = self.bucket_of(r.min);
        let (c1, r1) = self.bucket_of(r.max);
        for y in r0..=r1 {
            for x in c0..=c1 {
                for &k in &self.buckets[y * self.nx + x] {
                    f(k as usize);
                }
            }
        }
    }

    pub fn distance(&self, p: Point<T>) -> T {
        self.nearest(p).0
    }
}
