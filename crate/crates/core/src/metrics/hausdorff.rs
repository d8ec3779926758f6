//! Certified directed Hausdorff distances.
//!
//! Distance-to-a-set is 1-Lipschitz, so an interval of length `l` whose
//! endpoints evaluate to `f0`, `f1` cannot exceed `(f0 + f1 + l) / 2`, and a
//! square with half-diagonal `h` cannot exceed `f(center) + h`. Both searches
//! refine the piece with the largest upper bound until the gap to the best
//! attained value is within tolerance.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use super::index::SegmentIndex;
use super::DistanceResult;
use crate::error::{Error, Result};
use crate::geom::{dist_to_segment, winding_number, Point, Polygon, Rect};
use crate::grid::{Cell, CellSet};
use crate::scalar::Scalar;

struct Keyed<P> {
    key: f64,
    item: P,
}

impl<P> PartialEq for Keyed<P> {
    fn eq(&self, o: &Self) -> bool {
        self.key.total_cmp(&o.key) == Ordering::Equal
    }
}
impl<P> Eq for Keyed<P> {}
impl<P> PartialOrd for Keyed<P> {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
impl<P> Ord for Keyed<P> {
    fn cmp(&self, o: &Self) -> Ordering {
        self.key.total_cmp(&o.key)
    }
}

fn check_tol<T: Scalar>(tol: T) -> Result<()> {
    if tol > T::zero() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "tolerance must be positive, got {tol}"
        )))
    }
}

/// What the search should do with the running bounds.
#[derive(Clone, Copy)]
enum Goal<T> {
    /// Stop once every pending upper bound is within `tol` of the best value.
    Value(T),
    /// Decide whether the maximum is at most `bound`.
    AtMost(T),
}

enum Outcome<T> {
    Value(DistanceResult<T>),
    Decided(bool),
}

fn ring_segments<T: Scalar>(ring: &[Point<T>]) -> Vec<(Point<T>, Point<T>)> {
    let n = ring.len();
    (0..n).map(|i| (ring[i], ring[(i + 1) % n])).collect()
}

#[derive(Clone, Copy)]
struct Interval<T> {
    a: Point<T>,
    b: Point<T>,
    fa: T,
    fb: T,
    /// Nearest target segments of `a` and `b`.
    sa: usize,
    sb: usize,
}

impl<T: Scalar> Interval<T> {
    /// Two valid upper bounds on the distance along the interval: the
    /// Lipschitz bound, and distance to one fixed target segment, which is
    /// convex and so maximal at an endpoint.
    fn upper(&self, target: &SegmentIndex<T>) -> T {
        let segs = target.segments();
        let lip = (self.fa + self.fb + self.a.dist(self.b)) * T::half();
        let (p, q) = segs[self.sa];
        let via_a = self.fa.max(dist_to_segment(self.b, p, q));
        let (p, q) = segs[self.sb];
        let via_b = self.fb.max(dist_to_segment(self.a, p, q));
        lip.min(via_a).min(via_b)
    }
}

fn search_segments<T: Scalar>(
    src: &[(Point<T>, Point<T>)],
    target: &SegmentIndex<T>,
    goal: Goal<T>,
) -> Outcome<T> {
    let mut best = T::zero();
    let mut heap = BinaryHeap::new();
    let tiny = T::lit(1e-12);
    let push = |iv: Interval<T>, best: T, heap: &mut BinaryHeap<Keyed<Interval<T>>>| {
        let ub = iv.upper(target);
        let keep = match goal {
            Goal::Value(tol) => ub > best + tol,
            Goal::AtMost(bound) => ub > bound,
        };
        if keep {
            heap.push(Keyed {
                key: ub.to_f64_lossy(),
                item: iv,
            });
        }
    };
    let eval = |p: Point<T>| {
        let (d, _, k) = target.nearest_segment(p);
        (d, k)
    };
    let evaluated: Vec<Interval<T>> = src
        .iter()
        .map(|&(a, b)| {
            let (fa, sa) = eval(a);
            let (fb, sb) = eval(b);
            Interval { a, b, fa, fb, sa, sb }
        })
        .collect();
    for iv in &evaluated {
        best = best.max(iv.fa).max(iv.fb);
    }
    if let Goal::AtMost(bound) = goal {
        if best > bound {
            return Outcome::Decided(false);
        }
    }
    for iv in evaluated {
        push(iv, best, &mut heap);
    }
    while let Some(Keyed { key, item }) = heap.pop() {
        let ub = T::lit(key);
        match goal {
            Goal::Value(tol) if ub <= best + tol => {
                return Outcome::Value(DistanceResult::new(best, tol));
            }
            _ => {}
        }
        if item.a.dist(item.b) <= tiny {
            if let Goal::AtMost(_) = goal {
                return Outcome::Decided(false);
            }
            continue;
        }
        let m = item.a.lerp(item.b, T::half());
        let (fm, sm) = eval(m);
        best = best.max(fm);
        if let Goal::AtMost(bound) = goal {
            if best > bound {
                return Outcome::Decided(false);
            }
        }
        push(
            Interval {
                b: m,
                fb: fm,
                sb: sm,
                ..item
            },
            best,
            &mut heap,
        );
        push(
            Interval {
                a: m,
                fa: fm,
                sa: sm,
                ..item
            },
            best,
            &mut heap,
        );
    }
    match goal {
        Goal::Value(tol) => Outcome::Value(DistanceResult::new(best, tol)),
        Goal::AtMost(_) => Outcome::Decided(true),
    }
}

/// Directed Hausdorff distance from the closed polyline `a` to the closed polyline `b`.
pub fn hausdorff_boundary<T: Scalar>(a: &[Point<T>], b: &[Point<T>], tol: T) -> Result<DistanceResult<T>> {
    check_tol(tol)?;
    let target = SegmentIndex::from_ring(b);
    Ok(directed_segments(&ring_segments(a), &target, tol))
}

/// Undirected boundary Hausdorff distance.
pub fn hausdorff_boundary_undirected<T: Scalar>(
    a: &[Point<T>],
    b: &[Point<T>],
    tol: T,
) -> Result<DistanceResult<T>> {
    let ab = hausdorff_boundary(a, b, tol)?;
    let ba = hausdorff_boundary(b, a, tol)?;
    Ok(if ab.value >= ba.value { ab } else { ba })
}

/// Directed Hausdorff distance from a set of segments to an indexed segment set.
pub fn directed_segments<T: Scalar>(
    src: &[(Point<T>, Point<T>)],
    target: &SegmentIndex<T>,
    tol: T,
) -> DistanceResult<T> {
    match search_segments(src, target, Goal::Value(tol)) {
        Outcome::Value(v) => v,
        Outcome::Decided(_) => unreachable!(),
    }
}

/// Certifies that every point of `src` lies within `bound` of `target`.
pub fn segments_within<T: Scalar>(src: &[(Point<T>, Point<T>)], target: &SegmentIndex<T>, bound: T) -> bool {
    matches!(
        search_segments(src, target, Goal::AtMost(bound)),
        Outcome::Decided(true)
    )
}

/// A planar region: polygon interior or union of cells.
#[derive(Clone, Copy)]
pub enum Region<'a, T> {
    Polygon(&'a Polygon<T>),
    Cells(&'a CellSet),
}

enum Shape<T> {
    Ring(Vec<Point<T>>),
    Cells(CellSet),
}

/// Precomputed distance structure for a closed region.
pub struct RegionOracle<T> {
    boundary: SegmentIndex<T>,
    shape: Shape<T>,
    bbox: Rect<T>,
}

impl<T: Scalar> RegionOracle<T> {
    pub fn new(r: Region<'_, T>) -> Self {
        match r {
            Region::Polygon(p) => RegionOracle {
                boundary: SegmentIndex::from_ring(p.ring()),
                shape: Shape::Ring(p.ring().to_vec()),
                bbox: p.bbox(),
            },
            Region::Cells(c) => RegionOracle {
                boundary: SegmentIndex::new(c.boundary_segments()),
                shape: Shape::Cells(c.clone()),
                bbox: c
                    .rect()
                    .unwrap_or(Rect::from_bounds(T::zero(), T::zero(), T::zero(), T::zero())),
            },
        }
    }

    pub fn boundary(&self) -> &SegmentIndex<T> {
        &self.boundary
    }

    pub fn contains(&self, p: Point<T>) -> bool {
        match &self.shape {
            Shape::Ring(r) => winding_number(r, p) != 0,
            Shape::Cells(c) => {
                let cell = Cell::new(
                    p.x.floor().to_i64().unwrap_or(i64::MIN),
                    p.y.floor().to_i64().unwrap_or(i64::MIN),
                );
                c.contains(cell)
            }
        }
    }

    /// Distance to the closed region (zero inside).
    pub fn distance(&self, p: Point<T>) -> T {
        if self.contains(p) {
            T::zero()
        } else {
            self.boundary.distance(p)
        }
    }

    /// Vertices of the part of the region inside the square, or `None` if
    /// that part is empty. Any convex function is maximized over the part at
    /// one of these points.
    fn clipped_vertices(&self, sq: Square<T>) -> Option<Vec<Point<T>>> {
        let r = Rect::new(
            Point::new(sq.c.x - sq.half, sq.c.y - sq.half),
            Point::new(sq.c.x + sq.half, sq.c.y + sq.half),
        );
        let mut out = Vec::new();
        let segs = self.boundary.segments();
        self.boundary.for_each_near(&r, |k| {
            let (a, b) = segs[k];
            if let Some((t0, t1)) = r.clip_segment(a, b) {
                out.push(a.lerp(b, t0));
                out.push(a.lerp(b, t1));
            }
        });
        let touched = !out.is_empty();
        for c in r.corners() {
            let inside = if touched {
                self.contains(c)
            } else {
                self.contains(sq.c)
            };
            if inside {
                out.push(c);
            }
        }
        (!out.is_empty()).then_some(out)
    }

    /// Upper bound on the distance to the region over the convex hull of
    /// `vs`, which lies inside the square `sq`.
    ///
    /// Distance to one boundary segment is convex, so it is maximal at a
    /// point of `vs`. When the square lies in the slab of two segments
    /// (the nearest one and the one nearest to the mirrored center), both
    /// distances are affine there and their minimum is concave; its maximum
    /// over the hull is at a point of `vs` or where the two are equal on a
    /// chord between two points of `vs`.
    fn bound_over(&self, sq: Square<T>, vs: &[Point<T>]) -> T {
        let segs = self.boundary.segments();
        if segs.is_empty() {
            return T::infinity();
        }
        let (_, q1, k1) = self.boundary.nearest_segment(sq.c);
        let mirror = sq.c + (sq.c - q1);
        let (_, _, k2) = self.boundary.nearest_segment(mirror);
        let far = |k: usize| {
            let (p, q) = segs[k];
            vs.iter().fold(T::zero(), |m, &v| m.max(dist_to_segment(v, p, q)))
        };
        let mut ub = far(k1).min(far(k2));
        if k1 != k2 {
            let corners = [
                Point::new(sq.c.x - sq.half, sq.c.y - sq.half),
                Point::new(sq.c.x + sq.half, sq.c.y - sq.half),
                Point::new(sq.c.x + sq.half, sq.c.y + sq.half),
                Point::new(sq.c.x - sq.half, sq.c.y + sq.half),
            ];
            if let (Some(l1), Some(l2)) = (
                affine_distance(segs[k1], &corners),
                affine_distance(segs[k2], &corners),
            ) {
                let eval = |z: Point<T>| (l1.0.dot(z) + l1.1).min(l2.0.dot(z) + l2.1);
                let diff = |z: Point<T>| (l1.0.dot(z) + l1.1) - (l2.0.dot(z) + l2.1);
                let mut m = vs.iter().fold(T::zero(), |m, &v| m.max(eval(v)));
                for i in 0..vs.len() {
                    for j in i + 1..vs.len() {
                        let (da, db) = (diff(vs[i]), diff(vs[j]));
                        if (da < T::zero()) != (db < T::zero()) && da != db {
                            let t = da / (da - db);
                            m = m.max(eval(vs[i].lerp(vs[j], t)));
                        }
                    }
                }
                ub = ub.min(m);
            }
        }
        ub
    }

    /// Distance to the boundary, negated inside the region.
    pub fn signed_distance(&self, p: Point<T>) -> T {
        let d = self.boundary.distance(p);
        if self.contains(p) {
            -d
        } else {
            d
        }
    }
}

/// Coefficients `(n, b)` with `dist(z, seg) = n·z + b` for all `z` in the
/// convex hull of `pts`, if the hull lies on one side of the segment's line
/// and projects into the segment.
fn affine_distance<T: Scalar>(seg: (Point<T>, Point<T>), pts: &[Point<T>]) -> Option<(Point<T>, T)> {
    let (p, q) = seg;
    let len = p.dist(q);
    if len <= T::zero() {
        return None;
    }
    let u = (q - p) * (T::one() / len);
    let nrm = Point::new(-u.y, u.x);
    let mut pos = true;
    let mut neg = true;
    for &z in pts {
        let t = (z - p).dot(u);
        if t < T::zero() || t > len {
            return None;
        }
        let side = (z - p).dot(nrm);
        pos &= side >= T::zero();
        neg &= side <= T::zero();
    }
    let n = if pos {
        nrm
    } else if neg {
        -nrm
    } else {
        return None;
    };
    Some((n, -n.dot(p)))
}

#[derive(Clone, Copy)]
struct Square<T> {
    c: Point<T>,
    half: T,
}

fn search_region<T: Scalar>(x: &RegionOracle<T>, y: &RegionOracle<T>, goal: Goal<T>) -> Outcome<T> {
    let mut best = T::zero();
    let mut heap: BinaryHeap<Keyed<Square<T>>> = BinaryHeap::new();
    let sqrt2 = T::SQRT_2();
    let bb = x.bbox;
    let extent = bb.width().max(bb.height());
    if x.boundary.segments().is_empty() {
        return match goal {
            Goal::Value(_) => Outcome::Value(DistanceResult::new(T::zero(), T::zero())),
            Goal::AtMost(_) => Outcome::Decided(true),
        };
    }
    let k = extent.ceil().max(T::one());
    let side = extent.max(T::lit(1e-9)) / k;
    let nx = (bb.width() / side).ceil().to_usize().unwrap_or(1).max(1);
    let ny = (bb.height() / side).ceil().to_usize().unwrap_or(1).max(1);

    // evaluates a square; returns false when the search can stop with a "no"
    let visit = |sq: Square<T>, best: &mut T, heap: &mut BinaryHeap<Keyed<Square<T>>>| -> bool {
        let hd = sq.half * sqrt2;
        let inside = x.contains(sq.c);
        let sc = y.signed_distance(sq.c);
        let rep = if inside {
            sc.max(T::zero())
        } else {
            let (d, q) = x.boundary.nearest(sq.c);
            if d > hd {
                return true;
            }
            y.distance(q)
        };
        *best = best.max(rep);
        // signed distance is 1-Lipschitz, and the target is its positive part
        let mut ub = (sc + hd).max(T::zero());
        let threshold = match goal {
            Goal::Value(tol) => *best + tol,
            Goal::AtMost(bound) => bound,
        };
        if ub > threshold {
            let Some(vs) = x.clipped_vertices(sq) else {
                return true;
            };
            ub = ub.min(y.bound_over(sq, &vs));
        }
        match goal {
            Goal::Value(tol) => {
                if ub > *best + tol {
                    heap.push(Keyed {
                        key: ub.to_f64_lossy(),
                        item: sq,
                    });
                }
                true
            }
            Goal::AtMost(bound) => {
                if *best > bound {
                    return false;
                }
                if ub > bound {
                    heap.push(Keyed {
                        key: ub.to_f64_lossy(),
                        item: sq,
                    });
                }
                true
            }
        }
    };

    let half = side * T::half();
    for i in 0..nx {
        for j in 0..ny {
            let c = Point::new(
                bb.min.x + side * T::lit(i as f64) + half,
                bb.min.y + side * T::lit(j as f64) + half,
            );
            if !visit(Square { c, half }, &mut best, &mut heap) {
                return Outcome::Decided(false);
            }
        }
    }
    while let Some(Keyed { key, item }) = heap.pop() {
        let ub = T::lit(key);
        if let Goal::Value(tol) = goal {
            if ub <= best + tol {
                // earlier pruned squares may have had bounds up to best + tol
                return Outcome::Value(DistanceResult::new(best, tol));
            }
        }
        if item.half < T::lit(1e-10) {
            if let Goal::AtMost(_) = goal {
                return Outcome::Decided(false);
            }
            continue;
        }
        let h = item.half * T::half();
        for (dx, dy) in [(-1.0, -1.0), (1.0, -1.0), (-1.0, 1.0), (1.0, 1.0)] {
            let c = Point::new(item.c.x + h * T::lit(dx), item.c.y + h * T::lit(dy));
            if !visit(Square { c, half: h }, &mut best, &mut heap) {
                return Outcome::Decided(false);
            }
        }
    }
    match goal {
        Goal::Value(tol) => Outcome::Value(DistanceResult::new(best, tol)),
        Goal::AtMost(_) => Outcome::Decided(true),
    }
}

/// Directed Hausdorff distance between regions, certified within `tol`.
pub fn hausdorff_region<T: Scalar>(x: Region<'_, T>, y: Region<'_, T>, tol: T) -> Result<DistanceResult<T>> {
    check_tol(tol)?;
    Ok(region_directed(&RegionOracle::new(x), &RegionOracle::new(y), tol))
}

pub fn region_directed<T: Scalar>(x: &RegionOracle<T>, y: &RegionOracle<T>, tol: T) -> DistanceResult<T> {
    match search_region(x, y, Goal::Value(tol)) {
        Outcome::Value(v) => v,
        Outcome::Decided(_) => unreachable!(),
    }
}

/// Certifies that every point of region `x` lies within `bound` of region `y`.
pub fn region_within<T: Scalar>(x: &RegionOracle<T>, y: &RegionOracle<T>, bound: T) -> bool {
    matches!(search_region(x, y, Goal::AtMost(bound)), Outcome::Decided(true))
}
