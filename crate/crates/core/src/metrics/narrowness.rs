//! α-narrowness: the largest boundary distance between two boundary points
//! that are at most α apart.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{PathPosition, Point, Polygon, Rect};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WitnessPoint<T> {
    pub point: Point<T>,
    pub position: PathPosition<T>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NarrownessWitness<T> {
    pub p: WitnessPoint<T>,
    pub q: WitnessPoint<T>,
    /// Euclidean distance between the two points.
    pub euclid: T,
    /// Shortest distance between them along the boundary.
    pub along: T,
}

/// Parameter range on segment `a -> b` within distance `r` of `c`.
fn disk_range<T: Scalar>(a: Point<T>, b: Point<T>, c: Point<T>, r: T) -> Option<(T, T)> {
    let d = b - a;
    let f = a - c;
    let dd = d.norm_sq();
    if dd <= T::zero() {
        return (f.norm() <= r).then_some((T::zero(), T::one()));
    }
    let bq = f.dot(d);
    let disc = bq * bq - dd * (f.norm_sq() - r * r);
    if disc < T::zero() {
        return None;
    }
    let s = disc.sqrt();
    let lo = ((-bq - s) / dd).max(T::zero());
    let hi = ((-bq + s) / dd).min(T::one());
    (lo <= hi).then_some((lo, hi))
}

struct Search<'a, T> {
    poly: &'a Polygon<T>,
    alpha: T,
    best: NarrownessWitness<T>,
}

impl<'a, T: Scalar> Search<'a, T> {
    fn witness(&self, edge: usize, t: T) -> WitnessPoint<T> {
        let (a, b) = self.poly.edge(edge);
        WitnessPoint {
            point: a.lerp(b, t),
            position: self.poly.position_on_edge(edge, t),
        }
    }

    fn offer(&mut self, p: WitnessPoint<T>, q: WitnessPoint<T>) {
        let euclid = p.point.dist(q.point);
        if euclid > self.alpha + T::lit(1e-9) {
            return;
        }
        let along = self.poly.perimeter_distance(p.position, q.position);
        if along > self.best.along {
            self.best = NarrownessWitness { p, q, euclid, along };
        }
    }

    fn vertex_anchored(&mut self) {
        let n = self.poly.len();
        let per = self.poly.perimeter();
        for v in 0..n {
            let vp = self.witness(v, T::zero());
            let antipode = PathPosition::wrapped(vp.position.0 + per * T::half(), per).0;
            for e in 0..n {
                let (a, b) = self.poly.edge(e);
                let Some((lo, hi)) = disk_range(a, b, vp.point, self.alpha) else {
                    continue;
                };
                self.offer(vp, self.witness(e, lo));
                self.offer(vp, self.witness(e, hi));
                let start = self.poly.arc_at_vertex(e);
                let len = self.poly.edge_length(e);
                let rel = antipode - start;
                if rel >= lo * len && rel <= hi * len && len > T::zero() {
                    self.offer(vp, self.witness(e, rel / len));
                }
            }
        }
    }

    fn equidistant(&mut self) {
        let n = self.poly.len();
        let eps = T::lit(1e-9);
        for i in 0..n {
            let (a, b) = self.poly.edge(i);
            let li = self.poly.edge_length(i);
            let u = (b - a) * (T::one() / li);
            for j in i + 1..n {
                let (c, d) = self.poly.edge(j);
                let lj = self.poly.edge_length(j);
                let w = (d - c) * (T::one() / lj);
                let den = u.cross(w);
                if den.abs() <= T::lit(1e-12) {
                    continue;
                }
                // intersection of the supporting lines
                let s = (c - a).cross(w) / den;
                let x = a + u * s;
                for (su, sw) in [(1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0)] {
                    let (su, sw) = (T::lit(su), T::lit(sw));
                    let cos = (su * sw * u.dot(w)).max(-T::one()).min(T::one());
                    let half_sin = ((T::one() - cos) * T::half()).sqrt();
                    if half_sin <= T::lit(1e-12) {
                        continue;
                    }
                    let dist = self.alpha / (T::two() * half_sin);
                    let p = x + u * (su * dist);
                    let q = x + w * (sw * dist);
                    let tp = (p - a).dot(u) / li;
                    let tq = (q - c).dot(w) / lj;
                    let inside = |t: T| t >= -eps && t <= T::one() + eps;
                    if inside(tp) && inside(tq) {
                        let tp = tp.max(T::zero()).min(T::one());
                        let tq = tq.max(T::zero()).min(T::one());
                        self.offer(self.witness(i, tp), self.witness(j, tq));
                    }
                }
            }
        }
    }

    /// Pairs of points on edges `i` and `j` whose forward boundary distance is
    /// exactly half the perimeter and whose Euclidean distance is at most α.
    fn half_perimeter(&mut self) {
        let n = self.poly.len();
        let per = self.poly.perimeter();
        let half = per * T::half();
        if self.best.along >= half {
            return;
        }
        for i in 0..n {
            let (t, u) = self.poly.edge(i);
            let ltu = self.poly.edge_length(i);
            let arc_u = self.poly.arc_at_vertex((i + 1) % n);
            for j in 0..n {
                if i == j {
                    continue;
                }
                let (v, w) = self.poly.edge(j);
                let lvw = self.poly.edge_length(j);
                let mut uv = self.poly.arc_at_vertex(j) - arc_u;
                if uv < T::zero() {
                    uv = uv + per;
                }
                let r_coef = ltu / lvw;
                let c_coef = (half - ltu - uv) / lvw;
                // q - p = c + λ r with λ the parameter of p on edge i
                let c = v - t + (w - v) * c_coef;
                let r = (w - v) * r_coef - (u - t);
                let mut lo = T::zero().max(-c_coef / r_coef);
                let mut hi = T::one().min((T::one() - c_coef) / r_coef);
                if lo > hi {
                    continue;
                }
                let qa = r.norm_sq();
                let qb = c.dot(r);
                let qc = c.norm_sq() - self.alpha * self.alpha;
                if qa <= T::lit(1e-12) {
                    if qc > T::zero() {
                        continue;
                    }
                } else {
                    let disc = qb * qb - qa * qc;
                    if disc < T::lit(-1e-12) {
                        continue;
                    }
                    let sq = disc.max(T::zero()).sqrt();
                    lo = lo.max((-qb - sq) / qa);
                    hi = hi.min((-qb + sq) / qa);
                    if lo > hi {
                        continue;
                    }
                }
                let lp = (lo + hi) * T::half();
                let lq = (c_coef + r_coef * lp).max(T::zero()).min(T::one());
                let p = self.witness(i, lp);
                let q = self.witness(j, lq);
                let euclid = p.point.dist(q.point);
                if euclid <= self.alpha + T::lit(1e-9) {
                    self.best = NarrownessWitness {
                        p,
                        q,
                        euclid,
                        along: half,
                    };
                    return;
                }
            }
        }
    }
}

/// α-narrowness of `p` together with a pair of points attaining it.
pub fn narrowness<T: Scalar>(p: &Polygon<T>, alpha: T) -> Result<(T, NarrownessWitness<T>)> {
    if !(alpha > T::zero()) {
        return Err(Error::InvalidArgument(format!(
            "alpha must be positive, got {alpha}"
        )));
    }
    let v0 = WitnessPoint {
        point: p.vertices()[0],
        position: PathPosition(T::zero()),
    };
    let mut s = Search {
        poly: p,
        alpha,
        best: NarrownessWitness {
            p: v0,
            q: v0,
            euclid: T::zero(),
            along: T::zero(),
        },
    };
    s.vertex_anchored();
    s.equidistant();
    s.half_perimeter();
    Ok((s.best.along, s.best))
}

/// Maximum boundary distance over pairs of arc-length samples (spacing `step`)
/// that lie within `alpha` of each other.
pub fn narrowness_bruteforce<T: Scalar>(p: &Polygon<T>, alpha: T, step: T) -> Result<T> {
    if !(step > T::zero()) || !(alpha > T::zero()) {
        return Err(Error::InvalidArgument("step and alpha must be positive".into()));
    }
    let per = p.perimeter();
    let count = (per / step).ceil().to_usize().unwrap_or(1).max(1);
    let n = p.len();
    let bb: Rect<T> = p.bbox().inflate(alpha);
    let extent = bb.width().max(bb.height());
    let cell = alpha.max(extent / T::lit(256.0));
    let nx = (bb.width() / cell).to_usize().unwrap_or(0) + 1;
    let ny = (bb.height() / cell).to_usize().unwrap_or(0) + 1;
    let bucket = |q: Point<T>| -> (usize, usize) {
        let cx = ((q.x - bb.min.x) / cell)
            .floor()
            .to_usize()
            .unwrap_or(0)
            .min(nx - 1);
        let cy = ((q.y - bb.min.y) / cell)
            .floor()
            .to_usize()
            .unwrap_or(0)
            .min(ny - 1);
        (cx, cy)
    };
    let mut grid: Vec<Vec<usize>> = vec![Vec::new(); nx * ny];
    for e in 0..n {
        let (a, b) = p.edge(e);
        let r = Rect::bounding(&[a, b]).unwrap().inflate(alpha);
        let (x0, y0) = bucket(r.min);
        let (x1, y1) = bucket(r.max);
        for y in y0..=y1 {
            for x in x0..=x1 {
                grid[y * nx + x].push(e);
            }
        }
    }
    let dist_along = |a: T, b: T| -> T {
        let f = (b - a).abs();
        f.min(per - f)
    };
    let arc_of = |k: usize| T::lit(k as f64) * step;
    let mut best = T::zero();
    for k in 0..count {
        let arc = arc_of(k);
        let pt = p.point_at(PathPosition(arc));
        let (cx, cy) = bucket(pt);
        let antipode = PathPosition::wrapped(arc + per * T::half(), per).0;
        for &e in &grid[cy * nx + cx] {
            let (a, b) = p.edge(e);
            let Some((lo, hi)) = disk_range(a, b, pt, alpha) else {
                continue;
            };
            let start = p.arc_at_vertex(e);
            let len = p.edge_length(e);
            let (a0, a1) = (start + lo * len, start + hi * len);
            let ka = (a0 / step).ceil().to_usize().unwrap_or(0);
            let kb = (a1 / step).floor().to_usize().unwrap_or(0).min(count - 1);
            if ka > kb {
                continue;
            }
            let mut consider = |j: usize| {
                best = best.max(dist_along(arc, arc_of(j)));
            };
            consider(ka);
            consider(kb);
            if antipode >= a0 && antipode <= a1 {
                let f = (antipode / step).floor().to_usize().unwrap_or(0);
                for j in [f, f + 1] {
                    if j >= ka && j <= kb {
                        consider(j);
                    }
                }
            }
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square(s: f64) -> Polygon<f64> {
        Polygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(s, 0.0),
            Point::new(s, s),
            Point::new(0.0, s),
        ])
        .unwrap()
    }

    #[test]
    fn square_corner() {
        let p = square(10.0);
        let (beta, w) = narrowness(&p, 2f64.sqrt()).unwrap();
        assert!((beta - 2.0).abs() < 1e-9, "{beta}");
        assert!(w.euclid <= 2f64.sqrt() + 1e-9);
        let bf = narrowness_bruteforce(&p, 2f64.sqrt(), 1e-3).unwrap();
        assert!((bf - 2.0).abs() < 5e-3, "{bf}");
    }

    #[test]
    fn small_square_reaches_half_perimeter() {
        let p = square(1.0);
        let (beta, _) = narrowness(&p, 2f64.sqrt()).unwrap();
        assert!((beta - 2.0).abs() < 1e-9);
        let (beta, _) = narrowness(&p, 1.2).unwrap();
        assert!((beta - 2.0).abs() < 1e-9, "{beta}");
        assert!(narrowness(&p, 0.0).is_err());
    }
}
