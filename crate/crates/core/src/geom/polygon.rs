use serde::{Deserialize, Serialize};

use super::point::{dist_to_segment, orient, Point, Rect};
use super::simple::first_intersection;
use crate::error::{Error, Result};
use crate::scalar::{Scalar, BOUNDARY_TOL};

/// Arc-length position along a polygon boundary, in `[0, perimeter)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default, Serialize, Deserialize)]
pub struct PathPosition<T>(pub T);

impl<T: Scalar> PathPosition<T> {
    /// Wraps `arc` cyclically into `[0, perimeter)`.
    pub fn wrapped(arc: T, perimeter: T) -> Self {
        let mut a = arc % perimeter;
        if a < T::zero() {
            a = a + perimeter;
        }
        if a >= perimeter {
            a = T::zero();
        }
        PathPosition(a)
    }

    pub fn arc_length(self) -> T {
        self.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Containment {
    Inside,
    Boundary,
    Outside,
}

/// Simple polygon, stored counterclockwise without repeated consecutive vertices.
#[derive(Debug, Clone, PartialEq)]
pub struct Polygon<T> {
    vertices: Vec<Point<T>>,
    /// `cum[i]` is the arc length from vertex 0 to vertex `i`; `cum[n]` is the perimeter.
    cum: Vec<T>,
}

/// Shoelace signed area; positive for counterclockwise rings.
pub fn signed_area<T: Scalar>(ring: &[Point<T>]) -> T {
    let n = ring.len();
    if n < 3 {
        return T::zero();
    }
    let o = ring[0];
    let mut acc = T::zero();
    for i in 1..n - 1 {
        acc = acc + (ring[i] - o).cross(ring[i + 1] - o);
    }
    acc * T::half()
}

/// True iff no two non-adjacent edges meet and adjacent edges share only their common vertex.
pub fn is_simple<T: Scalar>(ring: &[Point<T>]) -> bool {
    ring.len() >= 3 && first_intersection(ring).is_none()
}

fn dedupe_ring<T: Scalar>(raw: &[Point<T>]) -> Vec<Point<T>> {
    let mut v: Vec<Point<T>> = Vec::with_capacity(raw.len());
    for &p in raw {
        if v.last() != Some(&p) {
            v.push(p);
        }
    }
    while v.len() > 1 && v.first() == v.last() {
        v.pop();
    }
    v
}

impl<T: Scalar> Polygon<T> {
    /// Normalizes and validates a raw vertex ring: drops repeated consecutive
    /// vertices, rejects self-intersections and orients counterclockwise.
    pub fn new(raw: Vec<Point<T>>) -> Result<Self> {
        if raw.iter().any(|p| !p.is_finite()) {
            return Err(Error::NonFinite);
        }
        let mut v = dedupe_ring(&raw);
        if v.len() < 3 {
            return Err(Error::TooFewVertices(v.len()));
        }
        if let Some((i, j)) = first_intersection(&v) {
            return Err(Error::NotSimple(i, j));
        }
        let a = signed_area(&v);
        if a == T::zero() {
            return Err(Error::ZeroArea);
        }
        if a < T::zero() {
            v.reverse();
        }
        Ok(Self::from_ccw(v))
    }

    fn from_ccw(vertices: Vec<Point<T>>) -> Self {
        let n = vertices.len();
        let mut cum = Vec::with_capacity(n + 1);
        let mut acc = T::zero();
        cum.push(acc);
        for i in 0..n {
            acc = acc + vertices[i].dist(vertices[(i + 1) % n]);
            cum.push(acc);
        }
        Polygon { vertices, cum }
    }

    pub fn vertices(&self) -> &[Point<T>] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Edge `i` runs from vertex `i` to vertex `i + 1` (cyclically).
    #[inline]
    pub fn edge(&self, i: usize) -> (Point<T>, Point<T>) {
        let n = self.vertices.len();
        (self.vertices[i], self.vertices[(i + 1) % n])
    }

    pub fn edges(&self) -> impl Iterator<Item = (Point<T>, Point<T>)> + '_ {
        (0..self.len()).map(move |i| self.edge(i))
    }

    pub fn edge_length(&self, i: usize) -> T {
        self.cum[i + 1] - self.cum[i]
    }

    /// Arc length from vertex 0 to vertex `i`.
    pub fn arc_at_vertex(&self, i: usize) -> T {
        self.cum[i]
    }

    pub fn area(&self) -> T {
        signed_area(&self.vertices)
    }

    pub fn perimeter(&self) -> T {
        self.cum[self.vertices.len()]
    }

    pub fn bbox(&self) -> Rect<T> {
        Rect::bounding(&self.vertices).expect("polygon has vertices")
    }

    pub fn translate(&self, d: Point<T>) -> Self {
        Self::from_ccw(self.vertices.iter().map(|&p| p + d).collect())
    }

    /// Uniform scaling about the origin; `s` must be positive.
    pub fn scale(&self, s: T) -> Self {
        Self::from_ccw(self.vertices.iter().map(|&p| p * s).collect())
    }

    /// Closed boundary as a vertex ring (first vertex not repeated).
    pub fn ring(&self) -> &[Point<T>] {
        &self.vertices
    }

    /// Position of the point at parameter `t` on edge `i`.
    pub fn position_on_edge(&self, i: usize, t: T) -> PathPosition<T> {
        PathPosition::wrapped(self.cum[i] + self.edge_length(i) * t, self.perimeter())
    }

    /// Index of the edge containing arc length `arc` (already wrapped).
    pub fn edge_at(&self, arc: T) -> usize {
        let n = self.vertices.len();
        // partition_point gives the first vertex whose cumulative length exceeds arc
        let k = self.cum[..n].partition_point(|&c| c <= arc);
        k.saturating_sub(1).min(n - 1)
    }

    pub fn point_at(&self, pos: PathPosition<T>) -> Point<T> {
        let arc = PathPosition::wrapped(pos.0, self.perimeter()).0;
        let i = self.edge_at(arc);
        let (a, b) = self.edge(i);
        let len = self.edge_length(i);
        if len <= T::zero() {
            return a;
        }
        a.lerp(b, ((arc - self.cum[i]) / len).min(T::one()))
    }

    /// Forward (counterclockwise) arc length from `a` to `b`.
    pub fn forward_distance(&self, a: PathPosition<T>, b: PathPosition<T>) -> T {
        let d = b.0 - a.0;
        if d < T::zero() {
            d + self.perimeter()
        } else {
            d
        }
    }

    /// Shortest distance from `a` to `b` along the boundary; at most half the perimeter.
    pub fn perimeter_distance(&self, a: PathPosition<T>, b: PathPosition<T>) -> T {
        let f = self.forward_distance(a, b);
        f.min(self.perimeter() - f)
    }

    pub fn dist_to_boundary(&self, p: Point<T>) -> T {
        self.edges()
            .map(|(a, b)| dist_to_segment(p, a, b))
            .fold(T::infinity(), T::min)
    }

    /// Winding-number containment with a boundary band of width [`BOUNDARY_TOL`].
    pub fn classify(&self, p: Point<T>) -> Containment {
        if self.dist_to_boundary(p) <= T::lit(BOUNDARY_TOL) {
            return Containment::Boundary;
        }
        if winding_number(&self.vertices, p) != 0 {
            Containment::Inside
        } else {
            Containment::Outside
        }
    }

    /// Inside or on the boundary.
    pub fn contains(&self, p: Point<T>) -> bool {
        self.classify(p) != Containment::Outside
    }

    /// Area of the intersection with an axis-aligned rectangle.
    pub fn clip_area(&self, r: &Rect<T>) -> T {
        let bb = self.bbox();
        if bb.max.x <= r.min.x || bb.min.x >= r.max.x || bb.max.y <= r.min.y || bb.min.y >= r.max.y {
            return T::zero();
        }
        if r.contains_rect(&bb) {
            return self.area();
        }
        let clipped = clip_to_rect(&self.vertices, r);
        signed_area(&clipped).max(T::zero())
    }
}

pub fn point_in_polygon<T: Scalar>(pt: Point<T>, p: &Polygon<T>) -> Containment {
    p.classify(pt)
}

/// Winding number of `ring` around `p` (Sunday's crossing rule).
pub fn winding_number<T: Scalar>(ring: &[Point<T>], p: Point<T>) -> i32 {
    let n = ring.len();
    let mut wn = 0;
    for i in 0..n {
        let a = ring[i];
        let b = ring[(i + 1) % n];
        if a.y <= p.y {
            if b.y > p.y && orient(a, b, p) > T::zero() {
                wn += 1;
            }
        } else if b.y <= p.y && orient(a, b, p) < T::zero() {
            wn -= 1;
        }
    }
    wn
}

/// Sutherland–Hodgman clipping of a ring against the four half-planes of `r`.
pub fn clip_to_rect<T: Scalar>(ring: &[Point<T>], r: &Rect<T>) -> Vec<Point<T>> {
    let mut cur: Vec<Point<T>> = ring.to_vec();
    let mut next = Vec::with_capacity(ring.len() + 4);
    // (axis, bound, keep_greater)
    let planes = [
        (0, r.min.x, true),
        (0, r.max.x, false),
        (1, r.min.y, true),
        (1, r.max.y, false),
    ];
    for (axis, bound, keep_greater) in planes {
        if cur.is_empty() {
            break;
        }
        next.clear();
        let coord = |p: &Point<T>| if axis == 0 { p.x } else { p.y };
        let inside = |p: &Point<T>| {
            if keep_greater {
                coord(p) >= bound
            } else {
                coord(p) <= bound
            }
        };
        let n = cur.len();
        for i in 0..n {
            let a = cur[i];
            let b = cur[(i + 1) % n];
            let ia = inside(&a);
            let ib = inside(&b);
            if ia {
                next.push(a);
            }
            if ia != ib {
                let t = (bound - coord(&a)) / (coord(&b) - coord(&a));
                let mut q = a.lerp(b, t);
                if axis == 0 {
                    q.x = bound;
                } else {
                    q.y = bound;
                }
                next.push(q);
            }
        }
        std::mem::swap(&mut cur, &mut next);
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(pts: &[(f64, f64)]) -> Polygon<f64> {
        Polygon::new(pts.iter().map(|&(x, y)| Point::new(x, y)).collect()).unwrap()
    }

    fn unit_square() -> Polygon<f64> {
        poly(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)])
    }

    #[test]
    fn areas() {
        assert_eq!(unit_square().area(), 1.0);
        assert_eq!(poly(&[(0.0, 0.0), (2.0, 0.0), (0.0, 2.0)]).area(), 2.0);
    }

    #[test]
    fn clockwise_input_is_reoriented() {
        let p = poly(&[(0.0, 0.0), (0.0, 1.0), (1.0, 1.0), (1.0, 0.0)]);
        assert!(p.area() > 0.0);
    }

    #[test]
    fn duplicate_vertices_are_dropped() {
        let p = poly(&[(0.0, 0.0), (1.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 0.0)]);
        assert_eq!(p.len(), 3);
    }

    #[test]
    fn rejects_bowtie_and_degenerate() {
        let bow = vec![
            Point::new(0.0, 0.0),
            Point::new(2.0, 2.0),
            Point::new(2.0, 0.0),
            Point::new(0.0, 2.0),
        ];
        assert!(!is_simple(&bow));
        assert!(matches!(Polygon::new(bow), Err(Error::NotSimple(_, _))));
        let two = vec![Point::new(0.0, 0.0), Point::new(1.0, 0.0), Point::new(0.0, 0.0)];
        assert!(matches!(Polygon::new(two), Err(Error::TooFewVertices(_))));
        let nan = vec![
            Point::new(f64::NAN, 0.0),
            Point::new(1.0, 0.0),
            Point::new(0.0, 1.0),
        ];
        assert_eq!(Polygon::new(nan), Err(Error::NonFinite));
    }

    #[test]
    fn point_classification() {
        let s = unit_square();
        assert_eq!(s.classify(Point::new(0.5, 0.5)), Containment::Inside);
        assert_eq!(s.classify(Point::new(1.0, 0.5)), Containment::Boundary);
        assert_eq!(s.classify(Point::new(1.5, 0.5)), Containment::Outside);
    }

    #[test]
    fn clip_basic() {
        let s = unit_square();
        assert_eq!(s.clip_area(&Rect::from_bounds(0.0, 0.0, 1.0, 1.0)), 1.0);
        assert_eq!(s.clip_area(&Rect::from_bounds(2.0, 2.0, 3.0, 3.0)), 0.0);
        assert!((s.clip_area(&Rect::from_bounds(0.5, -1.0, 3.0, 0.25)) - 0.125).abs() < 1e-15);
    }

    #[test]
    fn clip_concave_bridge() {
        // U shape: the clip window cuts both prongs, producing a zero-width bridge
        let u = poly(&[
            (0.0, 0.0),
            (3.0, 0.0),
            (3.0, 3.0),
            (2.0, 3.0),
            (2.0, 1.0),
            (1.0, 1.0),
            (1.0, 3.0),
            (0.0, 3.0),
        ]);
        let r = Rect::from_bounds(0.0, 2.0, 3.0, 3.0);
        assert!((u.clip_area(&r) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn perimeter_distances() {
        let s = unit_square();
        let p = |a: f64| PathPosition::wrapped(a, s.perimeter());
        assert_eq!(s.perimeter_distance(p(1.0), p(1.0)), 0.0);
        assert_eq!(s.perimeter_distance(p(0.0), p(2.0)), 2.0);
        assert!((s.perimeter_distance(p(0.3), p(3.9)) - 0.4).abs() < 1e-12);
        assert_eq!(s.point_at(p(1.5)), Point::new(1.0, 0.5));
        assert_eq!(s.point_at(p(4.0)), Point::new(0.0, 0.0));
    }
}
