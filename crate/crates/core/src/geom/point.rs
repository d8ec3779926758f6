use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Point<T> {
    pub x: T,
    pub y: T,
}

impl<T: Scalar> Point<T> {
    #[inline]
    pub fn new(x: T, y: T) -> Self {
        Point { x, y }
    }

    pub fn from_f64(x: f64, y: f64) -> Self {
        Point::new(T::lit(x), T::lit(y))
    }

    #[inline]
    pub fn dot(self, o: Self) -> T {
        self.x * o.x + self.y * o.y
    }

    #[inline]
    pub fn cross(self, o: Self) -> T {
        self.x * o.y - self.y * o.x
    }

    #[inline]
    pub fn norm_sq(self) -> T {
        self.dot(self)
    }

    #[inline]
    pub fn norm(self) -> T {
        self.x.hypot(self.y)
    }

    #[inline]
    pub fn dist(self, o: Self) -> T {
        (self - o).norm()
    }

    #[inline]
    pub fn lerp(self, o: Self, t: T) -> Self {
        self + (o - self) * t
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn cast<U: Scalar>(self) -> Point<U> {
        Point::new(U::lit(self.x.to_f64_lossy()), U::lit(self.y.to_f64_lossy()))
    }
}

impl<T: Scalar> Add for Point<T> {
    type Output = Self;
    #[inline]
    fn add(self, o: Self) -> Self {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl<T: Scalar> Sub for Point<T> {
    type Output = Self;
    #[inline]
    fn sub(self, o: Self) -> Self {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

impl<T: Scalar> Mul<T> for Point<T> {
    type Output = Self;
    #[inline]
    fn mul(self, s: T) -> Self {
        Point::new(self.x * s, self.y * s)
    }
}

impl<T: Scalar> Neg for Point<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Point::new(-self.x, -self.y)
    }
}

/// Sign of the turn `a -> b -> c`: positive for a left turn.
#[inline]
pub fn orient<T: Scalar>(a: Point<T>, b: Point<T>, c: Point<T>) -> T {
    (b - a).cross(c - a)
}

/// Closest point to `p` on segment `ab`, with its parameter in `[0, 1]`.
pub fn closest_on_segment<T: Scalar>(p: Point<T>, a: Point<T>, b: Point<T>) -> (Point<T>, T) {
    let d = b - a;
    let len_sq = d.norm_sq();
    if len_sq <= T::zero() {
        return (a, T::zero());
    }
    let t = ((p - a).dot(d) / len_sq).max(T::zero()).min(T::one());
    (a + d * t, t)
}

#[inline]
pub fn dist_to_segment<T: Scalar>(p: Point<T>, a: Point<T>, b: Point<T>) -> T {
    p.dist(closest_on_segment(p, a, b).0)
}

/// Axis-aligned rectangle `[min.x, max.x] × [min.y, max.y]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Rect<T> {
    pub min: Point<T>,
    pub max: Point<T>,
}

impl<T: Scalar> Rect<T> {
    pub fn new(min: Point<T>, max: Point<T>) -> Self {
        Rect { min, max }
    }

    pub fn from_bounds(x0: T, y0: T, x1: T, y1: T) -> Self {
        Rect::new(Point::new(x0, y0), Point::new(x1, y1))
    }

    pub fn width(&self) -> T {
        self.max.x - self.min.x
    }

    pub fn height(&self) -> T {
        self.max.y - self.min.y
    }

    pub fn area(&self) -> T {
        self.width() * self.height()
    }

    pub fn is_degenerate(&self) -> bool {
        !(self.width() > T::zero() && self.height() > T::zero())
    }

    pub fn center(&self) -> Point<T> {
        (self.min + self.max) * T::half()
    }

    pub fn contains(&self, p: Point<T>) -> bool {
        p.x >= self.min.x && p.x <= self.max.x && p.y >= self.min.y && p.y <= self.max.y
    }

    pub fn contains_rect(&self, o: &Rect<T>) -> bool {
        self.contains(o.min) && self.contains(o.max)
    }

    pub fn inflate(&self, d: T) -> Self {
        Rect::new(
            Point::new(self.min.x - d, self.min.y - d),
            Point::new(self.max.x + d, self.max.y + d),
        )
    }

    pub fn union(&self, o: &Rect<T>) -> Self {
        Rect::new(
            Point::new(self.min.x.min(o.min.x), self.min.y.min(o.min.y)),
            Point::new(self.max.x.max(o.max.x), self.max.y.max(o.max.y)),
        )
    }

    /// Corners in counterclockwise order starting at `min`.
    pub fn corners(&self) -> [Point<T>; 4] {
        [
            self.min,
            Point::new(self.max.x, self.min.y),
            self.max,
            Point::new(self.min.x, self.max.y),
        ]
    }

    pub fn bounding(points: &[Point<T>]) -> Option<Self> {
        let first = *points.first()?;
        Some(points.iter().skip(1).fold(Rect::new(first, first), |r, p| {
            Rect::new(
                Point::new(r.min.x.min(p.x), r.min.y.min(p.y)),
                Point::new(r.max.x.max(p.x), r.max.y.max(p.y)),
            )
        }))
    }

    /// Closed segment/rectangle intersection test (Liang–Barsky).
    pub fn intersects_segment(&self, a: Point<T>, b: Point<T>) -> bool {
        self.clip_segment(a, b).is_some()
    }

    /// Parameter range of the segment `a -> b` inside the closed rectangle (Liang–Barsky).
    pub fn clip_segment(&self, a: Point<T>, b: Point<T>) -> Option<(T, T)> {
        let d = b - a;
        let mut t0 = T::zero();
        let mut t1 = T::one();
        let checks = [
            (-d.x, a.x - self.min.x),
            (d.x, self.max.x - a.x),
            (-d.y, a.y - self.min.y),
            (d.y, self.max.y - a.y),
        ];
        for (p, q) in checks {
            if p == T::zero() {
                if q < T::zero() {
                    return None;
                }
            } else {
                let r = q / p;
                if p < T::zero() {
                    if r > t1 {
                        return None;
                    }
                    t0 = t0.max(r);
                } else {
                    if r < t0 {
                        return None;
                    }
                    t1 = t1.min(r);
                }
            }
        }
        (t0 <= t1).then_some((t0, t1))
    }

    /// Euclidean distance from `p` to the rectangle (zero inside).
    pub fn dist_to_point(&self, p: Point<T>) -> T {
        let dx = (self.min.x - p.x).max(p.x - self.max.x).max(T::zero());
        let dy = (self.min.y - p.y).max(p.y - self.max.y).max(T::zero());
        dx.hypot(dy)
    }
}
