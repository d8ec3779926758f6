use crate::geom::Polygon;
use crate::grid::CellSet;
use crate::scalar::Scalar;

/// Area of the symmetric difference between `p` and the union of the cells of `q`.
pub fn symmetric_difference_area<T: Scalar>(p: &Polygon<T>, q: &CellSet) -> T {
    let overlap = q.iter().fold(T::zero(), |acc, c| acc + p.clip_area(&c.rect()));
    let v = p.area() + T::lit(q.len() as f64) - T::two() * overlap;
    v.max(T::zero())
}

/// Symmetric difference divided by the polygon area.
pub fn symmetric_difference_normalized<T: Scalar>(p: &Polygon<T>, q: &CellSet) -> T {
    symmetric_difference_area(p, q) / p.area()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Point;

    fn rect(w: f64, h: f64) -> Polygon<f64> {
        Polygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(w, 0.0),
            Point::new(w, h),
            Point::new(0.0, h),
        ])
        .unwrap()
    }

    #[test]
    fn aligned_rectangles() {
        let p = rect(2.0, 2.0);
        let q = CellSet::from_pairs(&[(0, 0), (1, 0), (0, 1), (1, 1)]);
        assert_eq!(symmetric_difference_area(&p, &q), 0.0);
        let p = rect(2.0, 1.0);
        let q = CellSet::from_pairs(&[(0, 0)]);
        assert!((symmetric_difference_area(&p, &q) - 1.0).abs() < 1e-12);
        assert!((symmetric_difference_normalized(&p, &q) - 0.5).abs() < 1e-12);
        let far = CellSet::from_pairs(&[(5, 5)]);
        assert!((symmetric_difference_area(&p, &far) - 3.0).abs() < 1e-12);
    }
}
