use std::collections::{BTreeMap, HashSet};

use super::cell::{Cell, GridVertex};
use super::cellset::CellSet;
use crate::error::{Error, Result};
use crate::geom::Point;
use crate::scalar::Scalar;

/// Simple cycle in the integer grid graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridCycle {
    vertices: Vec<GridVertex>,
}

impl GridCycle {
    pub fn new(vertices: Vec<GridVertex>) -> Result<Self> {
        let n = vertices.len();
        if n < 4 {
            return Err(Error::InvalidCycle(format!("needs at least 4 vertices, got {n}")));
        }
        for i in 0..n {
            let (a, b) = (vertices[i], vertices[(i + 1) % n]);
            if a.l1(b) != 1 {
                return Err(Error::InvalidCycle(format!(
                    "{a:?} and {b:?} are not grid neighbors"
                )));
            }
        }
        let mut seen = HashSet::with_capacity(n);
        if let Some(v) = vertices.iter().find(|v| !seen.insert(**v)) {
            return Err(Error::InvalidCycle(format!("vertex {v:?} repeats")));
        }
        Ok(GridCycle { vertices })
    }

    pub fn vertices(&self) -> &[GridVertex] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Twice the signed enclosed area; positive when counterclockwise.
    pub fn signed_area2(&self) -> i64 {
        let n = self.vertices.len();
        (0..n)
            .map(|i| {
                let (a, b) = (self.vertices[i], self.vertices[(i + 1) % n]);
                a.x * b.y - a.y * b.x
            })
            .sum()
    }

    pub fn is_ccw(&self) -> bool {
        self.signed_area2() > 0
    }

    pub fn reversed(&self) -> GridCycle {
        let mut v = self.vertices.clone();
        v.reverse();
        GridCycle { vertices: v }
    }

    /// Cells enclosed by the cycle, by even-odd filling along row centers.
    pub fn interior_cells(&self) -> CellSet {
        let n = self.vertices.len();
        let mut crossings: BTreeMap<i64, Vec<i64>> = BTreeMap::new();
        for i in 0..n {
            let (a, b) = (self.vertices[i], self.vertices[(i + 1) % n]);
            if a.x == b.x {
                crossings.entry(a.y.min(b.y)).or_default().push(a.x);
            }
        }
        let mut out = CellSet::new();
        for (row, mut xs) in crossings {
            xs.sort_unstable();
            for pair in xs.chunks_exact(2) {
                for col in pair[0]..pair[1] {
                    out.insert(Cell::new(col, row));
                }
            }
        }
        out
    }

    pub fn to_points<T: Scalar>(&self) -> Vec<Point<T>> {
        self.vertices.iter().map(|v| v.to_point()).collect()
    }

    /// Polyline with collinear intermediate vertices removed.
    pub fn corner_points<T: Scalar>(&self) -> Vec<Point<T>> {
        let n = self.vertices.len();
        let mut out = Vec::new();
        for i in 0..n {
            let prev = self.vertices[(i + n - 1) % n];
            let cur = self.vertices[i];
            let next = self.vertices[(i + 1) % n];
            let d0 = (cur.x - prev.x, cur.y - prev.y);
            let d1 = (next.x - cur.x, next.y - cur.y);
            if d0 != d1 {
                out.push(cur.to_point());
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_cycles() {
        let v = |x, y| GridVertex::new(x, y);
        assert!(GridCycle::new(vec![v(0, 0), v(1, 0), v(1, 1)]).is_err());
        assert!(GridCycle::new(vec![v(0, 0), v(2, 0), v(2, 1), v(0, 1)]).is_err());
        assert!(GridCycle::new(vec![v(0, 0), v(1, 0), v(0, 0), v(1, 0)]).is_err());
    }

    #[test]
    fn fill_l_tromino() {
        let s = CellSet::from_pairs(&[(0, 0), (1, 0), (0, 1)]);
        let c = s.boundary_cycle().unwrap();
        assert!(c.is_ccw());
        assert_eq!(c.signed_area2(), 6);
        assert_eq!(c.interior_cells(), s);
        assert_eq!(c.corner_points::<f64>().len(), 6);
    }
}
