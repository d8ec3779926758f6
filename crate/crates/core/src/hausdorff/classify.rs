use crate::geom::{Polygon, Rect};
use crate::grid::{Cell, CellBounds, CellSet};
use crate::scalar::{Scalar, AREA_TOL};

/// Per-cell module predicates over a window covering every module that meets the polygon.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellClassification {
    window: CellBounds,
    subset: Vec<bool>,
    intersects: Vec<bool>,
}

impl CellClassification {
    pub(crate) fn empty(window: CellBounds) -> Self {
        let n = (window.width() * window.height()) as usize;
        CellClassification {
            window,
            subset: vec![false; n],
            intersects: vec![false; n],
        }
    }

    pub(crate) fn index(&self, c: Cell) -> Option<usize> {
        if !self.window.contains(c) {
            return None;
        }
        let dc = (c.col - self.window.min.col) as usize;
        let dr = (c.row - self.window.min.row) as usize;
        Some(dr * self.window.width() as usize + dc)
    }

    pub(crate) fn set(&mut self, c: Cell, subset: bool, intersects: bool) {
        let i = self.index(c).expect("cell inside classification window");
        self.subset[i] = subset;
        self.intersects[i] = intersects;
    }

    pub fn window(&self) -> CellBounds {
        self.window
    }

    /// `M(c) ⊆ P`.
    pub fn module_subset_of_p(&self, c: Cell) -> bool {
        self.index(c).is_some_and(|i| self.subset[i])
    }

    /// `M(c) ∩ P ≠ ∅`.
    pub fn module_intersects_p(&self, c: Cell) -> bool {
        self.index(c).is_some_and(|i| self.intersects[i])
    }

    pub fn subset_cells(&self) -> CellSet {
        self.window
            .cells()
            .filter(|&c| self.module_subset_of_p(c))
            .collect()
    }

    pub fn intersecting_cells(&self) -> CellSet {
        self.window
            .cells()
            .filter(|&c| self.module_intersects_p(c))
            .collect()
    }
}

/// Cells whose module may meet the bounding box of `p`.
pub(crate) fn window_for<T: Scalar>(p: &Polygon<T>) -> CellBounds {
    let bb = p.bbox();
    let lo = |v: T| (v - T::lit(1.5)).floor().to_i64().unwrap_or(0);
    let hi = |v: T| (v + T::half()).ceil().to_i64().unwrap_or(0);
    CellBounds {
        min: Cell::new(lo(bb.min.x), lo(bb.min.y)),
        max: Cell::new(hi(bb.max.x), hi(bb.max.y)),
    }
}

/// Reference classification: clips `p` against every module in the window.
pub fn classify_cells<T: Scalar>(p: &Polygon<T>) -> CellClassification {
    let mut cc = CellClassification::empty(window_for(p));
    let four = T::lit(4.0);
    let tol = T::lit(AREA_TOL);
    for c in window_for(p).cells() {
        let m: Rect<T> = c.module();
        let a = p.clip_area(&m);
        let subset = (a - four).abs() <= tol;
        let intersects = a > tol || p.edges().any(|(u, v)| m.intersects_segment(u, v));
        cc.set(c, subset, intersects);
    }
    cc
}
