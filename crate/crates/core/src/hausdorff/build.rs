use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::classify::CellClassification;
use super::trace::trace_classify_cells;
use crate::error::{Error, Result};
use crate::geom::Polygon;
use crate::grid::{Cell, CellSet};
use crate::scalar::Scalar;

/// Order in which connector candidates are tried.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Q4Strategy {
    /// Lexicographic cell order.
    #[default]
    Arbitrary,
    /// Largest overlap with the polygon first, ties lexicographic.
    GreedyOverlap,
}

/// Construction stage that first contributed a cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Stage {
    Q1,
    Q2,
    Q3,
    Q4,
}

#[derive(Debug, Clone, PartialEq)]
pub struct HausdorffBuild {
    pub q1: CellSet,
    pub q2: CellSet,
    pub q3: CellSet,
    pub q4: CellSet,
    pub result: CellSet,
    pub provenance: BTreeMap<Cell, Stage>,
}

/// Cells whose module lies in `P`, and even-even cells whose module meets `P`.
pub fn build_q1_q2(cc: &CellClassification) -> (CellSet, CellSet) {
    let q1 = cc.subset_cells();
    let q2 = cc
        .intersecting_cells()
        .iter()
        .filter(|c| c.is_even_even())
        .collect();
    (q1, q2)
}

/// Both mediating cells of every point-contact.
pub fn build_q3(q12: &CellSet) -> CellSet {
    q12.point_contacts()
        .into_iter()
        .flat_map(|(a, b)| [Cell::new(a.col, b.row), Cell::new(b.col, a.row)])
        .collect()
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            let nx = self.parent[y];
            self.parent[y] = r;
            y = nx;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = (ra.min(rb), ra.max(rb));
        self.parent[hi] = lo;
        true
    }
}

/// The two cells on opposite sides of `c` that would be even-even, if any.
fn q2_pair(c: Cell) -> Option<(Cell, Cell)> {
    let ec = c.col.rem_euclid(2) == 0;
    let er = c.row.rem_euclid(2) == 0;
    match (ec, er) {
        (false, true) => Some((c.offset(-1, 0), c.offset(1, 0))),
        (true, false) => Some((c.offset(0, -1), c.offset(0, 1))),
        _ => None,
    }
}

/// Connector cells joining the components of `q123`.
///
/// A candidate must meet `P` with its module and sit between two Q2 cells on
/// opposite sides; it is admitted only if it merges two components.
pub fn build_q4<T: Scalar>(
    q123: &CellSet,
    cc: &CellClassification,
    p: &Polygon<T>,
    strategy: Q4Strategy,
) -> Result<CellSet> {
    let comps = q123.components();
    if comps.len() <= 1 {
        return Ok(CellSet::new());
    }
    let mut comp_of: BTreeMap<Cell, usize> = BTreeMap::new();
    for (k, comp) in comps.iter().enumerate() {
        for &c in comp {
            comp_of.insert(c, k);
        }
    }
    let is_q2 = |c: Cell| c.is_even_even() && cc.module_intersects_p(c) && q123.contains(c);
    let mut candidates: Vec<Cell> = cc
        .window()
        .cells()
        .filter(|&c| !q123.contains(c) && cc.module_intersects_p(c))
        .filter(|&c| q2_pair(c).is_some_and(|(a, b)| is_q2(a) && is_q2(b)))
        .collect();
    candidates.sort();
    if strategy == Q4Strategy::GreedyOverlap {
        let mut keyed: Vec<(T, Cell)> = candidates.iter().map(|&c| (p.clip_area(&c.rect()), c)).collect();
        keyed.sort_by(|x, y| y.0.partial_cmp(&x.0).unwrap().then(x.1.cmp(&y.1)));
        candidates = keyed.into_iter().map(|(_, c)| c).collect();
    }
    let mut dsu = Dsu {
        parent: (0..comps.len()).collect(),
    };
    let mut remaining = comps.len();
    let mut q4 = CellSet::new();
    for c in candidates {
        if remaining == 1 {
            break;
        }
        let (a, b) = q2_pair(c).unwrap();
        let (ka, kb) = (comp_of[&a], comp_of[&b]);
        if dsu.find(ka) == dsu.find(kb) {
            continue;
        }
        q4.insert(c);
        for nb in c.neighbors4() {
            if let Some(&k) = comp_of.get(&nb) {
                if dsu.union(ka, k) {
                    remaining -= 1;
                }
            }
        }
    }
    if remaining > 1 {
        return Err(Error::Invariant(format!(
            "no admissible connector joins the remaining {remaining} components"
        )));
    }
    Ok(q4)
}

/// Builds `Q = Q1 ∪ Q2 ∪ Q3 ∪ Q4` and checks that it is a grid polygon.
pub fn construct_hausdorff<T: Scalar>(p: &Polygon<T>, strategy: Q4Strategy) -> Result<HausdorffBuild> {
    let cc = trace_classify_cells(p);
    construct_from_classification(p, &cc, strategy)
}

pub fn construct_from_classification<T: Scalar>(
    p: &Polygon<T>,
    cc: &CellClassification,
    strategy: Q4Strategy,
) -> Result<HausdorffBuild> {
    let (q1, q2) = build_q1_q2(cc);
    let q12 = q1.union(&q2);
    let q3 = build_q3(&q12);
    let q123 = q12.union(&q3);
    let q4 = build_q4(&q123, cc, p, strategy)?;
    let result = q123.union(&q4);
    let mut provenance = BTreeMap::new();
    for (stage, set) in [
        (Stage::Q4, &q4),
        (Stage::Q3, &q3),
        (Stage::Q2, &q2),
        (Stage::Q1, &q1),
    ] {
        for c in set.iter() {
            provenance.insert(c, stage);
        }
    }
    result
        .validate_grid_polygon()
        .map_err(|e| Error::Invariant(format!("constructed cell set is not a grid polygon: {e}")))?;
    if let Some(c) = result.iter().find(|&c| !cc.module_intersects_p(c)) {
        return Err(Error::Invariant(format!("cell {c:?} does not meet the polygon")));
    }
    Ok(HausdorffBuild {
        q1,
        q2,
        q3,
        q4,
        result,
        provenance,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Point;
    use crate::hausdorff::classify_cells;

    fn block(cols: &[i64], rows: &[i64]) -> CellSet {
        cols.iter()
            .flat_map(|&c| rows.iter().map(move |&r| Cell::new(c, r)))
            .collect()
    }

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
    fn square_sets() {
        let p = square(4.0);
        let cc = classify_cells(&p);
        assert_eq!(cc, trace_classify_cells(&p));
        let (q1, q2) = build_q1_q2(&cc);
        assert_eq!(q1, block(&[1, 2], &[1, 2]));
        assert_eq!(q2, block(&[0, 2, 4], &[0, 2, 4]));
        let all: Vec<i64> = (-1..=4).collect();
        assert_eq!(cc.intersecting_cells(), block(&all, &all));
        let b = construct_hausdorff(&p, Q4Strategy::Arbitrary).unwrap();
        assert!(b.result.is_grid_polygon());
        assert!(q1.union(&q2).iter().all(|c| b.result.contains(c)));
        assert_eq!(b.provenance[&Cell::new(1, 1)], Stage::Q1);
        assert_eq!(b.provenance[&Cell::new(0, 0)], Stage::Q2);
    }

    #[test]
    fn mediators_of_contacts() {
        let q = CellSet::from_pairs(&[(0, 0), (1, 1)]);
        assert_eq!(build_q3(&q), CellSet::from_pairs(&[(1, 0), (0, 1)]));
        assert!(build_q3(&CellSet::from_pairs(&[(0, 0), (1, 0)])).is_empty());
    }

    #[test]
    fn connector_between_two_q2_cells() {
        // thin strip whose modules reach (0,0) and (2,0) but not (1,0)'s Q1 status
        let p = Polygon::new(vec![
            Point::new(0.2, 0.4),
            Point::new(2.8, 0.4),
            Point::new(2.8, 0.6),
            Point::new(0.2, 0.6),
        ])
        .unwrap();
        let cc = classify_cells(&p);
        let q123 = CellSet::from_pairs(&[(0, 0), (2, 0)]);
        let q4 = build_q4(&q123, &cc, &p, Q4Strategy::Arbitrary).unwrap();
        assert_eq!(q4, CellSet::from_pairs(&[(1, 0)]));
        let connected = CellSet::from_pairs(&[(0, 0), (1, 0)]);
        assert!(build_q4(&connected, &cc, &p, Q4Strategy::GreedyOverlap)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn tiny_triangle() {
        let p = Polygon::new(vec![
            Point::new(0.6, 0.6),
            Point::new(0.9, 0.6),
            Point::new(0.75, 0.9),
        ])
        .unwrap();
        let cc = classify_cells(&p);
        assert!(cc.subset_cells().is_empty());
        assert_eq!(cc.intersecting_cells(), block(&[0, 1], &[0, 1]));
        assert_eq!(cc, trace_classify_cells(&p));
        let b = construct_hausdorff(&p, Q4Strategy::Arbitrary).unwrap();
        assert_eq!(b.result, CellSet::from_pairs(&[(0, 0)]));
    }
}
