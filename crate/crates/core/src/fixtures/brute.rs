use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::Polygon;
use crate::grid::{Cell, CellBounds, CellSet};
use crate::metrics::{frechet_closed, hausdorff_boundary_undirected, symmetric_difference_area};

pub const MAX_WINDOW_CELLS: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Objective {
    SymDiff,
    /// Undirected Hausdorff distance between the boundaries.
    HausdorffBoundary,
    Frechet,
}

const OBJECTIVE_TOL: f64 = 1e-6;

/// Every nonempty grid polygon using only cells of `window`, in mask order.
pub fn enumerate_grid_polygons(window: CellBounds) -> Result<Vec<CellSet>> {
    let cells: Vec<Cell> = window.cells().collect();
    if cells.len() > MAX_WINDOW_CELLS {
        return Err(Error::WindowTooLarge(cells.len()));
    }
    let total = 1u32 << cells.len();
    Ok((1..total)
        .into_par_iter()
        .filter_map(|mask| {
            let s: CellSet = cells
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &c)| c)
                .collect();
            s.is_grid_polygon().then_some(s)
        })
        .collect())
}

pub fn objective_value(p: &Polygon<f64>, q: &CellSet, objective: Objective) -> Result<f64> {
    Ok(match objective {
        Objective::SymDiff => symmetric_difference_area(p, q),
        Objective::HausdorffBoundary => {
            let ring = q.boundary_cycle()?.corner_points::<f64>();
            hausdorff_boundary_undirected(p.ring(), &ring, OBJECTIVE_TOL)?.value
        }
        Objective::Frechet => {
            let ring = q.boundary_cycle()?.corner_points::<f64>();
            frechet_closed(p.ring(), &ring, OBJECTIVE_TOL)?.value
        }
    })
}

/// Exhaustively finds the grid polygon inside `window` minimizing `objective`.
///
/// Ties go to the larger cell set, then to the lexicographically smallest
/// sorted cell list.
pub fn brute_force_best_grid_polygon(
    p: &Polygon<f64>,
    window: CellBounds,
    objective: Objective,
) -> Result<(CellSet, f64)> {
    let all = enumerate_grid_polygons(window)?;
    let scored: Vec<(f64, Vec<Cell>, CellSet)> = all
        .into_par_iter()
        .map(|q| {
            let v = objective_value(p, &q, objective)?;
            Ok((v, q.iter().collect(), q))
        })
        .collect::<Result<_>>()?;
    scored
        .into_iter()
        .min_by(|a, b| {
            a.0.total_cmp(&b.0)
                .then_with(|| b.1.len().cmp(&a.1.len()))
                .then_with(|| a.1.cmp(&b.1))
        })
        .map(|(v, _, q)| (q, v))
        .ok_or(Error::EmptyCellSet)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Point;

    fn bounds(c0: i64, r0: i64, c1: i64, r1: i64) -> CellBounds {
        CellBounds {
            min: Cell::new(c0, r0),
            max: Cell::new(c1, r1),
        }
    }

    #[test]
    fn two_by_two_window_has_thirteen() {
        assert_eq!(enumerate_grid_polygons(bounds(0, 0, 1, 1)).unwrap().len(), 13);
        assert!(matches!(
            enumerate_grid_polygons(bounds(0, 0, 4, 3)),
            Err(Error::WindowTooLarge(20))
        ));
    }

    #[test]
    fn symdiff_optima() {
        let unit = Polygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(1.0, 1.0),
            Point::new(0.0, 1.0),
        ])
        .unwrap();
        let (q, v) = brute_force_best_grid_polygon(&unit, bounds(0, 0, 1, 1), Objective::SymDiff).unwrap();
        assert_eq!(q, CellSet::from_pairs(&[(0, 0)]));
        assert!(v.abs() < 1e-12);
        let strip = Polygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(2.0, 0.0),
            Point::new(2.0, 0.5),
            Point::new(0.0, 0.5),
        ])
        .unwrap();
        let (q, v) = brute_force_best_grid_polygon(&strip, bounds(0, 0, 1, 0), Objective::SymDiff).unwrap();
        assert_eq!(q, CellSet::from_pairs(&[(0, 0), (1, 0)]));
        assert!((v - 1.0).abs() < 1e-12);
    }
}
