mod common;

use std::collections::BTreeSet;

use common::*;
use gridify_core::grid::nonogram_clues;
use gridify_core::{Cell, CellSet, GridVertex};
use proptest::prelude::*;
use rand::Rng;

fn random_cells(seed: u64, count: usize, side: i64) -> CellSet {
    let mut r = rng(seed);
    (0..count)
        .map(|_| Cell::new(r.gen_range(0..side), r.gen_range(0..side)))
        .collect()
}

/// Grows a set by edge-adjacent random accretion; only sometimes a grid polygon.
fn blob(seed: u64, count: usize) -> CellSet {
    let mut r = rng(seed);
    let mut s = CellSet::from_pairs(&[(0, 0)]);
    while s.len() < count {
        let cells: Vec<Cell> = s.iter().collect();
        let c = cells[r.gen_range(0..cells.len())];
        s.insert(c.neighbors4()[r.gen_range(0..4)]);
    }
    s
}

fn contacts_by_pairs(s: &CellSet) -> BTreeSet<(Cell, Cell)> {
    let cells: Vec<Cell> = s.iter().collect();
    let mut out = BTreeSet::new();
    for &a in &cells {
        for &b in &cells {
            let diagonal = (a.col - b.col).abs() == 1 && (a.row - b.row).abs() == 1;
            if a < b
                && diagonal
                && !s.contains(Cell::new(a.col, b.row))
                && !s.contains(Cell::new(b.col, a.row))
            {
                out.insert((a, b));
            }
        }
    }
    out
}

#[test]
fn ring_has_a_hole() {
    let s: CellSet = (0..3)
        .flat_map(|i| (0..3).map(move |j| Cell::new(i, j)))
        .filter(|&c| c != Cell::new(1, 1))
        .collect();
    assert_eq!(s.holes(), vec![Cell::new(1, 1)]);
    assert!(s.boundary_cycle().is_err());
    assert_eq!(s.boundary_edges().len(), 16);
}

#[test]
fn l_tromino_cycle() {
    let s = CellSet::from_pairs(&[(0, 0), (1, 0), (0, 1)]);
    let c = s.boundary_cycle().unwrap();
    assert_eq!(c.len(), 8);
    assert!(c.is_ccw());
    assert_eq!(c.signed_area2(), 6);
    assert_eq!(c.vertices()[0], GridVertex::new(0, 0));
    assert_eq!(c.corner_points::<f64>().len(), 6);
}

#[test]
fn nonogram_of_plus() {
    let s = CellSet::from_pairs(&[(1, 0), (0, 1), (1, 1), (2, 1), (1, 2)]);
    let clues = nonogram_clues(&s);
    assert_eq!(clues.rows, vec![vec![1], vec![3], vec![1]]);
    assert_eq!(clues.cols, vec![vec![1], vec![3], vec![1]]);
    assert_eq!(clues.to_text(), "rows\n1\n3\n1\ncolumns\n1\n3\n1\n");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn contacts_match_pair_scan(seed in 0u64..10_000) {
        let s = random_cells(seed, 50, 12);
        let got: BTreeSet<(Cell, Cell)> =
            s.point_contacts().into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
        prop_assert_eq!(got, contacts_by_pairs(&s));
    }

    #[test]
    fn cycle_round_trip(seed in 0u64..10_000, count in 1usize..60) {
        let s = blob(seed, count);
        let traceable = s.point_contacts().is_empty() && s.is_simply_connected().unwrap();
        match s.boundary_cycle() {
            Ok(c) => {
                prop_assert!(traceable);
                prop_assert_eq!(c.len(), s.boundary_edges().len());
                prop_assert_eq!(c.len() % 2, 0);
                prop_assert!(c.is_ccw());
                prop_assert_eq!(c.signed_area2(), 2 * s.len() as i64);
                prop_assert_eq!(c.interior_cells(), s.clone());
                prop_assert_eq!(c.reversed().interior_cells(), s);
            }
            Err(_) => prop_assert!(!traceable),
        }
    }

    #[test]
    fn random_sets_trace_iff_grid_polygon(seed in 0u64..10_000, count in 1usize..30) {
        let s = random_cells(seed, count, 6);
        prop_assert_eq!(s.boundary_cycle().is_ok(), s.is_grid_polygon());
        let comps = s.components();
        prop_assert_eq!(comps.iter().map(Vec::len).sum::<usize>(), s.len());
    }

    #[test]
    fn json_round_trip(seed in 0u64..10_000) {
        let s = random_cells(seed, 20, 30);
        prop_assert_eq!(CellSet::from_json(&s.to_json()).unwrap(), s);
    }
}
