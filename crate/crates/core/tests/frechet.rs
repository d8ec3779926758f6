mod common;

use common::*;
use gridify_core::fixtures::comb_polygon;
use gridify_core::frechet::{
    construct_frechet, degenerate_expand, remove_duplicates, trace_visits, VisitMapping,
};
use gridify_core::geom::PathPosition;
use gridify_core::metrics::frechet_closed;
use gridify_core::{GridVertex, Point, Polygon};

const TOL: f64 = 1e-4;

fn corpus(count: u64) -> impl Iterator<Item = Polygon> {
    (0..count).map(|k| {
        let offset = ((k % 9) as f64 / 9.0 + 0.01, (k % 4) as f64 / 4.0 + 0.03);
        placed(
            10 + (k as usize % 50),
            500 + k,
            40.0 + (k % 3) as f64 * 60.0,
            offset,
        )
    })
}

fn d_frechet(p: &Polygon, pts: &[Point]) -> f64 {
    frechet_closed(p.ring(), pts, TOL).unwrap().value
}

/// Every sampled point of each mapped piece lies within `reach` of its vertex.
fn pieces_within(p: &Polygon, vm: &VisitMapping<f64>, reach: f64) -> bool {
    vm.entries.iter().all(|e| {
        let o = e.vertex.to_point::<f64>();
        (0..=20).all(|i| {
            let s = e.start + e.length * i as f64 / 20.0;
            p.point_at(PathPosition::wrapped(s, p.perimeter())).dist(o) <= reach + 1e-9
        })
    })
}

#[test]
fn visits_form_a_chain_and_cover_the_perimeter() {
    for (k, p) in corpus(100).enumerate() {
        let raw = trace_visits(&p);
        assert!(raw.is_chain(), "{k}");
        assert!(
            (raw.total_length() - p.perimeter()).abs() < 1e-9 * p.perimeter(),
            "{k}"
        );
        assert!(pieces_within(&p, &raw, 0.5 * SQRT_2), "{k}");
        let dedup = remove_duplicates(&raw);
        assert!(dedup.is_chain(), "{k}");
        assert!(
            (dedup.total_length() - p.perimeter()).abs() < 1e-9 * p.perimeter(),
            "{k}"
        );
        let vs = dedup.vertices();
        let distinct: std::collections::BTreeSet<GridVertex> = vs.iter().copied().collect();
        assert_eq!(distinct.len(), vs.len(), "{k}");
    }
}

#[test]
fn contiguous_pieces() {
    let p = placed(30, 7, 100.0, (0.2, 0.4));
    let vm = trace_visits(&p);
    let per = p.perimeter();
    for w in vm.entries.windows(2) {
        let gap = (w[0].start + w[0].length - w[1].start).rem_euclid(per);
        assert!(gap.min(per - gap) < 1e-9);
    }
}

#[test]
fn square_cycles() {
    let b = construct_frechet(&rect(0.75, 0.75, 3.25, 3.25)).unwrap();
    assert_eq!(b.cycle.len(), 8);
    assert_eq!(b.cells.len(), 4);
    let b = construct_frechet(&rect(0.25, 0.25, 2.75, 2.75)).unwrap();
    assert_eq!(b.cycle.len(), 12);
    assert_eq!(b.cells.len(), 9);
}

#[test]
fn single_vertex_chain_expands_towards_polygon() {
    let p = poly(&[(1.1, 0.8), (1.3, 0.9), (1.2, 1.3)]);
    let chain = remove_duplicates(&trace_visits(&p));
    assert_eq!(chain.vertices(), vec![GridVertex::new(1, 1)]);
    let c = degenerate_expand(&chain, &p).unwrap();
    assert!(c.is_ccw() && c.len() == 4);
    assert!(c.vertices().contains(&GridVertex::new(2, 2)), "{c:?}");
    let b = construct_frechet(&p).unwrap();
    assert_eq!(b.cells.len(), 1);
}

#[test]
fn two_vertex_chain_expands_towards_polygon() {
    let p = poly(&[(0.8, 2.1), (2.2, 2.1), (2.2, 1.7), (0.8, 1.7)]);
    let chain = remove_duplicates(&trace_visits(&p));
    assert_eq!(chain.len(), 2);
    let c = degenerate_expand(&chain, &p).unwrap();
    assert_eq!(c.len(), 4);
    assert!(c.vertices().iter().all(|v| v.y == 2 || v.y == 1), "{c:?}");
    let q = poly(&[(0.8, 2.3), (2.2, 2.3), (2.2, 1.9), (0.8, 1.9)]);
    let c = degenerate_expand(&remove_duplicates(&trace_visits(&q)), &q).unwrap();
    assert!(c.vertices().iter().all(|v| v.y == 2 || v.y == 3), "{c:?}");
}

#[test]
fn distance_stays_within_claimed_bound() {
    for (k, p) in corpus(25).enumerate() {
        let b = construct_frechet(&p).unwrap();
        assert!(b.cells.is_grid_polygon());
        let d = d_frechet(&p, &b.boundary_points());
        assert!(d <= b.claimed_bound + 1e-3, "{k}: {d} > {}", b.claimed_bound);
        assert!(b.beta_used >= SQRT_2 && b.beta_used >= b.beta_measured);
    }
}

#[test]
fn comb_sits_between_the_bounds() {
    let p = comb_polygon(2.0).unwrap();
    let b = construct_frechet(&p).unwrap();
    let d = d_frechet(&p, &b.boundary_points());
    assert!((b.beta_measured - 2.0).abs() < 1e-6, "{}", b.beta_measured);
    assert!(d >= 0.25 * SQRT_2 - 1e-3, "{d}");
    assert!(d <= (2.0 + SQRT_2) / 2.0 + 1e-3, "{d}");
}

#[test]
fn long_edged_convex_polygons_stay_close() {
    let hexagon = poly(&[
        (10.3, 0.2),
        (30.6, 0.45),
        (40.1, 20.3),
        (30.2, 40.7),
        (10.4, 40.1),
        (0.35, 20.6),
    ]);
    for (k, p) in [rect(0.3, 0.2, 40.3, 30.2), hexagon].iter().enumerate() {
        let b = construct_frechet(p).unwrap();
        let d = d_frechet(p, &b.boundary_points());
        assert!(d <= 0.5 * SQRT_2 + 1e-3, "{k}: {d}");
    }
    let sharp = poly(&[(0.1, 0.4), (50.2, 10.7), (30.9, 44.4)]);
    let b = construct_frechet(&sharp).unwrap();
    assert!(d_frechet(&sharp, &b.boundary_points()) <= b.claimed_bound + 1e-3);
}

#[test]
fn construction_is_deterministic() {
    for p in corpus(5) {
        assert_eq!(construct_frechet(&p).unwrap(), construct_frechet(&p).unwrap());
    }
}

#[test]
fn corner_grazing_input_is_perturbed() {
    let p = rect(0.5, 0.5, 3.5, 2.5);
    let b = construct_frechet(&p).unwrap();
    assert!(b.perturbed);
    assert!(b.cells.is_grid_polygon());
    let placed_well = construct_frechet(&rect(0.6, 0.7, 3.6, 2.7)).unwrap();
    assert!(!placed_well.perturbed);
}
