use std::collections::{BTreeSet, HashMap};
use std::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geom::simple::segments_intersect;
use crate::geom::{Point, Polygon};

const MAX_SWAPS: usize = 1_000_000;

/// Random points in the unit square, untangled by 2-opt moves.
///
/// Deterministic in `seed`. If untangling exceeds the swap budget or hits a
/// degenerate configuration, generation restarts with `seed + 1`.
pub fn random_simple_polygon(n: usize, seed: u64) -> Result<Polygon<f64>> {
    if n < 3 {
        return Err(Error::TooFewVertices(n));
    }
    let mut seed = seed;
    loop {
        if let Some(p) = try_untangle(n, seed) {
            return Ok(p);
        }
        seed = seed.wrapping_add(1);
    }
}

type Edge = (usize, usize);

fn edge(u: usize, v: usize) -> Edge {
    (u.min(v), u.max(v))
}

/// Crossing set of the current tour, keyed by point ids so that reversing a
/// stretch of the tour only changes the two edges at its ends.
struct Crossings<'a> {
    pts: &'a [Point<f64>],
    pairs: BTreeSet<(Edge, Edge)>,
    by_edge: HashMap<Edge, Vec<Edge>>,
}

impl<'a> Crossings<'a> {
    fn crosses(&self, e: Edge, f: Edge) -> bool {
        e.0 != f.0
            && e.0 != f.1
            && e.1 != f.0
            && e.1 != f.1
            && segments_intersect(self.pts[e.0], self.pts[e.1], self.pts[f.0], self.pts[f.1])
    }

    fn insert(&mut self, e: Edge, f: Edge) {
        self.pairs.insert((e.min(f), e.max(f)));
        self.by_edge.entry(e).or_default().push(f);
        self.by_edge.entry(f).or_default().push(e);
    }

    fn remove_edge(&mut self, e: Edge) {
        for f in self.by_edge.remove(&e).unwrap_or_default() {
            self.pairs.remove(&(e.min(f), e.max(f)));
            if let Some(v) = self.by_edge.get_mut(&f) {
                v.retain(|&g| g != e);
            }
        }
    }

    fn add_edge(&mut self, e: Edge, tour: &[usize]) {
        let n = tour.len();
        for k in 0..n {
            let f = edge(tour[k], tour[(k + 1) % n]);
            if f != e && self.crosses(e, f) {
                self.insert(e, f);
            }
        }
    }
}

fn try_untangle(n: usize, seed: u64) -> Option<Polygon<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pts: Vec<Point<f64>> = (0..n).map(|_| Point::new(rng.gen(), rng.gen())).collect();
    let mut tour: Vec<usize> = (0..n).collect();
    let mut pos: Vec<usize> = (0..n).collect();
    let mut cx = Crossings {
        pts: &pts,
        pairs: BTreeSet::new(),
        by_edge: HashMap::new(),
    };
    let edges: Vec<Edge> = (0..n).map(|k| edge(k, (k + 1) % n)).collect();
    for a in 0..n {
        for b in a + 1..n {
            if cx.crosses(edges[a], edges[b]) {
                cx.insert(edges[a], edges[b]);
            }
        }
    }
    let index = |pos: &[usize], e: Edge| {
        let (pu, pv) = (pos[e.0], pos[e.1]);
        if (pu + 1) % n == pv {
            pu
        } else {
            pv
        }
    };
    let mut swaps = 0;
    while let Some(&(e, f)) = cx.pairs.iter().next() {
        let (i, j) = {
            let (a, b) = (index(&pos, e), index(&pos, f));
            (a.min(b), a.max(b))
        };
        // edges i and j cross: reversing the tour between them removes the crossing
        cx.remove_edge(e);
        cx.remove_edge(f);
        tour[i + 1..=j].reverse();
        for k in i + 1..=j {
            pos[tour[k]] = k;
        }
        let new_i = edge(tour[i], tour[i + 1]);
        let new_j = edge(tour[j], tour[(j + 1) % n]);
        cx.add_edge(new_i, &tour);
        cx.add_edge(new_j, &tour);
        swaps += 1;
        if swaps > MAX_SWAPS {
            return None;
        }
    }
    Polygon::new(tour.iter().map(|&k| pts[k]).collect()).ok()
}

/// Star-shaped polygon with sorted random angles and radii in `[0.5, 1]`.
pub fn random_star_polygon(n: usize, seed: u64) -> Result<Polygon<f64>> {
    if n < 3 {
        return Err(Error::TooFewVertices(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut angles: Vec<f64> = (0..n)
        .map(|k| (k as f64 + rng.gen::<f64>() * 0.8) / n as f64 * TAU)
        .collect();
    angles.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let pts = angles
        .into_iter()
        .map(|a| {
            let r = rng.gen_range(0.5..1.0);
            Point::new(r * a.cos(), r * a.sin())
        })
        .collect();
    Polygon::new(pts)
}
