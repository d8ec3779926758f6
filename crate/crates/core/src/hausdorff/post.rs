//! Local search that shrinks the symmetric difference while keeping a grid
//! polygon within a relaxed Hausdorff bound.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::build::HausdorffBuild;
use crate::geom::{Point, Polygon};
use crate::grid::{Cell, CellSet};
use crate::metrics::{region_within, segments_within, Region, RegionOracle};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PostprocessConfig {
    pub allow_add: bool,
    pub allow_remove: bool,
    pub allow_shift: bool,
    /// Bound enforced on all four directed Hausdorff distances.
    pub relaxed_bound: f64,
    pub max_iterations: usize,
}

impl Default for PostprocessConfig {
    fn default() -> Self {
        PostprocessConfig {
            allow_add: true,
            allow_remove: true,
            allow_shift: true,
            relaxed_bound: 1.5 * std::f64::consts::SQRT_2,
            max_iterations: 100_000,
        }
    }
}

impl PostprocessConfig {
    pub fn none() -> Self {
        PostprocessConfig {
            allow_add: false,
            allow_remove: false,
            allow_shift: false,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Op {
    Add(Cell),
    Remove(Cell),
    Shift(Cell, Cell),
}

struct Context<'a, T: Scalar> {
    poly: &'a Polygon<T>,
    region: RegionOracle<T>,
    boundary: Vec<(Point<T>, Point<T>)>,
    bound: T,
    overlap: HashMap<Cell, T>,
}

impl<T: Scalar> Context<'_, T> {
    fn ov(&mut self, c: Cell) -> T {
        let p = self.poly;
        *self.overlap.entry(c).or_insert_with(|| p.clip_area(&c.rect()))
    }

    fn delta(&mut self, op: Op) -> T {
        let two = T::two();
        match op {
            Op::Add(c) => T::one() - two * self.ov(c),
            Op::Remove(c) => two * self.ov(c) - T::one(),
            Op::Shift(c, d) => two * self.ov(c) - two * self.ov(d),
        }
    }

    fn within_bounds(&self, q: &CellSet) -> bool {
        let q_region = RegionOracle::new(Region::Cells(q));
        let q_segs = q.boundary_segments::<T>();
        segments_within(&self.boundary, q_region.boundary(), self.bound)
            && segments_within(&q_segs, self.region.boundary(), self.bound)
            && region_within(&self.region, &q_region, self.bound)
            && region_within(&q_region, &self.region, self.bound)
    }
}

fn apply(q: &CellSet, op: Op) -> CellSet {
    let mut out = q.clone();
    match op {
        Op::Add(c) => {
            out.insert(c);
        }
        Op::Remove(c) => {
            out.remove(c);
        }
        Op::Shift(c, d) => {
            out.remove(c);
            out.insert(d);
        }
    }
    out
}

fn candidates(q: &CellSet, cfg: &PostprocessConfig) -> Vec<Op> {
    let mut ops = Vec::new();
    if cfg.allow_add {
        let mut adds: Vec<Cell> = q
            .iter()
            .flat_map(|c| c.neighbors4())
            .filter(|c| !q.contains(*c))
            .collect();
        adds.sort();
        adds.dedup();
        ops.extend(adds.into_iter().map(Op::Add));
    }
    if cfg.allow_remove {
        ops.extend(q.iter().map(Op::Remove));
    }
    if cfg.allow_shift {
        for c in q.iter() {
            let mut targets: Vec<Cell> = c.neighbors8().into_iter().filter(|d| !q.contains(*d)).collect();
            targets.sort();
            ops.extend(targets.into_iter().map(|d| Op::Shift(c, d)));
        }
    }
    ops
}

/// Applies the first strictly improving admissible operation until none is left.
///
/// Candidates are adds, then removes, then shifts, each in lexicographic
/// order. An operation is admissible when the result is still a grid polygon
/// and all four directed Hausdorff distances stay within `cfg.relaxed_bound`.
pub fn postprocess<T: Scalar>(build: &HausdorffBuild, p: &Polygon<T>, cfg: &PostprocessConfig) -> CellSet {
    let min_bound = 0.5 * std::f64::consts::SQRT_2;
    let mut ctx = Context {
        poly: p,
        region: RegionOracle::new(Region::Polygon(p)),
        boundary: p.edges().collect(),
        bound: T::lit(cfg.relaxed_bound.max(min_bound) + 1e-6),
        overlap: HashMap::new(),
    };
    let mut q = build.result.clone();
    let improve = T::lit(-1e-12);
    for _ in 0..cfg.max_iterations {
        let mut accepted = None;
        for op in candidates(&q, cfg) {
            if ctx.delta(op) >= improve {
                continue;
            }
            let next = apply(&q, op);
            if next.is_grid_polygon() && ctx.within_bounds(&next) {
                accepted = Some(next);
                break;
            }
        }
        match accepted {
            Some(next) => q = next,
            None => break,
        }
    }
    q
}
