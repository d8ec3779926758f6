//! Output-sensitive classification.
//!
//! A module `M(c)` is the L∞ ball of radius 1 around the center of `c`, so it
//! meets `∂P` exactly when the center lies in `∂P ⊕ [-1,1]²`. That band is the
//! union of one hexagon per edge; each hexagon is walked column by column.
//! Centers outside the band are resolved by a scanline parity sweep.

use super::classify::{window_for, CellClassification};
use crate::geom::Polygon;
use crate::grid::Cell;
use crate::scalar::Scalar;

const TOUCH: u8 = 1;
const STRICT: u8 = 2;

fn to_i64<T: Scalar>(v: T) -> i64 {
    v.to_i64().unwrap_or(0)
}

/// Same output as [`super::classify_cells`], in time proportional to the
/// number of edges plus the number of cells visited.
pub fn trace_classify_cells<T: Scalar>(p: &Polygon<T>) -> CellClassification {
    let window = window_for(p);
    let w = window.width() as usize;
    let h = window.height() as usize;
    let mut band = vec![0u8; w * h];
    let one = T::one();
    let half = T::half();
    let idx = |col: i64, row: i64| -> Option<usize> {
        let dc = col - window.min.col;
        let dr = row - window.min.row;
        (dc >= 0 && dr >= 0 && (dc as usize) < w && (dr as usize) < h).then(|| dr as usize * w + dc as usize)
    };

    for (a, b) in p.edges() {
        let c0 = to_i64((a.x.min(b.x) - T::lit(1.5)).ceil());
        let c1 = to_i64((a.x.max(b.x) + half).floor());
        let dx = b.x - a.x;
        for col in c0..=c1 {
            let cx = T::int(col) + half;
            let (ymin, ymax, open) = if dx == T::zero() {
                if (a.x - cx).abs() > one {
                    continue;
                }
                (a.y.min(b.y), a.y.max(b.y), (a.x - cx).abs() < one)
            } else {
                let t1 = (cx - one - a.x) / dx;
                let t2 = (cx + one - a.x) / dx;
                let lo = t1.min(t2).max(T::zero());
                let hi = t1.max(t2).min(one);
                if lo > hi {
                    continue;
                }
                let ya = a.y + (b.y - a.y) * lo;
                let yb = a.y + (b.y - a.y) * hi;
                (ya.min(yb), ya.max(yb), lo < hi)
            };
            let r0 = to_i64((ymin - T::lit(1.5)).ceil());
            let r1 = to_i64((ymax + half).floor());
            for row in r0..=r1 {
                let cy = T::int(row) + half;
                if cy < ymin - one || cy > ymax + one {
                    continue;
                }
                let Some(i) = idx(col, row) else { continue };
                band[i] |= TOUCH;
                if open && cy > ymin - one && cy < ymax + one {
                    band[i] |= STRICT;
                }
            }
        }
    }

    let mut cc = CellClassification::empty(window);
    let n = p.len();
    let mut order: Vec<usize> = (0..n).collect();
    let ylo = |e: usize| {
        let (a, b) = p.edge(e);
        a.y.min(b.y)
    };
    order.sort_by(|&i, &j| ylo(i).partial_cmp(&ylo(j)).unwrap().then(i.cmp(&j)));
    let mut next = 0;
    let mut active: Vec<usize> = Vec::new();
    let mut xs: Vec<T> = Vec::new();
    for row in window.min.row..=window.max.row {
        let cy = T::int(row) + half;
        while next < n && ylo(order[next]) <= cy {
            active.push(order[next]);
            next += 1;
        }
        active.retain(|&e| {
            let (a, b) = p.edge(e);
            a.y.max(b.y) > cy
        });
        xs.clear();
        for &e in &active {
            let (a, b) = p.edge(e);
            let (lo, hi) = if a.y <= b.y { (a, b) } else { (b, a) };
            if lo.y <= cy && cy < hi.y {
                let t = (cy - lo.y) / (hi.y - lo.y);
                xs.push(lo.x + (hi.x - lo.x) * t);
            }
        }
        xs.sort_by(|u, v| u.partial_cmp(v).unwrap());
        let mut inside_cols: Vec<(i64, i64)> = Vec::new();
        for pair in xs.chunks_exact(2) {
            let c0 = to_i64((pair[0] - half).ceil());
            let c1 = to_i64((pair[1] - half).floor());
            if c0 <= c1 {
                inside_cols.push((c0, c1));
            }
        }
        let mut k = 0;
        for col in window.min.col..=window.max.col {
            while k < inside_cols.len() && inside_cols[k].1 < col {
                k += 1;
            }
            let inside = k < inside_cols.len() && inside_cols[k].0 <= col;
            let flags = band[idx(col, row).unwrap()];
            let touch = flags & TOUCH != 0;
            let strict = flags & STRICT != 0;
            let c = Cell::new(col, row);
            if touch || inside {
                cc.set(c, inside && !strict, true);
            }
        }
    }
    cc
}
