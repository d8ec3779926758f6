use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::geom::{Point, Polygon};
use crate::grid::GridVertex;
use crate::scalar::Scalar;

/// One visit of the boundary to the square of a grid vertex.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Visit<T> {
    pub vertex: GridVertex,
    /// Arc length where the mapped boundary piece starts.
    pub start: T,
    /// Arc length of the mapped piece.
    pub length: T,
}

/// Cyclic chain of grid vertices, each mapped to a boundary interval.
///
/// Consecutive intervals are contiguous and together cover the perimeter once.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VisitMapping<T> {
    pub entries: Vec<Visit<T>>,
    pub perimeter: T,
}

impl<T: Scalar> VisitMapping<T> {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn vertices(&self) -> Vec<GridVertex> {
        self.entries.iter().map(|e| e.vertex).collect()
    }

    pub fn total_length(&self) -> T {
        self.entries.iter().fold(T::zero(), |a, e| a + e.length)
    }

    /// True when every pair of cyclically consecutive vertices is a grid edge.
    pub fn is_chain(&self) -> bool {
        let n = self.entries.len();
        n == 1 || (0..n).all(|i| self.entries[i].vertex.l1(self.entries[(i + 1) % n].vertex) == 1)
    }
}

fn nearest_vertex<T: Scalar>(p: Point<T>) -> GridVertex {
    GridVertex::new(
        p.x.round().to_i64().unwrap_or(0),
        p.y.round().to_i64().unwrap_or(0),
    )
}

/// Splits every edge at the half-integer lines and records which vertex square
/// each piece lies in, merging consecutive pieces of the same square.
pub(crate) fn trace_raw<T: Scalar>(p: &Polygon<T>) -> VisitMapping<T> {
    let per = p.perimeter();
    let half = T::half();
    let mut entries: Vec<Visit<T>> = Vec::new();
    let mut ts: Vec<T> = Vec::new();
    for i in 0..p.len() {
        let (a, b) = p.edge(i);
        let len = p.edge_length(i);
        let base = p.arc_at_vertex(i);
        ts.clear();
        ts.push(T::zero());
        ts.push(T::one());
        for (u, v) in [(a.x, b.x), (a.y, b.y)] {
            if u == v {
                continue;
            }
            let lo = (u.min(v) - half).ceil().to_i64().unwrap_or(0);
            let hi = (u.max(v) - half).floor().to_i64().unwrap_or(-1);
            for k in lo..=hi {
                let t = (T::int(k) + half - u) / (v - u);
                if t > T::zero() && t < T::one() {
                    ts.push(t);
                }
            }
        }
        ts.sort_by(|x, y| x.partial_cmp(y).unwrap());
        for w in ts.windows(2) {
            let (t0, t1) = (w[0], w[1]);
            if t1 <= t0 {
                continue;
            }
            let vertex = nearest_vertex(a.lerp(b, (t0 + t1) * half));
            let piece = (t1 - t0) * len;
            match entries.last_mut() {
                Some(last) if last.vertex == vertex => last.length = last.length + piece,
                _ => entries.push(Visit {
                    vertex,
                    start: base + t0 * len,
                    length: piece,
                }),
            }
        }
    }
    if entries.len() > 1 && entries[0].vertex == entries[entries.len() - 1].vertex {
        let last = entries.pop().unwrap();
        entries[0].start = last.start;
        entries[0].length = entries[0].length + last.length;
    }
    VisitMapping {
        entries,
        perimeter: per,
    }
}

/// True when the boundary passes within `tol` of a square corner or runs along a square side.
pub(crate) fn is_degenerate<T: Scalar>(p: &Polygon<T>, tol: T) -> bool {
    let half = T::half();
    let off_line = |v: T| ((v - half) - (v - half).round()).abs();
    for (a, b) in p.edges() {
        if (a.x == b.x && off_line(a.x) <= tol) || (a.y == b.y && off_line(a.y) <= tol) {
            return true;
        }
        for (u, v, s, w) in [(a.x, b.x, a.y, b.y), (a.y, b.y, a.x, b.x)] {
            if u == v {
                continue;
            }
            let lo = (u.min(v) - half - tol).ceil().to_i64().unwrap_or(0);
            let hi = (u.max(v) - half + tol).floor().to_i64().unwrap_or(-1);
            for k in lo..=hi {
                let t = ((T::int(k) + half - u) / (v - u)).max(T::zero()).min(T::one());
                let other = s + (w - s) * t;
                if off_line(other) <= tol {
                    return true;
                }
            }
        }
    }
    false
}

/// Visits of `∂P` to grid-vertex squares in boundary order.
pub fn trace_visits<T: Scalar>(p: &Polygon<T>) -> VisitMapping<T> {
    trace_raw(p)
}

/// Removes repeated vertices by cutting out the shorter of the two loops
/// between a pair of occurrences and concatenating its boundary pieces onto
/// the surviving occurrence.
pub fn remove_duplicates<T: Scalar>(vm: &VisitMapping<T>) -> VisitMapping<T> {
    let per = vm.perimeter;
    let src = &vm.entries;
    let mut out: Vec<Visit<T>> = Vec::with_capacity(src.len());
    let mut pos: HashMap<GridVertex, usize> = HashMap::new();
    for (idx, &e) in src.iter().enumerate() {
        let Some(&j) = pos.get(&e.vertex) else {
            pos.insert(e.vertex, out.len());
            out.push(e);
            continue;
        };
        let inner: T = out[j + 1..].iter().fold(T::zero(), |a, v| a + v.length);
        let outer = per - inner - out[j].length - e.length;
        let remove_inner = if inner < outer {
            true
        } else if outer < inner {
            false
        } else {
            // first removed vertex of each side; smaller one is removed
            let first_inner = out.get(j + 1).map(|v| v.vertex);
            let first_outer = src.get(idx + 1).or(out.first()).map(|v| v.vertex);
            match (first_inner, first_outer) {
                (Some(a), Some(b)) => a <= b,
                (None, _) => true,
                (_, None) => false,
            }
        };
        if remove_inner {
            for v in out.drain(j + 1..) {
                pos.remove(&v.vertex);
            }
            out[j].length = out[j].length + inner + e.length;
        } else {
            // keep c and the inner loop; c's piece now starts where c' started
            let mut kept = out.split_off(j);
            kept[0].start = e.start;
            kept[0].length = kept[0].length + e.length + outer;
            return VisitMapping {
                entries: kept,
                perimeter: per,
            };
        }
    }
    VisitMapping {
        entries: out,
        perimeter: per,
    }
}
