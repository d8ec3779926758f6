use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use super::cell::{Cell, GridVertex};
use super::cycle::GridCycle;
use crate::error::{Error, Result};
use crate::geom::{Point, Rect};
use crate::scalar::Scalar;

/// Finite set of cells with deterministic (row-major by column, then row) iteration.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct CellSet {
    cells: BTreeSet<Cell>,
}

/// Inclusive cell-index bounding box.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CellBounds {
    pub min: Cell,
    pub max: Cell,
}

impl CellBounds {
    pub fn width(&self) -> i64 {
        self.max.col - self.min.col + 1
    }

    pub fn height(&self) -> i64 {
        self.max.row - self.min.row + 1
    }

    pub fn contains(&self, c: Cell) -> bool {
        c.col >= self.min.col && c.col <= self.max.col && c.row >= self.min.row && c.row <= self.max.row
    }

    pub fn grow(&self, d: i64) -> Self {
        CellBounds {
            min: self.min.offset(-d, -d),
            max: self.max.offset(d, d),
        }
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (self.min.col..=self.max.col)
            .flat_map(move |c| (self.min.row..=self.max.row).map(move |r| Cell::new(c, r)))
    }
}

#[derive(Serialize, Deserialize)]
struct CellSetJson {
    cells: Vec<[i64; 2]>,
}

impl FromIterator<Cell> for CellSet {
    fn from_iter<I: IntoIterator<Item = Cell>>(iter: I) -> Self {
        CellSet {
            cells: iter.into_iter().collect(),
        }
    }
}

impl<'a> IntoIterator for &'a CellSet {
    type Item = Cell;
    type IntoIter = std::iter::Copied<std::collections::btree_set::Iter<'a, Cell>>;
    fn into_iter(self) -> Self::IntoIter {
        self.cells.iter().copied()
    }
}

impl CellSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs(pairs: &[(i64, i64)]) -> Self {
        pairs.iter().map(|&(c, r)| Cell::new(c, r)).collect()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    #[inline]
    pub fn contains(&self, c: Cell) -> bool {
        self.cells.contains(&c)
    }

    pub fn insert(&mut self, c: Cell) -> bool {
        self.cells.insert(c)
    }

    pub fn remove(&mut self, c: Cell) -> bool {
        self.cells.remove(&c)
    }

    pub fn iter(&self) -> impl Iterator<Item = Cell> + '_ {
        self.cells.iter().copied()
    }

    pub fn union(&self, o: &CellSet) -> CellSet {
        self.cells.union(&o.cells).copied().collect()
    }

    pub fn extend<I: IntoIterator<Item = Cell>>(&mut self, it: I) {
        self.cells.extend(it);
    }

    pub fn bounds(&self) -> Option<CellBounds> {
        let mut it = self.cells.iter();
        let first = *it.next()?;
        let mut b = CellBounds {
            min: first,
            max: first,
        };
        for c in it {
            b.min.col = b.min.col.min(c.col);
            b.min.row = b.min.row.min(c.row);
            b.max.col = b.max.col.max(c.col);
            b.max.row = b.max.row.max(c.row);
        }
        Some(b)
    }

    /// Bounding rectangle in plane coordinates.
    pub fn rect<T: Scalar>(&self) -> Option<Rect<T>> {
        let b = self.bounds()?;
        Some(Rect::from_bounds(
            T::int(b.min.col),
            T::int(b.min.row),
            T::int(b.max.col + 1),
            T::int(b.max.row + 1),
        ))
    }

    /// Point-adjacent pairs with neither shared edge-neighbor in the set.
    pub fn point_contacts(&self) -> Vec<(Cell, Cell)> {
        let mut out = Vec::new();
        for c in self.iter() {
            for d in [c.offset(1, 1), c.offset(1, -1)] {
                if self.contains(d)
                    && !self.contains(Cell::new(d.col, c.row))
                    && !self.contains(Cell::new(c.col, d.row))
                {
                    out.push((c, d));
                }
            }
        }
        out
    }

    /// Edge-connected components, each sorted, ordered by their smallest cell.
    pub fn components(&self) -> Vec<Vec<Cell>> {
        let mut seen: BTreeSet<Cell> = BTreeSet::new();
        let mut comps = Vec::new();
        for start in self.iter() {
            if seen.contains(&start) {
                continue;
            }
            let mut comp = vec![start];
            seen.insert(start);
            let mut queue = VecDeque::from([start]);
            while let Some(c) = queue.pop_front() {
                for n in c.neighbors4() {
                    if self.contains(n) && seen.insert(n) {
                        comp.push(n);
                        queue.push_back(n);
                    }
                }
            }
            comp.sort();
            comps.push(comp);
        }
        comps
    }

    /// Complement cells (inside the bounding box grown by one) that are not
    /// edge-reachable from the outside, smallest first.
    pub fn holes(&self) -> Vec<Cell> {
        let Some(b) = self.bounds() else {
            return Vec::new();
        };
        let g = b.grow(1);
        let mut reached: BTreeSet<Cell> = BTreeSet::new();
        let mut queue = VecDeque::from([g.min]);
        reached.insert(g.min);
        while let Some(c) = queue.pop_front() {
            for n in c.neighbors4() {
                if g.contains(n) && !self.contains(n) && reached.insert(n) {
                    queue.push_back(n);
                }
            }
        }
        g.cells()
            .filter(|&c| !self.contains(c) && !reached.contains(&c))
            .collect()
    }

    /// No holes, treating point-adjacent cells as connected.
    pub fn is_hole_free(&self) -> bool {
        self.holes().is_empty()
    }

    /// Edge-connected and without holes.
    pub fn is_simply_connected(&self) -> Result<bool> {
        if self.is_empty() {
            return Err(Error::EmptyCellSet);
        }
        Ok(self.components().len() == 1 && self.is_hole_free())
    }

    /// Checks that the set is a grid polygon, naming the first offending feature.
    pub fn validate_grid_polygon(&self) -> Result<()> {
        if self.is_empty() {
            return Err(Error::EmptyCellSet);
        }
        if let Some(&(a, b)) = self.point_contacts().first() {
            return Err(Error::PointContact(a, b));
        }
        let comps = self.components();
        if comps.len() > 1 {
            return Err(Error::Disconnected {
                components: comps.len(),
                witness: comps[1][0],
            });
        }
        if let Some(&h) = self.holes().first() {
            return Err(Error::Hole(h));
        }
        Ok(())
    }

    pub fn is_grid_polygon(&self) -> bool {
        self.validate_grid_polygon().is_ok()
    }

    /// Directed unit boundary edges with the set on their left.
    pub fn boundary_edges(&self) -> Vec<(GridVertex, GridVertex)> {
        let mut out = Vec::new();
        for c in self.iter() {
            let (x, y) = (c.col, c.row);
            if !self.contains(c.offset(0, -1)) {
                out.push((GridVertex::new(x, y), GridVertex::new(x + 1, y)));
            }
            if !self.contains(c.offset(1, 0)) {
                out.push((GridVertex::new(x + 1, y), GridVertex::new(x + 1, y + 1)));
            }
            if !self.contains(c.offset(0, 1)) {
                out.push((GridVertex::new(x + 1, y + 1), GridVertex::new(x, y + 1)));
            }
            if !self.contains(c.offset(-1, 0)) {
                out.push((GridVertex::new(x, y + 1), GridVertex::new(x, y)));
            }
        }
        out
    }

    /// Boundary as plane segments, usable for any cell set.
    pub fn boundary_segments<T: Scalar>(&self) -> Vec<(Point<T>, Point<T>)> {
        self.boundary_edges()
            .into_iter()
            .map(|(a, b)| (a.to_point(), b.to_point()))
            .collect()
    }

    /// Counterclockwise boundary cycle, starting at the smallest boundary vertex.
    pub fn boundary_cycle(&self) -> Result<GridCycle> {
        self.validate_grid_polygon()?;
        let edges = self.boundary_edges();
        let mut next: HashMap<GridVertex, GridVertex> = HashMap::with_capacity(edges.len());
        for &(a, b) in &edges {
            if next.insert(a, b).is_some() {
                return Err(Error::Invariant(format!("boundary vertex {a:?} has two exits")));
            }
        }
        let start = *next.keys().min().expect("non-empty set has boundary");
        let mut verts = vec![start];
        let mut cur = next[&start];
        while cur != start {
            verts.push(cur);
            cur = *next
                .get(&cur)
                .ok_or_else(|| Error::Invariant(format!("boundary broken at {cur:?}")))?;
            if verts.len() > edges.len() {
                return Err(Error::Invariant("boundary does not close".into()));
            }
        }
        if verts.len() != edges.len() {
            return Err(Error::Invariant(format!(
                "boundary has {} edges but the traced cycle only {}",
                edges.len(),
                verts.len()
            )));
        }
        GridCycle::new(verts)
    }

    pub fn to_json(&self) -> String {
        let j = CellSetJson {
            cells: self.iter().map(|c| [c.col, c.row]).collect(),
        };
        serde_json::to_string(&j).expect("cell set serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let j: CellSetJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Ok(j.cells.into_iter().map(|[c, r]| Cell::new(c, r)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn block(w: i64, h: i64) -> CellSet {
        (0..w)
            .flat_map(|c| (0..h).map(move |r| Cell::new(c, r)))
            .collect()
    }

    #[test]
    fn point_contact_detection() {
        let s = CellSet::from_pairs(&[(0, 0), (1, 1)]);
        assert_eq!(s.point_contacts(), vec![(Cell::new(0, 0), Cell::new(1, 1))]);
        let s = CellSet::from_pairs(&[(0, 0), (1, 0), (1, 1)]);
        assert!(s.point_contacts().is_empty());
        let s = CellSet::from_pairs(&[(0, 1), (1, 0)]);
        assert_eq!(s.point_contacts(), vec![(Cell::new(0, 1), Cell::new(1, 0))]);
    }

    #[test]
    fn simple_connectivity() {
        assert!(block(3, 3).is_simply_connected().unwrap());
        let mut ring = block(3, 3);
        ring.remove(Cell::new(1, 1));
        assert!(!ring.is_simply_connected().unwrap());
        assert_eq!(ring.holes(), vec![Cell::new(1, 1)]);
        let diag = CellSet::from_pairs(&[(0, 0), (1, 1)]);
        assert!(!diag.is_simply_connected().unwrap());
        assert_eq!(CellSet::new().is_simply_connected(), Err(Error::EmptyCellSet));
    }

    #[test]
    fn diagonal_ring_is_hole_free_only_with_eight_connectivity_off() {
        // four cells around (1,1) touching only at corners enclose it
        let s = CellSet::from_pairs(&[(1, 0), (2, 1), (1, 2), (0, 1)]);
        assert_eq!(s.holes(), vec![Cell::new(1, 1)]);
    }

    #[test]
    fn cycles_of_small_sets() {
        let one = CellSet::from_pairs(&[(0, 0)]).boundary_cycle().unwrap();
        assert_eq!(
            one.vertices(),
            &[
                GridVertex::new(0, 0),
                GridVertex::new(1, 0),
                GridVertex::new(1, 1),
                GridVertex::new(0, 1)
            ]
        );
        let domino = CellSet::from_pairs(&[(0, 0), (1, 0)]).boundary_cycle().unwrap();
        assert_eq!(domino.len(), 6);
    }

    #[test]
    fn cycle_errors_name_the_problem() {
        let mut ring = block(3, 3);
        ring.remove(Cell::new(1, 1));
        assert_eq!(ring.boundary_cycle(), Err(Error::Hole(Cell::new(1, 1))));
        let pc = CellSet::from_pairs(&[(0, 0), (1, 0), (2, 1), (2, 2)]);
        assert_eq!(
            pc.boundary_cycle(),
            Err(Error::PointContact(Cell::new(1, 0), Cell::new(2, 1)))
        );
        let split = CellSet::from_pairs(&[(0, 0), (3, 0)]);
        assert!(matches!(
            split.boundary_cycle(),
            Err(Error::Disconnected { components: 2, .. })
        ));
    }

    #[test]
    fn json_roundtrip() {
        let s = CellSet::from_pairs(&[(0, 0), (-1, 2)]);
        assert_eq!(s.to_json(), r#"{"cells":[[-1,2],[0,0]]}"#);
        assert_eq!(CellSet::from_json(&s.to_json()).unwrap(), s);
    }
}
