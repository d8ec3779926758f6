use serde::{Deserialize, Serialize};

use crate::geom::{Point, Rect};
use crate::scalar::Scalar;

/// Unit pixel `[col, col + 1] × [row, row + 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub col: i64,
    pub row: i64,
}

/// Integer vertex of the grid graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GridVertex {
    pub x: i64,
    pub y: i64,
}

impl GridVertex {
    pub const fn new(x: i64, y: i64) -> Self {
        GridVertex { x, y }
    }

    pub fn offset(self, dx: i64, dy: i64) -> Self {
        GridVertex::new(self.x + dx, self.y + dy)
    }

    pub fn l1(self, o: Self) -> i64 {
        (self.x - o.x).abs() + (self.y - o.y).abs()
    }

    pub fn to_point<T: Scalar>(self) -> Point<T> {
        Point::new(T::int(self.x), T::int(self.y))
    }

    /// The unit square centered on this vertex.
    pub fn square<T: Scalar>(self) -> Rect<T> {
        let c = self.to_point::<T>();
        Rect::new(
            Point::new(c.x - T::half(), c.y - T::half()),
            Point::new(c.x + T::half(), c.y + T::half()),
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    EvenEven,
    EvenOdd,
    OddEven,
    OddOdd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Adjacency {
    EdgeAdjacent,
    PointAdjacent,
    None,
}

impl Cell {
    pub const fn new(col: i64, row: i64) -> Self {
        Cell { col, row }
    }

    pub fn offset(self, dc: i64, dr: i64) -> Self {
        Cell::new(self.col + dc, self.row + dr)
    }

    /// Parity of (column, row), using floor-modulo so negative indices alternate too.
    pub fn parity(self) -> Parity {
        match (self.col.rem_euclid(2) == 0, self.row.rem_euclid(2) == 0) {
            (true, true) => Parity::EvenEven,
            (true, false) => Parity::EvenOdd,
            (false, true) => Parity::OddEven,
            (false, false) => Parity::OddOdd,
        }
    }

    pub fn is_even_even(self) -> bool {
        self.parity() == Parity::EvenEven
    }

    pub fn rect<T: Scalar>(self) -> Rect<T> {
        Rect::from_bounds(
            T::int(self.col),
            T::int(self.row),
            T::int(self.col + 1),
            T::int(self.row + 1),
        )
    }

    pub fn center<T: Scalar>(self) -> Point<T> {
        Point::new(T::int(self.col) + T::half(), T::int(self.row) + T::half())
    }

    /// The 2×2 module centered on the cell's center.
    pub fn module<T: Scalar>(self) -> Rect<T> {
        module_of(self)
    }

    /// Edge neighbors: right, up, left, down.
    pub fn neighbors4(self) -> [Cell; 4] {
        [
            self.offset(1, 0),
            self.offset(0, 1),
            self.offset(-1, 0),
            self.offset(0, -1),
        ]
    }

    pub fn neighbors8(self) -> [Cell; 8] {
        [
            self.offset(1, 0),
            self.offset(1, 1),
            self.offset(0, 1),
            self.offset(-1, 1),
            self.offset(-1, 0),
            self.offset(-1, -1),
            self.offset(0, -1),
            self.offset(1, -1),
        ]
    }
}

pub fn module_of<T: Scalar>(c: Cell) -> Rect<T> {
    let h = T::half();
    Rect::from_bounds(
        T::int(c.col) - h,
        T::int(c.row) - h,
        T::int(c.col + 1) + h,
        T::int(c.row + 1) + h,
    )
}

pub fn adjacency(a: Cell, b: Cell) -> Adjacency {
    let dc = (a.col - b.col).abs();
    let dr = (a.row - b.row).abs();
    match (dc, dr) {
        (1, 0) | (0, 1) => Adjacency::EdgeAdjacent,
        (1, 1) => Adjacency::PointAdjacent,
        _ => Adjacency::None,
    }
}
