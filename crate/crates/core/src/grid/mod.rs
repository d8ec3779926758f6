//! The pixel world: cells, modules, adjacency, topology, boundary cycles.

mod cell;
mod cellset;
mod cycle;
mod nonogram;

pub use cell::{adjacency, module_of, Adjacency, Cell, GridVertex, Parity};
pub use cellset::{CellBounds, CellSet};
pub use cycle::GridCycle;
pub use nonogram::{nonogram_clues, NonogramClues};
