use thiserror::Error;

use crate::grid::Cell;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("polygon needs at least 3 distinct vertices, got {0}")]
    TooFewVertices(usize),
    #[error("polygon coordinates must be finite")]
    NonFinite,
    #[error("polygon is not simple: edges {0} and {1} intersect")]
    NotSimple(usize, usize),
    #[error("polygon has zero area")]
    ZeroArea,
    #[error("degenerate bounding box")]
    DegenerateBoundingBox,
    #[error("empty cell set")]
    EmptyCellSet,
    #[error("cell set is disconnected ({components} components, e.g. cell {witness:?})")]
    Disconnected { components: usize, witness: Cell },
    #[error("cell set has a hole at cell {0:?}")]
    Hole(Cell),
    #[error("cell set has a point-contact between {0:?} and {1:?}")]
    PointContact(Cell, Cell),
    #[error("invalid grid cycle: {0}")]
    InvalidCycle(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("enumeration window too large: {0} cells (max 16)")]
    WindowTooLarge(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// True for failures that indicate a bug or a broken theoretical guarantee
    /// rather than bad input.
    pub fn is_invariant_violation(&self) -> bool {
        matches!(self, Error::Invariant(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
