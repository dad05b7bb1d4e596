use crate::hexcore::Cell;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("a hexagonal system needs at least one cell")]
    Empty,
    #[error("cell {0} listed more than once")]
    DuplicateCell(Cell),
    #[error("cells do not form an edge-connected set")]
    Disconnected,
    #[error("hole detected: {edges} edges, {vertices} vertices, {cells} cells (expected {expected} edges)")]
    Hole {
        vertices: usize,
        edges: usize,
        cells: usize,
        expected: usize,
    },
    #[error("derived graph is not 2-connected")]
    NotBiconnected,
    #[error("row lengths must be positive and non-increasing, got {0:?}")]
    BadRows(Vec<usize>),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("census of {requested} hexagons exceeds the configured budget of {budget}")]
    BudgetExceeded { requested: usize, budget: usize },
    #[error("more than {cap} alternating cycles; raise the cycle cap to continue")]
    CycleCapExceeded { cap: usize },
    #[error("edge set is not a perfect matching of the graph")]
    NotPerfectMatching,
    #[error("cycle is not alternating with respect to the matching")]
    NotAlternating,
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
