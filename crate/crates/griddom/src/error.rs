use crate::grid::Vertex;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex ({},{}) is outside the {m}x{n} grid", v.x, v.y)]
    OutOfBounds { v: Vertex, m: u32, n: u32 },

    #[error("k must be at least 1, got {0}")]
    InvalidK(u32),

    #[error("residue {r} is out of range for modulus {modulus}")]
    InvalidResidue { r: u32, modulus: u32 },

    #[error("the closed-form domination number requires 16 <= min(m,n); got {m}x{n}")]
    FormulaNotApplicable { m: u32, n: u32 },

    #[error("instance with {vertices} vertices exceeds the exact solver limit of {limit}")]
    InstanceTooLarge { vertices: u64, limit: u64 },

    #[error("search budget exhausted after {nodes} nodes; best known upper bound: {best_upper:?}")]
    BudgetExhausted { nodes: u64, best_upper: Option<u64> },

    #[error("invalid agent placement: {0}")]
    InvalidPlacement(String),

    #[error("invalid activation order: {0}")]
    InvalidActivation(String),

    #[error("slots are defined only for cluster-settled agents (agent {0})")]
    NotClusterSettled(usize),

    #[error("set document does not match the {m}x{n} grid: {reason}")]
    DocumentMismatch { m: u32, n: u32, reason: String },

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
