use thiserror::Error;

use crate::grid::Space;
use crate::structures::ValidationReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("space mismatch: {left} vs {right}")]
    SpaceMismatch { left: Space, right: Space },

    #[error("lattice of {needed} sets exceeds the budget of {budget}")]
    BudgetExceeded { needed: u128, budget: usize },

    #[error("invalid grid value {numerator}/{denominator}")]
    InvalidGridValue { numerator: u64, denominator: u32 },

    #[error("invalid space: {0}")]
    InvalidSpace(String),

    #[error("{0}")]
    Validation(ValidationReport),

    #[error("base family is not contained in the topology: {0}")]
    BaseNotOpen(String),

    #[error("topology is not compatible with the primal (witness {0})")]
    Incompatible(String),

    #[error("set {0} is not closed in the primal fuzzy topology")]
    NotPrimalClosed(String),

    #[error(
        "set {0} is closed in the primal fuzzy topology but has no closed/small decomposition"
    )]
    NoDecomposition(String),

    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
