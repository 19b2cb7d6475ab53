use thiserror::Error;

use crate::solution::Solution;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("evaluation failed: {0}")]
    Evaluation(String),

    #[error("evaluation budget exhausted")]
    BudgetExhausted,

    /// The wall-clock limit was hit between evaluations. The objective's
    /// history holds every evaluation made so far.
    #[error("time limit exceeded after {evaluations} evaluations")]
    TimeLimit {
        best: Option<Box<Solution>>,
        evaluations: usize,
    },

    /// Every leased evaluation server was lost during a distributed run.
    #[error("all evaluation servers lost after {evaluations} evaluations")]
    WorkersLost {
        best: Option<Box<Solution>>,
        evaluations: usize,
    },

    #[error("protocol error: {0}")]
    Protocol(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }

    /// Best solution carried by a partial-result error, if any.
    pub fn partial_best(&self) -> Option<&Solution> {
        match self {
            Error::TimeLimit { best, .. } | Error::WorkersLost { best, .. } => best.as_deref(),
            _ => None,
        }
    }
}
