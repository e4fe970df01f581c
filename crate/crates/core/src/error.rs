use thiserror::Error;

use crate::ring::AxiomReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("the zero ring is not allowed (order {0})")]
    ZeroRing(usize),

    #[error("malformed table: {0}")]
    TableShape(String),

    #[error("ring axioms violated: {0}")]
    Axioms(AxiomReport),

    #[error("not an ideal: {0}")]
    NotAnIdeal(String),

    #[error("cannot parse `{token}`: {reason}")]
    Parse { token: String, reason: String },

    #[error("element `{0}` is not a vertex of the graph")]
    NotAVertex(String),

    #[error("zero-divisor graph is disconnected: no path between {0} and {1}")]
    Disconnected(String, String),

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("worker pool: {0}")]
    Pool(String),
}

impl Error {
    pub(crate) fn parse(token: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            token: token.into(),
            reason: reason.into(),
        }
    }
}
