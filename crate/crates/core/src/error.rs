use thiserror::Error;

use crate::graph::{Demand, Time, Vertex, VertexAppearance};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    OutOfRangeVertex { vertex: Vertex, n: usize },
    #[error("time label {label} out of range [1, {lifetime}]")]
    OutOfRangeLabel { label: Time, lifetime: Time },
    #[error("self-loop on vertex {0}")]
    SelfLoop(Vertex),
    #[error("window size {delta} must lie in [1, {lifetime}]")]
    BadDelta { delta: Time, lifetime: Time },
    #[error("cover appearance ({}, {}) out of range", .0.vertex, .0.time)]
    OutOfRangeAppearance(VertexAppearance),
    #[error("snapshot at time step {0} is not a star")]
    NotAlwaysStar(Time),
    #[error("exact search exceeded its budget of {0} nodes")]
    BudgetExceeded(u64),
    #[error("{candidates} candidate appearances exceed the brute-force limit of {limit}")]
    TooLarge { candidates: usize, limit: usize },
    #[error("bad configuration: {0}")]
    BadConfig(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("empty input")]
    EmptyInput,
    #[error("line {line}: negative timestamp {timestamp}")]
    NegativeTimestamp { line: usize, timestamp: i64 },
    #[error("duplicate appearance ({}, {}) on line {line}", .appearance.vertex, .appearance.time)]
    DuplicateAppearance { appearance: VertexAppearance, line: usize },
    #[error("sample {0} is not positive")]
    NonPositiveSample(f64),
    #[error("value {0} is not positive")]
    NonPositive(f64),
    #[error("unknown algorithm `{0}`")]
    UnknownAlgorithm(String),
    #[error("cover leaves demand (edge {}, window {}) uncovered", .0.edge, .0.window_start)]
    InvalidCover(Demand),
    #[error("{0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
