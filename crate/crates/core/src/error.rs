use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("query ({i}, {j}) outside 0 <= i <= j <= {n}")]
    QueryOutOfRange { i: usize, j: usize, n: usize },
    #[error("window width {width} outside 1..={n}")]
    WindowOutOfRange { width: usize, n: usize },
    #[error("expected {expected} wire values, got {got}")]
    WireCount { expected: usize, got: usize },
    #[error("not a permutation of 0..{len}")]
    NotAPermutation { len: usize },
    #[error("inputs are not the canonical seaweed start labels")]
    NotSeaweedInputs,
    #[error("critical point ({start2}/2, {end2}/2) outside the core window")]
    PointOutOfRange { start2: i64, end2: i64 },
    #[error("duplicate input value at wire {wire}")]
    DuplicateInput { wire: usize },
    #[error("sorting permutation is malformed")]
    MalformedSort,
    #[error("run {index} has zero length")]
    ZeroLengthRun { index: usize },
    #[error("runs {index} and {next} repeat the same symbol", next = index + 1)]
    AdjacentEqualRuns { index: usize },
    #[error("malformed run-length text at {position}: {reason}")]
    RleSyntax { position: usize, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
