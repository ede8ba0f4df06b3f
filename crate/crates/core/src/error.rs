use thiserror::Error;

/// Errors raised by the linear-algebra, grammar and entailment routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix contains NaN or infinite entries")]
    NonFinite,

    #[error("matrix is not symmetric (|a[{row}][{col}] - a[{col}][{row}]| = {gap:e})")]
    NotSymmetric { row: usize, col: usize, gap: f64 },

    #[error("expected {expected} entries, got {got}")]
    BadShape { expected: usize, got: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimMismatch { left: usize, right: usize },

    #[error("eigensolver did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("operator is not positive semidefinite (min eigenvalue {min_eigenvalue:e})")]
    NotPsd { min_eigenvalue: f64 },

    #[error("operator is not a density operator (trace {trace})")]
    NotDensity { trace: f64 },

    #[error("operator is zero")]
    ZeroOperator,

    #[error("entailment strength must lie in (0, 1], got {0}")]
    BadK(f64),

    #[error("bad mixture weights: {0}")]
    BadWeights(String),

    #[error("no space assigned to base type '{0}'")]
    UnknownBase(String),

    #[error("reduction pattern does not fit the word sequence: {0}")]
    PatternMismatch(String),

    #[error("index {index} out of range for {len} spaces")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("tensor of {entries} entries exceeds the limit of {limit}")]
    TooLarge { entries: usize, limit: usize },

    #[error("point ({x}, {z}) lies outside the unit disc")]
    OutsideDisc { x: f64, z: f64 },

    #[error("operator is not 2x2 (dimension {0})")]
    NotQubit(usize),

    #[error("grid resolution must be at least 2, got {0}")]
    BadResolution(usize),

    #[error("proposition is empty")]
    EmptyProposition,

    #[error("element {element} outside universe of size {universe}")]
    OutsideUniverse { element: usize, universe: usize },

    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
