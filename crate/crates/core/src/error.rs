use thiserror::Error;

/// Errors raised by the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid variety: {0}")]
    InvalidVariety(String),

    #[error("invalid factor sheaf: Omega^{p} on P^{n} requires 0 <= p <= n and n >= 1")]
    InvalidFactor { n: u32, p: u32 },

    #[error("sheaf has {got} factors but the variety has {expected}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("factor {index} of the sheaf lives on P^{got} but the variety factor is P^{expected}")]
    DimensionMismatch {
        index: usize,
        expected: u32,
        got: u32,
    },

    #[error("twist has length {got}, expected {expected}")]
    TwistLength { expected: usize, got: usize },

    #[error(
        "product Omega^{p}(..) (x) Omega^{q}(..) on factor {factor} is outside the atom class; \
         enable the Schur product rule to expand it"
    )]
    NotRepresentable { factor: usize, p: u32, q: u32 },

    #[error("sheaf is not Ulrich: h^{degree}(V({twist}h)) = {dim}")]
    NotUlrich { twist: i64, degree: usize, dim: String },

    #[error("alpha table is not natural: h^{degree} of column {column} in row {row} is {dim}")]
    NotNatural {
        row: usize,
        column: String,
        degree: usize,
        dim: String,
    },

    #[error("q = {q} is out of range 0..={d}")]
    QOutOfRange { q: usize, d: usize },

    #[error("the table for q = {q} has terms on both sides of V(-qh); it is a monad, not a resolution")]
    NotAResolution { q: usize },

    #[error("alternating rank sum {got} differs from rank(V) = {expected}")]
    RankMismatch { expected: String, got: String },

    #[error("search bound too small: Ulrich candidate {0} found on the boundary shell")]
    BoundTooSmall(String),

    #[error("{0}")]
    Precondition(String),

    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
