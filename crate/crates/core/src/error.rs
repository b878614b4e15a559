//! Error types shared across the crate.

use thiserror::Error;

/// Failures raised by coefficient-ring backends.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("`{op}` is not supported by the {ring} backend")]
    Unsupported { op: &'static str, ring: &'static str },
    #[error("`{0}` requires a nonzero argument")]
    ZeroInput(&'static str),
}

/// Failures of monomial and polynomial operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("monomials have {left} and {right} variables")]
    DimensionMismatch { left: usize, right: usize },
    #[error("monomial {divisor} does not divide {dividend}")]
    NotDivisible { divisor: String, dividend: String },
}

/// Polynomial parse failure. `pos` is a byte offset into the parsed text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { pos: usize, name: String },
    #[error("literal `{literal}` at position {pos} is not an element of the coefficient ring")]
    BadLiteral { pos: usize, literal: String },
}

/// Failures of the Gröbner basis drivers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgoError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("input list is empty")]
    EmptyInput,
    #[error("input polynomial #{0} is zero")]
    ZeroInput(usize),
    #[error("signature order violated: g{index} has signature {new} below its predecessor {previous}")]
    SignatureOrder {
        index: usize,
        previous: String,
        new: String,
    },
    #[error("Koszul signatures need comp(i) < comp(j), got e{left} and e{right}")]
    KoszulComponents { left: usize, right: usize },
    #[error("iteration ceiling of {0} exceeded")]
    IterationLimit(u64),
    #[error("time limit of {0:?} exceeded")]
    TimeLimit(std::time::Duration),
    #[error("internal invariant broken: {0}")]
    Internal(String),
}

/// Failures reading a problem description.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProblemError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Poly { line: usize, source: ParseError },
    #[error("missing `{0}:` header")]
    MissingHeader(&'static str),
    #[error("the problem has no generators")]
    NoGenerators,
    #[error("unknown benchmark `{0}` (expected katsura2 or katsura3)")]
    UnknownBenchmark(String),
}

/// Failures of a complete run.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RunError {
    #[error(transparent)]
    Problem(#[from] ProblemError),
    #[error(transparent)]
    Algo(#[from] AlgoError),
    #[error("the {0} coefficient ring is experimental; pass --experimental-ufd to use it")]
    Experimental(String),
}
