//! Error type shared by the whole crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// Two operands were built over different variable tables.
    #[error("context mismatch: {0}")]
    ContextMismatch(String),

    /// An element that is not of the form `c * m * (1 + nilpotent)` was
    /// passed where a unit is required.
    #[error("not a unit: {0}")]
    NotAUnit(String),

    /// An even quantity appeared where an odd one is required, or vice versa.
    #[error("parity mismatch: {0}")]
    ParityMismatch(String),

    /// Matrix shapes are incompatible for the requested operation.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// A matrix with no unit pivot in some nonzero row or column.
    #[error("matrix is not invertible over this ring: {0}")]
    NotInvertible(String),

    /// A module structure failed its defining law (wrong parity label or
    /// wrong square of the structure map).
    #[error("structure mismatch: {0}")]
    StructureMismatch(String),

    /// Input to an invariant-only operation is not invariant.
    #[error("not invariant: {0}")]
    NotInvariant(String),

    /// The head-term decomposition left a nonzero remainder, which would
    /// contradict the vanishing lemma for invariants divisible by `zeta_i`.
    #[error("vanishing lemma violated, nonzero remainder: {0}")]
    LemmaViolation(String),

    /// Malformed expression text.
    #[error("syntax error at byte {pos}: {msg}")]
    SyntaxError { pos: usize, msg: String },

    /// An identifier not declared in the active variable table.
    #[error("unknown variable: {0}")]
    UnknownVariable(String),

    /// Invalid argument outside the syntax of expressions (bad index,
    /// unsupported size, and so on).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
