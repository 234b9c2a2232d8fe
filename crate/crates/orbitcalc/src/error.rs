//! Crate-wide error type. All errors are domain errors: bad input shapes,
//! parity mismatches, non-member partitions, unsupported pseudo-Levi shapes.

use thiserror::Error;

/// Domain error raised by the combinatorial operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A sequence that was required to be a partition is not one.
    #[error("not a partition: {0}")]
    NotAPartition(String),
    /// Size/parity mismatch between a partition and a classical type.
    #[error("size parity mismatch: {0}")]
    SizeParity(String),
    /// A partition fails the membership rule of the requested classical type.
    #[error("not a member: {0}")]
    NotMember(String),
    /// An invalid symbol: gap conditions or row constraints violated.
    #[error("invalid symbol: {0}")]
    InvalidSymbol(String),
    /// Two symbols cannot be compared or combined (parameter/defect mismatch).
    #[error("symbol mismatch: {0}")]
    SymbolMismatch(String),
    /// A pseudo-Levi factor shape not covered by the supported tables.
    #[error("unsupported pseudo-Levi shape: {0}")]
    UnsupportedShape(String),
    /// Any other invalid input.
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    /// A stable machine-readable code for the CLI error object.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NotAPartition(_) => "not_a_partition",
            Error::SizeParity(_) => "size_parity",
            Error::NotMember(_) => "not_member",
            Error::InvalidSymbol(_) => "invalid_symbol",
            Error::SymbolMismatch(_) => "symbol_mismatch",
            Error::UnsupportedShape(_) => "unsupported_shape",
            Error::InvalidInput(_) => "invalid_input",
        }
    }
}
