use alloc::string::String;

use crate::scalar::Field;

/// Errors raised by the exact algebra routines.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch { expected: Field, found: Field },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("division by zero")]
    DivisionByZero,

    #[error("{0} is not a supported prime modulus")]
    NotPrime(u64),

    #[error("cannot parse scalar `{text}` over {field}")]
    InvalidScalar { field: Field, text: String },

    #[error("structure constant ({0}, {1}, {2}) given more than once")]
    DuplicateEntry(usize, usize, usize),

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("conjugation does not square to the identity")]
    NotAnInvolution,

    #[error("algebra has no two-sided unity")]
    NotTwoSidedUnital,

    #[error("algebra has no {0} unity")]
    NotUnitalOnSide(Side),

    #[error("algebra is neither left nor right Leibniz")]
    NotLeibniz,

    #[error("search space of {size} candidates exceeds the cap of {cap}")]
    SearchSpaceTooLarge { size: u128, cap: u128 },

    #[error("exact idempotent search over Q supports subspaces of dimension at most 2, got {0}")]
    UnsupportedDimensionOverQ(usize),

    #[error("the subspace contains infinitely many idempotents")]
    InfinitelyManyIdempotents,

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("internal consistency check failed: {0}")]
    InternalCheckFailure(String),
}

/// Left or right.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

impl core::fmt::Display for Side {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

pub type Result<T> = core::result::Result<T, Error>;
