use alloc::string::String;
use core::fmt;

/// Errors raised by the exact-algebra layer and the verification pipeline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two polynomials (or a polynomial and a point) live in different rings.
    RankMismatch { left: usize, right: usize },
    /// Matrix or vector shapes do not fit together.
    DimensionMismatch { expected: usize, found: usize },
    /// A Lie type string or family/rank pair is not a simple type.
    IllegalType(String),
    /// A simple-root index outside `0..rank`.
    IndexOutOfRange { index: usize, rank: usize },
    /// A polynomial that was required to be divisible was not.
    NotDivisible,
    /// Division by a zero polynomial or zero scalar.
    DivisionByZero,
    /// Text that could not be parsed as a scalar or polynomial.
    Parse(String),
    /// The Weyl group is too large to enumerate element by element.
    GroupTooLarge { order_bound: u64 },
    /// Two independent computations of the same quantity disagreed.
    Inconsistency(String),
    /// A size parameter beyond what the computation supports.
    OutOfRange {
        what: &'static str,
        value: u64,
        max: u64,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::RankMismatch { left, right } => {
                write!(f, "polynomial rank mismatch: {left} vs {right}")
            }
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::IllegalType(s) => write!(f, "illegal Lie type: {s}"),
            Error::IndexOutOfRange { index, rank } => {
                write!(f, "simple root index {index} out of range for rank {rank}")
            }
            Error::NotDivisible => f.write_str("polynomial is not divisible"),
            Error::DivisionByZero => f.write_str("division by zero"),
            Error::Parse(s) => write!(f, "parse error: {s}"),
            Error::GroupTooLarge { order_bound } => {
                write!(f, "Weyl group too large to enumerate (order {order_bound})")
            }
            Error::Inconsistency(s) => write!(f, "internal inconsistency: {s}"),
            Error::OutOfRange { what, value, max } => {
                write!(f, "{what} = {value} exceeds the supported maximum {max}")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
