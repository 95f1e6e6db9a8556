//! Exact arithmetic in GF(p), GF(p²) and matrices over them.

mod field;
mod matrix;

pub use field::{arith, ArithOp, Field, FieldElement};
pub use matrix::Matrix;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("unsupported extension degree {0} (only 1 and 2)")]
    BadDegree(u32),
    #[error("no quadratic extension of GF(2)")]
    EvenExtension,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("conjugation requires a degree-2 field")]
    NotQuadratic,
    #[error("dimension mismatch: {0}x{1} vs {2}x{3}")]
    DimensionMismatch(usize, usize, usize, usize),
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not square")]
    NotSquare,
    #[error("empty matrix")]
    Empty,
}
