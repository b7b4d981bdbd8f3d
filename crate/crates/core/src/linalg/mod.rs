//! Exact linear algebra over `M_d(Q)`.

mod basis;
mod commutator;
pub(crate) mod dense;
mod matrix;
mod vandermonde;

use thiserror::Error;

pub use basis::{CanonicalSpace, SpanBasis};
pub use commutator::{commutator_decomposition, zero_diagonal_conjugate};
pub use matrix::MatrixQ;
pub use vandermonde::{default_nodes, vandermonde_extract};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not square ({rows} rows, a row of length {cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("empty matrix")]
    Empty,
    #[error("interpolation nodes are not pairwise distinct")]
    DuplicateNodes,
    #[error("expected {expected} values, got {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("matrix has nonzero trace {0}")]
    NonzeroTrace(crate::poly::Rational),
}
