//! Exact computation of the linear span of values of noncommutative
//! polynomials on the matrix algebras `M_d(Q)`.
//!
//! * [`poly`]: the free algebra `Q<X1, X2, ...>`.
//! * [`linalg`]: exact matrices, echelon bases, Vandermonde solving and
//!   commutator decompositions.
//! * [`span`]: evaluation, identity and centrality tests, span
//!   classification, Lie ideal and closure checks.
//! * [`linearize`]: reduction of a polynomial to a multilinear one whose
//!   span is contained in the original span.
//! * [`syntax`]: the textual polynomial grammar.
//! * [`report`] and [`suite`]: machine-readable output and batch checks.

pub mod linalg;
pub mod linearize;
pub mod par;
pub mod poly;
pub mod report;
pub mod span;
pub mod suite;
pub mod syntax;

pub use linalg::{CanonicalSpace, LinalgError, MatrixQ, SpanBasis};
pub use linearize::{reduce_to_multilinear, MultilinearReduction, ReductionStep, StepKind};
pub use par::Execution;
pub use poly::{NcPolynomial, Rational, Var, Word};
pub use span::{classify_span, Classification, SampleConfig, SpanReport};
