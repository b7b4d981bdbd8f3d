use num_bigint::BigInt;
use num_traits::One;

use super::{dense, LinalgError, MatrixQ};
use crate::poly::Rational;

/// Nodes `0, 1, ..., m`.
pub fn default_nodes(m: usize) -> Vec<Rational> {
    (0..=m)
        .map(|k| Rational::from_integer(BigInt::from(k)))
        .collect()
}

/// Recovers `c_0, ..., c_m` from `values[j] = sum_i lambdas[j]^i * c_i`.
///
/// The Vandermonde system is solved entrywise and exactly; it is nonsingular
/// precisely when the nodes are pairwise distinct.
pub fn vandermonde_extract(
    lambdas: &[Rational],
    values: &[MatrixQ],
) -> Result<Vec<MatrixQ>, LinalgError> {
    if values.len() != lambdas.len() {
        return Err(LinalgError::LengthMismatch {
            expected: lambdas.len(),
            found: values.len(),
        });
    }
    let Some(first) = values.first() else {
        return Ok(Vec::new());
    };
    let dim = first.dim();
    if let Some(bad) = values.iter().find(|v| v.dim() != dim) {
        return Err(LinalgError::DimensionMismatch {
            expected: dim,
            found: bad.dim(),
        });
    }
    for (i, a) in lambdas.iter().enumerate() {
        if lambdas[i + 1..].contains(a) {
            return Err(LinalgError::DuplicateNodes);
        }
    }
    let n = lambdas.len();
    let system: Vec<Vec<Rational>> = lambdas
        .iter()
        .map(|lam| {
            let mut row = Vec::with_capacity(n);
            let mut p = Rational::one();
            for _ in 0..n {
                row.push(p.clone());
                p *= lam;
            }
            row
        })
        .collect();
    let rhs: Vec<Vec<Rational>> = values.iter().map(|v| v.flatten().to_vec()).collect();
    let solved = dense::solve_square(system, rhs).ok_or(LinalgError::DuplicateNodes)?;
    solved
        .into_iter()
        .map(|flat| MatrixQ::from_flat(dim, flat))
        .collect()
}
