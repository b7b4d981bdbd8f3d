use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::LinalgError;
use crate::poly::Rational;

/// Square `d x d` matrix over the rationals, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MatrixQ {
    dim: usize,
    entries: Vec<Rational>,
}

impl MatrixQ {
    pub fn zeros(dim: usize) -> Self {
        MatrixQ {
            dim,
            entries: vec![Rational::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::scalar(dim, Rational::one())
    }

    pub fn scalar(dim: usize, c: Rational) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = c.clone();
        }
        m
    }

    /// Matrix unit `E_{row,col}` (0-based indices).
    pub fn unit(dim: usize, row: usize, col: usize) -> Self {
        let mut m = Self::zeros(dim);
        m.entries[row * dim + col] = Rational::one();
        m
    }

    pub fn diagonal(diag: Vec<Rational>) -> Self {
        let dim = diag.len();
        let mut m = Self::zeros(dim);
        for (i, c) in diag.into_iter().enumerate() {
            m.entries[i * dim + i] = c;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, LinalgError> {
        let dim = rows.len();
        if dim == 0 {
            return Err(LinalgError::Empty);
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != dim) {
            return Err(LinalgError::NotSquare {
                rows: dim,
                cols: bad.len(),
            });
        }
        Ok(MatrixQ {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_integers(rows: &[&[i64]]) -> Result<Self, LinalgError> {
        Self::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&x| Rational::from_integer(BigInt::from(x)))
                        .collect()
                })
                .collect(),
        )
    }

    /// Inverse of [`flatten`](Self::flatten): row-major entries, length `d^2`.
    pub fn from_flat(dim: usize, entries: Vec<Rational>) -> Result<Self, LinalgError> {
        if entries.len() != dim * dim {
            return Err(LinalgError::DimensionMismatch {
                expected: dim * dim,
                found: entries.len(),
            });
        }
        Ok(MatrixQ { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &Rational {
        &self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Rational) {
        self.entries[row * self.dim + col] = value;
    }

    /// Row-major entries.
    pub fn flatten(&self) -> &[Rational] {
        &self.entries
    }

    pub fn into_flat(self) -> Vec<Rational> {
        self.entries
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> {
        self.entries.chunks(self.dim.max(1))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// `true` when the matrix is `c * I` for some `c`.
    pub fn is_scalar(&self) -> bool {
        let d = self.dim;
        let c = &self.entries[0];
        (0..d).all(|i| {
            (0..d).all(|j| {
                let e = &self.entries[i * d + j];
                if i == j {
                    e == c
                } else {
                    e.is_zero()
                }
            })
        })
    }

    fn check(&self, other: &Self) -> Result<(), LinalgError> {
        if self.dim != other.dim {
            return Err(LinalgError::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        Ok(())
    }

    pub fn mat_add(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check(other)?;
        Ok(MatrixQ {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn mat_sub(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check(other)?;
        Ok(MatrixQ {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn mat_scale(&self, c: &Rational) -> Self {
        MatrixQ {
            dim: self.dim,
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mat_mul(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check(other)?;
        let d = self.dim;
        let mut entries = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                let mut acc = Rational::zero();
                for k in 0..d {
                    let a = &self.entries[i * d + k];
                    if a.is_zero() {
                        continue;
                    }
                    let b = &other.entries[k * d + j];
                    if !b.is_zero() {
                        acc += a * b;
                    }
                }
                entries.push(acc);
            }
        }
        Ok(MatrixQ { dim: d, entries })
    }

    /// `self += c * other` in place.
    pub fn add_scaled(&mut self, c: &Rational, other: &Self) -> Result<(), LinalgError> {
        self.check(other)?;
        for (a, b) in self.entries.iter_mut().zip(&other.entries) {
            if !b.is_zero() {
                *a += c * b;
            }
        }
        Ok(())
    }

    pub fn trace(&self) -> Rational {
        (0..self.dim)
            .map(|i| self.entries[i * self.dim + i].clone())
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// `[A, B] = AB - BA`.
    pub fn commutator(&self, other: &Self) -> Result<Self, LinalgError> {
        self.mat_mul(other)?.mat_sub(&other.mat_mul(self)?)
    }

    pub fn transpose(&self) -> Self {
        let d = self.dim;
        let mut m = Self::zeros(d);
        for i in 0..d {
            for j in 0..d {
                m.entries[j * d + i] = self.entries[i * d + j].clone();
            }
        }
        m
    }

    /// Exact inverse by Gauss-Jordan elimination, `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        let d = self.dim;
        let a: Vec<Vec<Rational>> = self.rows().map(<[Rational]>::to_vec).collect();
        let b: Vec<Vec<Rational>> = MatrixQ::identity(d)
            .rows()
            .map(<[Rational]>::to_vec)
            .collect();
        let x = super::dense::solve_square(a, b)?;
        Some(MatrixQ {
            dim: d,
            entries: x.into_iter().flatten().collect(),
        })
    }
}

impl fmt::Display for MatrixQ {
    /// Shell literal form: rows separated by `;`, entries by `,`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}
