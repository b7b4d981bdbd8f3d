use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{LinalgError, MatrixQ};
use crate::poly::Rational;

/// The four subspaces of `M_d` that can arise as spans of polynomial values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CanonicalSpace {
    Zero,
    Scalars,
    TraceZero,
    Full,
}

impl CanonicalSpace {
    pub const ALL: [CanonicalSpace; 4] = [
        CanonicalSpace::Zero,
        CanonicalSpace::Scalars,
        CanonicalSpace::TraceZero,
        CanonicalSpace::Full,
    ];

    pub fn rank(self, dim: usize) -> usize {
        match self {
            CanonicalSpace::Zero => 0,
            CanonicalSpace::Scalars => 1,
            CanonicalSpace::TraceZero => dim * dim - 1,
            CanonicalSpace::Full => dim * dim,
        }
    }
}

/// Subspace of `M_d` held as a fully reduced row echelon basis of
/// flattened (row-major) matrices.
///
/// Rows are kept sorted by pivot column; every pivot entry is `1` and every
/// other row is zero in that column, so two bases of the same subspace are
/// equal as values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanBasis {
    dim: usize,
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl SpanBasis {
    pub fn empty(dim: usize) -> Self {
        SpanBasis {
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn canonical(dim: usize, which: CanonicalSpace) -> Self {
        let mut b = Self::empty(dim);
        let gens: Vec<MatrixQ> = match which {
            CanonicalSpace::Zero => vec![],
            CanonicalSpace::Scalars => vec![MatrixQ::identity(dim)],
            CanonicalSpace::TraceZero => {
                let mut g = Vec::new();
                for i in 0..dim {
                    for j in 0..dim {
                        if i != j {
                            g.push(MatrixQ::unit(dim, i, j));
                        }
                    }
                }
                for i in 1..dim {
                    let mut h = MatrixQ::unit(dim, 0, 0);
                    h.set(i, i, -Rational::one());
                    g.push(h);
                }
                g
            }
            CanonicalSpace::Full => (0..dim * dim)
                .map(|k| MatrixQ::unit(dim, k / dim, k % dim))
                .collect(),
        };
        for m in &gens {
            b.insert_mut(m)
                .expect("generators share the basis dimension");
        }
        b
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn row_matrices(&self) -> Vec<MatrixQ> {
        self.rows
            .iter()
            .map(|r| MatrixQ::from_flat(self.dim, r.clone()).expect("row length is d^2"))
            .collect()
    }

    fn check(&self, m: &MatrixQ) -> Result<(), LinalgError> {
        if m.dim() != self.dim {
            return Err(LinalgError::DimensionMismatch {
                expected: self.dim,
                found: m.dim(),
            });
        }
        Ok(())
    }

    /// Residual of `v` after elimination against the basis rows; zero iff
    /// `v` lies in the span.
    fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let factor = v[p].clone();
            for (x, r) in v.iter_mut().zip(row).skip(p) {
                if !r.is_zero() {
                    *x -= &factor * r;
                }
            }
        }
        v
    }

    /// Functional insert: returns the new basis and whether the rank grew.
    pub fn insert(&self, m: &MatrixQ) -> Result<(SpanBasis, bool), LinalgError> {
        let mut next = self.clone();
        let grew = next.insert_mut(m)?;
        Ok((next, grew))
    }

    /// In-place insert; returns whether the rank grew.
    pub fn insert_mut(&mut self, m: &MatrixQ) -> Result<bool, LinalgError> {
        self.check(m)?;
        Ok(self.insert_vector(m.flatten()))
    }

    fn insert_vector(&mut self, v: &[Rational]) -> bool {
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = Rational::one() / &v[p];
        for x in v.iter_mut().skip(p) {
            *x *= &inv;
        }
        for row in &mut self.rows {
            if row[p].is_zero() {
                continue;
            }
            let factor = row[p].clone();
            for (x, y) in row.iter_mut().zip(&v).skip(p) {
                if !y.is_zero() {
                    *x -= &factor * y;
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    pub fn membership(&self, m: &MatrixQ) -> Result<bool, LinalgError> {
        self.check(m)?;
        Ok(self.contains_vector(m.flatten()))
    }

    fn contains_vector(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// `self` is contained in `other`.
    pub fn subspace_of(&self, other: &SpanBasis) -> Result<bool, LinalgError> {
        if self.dim != other.dim {
            return Err(LinalgError::DimensionMismatch {
                expected: other.dim,
                found: self.dim,
            });
        }
        Ok(self.rows.iter().all(|r| other.contains_vector(r)))
    }

    pub fn equals_canonical(&self, which: CanonicalSpace) -> bool {
        let d = self.dim;
        match which {
            CanonicalSpace::Zero => self.rows.is_empty(),
            CanonicalSpace::Scalars => {
                self.rank() == 1 && self.contains_vector(MatrixQ::identity(d).flatten())
            }
            CanonicalSpace::TraceZero => {
                self.rank() == d * d - 1
                    && self.rows.iter().all(|r| {
                        (0..d)
                            .map(|i| &r[i * d + i])
                            .fold(Rational::zero(), |a, b| a + b)
                            .is_zero()
                    })
            }
            CanonicalSpace::Full => self.rank() == d * d,
        }
    }

    /// The canonical space this basis equals, if any. For `d = 1` the
    /// trace-zero space coincides with the zero space; `Zero` is reported.
    pub fn canonical_match(&self) -> Option<CanonicalSpace> {
        CanonicalSpace::ALL
            .into_iter()
            .find(|&c| self.equals_canonical(c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn int(x: i64) -> Rational {
        Rational::from_integer(BigInt::from(x))
    }

    #[test]
    fn insert_same_twice() {
        let e11 = MatrixQ::unit(2, 0, 0);
        let (b, grew) = SpanBasis::empty(2).insert(&e11).unwrap();
        assert!(grew);
        let (b2, grew2) = b.insert(&e11).unwrap();
        assert!(!grew2);
        assert_eq!(b, b2);
    }

    #[test]
    fn units_fill_m2() {
        let mut b = SpanBasis::empty(2);
        for k in 0..4 {
            assert!(b.insert_mut(&MatrixQ::unit(2, k / 2, k % 2)).unwrap());
        }
        assert_eq!(b.rank(), 4);
        assert!(b.equals_canonical(CanonicalSpace::Full));
    }

    #[test]
    fn scalar_multiples_do_not_grow() {
        let mut b = SpanBasis::empty(3);
        assert!(b.insert_mut(&MatrixQ::identity(3)).unwrap());
        assert!(!b.insert_mut(&MatrixQ::scalar(3, int(-7))).unwrap());
        assert!(b.equals_canonical(CanonicalSpace::Scalars));
        assert!(b.membership(&MatrixQ::identity(3)).unwrap());
    }

    #[test]
    fn canonical_spaces_have_expected_rank() {
        for d in 1..=4 {
            for c in CanonicalSpace::ALL {
                let b = SpanBasis::canonical(d, c);
                assert_eq!(b.rank(), c.rank(d), "{c:?} d={d}");
                if d > 1 {
                    assert!(b.equals_canonical(c));
                }
            }
        }
        assert!(!SpanBasis::canonical(2, CanonicalSpace::Full)
            .equals_canonical(CanonicalSpace::TraceZero));
    }

    #[test]
    fn zero_space_is_subspace_of_anything() {
        let z = SpanBasis::empty(3);
        for c in CanonicalSpace::ALL {
            assert!(z.subspace_of(&SpanBasis::canonical(3, c)).unwrap());
        }
        assert!(SpanBasis::canonical(3, CanonicalSpace::Scalars)
            .subspace_of(&SpanBasis::canonical(3, CanonicalSpace::Full))
            .unwrap());
        assert!(!SpanBasis::canonical(3, CanonicalSpace::Scalars)
            .subspace_of(&SpanBasis::canonical(3, CanonicalSpace::TraceZero))
            .unwrap());
    }

    #[test]
    fn echelon_is_canonical_regardless_of_order() {
        let a = MatrixQ::from_integers(&[&[1, 2], &[3, 4]]).unwrap();
        let b = MatrixQ::from_integers(&[&[0, 1], &[-1, 5]]).unwrap();
        let mut x = SpanBasis::empty(2);
        x.insert_mut(&a).unwrap();
        x.insert_mut(&b).unwrap();
        let mut y = SpanBasis::empty(2);
        y.insert_mut(&b).unwrap();
        y.insert_mut(&a.mat_add(&b).unwrap()).unwrap();
        assert_eq!(x, y);
    }

    #[test]
    fn dimension_mismatch() {
        let b = SpanBasis::empty(2);
        assert!(b.insert(&MatrixQ::identity(3)).is_err());
        assert!(b.membership(&MatrixQ::identity(3)).is_err());
        assert!(b.subspace_of(&SpanBasis::empty(3)).is_err());
    }
}
