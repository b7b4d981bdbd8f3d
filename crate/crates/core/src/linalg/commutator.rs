use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{LinalgError, MatrixQ};
use crate::poly::Rational;

fn require_traceless(m: &MatrixQ) -> Result<(), LinalgError> {
    let t = m.trace();
    if t.is_zero() {
        Ok(())
    } else {
        Err(LinalgError::NonzeroTrace(t))
    }
}

/// Finds invertible `P` with `N = P^-1 M P` having zero diagonal.
///
/// Greedy shears `I + tE_ab` move diagonal mass `t * N_ba` from position `a`
/// to position `b` and leave the other diagonal entries alone, so each
/// leading entry is pushed into the trailing block. The trailing block stays
/// traceless, hence the last entry is zero once the others are.
pub fn zero_diagonal_conjugate(m: &MatrixQ) -> Result<(MatrixQ, MatrixQ), LinalgError> {
    let s = Similarity::zero_diagonal(m)?;
    Ok((s.p, s.n))
}

/// `n = p_inv * m * p`, with `p_inv` maintained alongside `p`.
struct Similarity {
    n: MatrixQ,
    p: MatrixQ,
    p_inv: MatrixQ,
}

impl Similarity {
    fn zero_diagonal(m: &MatrixQ) -> Result<Self, LinalgError> {
        require_traceless(m)?;
        let d = m.dim();
        let mut s = Similarity {
            n: m.clone(),
            p: MatrixQ::identity(d),
            p_inv: MatrixQ::identity(d),
        };
        for k in 0..d.saturating_sub(1) {
            if s.n.get(k, k).is_zero() {
                continue;
            }
            if let Some(j) = (k + 1..d).find(|&j| !s.n.get(j, k).is_zero()) {
                let t = s.n.get(k, k) / s.n.get(j, k);
                s.shear(k, j, &t);
                continue;
            }
            let j = match (k + 1..d).find(|&j| !s.n.get(k, j).is_zero()) {
                Some(j) => j,
                None => {
                    // Row and column k are zero off the diagonal. The trailing
                    // block is traceless with a nonzero entry, so some diagonal
                    // entry differs from N_kk; mixing with it creates N_kj != 0.
                    let j = (k + 1..d)
                        .find(|&j| s.n.get(j, j) != s.n.get(k, k))
                        .expect("traceless block with nonzero diagonal entry is not scalar");
                    s.shear(k, j, &Rational::one());
                    j
                }
            };
            let t = -(s.n.get(k, k) / s.n.get(k, j));
            s.shear(j, k, &t);
        }
        debug_assert!((0..d).all(|i| s.n.get(i, i).is_zero()));
        Ok(s)
    }

    /// Conjugates by `I + tE_ab`: `N <- (I - tE_ab) N (I + tE_ab)`.
    fn shear(&mut self, a: usize, b: usize, t: &Rational) {
        let d = self.n.dim();
        for i in 0..d {
            let nb = self.n.get(i, b) + t * self.n.get(i, a);
            self.n.set(i, b, nb);
            let pb = self.p.get(i, b) + t * self.p.get(i, a);
            self.p.set(i, b, pb);
        }
        for j in 0..d {
            let na = self.n.get(a, j) - t * self.n.get(b, j);
            self.n.set(a, j, na);
            let qa = self.p_inv.get(a, j) - t * self.p_inv.get(b, j);
            self.p_inv.set(a, j, qa);
        }
    }
}

/// Writes a traceless matrix as a single commutator: returns `(A, B)` with
/// `AB - BA = M`.
///
/// After conjugating to zero diagonal `N`, take `A' = diag(1, ..., d)` and
/// `B'_jk = N_jk / (j - k)` off the diagonal; then `[A', B'] = N`.
pub fn commutator_decomposition(m: &MatrixQ) -> Result<(MatrixQ, MatrixQ), LinalgError> {
    require_traceless(m)?;
    let d = m.dim();
    if m.is_zero() {
        return Ok((MatrixQ::zeros(d), MatrixQ::zeros(d)));
    }
    let Similarity { n, p, p_inv } = Similarity::zero_diagonal(m)?;
    let a_prime = MatrixQ::diagonal(
        (1..=d)
            .map(|k| Rational::from_integer(BigInt::from(k)))
            .collect(),
    );
    let mut b_prime = MatrixQ::zeros(d);
    for j in 0..d {
        for k in 0..d {
            if j != k && !n.get(j, k).is_zero() {
                let gap = Rational::from_integer(BigInt::from(j as i64 - k as i64));
                b_prime.set(j, k, n.get(j, k) / gap);
            }
        }
    }
    let a = p.mat_mul(&a_prime)?.mat_mul(&p_inv)?;
    let b = p.mat_mul(&b_prime)?.mat_mul(&p_inv)?;
    Ok((a, b))
}
