//! Dense Gauss-Jordan helpers over the rationals.

use num_traits::{One, Zero};

use crate::poly::Rational;

/// Solves `A X = B` for square nonsingular `A` (`n x n`) and `B` (`n x k`).
/// Returns `None` if `A` is singular.
pub(crate) fn solve_square(
    mut a: Vec<Vec<Rational>>,
    mut b: Vec<Vec<Rational>>,
) -> Option<Vec<Vec<Rational>>> {
    let n = a.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = Rational::one() / &a[col][col];
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        for x in b[col].iter_mut() {
            *x *= &inv;
        }
        let (pa, pb) = (a[col].clone(), b[col].clone());
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for (x, p) in a[r].iter_mut().zip(&pa) {
                *x -= &factor * p;
            }
            for (x, p) in b[r].iter_mut().zip(&pb) {
                *x -= &factor * p;
            }
        }
    }
    Some(b)
}

/// Finds `x` with `sum_j x_j * columns[j] = target`, or `None` if the
/// target is outside the column span. Columns need not be independent;
/// free coordinates are set to zero.
pub(crate) fn solve_columns(columns: &[&[Rational]], target: &[Rational]) -> Option<Vec<Rational>> {
    let rows = target.len();
    let ncols = columns.len();
    // Augmented matrix, one row per coordinate.
    let mut m: Vec<Vec<Rational>> = (0..rows)
        .map(|i| {
            let mut row: Vec<Rational> = columns.iter().map(|c| c[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Rational::one() / &m[r][c];
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot).skip(c) {
                *x -= &factor * p;
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if m[r..].iter().any(|row| !row[ncols].is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); ncols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = m[i][ncols].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn int(x: i64) -> Rational {
        Rational::from_integer(BigInt::from(x))
    }

    #[test]
    fn solve_columns_consistent_and_inconsistent() {
        let c1 = [int(1), int(0), int(1)];
        let c2 = [int(0), int(1), int(1)];
        let target = [int(2), int(3), int(5)];
        let x = solve_columns(&[&c1, &c2], &target).unwrap();
        assert_eq!(x, vec![int(2), int(3)]);
        assert!(solve_columns(&[&c1, &c2], &[int(1), int(1), int(0)]).is_none());
        assert_eq!(solve_columns(&[], &[int(0), int(0)]), Some(vec![]));
        assert!(solve_columns(&[], &[int(1)]).is_none());
    }
}
