//! Generators and brute-force oracles shared by the integration tests.
//! Nothing here calls the crate's evaluation or enumeration paths.
#![allow(dead_code)]

use ncspan::{MatrixQ, NcPolynomial, Rational, Var, Word};
use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn int(x: i64) -> Rational {
    Rational::from_integer(BigInt::from(x))
}

pub fn x(i: Var) -> NcPolynomial {
    NcPolynomial::var(i)
}

pub fn word(letters: &[Var]) -> Word {
    Word::new(letters.to_vec()).unwrap()
}

pub fn random_rational(rng: &mut ChaCha8Rng, bound: i64) -> Rational {
    let num = rng.gen_range(-bound..=bound);
    let den = rng.gen_range(1..=bound.max(1));
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn random_nonzero_rational(rng: &mut ChaCha8Rng, bound: i64) -> Rational {
    loop {
        let r = random_rational(rng, bound);
        if !r.is_zero() {
            return r;
        }
    }
}

pub fn random_matrix(rng: &mut ChaCha8Rng, d: usize, bound: i64) -> MatrixQ {
    let rows = (0..d)
        .map(|_| (0..d).map(|_| random_rational(rng, bound)).collect())
        .collect();
    MatrixQ::from_rows(rows).unwrap()
}

pub fn random_int_matrix(rng: &mut ChaCha8Rng, d: usize, bound: i64) -> MatrixQ {
    let rows = (0..d)
        .map(|_| (0..d).map(|_| int(rng.gen_range(-bound..=bound))).collect())
        .collect();
    MatrixQ::from_rows(rows).unwrap()
}

pub fn random_traceless(rng: &mut ChaCha8Rng, d: usize, bound: i64) -> MatrixQ {
    let mut m = random_matrix(rng, d, bound);
    let t = m.trace();
    let last = m.get(d - 1, d - 1).clone();
    m.set(d - 1, d - 1, last - t);
    m
}

pub fn random_word(rng: &mut ChaCha8Rng, len: usize, nvars: Var) -> Vec<Var> {
    (0..len).map(|_| rng.gen_range(1..=nvars)).collect()
}

/// Random nonzero, nonconstant polynomial of degree <= `max_deg`.
pub fn random_polynomial(
    rng: &mut ChaCha8Rng,
    max_deg: usize,
    max_vars: Var,
    max_terms: usize,
) -> NcPolynomial {
    loop {
        let nvars = rng.gen_range(1..=max_vars);
        let nterms = rng.gen_range(1..=max_terms);
        let terms = (0..nterms).map(|_| {
            let len = rng.gen_range(0..=max_deg);
            (
                word(&random_word(rng, len, nvars)),
                random_nonzero_rational(rng, 4),
            )
        });
        let f = NcPolynomial::from_terms(terms.collect::<Vec<_>>());
        if !f.is_constant() {
            return f;
        }
    }
}

/// Random nonzero sum of commutators `sum c_j [u_j, v_j]` of degree <= `max_deg`.
pub fn random_commutator_sum(rng: &mut ChaCha8Rng, max_deg: usize, max_vars: Var) -> NcPolynomial {
    loop {
        let nvars = rng.gen_range(1..=max_vars);
        let count = rng.gen_range(1..=3);
        let mut f = NcPolynomial::zero();
        for _ in 0..count {
            let total = rng.gen_range(2..=max_deg);
            let split = rng.gen_range(1..total);
            let u = NcPolynomial::monomial(word(&random_word(rng, split, nvars)), int(1));
            let v = NcPolynomial::monomial(word(&random_word(rng, total - split, nvars)), int(1));
            f = &f + &u.commutator(&v).scale(&random_nonzero_rational(rng, 4));
        }
        if !f.is_zero() {
            return f;
        }
    }
}

/// Evaluation by direct left-to-right matrix products per monomial.
pub fn naive_eval(f: &NcPolynomial, d: usize, args: &[MatrixQ]) -> MatrixQ {
    let mut acc = MatrixQ::zeros(d);
    for (w, c) in f.terms() {
        let mut prod = MatrixQ::identity(d);
        for &v in w.letters() {
            prod = prod.mat_mul(&args[v as usize - 1]).unwrap();
        }
        acc = acc.mat_add(&prod.mat_scale(c)).unwrap();
    }
    acc
}

/// All permutations of `1..=n` with their signs, by insertion.
pub fn signed_permutations(n: Var) -> Vec<(Vec<Var>, i64)> {
    let mut perms: Vec<(Vec<Var>, i64)> = vec![(vec![], 1)];
    for k in 1..=n {
        let mut next = Vec::new();
        for (p, s) in &perms {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, k);
                // Inserting k at `pos` passes over `len - pos` larger-index slots.
                let sign = if (p.len() - pos) % 2 == 0 { *s } else { -*s };
                next.push((q, sign));
            }
        }
        perms = next;
    }
    perms
}

pub fn standard_poly_oracle(n: Var) -> NcPolynomial {
    NcPolynomial::from_terms(
        signed_permutations(n)
            .into_iter()
            .map(|(p, s)| (word(&p), int(s)))
            .collect::<Vec<_>>(),
    )
}

pub fn all_units(d: usize) -> Vec<MatrixQ> {
    (0..d * d).map(|k| MatrixQ::unit(d, k / d, k % d)).collect()
}

/// Every tuple of `n` matrix units, as index vectors.
pub fn unit_index_tuples(d: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..d * d).map(move |u| {
                    let mut t = t.clone();
                    t.push(u);
                    t
                })
            })
            .collect();
    }
    out
}

/// Rank of a list of matrices by independent fraction-free elimination.
pub fn rank_of(mats: &[MatrixQ]) -> usize {
    let mut rows: Vec<Vec<Rational>> = mats.iter().map(|m| m.flatten().to_vec()).collect();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[c].is_zero() {
                let f = &row[c] / &pivot[c];
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x -= &f * p;
                }
            }
        }
        rank += 1;
    }
    rank
}
