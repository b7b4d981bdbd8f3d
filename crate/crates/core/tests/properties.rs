mod common;

use std::collections::BTreeMap;

use common::*;
use ncspan::linalg::{
    commutator_decomposition, default_nodes, vandermonde_extract, zero_diagonal_conjugate,
};
use ncspan::linearize::delta;
use ncspan::span::{
    component_values, evaluate, evaluate_in, identity_test_exact, identity_test_randomized,
};
use ncspan::syntax::{parse, print};
use ncspan::{classify_span, MatrixQ, NcPolynomial, Rational, SampleConfig, SpanBasis, Var, Word};
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

fn ratio() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

fn poly(max_var: Var, max_len: usize, max_terms: usize) -> impl Strategy<Value = NcPolynomial> {
    prop::collection::vec(
        (prop::collection::vec(1..=max_var, 0..=max_len), ratio()),
        0..=max_terms,
    )
    .prop_map(|terms| {
        NcPolynomial::from_terms(terms.into_iter().map(|(w, c)| (Word::new(w).unwrap(), c)))
    })
}

fn matrix(d: usize) -> impl Strategy<Value = MatrixQ> {
    prop::collection::vec(ratio(), d * d).prop_map(move |v| MatrixQ::from_flat(d, v).unwrap())
}

fn matrices(d: usize, n: usize) -> impl Strategy<Value = Vec<MatrixQ>> {
    prop::collection::vec(matrix(d), n)
}

/// Multilinear polynomial in `X1..Xn` with every variable in every term.
fn multilinear(n: Var) -> impl Strategy<Value = NcPolynomial> {
    let perms: Vec<Vec<Var>> = signed_permutations(n).into_iter().map(|(p, _)| p).collect();
    prop::collection::vec(ratio(), perms.len()).prop_map(move |cs| {
        NcPolynomial::from_terms(perms.iter().zip(cs).map(|(p, c)| (word(p), c)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(f in poly(3, 3, 4), g in poly(3, 3, 4), h in poly(3, 3, 4)) {
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&(&f + &g) * &h, &(&f * &h) + &(&g * &h));
        prop_assert_eq!(&f * &NcPolynomial::one(), f.clone());
        prop_assert!((&f - &f).is_zero());
        prop_assert_eq!(-(-f.clone()), f);
    }

    #[test]
    fn no_zero_coefficients_stored(f in poly(3, 3, 6), g in poly(3, 3, 6)) {
        for p in [&f + &g, &f - &g, &f * &g, f.commutator(&g)] {
            prop_assert!(p.terms().all(|(_, c)| !c.is_zero()));
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism(f in poly(3, 3, 4), g in poly(3, 3, 4), args in matrices(2, 3)) {
        let ev = |p: &NcPolynomial| evaluate_in(p, 2, &args).unwrap();
        prop_assert_eq!(ev(&(&f * &g)), ev(&f).mat_mul(&ev(&g)).unwrap());
        prop_assert_eq!(ev(&(&f + &g)), ev(&f).mat_add(&ev(&g)).unwrap());
        prop_assert_eq!(ev(&f), naive_eval(&f, 2, &args));
    }

    #[test]
    fn substitution_is_a_homomorphism(
        f in poly(2, 3, 3),
        g in poly(2, 3, 3),
        s1 in poly(3, 2, 3),
        s2 in poly(3, 2, 3),
        args in matrices(2, 3),
    ) {
        let sigma = BTreeMap::from([(1, s1.clone()), (2, s2.clone())]);
        let sub = |p: &NcPolynomial| p.substitute_partial(&sigma);
        prop_assert_eq!(sub(&(&f * &g)), &sub(&f) * &sub(&g));
        prop_assert_eq!(sub(&(&f + &g)), &sub(&f) + &sub(&g));
        // Substituting then evaluating equals evaluating at the substituted values.
        let inner = vec![evaluate_in(&s1, 2, &args).unwrap(), evaluate_in(&s2, 2, &args).unwrap()];
        prop_assert_eq!(evaluate_in(&sub(&f), 2, &args).unwrap(), evaluate_in(&f, 2, &inner).unwrap());
    }

    #[test]
    fn homogeneous_components_reconstruct(f in poly(3, 4, 6), var in 1u32..=3) {
        let comps = f.homogeneous_components_in(var);
        let sum = comps.iter().fold(NcPolynomial::zero(), |acc, (_, c)| &acc + c);
        prop_assert_eq!(sum, f.clone());
        for (deg, c) in &comps {
            prop_assert!(c.terms().all(|(w, _)| w.count(var) == *deg));
        }
    }

    #[test]
    fn component_values_match_components(f in poly(2, 4, 5), args in matrices(2, 2)) {
        prop_assume!(f.nvars() >= 1);
        let values = component_values(&f, 1, &args).unwrap();
        let expected: BTreeMap<usize, NcPolynomial> = f.homogeneous_components_in(1).into_iter().collect();
        for (deg, v) in values.iter().enumerate() {
            let want = match expected.get(&deg) {
                Some(c) => naive_eval(c, 2, &args),
                None => MatrixQ::zeros(2),
            };
            prop_assert_eq!(v, &want);
        }
    }

    #[test]
    fn strip_splits_the_polynomial(f in poly(3, 3, 6), var in 1u32..=3) {
        let (with, without) = f.strip_variable(var);
        prop_assert_eq!(&with + &without, f);
        prop_assert!(!without.occurs(var));
        prop_assert!(with.terms().all(|(w, _)| w.contains(var)));
    }

    #[test]
    fn commutators_are_sums_of_commutators(f in poly(3, 3, 4), g in poly(3, 3, 4), h in poly(3, 3, 4)) {
        let c = f.commutator(&g);
        prop_assert!(c.is_sum_of_commutators());
        prop_assert!((&c + &h.commutator(&f)).is_sum_of_commutators());
        // Adding a commutator never changes the cyclic class sums.
        prop_assert_eq!((&h + &c).is_sum_of_commutators(), h.is_sum_of_commutators());
    }

    #[test]
    fn rotations_are_cyclically_equivalent(letters in prop::collection::vec(1u32..=3, 1..=5), k in 0usize..5) {
        let k = k % letters.len();
        let mut rotated = letters.clone();
        rotated.rotate_left(k);
        let f = NcPolynomial::monomial(word(&letters), int(1)) - NcPolynomial::monomial(word(&rotated), int(1));
        prop_assert!(f.is_sum_of_commutators());
    }

    #[test]
    fn print_parse_round_trip(f in poly(4, 4, 6)) {
        let text = print(&f);
        prop_assert_eq!(parse(&text).unwrap(), f);
    }

    #[test]
    fn resubstitution_identity(extra in poly(3, 2, 3), k in 2usize..=4) {
        // Homogeneous of degree k in X1: X1^k times a polynomial free of X1,
        // plus X1^k itself so the result is never zero.
        let x1k = x(1).pow(k as u32);
        let tail = extra.substitute_partial(&BTreeMap::from([(1, x(4))]));
        let f = &x1k + &(&x1k * &tail);
        let m = f.nvars() + 1;
        let lin = delta(&f, 1, m).unwrap();
        let back = lin.substitute_partial(&BTreeMap::from([(m, x(1))]));
        prop_assert_eq!(back, f.scale(&int((1 << k) - 2)));
    }

    #[test]
    fn basis_invariants(ms in prop::collection::vec(matrix(2), 0..8)) {
        let mut basis = SpanBasis::empty(2);
        for m in &ms {
            let was_member = basis.membership(m).unwrap();
            let (next, grew) = basis.insert(m).unwrap();
            prop_assert_eq!(grew, !was_member);
            basis = next;
            prop_assert!(basis.membership(m).unwrap());
        }
        prop_assert!(basis.rank() <= 4);
        prop_assert_eq!(basis.rank(), rank_of(&ms));
        // Reduced echelon form is canonical, so insertion order is irrelevant.
        let mut reversed = SpanBasis::empty(2);
        for m in ms.iter().rev() {
            reversed.insert_mut(m).unwrap();
        }
        prop_assert_eq!(&reversed, &basis);
        let pivots = basis.pivots();
        prop_assert!(pivots.windows(2).all(|w| w[0] < w[1]));
        for (i, row) in basis.rows().iter().enumerate() {
            for (j, &p) in pivots.iter().enumerate() {
                let want = if i == j { int(1) } else { int(0) };
                prop_assert_eq!(&row[p], &want);
            }
        }
    }

    #[test]
    fn vandermonde_round_trip(cs in (0usize..=5).prop_flat_map(|m| matrices(2, m + 1))) {
        let m = cs.len() - 1;
        let nodes = default_nodes(m);
        let values: Vec<MatrixQ> = nodes
            .iter()
            .map(|l| {
                let mut acc = MatrixQ::zeros(2);
                let mut pow = int(1);
                for c in &cs {
                    acc = acc.mat_add(&c.mat_scale(&pow)).unwrap();
                    pow *= l;
                }
                acc
            })
            .collect();
        prop_assert_eq!(vandermonde_extract(&nodes, &values).unwrap(), cs);
    }

    #[test]
    fn commutator_decomposition_is_exact(d in 1usize..=5, seed in any::<u64>()) {
        let m = random_traceless(&mut rng(seed), d, 7);
        let (p, n) = zero_diagonal_conjugate(&m).unwrap();
        let p_inv = p.inverse().unwrap();
        prop_assert_eq!(&p_inv.mat_mul(&m).unwrap().mat_mul(&p).unwrap(), &n);
        prop_assert!((0..d).all(|i| n.get(i, i).is_zero()));
        let (a, b) = commutator_decomposition(&m).unwrap();
        prop_assert_eq!(a.commutator(&b).unwrap(), m);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn exact_and_randomized_identity_tests_agree(f in multilinear(3)) {
        let cfg = SampleConfig::with_seed(3);
        let exact = identity_test_exact(&f, 2, &cfg).unwrap();
        let random = identity_test_randomized(&f, 2, &cfg);
        prop_assert_eq!(exact.is_identity, random.is_identity);
        if let Some(w) = random.witness {
            prop_assert!(!evaluate(&f, &w).unwrap().is_zero());
        }
    }

    #[test]
    fn span_is_independent_of_execution(f in poly(2, 3, 4), seed in any::<u64>()) {
        prop_assume!(!f.is_constant());
        let cfg = SampleConfig::with_seed(seed);
        let par = classify_span(&f, 2, &cfg).unwrap();
        let seq = classify_span(&f, 2, &cfg.clone().sequential()).unwrap();
        prop_assert_eq!(par, seq);
    }

    #[test]
    fn classification_matches_witness_values(f in poly(2, 3, 4), seed in any::<u64>()) {
        prop_assume!(!f.is_constant());
        let r = classify_span(&f, 2, &SampleConfig::with_seed(seed)).unwrap();
        let values: Vec<MatrixQ> = r.witnesses.iter().map(|w| naive_eval(&f, 2, &w.inputs)).collect();
        for (w, v) in r.witnesses.iter().zip(&values) {
            prop_assert_eq!(&w.value, v);
        }
        prop_assert_eq!(rank_of(&values), r.rank());
    }
}
