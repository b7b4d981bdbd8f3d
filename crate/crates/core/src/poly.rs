//! Noncommutative polynomials over the rationals.
//!
//! An [`NcPolynomial`] is a sparse map from [`Word`]s (sequences of 1-based
//! variable indices) to nonzero rational coefficients. Multiplication
//! concatenates words, so `X1*X2` and `X2*X1` are distinct monomials.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

/// Exact rational scalar used for every coefficient and matrix entry.
pub type Rational = num_rational::BigRational;

/// 1-based variable index; `1` denotes `X1`.
pub type Var = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("no assignment for variable X{0}")]
    MissingAssignment(Var),
    #[error("variable indices are 1-based, got 0")]
    ZeroVariable,
}

/// A monomial: the ordered product of its letters. The empty word is `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Var>);

impl Word {
    pub fn new(letters: Vec<Var>) -> Result<Self, PolyError> {
        if letters.contains(&0) {
            return Err(PolyError::ZeroVariable);
        }
        Ok(Word(letters))
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Var] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count(&self, var: Var) -> usize {
        self.0.iter().filter(|&&v| v == var).count()
    }

    pub fn contains(&self, var: Var) -> bool {
        self.0.contains(&var)
    }

    pub fn max_var(&self) -> Var {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// Lexicographically least rotation; canonical representative of the
    /// word's cyclic class.
    pub fn least_rotation(&self) -> Word {
        let n = self.0.len();
        if n == 0 {
            return self.clone();
        }
        let best = (0..n)
            .min_by(|&a, &b| {
                let ra = self.0[a..].iter().chain(&self.0[..a]);
                let rb = self.0[b..].iter().chain(&self.0[..b]);
                ra.cmp(rb)
            })
            .unwrap_or(0);
        let mut letters = self.0[best..].to_vec();
        letters.extend_from_slice(&self.0[..best]);
        Word(letters)
    }
}

/// Graded lexicographic: shorter words first, then letterwise.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "X{v}")?;
        }
        Ok(())
    }
}

/// A cyclic class of words whose coefficients do not cancel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicObstruction {
    pub representative: Word,
    pub coefficient_sum: Rational,
}

/// Element of the free algebra `Q<X1, X2, ...>` in canonical sparse form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct NcPolynomial {
    terms: BTreeMap<Word, Rational>,
    nvars: Var,
}

impl NcPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(Word::empty(), c)
    }

    pub fn integer(c: i64) -> Self {
        Self::constant(Rational::from_integer(BigInt::from(c)))
    }

    /// The polynomial `X_var`. Panics on `var == 0`.
    pub fn var(var: Var) -> Self {
        assert!(var >= 1, "variable indices are 1-based");
        Self::monomial(Word(vec![var]), Rational::one())
    }

    pub fn monomial(word: Word, coeff: Rational) -> Self {
        Self::from_terms(std::iter::once((word, coeff)))
    }

    /// Builds a polynomial, combining repeated words and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Word, Rational)>>(terms: I) -> Self {
        let mut map: BTreeMap<Word, Rational> = BTreeMap::new();
        for (w, c) in terms {
            accumulate(&mut map, w, c);
        }
        Self::from_map(map)
    }

    fn from_map(mut terms: BTreeMap<Word, Rational>) -> Self {
        terms.retain(|_, c| !c.is_zero());
        let nvars = terms.keys().map(Word::max_var).max().unwrap_or(0);
        NcPolynomial { terms, nvars }
    }

    pub fn terms(&self) -> impl ExactSizeIterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, word: &Word) -> Rational {
        self.terms.get(word).cloned().unwrap_or_else(Rational::zero)
    }

    /// Largest variable index occurring, `0` for constants.
    pub fn nvars(&self) -> Var {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Word::is_empty)
    }

    /// Variables that actually occur in some word.
    pub fn variables(&self) -> BTreeSet<Var> {
        self.terms
            .keys()
            .flat_map(|w| w.letters().iter().copied())
            .collect()
    }

    pub fn occurs(&self, var: Var) -> bool {
        self.terms.keys().any(|w| w.contains(var))
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Word::len).max()
    }

    /// Degree in a single variable; `None` for the zero polynomial.
    pub fn degree_in(&self, var: Var) -> Option<usize> {
        self.terms.keys().map(|w| w.count(var)).max()
    }

    /// `(deg_X1, ..., deg_Xn)` with `n = nvars`.
    pub fn degree_vector(&self) -> Vec<usize> {
        (1..=self.nvars)
            .map(|v| self.degree_in(v).unwrap_or(0))
            .collect()
    }

    pub fn is_homogeneous_in(&self, var: Var) -> bool {
        let mut counts = self.terms.keys().map(|w| w.count(var));
        match counts.next() {
            Some(first) => counts.all(|c| c == first),
            None => true,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        NcPolynomial {
            terms: self.terms.iter().map(|(w, a)| (w.clone(), a * c)).collect(),
            nvars: self.nvars,
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `[self, other] = self*other - other*self`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    /// Homomorphic image under `X_i -> assignment[i]`. Every occurring
    /// variable must be assigned.
    pub fn substitute(&self, assignment: &BTreeMap<Var, NcPolynomial>) -> Result<Self, PolyError> {
        if let Some(v) = self
            .variables()
            .into_iter()
            .find(|v| !assignment.contains_key(v))
        {
            return Err(PolyError::MissingAssignment(v));
        }
        Ok(self.substitute_with(|v| assignment.get(&v)))
    }

    /// Like [`substitute`](Self::substitute) but unassigned variables map to
    /// themselves.
    pub fn substitute_partial(&self, assignment: &BTreeMap<Var, NcPolynomial>) -> Self {
        self.substitute_with(|v| assignment.get(&v))
    }

    fn substitute_with<'a, F>(&self, image: F) -> Self
    where
        F: Fn(Var) -> Option<&'a NcPolynomial>,
    {
        let mut out: BTreeMap<Word, Rational> = BTreeMap::new();
        for (word, coeff) in &self.terms {
            // Expand the word as a product of images, left to right.
            let mut partial: BTreeMap<Word, Rational> = BTreeMap::new();
            partial.insert(Word::empty(), coeff.clone());
            for &letter in word.letters() {
                let mut next = BTreeMap::new();
                match image(letter) {
                    Some(p) => {
                        for (pw, pc) in &partial {
                            for (qw, qc) in &p.terms {
                                accumulate(&mut next, pw.concat(qw), pc * qc);
                            }
                        }
                    }
                    None => {
                        let single = Word(vec![letter]);
                        for (pw, pc) in partial {
                            accumulate(&mut next, pw.concat(&single), pc);
                        }
                    }
                }
                partial = next;
                if partial.is_empty() {
                    break;
                }
            }
            for (w, c) in partial {
                accumulate(&mut out, w, c);
            }
        }
        Self::from_map(out)
    }

    /// Renames variables; variables absent from `map` are kept.
    pub fn relabel(&self, map: &BTreeMap<Var, Var>) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, c)| {
            let letters = w
                .letters()
                .iter()
                .map(|v| map.get(v).copied().unwrap_or(*v))
                .collect();
            (Word(letters), c.clone())
        }))
    }

    /// Nonzero parts `f_j` of `f = sum_j f_j`, where `f_j` collects the
    /// monomials of degree `j` in `var`. Sorted by `j`.
    pub fn homogeneous_components_in(&self, var: Var) -> Vec<(usize, NcPolynomial)> {
        let mut parts: BTreeMap<usize, BTreeMap<Word, Rational>> = BTreeMap::new();
        for (w, c) in &self.terms {
            parts
                .entry(w.count(var))
                .or_default()
                .insert(w.clone(), c.clone());
        }
        parts
            .into_iter()
            .map(|(j, terms)| (j, Self::from_map(terms)))
            .collect()
    }

    /// Splits `f = g + h` where every monomial of `g` contains `var` and no
    /// monomial of `h` does.
    pub fn strip_variable(&self, var: Var) -> (NcPolynomial, NcPolynomial) {
        let (with, without): (BTreeMap<_, _>, BTreeMap<_, _>) = self
            .terms
            .iter()
            .map(|(w, c)| (w.clone(), c.clone()))
            .partition(|(w, _)| w.contains(var));
        (Self::from_map(with), Self::from_map(without))
    }

    /// Every word contains each of `X1..X_nvars` exactly once.
    pub fn is_multilinear(&self) -> bool {
        let n = self.nvars as usize;
        self.terms.keys().all(|w| {
            if w.len() != n {
                return false;
            }
            let mut seen = vec![false; n + 1];
            w.letters()
                .iter()
                .all(|&v| !std::mem::replace(&mut seen[v as usize], true))
        })
    }

    /// Coefficient sums per cyclic class, keyed by least rotation. Classes
    /// summing to zero are omitted.
    pub fn cyclic_class_sums(&self) -> BTreeMap<Word, Rational> {
        let mut sums: BTreeMap<Word, Rational> = BTreeMap::new();
        for (w, c) in &self.terms {
            accumulate(&mut sums, w.least_rotation(), c.clone());
        }
        sums.retain(|_, c| !c.is_zero());
        sums
    }

    /// First cyclic class (in canonical word order) with a nonzero
    /// coefficient sum, if any.
    pub fn commutator_obstruction(&self) -> Option<CyclicObstruction> {
        self.cyclic_class_sums()
            .into_iter()
            .next()
            .map(|(representative, coefficient_sum)| CyclicObstruction {
                representative,
                coefficient_sum,
            })
    }

    /// Membership in `[F<X>, F<X>]`: every cyclic class sums to zero.
    pub fn is_sum_of_commutators(&self) -> bool {
        self.commutator_obstruction().is_none()
    }
}

fn accumulate(map: &mut BTreeMap<Word, Rational>, w: Word, c: Rational) {
    if c.is_zero() {
        return;
    }
    match map.entry(w) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

impl Add for &NcPolynomial {
    type Output = NcPolynomial;
    fn add(self, rhs: &NcPolynomial) -> NcPolynomial {
        let mut terms = self.terms.clone();
        for (w, c) in &rhs.terms {
            accumulate(&mut terms, w.clone(), c.clone());
        }
        NcPolynomial::from_map(terms)
    }
}

impl Sub for &NcPolynomial {
    type Output = NcPolynomial;
    fn sub(self, rhs: &NcPolynomial) -> NcPolynomial {
        let mut terms = self.terms.clone();
        for (w, c) in &rhs.terms {
            accumulate(&mut terms, w.clone(), -c);
        }
        NcPolynomial::from_map(terms)
    }
}

impl Mul for &NcPolynomial {
    type Output = NcPolynomial;
    fn mul(self, rhs: &NcPolynomial) -> NcPolynomial {
        let mut terms = BTreeMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                accumulate(&mut terms, a.concat(b), ca * cb);
            }
        }
        NcPolynomial::from_map(terms)
    }
}

impl Neg for &NcPolynomial {
    type Output = NcPolynomial;
    fn neg(self) -> NcPolynomial {
        NcPolynomial {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
            nvars: self.nvars,
        }
    }
}

macro_rules! forward_owned_ref {
    ($tr:ident, $m:ident) => {
        impl $tr<&NcPolynomial> for NcPolynomial {
            type Output = NcPolynomial;
            fn $m(self, rhs: &NcPolynomial) -> NcPolynomial {
                (&self).$m(rhs)
            }
        }
    };
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for NcPolynomial {
            type Output = NcPolynomial;
            fn $m(self, rhs: NcPolynomial) -> NcPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned_ref!(Add, add);
forward_owned_ref!(Sub, sub);
forward_owned_ref!(Mul, mul);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for NcPolynomial {
    type Output = NcPolynomial;
    fn neg(self) -> NcPolynomial {
        -&self
    }
}

/// The standard polynomial `s_n = sum_{sigma in S_n} sgn(sigma) X_sigma(1) ... X_sigma(n)`.
pub fn standard_polynomial(n: u32) -> NcPolynomial {
    let mut perm: Vec<Var> = (1..=n).collect();
    let mut terms = Vec::new();
    permutations(&mut perm, 0, true, &mut terms);
    NcPolynomial::from_terms(terms)
}

fn permutations(perm: &mut Vec<Var>, k: usize, even: bool, out: &mut Vec<(Word, Rational)>) {
    if k + 1 >= perm.len() {
        let sign = if even { 1 } else { -1 };
        out.push((
            Word(perm.clone()),
            Rational::from_integer(BigInt::from(sign)),
        ));
        return;
    }
    for j in k..perm.len() {
        perm.swap(k, j);
        permutations(perm, k + 1, if j == k { even } else { !even }, out);
        perm.swap(k, j);
    }
}
