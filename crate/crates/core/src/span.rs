//! Values of polynomials on `M_d(Q)` and the subspaces they span.
//!
//! Multilinear polynomials are handled exactly: their span is the span of
//! their values on tuples of matrix units, so enumerating those tuples
//! certifies the answer. Everything else is sampled at random integer
//! matrices drawn from a single seeded source; each sample index owns an
//! independent substream, so results do not depend on how batches are
//! scheduled.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{dense, CanonicalSpace, LinalgError, MatrixQ, SpanBasis};
use crate::par::{self, Execution};
use crate::poly::{NcPolynomial, Rational, Var, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpanError {
    #[error("polynomial uses {expected} variables but {found} arguments were given")]
    ArityMismatch { expected: usize, found: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("target matrix is not in the computed span")]
    NotInSpan,
    #[error("polynomial is constant")]
    ConstantInput,
    #[error("invalid sampling configuration: {0}")]
    InvalidConfig(&'static str),
    #[error("dimension must be at least 1")]
    ZeroDimension,
}

const CLASSIFY_STREAM: u64 = 0x0c1a_5517 << 32;
const IDENTITY_STREAM: u64 = 0x1de7_0000 << 32;

/// Sampling budget and randomness source.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleConfig {
    pub seed: u64,
    /// Random entries are integers uniform in `[-coeff_bound, coeff_bound]`.
    pub coeff_bound: u32,
    /// `None` means `64 * d^2`.
    pub max_samples: Option<usize>,
    pub stability_window: usize,
    /// Largest number of matrix-unit tuples enumerated on the exact path.
    pub exhaustive_limit: usize,
    #[serde(skip)]
    pub execution: Execution,
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig {
            seed: 0,
            coeff_bound: 10,
            max_samples: None,
            stability_window: 50,
            exhaustive_limit: 1 << 16,
            execution: Execution::default(),
        }
    }
}

impl SampleConfig {
    pub fn with_seed(seed: u64) -> Self {
        SampleConfig {
            seed,
            ..Self::default()
        }
    }

    pub fn sequential(mut self) -> Self {
        self.execution = Execution::Sequential;
        self
    }

    pub fn max_samples_for(&self, d: usize) -> usize {
        self.max_samples.unwrap_or(64 * d * d)
    }

    pub fn validate(&self) -> Result<(), SpanError> {
        if self.coeff_bound < 1 {
            return Err(SpanError::InvalidConfig("coeff_bound must be at least 1"));
        }
        if self.max_samples == Some(0) {
            return Err(SpanError::InvalidConfig("max_samples must be at least 1"));
        }
        if self.stability_window < 1 {
            return Err(SpanError::InvalidConfig(
                "stability_window must be at least 1",
            ));
        }
        Ok(())
    }

    fn rng(&self, stream: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(stream);
        rng
    }

    fn random_tuple(&self, stream: u64, d: usize, arity: usize) -> Vec<MatrixQ> {
        let mut rng = self.rng(stream);
        let b = self.coeff_bound as i64;
        (0..arity)
            .map(|_| {
                let entries = (0..d * d)
                    .map(|_| Rational::from_integer(BigInt::from(rng.gen_range(-b..=b))))
                    .collect();
                MatrixQ::from_flat(d, entries).expect("d*d entries")
            })
            .collect()
    }
}

/// The span of values, one of the four canonical subspaces or unknown.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Classification {
    Zero,
    Scalars,
    TraceZero,
    Full,
    Undetermined,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::Zero => "ZERO",
            Classification::Scalars => "SCALARS",
            Classification::TraceZero => "TRACE_ZERO",
            Classification::Full => "FULL",
            Classification::Undetermined => "UNDETERMINED",
        }
    }
}

impl From<CanonicalSpace> for Classification {
    fn from(c: CanonicalSpace) -> Self {
        match c {
            CanonicalSpace::Zero => Classification::Zero,
            CanonicalSpace::Scalars => Classification::Scalars,
            CanonicalSpace::TraceZero => Classification::TraceZero,
            CanonicalSpace::Full => Classification::Full,
        }
    }
}

/// How a span was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpanMethod {
    /// All matrix-unit tuples of a multilinear polynomial.
    ExactUnits,
    RandomSampling,
}

/// Why the sampler stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Saturation {
    /// Exact enumeration, or rank reached `d^2`.
    Certified,
    /// Canonical space held for a full stability window; not a proof.
    StabilityWindow,
    BudgetExhausted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub inputs: Vec<MatrixQ>,
    pub value: MatrixQ,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanReport {
    pub polynomial: NcPolynomial,
    pub dim: usize,
    pub seed: u64,
    pub classification: Classification,
    pub basis: SpanBasis,
    /// Samples that grew the basis, in sample order.
    pub witnesses: Vec<Witness>,
    pub samples_used: usize,
    pub method: SpanMethod,
    pub saturation: Saturation,
}

impl SpanReport {
    pub fn rank(&self) -> usize {
        self.basis.rank()
    }
}

fn arity(f: &NcPolynomial) -> usize {
    f.nvars() as usize
}

/// Evaluates `f` at `args`; `args[i]` is substituted for `X_{i+1}`.
pub fn evaluate(f: &NcPolynomial, args: &[MatrixQ]) -> Result<MatrixQ, SpanError> {
    let Some(first) = args.first() else {
        if arity(f) > 0 {
            return Err(SpanError::ArityMismatch {
                expected: arity(f),
                found: 0,
            });
        }
        // No argument fixes the dimension; constants are evaluated in M_1.
        return evaluate_in(f, 1, args);
    };
    evaluate_in(f, first.dim(), args)
}

/// Evaluates `f` in `M_d`; the constant term contributes `c * I`.
pub fn evaluate_in(f: &NcPolynomial, d: usize, args: &[MatrixQ]) -> Result<MatrixQ, SpanError> {
    if args.len() < arity(f) {
        return Err(SpanError::ArityMismatch {
            expected: arity(f),
            found: args.len(),
        });
    }
    if let Some(bad) = args.iter().find(|m| m.dim() != d) {
        return Err(LinalgError::DimensionMismatch {
            expected: d,
            found: bad.dim(),
        }
        .into());
    }
    // Visit words in plain lexicographic order so consecutive words share
    // prefixes, and keep a stack of prefix products.
    let mut words: Vec<(&Word, &Rational)> = f.terms().collect();
    words.sort_by(|a, b| a.0.letters().cmp(b.0.letters()));
    let mut acc = MatrixQ::zeros(d);
    let mut stack: Vec<MatrixQ> = Vec::new();
    let mut prev: &[Var] = &[];
    for (word, coeff) in words {
        let letters = word.letters();
        let common = letters
            .iter()
            .zip(prev)
            .take_while(|(a, b)| a == b)
            .count()
            .min(stack.len());
        stack.truncate(common);
        for &v in &letters[common..] {
            let m = &args[v as usize - 1];
            let next = match stack.last() {
                Some(top) => top.mat_mul(m)?,
                None => m.clone(),
            };
            stack.push(next);
        }
        match stack.last() {
            Some(product) => acc.add_scaled(coeff, product)?,
            None => acc.add_scaled(coeff, &MatrixQ::identity(d))?,
        }
        prev = letters;
    }
    Ok(acc)
}

/// Evaluates `f` at a tuple of matrix units; `units[i] = r * d + c` stands
/// for `E_{rc}` substituted for `X_{i+1}`.
///
/// A product of units `E_{r1 c1} ... E_{rk ck}` is `E_{r1 ck}` when each
/// `c_j = r_{j+1}` and zero otherwise, so no matrix products are formed.
pub fn evaluate_units(f: &NcPolynomial, d: usize, units: &[usize]) -> MatrixQ {
    let mut flat = vec![Rational::zero(); d * d];
    for (word, coeff) in f.terms() {
        let letters = word.letters();
        let Some((&head, rest)) = letters.split_first() else {
            for i in 0..d {
                flat[i * d + i] += coeff;
            }
            continue;
        };
        let start = units[head as usize - 1];
        let mut col = start % d;
        let mut alive = true;
        for &v in rest {
            let u = units[v as usize - 1];
            if u / d != col {
                alive = false;
                break;
            }
            col = u % d;
        }
        if alive {
            flat[(start / d) * d + col] += coeff;
        }
    }
    MatrixQ::from_flat(d, flat).expect("d*d entries")
}

fn unit_tuple(index: usize, d: usize, n: usize) -> Vec<usize> {
    let base = d * d;
    let mut rest = index;
    let mut out = vec![0; n];
    for slot in out.iter_mut() {
        *slot = rest % base;
        rest /= base;
    }
    out
}

fn unit_matrices(d: usize, units: &[usize]) -> Vec<MatrixQ> {
    units
        .iter()
        .map(|&u| MatrixQ::unit(d, u / d, u % d))
        .collect()
}

/// Number of matrix-unit tuples for `f`, if the exact path applies.
fn exhaustive_count(f: &NcPolynomial, d: usize, cfg: &SampleConfig) -> Option<usize> {
    if !f.is_multilinear() {
        return None;
    }
    let count = (d * d).checked_pow(f.nvars())?;
    (count <= cfg.exhaustive_limit).then_some(count)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdentityMethod {
    Trivial,
    ExactUnits,
    Randomized,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IdentityVerdict {
    pub is_identity: bool,
    pub method: IdentityMethod,
    pub evaluations: usize,
    /// Upper bound on the probability that a non-identity vanished on every
    /// sample; only for randomized `true` answers.
    pub error_bound: Option<f64>,
    /// A tuple on which `f` does not vanish.
    pub witness: Option<Vec<MatrixQ>>,
}

/// Identity test on `M_d`: exact for multilinear `f` (vanishing on all
/// matrix-unit tuples), randomized otherwise.
pub fn identity_test(f: &NcPolynomial, d: usize, cfg: &SampleConfig) -> IdentityVerdict {
    if f.is_zero() || f.is_constant() {
        return IdentityVerdict {
            is_identity: f.is_zero(),
            method: IdentityMethod::Trivial,
            evaluations: 0,
            error_bound: None,
            witness: (!f.is_zero()).then(|| vec![MatrixQ::zeros(d); arity(f)]),
        };
    }
    identity_test_exact(f, d, cfg).unwrap_or_else(|| identity_test_randomized(f, d, cfg))
}

/// Exhaustive matrix-unit test; `None` unless `f` is multilinear and the
/// tuple count is within `cfg.exhaustive_limit`.
pub fn identity_test_exact(
    f: &NcPolynomial,
    d: usize,
    cfg: &SampleConfig,
) -> Option<IdentityVerdict> {
    let count = exhaustive_count(f, d, cfg)?;
    let n = arity(f);
    let hits = |i: usize| !evaluate_units(f, d, &unit_tuple(i, d, n)).is_zero();
    let first = if par::any_in_range(cfg.execution, 0..count, hits) {
        (0..count).find(|&i| hits(i))
    } else {
        None
    };
    Some(IdentityVerdict {
        is_identity: first.is_none(),
        method: IdentityMethod::ExactUnits,
        evaluations: first.map_or(count, |i| i + 1),
        error_bound: None,
        witness: first.map(|i| unit_matrices(d, &unit_tuple(i, d, n))),
    })
}

/// Random-tuple test with the polynomial vanishing bound
/// `(deg f / (2B + 1))^samples`.
pub fn identity_test_randomized(f: &NcPolynomial, d: usize, cfg: &SampleConfig) -> IdentityVerdict {
    let budget = cfg.max_samples_for(d);
    let n = arity(f);
    let batch = cfg.execution.batch_len();
    let mut start = 0;
    while start < budget {
        let end = (start + batch).min(budget);
        let indices: Vec<usize> = (start..end).collect();
        let found = par::position_first(cfg.execution, &indices, |&i| {
            let tuple = cfg.random_tuple(IDENTITY_STREAM | i as u64, d, n);
            !evaluate_in(f, d, &tuple)
                .expect("arity and dims match")
                .is_zero()
        });
        if let Some(k) = found {
            let i = indices[k];
            return IdentityVerdict {
                is_identity: false,
                method: IdentityMethod::Randomized,
                evaluations: i + 1,
                error_bound: None,
                witness: Some(cfg.random_tuple(IDENTITY_STREAM | i as u64, d, n)),
            };
        }
        start = end;
    }
    let deg = f.degree().unwrap_or(0) as f64;
    let per_sample = (deg / (2.0 * cfg.coeff_bound as f64 + 1.0)).min(1.0);
    IdentityVerdict {
        is_identity: true,
        method: IdentityMethod::Randomized,
        evaluations: budget,
        error_bound: Some(per_sample.powi(budget.min(i32::MAX as usize) as i32)),
        witness: None,
    }
}

pub fn is_identity(f: &NcPolynomial, d: usize, cfg: &SampleConfig) -> bool {
    identity_test(f, d, cfg).is_identity
}

/// `[f, X_{n+1}]` for a fresh variable.
pub fn commutator_with_fresh(f: &NcPolynomial) -> NcPolynomial {
    f.commutator(&NcPolynomial::var(f.nvars() + 1))
}

/// Central polynomial of `M_d`: not an identity, but `[f, X_{n+1}]` is.
pub fn is_central(f: &NcPolynomial, d: usize, cfg: &SampleConfig) -> bool {
    !is_identity(f, d, cfg) && is_identity(&commutator_with_fresh(f), d, cfg)
}

/// Neither an identity nor a central polynomial of `M_d`; equivalently,
/// `[f, X_{n+1}]` is not an identity.
pub fn is_nontrivial(f: &NcPolynomial, d: usize, cfg: &SampleConfig) -> bool {
    !is_identity(&commutator_with_fresh(f), d, cfg)
}

/// Smallest `d <= d_max` at which `f` is neither an identity nor central.
pub fn find_witness_dimension(
    f: &NcPolynomial,
    d_max: usize,
    cfg: &SampleConfig,
) -> Result<Option<usize>, SpanError> {
    if f.is_constant() {
        return Err(SpanError::ConstantInput);
    }
    cfg.validate()?;
    Ok((1..=d_max).find(|&d| is_nontrivial(f, d, cfg)))
}

/// Canonical space matching `basis`. When spaces coincide (only for
/// `d = 1`) the whole algebra is preferred over the scalars.
fn canonical_of(basis: &SpanBasis) -> Option<CanonicalSpace> {
    [
        CanonicalSpace::Zero,
        CanonicalSpace::Full,
        CanonicalSpace::Scalars,
        CanonicalSpace::TraceZero,
    ]
    .into_iter()
    .find(|&c| basis.equals_canonical(c))
}

/// Computes `Span f(M_d)` and classifies it.
pub fn classify_span(
    f: &NcPolynomial,
    d: usize,
    cfg: &SampleConfig,
) -> Result<SpanReport, SpanError> {
    if d == 0 {
        return Err(SpanError::ZeroDimension);
    }
    cfg.validate()?;
    match exhaustive_count(f, d, cfg) {
        Some(count) => Ok(classify_exact(f, d, cfg, count)),
        None => Ok(classify_sampled(f, d, cfg)),
    }
}

fn classify_exact(f: &NcPolynomial, d: usize, cfg: &SampleConfig, count: usize) -> SpanReport {
    let n = arity(f);
    let full = d * d;
    let mut basis = SpanBasis::empty(d);
    let mut witnesses = Vec::new();
    let mut used = 0;
    let batch = cfg.execution.batch_len() * 16;
    let mut start = 0;
    'outer: while start < count {
        let end = (start + batch).min(count);
        let values = par::map_range(cfg.execution, start..end, |i| {
            evaluate_units(f, d, &unit_tuple(i, d, n))
        });
        for (offset, value) in values.into_iter().enumerate() {
            used = start + offset + 1;
            if basis.insert_mut(&value).expect("same dimension") {
                witnesses.push(Witness {
                    inputs: unit_matrices(d, &unit_tuple(start + offset, d, n)),
                    value,
                });
                if basis.rank() == full {
                    break 'outer;
                }
            }
        }
        start = end;
    }
    let classification =
        canonical_of(&basis).map_or(Classification::Undetermined, Classification::from);
    SpanReport {
        polynomial: f.clone(),
        dim: d,
        seed: cfg.seed,
        classification,
        basis,
        witnesses,
        samples_used: used,
        method: SpanMethod::ExactUnits,
        saturation: Saturation::Certified,
    }
}

fn classify_sampled(f: &NcPolynomial, d: usize, cfg: &SampleConfig) -> SpanReport {
    let n = arity(f);
    let full = d * d;
    let budget = cfg.max_samples_for(d);
    let mut basis = SpanBasis::empty(d);
    let mut witnesses = Vec::new();
    let mut used = 0;
    let mut stable = 0;
    let mut saturation = Saturation::BudgetExhausted;
    let batch = cfg.execution.batch_len();
    let mut start = 0;
    'outer: while start < budget {
        let end = (start + batch).min(budget);
        let samples = par::map_range(cfg.execution, start..end, |i| {
            let tuple = cfg.random_tuple(CLASSIFY_STREAM | i as u64, d, n);
            let value = evaluate_in(f, d, &tuple).expect("arity and dims match");
            (tuple, value)
        });
        for (tuple, value) in samples {
            used += 1;
            if basis.insert_mut(&value).expect("same dimension") {
                witnesses.push(Witness {
                    inputs: tuple,
                    value,
                });
                stable = 0;
                if basis.rank() == full {
                    saturation = Saturation::Certified;
                    break 'outer;
                }
            } else {
                stable += 1;
                if stable >= cfg.stability_window && canonical_of(&basis).is_some() {
                    saturation = Saturation::StabilityWindow;
                    break 'outer;
                }
            }
        }
        start = end;
    }
    let classification = match saturation {
        Saturation::BudgetExhausted => Classification::Undetermined,
        _ => canonical_of(&basis).map_or(Classification::Undetermined, Classification::from),
    };
    SpanReport {
        polynomial: f.clone(),
        dim: d,
        seed: cfg.seed,
        classification,
        basis,
        witnesses,
        samples_used: used,
        method: SpanMethod::RandomSampling,
        saturation,
    }
}

fn all_units(d: usize) -> impl Iterator<Item = MatrixQ> {
    (0..d * d).map(move |k| MatrixQ::unit(d, k / d, k % d))
}

/// `true` iff the span is a Lie ideal of `M_d`: `[r, E_jk]` stays in the
/// span for every basis row `r` and matrix unit `E_jk`.
pub fn lie_ideal_check(basis: &SpanBasis) -> bool {
    let d = basis.dim();
    basis.row_matrices().iter().all(|r| {
        all_units(d).all(|e| {
            let c = r.commutator(&e).expect("same dimension");
            basis.membership(&c).expect("same dimension")
        })
    })
}

/// Smallest subspace containing `seed` that is closed under `M -> [M, E_jk]`
/// and under products of its elements.
pub fn herstein_closure(seed: &MatrixQ, d: usize) -> Result<SpanBasis, SpanError> {
    if seed.dim() != d {
        return Err(LinalgError::DimensionMismatch {
            expected: d,
            found: seed.dim(),
        }
        .into());
    }
    let mut basis = SpanBasis::empty(d);
    let mut gens: Vec<MatrixQ> = Vec::new();
    let mut queue = vec![seed.clone()];
    while let Some(x) = queue.pop() {
        if !basis.insert_mut(&x)? {
            continue;
        }
        if basis.rank() == d * d {
            break;
        }
        for e in all_units(d) {
            queue.push(x.commutator(&e)?);
        }
        queue.push(x.mat_mul(&x)?);
        for g in &gens {
            queue.push(x.mat_mul(g)?);
            queue.push(g.mat_mul(&x)?);
        }
        gens.push(x);
    }
    Ok(basis)
}

/// Writes `target` as `sum_j lambda_j f(t_j)` over the report's witnesses.
pub fn decompose_target(
    report: &SpanReport,
    target: &MatrixQ,
) -> Result<Vec<(Rational, Vec<MatrixQ>)>, SpanError> {
    let d = report.dim;
    if target.dim() != d {
        return Err(LinalgError::DimensionMismatch {
            expected: d,
            found: target.dim(),
        }
        .into());
    }
    let f = &report.polynomial;
    // Linear f = sum c_i X_i: one value suffices.
    if f.degree() == Some(1) && f.terms().all(|(w, _)| w.len() == 1) {
        let (word, c) = f.terms().next().expect("nonzero");
        let mut tuple = vec![MatrixQ::zeros(d); arity(f)];
        tuple[word.letters()[0] as usize - 1] = target.mat_scale(&(Rational::one() / c));
        return Ok(vec![(Rational::one(), tuple)]);
    }
    let coeffs = if report.witnesses.len() == report.rank() {
        if !report.basis.membership(target)? {
            return Err(SpanError::NotInSpan);
        }
        // The basis is fully reduced, so coordinates in it are the entries at
        // the pivot columns; this leaves a rank x rank system.
        let pivots = report.basis.pivots();
        let a = pivots
            .iter()
            .map(|&p| {
                report
                    .witnesses
                    .iter()
                    .map(|w| w.value.flatten()[p].clone())
                    .collect()
            })
            .collect();
        let b = pivots
            .iter()
            .map(|&p| vec![target.flatten()[p].clone()])
            .collect();
        let x = dense::solve_square(a, b).ok_or(SpanError::NotInSpan)?;
        x.into_iter().map(|mut row| row.remove(0)).collect()
    } else {
        let columns: Vec<&[Rational]> =
            report.witnesses.iter().map(|w| w.value.flatten()).collect();
        dense::solve_columns(&columns, target.flatten()).ok_or(SpanError::NotInSpan)?
    };
    Ok(coeffs
        .into_iter()
        .zip(&report.witnesses)
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, w)| (c, w.inputs.clone()))
        .collect())
}

/// Outcome of a consistency rule for one report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    Holds,
    Violated,
    /// Hypotheses not met (constant input, or `2d <= deg f`).
    Inapplicable,
    /// The span was not classified.
    Undetermined,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConsistencyFlags {
    /// The span is a Lie ideal of `M_d`.
    pub lie_ideal: bool,
    /// For nonconstant `f` with `2d > deg f` the span is trace-zero or full.
    pub exclusion: Check,
    /// Under the same hypothesis, trace-zero iff `f` is a sum of commutators.
    pub commutator_criterion: Check,
    pub sum_of_commutators: bool,
}

pub fn consistency(report: &SpanReport) -> ConsistencyFlags {
    let f = &report.polynomial;
    let sum_of_commutators = f.is_sum_of_commutators();
    let applies = matches!(f.degree(), Some(deg) if deg >= 1 && 2 * report.dim > deg);
    let class = report.classification;
    let (exclusion, commutator_criterion) = if !applies {
        (Check::Inapplicable, Check::Inapplicable)
    } else if class == Classification::Undetermined {
        (Check::Undetermined, Check::Undetermined)
    } else {
        let excl = matches!(class, Classification::TraceZero | Classification::Full);
        let comm = (class == Classification::TraceZero) == sum_of_commutators;
        (
            if excl { Check::Holds } else { Check::Violated },
            if comm { Check::Holds } else { Check::Violated },
        )
    };
    ConsistencyFlags {
        lie_ideal: lie_ideal_check(&report.basis),
        exclusion,
        commutator_criterion,
        sum_of_commutators,
    }
}

/// Values of the homogeneous components of `f` in `var` at `args`, obtained
/// by evaluating `f` with `args[var]` scaled by `0, 1, ..., m` and solving
/// the Vandermonde system. Entry `j` is the degree-`j` component's value.
pub fn component_values(
    f: &NcPolynomial,
    var: Var,
    args: &[MatrixQ],
) -> Result<Vec<MatrixQ>, SpanError> {
    let m = f.degree_in(var).unwrap_or(0);
    let nodes = crate::linalg::default_nodes(m);
    let idx = var as usize - 1;
    if idx >= args.len() {
        return Err(SpanError::ArityMismatch {
            expected: var as usize,
            found: args.len(),
        });
    }
    let values = nodes
        .iter()
        .map(|lam| {
            let mut scaled = args.to_vec();
            scaled[idx] = scaled[idx].mat_scale(lam);
            evaluate(f, &scaled)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(crate::linalg::vandermonde_extract(&nodes, &values)?)
}
