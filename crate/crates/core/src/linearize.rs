//! Reduction of a polynomial to a multilinear one with a smaller span.
//!
//! Each step replaces `f` by a polynomial whose span of values on any
//! algebra is contained in that of `f`:
//!
//! * **strip** keeps either the monomials containing `X_i` or those that do
//!   not (the latter is `f` with `X_i = 0`);
//! * **homogeneous select** keeps one component of fixed degree in `X_i`
//!   (Vandermonde extraction from `f(.., t X_i, ..)`);
//! * **delta** replaces `f` by `f(X_i + X_m) - f(X_i) - f(X_m)`.
//!
//! Whenever there is a choice, the candidates are ordered by total degree,
//! then by degree vector, and the first one accepted by the
//! [`Oracle`] is kept.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::par::{self, Execution};
use crate::poly::{NcPolynomial, Rational, Var};
use crate::span::{self, SampleConfig};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinearizeError {
    #[error("variable X{0} already occurs in the polynomial")]
    VariableCollision(Var),
    #[error("variable X{0} does not occur in the polynomial")]
    VariableAbsent(Var),
    #[error("polynomial is not homogeneous in X{0}")]
    NotHomogeneous(Var),
    #[error("degree {degree} in X{var} is below 2")]
    DegreeTooLow { var: Var, degree: usize },
    #[error("constant polynomials cannot be reduced")]
    NotReducible,
    #[error("the oracle rejects the input polynomial")]
    OracleRejectsInput,
    #[error("no candidate passed the oracle while processing X{0}")]
    OracleFailed(Var),
}

/// Decides whether a polynomial is neither an identity nor a central
/// polynomial of some fixed algebra.
pub trait Oracle: Sync {
    fn accepts(&self, f: &NcPolynomial) -> bool;
}

impl<F> Oracle for F
where
    F: Fn(&NcPolynomial) -> bool + Sync,
{
    fn accepts(&self, f: &NcPolynomial) -> bool {
        self(f)
    }
}

/// Non-triviality on `M_d` via [`span::is_nontrivial`]; exact for multilinear
/// inputs, randomized otherwise.
#[derive(Debug, Clone)]
pub struct MatrixOracle {
    pub dim: usize,
    pub cfg: SampleConfig,
}

impl MatrixOracle {
    pub fn new(dim: usize, cfg: SampleConfig) -> Self {
        MatrixOracle { dim, cfg }
    }
}

impl Oracle for MatrixOracle {
    fn accepts(&self, f: &NcPolynomial) -> bool {
        span::is_nontrivial(f, self.dim, &self.cfg)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Branch {
    /// Monomials containing the variable.
    With,
    /// Monomials free of the variable.
    Without,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum StepKind {
    Strip {
        kept: Branch,
    },
    /// Renames variables to `X1..Xk` after stripping; spans are unchanged.
    Relabel {
        mapping: Vec<(Var, Var)>,
    },
    HomogeneousSelect {
        degree: usize,
    },
    Delta {
        fresh: Var,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionStep {
    pub kind: StepKind,
    pub variable: Var,
    pub before: NcPolynomial,
    pub after: NcPolynomial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultilinearReduction {
    pub input: NcPolynomial,
    pub output: NcPolynomial,
    pub steps: Vec<ReductionStep>,
}

/// `f(.., X_i + X_m, ..) - f(.., X_i, ..) - f(.., X_m, ..)`.
pub fn delta(f: &NcPolynomial, i: Var, m: Var) -> Result<NcPolynomial, LinearizeError> {
    if f.occurs(m) || m == i {
        return Err(LinearizeError::VariableCollision(m));
    }
    if !f.occurs(i) {
        return Err(LinearizeError::VariableAbsent(i));
    }
    let xi = NcPolynomial::var(i);
    let xm = NcPolynomial::var(m);
    let shifted = f.substitute_partial(&BTreeMap::from([(i, &xi + &xm)]));
    let swapped = f.substitute_partial(&BTreeMap::from([(i, xm)]));
    Ok(&(&shifted - f) - &swapped)
}

/// Checks `fprime(.., X_m -> X_i) = (2^k - 2) f` where `k = deg_{X_i} f`.
pub fn resubstitute_check(
    f: &NcPolynomial,
    fprime: &NcPolynomial,
    i: Var,
    m: Var,
) -> Result<bool, LinearizeError> {
    if !f.is_homogeneous_in(i) {
        return Err(LinearizeError::NotHomogeneous(i));
    }
    let k = f.degree_in(i).unwrap_or(0);
    if k < 2 {
        return Err(LinearizeError::DegreeTooLow { var: i, degree: k });
    }
    let back = fprime.substitute_partial(&BTreeMap::from([(m, NcPolynomial::var(i))]));
    let factor = Rational::from_integer((num_bigint::BigInt::from(1) << k) - 2);
    Ok(back == f.scale(&factor))
}

struct Reducer<'a, O: Oracle + ?Sized> {
    oracle: &'a O,
    exec: Execution,
    current: NcPolynomial,
    steps: Vec<ReductionStep>,
}

impl<O: Oracle + ?Sized> Reducer<'_, O> {
    /// Index of the first candidate, in tie-break order, that the oracle
    /// accepts.
    fn choose<T: Sync>(
        &self,
        mut candidates: Vec<(T, NcPolynomial)>,
        var: Var,
    ) -> Result<(T, NcPolynomial), LinearizeError> {
        candidates.sort_by_cached_key(|(_, p)| (p.degree().unwrap_or(0), p.degree_vector()));
        let polys: Vec<&NcPolynomial> = candidates.iter().map(|(_, p)| p).collect();
        let idx = par::position_first(self.exec, &polys, |p| self.oracle.accepts(p))
            .ok_or(LinearizeError::OracleFailed(var))?;
        Ok(candidates.swap_remove(idx))
    }

    fn record(&mut self, kind: StepKind, variable: Var, after: NcPolynomial) {
        let before = std::mem::replace(&mut self.current, after.clone());
        self.steps.push(ReductionStep {
            kind,
            variable,
            before,
            after,
        });
    }

    fn strip_all(&mut self) -> Result<(), LinearizeError> {
        for v in 1..=self.current.nvars() {
            if !self.current.occurs(v) {
                continue;
            }
            let (with, without) = self.current.strip_variable(v);
            if without.is_zero() {
                continue;
            }
            let (kept, next) =
                self.choose(vec![(Branch::With, with), (Branch::Without, without)], v)?;
            self.record(StepKind::Strip { kept }, v, next);
        }
        Ok(())
    }

    fn compact(&mut self) {
        let vars: Vec<Var> = self.current.variables().into_iter().collect();
        let mapping: Vec<(Var, Var)> = vars
            .iter()
            .zip(1..)
            .filter(|(old, new)| *old != new)
            .map(|(&old, new)| (old, new))
            .collect();
        if mapping.is_empty() {
            return;
        }
        let next = self.current.relabel(&mapping.iter().copied().collect());
        self.record(StepKind::Relabel { mapping }, 0, next);
    }

    fn select_homogeneous(&mut self, v: Var) -> Result<(), LinearizeError> {
        let components = self.current.homogeneous_components_in(v);
        if components.len() <= 1 {
            return Ok(());
        }
        let (degree, next) = self.choose(components, v)?;
        self.record(StepKind::HomogeneousSelect { degree }, v, next);
        Ok(())
    }

    fn linearize(&mut self) -> Result<(), LinearizeError> {
        let mut v = 1;
        while v <= self.current.nvars() {
            self.select_homogeneous(v)?;
            while self.current.degree_in(v).unwrap_or(0) > 1 {
                let fresh = self.current.nvars() + 1;
                let next = delta(&self.current, v, fresh)?;
                if !self.oracle.accepts(&next) {
                    return Err(LinearizeError::OracleFailed(v));
                }
                self.record(StepKind::Delta { fresh }, v, next);
                self.select_homogeneous(v)?;
            }
            v += 1;
        }
        Ok(())
    }
}

/// Reduces `f` to a multilinear polynomial accepted by `oracle`, recording
/// every step.
pub fn reduce_to_multilinear<O: Oracle + ?Sized>(
    f: &NcPolynomial,
    oracle: &O,
) -> Result<MultilinearReduction, LinearizeError> {
    reduce_to_multilinear_with(f, oracle, Execution::default())
}

pub fn reduce_to_multilinear_with<O: Oracle + ?Sized>(
    f: &NcPolynomial,
    oracle: &O,
    exec: Execution,
) -> Result<MultilinearReduction, LinearizeError> {
    if f.is_constant() {
        return Err(LinearizeError::NotReducible);
    }
    if !oracle.accepts(f) {
        return Err(LinearizeError::OracleRejectsInput);
    }
    let mut r = Reducer {
        oracle,
        exec,
        current: f.clone(),
        steps: Vec::new(),
    };
    r.strip_all()?;
    r.compact();
    r.linearize()?;
    debug_assert!(r.current.is_multilinear());
    Ok(MultilinearReduction {
        input: f.clone(),
        output: r.current,
        steps: r.steps,
    })
}
