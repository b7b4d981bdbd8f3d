//! Machine-readable documents emitted by the CLI.
//!
//! Every document carries `"schema": "ncspan/1"`. Rationals are strings
//! (`"3"`, `"-1/2"`) and matrices are arrays of rows, so nothing is lost to
//! floating point. Field order is fixed, which makes output byte-identical
//! for identical inputs.

use serde::Serialize;

use crate::linalg::MatrixQ;
use crate::linearize::{MultilinearReduction, StepKind};
use crate::poly::{NcPolynomial, Rational, Var};
use crate::span::{ConsistencyFlags, IdentityVerdict, Saturation, SpanMethod, SpanReport};
use crate::syntax::{print, rational_str};

pub const SCHEMA: &str = "ncspan/1";

pub type MatrixJson = Vec<Vec<String>>;

pub fn matrix_json(m: &MatrixQ) -> MatrixJson {
    m.rows()
        .map(|r| r.iter().map(rational_str).collect())
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessJson {
    pub inputs: Vec<MatrixJson>,
    pub value: MatrixJson,
}

#[derive(Debug, Clone, Serialize)]
pub struct SpanReportJson {
    pub schema: &'static str,
    pub polynomial: String,
    pub dim: usize,
    pub seed: u64,
    pub classification: &'static str,
    pub rank: usize,
    pub basis: Vec<MatrixJson>,
    pub witnesses: Vec<WitnessJson>,
    pub samples_used: usize,
    pub method: SpanMethod,
    pub saturation: Saturation,
    pub consistency_flags: ConsistencyFlags,
}

impl SpanReportJson {
    pub fn new(report: &SpanReport, flags: ConsistencyFlags) -> Self {
        SpanReportJson {
            schema: SCHEMA,
            polynomial: print(&report.polynomial),
            dim: report.dim,
            seed: report.seed,
            classification: report.classification.as_str(),
            rank: report.rank(),
            basis: report
                .basis
                .row_matrices()
                .iter()
                .map(matrix_json)
                .collect(),
            witnesses: report
                .witnesses
                .iter()
                .map(|w| WitnessJson {
                    inputs: w.inputs.iter().map(matrix_json).collect(),
                    value: matrix_json(&w.value),
                })
                .collect(),
            samples_used: report.samples_used,
            method: report.method,
            saturation: report.saturation,
            consistency_flags: flags,
        }
    }
}

/// Short human-readable summary of a span report.
pub fn span_report_text(report: &SpanReport, flags: &ConsistencyFlags) -> String {
    let mut s = format!(
        "polynomial: {}\ndim: {}\nseed: {}\nclassification: {}\nrank: {}\nsamples used: {}\nmethod: {:?}\nsaturation: {:?}\n",
        print(&report.polynomial),
        report.dim,
        report.seed,
        report.classification.as_str(),
        report.rank(),
        report.samples_used,
        report.method,
        report.saturation,
    );
    s.push_str(&format!(
        "lie ideal: {}\nexclusion: {:?}\ncommutator criterion: {:?}\n",
        flags.lie_ideal, flags.exclusion, flags.commutator_criterion
    ));
    for (k, row) in report.basis.row_matrices().iter().enumerate() {
        s.push_str(&format!("basis[{k}]: {row}\n"));
    }
    s
}

#[derive(Debug, Clone, Serialize)]
pub struct StepJson {
    #[serde(flatten)]
    pub kind: StepKind,
    pub variable: Var,
    pub before: String,
    pub after: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReductionJson {
    pub schema: &'static str,
    pub dim: usize,
    pub seed: u64,
    pub input: String,
    pub output: String,
    pub multilinear: bool,
    pub steps: Vec<StepJson>,
}

impl ReductionJson {
    pub fn new(r: &MultilinearReduction, dim: usize, seed: u64) -> Self {
        ReductionJson {
            schema: SCHEMA,
            dim,
            seed,
            input: print(&r.input),
            output: print(&r.output),
            multilinear: r.output.is_multilinear(),
            steps: r
                .steps
                .iter()
                .map(|s| StepJson {
                    kind: s.kind.clone(),
                    variable: s.variable,
                    before: print(&s.before),
                    after: print(&s.after),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CommtestJson {
    pub schema: &'static str,
    pub polynomial: String,
    pub sum_of_commutators: bool,
    /// Least rotation of a cyclic class whose coefficients do not cancel.
    pub witness_class: Option<String>,
    pub class_sum: Option<String>,
}

impl CommtestJson {
    pub fn new(f: &NcPolynomial) -> Self {
        let obstruction = f.commutator_obstruction();
        CommtestJson {
            schema: SCHEMA,
            polynomial: print(f),
            sum_of_commutators: obstruction.is_none(),
            witness_class: obstruction.as_ref().map(|o| o.representative.to_string()),
            class_sum: obstruction
                .as_ref()
                .map(|o| rational_str(&o.coefficient_sum)),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DimensionCheckJson {
    pub dim: usize,
    pub identity: bool,
    pub central: bool,
    pub identity_method: crate::span::IdentityMethod,
    pub error_bound: Option<f64>,
}

impl DimensionCheckJson {
    pub fn new(dim: usize, identity: &IdentityVerdict, commutator: &IdentityVerdict) -> Self {
        DimensionCheckJson {
            dim,
            identity: identity.is_identity,
            central: !identity.is_identity && commutator.is_identity,
            identity_method: commutator.method,
            error_bound: commutator.error_bound.or(identity.error_bound),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessDimensionJson {
    pub schema: &'static str,
    pub polynomial: String,
    pub seed: u64,
    pub dmax: usize,
    pub witness_dimension: Option<usize>,
    pub checks: Vec<DimensionCheckJson>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DecompositionTermJson {
    pub coefficient: String,
    pub inputs: Vec<MatrixJson>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DecompositionJson {
    pub schema: &'static str,
    pub polynomial: String,
    pub dim: usize,
    pub seed: u64,
    pub classification: &'static str,
    pub target: MatrixJson,
    pub terms: Vec<DecompositionTermJson>,
    /// Recomputed `sum_j c_j f(t_j)`.
    pub reconstruction: MatrixJson,
    pub verified: bool,
}

impl DecompositionJson {
    pub fn new(
        report: &SpanReport,
        target: &MatrixQ,
        terms: &[(Rational, Vec<MatrixQ>)],
        reconstruction: &MatrixQ,
    ) -> Self {
        DecompositionJson {
            schema: SCHEMA,
            polynomial: print(&report.polynomial),
            dim: report.dim,
            seed: report.seed,
            classification: report.classification.as_str(),
            target: matrix_json(target),
            terms: terms
                .iter()
                .map(|(c, t)| DecompositionTermJson {
                    coefficient: rational_str(c),
                    inputs: t.iter().map(matrix_json).collect(),
                })
                .collect(),
            reconstruction: matrix_json(reconstruction),
            verified: reconstruction == target,
        }
    }
}

pub fn to_json<T: Serialize>(doc: &T) -> String {
    serde_json::to_string_pretty(doc).expect("report types serialize")
}
