//! Batch consistency checks over a corpus of polynomials.

use std::collections::HashMap;

use serde::Serialize;

use crate::linearize::{
    reduce_to_multilinear_with, LinearizeError, MatrixOracle, MultilinearReduction, Oracle,
};
use crate::poly::NcPolynomial;
use crate::report::SCHEMA;
use crate::span::{
    classify_span, consistency, Check, Classification, ConsistencyFlags, SampleConfig, SpanError,
    SpanReport,
};
use crate::syntax::print;

/// Memoized span computations at a fixed dimension.
pub struct SpanCache<'a> {
    dim: usize,
    cfg: &'a SampleConfig,
    cache: HashMap<NcPolynomial, SpanReport>,
}

impl<'a> SpanCache<'a> {
    pub fn new(dim: usize, cfg: &'a SampleConfig) -> Self {
        SpanCache {
            dim,
            cfg,
            cache: HashMap::new(),
        }
    }

    pub fn get(&mut self, f: &NcPolynomial) -> Result<&SpanReport, SpanError> {
        if !self.cache.contains_key(f) {
            let r = classify_span(f, self.dim, self.cfg)?;
            self.cache.insert(f.clone(), r);
        }
        Ok(&self.cache[f])
    }
}

/// For each step, whether the computed span of `after` lies inside the
/// computed span of `before`.
pub fn step_containments(
    reduction: &MultilinearReduction,
    spans: &mut SpanCache<'_>,
) -> Result<Vec<bool>, SpanError> {
    reduction
        .steps
        .iter()
        .map(|s| {
            let after = spans.get(&s.after)?.basis.clone();
            let before = &spans.get(&s.before)?.basis;
            Ok(after.subspace_of(before)?)
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct ReductionCheck {
    pub output: String,
    pub steps: usize,
    pub multilinear: bool,
    pub output_accepted: bool,
    pub containments: Vec<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteEntry {
    pub line: usize,
    pub polynomial: String,
    pub classification: Classification,
    pub rank: usize,
    pub samples_used: usize,
    pub flags: ConsistencyFlags,
    pub reduction: Option<ReductionCheck>,
    /// Why no reduction was attempted.
    pub reduction_skipped: Option<String>,
}

impl SuiteEntry {
    pub fn violations(&self) -> usize {
        let mut n = 0;
        n += usize::from(!self.flags.lie_ideal);
        n += usize::from(self.flags.exclusion == Check::Violated);
        n += usize::from(self.flags.commutator_criterion == Check::Violated);
        if let Some(r) = &self.reduction {
            n += usize::from(!r.multilinear || !r.output_accepted);
            n += r.containments.iter().filter(|&&ok| !ok).count();
        }
        n
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct SuiteSummary {
    pub polynomials: usize,
    pub zero: usize,
    pub scalars: usize,
    pub trace_zero: usize,
    pub full: usize,
    pub undetermined: usize,
    pub lie_ideal_failures: usize,
    pub exclusion_holds: usize,
    pub exclusion_inapplicable: usize,
    pub exclusion_violations: usize,
    pub commutator_violations: usize,
    pub reductions: usize,
    pub containment_failures: usize,
    pub violations: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub schema: &'static str,
    pub dim: usize,
    pub seed: u64,
    pub entries: Vec<SuiteEntry>,
    pub summary: SuiteSummary,
}

/// Classifies every polynomial, checks the consistency rules, and for
/// polynomials that are neither identities nor central on `M_d` verifies
/// the span containments along the multilinear reduction.
pub fn run_suite(
    corpus: &[(usize, NcPolynomial)],
    dim: usize,
    cfg: &SampleConfig,
) -> Result<SuiteReport, SpanError> {
    let oracle = MatrixOracle::new(dim, cfg.clone());
    let mut spans = SpanCache::new(dim, cfg);
    let mut entries = Vec::with_capacity(corpus.len());
    let mut summary = SuiteSummary::default();
    for (line, f) in corpus {
        let report = spans.get(f)?.clone();
        let flags = consistency(&report);
        let (reduction, reduction_skipped) =
            match reduce_to_multilinear_with(f, &oracle, cfg.execution) {
                Ok(r) => {
                    let containments = step_containments(&r, &mut spans)?;
                    let check = ReductionCheck {
                        output: print(&r.output),
                        steps: r.steps.len(),
                        multilinear: r.output.is_multilinear(),
                        output_accepted: oracle.accepts(&r.output),
                        containments,
                    };
                    (Some(check), None)
                }
                Err(e @ (LinearizeError::NotReducible | LinearizeError::OracleRejectsInput)) => {
                    (None, Some(e.to_string()))
                }
                Err(e) => (
                    Some(ReductionCheck {
                        output: format!("error: {e}"),
                        steps: 0,
                        multilinear: false,
                        output_accepted: false,
                        containments: vec![],
                    }),
                    None,
                ),
            };
        let entry = SuiteEntry {
            line: *line,
            polynomial: print(f),
            classification: report.classification,
            rank: report.rank(),
            samples_used: report.samples_used,
            flags,
            reduction,
            reduction_skipped,
        };
        tally(&mut summary, &entry);
        entries.push(entry);
    }
    Ok(SuiteReport {
        schema: SCHEMA,
        dim,
        seed: cfg.seed,
        entries,
        summary,
    })
}

fn tally(s: &mut SuiteSummary, e: &SuiteEntry) {
    s.polynomials += 1;
    match e.classification {
        Classification::Zero => s.zero += 1,
        Classification::Scalars => s.scalars += 1,
        Classification::TraceZero => s.trace_zero += 1,
        Classification::Full => s.full += 1,
        Classification::Undetermined => s.undetermined += 1,
    }
    s.lie_ideal_failures += usize::from(!e.flags.lie_ideal);
    match e.flags.exclusion {
        Check::Holds => s.exclusion_holds += 1,
        Check::Inapplicable => s.exclusion_inapplicable += 1,
        Check::Violated => s.exclusion_violations += 1,
        Check::Undetermined => {}
    }
    s.commutator_violations += usize::from(e.flags.commutator_criterion == Check::Violated);
    if let Some(r) = &e.reduction {
        s.reductions += 1;
        s.containment_failures += r.containments.iter().filter(|&&ok| !ok).count();
    }
    s.violations += e.violations();
}
