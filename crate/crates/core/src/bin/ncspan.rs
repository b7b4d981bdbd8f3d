//! `ncspan` command-line interface.
//!
//! Exit codes: 0 success, 1 negative analysis result, 2 usage or parse
//! error, 64 undetermined classification.

use std::io::{ErrorKind, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ncspan::linearize::{reduce_to_multilinear_with, LinearizeError, MatrixOracle};
use ncspan::report::{
    span_report_text, to_json, CommtestJson, DecompositionJson, DimensionCheckJson, ReductionJson,
    SpanReportJson, WitnessDimensionJson, SCHEMA,
};
use ncspan::span::{
    self, classify_span, consistency, decompose_target, evaluate, SampleConfig, SpanError,
};
use ncspan::suite::run_suite;
use ncspan::syntax::{parse, parse_corpus, parse_matrix, print};
use ncspan::{Classification, MatrixQ, NcPolynomial};

const EXIT_NEGATIVE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_UNDETERMINED: u8 = 64;

#[derive(Parser)]
#[command(
    name = "ncspan",
    version,
    about = "Spans of noncommutative polynomial values on M_d(Q)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Sampling {
    /// Random seed (defaults to $NCSPAN_SEED, then 0).
    #[arg(long, env = "NCSPAN_SEED", default_value_t = 0)]
    seed: u64,
    /// Sampling budget; defaults to 64*d^2.
    #[arg(long)]
    max_samples: Option<usize>,
    /// Random entries are drawn from [-B, B].
    #[arg(long, default_value_t = 10)]
    coeff_bound: u32,
    /// Consecutive non-growing samples required before stopping.
    #[arg(long, default_value_t = 50)]
    stability_window: usize,
    /// Run on a single thread.
    #[arg(long)]
    sequential: bool,
}

impl Sampling {
    fn config(&self) -> SampleConfig {
        let cfg = SampleConfig {
            seed: self.seed,
            coeff_bound: self.coeff_bound,
            max_samples: self.max_samples,
            stability_window: self.stability_window,
            ..SampleConfig::default()
        };
        if self.sequential {
            cfg.sequential()
        } else {
            cfg
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the span of values on M_d.
    Classify {
        /// Polynomial such as "X1*X2 - X2*X1" or "[X1,X2]^2".
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        /// Matrix size d.
        #[arg(long)]
        dim: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Smallest d <= dmax where the polynomial is neither an identity nor central.
    Witness {
        /// Polynomial such as "X1*X2 - X2*X1" or "[X1,X2]^2".
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        /// Largest matrix size tried.
        #[arg(long)]
        dmax: usize,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Reduce to a multilinear polynomial, printing every step.
    Linearize {
        /// Polynomial such as "X1*X2 - X2*X1" or "[X1,X2]^2".
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        /// Matrix size d.
        #[arg(long)]
        dim: usize,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Test membership in the commutator subspace of the free algebra.
    Commtest {
        /// Polynomial such as "X1*X2 - X2*X1" or "[X1,X2]^2".
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// Express a target matrix as a combination of polynomial values.
    Decompose {
        /// Polynomial such as "X1*X2 - X2*X1" or "[X1,X2]^2".
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        /// Matrix size d.
        #[arg(long)]
        dim: usize,
        /// Rows separated by ';', entries by ',', e.g. "1,0;0,-1".
        #[arg(long, allow_hyphen_values = true)]
        target: String,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Run the consistency battery over a corpus file.
    Suite {
        /// One polynomial per line; '#' starts a comment.
        #[arg(long)]
        corpus: std::path::PathBuf,
        /// Matrix size d.
        #[arg(long)]
        dim: usize,
        #[command(flatten)]
        sampling: Sampling,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl std::fmt::Display) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.to_string(),
        }
    }

    fn negative(message: impl std::fmt::Display) -> Self {
        Failure {
            code: EXIT_NEGATIVE,
            message: message.to_string(),
        }
    }
}

impl From<SpanError> for Failure {
    fn from(e: SpanError) -> Self {
        match e {
            SpanError::NotInSpan => Failure::negative(e),
            _ => Failure::usage(e),
        }
    }
}

fn parse_poly(text: &str) -> Result<NcPolynomial, Failure> {
    parse(text).map_err(|e| Failure::usage(format!("cannot parse polynomial: {e}")))
}

fn require_dim(dim: usize) -> Result<usize, Failure> {
    if dim == 0 {
        Err(Failure::usage("--dim must be at least 1"))
    } else {
        Ok(dim)
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Classify {
            poly,
            dim,
            format,
            sampling,
        } => {
            let f = parse_poly(&poly)?;
            let report = classify_span(&f, require_dim(dim)?, &sampling.config())?;
            let flags = consistency(&report);
            match format {
                Format::Json => emit(&format!(
                    "{}\n",
                    to_json(&SpanReportJson::new(&report, flags))
                )),
                Format::Text => emit(&span_report_text(&report, &flags)),
            }
            Ok(if report.classification == Classification::Undetermined {
                EXIT_UNDETERMINED
            } else {
                0
            })
        }
        Command::Witness {
            poly,
            dmax,
            sampling,
        } => {
            let f = parse_poly(&poly)?;
            let cfg = sampling.config();
            let found = span::find_witness_dimension(&f, dmax, &cfg)?;
            let checks = (1..=found.unwrap_or(dmax))
                .map(|d| {
                    let id = span::identity_test(&f, d, &cfg);
                    let comm = span::identity_test(&span::commutator_with_fresh(&f), d, &cfg);
                    DimensionCheckJson::new(d, &id, &comm)
                })
                .collect();
            let doc = WitnessDimensionJson {
                schema: SCHEMA,
                polynomial: print(&f),
                seed: cfg.seed,
                dmax,
                witness_dimension: found,
                checks,
            };
            emit(&format!("{}\n", to_json(&doc)));
            Ok(if found.is_some() { 0 } else { EXIT_NEGATIVE })
        }
        Command::Linearize {
            poly,
            dim,
            sampling,
        } => {
            let f = parse_poly(&poly)?;
            let cfg = sampling.config();
            let oracle = MatrixOracle::new(require_dim(dim)?, cfg.clone());
            match reduce_to_multilinear_with(&f, &oracle, cfg.execution) {
                Ok(r) => {
                    emit(&format!(
                        "{}\n",
                        to_json(&ReductionJson::new(&r, dim, cfg.seed))
                    ));
                    Ok(0)
                }
                Err(e @ LinearizeError::NotReducible) => Err(Failure::usage(e)),
                Err(e) => Err(Failure::negative(e)),
            }
        }
        Command::Commtest { poly } => {
            let f = parse_poly(&poly)?;
            let doc = CommtestJson::new(&f);
            emit(&format!("{}\n", to_json(&doc)));
            Ok(if doc.sum_of_commutators {
                0
            } else {
                EXIT_NEGATIVE
            })
        }
        Command::Decompose {
            poly,
            dim,
            target,
            sampling,
        } => {
            let f = parse_poly(&poly)?;
            let target = parse_matrix(&target)
                .map_err(|e| Failure::usage(format!("cannot parse target: {e}")))?;
            let report = classify_span(&f, require_dim(dim)?, &sampling.config())?;
            let terms = decompose_target(&report, &target)?;
            let mut acc = MatrixQ::zeros(dim);
            for (c, tuple) in &terms {
                let value = evaluate(&f, tuple)?;
                acc.add_scaled(c, &value).map_err(SpanError::from)?;
            }
            let doc = DecompositionJson::new(&report, &target, &terms, &acc);
            emit(&format!("{}\n", to_json(&doc)));
            Ok(if doc.verified { 0 } else { EXIT_NEGATIVE })
        }
        Command::Suite {
            corpus,
            dim,
            sampling,
        } => {
            let text = std::fs::read_to_string(&corpus)
                .map_err(|e| Failure::usage(format!("cannot read {}: {e}", corpus.display())))?;
            let parsed = parse_corpus(&text)
                .map_err(|e| Failure::usage(format!("{}:{e}", corpus.display())))?;
            let items: Vec<_> = parsed.into_iter().map(|(line, f, _)| (line, f)).collect();
            let report = run_suite(&items, require_dim(dim)?, &sampling.config())?;
            emit(&format!("{}\n", to_json(&report)));
            let s = &report.summary;
            Ok(if s.violations > 0 {
                EXIT_NEGATIVE
            } else if s.undetermined > 0 {
                EXIT_UNDETERMINED
            } else {
                0
            })
        }
    }
}

/// Writes a finished document to stdout. A reader that closed the pipe early
/// (`| head`) is not an error.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    if let Err(e) = out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        if e.kind() != ErrorKind::BrokenPipe {
            eprintln!("ncspan: cannot write output: {e}");
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("ncspan: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
