//! Command-line front end: analyze / check / verify / oracle over pattern
//! files, with deterministic text or JSON output.
//!
//! Exit codes: 0 success, 1 verification failure (a sampled or supplied
//! member contradicts the generic prediction, or a brute-force cross-check
//! disagrees), 2 input error, 3 exhaustive-search guard exceeded.

use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand};

use bicanon::field::{PrimeField, Rationals, SampleRange};
use bicanon::oracle::{OracleError, VerifyOptions, DEFAULT_EXHAUSTIVE_LIMIT};
use bicanon::pattern::{parse_assignment, parse_values};
use bicanon::report::{analyze, check, run_oracle, run_verify, CheckReport, ReportError};

#[derive(Parser)]
#[command(
    name = "bicanon",
    version,
    about = "Generic canonical forms of zero-pattern matrix pairs [A | B]",
    after_help = "Pattern files start with `pattern m p q`, followed by m grid rows of\n\
                  `.`/`x<k>` tokens with `|` separating the two strips. Assignment files\n\
                  hold one line `a = v1 v2 ... vn` of integers or fractions."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug)]
enum FieldArg {
    Rational,
    Gf(u64),
}

impl FromStr for FieldArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "rational" {
            Ok(Self::Rational)
        } else if let Some(p) = s.strip_prefix("gf:") {
            p.parse().map(Self::Gf).map_err(|_| format!("invalid modulus '{p}'"))
        } else {
            Err(format!("expected 'rational' or 'gf:<p>', got '{s}'"))
        }
    }
}

impl fmt::Display for FieldArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Rational => write!(f, "rational"),
            Self::Gf(p) => write!(f, "gf:{p}"),
        }
    }
}

fn parse_sample_range(s: &str) -> Result<SampleRange, String> {
    let (lo, hi) = s.split_once(':').ok_or("expected LO:HI, e.g. -10:10")?;
    let lo: i64 = lo.trim().parse().map_err(|_| format!("invalid integer '{lo}'"))?;
    let hi: i64 = hi.trim().parse().map_err(|_| format!("invalid integer '{hi}'"))?;
    if lo > hi {
        return Err(format!("empty sampling window {lo}:{hi}"));
    }
    Ok(SampleRange::new(lo, hi))
}

#[derive(Subcommand)]
enum Command {
    /// Ranks, optimal pair, triple, generic member, block form, minors, and f
    Analyze {
        /// pattern file
        pattern: PathBuf,
        /// emit JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Evaluate f at one assignment and reduce that member, with certificates
    Check {
        /// pattern file
        pattern: PathBuf,
        /// assignment file: one line `a = v1 v2 ... vn`
        assignment: Option<PathBuf>,
        /// inline assignment instead of a file, e.g. --values "1 -2 3/4"
        #[arg(long, conflicts_with = "assignment")]
        values: Option<String>,
        /// coefficient field: rational | gf:<p>
        #[arg(long, default_value_t = FieldArg::Rational)]
        field: FieldArg,
        /// emit JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Sample assignments and verify each generic member's reduction
    Verify {
        /// pattern file
        pattern: PathBuf,
        /// number of sampled assignments
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// RNG seed; per-trial generators are derived from it by counter
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// coefficient field: rational | gf:<p>
        #[arg(long, default_value_t = FieldArg::Rational)]
        field: FieldArg,
        /// integer sampling window LO:HI (ignored over gf:<p>)
        #[arg(long, default_value = "-10:10", value_parser = parse_sample_range)]
        sample_range: SampleRange,
        /// also recompose S*A*R1, S*B*R2 from every certificate
        #[arg(long)]
        certificates: bool,
        /// emit JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Exhaustive enumerations cross-checked against the fast path
    Oracle {
        /// pattern file
        pattern: PathBuf,
        /// refuse exhaustive search above this many unknowns
        #[arg(long, default_value_t = DEFAULT_EXHAUSTIVE_LIMIT)]
        max_exhaustive: usize,
        /// emit JSON instead of text
        #[arg(long)]
        json: bool,
    },
}

/// Failures that end the process: the message goes to stderr, the code to
/// the shell.
struct Failure {
    message: String,
    code: u8,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Self { message: message.into(), code: 2 }
    }
}

impl From<ReportError> for Failure {
    fn from(err: ReportError) -> Self {
        let code = match &err {
            ReportError::Oracle(OracleError::GuardExceeded { .. }) => 3,
            _ => 2,
        };
        Self { message: err.to_string(), code }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))
}

fn emit(json: bool, json_text: impl FnOnce() -> String, text: impl FnOnce() -> String) {
    if json {
        println!("{}", json_text());
    } else {
        print!("{}", text());
    }
}

fn check_exit(report: &CheckReport) -> ExitCode {
    if report.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Analyze { pattern, json } => {
            let report = analyze(&read(&pattern)?)?;
            emit(
                json,
                || serde_json::to_string_pretty(&report).expect("report serializes"),
                || report.to_text(),
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { pattern, assignment, values, field, json } => {
            let text = read(&pattern)?;
            let values = match (&assignment, &values) {
                (Some(path), None) => parse_assignment(&read(path)?).map_err(ReportError::from)?,
                (None, Some(inline)) => parse_values(inline).map_err(ReportError::from)?,
                (None, None) => {
                    return Err(Failure::input(
                        "provide an assignment file or --values \"v1 v2 ...\"",
                    ))
                }
                (Some(_), Some(_)) => unreachable!("clap rejects the combination"),
            };
            let report = match field {
                FieldArg::Rational => check(&text, &Rationals, &values)?,
                FieldArg::Gf(p) => {
                    let gf = PrimeField::new(p).map_err(ReportError::from)?;
                    check(&text, &gf, &values)?
                }
            };
            emit(
                json,
                || serde_json::to_string_pretty(&report).expect("report serializes"),
                || report.to_text(),
            );
            Ok(check_exit(&report))
        }
        Command::Verify { pattern, trials, seed, field, sample_range, certificates, json } => {
            let text = read(&pattern)?;
            let options = VerifyOptions {
                trials,
                seed,
                range: sample_range,
                check_certificates: certificates,
            };
            let report = match field {
                FieldArg::Rational => run_verify(&text, &Rationals, &options)?,
                FieldArg::Gf(p) => {
                    let gf = PrimeField::new(p).map_err(ReportError::from)?;
                    run_verify(&text, &gf, &options)?
                }
            };
            emit(
                json,
                || serde_json::to_string_pretty(&report).expect("report serializes"),
                || report.to_text(),
            );
            Ok(if report.failures == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Oracle { pattern, max_exhaustive, json } => {
            let report = run_oracle(&read(&pattern)?, max_exhaustive)?;
            emit(
                json,
                || serde_json::to_string_pretty(&report).expect("report serializes"),
                || report.to_text(),
            );
            Ok(if report.sizes_match_ranks && report.v_agrees {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
