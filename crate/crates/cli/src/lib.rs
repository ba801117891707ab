//! Front end for the `knotconc` binary.

pub mod commands;
pub mod input;

use std::fmt::Display;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand};
use concordance::Error;
use serde_json::{Number, Value};

use crate::input::InputError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID_INPUT: i32 = 2;
pub const EXIT_HYPOTHESIS: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "knotconc",
    version,
    about = "Concordance invariants of knots from Seifert matrices"
)]
pub struct Cli {
    /// Emit one JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Largest cover degree for `covers`.
    #[arg(long = "max-r", global = true, default_value_t = 10)]
    pub max_r: u64,
    /// Denominator for `signature`, odd parameter for `torus`, modulus
    /// override for `witness`.
    #[arg(long, global = true)]
    pub q: Option<u64>,
    /// Bound on the absolute value of the Casson-Gordon signature terms.
    #[arg(long, global = true, default_value_t = 0)]
    pub n0: u64,
    /// Number of family members to schedule.
    #[arg(long, global = true, default_value_t = 2)]
    pub count: usize,
    /// Alexander polynomial as ascending coefficients, e.g. "1,-1,1".
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub delta: Option<String>,
    /// Run the torus-knot signature checks.
    #[arg(long, global = true)]
    pub verify: bool,
    /// Prime of the witness cover (`witness` override).
    #[arg(long, global = true)]
    pub p: Option<u64>,
    /// Exponent of the witness cover (`witness` override).
    #[arg(long, global = true)]
    pub k: Option<u32>,
    /// Also report the signature at -1.
    #[arg(long = "minus-one", global = true)]
    pub minus_one: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Alexander polynomial det(V - tV^T).
    Alexander { input: Option<PathBuf> },
    /// Homology orders of the r-fold cyclic branched covers.
    Covers { input: Option<PathBuf> },
    /// Which prime-power covers are homology spheres.
    Classify { input: Option<PathBuf> },
    /// Tristram-Levine signatures at the q-th roots of unity.
    Signature { input: Option<PathBuf> },
    /// Seifert matrix of the (2, q) torus knot.
    Torus {
        #[arg(value_name = "Q", allow_hyphen_values = true)]
        param: Option<i64>,
    },
    /// Schedule and separation check for a same-matrix family.
    Witness { input: Option<PathBuf> },
}

/// Result of a command: a JSON document and its line-oriented rendering.
#[derive(Clone, Debug)]
pub struct Report {
    pub json: Value,
    pub lines: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct CliError {
    pub status: i32,
    pub kind: &'static str,
    pub message: String,
    pub detail: Option<Value>,
    pub detail_lines: Vec<String>,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError {
            status: EXIT_INVALID_INPUT,
            kind: "usage",
            message: message.into(),
            detail: None,
            detail_lines: Vec::new(),
        }
    }

    pub fn to_json(&self) -> Value {
        let mut err = serde_json::Map::new();
        err.insert("kind".into(), Value::from(self.kind));
        err.insert("message".into(), Value::from(self.message.clone()));
        err.insert("exit_status".into(), Value::from(self.status));
        if let Some(d) = &self.detail {
            err.insert("classification".into(), d.clone());
        }
        let mut doc = serde_json::Map::new();
        doc.insert("error".into(), Value::Object(err));
        Value::Object(doc)
    }
}

impl From<InputError> for CliError {
    fn from(e: InputError) -> Self {
        let kind = match e {
            InputError::Io { .. } => "io",
            InputError::Invalid(_) => "invalid_seifert_matrix",
            _ => "parse",
        };
        CliError {
            status: EXIT_INVALID_INPUT,
            kind,
            message: e.to_string(),
            detail: None,
            detail_lines: Vec::new(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let (status, kind) = match &e {
            Error::InvalidSeifertMatrix(_) => (EXIT_INVALID_INPUT, "invalid_seifert_matrix"),
            Error::BadTorusParameter(_) => (EXIT_INVALID_INPUT, "bad_torus_parameter"),
            Error::NotAKnotPolynomial(_) => (EXIT_INVALID_INPUT, "not_a_knot_polynomial"),
            Error::NotAPrimePower(_) => (EXIT_INVALID_INPUT, "not_a_prime_power"),
            Error::NotAPrime(_) => (EXIT_INVALID_INPUT, "not_a_prime"),
            Error::OutOfRange { .. } => (EXIT_INVALID_INPUT, "out_of_range"),
            Error::TrivialAngle => (EXIT_INVALID_INPUT, "trivial_angle"),
            Error::JumpPoint { .. } => (EXIT_INVALID_INPUT, "jump_point"),
            Error::HypothesisNotSatisfied(_) => (EXIT_HYPOTHESIS, "hypothesis_not_satisfied"),
            Error::LemmaViolation(_) => (EXIT_INTERNAL, "lemma_violation"),
            Error::IdentityViolation { .. } => (EXIT_INTERNAL, "identity_violation"),
            Error::SeparationFailure(_) => (EXIT_INTERNAL, "separation_failure"),
            Error::WitnessSearchExhausted { .. } => (EXIT_INTERNAL, "witness_search_exhausted"),
            Error::SignatureUncertified { .. } => (EXIT_INTERNAL, "signature_uncertified"),
            Error::FactorizationLimit { .. } => (EXIT_INTERNAL, "factorization_limit"),
            Error::PreconditionUnverifiable(_) => (EXIT_INTERNAL, "precondition_unverifiable"),
            _ => (EXIT_INTERNAL, "internal"),
        };
        let (detail, detail_lines) = match &e {
            Error::HypothesisNotSatisfied(c) => (
                Some(commands::classification_json(c)),
                commands::classification_lines(c),
            ),
            _ => (None, Vec::new()),
        };
        CliError {
            status,
            kind,
            message: e.to_string(),
            detail,
            detail_lines,
        }
    }
}

/// Exact decimal JSON number.
pub fn num(n: impl Display) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("decimal integer"))
}

pub fn run(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Alexander { input } => commands::alexander(cli, input.as_deref()),
        Command::Covers { input } => commands::covers(cli, input.as_deref()),
        Command::Classify { input } => commands::classify(cli, input.as_deref()),
        Command::Signature { input } => commands::signature(cli, input.as_deref()),
        Command::Torus { param } => commands::torus(cli, *param),
        Command::Witness { input } => commands::witness(cli, input.as_deref()),
    }
}

/// Renders the outcome of [`run`]: `(exit status, stdout, stderr)`.
pub fn render(cli: &Cli, outcome: Result<Report, CliError>) -> (i32, String, String) {
    match outcome {
        Ok(report) if cli.json => (EXIT_OK, format!("{}\n", report.json), String::new()),
        Ok(report) => (EXIT_OK, lines(&report.lines), String::new()),
        Err(e) if cli.json => (e.status, format!("{}\n", e.to_json()), String::new()),
        Err(e) => {
            let mut err = format!("error: {}\n", e.message);
            err.push_str(&lines(&e.detail_lines));
            (e.status, String::new(), err)
        }
    }
}

fn lines(v: &[String]) -> String {
    v.iter().map(|l| format!("{l}\n")).collect()
}
