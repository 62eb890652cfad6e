//! Argument parsing and command dispatch.
//!
//! Exit codes: 0 success, 1 usage or domain error, 2 internal invariant
//! violation (including any failed `verify` check).

use std::collections::BTreeMap;
use std::io::Write;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use ellsum_core::bernoulli::bernoulli_number;
use ellsum_core::classifier::classify;
use ellsum_core::powersum::build;
use ellsum_core::rootstructure::multiplicity_profile;
use ellsum_core::verify::VerifyConfig;
use ellsum_core::{Error, ProblemInstance};
use serde::Serialize;
use serde_json::{json, Value};

use crate::parallel;
use crate::record::{render_text, OutputRecord};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INTERNAL: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "ellsum", version, about = "Exact checks and solution search for (x+1)^k + ... + (lx)^k = y^n")]
pub struct Cli {
    /// Emit one JSON record per result instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Normalization {
    /// (k+1) times the sum: B_{k+1}(lx+1) - B_{k+1}(x+1).
    #[value(name = "paper", alias = "scaled")]
    Scaled,
    /// The sum itself.
    Sum,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the Bernoulli number B_i as num/den.
    Bernoulli { i: usize },
    /// Print the power-sum polynomial, one "degree: coefficient" per line.
    Poly {
        k: u32,
        l: u32,
        #[arg(long, value_enum, default_value = "paper")]
        normalization: Normalization,
    },
    /// Print the root multiplicity profile of H.
    Profile { k: u32, l: u32 },
    /// Classify (k, l, n), or every n up to --nmax.
    #[command(group(ArgGroup::new("exponent").required(true).args(["n", "nmax"])))]
    Classify {
        k: u32,
        l: u32,
        n: Option<u32>,
        #[arg(long)]
        nmax: Option<u32>,
    },
    /// List solutions "x y n" with 1 <= x <= xmax.
    Search {
        k: u32,
        l: u32,
        #[arg(long)]
        xmax: u64,
        #[arg(long)]
        nmax: Option<u32>,
    },
    /// Run the invariant suite over a parameter box.
    Verify {
        #[arg(long)]
        kmax: u32,
        #[arg(long)]
        lmax: u32,
        #[arg(long, default_value_t = 50)]
        nmax: u32,
    },
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_internal() {
            Failure::Internal(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

type Params = BTreeMap<String, Value>;

fn params<const N: usize>(pairs: [(&str, Value); N]) -> Params {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Bernoulli { .. } => "bernoulli",
            Command::Poly { .. } => "poly",
            Command::Profile { .. } => "profile",
            Command::Classify { .. } => "classify",
            Command::Search { .. } => "search",
            Command::Verify { .. } => "verify",
        }
    }

    fn parameters(&self) -> Params {
        match *self {
            Command::Bernoulli { i } => params([("i", json!(i))]),
            Command::Poly { k, l, normalization } => params([
                ("k", json!(k)),
                ("l", json!(l)),
                ("normalization", json!(normalization_name(normalization))),
            ]),
            Command::Profile { k, l } => params([("k", json!(k)), ("l", json!(l))]),
            Command::Classify { k, l, n, nmax } => {
                params([("k", json!(k)), ("l", json!(l)), ("n", json!(n)), ("nmax", json!(nmax))])
            }
            Command::Search { k, l, xmax, nmax } => {
                params([("k", json!(k)), ("l", json!(l)), ("xmax", json!(xmax)), ("nmax", json!(nmax))])
            }
            Command::Verify { kmax, lmax, nmax } => {
                params([("kmax", json!(kmax)), ("lmax", json!(lmax)), ("nmax", json!(nmax))])
            }
        }
    }

    /// Records in output order, plus whether a verify check failed.
    fn execute(&self) -> Result<(Vec<Value>, bool), Failure> {
        let one = |v: Value| Ok((vec![v], false));
        match *self {
            Command::Bernoulli { i } => {
                one(json!({ "index": i, "value": bernoulli_number(i).to_string() }))
            }
            Command::Poly { k, l, normalization } => {
                let poly = build(ProblemInstance::new(k, l)?);
                let p = match normalization {
                    Normalization::Scaled => poly.scaled(),
                    Normalization::Sum => poly.sum(),
                };
                let coefficients: Vec<String> = p.coefficients().iter().map(|c| c.to_string()).collect();
                one(json!({ "normalization": normalization_name(normalization), "coefficients": coefficients }))
            }
            Command::Profile { k, l } => one(to_value(&multiplicity_profile(ProblemInstance::new(k, l)?)?)),
            Command::Classify { k, l, n, nmax } => {
                let instance = ProblemInstance::new(k, l)?;
                let reports = match (n, nmax) {
                    (Some(n), _) => vec![classify(instance, n)?],
                    (None, Some(nmax)) => parallel::classify_range(instance, nmax)?,
                    (None, None) => unreachable!("clap requires n or --nmax"),
                };
                Ok((reports.iter().map(to_value).collect(), false))
            }
            Command::Search { k, l, xmax, nmax } => {
                let instance = ProblemInstance::new(k, l)?;
                let found = parallel::find_solutions(instance, xmax, nmax);
                Ok((found.iter().map(to_value).collect(), false))
            }
            Command::Verify { kmax, lmax, nmax } => {
                let outcomes = parallel::verify(&VerifyConfig { k_max: kmax, l_max: lmax, n_max: nmax });
                let passed = outcomes.iter().all(|o| o.passed());
                one(json!({ "checks": to_value(&outcomes), "passed": passed }))
                    .map(|(v, _)| (v, !passed))
            }
        }
    }
}

fn normalization_name(n: Normalization) -> &'static str {
    match n {
        Normalization::Scaled => "paper",
        Normalization::Sum => "sum",
    }
}

/// Runs one invocation, writing results to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
            } else {
                let _ = write!(out, "{rendered}");
            }
            return code;
        }
    };

    let name = cli.command.name();
    let parameters = cli.command.parameters();
    match cli.command.execute() {
        Ok((results, failed_checks)) => {
            for result in results {
                let record = OutputRecord::ok(name, parameters.clone(), result);
                let line = if cli.json { record.to_json_line() } else { render_text(&record) };
                let _ = writeln!(out, "{line}");
            }
            if failed_checks {
                let _ = writeln!(err, "verify: one or more invariant checks failed");
                EXIT_INTERNAL
            } else {
                EXIT_OK
            }
        }
        Err(failure) => {
            let (code, message) = match failure {
                Failure::Usage(m) => (EXIT_USAGE, m),
                Failure::Internal(m) => (EXIT_INTERNAL, m),
            };
            let record = OutputRecord::error(name, parameters, message);
            if cli.json {
                let _ = writeln!(out, "{}", record.to_json_line());
            }
            let _ = writeln!(err, "{}", render_text(&record));
            code
        }
    }
}
