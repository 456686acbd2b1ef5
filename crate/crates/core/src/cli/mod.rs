//! The `ftl` command line: `tau`, `fpt`, `jumps` and `verify`.
//!
//! [`run`] does all the work and returns what would be printed, so the
//! binary is a thin wrapper and reports can be compared in tests.

pub mod report;
pub mod source;
pub mod suites;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::family::{
    fpt_power, fpt_sum, jumping_numbers_power, jumping_numbers_sum, normalize_description, tau_power, tau_sum,
    ContainmentOracle, Level, PrimeFamily, SigmaSet, TestIdealDescription,
};
use crate::geometry::rational::{format_rational, parse_rational, Extended, Rational};
pub use report::Report;

#[derive(Debug, Parser)]
#[command(name = "ftl", version, about = "Test ideals, F-pure thresholds and F-jumping numbers of prime families")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LevelArg {
    Representation,
    OraclePruned,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Test ideal τ(λ·I) from the closed formula.
    Tau {
        #[command(flatten)]
        target: Target,
        /// Coefficient λ, written a/b.
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, value_enum, default_value_t = LevelArg::Representation)]
        level: LevelArg,
    },
    /// F-pure threshold.
    Fpt {
        #[command(flatten)]
        target: Target,
    },
    /// F-jumping numbers in (0, limit].
    Jumps {
        #[command(flatten)]
        target: Target,
        #[arg(long, allow_hyphen_values = true)]
        limit: String,
        #[arg(long, value_enum, default_value_t = LevelArg::Representation)]
        level: LevelArg,
    },
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("exponents").required(true).args(["sigma", "sigma_set"])))]
struct Target {
    /// monomial:n, generic:mxn, symmetric:m, pfaffian:m, or a family JSON file.
    #[arg(long)]
    family: String,
    /// Exponent vector σ of the product I^σ, e.g. 1,1.
    #[arg(long)]
    sigma: Option<String>,
    /// Exponent vectors of the sum I(Σ), e.g. "2,0;0,2".
    #[arg(long = "Sigma")]
    sigma_set: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    MonomialOracle,
    Aplus,
    Delta,
    CfClosure,
    GammaLinearity,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    suite: Suite,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Number of random cases (suite default if omitted).
    #[arg(long)]
    count: Option<u64>,
    /// Primes for the Frobenius oracle.
    #[arg(long, default_value = "2,3,5")]
    p_list: String,
    /// Largest Frobenius exponent e; q_max usually binds first.
    #[arg(long, default_value_t = 9)]
    e_max: u32,
    /// Frobenius levels with p^e above this are skipped.
    #[arg(long, default_value_t = 1000)]
    q_max: u64,
    /// Trailing chain members that must agree to call τ stabilized.
    #[arg(long, default_value_t = 2)]
    window: u32,
    /// Largest matrix size for the delta suite.
    #[arg(long, default_value_t = 6)]
    max: usize,
    /// Number of variables for the cf-closure suite.
    #[arg(long, default_value_t = 3)]
    n: usize,
    /// Generic preset for the gamma-linearity suite.
    #[arg(long, default_value = "generic:3x4")]
    family: String,
}

/// What the binary prints and returns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Exit code for a library error: 3 for cost limits, 1 for internal
/// failures, 2 for everything the caller can fix.
pub fn exit_code(error: &Error) -> i32 {
    match error {
        Error::CostLimit(_) => 3,
        Error::Internal(_) => 1,
        _ => 2,
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { stdout: text, stderr: String::new(), code }
            } else {
                Outcome { stdout: String::new(), stderr: text, code }
            };
        }
    };
    match execute(&cli.command) {
        Ok(report) => Outcome {
            stdout: match cli.format {
                Format::Json => report.to_json(),
                Format::Text => report.to_text(),
            },
            stderr: String::new(),
            code: report.exit_code,
        },
        Err(e) => Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code: exit_code(&e) },
    }
}

fn execute(command: &Command) -> Result<Report> {
    match command {
        Command::Tau { target, lambda, level } => cmd_tau(target, lambda, *level),
        Command::Fpt { target } => cmd_fpt(target),
        Command::Jumps { target, limit, level } => cmd_jumps(target, limit, *level),
        Command::Verify(args) => cmd_verify(args),
    }
}

enum Exponents {
    Power(Vec<u32>),
    Sum(SigmaSet),
}

struct Resolved {
    family: PrimeFamily,
    exponents: Exponents,
    inputs: serde_json::Map<String, Value>,
    warnings: Vec<String>,
}

fn resolve(target: &Target) -> Result<Resolved> {
    let family = source::load_family(&target.family)?;
    let mut inputs = serde_json::Map::new();
    inputs.insert("family".into(), json!(family.name()));
    let exponents = match (&target.sigma, &target.sigma_set) {
        (Some(text), _) => {
            let sigma = source::parse_vector(text)?;
            inputs.insert("sigma".into(), json!(sigma));
            Exponents::Power(sigma)
        }
        (None, Some(text)) => {
            let sigmas = source::parse_sigma_set(text)?;
            inputs.insert("Sigma".into(), json!(sigmas.iter().collect::<Vec<_>>()));
            Exponents::Sum(sigmas)
        }
        (None, None) => return Err(Error::Parse("one of --sigma or --Sigma is required".into())),
    };
    let dim = match &exponents {
        Exponents::Power(sigma) => sigma.len(),
        Exponents::Sum(sigmas) => sigmas.dim(),
    };
    if dim != family.m() {
        return Err(Error::DimensionMismatch { expected: family.m(), found: dim });
    }
    let warnings = family.flag_warnings();
    Ok(Resolved { family, exponents, inputs, warnings })
}

fn level_of(arg: LevelArg, family: &PrimeFamily, warnings: &mut Vec<String>) -> Level {
    match arg {
        LevelArg::OraclePruned if family.containment_oracle().is_some() => Level::OraclePruned,
        LevelArg::OraclePruned => {
            warnings.push(format!("family {} has no containment oracle; reporting representation level", family.name()));
            Level::Representation
        }
        LevelArg::Representation => {
            if family.containment_oracle() != Some(ContainmentOracle::Monomial) {
                warnings.push("representation level: distinct antichains may describe equal ideals".into());
            }
            Level::Representation
        }
    }
}

fn level_name(level: Level) -> &'static str {
    match level {
        Level::Representation => "representation",
        Level::OraclePruned => "oracle_pruned",
    }
}

fn describe(description: &TestIdealDescription) -> Value {
    json!({
        "antichain": description.vectors(),
        "ideal": description.to_string(),
        "unit": description.is_unit(),
    })
}

fn extended(value: &Extended) -> String {
    match value {
        Extended::Finite(r) => format_rational(r),
        Extended::Infinite => "inf".into(),
    }
}

fn cmd_tau(target: &Target, lambda_text: &str, level_arg: LevelArg) -> Result<Report> {
    let Resolved { family, exponents, mut inputs, mut warnings } = resolve(target)?;
    let lambda = parse_rational(lambda_text)?;
    inputs.insert("lambda".into(), json!(format_rational(&lambda)));
    let level = level_of(level_arg, &family, &mut warnings);
    inputs.insert("level".into(), json!(level_name(level)));
    let prune = level == Level::OraclePruned;
    let description = match &exponents {
        Exponents::Power(sigma) => normalize_description(&[tau_power(&family, sigma, &lambda)?.0], &family, prune),
        Exponents::Sum(sigmas) => {
            let raw = tau_sum(&family, sigmas, &lambda)?;
            normalize_description(&raw.vectors(), &family, prune)
        }
    };
    let mut results = describe(&description);
    results["level"] = json!(level_name(description.level));
    let mut report = Report::new("tau", Value::Object(inputs));
    report.results = results;
    report.warnings = warnings;
    Ok(report)
}

fn cmd_fpt(target: &Target) -> Result<Report> {
    let Resolved { family, exponents, inputs, warnings } = resolve(target)?;
    let fpt = match &exponents {
        Exponents::Power(sigma) => fpt_power(&family, sigma)?,
        Exponents::Sum(sigmas) => fpt_sum(&family, sigmas)?,
    };
    let mut report = Report::new("fpt", Value::Object(inputs));
    report.results = json!({ "fpt": extended(&fpt) });
    report.warnings = warnings;
    Ok(report)
}

fn interval_rows(jumps: &[(Rational, String)], limit: &Rational, unit: &str) -> Vec<Value> {
    let mut rows = Vec::new();
    let mut start = Rational::from_integer(0.into());
    let mut ideal = unit.to_string();
    for (lambda, next) in jumps {
        if lambda > &start {
            rows.push(json!({
                "interval": format!("[{}, {})", format_rational(&start), format_rational(lambda)),
                "ideal": ideal,
            }));
        }
        start = lambda.clone();
        ideal = next.clone();
    }
    rows.push(json!({
        "interval": format!("[{}, {}]", format_rational(&start), format_rational(limit)),
        "ideal": ideal,
    }));
    rows
}

fn cmd_jumps(target: &Target, limit_text: &str, level_arg: LevelArg) -> Result<Report> {
    let Resolved { family, exponents, mut inputs, mut warnings } = resolve(target)?;
    let limit = parse_rational(limit_text)?;
    inputs.insert("limit".into(), json!(format_rational(&limit)));
    let level = level_of(level_arg, &family, &mut warnings);
    inputs.insert("level".into(), json!(level_name(level)));
    let jumps: Vec<(Rational, TestIdealDescription)> = match &exponents {
        Exponents::Power(sigma) => jumping_numbers_power(&family, sigma, &limit, level)?
            .into_iter()
            .map(|(l, w)| (l, normalize_description(&[w.0], &family, level == Level::OraclePruned)))
            .collect(),
        Exponents::Sum(sigmas) => jumping_numbers_sum(&family, sigmas, &limit, level)?,
    };
    let rows: Vec<Value> = jumps
        .iter()
        .map(|(lambda, d)| {
            json!({
                "lambda": format_rational(lambda),
                "antichain": d.vectors(),
                "ideal": d.to_string(),
            })
        })
        .collect();
    let named: Vec<(Rational, String)> = jumps.iter().map(|(l, d)| (l.clone(), d.to_string())).collect();
    let unit = TestIdealDescription::unit(&family).to_string();
    let mut report = Report::new("jumps", Value::Object(inputs));
    report.results = json!({
        "jumping_numbers": jumps.iter().map(|(l, _)| format_rational(l)).collect::<Vec<_>>(),
        "jumps": rows,
        "intervals": interval_rows(&named, &limit, &unit),
    });
    report.warnings = warnings;
    Ok(report)
}

fn generic_dims(family: &str) -> Result<(usize, usize)> {
    let parse = |s: &str| s.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad generic preset {family:?}")));
    let dims = family
        .strip_prefix("generic:")
        .and_then(|d| d.split_once('x'))
        .ok_or_else(|| Error::Parse(format!("gamma-linearity needs a generic:mxn family, got {family:?}")))?;
    Ok((parse(dims.0)?, parse(dims.1)?))
}

fn cmd_verify(args: &VerifyArgs) -> Result<Report> {
    let (name, inputs, outcome) = match args.suite {
        Suite::MonomialOracle => {
            let opts = suites::OracleOptions {
                seed: args.seed,
                count: args.count.unwrap_or(200),
                p_list: source::parse_list(&args.p_list)?,
                e_max: args.e_max,
                q_max: args.q_max,
                window: args.window,
                ..suites::OracleOptions::default()
            };
            let inputs = json!({
                "seed": opts.seed,
                "count": opts.count,
                "p_list": opts.p_list,
                "e_max": opts.e_max,
                "q_max": opts.q_max,
                "window": opts.window,
            });
            ("monomial-oracle", inputs, suites::monomial_oracle(&opts)?)
        }
        Suite::Aplus => {
            let count = args.count.unwrap_or(100);
            ("aplus", json!({ "seed": args.seed, "count": count }), suites::aplus(args.seed, count)?)
        }
        Suite::Delta => ("delta", json!({ "max": args.max }), suites::delta(args.max)?),
        Suite::CfClosure => ("cf-closure", json!({ "n": args.n }), suites::cf_closure(args.n)?),
        Suite::GammaLinearity => {
            let count = args.count.unwrap_or(100);
            let (m, n) = generic_dims(&args.family)?;
            let inputs = json!({ "seed": args.seed, "count": count, "family": args.family });
            ("gamma-linearity", inputs, suites::gamma_linearity(args.seed, count, m, n)?)
        }
    };
    let mut report = Report::new(&format!("verify {name}"), inputs);
    report.exit_code = if outcome.passed() { 0 } else { 1 };
    report.results = outcome.to_value();
    Ok(report)
}
