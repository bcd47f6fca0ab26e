//! The `mlpoly` command line.
//!
//! Exit codes: 0 success, 1 usage or validation error, 2 numerical failure
//! (the partial value and error estimate are printed when available).

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::config::SeriesConfig;
use crate::error::{Error, Result};
use crate::fokker_planck::{
    diffusion_profile, laguerre_profile, uniform_grid, DiffusionInitial, DiffusionProblem, LaguerreInitial,
    LaguerreProblem, SolutionProfile,
};
use crate::format::{fmt_g15, round_g15};
use crate::frac_poly::FracPoly;
use crate::fractional_hermite::{fhp_coeffs, fhp_eval};
use crate::mittag_leffler::{ml_three_with, ml_two_with, wright_with, EvalResult};
use crate::ml_polynomials::{mlp_coeffs, mlp_eval};
use crate::verify::{self, Selection, VerifyOptions};

pub const CONFIG_ENV: &str = "MLPOLY_CONFIG";

#[derive(Debug, Parser)]
#[command(
    name = "mlpoly",
    version,
    about = "Mittag-Leffler functions, fractional polynomials and fractional diffusion"
)]
struct Cli {
    /// key = value file with series settings (default: $MLPOLY_CONFIG)
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Overrides `max_terms` from the config file
    #[arg(long, global = true)]
    max_terms: Option<usize>,
    /// Overrides `stop_tol` from the config file
    #[arg(long, global = true)]
    stop_tol: Option<f64>,
    /// Overrides `accuracy_tol` from the config file
    #[arg(long, global = true)]
    accuracy_tol: Option<f64>,
    /// Output format; `text` is the default for verify, `csv` otherwise
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write to this file instead of stdout
    #[arg(long, short, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Mittag-Leffler (one, two or three parameters) or Wright function
    EvalMl(EvalMlArgs),
    /// Fractional Hermite polynomial _αH_n(x, y)
    EvalFhp(EvalFhpArgs),
    /// Mittag-Leffler polynomial E^{-n}_{α,β}(x, y)
    EvalMlp(EvalMlpArgs),
    /// Solve a Cauchy problem onto a grid
    Solve(SolveArgs),
    /// Run identity verification suites
    Verify(VerifyArgs),
    /// Coefficient tables of low-order polynomials
    Table(TableArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MlKind {
    Ml,
    Wright,
}

#[derive(Debug, Args)]
struct EvalMlArgs {
    #[arg(long)]
    alpha: f64,
    #[arg(long, default_value_t = 1.0)]
    beta: f64,
    /// Prabhakar parameter; omit for the two-parameter function
    #[arg(long)]
    gamma: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    z: f64,
    #[arg(long, value_enum, default_value_t = MlKind::Ml)]
    function: MlKind,
}

#[derive(Debug, Args)]
struct EvalFhpArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    alpha: f64,
    #[arg(long, allow_negative_numbers = true)]
    x: f64,
    #[arg(long, allow_negative_numbers = true)]
    y: f64,
}

#[derive(Debug, Args)]
struct EvalMlpArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    alpha: f64,
    #[arg(long, default_value_t = 1.0)]
    beta: f64,
    #[arg(long, allow_negative_numbers = true)]
    x: f64,
    #[arg(long, allow_negative_numbers = true)]
    y: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ProblemKind {
    /// ^C D^α_t F = k ∂²_x F with f(x) = xⁿ
    Monomial,
    /// f(x) = H_n(x, a)
    CaseI,
    /// f(x) = _αH_n(x, a)
    CaseII,
    /// f(x) = Σ c_r x^r
    Series,
    /// Laguerre-type equation with g_n(x) = (−x^α)ⁿ/Γ(1+αn)
    Laguerre,
    /// Laguerre-type equation with W_{α,1}(−y x^α)
    LaguerreWright,
}

#[derive(Debug, Args)]
struct SolveArgs {
    #[arg(long, value_enum)]
    problem: ProblemKind,
    #[arg(long)]
    alpha: f64,
    /// Time t at which the profile is taken
    #[arg(long)]
    t: f64,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, allow_negative_numbers = true)]
    a: Option<f64>,
    /// Diffusivity for the diffusion problems
    #[arg(long)]
    k: Option<f64>,
    /// Time order for the Laguerre problems (1 = ordinary derivative)
    #[arg(long)]
    beta: Option<f64>,
    #[arg(long)]
    b: Option<f64>,
    /// Parameter of the Wright initial datum
    #[arg(long, allow_negative_numbers = true)]
    y: Option<f64>,
    /// Comma-separated series coefficients c_0, c_1, ...
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    coeffs: Option<Vec<f64>>,
    /// Highest series index kept (default: all coefficients)
    #[arg(long)]
    truncation: Option<usize>,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    x_min: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    x_max: f64,
    #[arg(long, default_value_t = 11)]
    points: usize,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// fhp-identities (alias identities), mlp-gf, caputo, pde-residuals, sheffer-ladder or all
    #[arg(long, default_value = "all")]
    suite: String,
    /// Cap on the polynomial order each check sweeps (default: per check)
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long, default_value_t = 42)]
    seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Fhp,
    Mlp,
}

#[derive(Debug, Args)]
struct TableArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long, default_value_t = 4)]
    n_max: usize,
    #[arg(long)]
    alpha: f64,
    #[arg(long, default_value_t = 1.0)]
    beta: f64,
    /// Second variable: y for fHP, y for MLP (coefficients are in x)
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    y: f64,
}

/// Settings file: `key = value` lines, `#` comments.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    max_terms: Option<usize>,
    stop_tol: Option<f64>,
    accuracy_tol: Option<f64>,
}

/// Failure of a CLI invocation, carrying its exit code.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Numerical(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NonConvergence { .. } | Error::IdentityMismatch(_) => Failure::Numerical(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn load_config(cli: &Cli) -> std::result::Result<SeriesConfig, Failure> {
    let path = cli.config.clone().or_else(|| std::env::var_os(CONFIG_ENV).map(PathBuf::from));
    let file = match path {
        Some(p) => read_config(&p)?,
        None => ConfigFile::default(),
    };
    let mut cfg = SeriesConfig::default();
    if let Some(v) = cli.max_terms.or(file.max_terms) {
        cfg.max_terms = v;
    }
    if let Some(v) = cli.stop_tol.or(file.stop_tol) {
        cfg.stop_tol = v;
    }
    if let Some(v) = cli.accuracy_tol.or(file.accuracy_tol) {
        cfg.accuracy_tol = v;
    }
    if cfg.max_terms == 0 || !(cfg.stop_tol > 0.0) || !(cfg.accuracy_tol > 0.0) {
        return Err(Failure::Usage("--max-terms, --stop-tol and --accuracy-tol must be positive".into()));
    }
    Ok(cfg)
}

fn read_config(path: &Path) -> std::result::Result<ConfigFile, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("--config: cannot read {}: {e}", path.display())))?;
    toml::from_str(&text).map_err(|e| Failure::Usage(format!("--config: {}: {e}", path.display())))
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let rendered = e.render().to_string();
            let _ =
                if code == 0 { stdout.write_all(rendered.as_bytes()) } else { stderr.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match execute(&cli) {
        Ok(Outcome { body, code }) => match emit(&cli, &body, stdout) {
            Ok(()) => code,
            Err(msg) => {
                let _ = writeln!(stderr, "error: {msg}");
                1
            }
        },
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            1
        }
        Err(Failure::Numerical(msg)) => {
            let _ = writeln!(stderr, "numerical failure: {msg}");
            2
        }
    }
}

fn emit(cli: &Cli, body: &str, stdout: &mut dyn Write) -> std::result::Result<(), String> {
    match &cli.output {
        Some(path) => std::fs::write(path, body).map_err(|e| format!("--output: cannot write {}: {e}", path.display())),
        None => stdout.write_all(body.as_bytes()).map_err(|e| e.to_string()),
    }
}

struct Outcome {
    body: String,
    code: i32,
}

impl Outcome {
    fn ok(body: String) -> Self {
        Outcome { body, code: 0 }
    }
}

fn execute(cli: &Cli) -> std::result::Result<Outcome, Failure> {
    let cfg = load_config(cli)?;
    let format = cli.format;
    match &cli.command {
        Command::EvalMl(a) => eval_ml(a, &cfg, format.unwrap_or(Format::Csv)),
        Command::EvalFhp(a) => {
            let v = fhp_eval(a.n, a.alpha, a.x, a.y)?;
            let params = json!({ "n": a.n, "alpha": a.alpha, "x": a.x, "y": a.y });
            scalar("eval-fhp", params, v, format.unwrap_or(Format::Csv))
        }
        Command::EvalMlp(a) => {
            let v = mlp_eval(a.n, a.alpha, a.beta, a.x, a.y)?;
            let params = json!({ "n": a.n, "alpha": a.alpha, "beta": a.beta, "x": a.x, "y": a.y });
            scalar("eval-mlp", params, v, format.unwrap_or(Format::Csv))
        }
        Command::Solve(a) => solve(a, format.unwrap_or(Format::Csv)),
        Command::Verify(a) => run_verify(a, format.unwrap_or(Format::Text)),
        Command::Table(a) => table(a, format.unwrap_or(Format::Csv)),
    }
}

fn json_body(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json output");
    s.push('\n');
    s
}

fn scalar(command: &str, params: Value, v: f64, format: Format) -> std::result::Result<Outcome, Failure> {
    Ok(Outcome::ok(match format {
        Format::Csv => format!("value\n{}\n", fmt_g15(v)),
        Format::Text => format!("{}\n", fmt_g15(v)),
        Format::Json => json_body(&json!({
            "meta": { "command": command, "params": params },
            "data": { "value": round_g15(v) },
        })),
    }))
}

fn eval_ml(a: &EvalMlArgs, cfg: &SeriesConfig, format: Format) -> std::result::Result<Outcome, Failure> {
    let result = match (a.function, a.gamma) {
        (MlKind::Wright, Some(_)) => {
            return Err(Failure::Usage("--gamma only applies to --function ml".into()));
        }
        (MlKind::Wright, None) => wright_with(cfg, a.alpha, a.beta, a.z),
        (MlKind::Ml, Some(g)) => ml_three_with(cfg, a.alpha, a.beta, g, a.z),
        (MlKind::Ml, None) => ml_two_with(cfg, a.alpha, a.beta, a.z),
    };
    let (r, code) = match result {
        Ok(r) => (r, 0),
        Err(Error::NonConvergence { value, abs_error_estimate, terms_used }) => {
            (EvalResult { value, abs_error_estimate, terms_used }, 2)
        }
        Err(e) => return Err(e.into()),
    };
    let body = match format {
        Format::Csv => format!(
            "value,abs_error_estimate,terms_used\n{},{},{}\n",
            fmt_g15(r.value),
            fmt_g15(r.abs_error_estimate),
            r.terms_used
        ),
        Format::Text => format!(
            "value {}\nabs_error_estimate {}\nterms_used {}\n",
            fmt_g15(r.value),
            fmt_g15(r.abs_error_estimate),
            r.terms_used
        ),
        Format::Json => json_body(&json!({
            "meta": {
                "command": "eval-ml",
                "params": { "alpha": a.alpha, "beta": a.beta, "gamma": a.gamma, "z": a.z,
                            "function": if a.function == MlKind::Ml { "ml" } else { "wright" } },
                "converged": code == 0,
            },
            "data": {
                "value": round_g15(r.value),
                "abs_error_estimate": round_g15(r.abs_error_estimate),
                "terms_used": r.terms_used,
            },
        })),
    };
    Ok(Outcome { body, code })
}

fn require<T: Copy>(v: Option<T>, flag: &str, problem: &str) -> std::result::Result<T, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("--{flag} is required for --problem {problem}")))
}

fn solve(a: &SolveArgs, format: Format) -> std::result::Result<Outcome, Failure> {
    let grid = uniform_grid(a.x_min, a.x_max, a.points)?;
    let name = a.problem.to_possible_value().expect("named variant").get_name().to_string();
    let profile: SolutionProfile = match a.problem {
        ProblemKind::Monomial | ProblemKind::CaseI | ProblemKind::CaseII | ProblemKind::Series => {
            let k = require(a.k, "k", &name)?;
            let mut truncation = 0;
            let initial = match a.problem {
                ProblemKind::Monomial => DiffusionInitial::Monomial { n: require(a.n, "n", &name)? },
                ProblemKind::CaseI => {
                    DiffusionInitial::Hermite { n: require(a.n, "n", &name)?, a: require(a.a, "a", &name)? }
                }
                ProblemKind::CaseII => {
                    DiffusionInitial::Fhp { n: require(a.n, "n", &name)?, a: require(a.a, "a", &name)? }
                }
                _ => {
                    let coeffs = a
                        .coeffs
                        .clone()
                        .filter(|c| !c.is_empty())
                        .ok_or_else(|| Failure::Usage(format!("--coeffs is required for --problem {name}")))?;
                    truncation = a.truncation.unwrap_or(coeffs.len() - 1);
                    DiffusionInitial::Series { coeffs }
                }
            };
            let prob = DiffusionProblem::new(a.alpha, k, initial)?;
            diffusion_profile(&prob, grid, a.t, truncation)?
        }
        ProblemKind::Laguerre | ProblemKind::LaguerreWright => {
            let initial = if a.problem == ProblemKind::Laguerre {
                LaguerreInitial::Monomial { n: require(a.n, "n", &name)? }
            } else {
                LaguerreInitial::Wright { y: require(a.y, "y", &name)? }
            };
            let prob = LaguerreProblem::new(a.alpha, a.beta.unwrap_or(1.0), require(a.b, "b", &name)?, initial)?;
            laguerre_profile(&prob, grid, a.t)?
        }
    };
    Ok(Outcome::ok(match format {
        Format::Csv | Format::Text => profile.to_csv(),
        Format::Json => json_body(&profile.to_json()),
    }))
}

fn run_verify(a: &VerifyArgs, format: Format) -> std::result::Result<Outcome, Failure> {
    let selection: Selection = a.suite.parse().map_err(|e: Error| Failure::Usage(format!("--suite: {e}")))?;
    let report = verify::run(selection, VerifyOptions { seed: a.seed, n_max: a.n_max });
    let body = match format {
        Format::Text => report.to_text(),
        Format::Json => json_body(&report.to_json()),
        Format::Csv => {
            let mut out = String::from("suite,check,status,cases,max_err,tol\n");
            for c in &report.checks {
                let status = if c.passed() { "pass" } else { "fail" };
                out.push_str(&format!(
                    "{},{},{status},{},{},{}\n",
                    c.suite.name(),
                    c.name,
                    c.cases,
                    fmt_g15(c.max_err),
                    fmt_g15(c.tol)
                ));
            }
            out
        }
    };
    Ok(Outcome { body, code: if report.all_passed() { 0 } else { 2 } })
}

fn table(a: &TableArgs, format: Format) -> std::result::Result<Outcome, Failure> {
    let polys: Vec<FracPoly> = (0..=a.n_max)
        .map(|n| match a.family {
            Family::Fhp => fhp_coeffs(n, a.alpha, a.y),
            Family::Mlp => mlp_coeffs(n, a.alpha, a.beta, a.y),
        })
        .collect::<Result<_>>()?;
    Ok(Outcome::ok(match format {
        Format::Csv | Format::Text => {
            let mut out = String::from("n,exponent,coefficient\n");
            for (n, p) in polys.iter().enumerate() {
                for t in p.terms().iter().rev() {
                    out.push_str(&format!("{n},{},{}\n", fmt_g15(t.exponent), fmt_g15(t.coeff)));
                }
            }
            out
        }
        Format::Json => {
            let mut params = BTreeMap::new();
            params.insert("alpha", json!(a.alpha));
            params.insert("y", json!(a.y));
            if a.family == Family::Mlp {
                params.insert("beta", json!(a.beta));
            }
            let family = if a.family == Family::Fhp { "fhp" } else { "mlp" };
            let data: Vec<Value> = polys
                .iter()
                .enumerate()
                .map(|(n, p)| {
                    let terms: Vec<Value> = p
                        .terms()
                        .iter()
                        .map(|t| json!({ "c": round_g15(t.coeff), "mu": round_g15(t.exponent) }))
                        .collect();
                    json!({ "n": n, "poly": terms })
                })
                .collect();
            json_body(&json!({ "meta": { "command": "table", "family": family, "params": params }, "data": data }))
        }
    }))
}
