//! Executable identity checks, grouped into suites.
//!
//! Every check is deterministic for a given seed: each one draws from its
//! own ChaCha stream, so adding or reordering checks never changes the
//! draws of another.

use std::fmt::Write as _;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::caputo::{caputo_l1, caputo_monomial, caputo_poly, rl_from_caputo};
use crate::error::{domain, Error, Result};
use crate::fokker_planck::{
    laguerre_monomial_terms, laguerre_subordinated_terms, residual_laguerre, residual_tf_diffusion, solve_case_i,
    solve_case_ii, solve_laguerre_monomial, solve_laguerre_wright,
};
use crate::format::fmt_g15;
use crate::frac_poly::{BiPoly, FracPoly, Term};
use crate::fractional_hermite::{
    convolution_identity_i_rhs, convolution_identity_ii_rhs, fhp_bipoly, fhp_coeffs, fhp_eval, fhp_oplus_eval,
    umbral_hermite_shift,
};
use crate::gamma::{factorial, gamma};
use crate::mittag_leffler::{ml_one, ml_one_poly, prabhakar_coeff, wright};
use crate::ml_polynomials::{
    konhauser, mlp_coeffs, mlp_coeffs_y, mlp_egf_closed, mlp_eval, mlp_ogf_closed, mlp_one_var_reduction,
    mlp_operational_check,
};
use crate::sheffer::{
    appell_a_fhp, appell_a_mlp, aux_v_h_fhp, aux_v_h_mlp, basis, ladder_series, lowering_apply, raising_apply,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    FhpIdentities,
    MlpGf,
    Caputo,
    PdeResiduals,
    ShefferLadder,
}

impl Suite {
    pub const ALL: [Suite; 5] =
        [Suite::FhpIdentities, Suite::MlpGf, Suite::Caputo, Suite::PdeResiduals, Suite::ShefferLadder];

    pub fn name(self) -> &'static str {
        match self {
            Suite::FhpIdentities => "fhp-identities",
            Suite::MlpGf => "mlp-gf",
            Suite::Caputo => "caputo",
            Suite::PdeResiduals => "pde-residuals",
            Suite::ShefferLadder => "sheffer-ladder",
        }
    }
}

/// A suite name, or `all`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Selection {
    One(Suite),
    All,
}

impl Selection {
    pub fn suites(self) -> Vec<Suite> {
        match self {
            Selection::One(s) => vec![s],
            Selection::All => Suite::ALL.to_vec(),
        }
    }
}

impl FromStr for Selection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "all" {
            return Ok(Selection::All);
        }
        if s == "identities" {
            return Ok(Selection::One(Suite::FhpIdentities));
        }
        Suite::ALL.iter().find(|suite| suite.name() == s).map(|&suite| Selection::One(suite)).ok_or_else(|| {
            let names: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
            domain(format!("unknown suite '{s}'; expected one of {}, identities, all", names.join(", ")))
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyOptions {
    pub seed: u64,
    /// Caps the polynomial degree of every check; `None` keeps each check's default.
    pub n_max: Option<usize>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { seed: 42, n_max: None }
    }
}

/// Outcome of one named check.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub suite: Suite,
    pub name: &'static str,
    pub cases: usize,
    pub max_err: f64,
    pub tol: f64,
    pub failure: Option<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failure.is_none() && self.max_err <= self.tol
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub options: VerifyOptions,
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.passed()).count()
    }

    pub fn failed(&self) -> usize {
        self.checks.len() - self.passed()
    }

    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let n_max = self.options.n_max.map_or("default".to_string(), |n| n.to_string());
        writeln!(out, "verify seed={} n_max={n_max}", self.options.seed).unwrap();
        for c in &self.checks {
            let status = if c.passed() { "PASS" } else { "FAIL" };
            write!(
                out,
                "{status} {}/{} cases={} max_err={} tol={}",
                c.suite.name(),
                c.name,
                c.cases,
                fmt_g15(c.max_err),
                fmt_g15(c.tol)
            )
            .unwrap();
            if let Some(f) = &c.failure {
                write!(out, " error=\"{f}\"").unwrap();
            }
            out.push('\n');
        }
        writeln!(out, "summary: {} passed, {} failed", self.passed(), self.failed()).unwrap();
        out
    }

    pub fn to_json(&self) -> Value {
        let data: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                json!({
                    "suite": c.suite.name(),
                    "check": c.name,
                    "passed": c.passed(),
                    "cases": c.cases,
                    "max_err": crate::format::round_g15(c.max_err),
                    "tol": c.tol,
                    "error": c.failure,
                })
            })
            .collect();
        json!({
            "meta": {
                "seed": self.options.seed,
                "n_max": self.options.n_max,
                "passed": self.passed(),
                "failed": self.failed(),
            },
            "data": data,
        })
    }
}

/// Runs the selected suites in a fixed order.
pub fn run(selection: Selection, options: VerifyOptions) -> Report {
    let mut checks = Vec::new();
    for suite in selection.suites() {
        let mut ctx = Ctx { suite, options, stream: 0, out: &mut checks };
        match suite {
            Suite::FhpIdentities => fhp_identities(&mut ctx),
            Suite::MlpGf => mlp_gf(&mut ctx),
            Suite::Caputo => caputo_suite(&mut ctx),
            Suite::PdeResiduals => pde_residuals(&mut ctx),
            Suite::ShefferLadder => sheffer_ladder(&mut ctx),
        }
    }
    Report { options, checks }
}

/// Accumulates the error of one check.
struct Tally {
    cases: usize,
    max_err: f64,
}

impl Tally {
    fn new() -> Self {
        Tally { cases: 0, max_err: 0.0 }
    }

    fn record(&mut self, err: f64) {
        self.cases += 1;
        // NaN must fail the check
        self.max_err = if err.is_nan() { f64::INFINITY } else { self.max_err.max(err) };
    }

    /// |got − want| relative to max(|want|, floor).
    fn rel(&mut self, got: f64, want: f64, floor: f64) {
        self.record((got - want).abs() / want.abs().max(floor));
    }

    fn abs(&mut self, got: f64, want: f64) {
        self.record((got - want).abs());
    }
}

struct Ctx<'a> {
    suite: Suite,
    options: VerifyOptions,
    stream: u64,
    out: &'a mut Vec<CheckResult>,
}

impl Ctx<'_> {
    fn n(&self, default: usize) -> usize {
        self.options.n_max.unwrap_or(default)
    }

    fn check<F>(&mut self, name: &'static str, tol: f64, f: F)
    where
        F: FnOnce(&mut ChaCha8Rng, &mut Tally) -> Result<()>,
    {
        let mut rng = ChaCha8Rng::seed_from_u64(self.options.seed);
        rng.set_stream(self.stream);
        self.stream += 1;
        let mut tally = Tally::new();
        let failure = f(&mut rng, &mut tally).err().map(|e| e.to_string());
        self.out.push(CheckResult {
            suite: self.suite,
            name,
            cases: tally.cases,
            max_err: tally.max_err,
            tol,
            failure,
        });
    }
}

fn classical_hermite(n: usize, x: f64, y: f64) -> f64 {
    (0..=n / 2)
        .map(|r| factorial(n) * x.powi((n - 2 * r) as i32) * y.powi(r as i32) / (factorial(n - 2 * r) * factorial(r)))
        .sum()
}

fn laguerre(n: usize, x: f64) -> f64 {
    let (mut prev, mut cur) = (1.0, 1.0 - x);
    if n == 0 {
        return prev;
    }
    for k in 1..n {
        let k = k as f64;
        let next = ((2.0 * k + 1.0 - x) * cur - k * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// Relative coefficient-wise difference of two polynomials.
fn poly_err(got: &FracPoly, want: &FracPoly) -> f64 {
    got.max_abs_diff(want) / want.max_abs_coeff().max(1.0)
}

fn bipoly_err(got: &BiPoly, want: &BiPoly) -> f64 {
    got.max_abs_diff(want) / want.max_abs_coeff().max(1.0)
}

fn fhp_identities(ctx: &mut Ctx) {
    ctx.check("low-order-forms", 1e-12, |_, t| {
        for alpha in [0.25, 0.5, 0.75, 1.0] {
            for y in [-0.8, 0.7, 1.5] {
                let g = gamma(1.0 + alpha);
                let forms = [
                    FracPoly::constant(1.0),
                    FracPoly::monomial(1.0, 1.0),
                    FracPoly::from_terms([Term::new(1.0, 2.0), Term::new(2.0 * y / g, 0.0)]),
                    FracPoly::from_terms([Term::new(1.0, 3.0), Term::new(6.0 * y / g, 1.0)]),
                ];
                for (n, want) in forms.iter().enumerate() {
                    t.record(fhp_coeffs(n, alpha, y)?.max_abs_diff(want));
                }
            }
        }
        Ok(())
    });
    let n_classical = ctx.n(15);
    ctx.check("classical-reduction", 1e-10, |rng, t| {
        for n in 0..=n_classical {
            for _ in 0..5 {
                let (x, y) = (rng.gen_range(-1.5..1.5), rng.gen_range(-1.5..1.5));
                t.rel(fhp_eval(n, 1.0, x, y)?, classical_hermite(n, x, y), 1.0);
            }
        }
        Ok(())
    });
    ctx.check("egf", 1e-10, |rng, t| {
        for i in 0..100 {
            let alpha = [0.4, 0.6, 0.9][i % 3];
            let x: f64 = rng.gen_range(-1.0..1.0);
            let y: f64 = rng.gen_range(-1.0..1.0);
            let lambda: f64 = rng.gen_range(-0.4..0.4);
            let mut sum = 0.0;
            for n in 0..=30 {
                sum += lambda.powi(n) / factorial(n as usize) * fhp_eval(n as usize, alpha, x, y)?;
            }
            t.abs(sum, (x * lambda).exp() * ml_one(alpha, y * lambda * lambda)?.value);
        }
        Ok(())
    });
    let n_id = ctx.n(12);
    ctx.check("umbral-shift-identity", 1e-9, |rng, t| {
        for _ in 0..50 {
            let (x, a, w) = (rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            let alpha = rng.gen_range(0.1..0.95);
            for n in 0..=n_id {
                let lhs = umbral_hermite_shift(n, x, a, w, alpha)?;
                t.rel(lhs, convolution_identity_i_rhs(n, x, a, w, alpha)?, 1e-3);
            }
        }
        Ok(())
    });
    ctx.check("oplus-identity", 1e-9, |rng, t| {
        for _ in 0..50 {
            let (x, a, w) = (rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            let alpha = rng.gen_range(0.1..1.0);
            for n in 0..=n_id {
                let lhs = fhp_oplus_eval(n, x, w, a, alpha)?;
                t.rel(lhs, convolution_identity_ii_rhs(n, x, a, w, alpha)?, 1e-3);
            }
        }
        Ok(())
    });
    let n_shift = ctx.n(15);
    ctx.check("forward-shift-x", 1e-14, |_, t| {
        for alpha in [0.3, 0.5, 1.0] {
            for n in 1..=n_shift {
                let d = lowering_apply(&fhp_coeffs(n, alpha, 0.9)?)?;
                t.record(poly_err(&d, &fhp_coeffs(n - 1, alpha, 0.9)?.scale(n as f64)));
            }
        }
        Ok(())
    });
}

fn mlp_gf(ctx: &mut Ctx) {
    ctx.check("ogf", 1e-9, |rng, t| {
        for _ in 0..30 {
            let (alpha, beta) = (rng.gen_range(0.2..1.5), rng.gen_range(0.5..2.5));
            let (x, y): (f64, f64) = (rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            let lambda = rng.gen_range(-0.5..0.5) / y.abs().max(1.0);
            let mut sum = 0.0;
            for n in 0..=40 {
                sum += lambda.powi(n) * mlp_eval(n as usize, alpha, beta, x, y)?;
            }
            t.abs(sum, mlp_ogf_closed(lambda, alpha, beta, x, y)?);
        }
        Ok(())
    });
    ctx.check("egf", 1e-9, |rng, t| {
        for _ in 0..30 {
            let (alpha, beta) = (rng.gen_range(0.2..1.5), rng.gen_range(0.5..2.5));
            let (x, y) = (rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            let lambda: f64 = rng.gen_range(-0.5..0.5);
            let mut sum = 0.0;
            for n in 0..=30 {
                sum += lambda.powi(n) / factorial(n as usize) * mlp_eval(n as usize, alpha, beta, x, y)?;
            }
            t.abs(sum, mlp_egf_closed(lambda, alpha, beta, x, y)?);
        }
        Ok(())
    });
    let n_red = ctx.n(10);
    ctx.check("one-variable-reduction", 1e-12, |rng, t| {
        for _ in 0..30 {
            let (alpha, beta) = (rng.gen_range(0.2..1.5), rng.gen_range(0.5..2.5));
            let x: f64 = rng.gen_range(-1.0..1.0);
            let y: f64 = rng.gen_range(0.2..1.5) * if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
            for n in 0..=n_red {
                let scale: f64 = (0..=n)
                    .map(|r| crate::gamma::binomial(n, r) * x.abs().powi(r as i32) * y.abs().powi((n - r) as i32))
                    .sum();
                let got = mlp_one_var_reduction(n, alpha, beta, x, y)?;
                t.record((got - mlp_eval(n, alpha, beta, x, y)?).abs() / scale.max(1e-300));
            }
        }
        Ok(())
    });
    ctx.check("konhauser-laguerre", 1e-10, |_, t| {
        for n in 0..=n_red {
            for x in [0.0, 0.3, 1.0, 2.5, 6.0] {
                t.rel(konhauser(n, 1.0, 1.0, x, 1.0)?, laguerre(n, x), 1.0);
            }
        }
        Ok(())
    });
    let n_op = ctx.n(8);
    ctx.check("operational-form", 1e-10, |_, t| {
        let grid: Vec<f64> = (0..=20).map(|i| i as f64 * 0.1).collect();
        for alpha in [0.3, 0.5, 0.9] {
            for y in [0.5, 1.0, 2.0] {
                for n in 0..=n_op {
                    let (lhs, rhs) = mlp_operational_check(n, alpha, y, n, &grid)?;
                    let scale = lhs.iter().fold(1.0f64, |m, v| m.max(v.abs()));
                    for (l, r) in lhs.iter().zip(&rhs) {
                        t.record((l - r).abs() / scale);
                    }
                }
            }
        }
        Ok(())
    });
    let n_pr = ctx.n(6);
    ctx.check("prabhakar-coefficients", 1e-14, |_, t| {
        for n in 0..=n_pr {
            for (alpha, beta) in [(0.5, 1.0), (0.8, 1.6), (1.5, 0.7)] {
                let p = mlp_coeffs(n, alpha, beta, 1.0)?;
                for r in 0..=n {
                    t.rel(p.coeff(r as f64), prabhakar_coeff(alpha, beta, -(n as f64), r), 1e-300);
                }
            }
        }
        Ok(())
    });
}

fn caputo_suite(ctx: &mut Ctx) {
    ctx.check("eigenfunction", 1e-13, |_, t| {
        for a in [-1.0, 0.5, 2.0] {
            for alpha in [0.3, 0.5, 0.8] {
                let lhs = caputo_poly(&ml_one_poly(alpha, a, 25), alpha)?;
                let rhs = ml_one_poly(alpha, a, 24).scale(a);
                if lhs.len() != rhs.len() {
                    return Err(Error::IdentityMismatch("truncation lengths differ".into()));
                }
                t.record(lhs.max_rel_diff(&rhs, 1e-300));
            }
        }
        Ok(())
    });
    ctx.check("l1-order", 0.3, |_, t| {
        for gam in [0.7, 2.3] {
            for alpha in [0.3, 0.5, 0.8] {
                let exact = caputo_monomial(gam, alpha)
                    .map(|(c, _)| c)
                    .unwrap_or_else(|_| gamma(1.0 + gam) / gamma(1.0 + gam - alpha));
                let errs: Vec<f64> = (0..5)
                    .map(|k| {
                        let n = 64usize << k;
                        let h = 1.0 / n as f64;
                        let samples: Vec<f64> = (0..=n).map(|i| (i as f64 * h).powf(gam)).collect();
                        caputo_l1(&samples, h, alpha, n).map(|v| (v - exact).abs())
                    })
                    .collect::<Result<_>>()?;
                for w in errs.windows(2) {
                    t.record(((w[0] / w[1]).log2() - (2.0 - alpha)).abs());
                }
            }
        }
        Ok(())
    });
    ctx.check("l1-linear-exact", 1e-13, |_, t| {
        for alpha in [0.3, 0.5, 0.8] {
            let n = 64;
            let h = 1.0 / n as f64;
            let samples: Vec<f64> = (0..=n).map(|i| i as f64 * h).collect();
            let (c, _) = caputo_monomial(1.0, alpha)?;
            t.abs(caputo_l1(&samples, h, alpha, n)?, c);
        }
        Ok(())
    });
    let n_fs = ctx.n(12);
    ctx.check("forward-shift-y", 1e-10, |_, t| {
        for alpha in [0.3, 0.5, 0.8] {
            for n in 0..=n_fs {
                let lhs = fhp_bipoly(n, alpha, 1.0)?.apply_inner(|p| caputo_poly(p, alpha))?;
                let rhs =
                    if n < 2 { BiPoly::default() } else { fhp_bipoly(n - 2, alpha, 1.0)?.scale((n * (n - 1)) as f64) };
                t.record(bipoly_err(&lhs, &rhs));
            }
        }
        Ok(())
    });
    ctx.check("riemann-liouville", 1e-14, |rng, t| {
        for _ in 0..20 {
            let (a, alpha, s): (f64, f64, f64) =
                (rng.gen_range(-1.0..1.0), rng.gen_range(0.1..0.9), rng.gen_range(0.1..2.0));
            let e = ml_one(alpha, a * s.powf(alpha))?.value;
            let want = s.powf(-alpha) / gamma(1.0 - alpha) + a * e;
            t.rel(rl_from_caputo(a * e, 1.0, s, alpha)?, want, 1.0);
        }
        Ok(())
    });
}

fn pde_residuals(ctx: &mut Ctx) {
    let n_tf = ctx.n(10);
    ctx.check("tf-diffusion-residual", 1e-10, |_, t| {
        for alpha in [0.3, 0.5, 0.8] {
            for k in [0.5, 1.0, 2.0] {
                for n in 0..=n_tf {
                    t.record(residual_tf_diffusion(n, alpha, k)?);
                }
            }
        }
        Ok(())
    });
    let n_lag = ctx.n(6);
    ctx.check("laguerre-residual", 1e-10, |_, t| {
        for alpha in [0.3, 0.5, 0.8] {
            for beta in [0.3, 0.5, 0.8] {
                for n in 0..=n_lag {
                    t.record(residual_laguerre(n, alpha, beta, 1.0)?);
                }
            }
        }
        Ok(())
    });
    let n_case = ctx.n(10);
    ctx.check("case-i-umbral", 1e-9, |rng, t| {
        for _ in 0..20 {
            let (a, x, s): (f64, f64, f64) =
                (rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(0.0..1.5));
            let (alpha, k): (f64, f64) = (rng.gen_range(0.1..0.9), rng.gen_range(0.2..2.0));
            for n in 0..=n_case {
                let w = k * s.powf(alpha);
                t.rel(solve_case_i(n, a, alpha, k, x, s)?, umbral_hermite_shift(n, x, a, w, alpha)?, 1e-3);
            }
        }
        Ok(())
    });
    ctx.check("case-ii-forms", 1e-9, |rng, t| {
        for _ in 0..20 {
            let (a, x, s): (f64, f64, f64) =
                (rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(0.0..1.5));
            let (alpha, k): (f64, f64) = (rng.gen_range(0.1..0.9), rng.gen_range(0.2..2.0));
            for n in 0..=n_case {
                let w = k * s.powf(alpha);
                t.rel(solve_case_ii(n, a, alpha, k, x, s)?, fhp_oplus_eval(n, x, w, a, alpha)?, 1e-3);
            }
        }
        Ok(())
    });
    ctx.check("initial-conditions", 1e-10, |rng, t| {
        for _ in 0..10 {
            let (a, x) = (rng.gen_range(-1.0..1.0), rng.gen_range(0.0..1.5));
            let (alpha, k) = (rng.gen_range(0.1..0.9), rng.gen_range(0.2..2.0));
            for n in 0..=n_case.min(8) {
                t.rel(solve_case_i(n, a, alpha, k, x, 0.0)?, classical_hermite(n, x, a), 1.0);
                t.rel(solve_case_ii(n, a, alpha, k, x, 0.0)?, fhp_eval(n, alpha, x, a)?, 1.0);
                let g = (-x.powf(alpha)).powi(n as i32) / gamma(1.0 + alpha * n as f64);
                t.rel(solve_laguerre_monomial(n, alpha, 0.6, k, x, 0.0)?, g, 1.0);
            }
            let y: f64 = rng.gen_range(-1.0..1.0);
            let w = wright(alpha, 1.0, -y * x.powf(alpha))?.value;
            t.rel(solve_laguerre_wright(y, alpha, 0.6, k, x, 0.0)?, w, 1.0);
        }
        Ok(())
    });
    let n_sub = ctx.n(8);
    ctx.check("subordination-chain", 1e-13, |rng, t| {
        for _ in 0..10 {
            let (alpha, beta) = (rng.gen_range(0.1..0.9), rng.gen_range(0.1..0.9));
            let (b, x, s) = (rng.gen_range(0.2..2.0), rng.gen_range(0.0..2.0), rng.gen_range(0.1..2.0));
            for n in 0..=n_sub {
                let direct = laguerre_monomial_terms(n, alpha, beta, b, x, s)?;
                let sub = laguerre_subordinated_terms(n, alpha, beta, b, x, s)?;
                for (d, m) in direct.iter().zip(&sub) {
                    t.rel(*m, *d, 1e-300);
                }
            }
        }
        Ok(())
    });
}

fn sheffer_ladder(ctx: &mut Ctx) {
    let n_lad = ctx.n(10);
    ctx.check("fhp-ladder", 1e-9, |_, t| {
        for alpha in [0.3, 0.5, 0.8] {
            for y in [-1.0, 0.5, 2.0] {
                let g = ladder_series(&appell_a_fhp(alpha, y, n_lad + 2)?)?;
                for n in 0..=n_lad {
                    let p = fhp_coeffs(n, alpha, y)?;
                    t.record(poly_err(&raising_apply(&p, &g)?, &fhp_coeffs(n + 1, alpha, y)?));
                    if n > 0 {
                        let prev = fhp_coeffs(n - 1, alpha, y)?.scale(n as f64);
                        t.record(poly_err(&lowering_apply(&p)?, &prev));
                    }
                }
            }
        }
        Ok(())
    });
    ctx.check("mlp-ladder", 1e-9, |_, t| {
        for (alpha, beta, x) in [(0.3, 1.0, 0.7), (0.5, 1.5, -1.0), (0.8, 0.6, 1.0), (0.5, 1.0, 0.5)] {
            let g = ladder_series(&appell_a_mlp(alpha, beta, x, n_lad + 2)?)?;
            for n in 0..=n_lad {
                let p = mlp_coeffs_y(n, alpha, beta, x)?;
                t.record(poly_err(&raising_apply(&p, &g)?, &mlp_coeffs_y(n + 1, alpha, beta, x)?));
                if n > 0 {
                    let prev = mlp_coeffs_y(n - 1, alpha, beta, x)?.scale(n as f64);
                    t.record(poly_err(&lowering_apply(&p)?, &prev));
                }
            }
        }
        Ok(())
    });
    ctx.check("commutator", 1e-9, |_, t| {
        let gs = [
            ladder_series(&appell_a_fhp(0.5, 0.7, n_lad + 2)?)?,
            ladder_series(&appell_a_mlp(0.6, 1.2, 0.8, n_lad + 2)?)?,
        ];
        for g in &gs {
            for k in 0..=n_lad {
                let p = basis(k);
                let pm = lowering_apply(&raising_apply(&p, g)?)?;
                let mp = raising_apply(&lowering_apply(&p)?, g)?;
                t.record((&pm - &mp).max_abs_diff(&p));
            }
        }
        Ok(())
    });
    ctx.check("h-cocycle", 1e-9, |rng, t| {
        for _ in 0..20 {
            let (l1, l2): (f64, f64) = (rng.gen_range(-0.5..0.5), rng.gen_range(-0.5..0.5));
            let x: f64 = rng.gen_range(0.0..2.0);
            let (alpha, y) = (rng.gen_range(0.5..1.0), rng.gen_range(-1.0..1.0));
            let h = |l: f64, x: f64| aux_v_h_fhp(l, x, alpha, y).map(|p| p.1);
            if x != 1.0 && l1 + x != 1.0 {
                t.abs(h(l1 + l2, x)?, h(l1, x)? * h(l2, l1 + x)?);
            }
            let beta = rng.gen_range(0.5..2.0);
            let h = |l: f64, y: f64| aux_v_h_mlp(l, y, alpha, beta, 0.9).map(|p| p.1);
            t.abs(h(l1 + l2, x)?, h(l1, x)? * h(l2, l1 + x)?);
        }
        Ok(())
    });
    ctx.check("a-prime-consistency", 1e-10, |_, t| {
        for alpha in [0.3, 0.5, 0.8] {
            for y in [-1.0, 0.5, 2.0] {
                let n = 16;
                let a = appell_a_fhp(alpha, y, n)?;
                let mut closed = vec![0.0; n];
                for r in 1..=n / 2 {
                    closed[2 * r - 1] = 2.0 * y.powi(r as i32) / (alpha * gamma(alpha * r as f64));
                }
                for (got, want) in a.derivative().coeffs().iter().zip(&closed) {
                    t.abs(*got, *want);
                }
            }
        }
        Ok(())
    });
}
