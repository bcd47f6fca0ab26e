//! Series evaluators for the Mittag-Leffler family and the Wright function.
//!
//! Every evaluator sums its defining power series with compensated
//! summation under a hard term budget. The returned error estimate is the
//! magnitude of the last two terms plus a rounding bound proportional to
//! `Σ|term|`; when that estimate exceeds the configured relative accuracy
//! the call fails with [`Error::NonConvergence`] and carries the partial
//! value. In practice this confines honest evaluation to moderate |z|; for
//! large negative z at small α the alternating series cancels and the
//! evaluator refuses rather than returning noise.

use serde::Serialize;

use crate::config::SeriesConfig;
use crate::error::{domain, Error, Result};
use crate::frac_poly::{FracPoly, Term};
use crate::gamma::{ln_gamma, rgamma};
use crate::summation::CompensatedSum;

/// Rounding error per term, in units of machine epsilon.
const TERM_ULPS: f64 = 8.0;

/// A series value with its error estimate and the number of terms used.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EvalResult {
    pub value: f64,
    /// Heuristic bound: last-two-terms magnitude plus accumulated rounding.
    pub abs_error_estimate: f64,
    pub terms_used: usize,
}

/// Parameters (α, β, γ) of the three-parameter Mittag-Leffler function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MLParams {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

impl MLParams {
    pub fn new(alpha: f64, beta: f64, gamma: f64) -> Result<Self> {
        check_alpha(alpha)?;
        check_finite("beta", beta)?;
        check_finite("gamma", gamma)?;
        Ok(MLParams { alpha, beta, gamma })
    }

    /// Number of nonzero terms when γ is a nonpositive integer.
    pub fn polynomial_degree(&self) -> Option<usize> {
        (self.gamma <= 0.0 && self.gamma.fract() == 0.0).then(|| (-self.gamma) as usize)
    }

    pub fn eval(&self, z: f64, cfg: &SeriesConfig) -> Result<EvalResult> {
        ml_three_with(cfg, self.alpha, self.beta, self.gamma, z)
    }
}

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha > 0.0 && alpha.is_finite() {
        Ok(())
    } else {
        Err(domain(format!("alpha must be a finite positive number, got {alpha}")))
    }
}

fn check_finite(name: &str, v: f64) -> Result<()> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(domain(format!("{name} must be finite, got {v}")))
    }
}

/// First index with a positive Γ argument `shift + slope·r`; before it the
/// terms may vanish at poles and must not trigger the stopping rule.
fn first_regular_index(shift: f64, slope: f64) -> usize {
    if shift > 0.0 {
        0
    } else {
        (-shift / slope).floor() as usize + 1
    }
}

/// z^r / Γ(arg), falling back to logarithms when z^r overflows.
fn power_over_gamma(z: f64, r: usize, arg: f64) -> f64 {
    let rg = rgamma(arg);
    if rg == 0.0 {
        return 0.0;
    }
    let p = z.powi(r as i32);
    let t = p * rg;
    if t.is_finite() && p.is_finite() && rg.is_finite() && (t != 0.0 || z == 0.0) {
        return t;
    }
    let sign = if z < 0.0 && r % 2 == 1 { -1.0 } else { 1.0 } * rg.signum();
    let ln_g = if arg > 0.0 { ln_gamma(arg).unwrap_or(f64::INFINITY) } else { -rg.abs().ln() };
    sign * (r as f64 * z.abs().ln() - ln_g).exp()
}

/// Sums `term(r)` for r = 0, 1, … under the configured budget.
pub(crate) fn sum_series<F>(cfg: &SeriesConfig, min_terms: usize, mut term: F) -> Result<EvalResult>
where
    F: FnMut(usize) -> f64,
{
    let mut acc = CompensatedSum::new();
    let mut prev = f64::INFINITY;
    for r in 0..cfg.max_terms {
        let t = term(r);
        if !t.is_finite() {
            return Err(Error::NonConvergence { value: acc.value(), abs_error_estimate: f64::INFINITY, terms_used: r });
        }
        acc.add(t);
        let s = acc.value().abs();
        if r + 1 >= min_terms && t.abs() <= cfg.stop_tol * s && prev.abs() <= cfg.stop_tol * s {
            let value = acc.value();
            let estimate = t.abs() + prev.abs() + TERM_ULPS * f64::EPSILON * acc.abs_sum();
            let result = EvalResult { value, abs_error_estimate: estimate, terms_used: r + 1 };
            if estimate <= cfg.accuracy_tol * value.abs() || estimate == 0.0 {
                return Ok(result);
            }
            return Err(Error::NonConvergence { value, abs_error_estimate: estimate, terms_used: r + 1 });
        }
        prev = t;
    }
    Err(Error::NonConvergence {
        value: acc.value(),
        abs_error_estimate: prev.abs() + TERM_ULPS * f64::EPSILON * acc.abs_sum(),
        terms_used: cfg.max_terms,
    })
}

/// E_α(z) = Σ z^r / Γ(1 + αr).
pub fn ml_one(alpha: f64, z: f64) -> Result<EvalResult> {
    ml_one_with(&SeriesConfig::default(), alpha, z)
}

pub fn ml_one_with(cfg: &SeriesConfig, alpha: f64, z: f64) -> Result<EvalResult> {
    ml_two_with(cfg, alpha, 1.0, z)
}

/// E_{α,β}(z) = Σ z^r / Γ(β + αr). β = 0 is allowed (the r = 0 term is 0).
pub fn ml_two(alpha: f64, beta: f64, z: f64) -> Result<EvalResult> {
    ml_two_with(&SeriesConfig::default(), alpha, beta, z)
}

pub fn ml_two_with(cfg: &SeriesConfig, alpha: f64, beta: f64, z: f64) -> Result<EvalResult> {
    check_alpha(alpha)?;
    check_finite("beta", beta)?;
    check_finite("z", z)?;
    let min_terms = first_regular_index(beta, alpha) + 1;
    sum_series(cfg, min_terms, |r| power_over_gamma(z, r, beta + alpha * r as f64))
}

/// (γ)_r / r!, the Pochhammer weight of the Prabhakar series.
///
/// Evaluated as a running product so that nonpositive integer γ gives
/// exact zeros from r = 1 − γ on.
pub fn pochhammer_over_factorial(gamma: f64, r: usize) -> f64 {
    (0..r).fold(1.0, |w, k| w * (gamma + k as f64) / (k + 1) as f64)
}

/// Coefficient of z^r in E^γ_{α,β}(z).
pub fn prabhakar_coeff(alpha: f64, beta: f64, gamma: f64, r: usize) -> f64 {
    pochhammer_over_factorial(gamma, r) * rgamma(beta + alpha * r as f64)
}

/// E^γ_{α,β}(z) = Σ (γ)_r / r! · z^r / Γ(β + αr).
pub fn ml_three(alpha: f64, beta: f64, gamma: f64, z: f64) -> Result<EvalResult> {
    ml_three_with(&SeriesConfig::default(), alpha, beta, gamma, z)
}

pub fn ml_three_with(cfg: &SeriesConfig, alpha: f64, beta: f64, gamma: f64, z: f64) -> Result<EvalResult> {
    let params = MLParams::new(alpha, beta, gamma)?;
    check_finite("z", z)?;
    if let Some(n) = params.polynomial_degree() {
        // finite sum: exact truncation, no stopping rule needed
        let mut acc = CompensatedSum::new();
        for r in 0..=n {
            acc.add(prabhakar_coeff(alpha, beta, gamma, r) * z.powi(r as i32));
        }
        return Ok(EvalResult {
            value: acc.value(),
            abs_error_estimate: TERM_ULPS * f64::EPSILON * acc.abs_sum(),
            terms_used: n + 1,
        });
    }
    let min_terms = first_regular_index(beta, alpha) + 1;
    let mut weight = 1.0;
    sum_series(cfg, min_terms, |r| {
        if r > 0 {
            weight *= (gamma + (r - 1) as f64) / r as f64;
        }
        weight * power_over_gamma(z, r, beta + alpha * r as f64)
    })
}

/// Wright function W_{α,μ}(z) = Σ z^r / [r! Γ(μ + αr)].
pub fn wright(alpha: f64, mu: f64, z: f64) -> Result<EvalResult> {
    wright_with(&SeriesConfig::default(), alpha, mu, z)
}

pub fn wright_with(cfg: &SeriesConfig, alpha: f64, mu: f64, z: f64) -> Result<EvalResult> {
    check_alpha(alpha)?;
    check_finite("mu", mu)?;
    check_finite("z", z)?;
    let min_terms = first_regular_index(mu, alpha) + 1;
    let mut z_pow_over_fact = 1.0;
    sum_series(cfg, min_terms, |r| {
        if r > 0 {
            z_pow_over_fact *= z / r as f64;
        }
        z_pow_over_fact * rgamma(mu + alpha * r as f64)
    })
}

/// The first `n_terms` terms of E_α(a t^α) as a polynomial in t:
/// Σ_{r<n} a^r t^{αr} / Γ(1 + αr).
pub fn ml_one_poly(alpha: f64, a: f64, n_terms: usize) -> FracPoly {
    FracPoly::from_terms((0..n_terms).map(|r| {
        let rf = r as f64;
        Term::new(a.powi(r as i32) * rgamma(1.0 + alpha * rf), alpha * rf)
    }))
}

fn check_relaxation(alpha: f64, tau: f64, t: f64) -> Result<()> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(domain(format!("alpha must lie in (0, 1), got {alpha}")));
    }
    if !(tau > 0.0) {
        return Err(domain(format!("tau must be positive, got {tau}")));
    }
    if !(t >= 0.0) {
        return Err(domain(format!("t must be nonnegative, got {t}")));
    }
    Ok(())
}

/// Cole-Cole relaxation ψ(t) = E_α[−(t/τ)^α].
pub fn relaxation_cole_cole(alpha: f64, tau: f64, t: f64) -> Result<f64> {
    check_relaxation(alpha, tau, t)?;
    Ok(ml_one(alpha, -(t / tau).powf(alpha))?.value)
}

/// Havriliak-Negami relaxation ψ(t) = 1 − (t/τ)^{αβ} E^β_{α,1+αβ}[−(t/τ)^α].
pub fn relaxation_hn(alpha: f64, beta: f64, tau: f64, t: f64) -> Result<f64> {
    check_relaxation(alpha, tau, t)?;
    if !(beta > 0.0) {
        return Err(domain(format!("beta must be positive, got {beta}")));
    }
    if t == 0.0 {
        return Ok(1.0);
    }
    let u = t / tau;
    let e = ml_three(alpha, 1.0 + alpha * beta, beta, -u.powf(alpha))?;
    Ok(1.0 - u.powf(alpha * beta) * e.value)
}
