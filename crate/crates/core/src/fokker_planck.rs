//! Closed-form solutions of the fractional Cauchy problems.
//!
//! Time-fractional diffusion `^C D^α_t F = k ∂²_x F` is solved by series of
//! fractional Hermite polynomials in (x, k t^α). The Laguerre-type problems
//! `^C D^β_t G = −(b/α) [^C D^α_x x∂_x] G` are solved by Mittag-Leffler
//! polynomials and, for Wright initial data, by a product of a Wright and a
//! Mittag-Leffler function.
//!
//! Residuals are checked on bivariate coefficient tables, so they carry no
//! discretization error.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::caputo::{caputo_poly, CaputoOrder};
use crate::error::{domain, Error, Result};
use crate::format::{fmt_g15, round_g15};
use crate::frac_poly::{BiPoly, FracPoly};
use crate::fractional_hermite::{
    convolution_identity_i_rhs, convolution_identity_ii_rhs, fhp_bipoly, fhp_eval, fhp_oplus_eval,
};
use crate::gamma::{binomial, factorial, levy_subordination_moment, rgamma};
use crate::mittag_leffler::{ml_one, wright};
use crate::ml_polynomials::frac_laguerre_apply;
use crate::summation::CompensatedSum;

/// Initial data f(x) for the diffusion problem.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DiffusionInitial {
    /// xⁿ
    Monomial { n: usize },
    /// H_n(x, a), case (i)
    Hermite { n: usize, a: f64 },
    /// _αH_n(x, a), case (ii)
    Fhp { n: usize, a: f64 },
    /// Σ c_r x^r
    Series { coeffs: Vec<f64> },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiffusionProblem {
    pub alpha: f64,
    pub k: f64,
    pub initial: DiffusionInitial,
}

impl DiffusionProblem {
    pub fn new(alpha: f64, k: f64, initial: DiffusionInitial) -> Result<Self> {
        CaputoOrder::new(alpha)?;
        if !(k > 0.0 && k.is_finite()) {
            return Err(domain(format!("diffusivity k must be positive, got {k}")));
        }
        Ok(DiffusionProblem { alpha, k, initial })
    }

    pub fn id(&self) -> &'static str {
        match self.initial {
            DiffusionInitial::Monomial { .. } => "tf-diffusion-monomial",
            DiffusionInitial::Hermite { .. } => "tf-diffusion-case-i",
            DiffusionInitial::Fhp { .. } => "tf-diffusion-case-ii",
            DiffusionInitial::Series { .. } => "tf-diffusion-series",
        }
    }
}

/// Initial data for the Laguerre-type problems.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LaguerreInitial {
    /// g_n(x) = (−x^α)ⁿ / Γ(1+αn)
    Monomial { n: usize },
    /// W_{α,1}(−y x^α)
    Wright { y: f64 },
}

/// β = 1 means an ordinary first time derivative.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LaguerreProblem {
    pub alpha: f64,
    pub beta: f64,
    pub b: f64,
    pub initial: LaguerreInitial,
}

impl LaguerreProblem {
    pub fn new(alpha: f64, beta: f64, b: f64, initial: LaguerreInitial) -> Result<Self> {
        CaputoOrder::new(alpha)?;
        if !(beta > 0.0 && beta <= 1.0) {
            return Err(domain(format!("beta must lie in (0, 1], got {beta}")));
        }
        if !(b > 0.0 && b.is_finite()) {
            return Err(domain(format!("b must be positive, got {b}")));
        }
        Ok(LaguerreProblem { alpha, beta, b, initial })
    }

    pub fn id(&self) -> &'static str {
        match self.initial {
            LaguerreInitial::Monomial { .. } => "laguerre-monomial",
            LaguerreInitial::Wright { .. } => "laguerre-wright",
        }
    }
}

fn check_time(t: f64) -> Result<()> {
    if t >= 0.0 && t.is_finite() {
        Ok(())
    } else {
        Err(domain(format!("t must be nonnegative, got {t}")))
    }
}

fn check_space(x: f64) -> Result<()> {
    if x >= 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(domain(format!("x must be nonnegative where x^alpha appears, got {x}")))
    }
}

/// Evaluates the diffusion solution at (x, t). For series data, terms
/// r = 0..=`truncation` are summed.
pub fn solve_tf_diffusion(prob: &DiffusionProblem, x: f64, t: f64, truncation: usize) -> Result<f64> {
    check_time(t)?;
    let (alpha, k) = (prob.alpha, prob.k);
    let w = k * t.powf(alpha);
    match &prob.initial {
        DiffusionInitial::Monomial { n } => fhp_eval(*n, alpha, x, w),
        DiffusionInitial::Hermite { n, a } => solve_case_i(*n, *a, alpha, k, x, t),
        DiffusionInitial::Fhp { n, a } => solve_case_ii(*n, *a, alpha, k, x, t),
        DiffusionInitial::Series { coeffs } => {
            if truncation >= coeffs.len() {
                return Err(domain(format!("truncation {truncation} exceeds the {} given coefficients", coeffs.len())));
            }
            let mut acc = CompensatedSum::new();
            for (r, c) in coeffs.iter().enumerate().take(truncation + 1) {
                if *c != 0.0 {
                    acc.add(c * fhp_eval(r, alpha, x, w)?);
                }
            }
            Ok(acc.value())
        }
    }
}

/// Case (i): f(x) = H_n(x, a).
pub fn solve_case_i(n: usize, a: f64, alpha: f64, k: f64, x: f64, t: f64) -> Result<f64> {
    check_time(t)?;
    convolution_identity_i_rhs(n, x, a, k * t.powf(alpha), alpha)
}

/// Case (ii): f(x) = _αH_n(x, a). Both closed forms are evaluated and must
/// agree to 1e-9 relative (absolute floor 1e-12).
pub fn solve_case_ii(n: usize, a: f64, alpha: f64, k: f64, x: f64, t: f64) -> Result<f64> {
    check_time(t)?;
    let w = k * t.powf(alpha);
    let sum_form = convolution_identity_ii_rhs(n, x, a, w, alpha)?;
    let oplus_form = fhp_oplus_eval(n, x, w, a, alpha)?;
    if (sum_form - oplus_form).abs() > 1e-9 * sum_form.abs().max(1e-3) {
        return Err(Error::IdentityMismatch(format!("case (ii) forms disagree: {sum_form} vs {oplus_form}")));
    }
    Ok(sum_form)
}

/// Coefficient of x^{αr} t^{β(n−r)} in case (iii), without the b power.
fn laguerre_weight(n: usize, r: usize, alpha: f64, beta: f64) -> f64 {
    let sign = if r.is_multiple_of(2) { 1.0 } else { -1.0 };
    sign * factorial(n) / factorial(r) * rgamma(1.0 + alpha * r as f64) * rgamma(1.0 + beta * (n - r) as f64)
}

/// Terms r = 0..=n of case (iii): (n!/r!) (−x^α)^r (b t^β)^{n−r} / [Γ(1+αr) Γ(1+β(n−r))].
pub fn laguerre_monomial_terms(n: usize, alpha: f64, beta: f64, b: f64, x: f64, t: f64) -> Result<Vec<f64>> {
    LaguerreProblem::new(alpha, beta, b, LaguerreInitial::Monomial { n })?;
    check_space(x)?;
    check_time(t)?;
    let (xa, bt) = (x.powf(alpha), b * t.powf(beta));
    Ok((0..=n).map(|r| laguerre_weight(n, r, alpha, beta) * xa.powi(r as i32) * bt.powi((n - r) as i32)).collect())
}

/// Case (iii): initial datum g_n(x) = (−x^α)ⁿ/Γ(1+αn).
pub fn solve_laguerre_monomial(n: usize, alpha: f64, beta: f64, b: f64, x: f64, t: f64) -> Result<f64> {
    Ok(laguerre_monomial_terms(n, alpha, beta, b, x, t)?.into_iter().collect::<CompensatedSum>().value())
}

/// The same terms written through the moments m! t^{βm}/Γ(1+βm) of the
/// one-sided Lévy law: C(n,r) (−x^α)^r b^{n−r} M_{n−r}(t) / Γ(1+αr).
pub fn laguerre_subordinated_terms(n: usize, alpha: f64, beta: f64, b: f64, x: f64, t: f64) -> Result<Vec<f64>> {
    LaguerreProblem::new(alpha, beta, b, LaguerreInitial::Monomial { n })?;
    check_space(x)?;
    let xa = x.powf(alpha);
    (0..=n)
        .map(|r| {
            let sign = if r.is_multiple_of(2) { 1.0 } else { -1.0 };
            let moment = levy_subordination_moment(beta, n - r, t)?;
            Ok(sign
                * binomial(n, r)
                * xa.powi(r as i32)
                * b.powi((n - r) as i32)
                * rgamma(1.0 + alpha * r as f64)
                * moment)
        })
        .collect()
}

/// Case (iii) summed from the subordination terms.
pub fn solve_laguerre_subordinated(n: usize, alpha: f64, beta: f64, b: f64, x: f64, t: f64) -> Result<f64> {
    Ok(laguerre_subordinated_terms(n, alpha, beta, b, x, t)?.into_iter().collect::<CompensatedSum>().value())
}

/// Case (iv): W_{α,1}(−y x^α) E_β(b y t^β).
pub fn solve_laguerre_wright(y: f64, alpha: f64, beta: f64, b: f64, x: f64, t: f64) -> Result<f64> {
    LaguerreProblem::new(alpha, beta, b, LaguerreInitial::Wright { y })?;
    check_space(x)?;
    check_time(t)?;
    let space = wright(alpha, 1.0, -y * x.powf(alpha))?.value;
    let time = ml_one(beta, b * y * t.powf(beta))?.value;
    Ok(space * time)
}

/// Evaluates a Laguerre-type problem at (x, t).
pub fn solve_laguerre(prob: &LaguerreProblem, x: f64, t: f64) -> Result<f64> {
    let LaguerreProblem { alpha, beta, b, .. } = *prob;
    match prob.initial {
        LaguerreInitial::Monomial { n } => solve_laguerre_monomial(n, alpha, beta, b, x, t),
        LaguerreInitial::Wright { y } => solve_laguerre_wright(y, alpha, beta, b, x, t),
    }
}

/// Largest coefficient of `lhs − rhs`, relative to max(1, largest |rhs| coefficient).
fn relative_residual(lhs: &BiPoly, rhs: &BiPoly) -> f64 {
    lhs.max_abs_diff(rhs) / rhs.max_abs_coeff().max(1.0)
}

/// Residual of ^C D^α_t F = k ∂²_x F for F = _αH_n(x, k t^α).
pub fn residual_tf_diffusion(n: usize, alpha: f64, k: f64) -> Result<f64> {
    DiffusionProblem::new(alpha, k, DiffusionInitial::Monomial { n })?;
    let f = fhp_bipoly(n, alpha, k)?;
    let lhs = f.apply_inner(|p| caputo_poly(p, alpha))?;
    let rhs = f.apply_outer(|p| p.derivative()?.derivative())?.scale(k);
    Ok(relative_residual(&lhs, &rhs))
}

/// Case (iii) solution as a table in (x, t).
pub fn laguerre_bipoly(n: usize, alpha: f64, beta: f64, b: f64) -> Result<BiPoly> {
    LaguerreProblem::new(alpha, beta, b, LaguerreInitial::Monomial { n })?;
    Ok(BiPoly::from_triples((0..=n).map(|r| {
        let c = laguerre_weight(n, r, alpha, beta) * b.powi((n - r) as i32);
        (c, alpha * r as f64, beta * (n - r) as f64)
    })))
}

fn time_derivative(p: &FracPoly, beta: f64) -> Result<FracPoly> {
    if beta == 1.0 {
        p.derivative()
    } else {
        caputo_poly(p, beta)
    }
}

/// Residual of ^C D^β_t G = −(b/α) [^C D^α_x x∂_x] G for case (iii).
pub fn residual_laguerre(n: usize, alpha: f64, beta: f64, b: f64) -> Result<f64> {
    let g = laguerre_bipoly(n, alpha, beta, b)?;
    let lhs = g.apply_inner(|p| time_derivative(p, beta))?;
    let rhs = g.apply_outer(|p| frac_laguerre_apply(p, alpha))?.scale(-b / alpha);
    Ok(relative_residual(&lhs, &rhs))
}

/// Values of a solution on a spatial grid at fixed time.
#[derive(Debug, Clone, PartialEq)]
pub struct SolutionProfile {
    grid: Vec<f64>,
    values: Vec<f64>,
    meta: BTreeMap<String, Value>,
}

impl SolutionProfile {
    pub fn new(grid: Vec<f64>, values: Vec<f64>, meta: BTreeMap<String, Value>) -> Result<Self> {
        if grid.len() != values.len() {
            return Err(domain(format!("{} grid points but {} values", grid.len(), values.len())));
        }
        if grid.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(domain("grid must be strictly increasing"));
        }
        Ok(SolutionProfile { grid, values, meta })
    }

    /// Evaluates `f` on every grid point.
    pub fn tabulate<F>(grid: Vec<f64>, meta: BTreeMap<String, Value>, mut f: F) -> Result<Self>
    where
        F: FnMut(f64) -> Result<f64>,
    {
        let values = grid.iter().map(|&x| f(x)).collect::<Result<Vec<_>>>()?;
        Self::new(grid, values, meta)
    }

    pub fn grid(&self) -> &[f64] {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn meta(&self) -> &BTreeMap<String, Value> {
        &self.meta
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("grid,value\n");
        for (x, v) in self.grid.iter().zip(&self.values) {
            out.push_str(&format!("{},{}\n", fmt_g15(*x), fmt_g15(*v)));
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let data: Vec<Value> = self
            .grid
            .iter()
            .zip(&self.values)
            .map(|(x, v)| json!({ "grid": round_g15(*x), "value": round_g15(*v) }))
            .collect();
        json!({ "meta": self.meta, "data": data })
    }
}

/// Uniform grid of `points` values from `start` to `stop` inclusive.
pub fn uniform_grid(start: f64, stop: f64, points: usize) -> Result<Vec<f64>> {
    if points < 2 || !(stop > start) {
        return Err(Error::InsufficientGrid(format!(
            "need at least 2 points on an increasing interval, got {points} on [{start}, {stop}]"
        )));
    }
    let h = (stop - start) / (points - 1) as f64;
    Ok((0..points).map(|i| if i + 1 == points { stop } else { start + i as f64 * h }).collect())
}

/// Profile of a diffusion problem at time t.
pub fn diffusion_profile(
    prob: &DiffusionProblem,
    grid: Vec<f64>,
    t: f64,
    truncation: usize,
) -> Result<SolutionProfile> {
    let mut meta = BTreeMap::new();
    meta.insert("problem".into(), json!(prob.id()));
    meta.insert("params".into(), serde_json::to_value(prob).expect("serializable problem"));
    meta.insert("t".into(), json!(t));
    if let DiffusionInitial::Series { .. } = prob.initial {
        meta.insert("truncation".into(), json!(truncation));
    }
    SolutionProfile::tabulate(grid, meta, |x| solve_tf_diffusion(prob, x, t, truncation))
}

/// Profile of a Laguerre-type problem at time t.
pub fn laguerre_profile(prob: &LaguerreProblem, grid: Vec<f64>, t: f64) -> Result<SolutionProfile> {
    let mut meta = BTreeMap::new();
    meta.insert("problem".into(), json!(prob.id()));
    meta.insert("params".into(), serde_json::to_value(prob).expect("serializable problem"));
    meta.insert("t".into(), json!(t));
    SolutionProfile::tabulate(grid, meta, |x| solve_laguerre(prob, x, t))
}
