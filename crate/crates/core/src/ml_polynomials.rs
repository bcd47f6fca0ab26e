//! Two-variable Mittag-Leffler polynomials
//!
//! ```text
//! E^{−n}_{α,β}(x, y) = Σ_{r ≤ n} C(n, r) (−x)^r y^{n−r} / Γ(β + αr)
//! ```

use crate::caputo::{caputo_monomial, CaputoOrder};
use crate::error::{domain, Error, Result};
use crate::frac_poly::{FracPoly, Term};
use crate::gamma::{binomial, factorial, gamma, rgamma};
use crate::mittag_leffler::{ml_two, wright};
use crate::summation::CompensatedSum;

/// Index and parameters of one MLP; (x, y) stay free.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MLPSpec {
    pub n: usize,
    pub alpha: f64,
    pub beta: f64,
}

impl MLPSpec {
    pub fn new(n: usize, alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha.is_finite()) || !(beta > 0.0 && beta.is_finite()) {
            return Err(domain(format!("alpha and beta must be positive, got ({alpha}, {beta})")));
        }
        Ok(MLPSpec { n, alpha, beta })
    }

    /// Coefficient of x^r.
    fn weight(&self, r: usize, y: f64) -> f64 {
        let sign = if r.is_multiple_of(2) { 1.0 } else { -1.0 };
        sign * binomial(self.n, r) * y.powi((self.n - r) as i32) * rgamma(self.beta + self.alpha * r as f64)
    }

    /// E^{−n}_{α,β}(x, y) as a polynomial in x.
    pub fn coeffs(&self, y: f64) -> FracPoly {
        FracPoly::from_terms((0..=self.n).map(|r| Term::new(self.weight(r, y), r as f64)))
    }

    pub fn eval(&self, x: f64, y: f64) -> f64 {
        (0..=self.n).map(|r| self.weight(r, y) * x.powi(r as i32)).collect::<CompensatedSum>().value()
    }
}

pub fn mlp_eval(n: usize, alpha: f64, beta: f64, x: f64, y: f64) -> Result<f64> {
    Ok(MLPSpec::new(n, alpha, beta)?.eval(x, y))
}

/// Coefficients in x, lowest power first.
pub fn mlp_coeffs(n: usize, alpha: f64, beta: f64, y: f64) -> Result<FracPoly> {
    Ok(MLPSpec::new(n, alpha, beta)?.coeffs(y))
}

/// Coefficients in y with x held fixed: the Appell form of the family.
pub fn mlp_coeffs_y(n: usize, alpha: f64, beta: f64, x: f64) -> Result<FracPoly> {
    let spec = MLPSpec::new(n, alpha, beta)?;
    Ok(FracPoly::from_terms((0..=n).map(|r| Term::new(spec.weight(r, 1.0) * x.powi(r as i32), (n - r) as f64))))
}

/// yⁿ E^{−n}_{α,β}(x/y, 1).
pub fn mlp_one_var_reduction(n: usize, alpha: f64, beta: f64, x: f64, y: f64) -> Result<f64> {
    if y == 0.0 {
        return Err(domain("one-variable reduction needs y != 0"));
    }
    Ok(y.powi(n as i32) * mlp_eval(n, alpha, beta, x / y, 1.0)?)
}

fn real_power(x: f64, alpha: f64) -> Result<f64> {
    if alpha.fract() == 0.0 && alpha.abs() < i32::MAX as f64 {
        Ok(x.powi(alpha as i32))
    } else if x >= 0.0 {
        Ok(x.powf(alpha))
    } else {
        Err(domain(format!("x^{alpha} is not real for x = {x}")))
    }
}

/// Generalized Konhauser polynomial Γ(β+αn) E^{−n}_{α,β}(x^α, y) / n!.
pub fn konhauser(n: usize, alpha: f64, beta: f64, x: f64, y: f64) -> Result<f64> {
    let spec = MLPSpec::new(n, alpha, beta)?;
    let xa = real_power(x, alpha)?;
    Ok(gamma(beta + alpha * n as f64) / factorial(n) * spec.eval(xa, y))
}

/// Σ λⁿ E^{−n}_{α,β}(x, y) = E_{α,β}(−λx/(1−λy)) / (1−λy).
pub fn mlp_ogf_closed(lambda: f64, alpha: f64, beta: f64, x: f64, y: f64) -> Result<f64> {
    MLPSpec::new(0, alpha, beta)?;
    let q = 1.0 - lambda * y;
    if !((lambda * y).abs() < 1.0) {
        return Err(domain(format!("ordinary generating function needs |λy| < 1, got {}", lambda * y)));
    }
    Ok(ml_two(alpha, beta, -lambda * x / q)?.value / q)
}

/// Σ λⁿ/n! E^{−n}_{α,β}(x, y) = e^{λy} W_{α,β}(−λx).
pub fn mlp_egf_closed(lambda: f64, alpha: f64, beta: f64, x: f64, y: f64) -> Result<f64> {
    MLPSpec::new(0, alpha, beta)?;
    Ok((lambda * y).exp() * wright(alpha, beta, -lambda * x)?.value)
}

/// The operator ^C D^α_x ∘ x∂_x, applied term-wise:
/// x^γ ↦ γ Γ(1+γ)/Γ(1+γ−α) x^{γ−α}; constants vanish.
pub fn frac_laguerre_apply(p: &FracPoly, alpha: f64) -> Result<FracPoly> {
    let alpha = CaputoOrder::new(alpha)?.value();
    p.try_map_terms(|t| {
        if t.exponent == 0.0 {
            return Ok(None);
        }
        let (c, mu) = caputo_monomial(t.exponent, alpha)?;
        Ok(Some(Term::new(t.coeff * t.exponent * c, mu)))
    })
}

/// exp(−(y/α) L) applied to (−1)ⁿ x^{αn}/Γ(1+αn), L = ^C D^α_x x∂_x,
/// truncated after `n_terms` powers of L. Exact once n_terms ≥ n.
pub fn mlp_operator_series(n: usize, alpha: f64, y: f64, n_terms: usize) -> Result<FracPoly> {
    let alpha = CaputoOrder::new(alpha)?.value();
    let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    let mut term = FracPoly::monomial(sign * rgamma(1.0 + alpha * n as f64), alpha * n as f64);
    let mut acc = term.clone();
    for r in 1..=n_terms {
        term = frac_laguerre_apply(&term, alpha)?.scale(-y / (alpha * r as f64));
        if term.is_empty() {
            break;
        }
        acc = &acc + &term;
    }
    Ok(acc)
}

/// Both sides of the operational identity on `grid` (x ≥ 0):
/// lhs = E^{−n}_{α,1}(x^α, y), rhs = the truncated operator series.
/// Fails with `IdentityMismatch` if they differ by more than 1e-10
/// (relative to the larger of 1 and max|lhs|).
pub fn mlp_operational_check(
    n: usize,
    alpha: f64,
    y: f64,
    n_terms: usize,
    grid: &[f64],
) -> Result<(Vec<f64>, Vec<f64>)> {
    if n_terms < n {
        return Err(Error::InsufficientOrder { have: n_terms, need: n });
    }
    let spec = MLPSpec::new(n, alpha, 1.0)?;
    let series = mlp_operator_series(n, alpha, y, n_terms)?;
    let mut lhs = Vec::with_capacity(grid.len());
    let mut rhs = Vec::with_capacity(grid.len());
    for &x in grid {
        if !(x >= 0.0) {
            return Err(domain(format!("grid point {x} is negative")));
        }
        lhs.push(spec.eval(x.powf(alpha), y));
        rhs.push(series.eval(x));
    }
    let scale = lhs.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    let diff = lhs.iter().zip(&rhs).fold(0.0f64, |m, (a, b)| m.max((a - b).abs()));
    if diff > 1e-10 * scale {
        return Err(Error::IdentityMismatch(format!(
            "operational form differs by {diff:e} (n={n}, alpha={alpha}, y={y})"
        )));
    }
    Ok((lhs, rhs))
}
