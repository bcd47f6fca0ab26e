//! Appell sequences and their ladder operators.
//!
//! Both polynomial families are Appell: the fractional Hermite polynomials
//! in x (A(λ) = E_α(yλ²)) and the Mittag-Leffler polynomials in y
//! (A(λ) = W_{α,β}(−λx)). With g = 1/A the lowering operator is P = D and
//! the raising operator is M = X − g′(D)/g(D).

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::frac_poly::{FracPoly, Term};
use crate::gamma::{factorial, rgamma};
use crate::mittag_leffler::{ml_one, ml_two, wright};

/// Truncated power series Σ_{k ≤ N} c_k λ^k.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PowerSeries {
    coeffs: Vec<f64>,
}

impl PowerSeries {
    pub fn new(coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(domain("power series needs at least one coefficient"));
        }
        if coeffs.iter().any(|c| !c.is_finite()) {
            return Err(domain("power series coefficients must be finite"));
        }
        Ok(PowerSeries { coeffs })
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Truncation order N.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, lambda: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * lambda + c)
    }

    /// Product truncated at the lower of the two orders.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let coeffs = (0..=n).map(|k| (0..=k).map(|j| self.coeffs[j] * other.coeffs[k - j]).sum()).collect();
        PowerSeries { coeffs }
    }

    /// Term-wise derivative, order N − 1 (a constant stays a zero constant).
    pub fn derivative(&self) -> Self {
        let coeffs: Vec<f64> = self.coeffs.iter().enumerate().skip(1).map(|(k, c)| k as f64 * c).collect();
        PowerSeries { coeffs: if coeffs.is_empty() { vec![0.0] } else { coeffs } }
    }

    fn check_unit(&self) -> Result<()> {
        if self.coeffs[0] == 0.0 {
            Err(Error::ZeroDenominator("power series has zero constant term".into()))
        } else {
            Ok(())
        }
    }
}

/// Series quotient num / den at num's order; den[0] must be nonzero.
fn divide(num: &[f64], den: &[f64]) -> Vec<f64> {
    let mut out: Vec<f64> = Vec::with_capacity(num.len());
    for k in 0..num.len() {
        let mut acc = num[k];
        for j in 1..=k.min(den.len() - 1) {
            acc -= den[j] * out[k - j];
        }
        out.push(acc / den[0]);
    }
    out
}

/// 1/s to the same order.
pub fn series_reciprocal(s: &PowerSeries) -> Result<PowerSeries> {
    s.check_unit()?;
    let mut one = vec![0.0; s.coeffs.len()];
    one[0] = 1.0;
    Ok(PowerSeries { coeffs: divide(&one, &s.coeffs) })
}

/// s′/s to order N − 1.
pub fn series_log_derivative(s: &PowerSeries) -> Result<PowerSeries> {
    s.check_unit()?;
    Ok(PowerSeries { coeffs: divide(&s.derivative().coeffs, &s.coeffs) })
}

/// E_α(yλ²) to order N: a_{2r} = y^r/Γ(1+αr), odd coefficients zero.
pub fn appell_a_fhp(alpha: f64, y: f64, n: usize) -> Result<PowerSeries> {
    if !(alpha > 0.0) {
        return Err(domain(format!("alpha must be positive, got {alpha}")));
    }
    let coeffs = (0..=n)
        .map(|k| if k % 2 == 1 { 0.0 } else { y.powi(k as i32 / 2) * rgamma(1.0 + alpha * (k / 2) as f64) })
        .collect();
    PowerSeries::new(coeffs)
}

/// W_{α,β}(−λx) to order N: a_r = (−x)^r/[r! Γ(β+αr)].
pub fn appell_a_mlp(alpha: f64, beta: f64, x: f64, n: usize) -> Result<PowerSeries> {
    if !(alpha > 0.0) || !(beta > 0.0) {
        return Err(domain(format!("alpha and beta must be positive, got ({alpha}, {beta})")));
    }
    let coeffs = (0..=n).map(|r| (-x).powi(r as i32) / factorial(r) * rgamma(beta + alpha * r as f64)).collect();
    PowerSeries::new(coeffs)
}

/// Auxiliary functions of exp{λ[q(x) d/dx + v(x)]} f(x) = h(λ, x) f(T(λ, x)).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AuxFunctions {
    pub q: f64,
    pub v: f64,
    pub t: f64,
    pub h: f64,
}

/// Auxiliary functions for an Appell sequence (B(λ) = λ), given A and A′.
pub fn appell_aux<A, D>(a: A, a_prime: D, lambda: f64, x: f64) -> Result<AuxFunctions>
where
    A: Fn(f64) -> Result<f64>,
    D: Fn(f64) -> Result<f64>,
{
    // B = B⁻¹ = identity
    let b = |u: f64| u;
    let b_inv = |u: f64| u;
    let base = b_inv(x - 1.0);
    let a_base = a(base)?;
    if a_base == 0.0 {
        return Err(Error::ZeroDenominator(format!("A vanishes at {base}")));
    }
    Ok(AuxFunctions { q: 1.0, v: a_prime(base)? / a_base, t: b(lambda + base) + 1.0, h: a(lambda + base)? / a_base })
}

fn nonzero(what: &str, v: f64) -> Result<f64> {
    if v == 0.0 {
        Err(Error::ZeroDenominator(format!("{what} vanishes")))
    } else {
        Ok(v)
    }
}

/// (v, h) for the fractional Hermite family; x is the variable.
pub fn aux_v_h_fhp(lambda: f64, x: f64, alpha: f64, y: f64) -> Result<(f64, f64)> {
    if x == 1.0 {
        return Err(Error::Singular("v has a pole at x = 1".into()));
    }
    let s = x - 1.0;
    let den = nonzero("E_alpha[y(x-1)^2]", ml_one(alpha, y * s * s)?.value)?;
    let v = 2.0 / (alpha * s) * ml_two(alpha, 0.0, y * s * s)?.value / den;
    let shifted = lambda + s;
    let h = ml_one(alpha, y * shifted * shifted)?.value / den;
    Ok((v, h))
}

/// (v, h) for the Mittag-Leffler family; y is the variable, x the parameter.
pub fn aux_v_h_mlp(lambda: f64, y: f64, alpha: f64, beta: f64, x: f64) -> Result<(f64, f64)> {
    let z = -x * (y - 1.0);
    let den = nonzero("W_{alpha,beta}[-x(y-1)]", wright(alpha, beta, z)?.value)?;
    let v = -x * wright(alpha, beta + alpha, z)?.value / den;
    let h = wright(alpha, beta, -x * (lambda + y - 1.0))?.value / den;
    Ok((v, h))
}

fn check_integer(p: &FracPoly) -> Result<()> {
    if p.has_integer_exponents() {
        Ok(())
    } else {
        Err(domain("ladder operators act on polynomials with integer exponents"))
    }
}

/// P = D.
pub fn lowering_apply(p: &FracPoly) -> Result<FracPoly> {
    check_integer(p)?;
    p.derivative()
}

/// M = X − g′(D)/g(D), with `log_deriv_g` holding the coefficients of g′/g.
pub fn raising_apply(p: &FracPoly, log_deriv_g: &PowerSeries) -> Result<FracPoly> {
    check_integer(p)?;
    let degree = p.degree().map_or(0, |d| d as usize);
    if log_deriv_g.order() < degree && !p.is_empty() {
        return Err(Error::InsufficientOrder { have: log_deriv_g.order(), need: degree });
    }
    let mut out = p.shift(1.0);
    let mut dk = p.clone();
    for &c in log_deriv_g.coeffs().iter().take(degree + 1) {
        if dk.is_empty() {
            break;
        }
        if c != 0.0 {
            out = &out - &dk.scale(c);
        }
        dk = dk.derivative()?;
    }
    Ok(out)
}

/// g′/g for g = 1/A, computed as −A′/A.
pub fn ladder_series(a: &PowerSeries) -> Result<PowerSeries> {
    let mut s = series_log_derivative(a)?;
    s.coeffs.iter_mut().for_each(|c| *c = -*c);
    Ok(s)
}

/// Monomial x^k as a `FracPoly`.
pub fn basis(k: usize) -> FracPoly {
    FracPoly::from_terms([Term::new(1.0, k as f64)])
}
