//! Fractional Hermite polynomials
//!
//! ```text
//! _αH_n(x, y) = n! Σ_{r ≤ ⌊n/2⌋} x^{n−2r} y^r / [(n−2r)! Γ(1+αr)]
//! ```
//!
//! together with the α-deformed binomial ⊕_α, the umbral shift of the
//! classical Hermite polynomial and both convolution identities that
//! connect them.

use crate::error::{domain, Result};
use crate::frac_poly::{BiPoly, FracPoly, Term};
use crate::gamma::{binomial, factorial, frac_binom, rgamma, stieltjes_moment};
use crate::summation::CompensatedSum;

/// Parameters of one fractional Hermite polynomial; x stays free.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HermiteSpec {
    pub n: usize,
    pub alpha: f64,
    pub y: f64,
}

impl HermiteSpec {
    pub fn new(n: usize, alpha: f64, y: f64) -> Result<Self> {
        check_alpha(alpha)?;
        if !y.is_finite() {
            return Err(domain(format!("y must be finite, got {y}")));
        }
        Ok(HermiteSpec { n, alpha, y })
    }

    pub fn coeffs(&self) -> FracPoly {
        hermite_terms(self.n, self.alpha, self.y)
    }

    pub fn eval(&self, x: f64) -> f64 {
        eval_terms(self.n, self.alpha, x, self.y)
    }
}

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha > 0.0 && alpha <= 1.0 {
        Ok(())
    } else {
        Err(domain(format!("alpha must lie in (0, 1], got {alpha}")))
    }
}

/// n! / m! for m ≤ n, exact for the sizes used here.
fn falling_factorial(n: usize, m: usize) -> f64 {
    ((m + 1)..=n).fold(1.0, |acc, k| acc * k as f64)
}

/// Coefficient of x^{n−2r} y^r in _αH_n.
fn hermite_weight(n: usize, r: usize, alpha: f64) -> f64 {
    falling_factorial(n, n - 2 * r) * rgamma(1.0 + alpha * r as f64)
}

fn hermite_terms(n: usize, alpha: f64, y: f64) -> FracPoly {
    FracPoly::from_terms(
        (0..=n / 2).map(|r| Term::new(hermite_weight(n, r, alpha) * y.powi(r as i32), (n - 2 * r) as f64)),
    )
}

fn eval_terms(n: usize, alpha: f64, x: f64, y: f64) -> f64 {
    (0..=n / 2)
        .map(|r| hermite_weight(n, r, alpha) * x.powi((n - 2 * r) as i32) * y.powi(r as i32))
        .collect::<CompensatedSum>()
        .value()
}

/// _αH_n(x, y) as a polynomial in x.
pub fn fhp_coeffs(n: usize, alpha: f64, y: f64) -> Result<FracPoly> {
    Ok(HermiteSpec::new(n, alpha, y)?.coeffs())
}

/// _αH_n(x, y).
pub fn fhp_eval(n: usize, alpha: f64, x: f64, y: f64) -> Result<f64> {
    check_alpha(alpha)?;
    Ok(eval_terms(n, alpha, x, y))
}

/// _αH_n(x, c·t^α) as a bivariate polynomial in (x, t).
pub fn fhp_bipoly(n: usize, alpha: f64, c: f64) -> Result<BiPoly> {
    check_alpha(alpha)?;
    Ok(BiPoly::from_triples((0..=n / 2).map(|r| {
        let coeff = hermite_weight(n, r, alpha) * c.powi(r as i32);
        (coeff, (n - 2 * r) as f64, alpha * r as f64)
    })))
}

/// _αH_n(0, y): zero for odd n, n! y^{n/2} / Γ(1 + αn/2) for even n.
pub fn fhp_at_zero(n: usize, alpha: f64, y: f64) -> Result<f64> {
    check_alpha(alpha)?;
    if n % 2 == 1 {
        return Ok(0.0);
    }
    let half = n / 2;
    Ok(factorial(n) * y.powi(half as i32) * rgamma(1.0 + alpha * half as f64))
}

/// Classical two-variable Hermite polynomial H_n(x, y).
pub fn hermite_two_var(n: usize, x: f64, y: f64) -> f64 {
    eval_terms(n, 1.0, x, y)
}

/// (x ⊕_α y)^n = Σ_r (n r)_α x^{n−r} y^r.
pub fn oplus_power(x: f64, y: f64, n: usize, alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    let mut acc = CompensatedSum::new();
    for r in 0..=n {
        acc.add(frac_binom(n, r, alpha)? * x.powi((n - r) as i32) * y.powi(r as i32));
    }
    Ok(acc.value())
}

/// H_n(x, a + w·d_ρ) M_α(−αρ)|_{ρ=0}: the classical Hermite polynomial with
/// its second argument shifted umbrally, each power d_ρ^j realized by the
/// Stieltjes moment M_α(−αj) = j!/Γ(1+αj). Requires 0 < α < 1.
pub fn umbral_hermite_shift(n: usize, x: f64, a: f64, w: f64, alpha: f64) -> Result<f64> {
    let mut outer = CompensatedSum::new();
    for r in 0..=n / 2 {
        let mut inner = CompensatedSum::new();
        for k in 0..=r {
            let j = r - k;
            let moment = stieltjes_moment(alpha, -alpha * j as f64)?;
            inner.add(binomial(r, k) * a.powi(k as i32) * w.powi(j as i32) * moment);
        }
        let weight = falling_factorial(n, n - 2 * r) / factorial(r);
        outer.add(weight * x.powi((n - 2 * r) as i32) * inner.value());
    }
    Ok(outer.value())
}

/// n! Σ_r a^r ·_αH_{n−2r}(x, w) / [r! (n−2r)!].
pub fn convolution_identity_i_rhs(n: usize, x: f64, a: f64, w: f64, alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    let mut acc = CompensatedSum::new();
    for r in 0..=n / 2 {
        let weight = falling_factorial(n, n - 2 * r) / factorial(r);
        acc.add(weight * a.powi(r as i32) * eval_terms(n - 2 * r, alpha, x, w));
    }
    Ok(acc.value())
}

/// n! Σ_r _αH_{n−2r}(x, w) a^r / [(n−2r)! Γ(1+αr)].
pub fn convolution_identity_ii_rhs(n: usize, x: f64, a: f64, w: f64, alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    let mut acc = CompensatedSum::new();
    for r in 0..=n / 2 {
        let weight = hermite_weight(n, r, alpha);
        acc.add(weight * a.powi(r as i32) * eval_terms(n - 2 * r, alpha, x, w));
    }
    Ok(acc.value())
}

/// _αH_n(x, w ⊕_α a), with each (w ⊕_α a)^r expanded by the fractional
/// binomial inside the defining sum.
pub fn fhp_oplus_eval(n: usize, x: f64, w: f64, a: f64, alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    let mut acc = CompensatedSum::new();
    for r in 0..=n / 2 {
        let weight = hermite_weight(n, r, alpha);
        acc.add(weight * x.powi((n - 2 * r) as i32) * oplus_power(w, a, r, alpha)?);
    }
    Ok(acc.value())
}
