//! Caputo fractional derivative of order 0 < α < 1.
//!
//! Production code uses the exact rule on generalized monomials,
//! `D^α t^γ = Γ(1+γ)/Γ(1+γ−α) t^{γ−α}`, extended term-wise to `FracPoly`.
//! The L1 quadrature is kept only as an independent numerical oracle.

use crate::config::EXPONENT_EPS;
use crate::error::{domain, Error, Result};
use crate::frac_poly::{FracPoly, Term};
use crate::gamma::{gamma_ratio, rgamma};

/// A Caputo order α restricted to (0, 1).
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct CaputoOrder(f64);

impl CaputoOrder {
    pub fn new(alpha: f64) -> Result<Self> {
        if alpha > 0.0 && alpha < 1.0 {
            Ok(CaputoOrder(alpha))
        } else {
            Err(domain(format!("Caputo order must lie in (0, 1), got {alpha}")))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// Image of t^γ: returns `(coeff, exponent)` with
/// `D^α t^γ = coeff · t^exponent`. Constants map to `(0, 0)`.
pub fn caputo_monomial(gamma: f64, alpha: f64) -> Result<(f64, f64)> {
    let alpha = CaputoOrder::new(alpha)?.value();
    if gamma == 0.0 {
        return Ok((0.0, 0.0));
    }
    let tol = EXPONENT_EPS * gamma.abs().max(1.0);
    if !(gamma >= alpha - tol) {
        return Err(domain(format!("Caputo derivative of order {alpha} maps t^{gamma} to a negative power")));
    }
    let exponent = (gamma - alpha).max(0.0);
    let exponent = if exponent <= tol { 0.0 } else { exponent };
    Ok((gamma_ratio(&[1.0 + gamma], &[1.0 + exponent]), exponent))
}

/// Term-wise Caputo derivative of a generalized polynomial.
pub fn caputo_poly(p: &FracPoly, alpha: f64) -> Result<FracPoly> {
    CaputoOrder::new(alpha)?;
    p.try_map_terms(|t| {
        let (c, mu) = caputo_monomial(t.exponent, alpha)?;
        Ok((c != 0.0).then(|| Term::new(t.coeff * c, mu)))
    })
}

/// L1-scheme approximation of `D^α g(t_n)` from samples `g(t_0), …` on a
/// uniform grid of spacing `h`, evaluated at `t_n`, n = `t_index`.
///
/// Error is O(h^{2−α}) for smooth g.
pub fn caputo_l1(samples: &[f64], h: f64, alpha: f64, t_index: usize) -> Result<f64> {
    let alpha = CaputoOrder::new(alpha)?.value();
    if !(h > 0.0) {
        return Err(Error::InsufficientGrid(format!("grid spacing must be positive, got {h}")));
    }
    if t_index < 2 || t_index >= samples.len() {
        return Err(Error::InsufficientGrid(format!("need 2 <= t_index < {} samples, got {t_index}", samples.len())));
    }
    let one_minus = 1.0 - alpha;
    let mut acc = crate::summation::CompensatedSum::new();
    for j in 0..t_index {
        let w = ((j + 1) as f64).powf(one_minus) - (j as f64).powf(one_minus);
        acc.add(w * (samples[t_index - j] - samples[t_index - j - 1]));
    }
    Ok(acc.value() * h.powf(-alpha) * rgamma(2.0 - alpha))
}

/// Riemann-Liouville derivative from the Caputo one:
/// `RL = C + t^{−α} g(0) / Γ(1−α)`.
pub fn rl_from_caputo(caputo_value: f64, g0: f64, t: f64, alpha: f64) -> Result<f64> {
    let alpha = CaputoOrder::new(alpha)?.value();
    if !(t > 0.0) {
        return Err(domain(format!("t must be positive, got {t}")));
    }
    Ok(caputo_value + t.powf(-alpha) * g0 * rgamma(1.0 - alpha))
}
