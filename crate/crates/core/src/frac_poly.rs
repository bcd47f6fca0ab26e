//! Generalized polynomials Σ c_i x^{μ_i} with real exponents μ_i ≥ 0.
//!
//! `FracPoly` carries every polynomial object in the crate: the fractional
//! Hermite and Mittag-Leffler polynomials, truncated Mittag-Leffler and
//! Wright series, and the time/space factors of the diffusion solutions.
//! `BiPoly` nests two of them for functions of (x, t).

use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::config::{DROP_TOL, EXPONENT_EPS};
use crate::error::{domain, Result};

/// One monomial c·x^μ. Serialized as `{"c": .., "mu": ..}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Term {
    #[serde(rename = "c")]
    pub coeff: f64,
    #[serde(rename = "mu")]
    pub exponent: f64,
}

impl Term {
    pub fn new(coeff: f64, exponent: f64) -> Self {
        Term { coeff, exponent }
    }
}

/// Finite sum of generalized monomials.
///
/// Invariant: exponents strictly increasing, finite and nonnegative; no
/// stored coefficient is zero (or below [`DROP_TOL`]). Exponents closer
/// than [`EXPONENT_EPS`] (relative, floored at 1) are merged.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(into = "Vec<Term>", try_from = "Vec<Term>")]
pub struct FracPoly {
    terms: Vec<Term>,
}

fn same_exponent(a: f64, b: f64) -> bool {
    (a - b).abs() <= EXPONENT_EPS * a.abs().max(b.abs()).max(1.0)
}

fn pow(x: f64, mu: f64) -> f64 {
    if mu == 0.0 {
        1.0
    } else if mu.fract() == 0.0 && mu.abs() < i32::MAX as f64 {
        x.powi(mu as i32)
    } else {
        x.powf(mu)
    }
}

impl FracPoly {
    pub fn zero() -> Self {
        FracPoly { terms: Vec::new() }
    }

    pub fn constant(c: f64) -> Self {
        Self::monomial(c, 0.0)
    }

    pub fn monomial(coeff: f64, exponent: f64) -> Self {
        Self::from_terms([Term::new(coeff, exponent)])
    }

    /// Builds a normalized polynomial: terms sorted, equal exponents merged,
    /// zero coefficients dropped.
    ///
    /// Panics if an exponent is negative or not finite; use
    /// [`FracPoly::try_from_terms`] for untrusted input.
    pub fn from_terms<I: IntoIterator<Item = Term>>(terms: I) -> Self {
        Self::try_from_terms(terms).expect("invalid FracPoly term")
    }

    pub fn try_from_terms<I: IntoIterator<Item = Term>>(terms: I) -> Result<Self> {
        let mut raw: Vec<Term> = terms.into_iter().collect();
        for t in &raw {
            if !t.exponent.is_finite() || t.exponent < 0.0 {
                return Err(domain(format!("FracPoly exponents must be finite and >= 0, got {}", t.exponent)));
            }
            if !t.coeff.is_finite() {
                return Err(domain(format!("non-finite FracPoly coefficient {}", t.coeff)));
            }
        }
        raw.sort_by(|a, b| a.exponent.total_cmp(&b.exponent));
        let mut out: Vec<Term> = Vec::with_capacity(raw.len());
        for t in raw {
            match out.last_mut() {
                Some(last) if same_exponent(last.exponent, t.exponent) => last.coeff += t.coeff,
                _ => out.push(t),
            }
        }
        out.retain(|t| t.coeff != 0.0 && t.coeff.abs() > DROP_TOL);
        Ok(FracPoly { terms: out })
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest exponent, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<f64> {
        self.terms.last().map(|t| t.exponent)
    }

    /// Coefficient of x^μ (zero if absent).
    pub fn coeff(&self, exponent: f64) -> f64 {
        self.terms.iter().find(|t| same_exponent(t.exponent, exponent)).map_or(0.0, |t| t.coeff)
    }

    /// True when every exponent is a nonnegative integer.
    pub fn has_integer_exponents(&self) -> bool {
        self.terms.iter().all(|t| t.exponent.fract() == 0.0)
    }

    pub fn eval(&self, x: f64) -> f64 {
        crate::summation::sum(self.terms.iter().map(|t| t.coeff * pow(x, t.exponent)))
    }

    pub fn scale(&self, c: f64) -> Self {
        Self::from_terms(self.terms.iter().map(|t| Term::new(c * t.coeff, t.exponent)))
    }

    /// Multiplies by x^μ.
    pub fn shift(&self, mu: f64) -> Self {
        Self::from_terms(self.terms.iter().map(|t| Term::new(t.coeff, t.exponent + mu)))
    }

    /// Ordinary term-wise derivative d/dx.
    ///
    /// Fails if an exponent lies in (0, 1), whose image would leave the
    /// nonnegative-exponent domain.
    pub fn derivative(&self) -> Result<Self> {
        self.try_map_terms(|t| {
            if t.exponent == 0.0 {
                Ok(None)
            } else if t.exponent < 1.0 {
                Err(domain(format!("d/dx of x^{} leaves the nonnegative-exponent domain", t.exponent)))
            } else {
                Ok(Some(Term::new(t.coeff * t.exponent, t.exponent - 1.0)))
            }
        })
    }

    /// Applies a fallible term-wise map; `Ok(None)` drops the term.
    pub fn try_map_terms<F>(&self, mut f: F) -> Result<Self>
    where
        F: FnMut(Term) -> Result<Option<Term>>,
    {
        let mut out = Vec::with_capacity(self.terms.len());
        for &t in &self.terms {
            if let Some(img) = f(t)? {
                out.push(img);
            }
        }
        Self::try_from_terms(out)
    }

    /// Largest coefficient magnitude, zero for the zero polynomial.
    pub fn max_abs_coeff(&self) -> f64 {
        self.terms.iter().fold(0.0, |m, t| m.max(t.coeff.abs()))
    }

    /// Largest coefficient-wise difference |a_μ − b_μ| over the union of
    /// exponents.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (self - other).max_abs_coeff()
    }

    /// Largest coefficient-wise relative difference, with `floor` as the
    /// absolute floor of the denominator.
    pub fn max_rel_diff(&self, other: &Self, floor: f64) -> f64 {
        let diff = self - other;
        diff.terms
            .iter()
            .map(|d| {
                let scale = self.coeff(d.exponent).abs().max(other.coeff(d.exponent).abs());
                d.coeff.abs() / scale.max(floor)
            })
            .fold(0.0, f64::max)
    }
}

impl From<FracPoly> for Vec<Term> {
    fn from(p: FracPoly) -> Self {
        p.terms
    }
}

impl TryFrom<Vec<Term>> for FracPoly {
    type Error = crate::Error;

    fn try_from(terms: Vec<Term>) -> Result<Self> {
        FracPoly::try_from_terms(terms)
    }
}

impl Add for &FracPoly {
    type Output = FracPoly;

    fn add(self, rhs: &FracPoly) -> FracPoly {
        FracPoly::from_terms(self.terms.iter().chain(&rhs.terms).copied())
    }
}

impl Sub for &FracPoly {
    type Output = FracPoly;

    fn sub(self, rhs: &FracPoly) -> FracPoly {
        let neg = rhs.terms.iter().map(|t| Term::new(-t.coeff, t.exponent));
        FracPoly::from_terms(self.terms.iter().copied().chain(neg))
    }
}

impl Add for FracPoly {
    type Output = FracPoly;

    fn add(self, rhs: FracPoly) -> FracPoly {
        &self + &rhs
    }
}

impl Sub for FracPoly {
    type Output = FracPoly;

    fn sub(self, rhs: FracPoly) -> FracPoly {
        &self - &rhs
    }
}

impl Neg for FracPoly {
    type Output = FracPoly;

    fn neg(self) -> FracPoly {
        self.scale(-1.0)
    }
}

impl Mul<f64> for &FracPoly {
    type Output = FracPoly;

    fn mul(self, c: f64) -> FracPoly {
        self.scale(c)
    }
}

impl Mul<f64> for FracPoly {
    type Output = FracPoly;

    fn mul(self, c: f64) -> FracPoly {
        self.scale(c)
    }
}

/// Polynomial in two variables, stored as a `FracPoly` in the outer
/// variable (x) whose coefficients are `FracPoly`s in the inner variable
/// (t or y).
#[derive(Debug, Clone, PartialEq, Default)]
pub struct BiPoly {
    rows: Vec<(f64, FracPoly)>,
}

impl BiPoly {
    /// Builds from (coeff, outer exponent, inner exponent) triples.
    pub fn from_triples<I: IntoIterator<Item = (f64, f64, f64)>>(triples: I) -> Self {
        let mut raw: Vec<(f64, f64, f64)> = triples.into_iter().collect();
        raw.sort_by(|a, b| a.1.total_cmp(&b.1));
        let mut rows: Vec<(f64, Vec<Term>)> = Vec::new();
        for (c, ex, ei) in raw {
            match rows.last_mut() {
                Some((e, ts)) if same_exponent(*e, ex) => ts.push(Term::new(c, ei)),
                _ => rows.push((ex, vec![Term::new(c, ei)])),
            }
        }
        let rows =
            rows.into_iter().map(|(e, ts)| (e, FracPoly::from_terms(ts))).filter(|(_, p)| !p.is_empty()).collect();
        BiPoly { rows }
    }

    pub fn rows(&self) -> &[(f64, FracPoly)] {
        &self.rows
    }

    pub fn triples(&self) -> impl Iterator<Item = (f64, f64, f64)> + '_ {
        self.rows.iter().flat_map(|(ex, p)| p.terms().iter().map(move |t| (t.coeff, *ex, t.exponent)))
    }

    /// Applies a linear operator in the inner variable to every row.
    pub fn apply_inner<F>(&self, mut op: F) -> Result<Self>
    where
        F: FnMut(&FracPoly) -> Result<FracPoly>,
    {
        let mut out = Vec::new();
        for (ex, p) in &self.rows {
            let img = op(p)?;
            out.extend(img.terms().iter().map(|t| (t.coeff, *ex, t.exponent)));
        }
        Ok(Self::from_triples(out))
    }

    /// Applies a linear operator in the outer variable, monomial by monomial.
    pub fn apply_outer<F>(&self, mut op: F) -> Result<Self>
    where
        F: FnMut(&FracPoly) -> Result<FracPoly>,
    {
        let mut out = Vec::new();
        for (c, ex, ei) in self.triples() {
            let img = op(&FracPoly::monomial(c, ex))?;
            out.extend(img.terms().iter().map(|t| (t.coeff, t.exponent, ei)));
        }
        Ok(Self::from_triples(out))
    }

    pub fn scale(&self, c: f64) -> Self {
        Self::from_triples(self.triples().map(|(k, ex, ei)| (c * k, ex, ei)))
    }

    pub fn eval(&self, x: f64, t: f64) -> f64 {
        crate::summation::sum(self.triples().map(|(c, ex, ei)| c * pow(x, ex) * pow(t, ei)))
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.triples().fold(0.0, |m, (c, _, _)| m.max(c.abs()))
    }

    /// Largest coefficient-wise difference between two bivariate polynomials.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let neg = other.triples().map(|(c, ex, ei)| (-c, ex, ei));
        Self::from_triples(self.triples().chain(neg)).max_abs_coeff()
    }
}
