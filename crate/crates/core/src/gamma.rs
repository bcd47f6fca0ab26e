//! Gamma-function machinery.
//!
//! Log-gamma and Γ use a 14-term Lanczos sum (g = 671/128). The reciprocal
//! gamma is entire and returns exact zeros at the poles of Γ, which lets
//! series such as E_{α,0} drop their r = 0 term without special cases.

use std::f64::consts::PI;

use crate::config::GAMMA_RATIO_DIRECT_MAX;
use crate::error::{domain, Error, Result};

const LANCZOS_SHIFT: f64 = 5.242_187_5;
const LANCZOS_C0: f64 = 0.999_999_999_999_997_1;
const LANCZOS_COEFFS: [f64; 14] = [
    57.156_235_665_862_92,
    -59.597_960_355_475_49,
    14.136_097_974_741_747,
    -0.491_913_816_097_620_2,
    0.339_946_499_848_118_9e-4,
    0.465_236_289_270_485_8e-4,
    -0.983_744_753_048_795_6e-4,
    0.158_088_703_224_912_5e-3,
    -0.210_264_441_724_104_9e-3,
    0.217_439_618_115_212_6e-3,
    -0.164_318_106_536_763_9e-3,
    0.844_182_239_838_527_4e-4,
    -0.261_908_384_015_814_1e-4,
    0.368_991_826_595_316_2e-5,
];
const SQRT_2PI: f64 = 2.506_628_274_631_000_5;

/// n! for n = 0..=22, all exactly representable.
const FACTORIALS: [f64; 23] = [
    1.0,
    1.0,
    2.0,
    6.0,
    24.0,
    120.0,
    720.0,
    5040.0,
    40320.0,
    362880.0,
    3628800.0,
    39916800.0,
    479001600.0,
    6227020800.0,
    87178291200.0,
    1307674368000.0,
    20922789888000.0,
    355687428096000.0,
    6402373705728000.0,
    121645100408832000.0,
    2432902008176640000.0,
    51090942171709440000.0,
    1124000727777607680000.0,
];

/// Largest argument for which Γ(x) is finite in f64.
const GAMMA_OVERFLOW: f64 = 171.6;

fn lanczos_series(x: f64) -> f64 {
    let mut y = x;
    let mut ser = LANCZOS_C0;
    for c in LANCZOS_COEFFS {
        y += 1.0;
        ser += c / y;
    }
    ser
}

pub(crate) fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x.fract() == 0.0
}

/// sin(πx) with exact zeros at the integers.
fn sin_pi(x: f64) -> f64 {
    let r = x.rem_euclid(2.0);
    let (r, sign) = if r >= 1.0 { (r - 1.0, -1.0) } else { (r, 1.0) };
    if r == 0.0 {
        return 0.0;
    }
    let s = if r > 0.5 { (PI * (1.0 - r)).sin() } else { (PI * r).sin() };
    sign * s
}

/// n! as f64; exact for n ≤ 22.
pub fn factorial(n: usize) -> f64 {
    if n < FACTORIALS.len() {
        FACTORIALS[n]
    } else {
        gamma(n as f64 + 1.0)
    }
}

/// Ordinary binomial coefficient C(n, k) as f64.
pub fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut acc = 1.0;
    for i in 0..k {
        acc = acc * (n - i) as f64 / (i + 1) as f64;
    }
    acc.round()
}

/// ln Γ(x) for x > 0.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(domain(format!("ln_gamma requires a finite x > 0, got {x}")));
    }
    Ok(ln_gamma_pos(x))
}

fn ln_gamma_pos(x: f64) -> f64 {
    if x == 1.0 || x == 2.0 {
        return 0.0;
    }
    if x.fract() == 0.0 && x < FACTORIALS.len() as f64 {
        return FACTORIALS[x as usize - 1].ln();
    }
    let tmp = x + LANCZOS_SHIFT;
    (x + 0.5) * tmp.ln() - tmp + (SQRT_2PI * lanczos_series(x) / x).ln()
}

/// Γ(x). Returns NaN at the poles x = 0, −1, −2, ….
pub fn gamma(x: f64) -> f64 {
    if x.is_nan() || is_nonpositive_integer(x) {
        return f64::NAN;
    }
    if x.fract() == 0.0 && x > 0.0 && x <= FACTORIALS.len() as f64 {
        return FACTORIALS[x as usize - 1];
    }
    if x < 0.5 {
        return PI / (sin_pi(x) * gamma(1.0 - x));
    }
    if x > GAMMA_OVERFLOW {
        return f64::INFINITY;
    }
    let tmp = x + LANCZOS_SHIFT;
    // split the power so that tmp^(x+1/2) does not overflow before e^-tmp
    let half = tmp.powf(0.5 * (x + 0.5));
    SQRT_2PI * lanczos_series(x) / x * (half * (-tmp).exp()) * half
}

/// 1/Γ(x), an entire function. Exactly zero at x = 0, −1, −2, ….
pub fn rgamma(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if is_nonpositive_integer(x) {
        return 0.0;
    }
    if x < 0.5 {
        let one_minus = 1.0 - x;
        if one_minus <= GAMMA_OVERFLOW {
            return sin_pi(x) * gamma(one_minus) / PI;
        }
        let s = sin_pi(x);
        return s.signum() * (s.abs().ln() + ln_gamma_pos(one_minus) - PI.ln()).exp();
    }
    if x <= GAMMA_OVERFLOW {
        return 1.0 / gamma(x);
    }
    (-ln_gamma_pos(x)).exp()
}

/// Π Γ(num_i) / Π Γ(den_i).
///
/// Small arguments are evaluated directly; once any argument exceeds
/// [`GAMMA_RATIO_DIRECT_MAX`] and all arguments are positive the ratio is
/// taken as exp of log-gamma differences so that it cannot overflow.
pub fn gamma_ratio(num: &[f64], den: &[f64]) -> f64 {
    let all = num.iter().chain(den);
    let positive = all.clone().all(|&a| a > 0.0);
    let large = all.clone().any(|&a| a > GAMMA_RATIO_DIRECT_MAX);
    if positive && large {
        let ln: f64 =
            num.iter().map(|&a| ln_gamma_pos(a)).sum::<f64>() - den.iter().map(|&a| ln_gamma_pos(a)).sum::<f64>();
        return ln.exp();
    }
    let n: f64 = num.iter().map(|&a| gamma(a)).product();
    let d: f64 = den.iter().map(|&a| rgamma(a)).product();
    n * d
}

fn check_alpha_unit(alpha: f64, closed_right: bool) -> Result<()> {
    let ok = alpha > 0.0 && if closed_right { alpha <= 1.0 } else { alpha < 1.0 };
    if ok {
        Ok(())
    } else {
        let range = if closed_right { "(0, 1]" } else { "(0, 1)" };
        Err(domain(format!("alpha must lie in {range}, got {alpha}")))
    }
}

/// The fractional binomial Γ(1+αn) / [Γ(1+αr) Γ(1+α(n−r))].
pub fn frac_binom(n: usize, r: usize, alpha: f64) -> Result<f64> {
    if r > n {
        return Err(domain(format!("frac_binom needs r <= n, got n={n}, r={r}")));
    }
    check_alpha_unit(alpha, true)?;
    if r == 0 || r == n {
        return Ok(1.0);
    }
    let (n, r) = (n as f64, r as f64);
    Ok(gamma_ratio(&[1.0 + alpha * n], &[1.0 + alpha * r, 1.0 + alpha * (n - r)]))
}

/// Stieltjes moment M_α(σ) = Γ(1 − σ/α) / Γ(1 − σ) of the one-sided Lévy
/// stable law, 0 < α < 1.
pub fn stieltjes_moment(alpha: f64, sigma: f64) -> Result<f64> {
    check_alpha_unit(alpha, false)?;
    let num = 1.0 - sigma / alpha;
    let den = 1.0 - sigma;
    match (is_nonpositive_integer(num), is_nonpositive_integer(den)) {
        (true, true) => Err(Error::Indeterminate(format!("M_{alpha}({sigma}): both Γ({num}) and Γ({den}) are poles"))),
        (true, false) => Err(Error::Pole(format!("M_{alpha}({sigma}) diverges: Γ({num}) is a pole"))),
        _ => Ok(gamma_ratio(&[num], &[den])),
    }
}

/// ∫ n_β(s,t) s^m ds = m! t^{βm} / Γ(1+βm).
pub fn levy_subordination_moment(beta: f64, m: usize, t: f64) -> Result<f64> {
    check_alpha_unit(beta, false)?;
    if !(t > 0.0) {
        return Err(domain(format!("t must be positive, got {t}")));
    }
    if m == 0 {
        return Ok(1.0);
    }
    let bm = beta * m as f64;
    Ok(gamma_ratio(&[1.0 + m as f64], &[1.0 + bm]) * t.powf(bm))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Independent ln Γ: shift the argument above 40 and use the Stirling
    /// series with Bernoulli terms up to B_16.
    fn ln_gamma_stirling(x: f64) -> f64 {
        let mut shift = 0.0;
        let mut z = x;
        while z < 40.0 {
            shift += z.ln();
            z += 1.0;
        }
        let b = [
            1.0 / 12.0,
            -1.0 / 360.0,
            1.0 / 1260.0,
            -1.0 / 1680.0,
            1.0 / 1188.0,
            -691.0 / 360360.0,
            1.0 / 156.0,
            -3617.0 / 122400.0,
        ];
        let mut corr = 0.0;
        let z2 = z * z;
        let mut zp = z;
        for c in b {
            corr += c / zp;
            zp *= z2;
        }
        (z - 0.5) * z.ln() - z + 0.5 * (2.0 * PI).ln() + corr - shift
    }

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs().max(1e-300)
    }

    #[test]
    fn ln_gamma_trivial_values() {
        assert_eq!(ln_gamma(1.0).unwrap(), 0.0);
        assert_eq!(ln_gamma(2.0).unwrap(), 0.0);
        let half = ln_gamma(0.5).unwrap();
        assert!(rel(half, PI.sqrt().ln()) < 1e-14);
        assert!(rel(half, 0.572_364_942_924_700_1) < 1e-14);
    }

    #[test]
    fn ln_gamma_matches_stirling_oracle() {
        // 7.25 frozen from a 50-digit evaluation as well
        assert!(rel(ln_gamma(7.25).unwrap(), 7.052_185_450_738_539) < 1e-14);
        assert!(rel(ln_gamma_stirling(7.25), 7.052_185_450_738_539) < 1e-14);
        assert!(rel(ln_gamma(123.4).unwrap(), 469.336_097_442_190_6) < 1e-14);
        assert!(rel(ln_gamma(0.001).unwrap(), 6.907_178_885_383_854) < 1e-13);
        for i in 1..400 {
            let x = 0.05 + 0.37 * i as f64;
            let got = ln_gamma(x).unwrap();
            let want = ln_gamma_stirling(x);
            let err = (got - want).abs() / want.abs().max(1.0);
            assert!(err < 1e-13, "x={x}: {got} vs {want}");
        }
    }

    #[test]
    fn ln_gamma_rejects_nonpositive() {
        assert!(matches!(ln_gamma(0.0), Err(Error::Domain(_))));
        assert!(matches!(ln_gamma(-1.5), Err(Error::Domain(_))));
        assert!(ln_gamma(f64::NAN).is_err());
    }

    #[test]
    fn rgamma_poles_are_exact_zeros() {
        for k in 0..30 {
            assert_eq!(rgamma(-(k as f64)), 0.0);
        }
        assert_eq!(rgamma(1.0), 1.0);
        assert_eq!(rgamma(2.0), 1.0);
    }

    #[test]
    fn rgamma_negative_half_integer_matches_reflection() {
        // Γ(−μ)Γ(1+μ) = −π/sin(πμ) with μ = 2.5
        let mu: f64 = 2.5;
        let oracle = -(PI * mu).sin() * gamma_oracle(1.0 + mu) / PI;
        assert!(rel(rgamma(-2.5), oracle) < 1e-13);
        assert!(rel(rgamma(-2.5), -1.057_855_469_152_043) < 1e-13);
        assert!(rel(rgamma(-0.3), -0.231_114_955_159_969_8) < 1e-13);
    }

    fn gamma_oracle(x: f64) -> f64 {
        ln_gamma_stirling(x).exp()
    }

    #[test]
    fn rgamma_times_gamma_is_one() {
        for i in 1..=100 {
            let x = 0.1 * i as f64;
            let prod = rgamma(x) * gamma_oracle(x);
            assert!((prod - 1.0).abs() < 1e-12, "x={x}: {prod}");
        }
    }

    #[test]
    fn rgamma_large_and_very_negative_arguments() {
        let v = rgamma(172.5);
        assert!(rel(v, (-ln_gamma_stirling(172.5)).exp()) < 1e-12);
        assert_eq!(rgamma(1000.0), 0.0);
        let v = rgamma(-180.5);
        assert!(v.is_infinite() || v.abs() > 1e300);
    }

    #[test]
    fn frac_binom_examples() {
        assert_eq!(frac_binom(4, 2, 1.0).unwrap(), 6.0);
        assert_eq!(frac_binom(9, 0, 0.3).unwrap(), 1.0);
        let want = (ln_gamma_stirling(3.5) - ln_gamma_stirling(2.0) - ln_gamma_stirling(2.5)).exp();
        assert!(rel(frac_binom(5, 2, 0.5).unwrap(), want) < 1e-13);
        assert!(frac_binom(2, 3, 0.5).is_err());
        assert!(frac_binom(2, 1, 1.5).is_err());
    }

    #[test]
    fn frac_binom_reduces_to_binomial() {
        for n in 0..=20 {
            for r in 0..=n {
                let got = frac_binom(n, r, 1.0).unwrap();
                let want = binomial(n, r);
                assert!(rel(got, want) < 4.0 * f64::EPSILON, "C({n},{r}) = {got}");
            }
        }
    }

    #[test]
    fn stieltjes_moment_examples() {
        assert_eq!(stieltjes_moment(0.4, 0.0).unwrap(), 1.0);
        let v = stieltjes_moment(0.5, -0.5).unwrap();
        assert!(rel(v, 1.0 / gamma_oracle(1.5)) < 1e-13);
        let v = stieltjes_moment(0.3, -0.9).unwrap();
        assert!(rel(v, 6.0 / gamma_oracle(1.9)) < 1e-13);
    }

    #[test]
    fn stieltjes_moment_pole_handling() {
        // 1 − σ/α = 0 and 1 − σ = −1 at α = 0.5, σ = 2... only the first is a pole
        assert!(matches!(stieltjes_moment(0.5, 0.5), Err(Error::Pole(_))));
        // σ = 1 with α = 0.5: Γ(−1)/Γ(0)
        assert!(matches!(stieltjes_moment(0.5, 1.0), Err(Error::Indeterminate(_))));
        assert!(stieltjes_moment(1.0, 0.2).is_err());
    }

    #[test]
    fn levy_moment_examples() {
        assert_eq!(levy_subordination_moment(0.3, 0, 2.0).unwrap(), 1.0);
        assert!(rel(levy_subordination_moment(0.5, 2, 1.0).unwrap(), 2.0) < 1e-14);
        let (b, t) = (0.7, 1.3_f64);
        let want = t.powf(b) / gamma_oracle(1.0 + b);
        assert!(rel(levy_subordination_moment(b, 1, t).unwrap(), want) < 1e-13);
        assert!(levy_subordination_moment(0.5, 1, 0.0).is_err());
    }

    proptest! {
        #[test]
        fn frac_binom_is_symmetric(n in 0usize..25, r_frac in 0.0f64..1.0, alpha in 0.05f64..1.0) {
            let r = ((n as f64) * r_frac).floor() as usize;
            let a = frac_binom(n, r, alpha).unwrap();
            let b = frac_binom(n, n - r, alpha).unwrap();
            prop_assert!(rel(a, b) < 1e-14);
        }

        #[test]
        fn stieltjes_moment_at_integer_multiples(alpha in 0.05f64..0.95, k in 0usize..15) {
            let v = stieltjes_moment(alpha, -alpha * k as f64).unwrap();
            let want = factorial(k) * rgamma(1.0 + alpha * k as f64);
            prop_assert!(rel(v, want) < 1e-12);
        }

        #[test]
        fn levy_moment_scales_with_t(beta in 0.05f64..0.95, m in 0usize..12, t in 0.01f64..5.0) {
            let v = levy_subordination_moment(beta, m, t).unwrap();
            let one = levy_subordination_moment(beta, m, 1.0).unwrap();
            prop_assert!(rel(v, t.powf(beta * m as f64) * one) < 1e-14);
        }
    }
}
