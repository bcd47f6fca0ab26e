//! Number formatting shared by the CLI and the profile writers.

/// Formats like C's `%.15g`: 15 significant digits, trailing zeros removed,
/// scientific notation outside 1e-4 ≤ |v| < 1e15.
pub fn fmt_g15(v: f64) -> String {
    if v.is_nan() {
        return "nan".into();
    }
    if v.is_infinite() {
        return if v > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if v == 0.0 {
        return if v.is_sign_negative() { "-0".into() } else { "0".into() };
    }
    let sci = format!("{v:.14e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-4..15).contains(&exp) {
        let decimals = (14 - exp).max(0) as usize;
        strip_zeros(&format!("{v:.decimals$}")).to_string()
    } else {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", strip_zeros(mantissa), exp.abs())
    }
}

fn strip_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Rounds to the value `fmt_g15` prints.
pub fn round_g15(v: f64) -> f64 {
    if v.is_finite() {
        fmt_g15(v).parse().unwrap_or(v)
    } else {
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_printf() {
        let cases = [
            (std::f64::consts::E, "2.71828182845905"),
            (3.0, "3"),
            (-0.5, "-0.5"),
            (1e-5, "1e-05"),
            (1.25e-4, "0.000125"),
            (123456789012345.0, "123456789012345"),
            (1e15, "1e+15"),
            (-2.5e20, "-2.5e+20"),
            (0.1 + 0.2, "0.3"),
            (0.0, "0"),
            (9.999999999999999, "10"),
            (f64::NAN, "nan"),
            (f64::NEG_INFINITY, "-inf"),
        ];
        for (v, want) in cases {
            assert_eq!(fmt_g15(v), want, "{v:e}");
        }
    }

    #[test]
    fn rounding_is_idempotent() {
        for v in [1.0 / 3.0, std::f64::consts::PI * 1e-7, 6.02214076e23] {
            let r = round_g15(v);
            assert_eq!(round_g15(r), r);
            assert_eq!(fmt_g15(r), fmt_g15(v));
        }
    }
}
