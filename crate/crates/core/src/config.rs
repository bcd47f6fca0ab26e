//! Numerical tolerances and term budgets.
//!
//! Every tolerance used by the library lives here so that the CLI can
//! override them from a configuration file.

/// Relative accuracy promised by [`crate::gamma::ln_gamma`].
pub const LN_GAMMA_REL_TOL: f64 = 1e-13;

/// Relative accuracy promised by [`crate::gamma::rgamma`].
pub const RGAMMA_REL_TOL: f64 = 1e-12;

/// Arguments above this use log-gamma differences for Γ ratios.
pub const GAMMA_RATIO_DIRECT_MAX: f64 = 30.0;

/// Two exponents closer than this are treated as the same monomial.
pub const EXPONENT_EPS: f64 = 1e-12;

/// Coefficients with magnitude below this are dropped from a `FracPoly`.
pub const DROP_TOL: f64 = 0.0;

/// Control parameters for series evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesConfig {
    /// Hard cap on the number of terms summed.
    pub max_terms: usize,
    /// Summation stops once the last two terms are below `stop_tol * |sum|`.
    pub stop_tol: f64,
    /// Largest acceptable relative error estimate of the returned value.
    pub accuracy_tol: f64,
}

impl Default for SeriesConfig {
    fn default() -> Self {
        SeriesConfig { max_terms: 400, stop_tol: 1e-17, accuracy_tol: 1e-10 }
    }
}
