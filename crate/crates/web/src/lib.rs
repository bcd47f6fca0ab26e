//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Each operation samples a curve on `points` evenly spaced abscissae from
//! `x_min` to `x_max` and returns the ordinates. The plain functions are the
//! testable core; the `#[wasm_bindgen]` wrappers only convert errors.

use mlpoly::fokker_planck::{diffusion_profile, uniform_grid, DiffusionInitial, DiffusionProblem};
use mlpoly::fractional_hermite::HermiteSpec;
use mlpoly::mittag_leffler::relaxation_cole_cole;
use wasm_bindgen::prelude::*;

pub const MAX_POINTS: usize = 2000;

fn grid(x_min: f64, x_max: f64, points: usize) -> Result<Vec<f64>, String> {
    if points > MAX_POINTS {
        return Err(format!("at most {MAX_POINTS} points"));
    }
    uniform_grid(x_min, x_max, points).map_err(|e| e.to_string())
}

/// Cole-Cole relaxation E_α[−(t/τ)^α] for t in [0, t_max].
pub fn relaxation(alpha: f64, tau: f64, t_max: f64, points: usize) -> Result<Vec<f64>, String> {
    grid(0.0, t_max, points)?
        .into_iter()
        .map(|t| relaxation_cole_cole(alpha, tau, t).map_err(|e| e.to_string()))
        .collect()
}

/// _αH_n(x, y) over [x_min, x_max].
pub fn hermite(n: usize, alpha: f64, y: f64, x_min: f64, x_max: f64, points: usize) -> Result<Vec<f64>, String> {
    let spec = HermiteSpec::new(n, alpha, y).map_err(|e| e.to_string())?;
    Ok(grid(x_min, x_max, points)?.into_iter().map(|x| spec.eval(x)).collect())
}

/// Time-fractional diffusion from the datum H_n(x, a) (`umbral = false`) or
/// _αH_n(x, a) (`umbral = true`), profile at time t.
#[allow(clippy::too_many_arguments)]
pub fn diffusion(
    n: usize,
    alpha: f64,
    a: f64,
    k: f64,
    t: f64,
    umbral: bool,
    x_min: f64,
    x_max: f64,
    points: usize,
) -> Result<Vec<f64>, String> {
    let initial = if umbral { DiffusionInitial::Fhp { n, a } } else { DiffusionInitial::Hermite { n, a } };
    let prob = DiffusionProblem::new(alpha, k, initial).map_err(|e| e.to_string())?;
    let profile = diffusion_profile(&prob, grid(x_min, x_max, points)?, t, 0).map_err(|e| e.to_string())?;
    Ok(profile.values().to_vec())
}

#[wasm_bindgen(js_name = relaxation)]
pub fn relaxation_js(alpha: f64, tau: f64, t_max: f64, points: usize) -> Result<Vec<f64>, JsError> {
    relaxation(alpha, tau, t_max, points).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = hermite)]
pub fn hermite_js(n: usize, alpha: f64, y: f64, x_min: f64, x_max: f64, points: usize) -> Result<Vec<f64>, JsError> {
    hermite(n, alpha, y, x_min, x_max, points).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = diffusion)]
#[allow(clippy::too_many_arguments)]
pub fn diffusion_js(
    n: usize,
    alpha: f64,
    a: f64,
    k: f64,
    t: f64,
    umbral: bool,
    x_min: f64,
    x_max: f64,
    points: usize,
) -> Result<Vec<f64>, JsError> {
    diffusion(n, alpha, a, k, t, umbral, x_min, x_max, points).map_err(|e| JsError::new(&e))
}
