//! Acceptance criteria 1-11. Runs without the libtest harness so every
//! criterion prints one PASS/FAIL line; any failure exits nonzero.

use std::process::Command;
use std::time::{Duration, Instant};

use mlpoly::caputo::{caputo_l1, caputo_poly};
use mlpoly::fokker_planck::{
    laguerre_monomial_terms, laguerre_subordinated_terms, residual_laguerre, residual_tf_diffusion,
};
use mlpoly::fractional_hermite::{
    convolution_identity_i_rhs, convolution_identity_ii_rhs, fhp_coeffs, fhp_eval, fhp_oplus_eval, umbral_hermite_shift,
};
use mlpoly::gamma::gamma;
use mlpoly::mittag_leffler::ml_one_poly;
use mlpoly::ml_polynomials::{
    konhauser, mlp_coeffs_y, mlp_egf_closed, mlp_eval, mlp_ogf_closed, mlp_operational_check,
};
use mlpoly::sheffer::{appell_a_fhp, appell_a_mlp, basis, ladder_series, lowering_apply, raising_apply};
use mlpoly::{FracPoly, Term};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<f64, String>;

fn fact(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

fn choose(n: usize, k: usize) -> f64 {
    fact(n) / (fact(k) * fact(n - k))
}

fn classical_hermite(n: usize, x: f64, y: f64) -> f64 {
    (0..=n / 2).map(|r| fact(n) / (fact(n - 2 * r) * fact(r)) * x.powi((n - 2 * r) as i32) * y.powi(r as i32)).sum()
}

fn laguerre(n: usize, x: f64) -> f64 {
    (0..=n).map(|k| (-1f64).powi(k as i32) * choose(n, k) * x.powi(k as i32) / fact(k)).sum()
}

/// Σ_{r<200} z^r/Γ(β+αr) for the small arguments used here.
fn ml_series(alpha: f64, beta: f64, z: f64) -> f64 {
    (0..200).map(|r| z.powi(r) / gamma(beta + alpha * r as f64)).sum()
}

fn wright_series(alpha: f64, beta: f64, z: f64) -> f64 {
    (0..120).map(|r| z.powi(r) / (fact(r as usize) * gamma(beta + alpha * r as f64))).sum()
}

fn rel(got: f64, want: f64, floor: f64) -> f64 {
    (got - want).abs() / want.abs().max(floor)
}

fn poly_err(got: &FracPoly, want: &FracPoly) -> f64 {
    got.max_abs_diff(want) / want.max_abs_coeff().max(1.0)
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn low_order_forms() -> Check {
    let mut worst = 0.0f64;
    for alpha in [0.25, 0.5, 0.75, 1.0] {
        for y in [-1.3, 0.4, 2.0] {
            let g = gamma(1.0 + alpha);
            let forms = [
                FracPoly::constant(1.0),
                FracPoly::monomial(1.0, 1.0),
                FracPoly::from_terms([Term::new(1.0, 2.0), Term::new(2.0 * y / g, 0.0)]),
                FracPoly::from_terms([Term::new(1.0, 3.0), Term::new(6.0 * y / g, 1.0)]),
            ];
            for (n, want) in forms.iter().enumerate() {
                let got = fhp_coeffs(n, alpha, y).map_err(err)?;
                if got.len() != want.len() {
                    return Err(format!("n={n}: {} terms, expected {}", got.len(), want.len()));
                }
                worst = worst.max(got.max_abs_diff(want));
            }
        }
    }
    Ok(worst)
}

fn classical_reductions() -> Check {
    let mut worst = 0.0f64;
    for n in 0..=15 {
        for (x, y) in [(0.3, -0.7), (1.2, 0.5), (-1.5, 1.1), (0.0, -2.0)] {
            worst = worst.max(rel(fhp_eval(n, 1.0, x, y).map_err(err)?, classical_hermite(n, x, y), 1.0));
        }
    }
    for n in 0..=10 {
        for x in [0.0, 0.5, 1.0, 3.0, 7.5] {
            worst = worst.max(rel(konhauser(n, 1.0, 1.0, x, 1.0).map_err(err)?, laguerre(n, x), 1.0));
        }
    }
    Ok(worst)
}

fn fhp_egf() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut worst = 0.0f64;
    for i in 0..100 {
        let alpha = [0.4, 0.6, 0.9][i % 3];
        let (x, y): (f64, f64) = (rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0));
        let lambda: f64 = rng.gen_range(-0.4..=0.4);
        let mut sum = 0.0;
        for n in 0..=30 {
            sum += lambda.powi(n as i32) / fact(n) * fhp_eval(n, alpha, x, y).map_err(err)?;
        }
        let closed = (x * lambda).exp() * ml_series(alpha, 1.0, y * lambda * lambda);
        worst = worst.max((sum - closed).abs());
    }
    Ok(worst)
}

fn convolution_identities() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut worst = 0.0f64;
    for identity in 0..2 {
        for _ in 0..50 {
            let (x, a, w): (f64, f64, f64) =
                (rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            let alpha: f64 = rng.gen_range(0.1..0.95);
            for n in 0..=12 {
                let (lhs, rhs) = if identity == 0 {
                    (umbral_hermite_shift(n, x, a, w, alpha), convolution_identity_i_rhs(n, x, a, w, alpha))
                } else {
                    (fhp_oplus_eval(n, x, w, a, alpha), convolution_identity_ii_rhs(n, x, a, w, alpha))
                };
                let (lhs, rhs) = (lhs.map_err(err)?, rhs.map_err(err)?);
                worst = worst.max(rel(lhs, rhs, 1e-3));
            }
        }
    }
    Ok(worst)
}

fn mlp_generating_functions() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut worst = 0.0f64;
    for _ in 0..30 {
        let (alpha, beta): (f64, f64) = (rng.gen_range(0.2..1.5), rng.gen_range(0.5..2.5));
        let (x, y): (f64, f64) = (rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        let lambda = rng.gen_range(-0.5..0.5) / y.abs().max(1.0);
        let mut ogf = 0.0;
        for n in 0..=40 {
            ogf += lambda.powi(n as i32) * mlp_eval(n, alpha, beta, x, y).map_err(err)?;
        }
        let q = 1.0 - lambda * y;
        let oracle = ml_series(alpha, beta, -lambda * x / q) / q;
        worst = worst.max((ogf - oracle).abs());
        worst = worst.max((ogf - mlp_ogf_closed(lambda, alpha, beta, x, y).map_err(err)?).abs());

        let lambda: f64 = rng.gen_range(-0.5..0.5);
        let mut egf = 0.0;
        for n in 0..=30 {
            egf += lambda.powi(n as i32) / fact(n) * mlp_eval(n, alpha, beta, x, y).map_err(err)?;
        }
        let oracle = (lambda * y).exp() * wright_series(alpha, beta, -lambda * x);
        worst = worst.max((egf - oracle).abs());
        worst = worst.max((egf - mlp_egf_closed(lambda, alpha, beta, x, y).map_err(err)?).abs());
    }
    Ok(worst)
}

fn operational_form() -> Check {
    let grid: Vec<f64> = (0..=20).map(|i| i as f64 * 0.1).collect();
    let mut worst = 0.0f64;
    for alpha in [0.3, 0.5, 0.9] {
        for y in [0.5, 1.0, 2.0] {
            for n in 0..=8 {
                let (lhs, rhs) = mlp_operational_check(n, alpha, y, n, &grid).map_err(err)?;
                let scale = lhs.iter().fold(1.0f64, |m, v| m.max(v.abs()));
                for (l, r) in lhs.iter().zip(&rhs) {
                    worst = worst.max((l - r).abs() / scale);
                }
            }
        }
    }
    Ok(worst)
}

/// Fails outright on an eigenfunction error above 1e-13; returns the worst L1 order deviation.
fn caputo_checks() -> Check {
    let mut worst = 0.0f64;
    for a in [-1.5, 0.5, 2.0] {
        for alpha in [0.3, 0.5, 0.8] {
            let lhs = caputo_poly(&ml_one_poly(alpha, a, 30), alpha).map_err(err)?;
            let rhs = ml_one_poly(alpha, a, 29).scale(a);
            if lhs.len() != rhs.len() {
                return Err("eigenfunction truncation lengths differ".into());
            }
            worst = worst.max(lhs.max_rel_diff(&rhs, 1e-300));
        }
    }
    if worst > 1e-13 {
        return Err(format!("eigenfunction error {worst:e}"));
    }
    let mut order_dev = 0.0f64;
    for gam in [0.7, 2.3] {
        for alpha in [0.3, 0.5, 0.8] {
            let exact = gamma(1.0 + gam) / gamma(1.0 + gam - alpha);
            let errs: Vec<f64> = (0..5)
                .map(|k| {
                    let n = 64usize << k;
                    let h = 1.0 / n as f64;
                    let samples: Vec<f64> = (0..=n).map(|i| (i as f64 * h).powf(gam)).collect();
                    caputo_l1(&samples, h, alpha, n).map(|v| (v - exact).abs()).map_err(err)
                })
                .collect::<Result<_, _>>()?;
            for w in errs.windows(2) {
                order_dev = order_dev.max(((w[0] / w[1]).log2() - (2.0 - alpha)).abs());
            }
        }
    }
    Ok(order_dev)
}

fn pde_residuals() -> Check {
    let mut worst = 0.0f64;
    for alpha in [0.3, 0.5, 0.8] {
        for n in 0..=10 {
            worst = worst.max(residual_tf_diffusion(n, alpha, 1.0).map_err(err)?);
        }
        for beta in [0.3, 0.5, 0.8] {
            for n in 0..=6 {
                worst = worst.max(residual_laguerre(n, alpha, beta, 1.0).map_err(err)?);
            }
        }
    }
    Ok(worst)
}

fn subordination_chain() -> Check {
    let mut worst = 0.0f64;
    for (alpha, beta, b, x, t) in [(0.3, 0.5, 1.0, 0.8, 0.5), (0.5, 0.8, 0.7, 1.5, 1.2), (0.8, 0.3, 1.4, 0.2, 2.0)] {
        for n in 0..=8 {
            let direct = laguerre_monomial_terms(n, alpha, beta, b, x, t).map_err(err)?;
            let sub = laguerre_subordinated_terms(n, alpha, beta, b, x, t).map_err(err)?;
            if direct.len() != sub.len() {
                return Err(format!("n={n}: term counts differ"));
            }
            for (d, m) in direct.iter().zip(&sub) {
                worst = worst.max(rel(*m, *d, 1e-300));
            }
        }
    }
    Ok(worst)
}

fn sheffer_ladder() -> Check {
    let mut worst = 0.0f64;
    let mut fhp_g = Vec::new();
    for (alpha, y) in [(0.3, 1.0), (0.5, -0.5), (0.8, 2.0)] {
        let g = ladder_series(&appell_a_fhp(alpha, y, 12).map_err(err)?).map_err(err)?;
        for n in 0..=10 {
            let p = fhp_coeffs(n, alpha, y).map_err(err)?;
            worst =
                worst.max(poly_err(&raising_apply(&p, &g).map_err(err)?, &fhp_coeffs(n + 1, alpha, y).map_err(err)?));
            if n > 0 {
                let want = fhp_coeffs(n - 1, alpha, y).map_err(err)?.scale(n as f64);
                worst = worst.max(poly_err(&lowering_apply(&p).map_err(err)?, &want));
            }
        }
        fhp_g.push(g);
    }
    for (alpha, beta, x) in [(0.3, 1.0, 0.7), (0.6, 1.2, -1.0), (0.9, 0.5, 0.4)] {
        let g = ladder_series(&appell_a_mlp(alpha, beta, x, 12).map_err(err)?).map_err(err)?;
        for n in 0..=10 {
            let p = mlp_coeffs_y(n, alpha, beta, x).map_err(err)?;
            let up = mlp_coeffs_y(n + 1, alpha, beta, x).map_err(err)?;
            worst = worst.max(poly_err(&raising_apply(&p, &g).map_err(err)?, &up));
            if n > 0 {
                let want = mlp_coeffs_y(n - 1, alpha, beta, x).map_err(err)?.scale(n as f64);
                worst = worst.max(poly_err(&lowering_apply(&p).map_err(err)?, &want));
            }
        }
        fhp_g.push(g);
    }
    for g in &fhp_g {
        for k in 0..=10 {
            let p = basis(k);
            let pm = lowering_apply(&raising_apply(&p, g).map_err(err)?).map_err(err)?;
            let mp = raising_apply(&lowering_apply(&p).map_err(err)?, g).map_err(err)?;
            worst = worst.max((&pm - &mp).max_abs_diff(&p));
        }
    }
    Ok(worst)
}

fn cli_determinism() -> Check {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_mlpoly"))
            .args(["verify", "--suite", "all", "--seed", "42"])
            .env_remove("MLPOLY_CONFIG")
            .output()
            .map_err(err)
    };
    let (first, second) = (run()?, run()?);
    for out in [&first, &second] {
        if out.status.code() != Some(0) {
            return Err(format!("exit {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stdout)));
        }
    }
    if first.stdout != second.stdout || first.stdout.is_empty() {
        return Err("reports differ between runs".into());
    }
    Ok(0.0)
}

struct Criterion {
    id: u32,
    name: &'static str,
    tol: f64,
    limit: Duration,
    check: fn() -> Check,
}

fn main() {
    let secs = Duration::from_secs;
    let criteria = [
        Criterion { id: 1, name: "low-order closed forms", tol: 1e-12, limit: secs(1), check: low_order_forms },
        Criterion { id: 2, name: "classical reductions", tol: 1e-10, limit: secs(1), check: classical_reductions },
        Criterion { id: 3, name: "fhp egf", tol: 1e-10, limit: secs(5), check: fhp_egf },
        Criterion { id: 4, name: "convolution identities", tol: 1e-9, limit: secs(5), check: convolution_identities },
        Criterion {
            id: 5,
            name: "mlp generating functions",
            tol: 1e-9,
            limit: secs(5),
            check: mlp_generating_functions,
        },
        Criterion { id: 6, name: "operational form", tol: 1e-10, limit: secs(2), check: operational_form },
        Criterion { id: 7, name: "caputo eigenfunction and l1 order", tol: 0.3, limit: secs(10), check: caputo_checks },
        Criterion { id: 8, name: "pde residuals", tol: 1e-10, limit: secs(5), check: pde_residuals },
        Criterion { id: 9, name: "subordination chain", tol: 1e-13, limit: secs(1), check: subordination_chain },
        Criterion { id: 10, name: "sheffer ladder", tol: 1e-9, limit: secs(2), check: sheffer_ladder },
        Criterion { id: 11, name: "cli determinism", tol: 0.0, limit: secs(30), check: cli_determinism },
    ];
    let mut failures = 0;
    for c in &criteria {
        let start = Instant::now();
        let result = (c.check)();
        let elapsed = start.elapsed();
        let verdict = match &result {
            Ok(e) if *e <= c.tol && elapsed <= c.limit => Ok(*e),
            Ok(e) if *e > c.tol => Err(format!("max_err={e:e} exceeds tol")),
            Ok(_) => Err("over time limit".to_string()),
            Err(msg) => Err(msg.clone()),
        };
        let timing = format!("{:.3}s/{}s", elapsed.as_secs_f64(), c.limit.as_secs());
        match verdict {
            Ok(e) => println!("PASS criterion {:>2} {}: max_err={e:.3e} tol={:e} time={timing}", c.id, c.name, c.tol),
            Err(msg) => {
                failures += 1;
                println!("FAIL criterion {:>2} {}: {msg} tol={:e} time={timing}", c.id, c.name, c.tol);
            }
        }
    }
    println!("acceptance: {} passed, {failures} failed", criteria.len() - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
