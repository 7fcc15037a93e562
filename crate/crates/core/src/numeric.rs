//! Scalar numerics shared across modules: log-spaced grids, monotone
//! root bracketing, golden-section maximization, least-squares slopes.

use crate::error::{Error, Result};

/// `n` points spaced geometrically from `lo` to `hi` inclusive.
pub fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    assert!(lo > 0.0 && hi > lo && n >= 2, "degenerate log grid");
    let (a, b) = (lo.ln(), hi.ln());
    (0..n)
        .map(|i| (a + (b - a) * i as f64 / (n - 1) as f64).exp())
        .collect()
}

/// Solve `g(t) = y` for a nondecreasing `g` with `g(0) = 0`.
///
/// Brackets by geometric expansion starting from `[1e-30, 1]`, then
/// bisects in log coordinates to relative tolerance 1e-12 (200-iteration
/// cap). Evaluation errors propagate out of the bracketing loop.
pub fn invert_monotone_res<F: Fn(f64) -> Result<f64>>(g: F, y: f64) -> Result<f64> {
    if y < 0.0 {
        return Err(Error::Domain(format!(
            "cannot invert at negative value {y}"
        )));
    }
    if y == 0.0 {
        return Ok(0.0);
    }
    let mut lo = 1e-30_f64;
    let mut hi = 1.0_f64;
    let mut expansions = 0usize;
    while g(hi)? < y {
        lo = hi;
        hi *= 8.0;
        expansions += 1;
        if !hi.is_finite() || expansions > 400 {
            return Err(Error::Numerical(format!(
                "bracket expansion unbounded while inverting at y={y}"
            )));
        }
    }
    while g(lo)? > y {
        hi = lo;
        lo /= 8.0;
        expansions += 1;
        if lo < 1e-300 || expansions > 400 {
            return Err(Error::Numerical(format!(
                "bracket collapse while inverting at y={y}"
            )));
        }
    }
    let mut ln_lo = lo.ln();
    let mut ln_hi = hi.ln();
    for _ in 0..200 {
        if ln_hi - ln_lo <= 1e-12 {
            break;
        }
        let mid = 0.5 * (ln_lo + ln_hi);
        if g(mid.exp())? < y {
            ln_lo = mid;
        } else {
            ln_hi = mid;
        }
    }
    Ok((0.5 * (ln_lo + ln_hi)).exp())
}

/// Maximize `f` on `[lo, hi]` by golden-section search; returns `(x, f(x))`.
pub fn golden_max<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, iters: usize) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let (mut a, mut b) = (lo, hi);
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..iters {
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    let x = 0.5 * (a + b);
    (x, f(x))
}

/// Least-squares slope of `ys` against `xs`.
pub fn ls_slope(xs: &[f64], ys: &[f64]) -> f64 {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    for (&x, &y) in xs.iter().zip(ys) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
    }
    sxy / sxx
}
