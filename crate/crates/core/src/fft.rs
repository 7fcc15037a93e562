//! FFT plumbing: conversion between uniform circle samples and Fourier
//! coefficients in the standard layout (index k holds mode n = k for
//! k < N/2 and n = k - N otherwise).

use num_complex::Complex64;
use rustfft::FftPlanner;
use std::cell::RefCell;

thread_local! {
    static PLANNER: RefCell<FftPlanner<f64>> = RefCell::new(FftPlanner::new());
}

/// Fourier coefficients of `samples`: c[k] = (1/N) sum_j x_j e^{-2πi jk/N}.
pub fn coeffs_from_samples(samples: &[Complex64]) -> Vec<Complex64> {
    let n = samples.len();
    let mut buf = samples.to_vec();
    PLANNER.with(|p| {
        let fft = p.borrow_mut().plan_fft_forward(n);
        fft.process(&mut buf);
    });
    let scale = 1.0 / n as f64;
    for c in &mut buf {
        *c *= scale;
    }
    buf
}

/// Samples from coefficients: x_j = sum_k c[k] e^{+2πi jk/N}.
pub fn samples_from_coeffs(coeffs: &[Complex64]) -> Vec<Complex64> {
    let n = coeffs.len();
    let mut buf = coeffs.to_vec();
    PLANNER.with(|p| {
        let fft = p.borrow_mut().plan_fft_inverse(n);
        fft.process(&mut buf);
    });
    buf
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let n = 64;
        let samples: Vec<Complex64> = (0..n)
            .map(|j| {
                let t = 2.0 * std::f64::consts::PI * j as f64 / n as f64;
                Complex64::new(t.cos() + 0.3 * (3.0 * t).sin(), 0.2 * (2.0 * t).cos())
            })
            .collect();
        let back = samples_from_coeffs(&coeffs_from_samples(&samples));
        for (a, b) in samples.iter().zip(&back) {
            assert!((a - b).norm() < 1e-12);
        }
    }

    #[test]
    fn single_mode() {
        let n = 32;
        let samples: Vec<Complex64> = (0..n)
            .map(|j| {
                let t = 2.0 * std::f64::consts::PI * j as f64 / n as f64;
                Complex64::from_polar(1.0, t)
            })
            .collect();
        let c = coeffs_from_samples(&samples);
        assert!((c[1] - Complex64::new(1.0, 0.0)).norm() < 1e-13);
        for (k, v) in c.iter().enumerate() {
            if k != 1 {
                assert!(v.norm() < 1e-13, "leak at {k}");
            }
        }
    }
}
