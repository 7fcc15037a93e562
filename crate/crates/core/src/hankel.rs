//! Hankel operators `h_b(g) = P(b·conj(g))`: application, coefficient
//! matrix, dictionary-based operator-norm estimation, and the
//! loss/gain boundedness experiments.

use crate::circle::luxemburg_norm;
use crate::error::{Error, Result};
use crate::growth::{ratio_inverse_compose, weight_ratio, GrowthFunction};
use crate::hardy::{bmoa_rho_norm, circle_restriction, szego_project, AnalyticFunction};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::TAU;

/// Truncated coefficient matrix `entries[j][k] = b̂(j+k)`, constant along
/// anti-diagonals by construction.
#[derive(Debug, Clone)]
pub struct HankelMatrix {
    entries: Vec<Vec<Complex64>>,
    truncation: usize,
}

impl HankelMatrix {
    pub fn entries(&self) -> &[Vec<Complex64>] {
        &self.entries
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    /// Action on a coefficient vector with the Hankel conjugation:
    /// `y_j = Σ_k entries[j][k]·conj(v_k)`.
    pub fn apply_conj(&self, v: &[Complex64]) -> Vec<Complex64> {
        let m = self.truncation;
        (0..m)
            .map(|j| {
                let mut acc = Complex64::ZERO;
                for (k, &vk) in v.iter().take(m).enumerate() {
                    acc += self.entries[j][k] * vk.conj();
                }
                acc
            })
            .collect()
    }

    fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        (0..self.truncation)
            .map(|j| {
                let mut acc = Complex64::ZERO;
                for (k, &vk) in v.iter().enumerate() {
                    acc += self.entries[j][k] * vk;
                }
                acc
            })
            .collect()
    }

    fn apply_adjoint(&self, v: &[Complex64]) -> Vec<Complex64> {
        let m = self.truncation;
        (0..m)
            .map(|k| {
                let mut acc = Complex64::ZERO;
                for (j, &vj) in v.iter().enumerate() {
                    acc += self.entries[j][k].conj() * vj;
                }
                acc
            })
            .collect()
    }

    /// Largest singular value by power iteration on `A*A` with a
    /// deterministic start vector. The Rayleigh sequence increases to
    /// σ_max, so the reference never overshoots.
    pub fn top_singular_value(&self) -> f64 {
        let m = self.truncation;
        if m == 0 {
            return 0.0;
        }
        let mut x: Vec<Complex64> = (0..m)
            .map(|k| Complex64::new(1.0 / (k + 1) as f64, 0.3 / (k + 2) as f64))
            .collect();
        let norm = |v: &[Complex64]| v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        let nx = norm(&x);
        if nx == 0.0 {
            return 0.0;
        }
        for z in &mut x {
            *z /= nx;
        }
        let mut sigma = 0.0_f64;
        for _ in 0..5000 {
            let ax = self.apply(&x);
            let new_sigma = norm(&ax);
            if new_sigma == 0.0 {
                return 0.0;
            }
            let mut next = self.apply_adjoint(&ax);
            let nn = norm(&next);
            for z in &mut next {
                *z /= nn;
            }
            x = next;
            if (new_sigma - sigma).abs() <= 1e-14 * new_sigma {
                return new_sigma;
            }
            sigma = new_sigma;
        }
        sigma
    }
}

/// `h_b(g) = P(b·conj(g))` via the boundary product; the summed degrees
/// must stay below N/2 so the product is alias-free.
pub fn hankel_apply(b: &AnalyticFunction, g: &AnalyticFunction) -> Result<AnalyticFunction> {
    if b.grid() != g.grid() {
        return Err(Error::InvalidInput(
            "grid mismatch in Hankel application".into(),
        ));
    }
    let n = b.grid();
    if b.degree() + g.degree() >= n / 2 {
        return Err(Error::Precondition(format!(
            "deg b + deg g = {} aliases at N/2 = {}",
            b.degree() + g.degree(),
            n / 2
        )));
    }
    let b_boundary = circle_restriction(b, 1.0)?;
    let g_boundary = circle_restriction(g, 1.0)?;
    let product = b_boundary.pointwise_mul(&g_boundary.map(|z| z.conj()))?;
    Ok(szego_project(&product))
}

/// Coefficient matrix of `h_b` at truncation M.
pub fn hankel_matrix(b: &AnalyticFunction, m: usize) -> Result<HankelMatrix> {
    if m == 0 || m > b.grid() / 2 {
        return Err(Error::Precondition(format!(
            "truncation {m} outside 1..=N/2 = {}",
            b.grid() / 2
        )));
    }
    let coeffs = b.coeffs();
    let entries: Vec<Vec<Complex64>> = (0..m)
        .map(|j| {
            (0..m)
                .map(|k| coeffs.get(j + k).copied().unwrap_or(Complex64::ZERO))
                .collect()
        })
        .collect();
    Ok(HankelMatrix {
        entries,
        truncation: m,
    })
}

/// Test-function dictionary for the operator-norm lower bound.
#[derive(Debug, Clone)]
pub struct DictionaryConfig {
    pub monomials: usize,
    pub kernels: bool,
    pub random: usize,
    /// Optional hard cap on dictionary degrees (used by the
    /// matrix-consistency checks).
    pub max_degree: Option<usize>,
}

impl Default for DictionaryConfig {
    fn default() -> Self {
        DictionaryConfig {
            monomials: 16,
            kernels: true,
            random: 32,
            max_degree: None,
        }
    }
}

/// Norm estimate for one symbol: the criterion-space norm of `b`, the
/// dictionary lower bound for `‖h_b‖`, and their ratio.
#[derive(Debug, Clone)]
pub struct HankelReport {
    pub family_tag: String,
    pub symbol_norm: f64,
    pub operator_estimate: f64,
    pub ratio: f64,
}

fn dictionary(
    grid: usize,
    symbol_degree: usize,
    config: &DictionaryConfig,
    seed: u64,
) -> Result<Vec<AnalyticFunction>> {
    // Stay alias-free: deg b + deg g < N/2, capped at N/4 by default.
    let capacity = (grid / 2 - 1).saturating_sub(symbol_degree).min(grid / 4);
    let cap = config.max_degree.unwrap_or(capacity).min(capacity);
    let mut dict = Vec::new();
    for k in 0..config.monomials.min(cap + 1) {
        dict.push(AnalyticFunction::monomial(k, grid)?);
    }
    if config.kernels {
        for &radius in &[0.5, 0.8, 0.9, 0.95] {
            for m in 0..8 {
                let a = Complex64::from_polar(radius, TAU * m as f64 / 8.0);
                // Reproducing kernel 1/(1 - conj(a)z) truncated at the cap.
                let mut coeffs = Vec::with_capacity(cap + 1);
                let mut pow = Complex64::ONE;
                for _ in 0..=cap {
                    coeffs.push(pow);
                    pow *= a.conj();
                }
                dict.push(AnalyticFunction::new(coeffs, grid)?);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rand_degree = cap.min(16);
    for _ in 0..config.random {
        let coeffs: Vec<Complex64> = (0..=rand_degree)
            .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
            .collect();
        dict.push(AnalyticFunction::new(coeffs, grid)?);
    }
    Ok(dict)
}

/// Dictionary maximization of `‖h_b(g)‖_{H^{Φ₂}} / ‖g‖_{H^{Φ₁}}` — a lower
/// bound on the operator norm by construction.
pub fn hankel_norm_estimate(
    b: &AnalyticFunction,
    phi1: &GrowthFunction,
    phi2: &GrowthFunction,
    config: &DictionaryConfig,
    seed: u64,
) -> Result<f64> {
    if b.max_coeff() == 0.0 {
        return Ok(0.0);
    }
    let dict = dictionary(b.grid(), b.degree(), config, seed)?;
    let mut best = 0.0_f64;
    for g in &dict {
        let ng = luxemburg_norm(&circle_restriction(g, 1.0)?, phi1)?.value;
        if ng <= 0.0 {
            continue;
        }
        let h = hankel_apply(b, g)?;
        let nh = luxemburg_norm(&circle_restriction(&h, 1.0)?, phi2)?.value;
        let ratio = nh / ng;
        if ratio > best {
            best = ratio;
        }
    }
    Ok(best)
}

/// Rows plus the ratio band `[c₁, c₂]` across a symbol family.
#[derive(Debug, Clone)]
pub struct ExperimentReport {
    pub rows: Vec<HankelReport>,
    pub band: Option<(f64, f64)>,
    /// `c₂/c₁` when the band is nonempty.
    pub spread: Option<f64>,
}

fn band_of(rows: &[HankelReport]) -> (Option<(f64, f64)>, Option<f64>) {
    let ratios: Vec<f64> = rows
        .iter()
        .filter(|r| r.symbol_norm > 0.0 && r.operator_estimate > 0.0)
        .map(|r| r.ratio)
        .collect();
    if ratios.is_empty() {
        return (None, None);
    }
    let lo = ratios.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = ratios.iter().copied().fold(0.0_f64, f64::max);
    (Some((lo, hi)), Some(hi / lo))
}

fn type_bounds(phi: &GrowthFunction, label: &str) -> Result<(f64, Option<f64>)> {
    let est = phi.estimate_types()?;
    let lower = est.lower_exponent.ok_or_else(|| {
        Error::Hypothesis(format!("{label} has no estimated lower type on the grid"))
    })?;
    Ok((lower, est.upper_exponent))
}

/// Loss-case experiment (the `H^{Φ₁} ⊂ H^{Φ₂}` regime): requires
/// `1 < p₂ ≤ q₂ < p₁`; the criterion space is `H^{Φ₃}` with
/// `Φ₃⁻¹ = Φ₂⁻¹/Φ₁⁻¹`.
pub fn loss_experiment(
    family: &[(String, AnalyticFunction)],
    phi1: &GrowthFunction,
    phi2: &GrowthFunction,
    config: &DictionaryConfig,
    seed: u64,
) -> Result<ExperimentReport> {
    let (p1, _) = type_bounds(phi1, "Φ₁")?;
    let (p2, q2) = type_bounds(phi2, "Φ₂")?;
    let q2 = q2.ok_or_else(|| Error::Hypothesis("Φ₂ has no upper type on the grid".into()))?;
    let slack = 1e-6;
    if !(p2 > 1.0 + slack && p2 <= q2 + slack && q2 < p1 - slack) {
        return Err(Error::Hypothesis(format!(
            "loss case needs 1 < p₂ ≤ q₂ < p₁, estimated p₁={p1:.4}, p₂={p2:.4}, q₂={q2:.4}"
        )));
    }
    let phi3 = ratio_inverse_compose(phi1, phi2)?;
    let mut rows = Vec::with_capacity(family.len());
    for (tag, b) in family {
        let symbol_norm = if b.max_coeff() == 0.0 {
            0.0
        } else {
            luxemburg_norm(&circle_restriction(b, 1.0)?, &phi3)?.value
        };
        let operator_estimate = hankel_norm_estimate(b, phi1, phi2, config, seed)?;
        let ratio = if symbol_norm > 0.0 {
            operator_estimate / symbol_norm
        } else {
            0.0
        };
        rows.push(HankelReport {
            family_tag: tag.clone(),
            symbol_norm,
            operator_estimate,
            ratio,
        });
    }
    let (band, spread) = band_of(&rows);
    Ok(ExperimentReport { rows, band, spread })
}

/// Gain-case experiment (the `H^{Φ₂} ⊂ H^{Φ₁}` regime): requires
/// `0 < p₁ ≤ q₁ ≤ p₂` and `1 < p₂ ≤ q₂ < ∞`; the criterion space is
/// `BMOA(ϱ)` with `ϱ = ρ₁/ρ₂`. Symbols are measured modulo constants
/// (the Hankel operator only sees `b - b̂(0)` on the zero-mean
/// complement); symbols with a nonzero mean get an extra raw row.
pub fn gain_experiment(
    family: &[(String, AnalyticFunction)],
    phi1: &GrowthFunction,
    phi2: &GrowthFunction,
    config: &DictionaryConfig,
    seed: u64,
) -> Result<ExperimentReport> {
    let (p1, q1) = type_bounds(phi1, "Φ₁")?;
    let q1 = q1.ok_or_else(|| Error::Hypothesis("Φ₁ has no upper type on the grid".into()))?;
    let (p2, q2) = type_bounds(phi2, "Φ₂")?;
    let q2 = q2.ok_or_else(|| Error::Hypothesis("Φ₂ has no upper type on the grid".into()))?;
    let slack = 1e-6;
    if !(p1 > 0.0 && p1 <= q1 + slack && q1 <= p2 + slack && p2 > 1.0 + slack && p2 <= q2 + slack) {
        return Err(Error::Hypothesis(format!(
            "gain case needs 0 < p₁ ≤ q₁ ≤ p₂ and 1 < p₂ ≤ q₂, estimated p₁={p1:.4}, q₁={q1:.4}, p₂={p2:.4}, q₂={q2:.4}"
        )));
    }
    let rho = weight_ratio(phi1, phi2);
    let mut rows = Vec::new();
    for (tag, b) in family {
        let mean = b.coeffs()[0];
        let mut centered_coeffs = b.coeffs().to_vec();
        centered_coeffs[0] = Complex64::ZERO;
        let centered = AnalyticFunction::new(centered_coeffs, b.grid())?;

        let make_row = |tag: String, symbol: &AnalyticFunction| -> Result<HankelReport> {
            let symbol_norm = if symbol.max_coeff() == 0.0 {
                0.0
            } else {
                bmoa_rho_norm(symbol, &rho)?
            };
            let operator_estimate = hankel_norm_estimate(symbol, phi1, phi2, config, seed)?;
            let ratio = if symbol_norm > 0.0 {
                operator_estimate / symbol_norm
            } else {
                0.0
            };
            Ok(HankelReport {
                family_tag: tag,
                symbol_norm,
                operator_estimate,
                ratio,
            })
        };
        rows.push(make_row(tag.clone(), &centered)?);
        if mean.norm() > 1e-14 * b.max_coeff().max(1e-300) {
            rows.push(make_row(format!("{tag}+mean"), b)?);
        }
    }
    let (band, spread) = band_of(&rows);
    Ok(ExperimentReport { rows, band, spread })
}
