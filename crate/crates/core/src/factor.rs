//! Factorization machinery: finite Blaschke products, Riesz division by
//! the zero set, outer functions from boundary moduli, atomic singular
//! inner functions, inner-outer decomposition, and the strong Orlicz
//! factorization `G = G₁·G₂` with `Φ₃⁻¹ ~ Φ₁⁻¹·Φ₂⁻¹`.

use crate::circle::{hilbert_transform, log_modulus_clipped, luxemburg_norm, BoundaryFunction};
use crate::error::{Error, Result};
use crate::growth::{check_equivalent_fns, GrowthFunction};
use crate::hardy::{circle_restriction, hphi_norm_value, szego_project, AnalyticFunction};
use num_complex::Complex64;
use std::f64::consts::TAU;

/// Finite zero list for a Blaschke product; multiplicities by repetition.
/// All zeros must satisfy `|z_n| ≤ 1 - 1e-6`.
#[derive(Debug, Clone, Default)]
pub struct ZeroList {
    zeros: Vec<Complex64>,
}

impl ZeroList {
    pub fn new(zeros: Vec<Complex64>) -> Result<Self> {
        for z in &zeros {
            if z.norm() > 1.0 - 1e-6 || z.norm().is_nan() {
                return Err(Error::InvalidInput(format!(
                    "Blaschke zero {z} too close to the boundary (need |z| ≤ 1 - 1e-6)"
                )));
            }
        }
        Ok(ZeroList { zeros })
    }

    pub fn empty() -> Self {
        ZeroList { zeros: Vec::new() }
    }

    pub fn zeros(&self) -> &[Complex64] {
        &self.zeros
    }

    pub fn is_empty(&self) -> bool {
        self.zeros.is_empty()
    }

    pub fn len(&self) -> usize {
        self.zeros.len()
    }
}

/// Finite atomic measure on the circle: pairs (angle, positive mass).
#[derive(Debug, Clone, Default)]
pub struct AtomicMeasure {
    atoms: Vec<(f64, f64)>,
}

impl AtomicMeasure {
    pub fn new(atoms: Vec<(f64, f64)>) -> Result<Self> {
        for &(angle, mass) in &atoms {
            if !(mass > 0.0 && mass.is_finite()) {
                return Err(Error::InvalidInput(format!(
                    "atom mass must be positive, got {mass}"
                )));
            }
            if !angle.is_finite() {
                return Err(Error::InvalidInput("atom angle must be finite".into()));
            }
        }
        Ok(AtomicMeasure { atoms })
    }

    pub fn empty() -> Self {
        AtomicMeasure { atoms: Vec::new() }
    }

    pub fn atoms(&self) -> &[(f64, f64)] {
        &self.atoms
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }
}

/// One verified norm identity inside a factorization report.
#[derive(Debug, Clone)]
pub struct NormIdentity {
    pub label: String,
    pub lhs: f64,
    pub rhs: f64,
    pub ratio: f64,
}

/// Named factors plus the residuals and norm identities that certify a
/// factorization numerically.
#[derive(Debug, Clone)]
pub struct FactorizationReport {
    pub factors: Vec<(String, AnalyticFunction)>,
    pub norm_identities: Vec<NormIdentity>,
    pub reconstruction_residual: f64,
    pub warnings: Vec<String>,
}

impl FactorizationReport {
    pub fn factor(&self, name: &str) -> Option<&AnalyticFunction> {
        self.factors.iter().find(|(n, _)| n == name).map(|(_, f)| f)
    }
}

/// Blaschke product at a point of the closed disk, with the convention
/// that a zero at the origin contributes the factor `z`.
pub fn blaschke(zeros: &ZeroList, z: Complex64) -> Result<Complex64> {
    if z.norm() > 1.0 + 1e-12 {
        return Err(Error::Domain(format!(
            "|z| = {} outside the closed disk",
            z.norm()
        )));
    }
    let mut acc = Complex64::ONE;
    for &zn in zeros.zeros() {
        if zn.norm() == 0.0 {
            acc *= z;
        } else {
            acc *= (zn.norm() / zn) * (zn - z) / (Complex64::ONE - zn.conj() * z);
        }
    }
    Ok(acc)
}

/// Boundary samples of the Blaschke product on the N-point grid.
pub fn blaschke_boundary(zeros: &ZeroList, n: usize) -> Result<BoundaryFunction> {
    let samples: Vec<Complex64> = (0..n)
        .map(|j| blaschke(zeros, Complex64::from_polar(1.0, TAU * j as f64 / n as f64)))
        .collect::<Result<_>>()?;
    BoundaryFunction::from_samples(samples)
}

/// Fit the unimodular constant `c` with `target ≈ c·approx` pointwise;
/// errors when the quotient is not constant-unimodular on the grid.
fn unimodular_constant(target: &BoundaryFunction, approx: &BoundaryFunction) -> Result<Complex64> {
    let scale = target.max_abs();
    let mut acc = Complex64::ZERO;
    let mut count = 0usize;
    for (&t, &a) in target.samples().iter().zip(approx.samples()) {
        if a.norm() > 1e-9 * scale {
            acc += t / a;
            count += 1;
        }
    }
    if count == 0 {
        return Err(Error::Numerical(
            "cannot fit phase constant: factor vanishes".into(),
        ));
    }
    let c = acc / count as f64;
    if (c.norm() - 1.0).abs() > 1e-6 {
        return Err(Error::Numerical(format!(
            "factorization phase constant has modulus {:.6}, expected 1",
            c.norm()
        )));
    }
    Ok(c / c.norm())
}

/// Relative sup deviation between two boundary functions.
fn boundary_residual(a: &BoundaryFunction, b: &BoundaryFunction) -> f64 {
    let scale = a.max_abs().max(b.max_abs()).max(1e-300);
    a.samples()
        .iter()
        .zip(b.samples())
        .map(|(&x, &y)| (x - y).norm())
        .fold(0.0, f64::max)
        / scale
}

/// Riesz division `Q = G/B`. The quotient is computed spectrally: divide
/// boundary values by the unimodular `b` and project; the listed zeros
/// must actually be zeros of `G`.
pub fn divide_by_blaschke(
    g: &AnalyticFunction,
    zeros: &ZeroList,
    phi: &GrowthFunction,
) -> Result<FactorizationReport> {
    let scale = g.max_coeff();
    for &zn in zeros.zeros() {
        let v = g.evaluate(zn).norm();
        if v > 1e-8 * scale {
            return Err(Error::Precondition(format!(
                "{zn} is not a zero of G: |G(z)| = {v:.3e} vs scale {scale:.3e}"
            )));
        }
    }
    let n = g.grid();
    let g_boundary = circle_restriction(g, 1.0)?;
    let b_boundary = blaschke_boundary(zeros, n)?;
    let q_boundary = BoundaryFunction::from_samples(
        g_boundary
            .samples()
            .iter()
            .zip(b_boundary.samples())
            .map(|(&gv, &bv)| gv / bv)
            .collect(),
    )?;
    let quotient = szego_project(&q_boundary);

    let recon = circle_restriction(&quotient, 1.0)?.pointwise_mul(&b_boundary)?;
    let residual = boundary_residual(&recon, &g_boundary);
    if residual > 1e-8 {
        return Err(Error::Numerical(format!(
            "Q·B fails to reconstruct G: relative residual {residual:.3e}"
        )));
    }
    let norm_g = hphi_norm_value(g, phi)?;
    let norm_q = hphi_norm_value(&quotient, phi)?;
    let ratio = if norm_g > 0.0 { norm_q / norm_g } else { 1.0 };
    Ok(FactorizationReport {
        factors: vec![("quotient".into(), quotient)],
        norm_identities: vec![NormIdentity {
            label: "‖G/B‖ = ‖G‖".into(),
            lhs: norm_q,
            rhs: norm_g,
            ratio,
        }],
        reconstruction_residual: residual,
        warnings: vec![],
    })
}

/// Outer function with prescribed boundary modulus `m`: the analytic
/// completion `log m + i·H(log m)` is exponentiated on the boundary and
/// projected, one transform instead of N Herglotz quadratures. Returns
/// the Taylor series, its exact boundary samples, and the clip flag.
pub fn outer_with_boundary(
    m: &BoundaryFunction,
) -> Result<(AnalyticFunction, BoundaryFunction, bool)> {
    let (log_m, clipped) = log_modulus_clipped(m)?;
    let conj = hilbert_transform(&log_m);
    let boundary = BoundaryFunction::from_samples(
        log_m
            .samples()
            .iter()
            .zip(conj.samples())
            .map(|(&u, &v)| (u + Complex64::I * v).exp())
            .collect(),
    )?;
    Ok((szego_project(&boundary), boundary, clipped))
}

/// Outer function from a positive boundary modulus.
pub fn outer_from_modulus(m: &BoundaryFunction) -> Result<AnalyticFunction> {
    Ok(outer_with_boundary(m)?.0)
}

/// Atomic singular inner function
/// `S_σ(z) = exp(−(1/2π) Σ m_j (e^{it_j}+z)/(e^{it_j}−z))`.
pub fn singular_inner(sigma: &AtomicMeasure, z: Complex64) -> Result<Complex64> {
    if z.norm() >= 1.0 + 1e-12 {
        return Err(Error::Domain(format!(
            "|z| = {} outside the closed disk",
            z.norm()
        )));
    }
    let mut acc = Complex64::ZERO;
    for &(angle, mass) in sigma.atoms() {
        let w = Complex64::from_polar(1.0, angle);
        acc += mass * (w + z) / (w - z);
    }
    Ok((-acc / TAU).exp())
}

/// Boundary samples of `S_σ`; at an atom the modulus collapses to 0
/// (the natural limit), elsewhere it is unimodular.
pub fn singular_inner_boundary(sigma: &AtomicMeasure, n: usize) -> Result<BoundaryFunction> {
    let samples: Vec<Complex64> = (0..n)
        .map(|j| singular_inner(sigma, Complex64::from_polar(1.0, TAU * j as f64 / n as f64)))
        .collect::<Result<_>>()?;
    BoundaryFunction::from_samples(samples)
}

/// Inner-outer decomposition `G = I·O` with `O` the outer function of the
/// boundary modulus and `I = G/O`. When the caller supplies the zeros and
/// atoms generating `G`, `I` is checked against `B·S_σ`.
pub fn inner_outer(
    g: &AnalyticFunction,
    zeros: &ZeroList,
    sigma: &AtomicMeasure,
    phi: &GrowthFunction,
) -> Result<FactorizationReport> {
    let n = g.grid();
    let g_boundary = circle_restriction(g, 1.0)?;
    let (outer, outer_boundary, clipped) = outer_with_boundary(&g_boundary)?;
    let mut warnings = Vec::new();
    if clipped {
        warnings.push("log-modulus floor clipped some samples".into());
    }
    let inner_boundary = BoundaryFunction::from_samples(
        g_boundary
            .samples()
            .iter()
            .zip(outer_boundary.samples())
            .map(|(&gv, &ov)| gv / ov)
            .collect(),
    )?;
    let inner = szego_project(&inner_boundary);

    // |I| = 1 on the boundary away from the singular support.
    let mut max_dev: f64 = 0.0;
    for (j, z) in inner_boundary.samples().iter().enumerate() {
        let theta = TAU * j as f64 / n as f64;
        let near_atom = sigma.atoms().iter().any(|&(a, _)| {
            let d = (theta - a).rem_euclid(TAU);
            d.min(TAU - d) < 0.1
        });
        if !near_atom {
            max_dev = max_dev.max((z.norm() - 1.0).abs());
        }
    }
    if max_dev > 1e-6 {
        return Err(Error::Numerical(format!(
            "inner factor not unimodular on the boundary: deviation {max_dev:.3e}"
        )));
    }

    let recon = outer_boundary.pointwise_mul(&inner_boundary)?;
    let residual = boundary_residual(&recon, &g_boundary);

    // Cross-check against the declared factorization B·S_σ, modulo the
    // unimodular constant the canonical decomposition leaves in the
    // inner part.
    let b_boundary = blaschke_boundary(zeros, n)?;
    let s_boundary = singular_inner_boundary(sigma, n)?;
    let declared = b_boundary.pointwise_mul(&s_boundary)?;
    let declared = match unimodular_constant(&inner_boundary, &declared) {
        Ok(c) => declared.map(|z| z * c),
        Err(_) => declared,
    };
    let inner_vs_declared = boundary_residual(&inner_boundary, &declared);

    let norm_g = hphi_norm_value(g, phi)?;
    let norm_o = hphi_norm_value(&outer, phi)?;
    let ratio = if norm_g > 0.0 { norm_o / norm_g } else { 1.0 };
    Ok(FactorizationReport {
        factors: vec![("inner".into(), inner), ("outer".into(), outer)],
        norm_identities: vec![
            NormIdentity {
                label: "‖O_G‖ = ‖G‖".into(),
                lhs: norm_o,
                rhs: norm_g,
                ratio,
            },
            NormIdentity {
                label: "I vs B·S_σ sup deviation".into(),
                lhs: inner_vs_declared,
                rhs: 0.0,
                ratio: 1.0 + inner_vs_declared,
            },
            NormIdentity {
                label: "max ||I|-1| away from atoms".into(),
                lhs: max_dev,
                rhs: 0.0,
                ratio: 1.0 + max_dev,
            },
        ],
        reconstruction_residual: residual,
        warnings,
    })
}

/// Strong factorization per the proof construction: with `‖g‖` the H^{Φ₃}
/// norm and `w = |g|/‖g‖`,
/// `g_k = Φ_k⁻¹∘Φ₃(‖g‖) · Φ_k⁻¹∘Φ₃(w)`, `G₁ = O_{g₁}`,
/// `G₂ = B·S_σ·O_{g₂}`. Requires `Φ₃⁻¹ ~ Φ₁⁻¹·Φ₂⁻¹` on the grid.
pub fn strong_factorize(
    g: &AnalyticFunction,
    zeros: &ZeroList,
    sigma: &AtomicMeasure,
    phi1: &GrowthFunction,
    phi2: &GrowthFunction,
    phi3: &GrowthFunction,
) -> Result<FactorizationReport> {
    let inv3 = |t: f64| phi3.inverse(t);
    let inv_prod = |t: f64| Ok(phi1.inverse(t)? * phi2.inverse(t)?);
    let equiv = check_equivalent_fns(&inv3, &inv_prod, (0.0, f64::INFINITY), 1e4);
    if !equiv.equivalent {
        return Err(Error::Hypothesis(
            "Φ₃⁻¹ is not grid-equivalent to Φ₁⁻¹·Φ₂⁻¹; Theorem hypotheses fail".into(),
        ));
    }

    let n = g.grid();
    let g_boundary = circle_restriction(g, 1.0)?;
    let norm_g = hphi_norm_value(g, phi3)?;
    if norm_g <= 0.0 {
        return Err(Error::Precondition(
            "strong factorization needs G ≢ 0".into(),
        ));
    }
    let phi3_of_norm = phi3.eval(norm_g)?;
    let scale1 = phi1.inverse(phi3_of_norm)?;
    let scale2 = phi2.inverse(phi3_of_norm)?;

    let mut g1 = Vec::with_capacity(n);
    let mut g2 = Vec::with_capacity(n);
    for z in g_boundary.samples() {
        let w = z.norm() / norm_g;
        let phi3_w = phi3.eval(w)?;
        g1.push(Complex64::new(scale1 * phi1.inverse(phi3_w)?, 0.0));
        g2.push(Complex64::new(scale2 * phi2.inverse(phi3_w)?, 0.0));
    }
    let g1 = BoundaryFunction::from_samples(g1)?;
    let g2 = BoundaryFunction::from_samples(g2)?;

    // Pointwise identity |g| = g₁·g₂.
    let mut product_dev: f64 = 0.0;
    for ((a, b), z) in g1
        .samples()
        .iter()
        .zip(g2.samples())
        .zip(g_boundary.samples())
    {
        let prod = a.re * b.re;
        let target = z.norm();
        product_dev = product_dev.max((prod - target).abs() / target.max(1e-300));
    }
    if product_dev > 1e-8 {
        return Err(Error::Numerical(format!(
            "|g| = g₁g₂ fails pointwise: relative deviation {product_dev:.3e}"
        )));
    }

    let (factor1, f1_boundary, clip1) = outer_with_boundary(&g1)?;
    let (_, o2_boundary, clip2) = outer_with_boundary(&g2)?;
    let mut warnings = Vec::new();
    if clip1 || clip2 {
        warnings.push("log-modulus floor clipped some samples".into());
    }
    let b_boundary = blaschke_boundary(zeros, n)?;
    let s_boundary = singular_inner_boundary(sigma, n)?;
    let raw2 = b_boundary
        .pointwise_mul(&s_boundary)?
        .pointwise_mul(&o2_boundary)?;

    // The canonical factorization holds modulo a unimodular constant
    // (outer functions are normalized positive at the origin): fit it and
    // fold it into the inner part of G₂.
    let phase = unimodular_constant(&g_boundary, &f1_boundary.pointwise_mul(&raw2)?)?;
    let f2_boundary = raw2.map(|z| z * phase);
    let factor2 = szego_project(&f2_boundary);

    let recon = f1_boundary.pointwise_mul(&f2_boundary)?;
    let residual = boundary_residual(&recon, &g_boundary);
    if residual > 1e-6 {
        return Err(Error::Numerical(format!(
            "G₁·G₂ fails to reconstruct G: relative residual {residual:.3e}"
        )));
    }

    let norm1 = luxemburg_norm(&f1_boundary, phi1)?.value;
    let norm2 = luxemburg_norm(&f2_boundary, phi2)?.value;
    let product = norm1 * norm2;
    let forward_ratio = product / norm_g;
    let reverse_c = norm_g / product;
    Ok(FactorizationReport {
        factors: vec![("g1".into(), factor1), ("g2".into(), factor2)],
        norm_identities: vec![
            NormIdentity {
                label: "‖G₁‖·‖G₂‖ ≤ ‖G‖".into(),
                lhs: product,
                rhs: norm_g,
                ratio: forward_ratio,
            },
            NormIdentity {
                label: "‖G‖ ≤ C·‖G₁‖·‖G₂‖".into(),
                lhs: norm_g,
                rhs: product,
                ratio: reverse_c,
            },
            NormIdentity {
                label: "max rel ||g| - g₁g₂|".into(),
                lhs: product_dev,
                rhs: 0.0,
                ratio: 1.0 + product_dev,
            },
        ],
        reconstruction_residual: residual,
        warnings,
    })
}
