//! Analytic functions on the disk as truncated power series: evaluation,
//! radial restrictions, Hardy-Orlicz norms, nontangential maximal
//! functions, the Szegő projection, the duality pairing and weighted
//! BMOA norms.

use crate::circle::{bmo_rho_norm, luxemburg_norm, BoundaryFunction};
use crate::error::{Error, Result};
use crate::growth::{GrowthFunction, Weight};
use num_complex::Complex64;
use std::f64::consts::TAU;

/// Truncated Taylor series `Σ a_k z^k` tied to a working grid of N
/// boundary samples; at most N/2 coefficients so boundary restrictions
/// are alias-free.
#[derive(Debug, Clone)]
pub struct AnalyticFunction {
    coeffs: Vec<Complex64>,
    grid: usize,
}

impl AnalyticFunction {
    pub fn new(coeffs: Vec<Complex64>, grid: usize) -> Result<Self> {
        if grid < 16 || !grid.is_power_of_two() {
            return Err(Error::InvalidInput(format!(
                "grid size must be a power of two ≥ 16, got {grid}"
            )));
        }
        if coeffs.is_empty() || coeffs.len() > grid / 2 {
            return Err(Error::InvalidInput(format!(
                "need 1 ≤ M ≤ N/2 Taylor coefficients, got M={} at N={grid}",
                coeffs.len()
            )));
        }
        Ok(AnalyticFunction { coeffs, grid })
    }

    pub fn constant(c: Complex64, grid: usize) -> Result<Self> {
        Self::new(vec![c], grid)
    }

    /// The monomial `z^k`.
    pub fn monomial(k: usize, grid: usize) -> Result<Self> {
        let mut coeffs = vec![Complex64::ZERO; k + 1];
        coeffs[k] = Complex64::ONE;
        Self::new(coeffs, grid)
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn grid(&self) -> usize {
        self.grid
    }

    /// Index of the last nonzero coefficient (0 for the zero function).
    pub fn degree(&self) -> usize {
        self.coeffs
            .iter()
            .rposition(|c| c.norm() > 0.0)
            .unwrap_or(0)
    }

    pub fn max_coeff(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Horner evaluation at a point of the closed disk.
    pub fn evaluate(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::ZERO;
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    pub fn scale(&self, c: Complex64) -> Self {
        AnalyticFunction {
            coeffs: self.coeffs.iter().map(|&a| a * c).collect(),
            grid: self.grid,
        }
    }

    pub fn sub(&self, other: &AnalyticFunction) -> Result<Self> {
        if self.grid != other.grid {
            return Err(Error::InvalidInput("grid mismatch".into()));
        }
        let m = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![Complex64::ZERO; m];
        for (k, c) in coeffs.iter_mut().enumerate() {
            let a = self.coeffs.get(k).copied().unwrap_or(Complex64::ZERO);
            let b = other.coeffs.get(k).copied().unwrap_or(Complex64::ZERO);
            *c = a - b;
        }
        AnalyticFunction::new(coeffs, self.grid)
    }

    /// Coefficient convolution, rejected when the product degree would
    /// alias on the working grid.
    pub fn multiply(&self, other: &AnalyticFunction) -> Result<Self> {
        if self.grid != other.grid {
            return Err(Error::InvalidInput("grid mismatch".into()));
        }
        let (da, db) = (self.degree(), other.degree());
        if da + db >= self.grid / 2 {
            return Err(Error::Precondition(format!(
                "product degree {} + {} aliases at N/2 = {}",
                da,
                db,
                self.grid / 2
            )));
        }
        let mut coeffs = vec![Complex64::ZERO; da + db + 1];
        for (i, &a) in self.coeffs.iter().take(da + 1).enumerate() {
            for (j, &b) in other.coeffs.iter().take(db + 1).enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        AnalyticFunction::new(coeffs, self.grid)
    }
}

/// Norms along a radius sweep. For [`hphi_norm`] the `norms` are the
/// restriction norms (nondecreasing, boundary value last); for
/// [`radial_convergence_report`] they are the differences `‖G_r − g‖`
/// (nonincreasing toward 0).
#[derive(Debug, Clone)]
pub struct RadialReport {
    pub radii: Vec<f64>,
    pub norms: Vec<f64>,
    pub boundary_norm: f64,
    pub converged: bool,
    pub warnings: Vec<String>,
}

/// `G_r(e^{iθ}) = G(r e^{iθ})` as a boundary function; `r = 1` gives the
/// boundary values of the series.
pub fn circle_restriction(g: &AnalyticFunction, r: f64) -> Result<BoundaryFunction> {
    if !(0.0..=1.0).contains(&r) {
        return Err(Error::Precondition(format!("radius {r} outside [0, 1]")));
    }
    let mut modes = Vec::with_capacity(g.coeffs.len());
    let mut rk = 1.0;
    for (k, &c) in g.coeffs.iter().enumerate() {
        modes.push((k as i64, c * rk));
        rk *= r;
    }
    BoundaryFunction::from_coeff_list(g.grid, &modes)
}

/// H^Φ norm reported at the boundary (Luxemburg norm of the r = 1
/// restriction), with the radius sweep retained as a monotonicity witness.
pub fn hphi_norm(g: &AnalyticFunction, phi: &GrowthFunction) -> Result<RadialReport> {
    let mut radii = vec![0.5, 0.9, 0.99, 1.0 - TAU / g.grid as f64, 1.0];
    radii.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut norms = Vec::with_capacity(radii.len());
    let mut warnings = Vec::new();
    for &r in &radii {
        let report = luxemburg_norm(&circle_restriction(g, r)?, phi)?;
        warnings.extend(report.warnings);
        norms.push(report.value);
    }
    let boundary_norm = *norms.last().expect("nonempty radius list");
    let monotone = norms
        .windows(2)
        .all(|w| w[1] >= w[0] - 1e-9 * w[0].max(1.0));
    Ok(RadialReport {
        radii,
        norms,
        boundary_norm,
        converged: monotone,
        warnings,
    })
}

/// Convenience accessor for the scalar H^Φ norm.
pub fn hphi_norm_value(g: &AnalyticFunction, phi: &GrowthFunction) -> Result<f64> {
    Ok(hphi_norm(g, phi)?.boundary_norm)
}

/// Nontangential maximal function over sampled Stolz cones
/// `Γ_α(ζ) = {rω : |ω − ζ| < α(1 − r)}`: six interior radii with five
/// matching angular offsets each, plus the cone apex on the boundary.
pub fn nontangential_max(g: &AnalyticFunction, alpha: f64) -> Result<BoundaryFunction> {
    if alpha <= 0.0 || alpha.is_nan() {
        return Err(Error::Precondition(format!(
            "aperture must be positive, got {alpha}"
        )));
    }
    let n = g.grid;
    const RADII: [f64; 6] = [0.0, 0.25, 0.5, 0.75, 0.9, 0.99];
    const OFFSETS: [f64; 5] = [-0.9, -0.45, 0.0, 0.45, 0.9];
    let samples: Vec<Complex64> = (0..n)
        .map(|j| {
            let theta = TAU * j as f64 / n as f64;
            let mut best = g.evaluate(Complex64::from_polar(1.0, theta)).norm();
            for &r in &RADII {
                let spread = alpha * (1.0 - r);
                for &o in &OFFSETS {
                    // |e^{iδ} − 1| = 2|sin(δ/2)| ≤ |δ|, so these offsets
                    // stay inside the cone.
                    let z = Complex64::from_polar(r, theta + o * spread);
                    let v = g.evaluate(z).norm();
                    if v > best {
                        best = v;
                    }
                }
            }
            Complex64::new(best, 0.0)
        })
        .collect();
    BoundaryFunction::from_samples(samples)
}

/// Distance of the radial restrictions from the boundary function in the
/// Luxemburg norm. The theorem needs Φ of both lower and upper type;
/// missing upper type is recorded as a warning and the sweep still runs.
pub fn radial_convergence_report(
    g: &AnalyticFunction,
    phi: &GrowthFunction,
) -> Result<RadialReport> {
    let mut warnings = Vec::new();
    let est = phi.estimate_types()?;
    if est.upper_exponent.is_none() {
        warnings.push(
            "Φ has no upper type on the grid; the convergence theorem hypotheses are not met"
                .into(),
        );
    }
    if est.lower_exponent.is_none() {
        warnings.push("Φ has no lower type on the grid".into());
    }
    let boundary = circle_restriction(g, 1.0)?;
    let boundary_norm = luxemburg_norm(&boundary, phi)?.value;
    let mut radii = vec![0.5, 0.9, 0.99, 1.0 - TAU / g.grid as f64];
    radii.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut norms = Vec::with_capacity(radii.len());
    for &r in &radii {
        let gr = circle_restriction(g, r)?;
        let diff = BoundaryFunction::from_samples(
            gr.samples()
                .iter()
                .zip(boundary.samples())
                .map(|(&a, &b)| a - b)
                .collect(),
        )?;
        norms.push(luxemburg_norm(&diff, phi)?.value);
    }
    let decreasing = norms
        .windows(2)
        .all(|w| w[1] <= w[0] + 1e-9 * w[0].max(1.0));
    let converged = decreasing && *norms.last().unwrap() <= 1e-6 * boundary_norm;
    Ok(RadialReport {
        radii,
        norms,
        boundary_norm,
        converged,
        warnings,
    })
}

/// Szegő projection: keep the nonnegative modes as Taylor coefficients.
pub fn szego_project(g: &BoundaryFunction) -> AnalyticFunction {
    let n = g.n_samples();
    let coeffs: Vec<Complex64> = (0..n as i64 / 2).map(|k| g.coeff(k)).collect();
    AnalyticFunction::new(coeffs, n).expect("N/2 coefficients fit the grid")
}

/// Duality pairing `⟨F, G⟩ = lim_r mean F_r·conj(G_r)`, evaluated by the
/// Parseval route `Σ F̂(k)·conj(Ĝ(k))`.
pub fn pairing(f: &AnalyticFunction, g: &AnalyticFunction) -> Complex64 {
    let mut acc = Complex64::ZERO;
    for (a, b) in f.coeffs.iter().zip(&g.coeffs) {
        acc += a * b.conj();
    }
    acc
}

/// `‖G‖_{BMOA(ρ)}` as the maximum of the circle-level weighted BMO norms
/// over radial restrictions at {0.9, 0.99, 1 − 2π/N, 1}.
pub fn bmoa_rho_norm(g: &AnalyticFunction, rho: &Weight) -> Result<f64> {
    let mut radii = [0.9, 0.99, 1.0 - TAU / g.grid as f64, 1.0];
    radii.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut best = 0.0_f64;
    for &r in &radii {
        let v = bmo_rho_norm(&circle_restriction(g, r)?, rho)?;
        if v > best {
            best = v;
        }
    }
    Ok(best)
}
