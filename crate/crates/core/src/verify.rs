//! Named invariant suite behind `verify all`: every module-level
//! property with its tolerance, runnable at a configurable grid size and
//! seed, reporting one pass/fail line per check.

use crate::circle::{
    bmo_rho_norm, hilbert_transform, luxemburg_norm, maximal_hl, BoundaryFunction,
};
use crate::error::Result;
use crate::factor::{
    blaschke_boundary, divide_by_blaschke, inner_outer, outer_with_boundary, strong_factorize,
    AtomicMeasure, ZeroList,
};
use crate::growth::{
    check_equivalent, product_inverse_compose, ratio_inverse_compose, weight_rho, GrowthFunction,
    Weight,
};
use crate::hankel::{hankel_apply, hankel_matrix, hankel_norm_estimate, DictionaryConfig};
use crate::hardy::{
    circle_restriction, hphi_norm, hphi_norm_value, nontangential_max, pairing, szego_project,
    AnalyticFunction,
};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

fn run_check(name: &str, body: impl FnOnce() -> Result<String>) -> Check {
    match body() {
        Ok(detail) => Check {
            name: name.into(),
            pass: true,
            detail,
        },
        Err(e) => Check {
            name: name.into(),
            pass: false,
            detail: format!("{e}"),
        },
    }
}

fn fail(msg: String) -> crate::error::Error {
    crate::error::Error::Numerical(msg)
}

fn power(p: f64) -> GrowthFunction {
    GrowthFunction::power(p).expect("positive exponent")
}

fn phi_family() -> Vec<GrowthFunction> {
    vec![
        power(0.5),
        power(1.0),
        power(2.0),
        GrowthFunction::exp_minus_one(),
    ]
}

fn random_complex(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
}

/// Random analytic polynomial with geometrically decaying coefficients.
fn random_poly(rng: &mut ChaCha8Rng, degree: usize, grid: usize) -> AnalyticFunction {
    let coeffs: Vec<Complex64> = (0..=degree)
        .map(|k| random_complex(rng) * 0.75_f64.powi(k as i32))
        .collect();
    AnalyticFunction::new(coeffs, grid).expect("degree fits grid")
}

/// Random zero-free polynomial `c·(1 + Σ_{k≥1} a_k z^k)` with
/// `Σ |a_k| ≤ 0.8`, so outer by construction.
fn random_outer_poly(rng: &mut ChaCha8Rng, degree: usize, grid: usize) -> AnalyticFunction {
    let mut coeffs = vec![Complex64::ONE];
    let mut budget = 0.8;
    for _ in 1..=degree {
        let c = random_complex(rng);
        let cap = budget * rng.random_range(0.2..0.7);
        let c = if c.norm() > 0.0 {
            c / c.norm() * cap
        } else {
            Complex64::ZERO
        };
        budget -= c.norm();
        coeffs.push(c);
    }
    let scale = Complex64::new(rng.random_range(0.5..2.0), rng.random_range(-0.5..0.5));
    AnalyticFunction::new(coeffs.into_iter().map(|c| c * scale).collect(), grid).unwrap()
}

fn random_zeros(rng: &mut ChaCha8Rng, max_count: usize, max_radius: f64) -> ZeroList {
    let count = rng.random_range(0..=max_count);
    ZeroList::new(
        (0..count)
            .map(|_| {
                let r = rng.random_range(0.0..max_radius);
                let t = rng.random_range(0.0..std::f64::consts::TAU);
                Complex64::from_polar(r, t)
            })
            .collect(),
    )
    .expect("radii inside the disk")
}

/// `G = B·O` with its zero list; exact by construction on the grid.
fn blaschke_times_outer(rng: &mut ChaCha8Rng, grid: usize) -> Result<(AnalyticFunction, ZeroList)> {
    let zeros = random_zeros(rng, 4, 0.9);
    let outer = random_outer_poly(rng, 3, grid);
    let b = blaschke_boundary(&zeros, grid)?;
    let product = b.pointwise_mul(&circle_restriction(&outer, 1.0)?)?;
    Ok((szego_project(&product), zeros))
}

pub fn run_all(grid: usize, seed: u64) -> Vec<Check> {
    let mut checks = Vec::new();

    checks.push(run_check("growth-monotone-grids", || {
        let funcs = [
            power(0.5),
            power(2.0),
            GrowthFunction::power_log(1.0, 1.0)?,
            GrowthFunction::exp_minus_one(),
        ];
        for f in &funcs {
            let mut prev = 0.0;
            for t in crate::numeric::log_grid(1e-6, 1e2, 64) {
                let v = f.eval(t)?;
                if v < prev / (1.0 + 1e-12) {
                    return Err(fail(format!("{} decreases near t={t}", f.label())));
                }
                prev = v;
            }
        }
        Ok("nondecreasing on 64-point grids".into())
    }));

    checks.push(run_check("growth-inverse-roundtrip", || {
        let funcs = [
            power(0.5),
            power(2.0),
            GrowthFunction::power_log(2.0, 1.0)?,
            GrowthFunction::exp_minus_one(),
            product_inverse_compose(&power(2.0), &power(3.0))?,
        ];
        for f in &funcs {
            for y in crate::numeric::log_grid(1e-6, 1e6, 64) {
                let back = f.eval(f.inverse(y)?)?;
                if (back - y).abs() > 1e-8 * y.max(1.0) {
                    return Err(fail(format!("{} at y={y}: {back}", f.label())));
                }
            }
        }
        Ok("eval∘inverse = id within rel 1e-8 on 64-point grids".into())
    }));

    checks.push(run_check("growth-young-inequality", || {
        for f in [power(2.0), power(3.0), power(1.5)] {
            let psi = f.complementary()?;
            let (h_lo, h_hi) = psi.eval_domain();
            for t in crate::numeric::log_grid(1e-6, 1e6, 32) {
                for s in crate::numeric::log_grid(h_lo * 1.01, h_hi * 0.99, 32) {
                    let lhs = s * t;
                    let rhs = f.eval(t)? + psi.eval(s)?;
                    if lhs > rhs + 1e-9 * (1.0 + lhs) {
                        return Err(fail(format!("{}: st > Φ+Ψ at ({t},{s})", f.label())));
                    }
                }
            }
        }
        Ok("st ≤ Φ(t)+Ψ(s) on 32×32 grids".into())
    }));

    checks.push(run_check("growth-inverse-product-bracket", || {
        for f in [power(2.0), power(3.0), power(1.5)] {
            let psi = f.complementary()?;
            for t in crate::numeric::log_grid(1e-4, 1e4, 33) {
                let prod = f.inverse(t)? * psi.inverse(t)?;
                if prod <= t * (1.0 - 1e-9) || prod > 2.0 * t * (1.0 + 1e-6) {
                    return Err(fail(format!("{}: Φ⁻¹Ψ⁻¹({t}) = {prod}", f.label())));
                }
            }
        }
        Ok("t < Φ⁻¹(t)Ψ⁻¹(t) ≤ 2t on grid".into())
    }));

    checks.push(run_check("growth-index-monotonicity", || {
        let funcs = [power(2.0), power(1.5), GrowthFunction::power_log(2.0, 1.0)?];
        for f in &funcs {
            let idx = f.boyd_indices()?;
            let g = &idx.grid_used;
            for i in 1..g.len() - 1 {
                let (t0, t1) = (g[i - 1], g[i + 1]);
                let (y0, y1) = (f.eval(t0)?, f.eval(t1)?);
                if y1 / t1.powf(idx.a_lower) < y0 / t0.powf(idx.a_lower) * (1.0 - 1e-9) {
                    return Err(fail(format!("{}: Φ/t^a not nondecreasing", f.label())));
                }
                if y1 / t1.powf(idx.b_upper) > y0 / t0.powf(idx.b_upper) * (1.0 + 1e-9) {
                    return Err(fail(format!("{}: Φ/t^b not nonincreasing", f.label())));
                }
            }
        }
        Ok("Φ/t^a nondecreasing, Φ/t^b nonincreasing on tail grids".into())
    }));

    checks.push(run_check("growth-doubling-classification", || {
        let two = power(2.0).check_doubling();
        if !(two.delta2 && two.nabla2 && (two.k - 4.0).abs() < 1e-9) {
            return Err(fail(format!(
                "power(2): Δ₂={} K={} ∇₂={}",
                two.delta2, two.k, two.nabla2
            )));
        }
        let one = power(1.0).check_doubling();
        if one.nabla2 {
            return Err(fail("power(1) must fail ∇₂".into()));
        }
        let exp = GrowthFunction::exp_minus_one().check_doubling();
        if exp.delta2 {
            return Err(fail(format!("exp must fail Δ₂, got K={}", exp.k)));
        }
        Ok("Δ₂/∇₂ classifications match".into())
    }));

    checks.push(run_check("growth-compose-identities", || {
        let f3 = product_inverse_compose(&power(2.0), &power(3.0))?;
        for t in crate::numeric::log_grid(1e-3, 1e3, 64) {
            let got = f3.inverse(t)?;
            let want = t.powf(1.0 / 2.0) * t.powf(1.0 / 3.0);
            if (got - want).abs() > 1e-6 * want {
                return Err(fail(format!("product-inverse at {t}: {got} vs {want}")));
            }
        }
        let r3 = ratio_inverse_compose(&power(4.0), &power(2.0))?;
        for t in crate::numeric::log_grid(1e-3, 1e3, 64) {
            let got = r3.inverse(t)?;
            let want = t.powf(0.25);
            if (got - want).abs() > 1e-6 * want {
                return Err(fail(format!("ratio-inverse at {t}: {got} vs {want}")));
            }
        }
        if ratio_inverse_compose(&power(2.0), &power(2.0)).is_ok() {
            return Err(fail("degenerate ratio composition must error".into()));
        }
        Ok("Φ₃⁻¹ identities hold within rel 1e-6 on 64-point grids".into())
    }));

    checks.push(run_check("growth-compose-type-arithmetic", || {
        for (p1, p2) in [(2.0, 3.0), (2.0, 2.0), (4.0, 4.0 / 3.0)] {
            let f3 = product_inverse_compose(&power(p1), &power(p2))?;
            let est = f3.estimate_types()?;
            let want = 1.0 / (1.0 / p1 + 1.0 / p2);
            let got = est
                .lower_exponent
                .ok_or_else(|| fail("missing lower type".into()))?;
            if (got - want).abs() > 5e-2 {
                return Err(fail(format!("({p1},{p2}): lower {got} vs {want}")));
            }
        }
        Ok("lower type of Φ₃ = (1/p₁+1/p₂)⁻¹ within 5e-2".into())
    }));

    checks.push(run_check("growth-equivalence-scan", || {
        let same = check_equivalent(&power(2.0), &power(2.0), 1e6)?;
        if !(same.equivalent && (same.c - 1.0).abs() < 1e-12) {
            return Err(fail("power(2) ~ power(2) with c=1 expected".into()));
        }
        let diff = check_equivalent(&power(2.0), &power(3.0), 1e6)?;
        if diff.equivalent {
            return Err(fail("power(2) ~ power(3) must fail under c ≤ 1e6".into()));
        }
        Ok("equivalence scan matches".into())
    }));

    checks.push(run_check("circle-luxemburg-pnorm-agreement", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..20 {
            let modes: Vec<(i64, Complex64)> =
                (-5..=5).map(|m| (m, random_complex(&mut rng))).collect();
            let g = BoundaryFunction::from_coeff_list(grid.min(256), &modes)?;
            for p in [0.5, 1.0, 2.0, 4.0] {
                let lux = luxemburg_norm(&g, &power(p))?.value;
                let pn = (g.samples().iter().map(|z| z.norm().powf(p)).sum::<f64>()
                    / g.n_samples() as f64)
                    .powf(1.0 / p);
                if (lux - pn).abs() > 1e-8 * pn.max(1e-12) {
                    return Err(fail(format!("p={p}: {lux} vs {pn}")));
                }
            }
        }
        Ok("Luxemburg = p-norm for Φ = t^p, 20 random polynomials".into())
    }));

    checks.push(run_check("circle-luxemburg-homogeneity", || {
        let g = BoundaryFunction::from_fn(grid.min(256), |t| {
            Complex64::new(t.cos() + 1.2, 0.4 * (2.0 * t).sin())
        })?;
        for phi in phi_family() {
            let base = luxemburg_norm(&g, &phi)?.value;
            for c in [0.03, 0.7, 19.0] {
                let scaled = luxemburg_norm(&g.map(|z| z * c), &phi)?.value;
                if (scaled - c * base).abs() > 1e-8 * (c * base) {
                    return Err(fail(format!("{}: c={c}", phi.label())));
                }
            }
        }
        Ok("‖c·g‖ = c·‖g‖ within rel 1e-8".into())
    }));

    checks.push(run_check("circle-hilbert-spectral", || {
        let n = grid.min(512);
        for k in [1, 2, 5] {
            let u = BoundaryFunction::from_fn(n, |t| Complex64::new((k as f64 * t).cos(), 0.0))?;
            let h = hilbert_transform(&u);
            for (j, z) in h.samples().iter().enumerate() {
                let t = std::f64::consts::TAU * j as f64 / n as f64;
                if (z - Complex64::new((k as f64 * t).sin(), 0.0)).norm() > 1e-12 {
                    return Err(fail(format!("H(cos {k}θ) ≠ sin {k}θ at sample {j}")));
                }
            }
        }
        Ok("H(cos kθ) = sin kθ to 1e-12".into())
    }));

    checks.push(run_check("circle-hilbert-involution", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5151);
        let n = grid.min(256);
        for _ in 0..10 {
            let modes: Vec<(i64, Complex64)> = (1..=(n as i64 / 4).min(9))
                .flat_map(|m| {
                    let c = random_complex(&mut rng);
                    [(m, c), (-m, c.conj())]
                })
                .collect();
            let u = BoundaryFunction::from_coeff_list(n, &modes)?;
            let hh = hilbert_transform(&hilbert_transform(&u));
            for (a, b) in u.samples().iter().zip(hh.samples()) {
                if (a + b).norm() > 1e-10 {
                    return Err(fail("H∘H ≠ -I on zero-mean real input".into()));
                }
            }
        }
        Ok("H(H(u)) = -u within 1e-10 on zero-mean reals".into())
    }));

    checks.push(run_check("circle-hilbert-bounded-witness", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xb0b0);
        let phi = power(2.0);
        let n = grid.min(256);
        for _ in 0..50 {
            let modes: Vec<(i64, Complex64)> = (1..=8)
                .flat_map(|m| {
                    let c = random_complex(&mut rng);
                    [(m, c), (-m, c.conj())]
                })
                .collect();
            let u = BoundaryFunction::from_coeff_list(n, &modes)?;
            let nu = luxemburg_norm(&u, &phi)?.value;
            let nh = luxemburg_norm(&hilbert_transform(&u), &phi)?.value;
            if nh > nu * (1.0 + 1e-8) {
                return Err(fail(format!("‖H(u)‖ = {nh} > ‖u‖ = {nu}")));
            }
        }
        Ok("‖H(u)‖ ≤ ‖u‖ for 50 random real trig polynomials (L²)".into())
    }));

    checks.push(run_check("circle-maximal-dominates", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x3333);
        let n = grid.min(256);
        for _ in 0..5 {
            let modes: Vec<(i64, Complex64)> =
                (-6..=6).map(|m| (m, random_complex(&mut rng))).collect();
            let g = BoundaryFunction::from_coeff_list(n, &modes)?;
            let m = maximal_hl(&g);
            let mean = g.mean_abs();
            for (z, v) in g.samples().iter().zip(m.samples()) {
                if v.re < z.norm() - 1e-13 || v.re < mean - 1e-13 {
                    return Err(fail("M(g) fails to dominate |g| or mean|g|".into()));
                }
            }
        }
        Ok("M(g) ≥ |g| pointwise and ≥ mean|g|".into())
    }));

    checks.push(run_check("circle-bmo-shift-invariance", || {
        let n = grid.min(256);
        let g = BoundaryFunction::from_fn(n, |t| {
            Complex64::new(t.cos() + 0.3 * (5.0 * t).sin(), (2.0 * t).cos())
        })?;
        let w = weight_rho(&power(2.0));
        let base = bmo_rho_norm(&g, &w)?;
        for offset in [n / 4, n / 2] {
            let r = bmo_rho_norm(&g.rotate_samples(offset), &w)?;
            if (base - r).abs() > 1e-12 {
                return Err(fail(format!("shift {offset}: {base} vs {r}")));
            }
        }
        let c = BoundaryFunction::constant(n, Complex64::new(3.0, 0.0))?;
        if bmo_rho_norm(&c, &Weight::one())? > 1e-12 {
            return Err(fail("constant must have zero BMO norm".into()));
        }
        Ok("BMO(ρ) shift-closed and vanishes on constants".into())
    }));

    checks.push(run_check("hardy-radial-monotone", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x7777);
        for phi in phi_family() {
            for _ in 0..5 {
                let g = random_poly(&mut rng, 6, grid.min(512));
                let rep = hphi_norm(&g, &phi)?;
                for w in rep.norms.windows(2) {
                    if w[1] < w[0] - 1e-9 * w[0].max(1.0) {
                        return Err(fail(format!("{}: norms {:?}", phi.label(), rep.norms)));
                    }
                }
            }
        }
        Ok("restriction norms nondecreasing in r within 1e-9".into())
    }));

    checks.push(run_check("hardy-boundary-norm-equality", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x8888);
        let g = random_poly(&mut rng, 5, grid.min(512));
        for phi in phi_family() {
            let rep = hphi_norm(&g, &phi)?;
            let direct = luxemburg_norm(&circle_restriction(&g, 1.0)?, &phi)?.value;
            if (rep.boundary_norm - direct).abs() > 1e-12 * direct.max(1.0) {
                return Err(fail(format!("{}: boundary norm mismatch", phi.label())));
            }
            if rep.boundary_norm < rep.norms[rep.norms.len() - 2] - 1e-9 {
                return Err(fail("boundary norm below interior norm".into()));
            }
        }
        Ok("‖G‖_{H^Φ} equals the boundary Luxemburg norm".into())
    }));

    checks.push(run_check("hardy-szego-idempotent", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9999);
        let n = grid.min(256);
        for _ in 0..50 {
            let modes: Vec<(i64, Complex64)> =
                (-10..=10).map(|m| (m, random_complex(&mut rng))).collect();
            let g = BoundaryFunction::from_coeff_list(n, &modes)?;
            let once = szego_project(&g);
            let twice = szego_project(&circle_restriction(&once, 1.0)?);
            for (a, b) in once.coeffs().iter().zip(twice.coeffs()) {
                if (a - b).norm() > 1e-12 {
                    return Err(fail("P∘P ≠ P".into()));
                }
            }
        }
        Ok("Szegő projection idempotent to 1e-12 on 50 random inputs".into())
    }));

    checks.push(run_check("hardy-pairing-parseval", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xaaaa);
        let n = grid.min(256);
        for _ in 0..10 {
            let f = random_poly(&mut rng, 7, n);
            let g = random_poly(&mut rng, 7, n);
            let quad: Complex64 = circle_restriction(&f, 1.0)?
                .samples()
                .iter()
                .zip(circle_restriction(&g, 1.0)?.samples())
                .map(|(&a, &b)| a * b.conj())
                .sum::<Complex64>()
                / n as f64;
            if (pairing(&f, &g) - quad).norm() > 1e-10 {
                return Err(fail("pairing ≠ boundary quadrature".into()));
            }
            if (pairing(&f, &g) - pairing(&g, &f).conj()).norm() > 1e-12 {
                return Err(fail("pairing not conjugate-symmetric".into()));
            }
        }
        Ok("⟨F,G⟩ = Parseval sum = boundary mean within 1e-10".into())
    }));

    checks.push(run_check("hardy-generalized-hoelder", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xbbbb);
        let n = grid.min(512);
        let (p2, p1) = (power(2.0), power(1.0));
        for _ in 0..10 {
            let f = random_poly(&mut rng, 10, n);
            let g = random_poly(&mut rng, 8, n);
            let prod = f.multiply(&g)?;
            let lhs = hphi_norm_value(&prod, &p1)?;
            let rhs = hphi_norm_value(&f, &p2)? * hphi_norm_value(&g, &p2)?;
            if lhs > rhs * (1.0 + 1e-8) {
                return Err(fail(format!("‖FG‖₁ = {lhs} > {rhs}")));
            }
        }
        Ok("‖FG‖_{H¹} ≤ ‖F‖_{H²}‖G‖_{H²} within 1e-8".into())
    }));

    checks.push(run_check("hardy-nontangential-domination", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xcccc);
        let n = grid.min(256);
        let phi = power(2.0);
        for _ in 0..5 {
            let g = random_poly(&mut rng, 5, n);
            let star = nontangential_max(&g, 1.0)?;
            let ns = luxemburg_norm(&star, &phi)?.value;
            let nh = hphi_norm_value(&g, &phi)?;
            if ns < nh * (1.0 - 1e-8) {
                return Err(fail(format!("‖G*‖ = {ns} < ‖G‖ = {nh}")));
            }
        }
        Ok("‖G*₁‖ ≥ ‖G‖_{H^Φ} within 1e-8".into())
    }));

    checks.push(run_check("factor-blaschke-unimodular", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xdddd);
        let n = grid.min(512);
        for _ in 0..20 {
            let zeros = random_zeros(&mut rng, 8, 0.95);
            let b = blaschke_boundary(&zeros, n)?;
            for z in b.samples() {
                if (z.norm() - 1.0).abs() > 1e-9 {
                    return Err(fail(format!("|B| = {} on the boundary", z.norm())));
                }
            }
        }
        Ok("max ||B|-1| ≤ 1e-9 for 20 random zero lists".into())
    }));

    checks.push(run_check("factor-riesz-norm-equality", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xeeee);
        let n = grid.min(512);
        for _ in 0..10 {
            let (g, zeros) = blaschke_times_outer(&mut rng, n)?;
            for phi in phi_family() {
                let rep = divide_by_blaschke(&g, &zeros, &phi)?;
                let id = &rep.norm_identities[0];
                if (id.ratio - 1.0).abs() > 1e-6 {
                    return Err(fail(format!("{}: ratio {}", phi.label(), id.ratio)));
                }
            }
        }
        Ok("|‖G/B‖/‖G‖ - 1| ≤ 1e-6 across the Φ family".into())
    }));

    checks.push(run_check("factor-outer-modulus-reproduction", || {
        let n = grid.min(512);
        let m = BoundaryFunction::from_fn(n, |t| {
            Complex64::new(2.0 + t.cos() + 0.3 * (3.0 * t).sin(), 0.0)
        })?;
        let (_, boundary, _) = outer_with_boundary(&m)?;
        let scale = m.max_abs();
        for (a, b) in boundary.samples().iter().zip(m.samples()) {
            if (a.norm() - b.re).abs() > 1e-6 * scale {
                return Err(fail("outer modulus drifts from the prescription".into()));
            }
        }
        Ok("||O_m| - m| ≤ 1e-6·max m on the boundary".into())
    }));

    checks.push(run_check("factor-inner-outer-norm-equality", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x1112);
        let n = grid.min(512);
        for _ in 0..5 {
            let (g, zeros) = blaschke_times_outer(&mut rng, n)?;
            for phi in phi_family() {
                let rep = inner_outer(&g, &zeros, &AtomicMeasure::empty(), &phi)?;
                if (rep.norm_identities[0].ratio - 1.0).abs() > 1e-6 {
                    return Err(fail(format!(
                        "{}: ‖O‖/‖G‖ = {}",
                        phi.label(),
                        rep.norm_identities[0].ratio
                    )));
                }
            }
        }
        Ok("|‖O_G‖/‖G‖ - 1| ≤ 1e-6 on the test family".into())
    }));

    checks.push(run_check("factor-strong-chain", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x1113);
        let n = grid.min(512);
        for _ in 0..5 {
            let (g, zeros) = blaschke_times_outer(&mut rng, n)?;
            let rep = strong_factorize(
                &g,
                &zeros,
                &AtomicMeasure::empty(),
                &power(2.0),
                &power(2.0),
                &power(1.0),
            )?;
            if rep.reconstruction_residual > 1e-6 {
                return Err(fail(format!("residual {}", rep.reconstruction_residual)));
            }
            let fwd = &rep.norm_identities[0];
            if fwd.lhs > fwd.rhs * (1.0 + 1e-6) {
                return Err(fail("‖G₁‖‖G₂‖ > ‖G‖".into()));
            }
            let rev = &rep.norm_identities[1];
            if rev.ratio > 4.0 {
                return Err(fail(format!("reverse constant {}", rev.ratio)));
            }
        }
        Ok("strong factorization chain holds with C ≤ 4".into())
    }));

    checks.push(run_check("hankel-matrix-apply-agreement", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x1114);
        let n = grid.min(256);
        for _ in 0..50 {
            let b = random_poly(&mut rng, 10, n);
            let g = random_poly(&mut rng, 7, n);
            let m = hankel_matrix(&b, 8)?;
            let via_matrix = m.apply_conj(g.coeffs());
            let via_apply = hankel_apply(&b, &g)?;
            for (j, mv) in via_matrix.iter().enumerate() {
                let av = via_apply
                    .coeffs()
                    .get(j)
                    .copied()
                    .unwrap_or(Complex64::ZERO);
                if (mv - av).norm() > 1e-10 {
                    return Err(fail(format!("row {j}: {mv} vs {av}")));
                }
            }
        }
        Ok("matrix action = apply coefficients within 1e-10, 50 pairs".into())
    }));

    checks.push(run_check("hankel-conjugate-linearity", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x1115);
        let n = grid.min(256);
        let b = random_poly(&mut rng, 6, n);
        let g1 = random_poly(&mut rng, 5, n);
        let g2 = random_poly(&mut rng, 4, n);
        let (alpha, beta) = (Complex64::new(0.7, -1.1), Complex64::new(-0.2, 0.4));
        let mut coeffs: Vec<Complex64> = g1.coeffs().iter().map(|&c| alpha * c).collect();
        for (k, &c) in g2.coeffs().iter().enumerate() {
            coeffs[k] += beta * c;
        }
        let combo = AnalyticFunction::new(coeffs, n)?;
        let lhs = hankel_apply(&b, &combo)?;
        let h1 = hankel_apply(&b, &g1)?;
        let h2 = hankel_apply(&b, &g2)?;
        for (k, l) in lhs.coeffs().iter().enumerate() {
            let want = alpha.conj() * h1.coeffs().get(k).copied().unwrap_or(Complex64::ZERO)
                + beta.conj() * h2.coeffs().get(k).copied().unwrap_or(Complex64::ZERO);
            if (l - want).norm() > 1e-10 {
                return Err(fail(format!("mode {k}")));
            }
        }
        Ok("h_b(αg+βh) = conj(α)h_b(g)+conj(β)h_b(h) within 1e-10".into())
    }));

    checks.push(run_check("hankel-symbol-linearity", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x1116);
        let n = grid.min(256);
        let b1 = random_poly(&mut rng, 6, n);
        let b2 = random_poly(&mut rng, 8, n);
        let g = random_poly(&mut rng, 4, n);
        let (alpha, beta) = (Complex64::new(1.3, 0.2), Complex64::new(-0.5, 0.9));
        let mut coeffs: Vec<Complex64> = b2.coeffs().iter().map(|&c| beta * c).collect();
        for (k, &c) in b1.coeffs().iter().enumerate() {
            coeffs[k] += alpha * c;
        }
        let combo = AnalyticFunction::new(coeffs, n)?;
        let lhs = hankel_apply(&combo, &g)?;
        let h1 = hankel_apply(&b1, &g)?;
        let h2 = hankel_apply(&b2, &g)?;
        for (k, l) in lhs.coeffs().iter().enumerate() {
            let want = alpha * h1.coeffs().get(k).copied().unwrap_or(Complex64::ZERO)
                + beta * h2.coeffs().get(k).copied().unwrap_or(Complex64::ZERO);
            if (l - want).norm() > 1e-10 {
                return Err(fail(format!("mode {k}")));
            }
        }
        Ok("h_{αb₁+βb₂} = αh_{b₁}+βh_{b₂} within 1e-10".into())
    }));

    checks.push(run_check("hankel-estimate-vs-svd", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x1117);
        let n = grid.min(256);
        let m = 12;
        for _ in 0..3 {
            let b = random_poly(&mut rng, m - 1, n);
            let config = DictionaryConfig {
                monomials: m,
                kernels: false,
                random: 16,
                max_degree: Some(m - 1),
            };
            let est = hankel_norm_estimate(&b, &power(2.0), &power(2.0), &config, seed)?;
            let svd = hankel_matrix(&b, 2 * m)?.top_singular_value();
            if est > svd * (1.0 + 1e-8) {
                return Err(fail(format!("dictionary {est} exceeds SVD {svd}")));
            }
        }
        Ok("degree-limited dictionary estimate ≤ H² SVD reference".into())
    }));

    checks.push(run_check("hankel-homogeneity", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x1118);
        let n = grid.min(256);
        let b = random_poly(&mut rng, 5, n);
        let config = DictionaryConfig {
            monomials: 8,
            kernels: false,
            random: 4,
            max_degree: None,
        };
        let e1 = hankel_norm_estimate(&b, &power(2.0), &power(2.0), &config, seed)?;
        let e3 = hankel_norm_estimate(
            &b.scale(Complex64::new(3.0, 0.0)),
            &power(2.0),
            &power(2.0),
            &config,
            seed,
        )?;
        if (e3 - 3.0 * e1).abs() > 1e-9 * (3.0 * e1) {
            return Err(fail(format!("{e3} vs {}", 3.0 * e1)));
        }
        let s1 = hphi_norm_value(&b, &power(2.0))?;
        let s3 = hphi_norm_value(&b.scale(Complex64::new(3.0, 0.0)), &power(2.0))?;
        if (s3 - 3.0 * s1).abs() > 1e-9 * (3.0 * s1) {
            return Err(fail("symbol norm not homogeneous".into()));
        }
        Ok("estimate and symbol norms scale with |λ| within 1e-9".into())
    }));

    checks
}
