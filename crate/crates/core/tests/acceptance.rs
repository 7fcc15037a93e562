//! Acceptance suite: one test per criterion. Each prints a pass/fail
//! line with its runtime and enforces the stated budget and tolerances.

use hardy_orlicz::circle::{hilbert_transform, luxemburg_norm, BoundaryFunction};
use hardy_orlicz::factor::{
    blaschke_boundary, divide_by_blaschke, inner_outer, singular_inner_boundary, strong_factorize,
    AtomicMeasure, ZeroList,
};
use hardy_orlicz::growth::{
    check_equivalent, product_inverse_compose, ratio_inverse_compose, weight_ratio, GrowthFunction,
};
use hardy_orlicz::hankel::{
    gain_experiment, hankel_apply, hankel_matrix, hankel_norm_estimate, loss_experiment,
    DictionaryConfig,
};
use hardy_orlicz::hardy::{
    bmoa_rho_norm, circle_restriction, pairing, radial_convergence_report, szego_project,
    AnalyticFunction,
};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::TAU;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

const N: usize = 4096;

fn criterion(number: u32, label: &str, budget_s: f64, body: impl FnOnce()) {
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(body));
    let elapsed = start.elapsed().as_secs_f64();
    match outcome {
        Ok(()) => {
            println!("criterion {number} ({label}): PASS in {elapsed:.2}s (budget {budget_s:.0}s)");
            assert!(
                elapsed <= budget_s,
                "criterion {number} exceeded its runtime budget: {elapsed:.2}s > {budget_s}s"
            );
        }
        Err(cause) => {
            println!("criterion {number} ({label}): FAIL in {elapsed:.2}s");
            std::panic::resume_unwind(cause);
        }
    }
}

fn power(p: f64) -> GrowthFunction {
    GrowthFunction::power(p).unwrap()
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

/// Zero-free polynomial `c·(1 + Σ a_k z^k)` with `Σ|a_k| ≤ 0.8`.
fn random_outer_poly(rng: &mut ChaCha8Rng, degree: usize) -> AnalyticFunction {
    let mut coeffs = vec![Complex64::ONE];
    let mut budget = 0.8;
    for _ in 1..=degree {
        let dir = random_complex(rng);
        let cap = budget * rng.random_range(0.2..0.7);
        let c = if dir.norm() > 0.0 {
            dir / dir.norm() * cap
        } else {
            Complex64::ZERO
        };
        budget -= c.norm();
        coeffs.push(c);
    }
    let scale = Complex64::new(rng.random_range(0.5..2.0), rng.random_range(-0.5..0.5));
    AnalyticFunction::new(coeffs.into_iter().map(|c| c * scale).collect(), N).unwrap()
}

fn random_zeros(rng: &mut ChaCha8Rng, max_count: usize) -> ZeroList {
    let count = rng.random_range(0..=max_count);
    ZeroList::new(
        (0..count)
            .map(|_| Complex64::from_polar(rng.random_range(0.0..0.9), rng.random_range(0.0..TAU)))
            .collect(),
    )
    .unwrap()
}

/// Ten `G = B·O` test functions with their declared zero lists.
fn test_family(seed: u64) -> Vec<(AnalyticFunction, ZeroList)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..10)
        .map(|_| {
            let zeros = random_zeros(&mut rng, 4);
            let outer = random_outer_poly(&mut rng, 3);
            let b = blaschke_boundary(&zeros, N).unwrap();
            let product = b
                .pointwise_mul(&circle_restriction(&outer, 1.0).unwrap())
                .unwrap();
            (szego_project(&product), zeros)
        })
        .collect()
}

#[test]
fn criterion_1_riesz_division() {
    criterion(1, "Riesz division norm equality", 5.0, || {
        for (g, zeros) in test_family(101) {
            for phi in phi_family() {
                let rep = divide_by_blaschke(&g, &zeros, &phi).unwrap();
                let id = &rep.norm_identities[0];
                assert!(
                    (id.ratio - 1.0).abs() <= 1e-6,
                    "{}: ‖G/B‖/‖G‖ = {}",
                    phi.label(),
                    id.ratio
                );
            }
        }
    });
}

#[test]
fn criterion_2_inner_outer() {
    criterion(2, "inner-outer decomposition", 5.0, || {
        for (g, zeros) in test_family(101) {
            for phi in phi_family() {
                let rep = inner_outer(&g, &zeros, &AtomicMeasure::empty(), &phi).unwrap();
                let norm_id = &rep.norm_identities[0];
                assert!(
                    (norm_id.ratio - 1.0).abs() <= 1e-6,
                    "{}: ‖O_G‖/‖G‖ = {}",
                    phi.label(),
                    norm_id.ratio
                );
                let unimodular = &rep.norm_identities[2];
                assert!(
                    unimodular.lhs <= 1e-6,
                    "boundary ||I|-1| = {}",
                    unimodular.lhs
                );
            }
        }
        // Away-from-atoms clause with a genuine singular part.
        let sigma = AtomicMeasure::new(vec![(0.5, 0.8)]).unwrap();
        let s = singular_inner_boundary(&sigma, N).unwrap();
        for (j, z) in s.samples().iter().enumerate() {
            let theta = TAU * j as f64 / N as f64;
            let d = (theta - 0.5).rem_euclid(TAU);
            if d.min(TAU - d) >= 0.1 {
                assert!((z.norm() - 1.0).abs() <= 1e-6, "||S|-1| at θ={theta}");
            }
        }
    });
}

#[test]
fn criterion_3_strong_factorization() {
    criterion(3, "strong factorization", 10.0, || {
        let cases = [
            (power(2.0), power(2.0), power(1.0)),
            (power(2.0), power(3.0), power(1.2)),
        ];
        for (phi1, phi2, phi3) in cases {
            for (g, zeros) in test_family(202) {
                let rep =
                    strong_factorize(&g, &zeros, &AtomicMeasure::empty(), &phi1, &phi2, &phi3)
                        .unwrap();
                let pointwise = &rep.norm_identities[2];
                assert!(
                    pointwise.lhs <= 1e-8,
                    "{}: |g| = g₁g₂ deviation {}",
                    phi3.label(),
                    pointwise.lhs
                );
                assert!(
                    rep.reconstruction_residual <= 1e-6,
                    "{}: G₁G₂ = G residual {}",
                    phi3.label(),
                    rep.reconstruction_residual
                );
                let forward = &rep.norm_identities[0];
                assert!(
                    forward.lhs <= forward.rhs * (1.0 + 1e-6),
                    "{}: ‖G₁‖‖G₂‖ = {} > ‖G‖ = {}",
                    phi3.label(),
                    forward.lhs,
                    forward.rhs
                );
                let reverse = &rep.norm_identities[1];
                assert!(
                    reverse.ratio <= 4.0,
                    "{}: reverse constant {}",
                    phi3.label(),
                    reverse.ratio
                );
            }
        }
    });
}

#[test]
fn criterion_4_growth_calculus() {
    criterion(4, "growth-function calculus", 2.0, || {
        // Young's inequality and §2.1 property (i) on verification grids.
        for f in [power(2.0), power(1.5)] {
            let psi = f.complementary().unwrap();
            let (h_lo, h_hi) = psi.eval_domain();
            let s_grid: Vec<f64> = (0..32)
                .map(|i| (h_lo * 1.01) * ((h_hi * 0.99) / (h_lo * 1.01)).powf(i as f64 / 31.0))
                .collect();
            let t_grid: Vec<f64> = (0..32)
                .map(|i| 1e-6 * 1e12_f64.powf(i as f64 / 31.0))
                .collect();
            for &t in &t_grid {
                for &s in &s_grid {
                    let lhs = s * t;
                    let rhs = f.eval(t).unwrap() + psi.eval(s).unwrap();
                    assert!(lhs <= rhs + 1e-9 * (1.0 + lhs), "Young fails at ({t}, {s})");
                }
            }
            for i in 0..64 {
                let t = 1e-4 * 1e8_f64.powf(i as f64 / 63.0);
                let prod = f.inverse(t).unwrap() * psi.inverse(t).unwrap();
                assert!(prod > t * (1.0 - 1e-9), "property (i) lower at {t}");
                assert!(prod <= 2.0 * t * (1.0 + 1e-6), "property (i) upper at {t}");
            }
        }
        // Δ₂/∇₂ classifications.
        let two = power(2.0).check_doubling();
        assert!(
            two.delta2 && two.nabla2,
            "power(2) must satisfy both conditions"
        );
        let one = power(1.0).check_doubling();
        assert!(!one.nabla2, "power(1) must fail ∇₂");
        let exp = GrowthFunction::exp_minus_one().check_doubling();
        assert!(!exp.delta2, "exp_minus_one must fail Δ₂");
        // Inverse-composition identities on 64-point grids.
        let prod = product_inverse_compose(&power(2.0), &power(3.0)).unwrap();
        let ratio = ratio_inverse_compose(&power(4.0), &power(2.0)).unwrap();
        for i in 0..64 {
            let t = 1e-3 * 1e6_f64.powf(i as f64 / 63.0);
            let want = t.powf(5.0 / 6.0);
            let got = prod.inverse(t).unwrap();
            assert!((got - want).abs() <= 1e-6 * want, "Φ₃⁻¹ product at {t}");
            let want_eval = t.powf(1.2);
            let got_eval = prod.eval(t).unwrap();
            assert!(
                (got_eval - want_eval).abs() <= 1e-6 * want_eval,
                "Φ₃ eval at {t}"
            );
            let want_r = t.powf(0.25);
            let got_r = ratio.inverse(t).unwrap();
            assert!((got_r - want_r).abs() <= 1e-6 * want_r, "ratio Φ₃⁻¹ at {t}");
        }
    });
}

#[test]
fn criterion_5_spectral_identities() {
    criterion(5, "spectral identities", 2.0, || {
        // H(cos kθ) = sin kθ to 1e-12.
        for k in 1..=5 {
            let u = BoundaryFunction::from_fn(N, |t| Complex64::new((k as f64 * t).cos(), 0.0))
                .unwrap();
            let h = hilbert_transform(&u);
            for (j, z) in h.samples().iter().enumerate() {
                let t = TAU * j as f64 / N as f64;
                assert!(
                    (z - Complex64::new((k as f64 * t).sin(), 0.0)).norm() <= 1e-12,
                    "H(cos {k}θ) at sample {j}"
                );
            }
        }
        // H∘H = -I on zero-mean reals to 1e-10.
        let mut rng = ChaCha8Rng::seed_from_u64(55);
        for _ in 0..10 {
            let modes: Vec<(i64, Complex64)> = (1..=100)
                .map(|m| (m, random_complex(&mut rng) * 0.9_f64.powi(m as i32)))
                .flat_map(|(m, c)| [(m, c), (-m, c.conj())])
                .collect();
            let u = BoundaryFunction::from_coeff_list(N, &modes).unwrap();
            let hh = hilbert_transform(&hilbert_transform(&u));
            for (a, b) in u.samples().iter().zip(hh.samples()) {
                assert!((a + b).norm() <= 1e-10, "H∘H ≠ -I");
            }
        }
        // Szegő idempotence to 1e-12.
        for _ in 0..20 {
            let modes: Vec<(i64, Complex64)> =
                (-40..=40).map(|m| (m, random_complex(&mut rng))).collect();
            let g = BoundaryFunction::from_coeff_list(N, &modes).unwrap();
            let once = szego_project(&g);
            let twice = szego_project(&circle_restriction(&once, 1.0).unwrap());
            for (a, b) in once.coeffs().iter().zip(twice.coeffs()) {
                assert!((a - b).norm() <= 1e-12, "Szegő projection not idempotent");
            }
        }
        // Pairing = Parseval to 1e-10 against the quadrature route.
        for _ in 0..10 {
            let f = AnalyticFunction::new((0..20).map(|_| random_complex(&mut rng)).collect(), N)
                .unwrap();
            let g = AnalyticFunction::new((0..25).map(|_| random_complex(&mut rng)).collect(), N)
                .unwrap();
            let quad: Complex64 = circle_restriction(&f, 1.0)
                .unwrap()
                .samples()
                .iter()
                .zip(circle_restriction(&g, 1.0).unwrap().samples())
                .map(|(&a, &b)| a * b.conj())
                .sum::<Complex64>()
                / N as f64;
            assert!(
                (pairing(&f, &g) - quad).norm() <= 1e-10,
                "pairing ≠ Parseval"
            );
        }
    });
}

#[test]
fn criterion_6_hankel_consistency() {
    criterion(6, "Hankel matrix/apply consistency", 5.0, || {
        let grid = 1024;
        let mut rng = ChaCha8Rng::seed_from_u64(66);
        for _ in 0..50 {
            let b =
                AnalyticFunction::new((0..12).map(|_| random_complex(&mut rng)).collect(), grid)
                    .unwrap();
            let g = AnalyticFunction::new((0..8).map(|_| random_complex(&mut rng)).collect(), grid)
                .unwrap();
            let m = hankel_matrix(&b, 8).unwrap();
            let via_matrix = m.apply_conj(g.coeffs());
            let via_apply = hankel_apply(&b, &g).unwrap();
            for (j, mv) in via_matrix.iter().enumerate() {
                let av = via_apply
                    .coeffs()
                    .get(j)
                    .copied()
                    .unwrap_or(Complex64::ZERO);
                assert!((mv - av).norm() <= 1e-10, "row {j}: {mv} vs {av}");
            }
        }
        // b = z: SVD reference exactly 1 at M = 16, dictionary ≥ 0.5.
        let b = AnalyticFunction::monomial(1, grid).unwrap();
        let svd = hankel_matrix(&b, 16).unwrap().top_singular_value();
        assert!((svd - 1.0).abs() <= 1e-12, "SVD reference = {svd}");
        let est = hankel_norm_estimate(
            &b,
            &power(2.0),
            &power(2.0),
            &DictionaryConfig::default(),
            7,
        )
        .unwrap();
        assert!(est >= 0.5, "dictionary estimate {est} below 0.5");
        assert!(
            est <= svd * (1.0 + 1e-8),
            "estimate above the SVD reference"
        );
    });
}

#[test]
fn criterion_7_loss_band() {
    criterion(7, "loss-regime Hankel band", 30.0, || {
        let phi1 = power(4.0);
        let phi2 = power(2.0);
        // Φ₃ from the ratio composition is power(4): Φ₃⁻¹ = t^{1/2}/t^{1/4}.
        let phi3 = ratio_inverse_compose(&phi1, &phi2).unwrap();
        for i in 0..16 {
            let t = 1e-2 * 1e4_f64.powf(i as f64 / 15.0);
            let got = phi3.eval(t).unwrap();
            let want = t.powf(4.0);
            assert!((got - want).abs() <= 1e-6 * want, "Φ₃ ≠ power(4) at {t}");
        }
        let family: Vec<(String, AnalyticFunction)> = (1..=6)
            .map(|j| (format!("z^{j}"), AnalyticFunction::monomial(j, N).unwrap()))
            .collect();
        let rep = loss_experiment(&family, &phi1, &phi2, &DictionaryConfig::default(), 7).unwrap();
        let (lo, hi) = rep.band.expect("nonzero ratios across the family");
        assert!(hi / lo <= 10.0, "band spread {} exceeds 10", hi / lo);
    });
}

#[test]
fn criterion_8_gain_band() {
    criterion(8, "gain-regime Hankel band", 30.0, || {
        let family: Vec<(String, AnalyticFunction)> = (1..=6)
            .map(|j| (format!("z^{j}"), AnalyticFunction::monomial(j, N).unwrap()))
            .collect();
        let rep = gain_experiment(
            &family,
            &power(2.0),
            &power(2.0),
            &DictionaryConfig::default(),
            7,
        )
        .unwrap();
        let (lo, hi) = rep.band.expect("nonzero ratios across the family");
        assert!(hi / lo <= 10.0, "band spread {} exceeds 10", hi / lo);

        // Weighted case ρ(t) = t^{1/2}: ‖z^{2^j}‖_{BMOA(ρ)} has log-log
        // slope 1/2 against the frequency.
        let rho = weight_ratio(&power(1.0), &power(2.0));
        for t in [0.01, 0.1, 1.0, TAU] {
            let w = rho.eval(t).unwrap();
            assert!((w - t.sqrt()).abs() <= 1e-8 * t.sqrt(), "ρ({t}) = {w}");
        }
        let mut xs = Vec::new();
        let mut ys = Vec::new();
        for j in 1..=5 {
            let n_mode = 1usize << j;
            let b = AnalyticFunction::monomial(n_mode, N).unwrap();
            xs.push((n_mode as f64).ln());
            ys.push(bmoa_rho_norm(&b, &rho).unwrap().ln());
        }
        let mx = xs.iter().sum::<f64>() / xs.len() as f64;
        let my = ys.iter().sum::<f64>() / ys.len() as f64;
        let slope = xs
            .iter()
            .zip(&ys)
            .map(|(x, y)| (x - mx) * (y - my))
            .sum::<f64>()
            / xs.iter().map(|x| (x - mx) * (x - mx)).sum::<f64>();
        assert!((slope - 0.5).abs() <= 0.15, "log-log slope {slope}");
    });
}

#[test]
fn criterion_9_radial_convergence() {
    criterion(9, "radial convergence of monomials", 1.0, || {
        let phi = power(2.0);
        for k in [1usize, 2, 3, 5, 8] {
            let g = AnalyticFunction::monomial(k, N).unwrap();
            let rep = radial_convergence_report(&g, &phi).unwrap();
            for (&r, &v) in rep.radii.iter().zip(&rep.norms) {
                let want = 1.0 - r.powi(k as i32);
                assert!(
                    (v - want).abs() <= 1e-9,
                    "k={k} r={r}: ‖G_r - g‖ = {v} vs {want}"
                );
            }
        }
    });
}

/// The hypothesis gates are part of the acceptance surface: experiments
/// must refuse to run outside their regime.
#[test]
fn hypothesis_gates_refuse_wrong_regimes() {
    let family = vec![("z".to_string(), AnalyticFunction::monomial(1, 256).unwrap())];
    assert!(loss_experiment(
        &family,
        &power(2.0),
        &power(2.0),
        &DictionaryConfig::default(),
        7
    )
    .is_err());
    assert!(gain_experiment(
        &family,
        &power(4.0),
        &power(2.0),
        &DictionaryConfig::default(),
        7
    )
    .is_err());
    // Equivalence hypothesis of the strong factorization.
    let g = AnalyticFunction::constant(Complex64::ONE, 256).unwrap();
    assert!(strong_factorize(
        &g,
        &ZeroList::empty(),
        &AtomicMeasure::empty(),
        &power(2.0),
        &power(2.0),
        &power(3.0),
    )
    .is_err());
    // Sanity: the equivalence scan backing the gate.
    let rep = check_equivalent(&power(2.0), &power(3.0), 1e6).unwrap();
    assert!(!rep.equivalent);
    let _ = luxemburg_norm; // norm machinery exercised throughout
}
