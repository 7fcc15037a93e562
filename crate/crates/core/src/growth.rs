//! Growth-function calculus on `[0, ∞)`: evaluation, inversion, type
//! exponents, index estimation, doubling conditions, Young conjugates and
//! the inverse-composed functions the factorization theorems require.
//!
//! A growth function is nondecreasing with `Φ(0) = 0`, `Φ(t) > 0` for
//! `t > 0` and `Φ(∞) = ∞`. Upper/lower type `p` means
//! `Φ(st) ≤ C t^p Φ(s)` for `t ≥ 1` (resp. `t ≤ 1`).

use crate::error::{Error, Result};
use crate::numeric::{golden_max, invert_monotone_res, log_grid, ls_slope};

/// Monotone table with piecewise-linear interpolation in log-log
/// coordinates. Extrapolation outside the knot hull is a domain error.
#[derive(Debug, Clone)]
pub struct LogLogTable {
    ln_x: Vec<f64>,
    ln_y: Vec<f64>,
}

impl LogLogTable {
    pub fn from_knots(knots: &[(f64, f64)]) -> Result<Self> {
        if knots.len() < 2 {
            return Err(Error::InvalidInput("table needs at least two knots".into()));
        }
        for w in knots.windows(2) {
            if !(w[1].0 > w[0].0 && w[1].1 > w[0].1) {
                return Err(Error::InvalidInput(format!(
                    "table knots must be strictly increasing in both coordinates, got ({}, {}) after ({}, {})",
                    w[1].0, w[1].1, w[0].0, w[0].1
                )));
            }
        }
        if knots[0].0 <= 0.0 || knots[0].1 <= 0.0 {
            return Err(Error::InvalidInput("table knots must be positive".into()));
        }
        Ok(LogLogTable {
            ln_x: knots.iter().map(|k| k.0.ln()).collect(),
            ln_y: knots.iter().map(|k| k.1.ln()).collect(),
        })
    }

    pub fn hull(&self) -> (f64, f64) {
        (self.ln_x[0].exp(), self.ln_x[self.ln_x.len() - 1].exp())
    }

    fn value_hull(&self) -> (f64, f64) {
        (self.ln_y[0].exp(), self.ln_y[self.ln_y.len() - 1].exp())
    }

    fn interp(grid: &[f64], vals: &[f64], x: f64) -> f64 {
        let i = match grid.binary_search_by(|g| g.partial_cmp(&x).unwrap()) {
            Ok(i) => return vals[i].exp(),
            Err(i) => i,
        };
        let (i0, i1) = (i - 1, i);
        let w = (x - grid[i0]) / (grid[i1] - grid[i0]);
        (vals[i0] + w * (vals[i1] - vals[i0])).exp()
    }

    pub fn eval(&self, t: f64) -> Result<f64> {
        let (lo, hi) = self.hull();
        if t < lo * (1.0 - 1e-12) || t > hi * (1.0 + 1e-12) {
            return Err(Error::Domain(format!(
                "t={t} outside table hull [{lo}, {hi}] and extrapolation is forbidden"
            )));
        }
        Ok(Self::interp(&self.ln_x, &self.ln_y, t.clamp(lo, hi).ln()))
    }

    pub fn inverse(&self, y: f64) -> Result<f64> {
        let (lo, hi) = self.value_hull();
        if y < lo * (1.0 - 1e-12) || y > hi * (1.0 + 1e-12) {
            return Err(Error::Domain(format!(
                "y={y} outside table value hull [{lo}, {hi}]"
            )));
        }
        Ok(Self::interp(&self.ln_y, &self.ln_x, y.clamp(lo, hi).ln()))
    }
}

/// The supported growth-function shapes. `Complementary` carries its
/// materialized Legendre-transform table; `ProductInverse`/`RatioInverse`
/// carry their generating pair so the `Φ₃⁻¹` identities stay checkable.
#[derive(Debug, Clone)]
pub enum GrowthKind {
    Power {
        p: f64,
    },
    PowerLog {
        p: f64,
        a: f64,
    },
    ExpMinusOne,
    Table(LogLogTable),
    Complementary {
        of: Box<GrowthFunction>,
        table: LogLogTable,
    },
    ProductInverse {
        f1: Box<GrowthFunction>,
        f2: Box<GrowthFunction>,
    },
    RatioInverse {
        f1: Box<GrowthFunction>,
        f2: Box<GrowthFunction>,
    },
    PowerSubstitution {
        of: Box<GrowthFunction>,
        p: f64,
    },
}

#[derive(Debug, Clone)]
pub struct GrowthFunction {
    kind: GrowthKind,
    pub declared_lower_type: Option<f64>,
    pub declared_upper_type: Option<f64>,
}

/// Result of the grid fit for upper/lower type exponents. An absent
/// exponent means no power bound held on the grid with a constant below
/// the cap (exponential-type detection).
#[derive(Debug, Clone)]
pub struct TypeEstimate {
    pub lower_exponent: Option<f64>,
    pub upper_exponent: Option<f64>,
    pub constant_c: f64,
    pub residual: f64,
    pub warnings: Vec<String>,
}

/// Log-log slope extremes over the tail grid; the discrete stand-in for
/// the indices a_Φ (liminf) and b_Φ (limsup) of t·φ(t)/Φ(t).
#[derive(Debug, Clone)]
pub struct IndexEstimate {
    pub a_lower: f64,
    pub b_upper: f64,
    pub grid_used: Vec<f64>,
}

#[derive(Debug, Clone)]
pub struct DoublingReport {
    pub delta2: bool,
    pub k: f64,
    pub nabla2: bool,
    pub c: f64,
}

#[derive(Debug, Clone)]
pub struct EquivalenceReport {
    pub equivalent: bool,
    pub c: f64,
}

#[derive(Debug, Clone)]
pub struct Convexified {
    pub function: GrowthFunction,
    pub exceeds_lower_type: bool,
}

const OVERFLOW_CAP: f64 = 1e280;
const CONSTANT_CAP: f64 = 1e6;

impl GrowthFunction {
    pub fn power(p: f64) -> Result<Self> {
        if !(p.is_finite() && p > 0.0) {
            return Err(Error::InvalidInput(format!(
                "power exponent must be positive, got {p}"
            )));
        }
        Ok(GrowthFunction {
            kind: GrowthKind::Power { p },
            declared_lower_type: Some(p),
            declared_upper_type: Some(p),
        })
    }

    /// `Φ(t) = t^p · ln(e + t)^a`. Monotonicity on a wide probe grid is
    /// required at construction (strongly negative `a` can break it).
    pub fn power_log(p: f64, a: f64) -> Result<Self> {
        if !(p.is_finite() && p > 0.0 && a.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "power_log needs positive p and finite a, got p={p}, a={a}"
            )));
        }
        let f = GrowthFunction {
            kind: GrowthKind::PowerLog { p, a },
            declared_lower_type: None,
            declared_upper_type: None,
        };
        let grid = log_grid(1e-9, 1e9, 128);
        for w in grid.windows(2) {
            let (y0, y1) = (f.eval(w[0])?, f.eval(w[1])?);
            if y1 < y0 * (1.0 - 1e-12) {
                return Err(Error::InvalidInput(format!(
                    "power_log(p={p}, a={a}) is not nondecreasing near t={}",
                    w[0]
                )));
            }
        }
        Ok(f)
    }

    pub fn exp_minus_one() -> Self {
        GrowthFunction {
            kind: GrowthKind::ExpMinusOne,
            declared_lower_type: Some(1.0),
            declared_upper_type: None,
        }
    }

    pub fn table(knots: &[(f64, f64)]) -> Result<Self> {
        Ok(GrowthFunction {
            kind: GrowthKind::Table(LogLogTable::from_knots(knots)?),
            declared_lower_type: None,
            declared_upper_type: None,
        })
    }

    pub fn kind(&self) -> &GrowthKind {
        &self.kind
    }

    /// Human-readable shape tag used in reports.
    pub fn label(&self) -> String {
        match &self.kind {
            GrowthKind::Power { p } => format!("power({p})"),
            GrowthKind::PowerLog { p, a } => format!("power_log({p}, {a})"),
            GrowthKind::ExpMinusOne => "exp_minus_one".into(),
            GrowthKind::Table(t) => format!("table[{} knots]", t.ln_x.len()),
            GrowthKind::Complementary { of, .. } => format!("complementary({})", of.label()),
            GrowthKind::ProductInverse { f1, f2 } => {
                format!("product_inverse({}, {})", f1.label(), f2.label())
            }
            GrowthKind::RatioInverse { f1, f2 } => {
                format!("ratio_inverse({}, {})", f1.label(), f2.label())
            }
            GrowthKind::PowerSubstitution { of, p } => format!("rescale({}, {p})", of.label()),
        }
    }

    /// Interval on which `eval` is defined without extrapolation. Unbounded
    /// kinds report `(0, ∞)`; overflow is handled by the callers.
    pub fn eval_domain(&self) -> (f64, f64) {
        match &self.kind {
            GrowthKind::Power { .. } | GrowthKind::PowerLog { .. } | GrowthKind::ExpMinusOne => {
                (0.0, f64::INFINITY)
            }
            GrowthKind::Table(t) => t.hull(),
            GrowthKind::Complementary { table, .. } => table.hull(),
            GrowthKind::ProductInverse { f1, f2 } => {
                let (a1, b1) = f1.inverse_domain();
                let (a2, b2) = f2.inverse_domain();
                let lo = a1.max(a2);
                let hi = b1.min(b2);
                let map = |y: f64| -> f64 {
                    f1.inverse(y).unwrap_or(f64::NAN) * f2.inverse(y).unwrap_or(f64::NAN)
                };
                (
                    if lo > 0.0 { map(lo) } else { 0.0 },
                    if hi.is_finite() {
                        map(hi)
                    } else {
                        f64::INFINITY
                    },
                )
            }
            GrowthKind::RatioInverse { f1, f2 } => {
                let (a1, b1) = f1.inverse_domain();
                let (a2, b2) = f2.inverse_domain();
                let lo = a1.max(a2);
                let hi = b1.min(b2);
                let map = |y: f64| -> f64 {
                    f2.inverse(y).unwrap_or(f64::NAN) / f1.inverse(y).unwrap_or(f64::NAN)
                };
                (
                    if lo > 0.0 { map(lo) } else { 0.0 },
                    if hi.is_finite() {
                        map(hi)
                    } else {
                        f64::INFINITY
                    },
                )
            }
            GrowthKind::PowerSubstitution { of, p } => {
                let (lo, hi) = of.eval_domain();
                (
                    lo.powf(*p),
                    if hi.is_finite() {
                        hi.powf(*p)
                    } else {
                        f64::INFINITY
                    },
                )
            }
        }
    }

    fn inverse_domain(&self) -> (f64, f64) {
        match &self.kind {
            GrowthKind::Table(t) => t.value_hull(),
            GrowthKind::Complementary { table, .. } => table.value_hull(),
            GrowthKind::PowerSubstitution { of, .. } => of.inverse_domain(),
            GrowthKind::ProductInverse { f1, f2 } | GrowthKind::RatioInverse { f1, f2 } => {
                let (a1, b1) = f1.inverse_domain();
                let (a2, b2) = f2.inverse_domain();
                (a1.max(a2), b1.min(b2))
            }
            _ => (0.0, f64::INFINITY),
        }
    }

    /// Evaluate `Φ(t)`. `t = 0` maps to `0` for every kind (growth-function
    /// axiom); table kinds reject arguments outside their knot hull.
    pub fn eval(&self, t: f64) -> Result<f64> {
        if t < 0.0 || t.is_nan() {
            return Err(Error::Domain(format!(
                "growth functions are defined on [0, ∞), got {t}"
            )));
        }
        if t == 0.0 {
            return Ok(0.0);
        }
        match &self.kind {
            GrowthKind::Power { p } => Ok(t.powf(*p)),
            GrowthKind::PowerLog { p, a } => {
                Ok(t.powf(*p) * (std::f64::consts::E + t).ln().powf(*a))
            }
            GrowthKind::ExpMinusOne => Ok(t.exp_m1()),
            GrowthKind::Table(tab) => tab.eval(t),
            GrowthKind::Complementary { table, .. } => table.eval(t),
            GrowthKind::ProductInverse { .. } | GrowthKind::RatioInverse { .. } => {
                invert_monotone_res(|y| self.inverse(y), t)
            }
            GrowthKind::PowerSubstitution { of, p } => of.eval(t.powf(1.0 / p)),
        }
    }

    /// Evaluation with the Luxemburg-bisection overflow policy: table kinds
    /// saturate (below hull → 0, above hull → ∞) instead of erroring, so a
    /// modular mean can always be classified against 1.
    pub(crate) fn eval_saturating(&self, t: f64) -> f64 {
        match &self.kind {
            GrowthKind::Table(tab) | GrowthKind::Complementary { table: tab, .. } => {
                let (lo, hi) = tab.hull();
                if t <= lo {
                    0.0
                } else if t >= hi {
                    f64::INFINITY
                } else {
                    tab.eval(t).unwrap_or(f64::INFINITY)
                }
            }
            _ => self.eval(t).unwrap_or(f64::INFINITY),
        }
    }

    /// Inverse function `Φ⁻¹(y)`: closed form where the kind admits one,
    /// bracketing bisection otherwise.
    pub fn inverse(&self, y: f64) -> Result<f64> {
        if y < 0.0 || y.is_nan() {
            return Err(Error::Domain(format!("inverse needs y ≥ 0, got {y}")));
        }
        if y == 0.0 {
            return Ok(0.0);
        }
        match &self.kind {
            GrowthKind::Power { p } => Ok(y.powf(1.0 / p)),
            GrowthKind::ExpMinusOne => Ok(y.ln_1p()),
            GrowthKind::PowerLog { .. } => invert_monotone_res(|t| self.eval(t), y),
            GrowthKind::Table(tab) => tab.inverse(y),
            GrowthKind::Complementary { table, .. } => table.inverse(y),
            GrowthKind::ProductInverse { f1, f2 } => Ok(f1.inverse(y)? * f2.inverse(y)?),
            GrowthKind::RatioInverse { f1, f2 } => Ok(f2.inverse(y)? / f1.inverse(y)?),
            GrowthKind::PowerSubstitution { of, p } => Ok(of.inverse(y)?.powf(*p)),
        }
    }

    /// Largest `t ≤ limit` with `Φ(t)` finite and below the overflow cap.
    fn overflow_edge(&self, limit: f64) -> f64 {
        let ok = |t: f64| matches!(self.eval(t), Ok(v) if v.is_finite() && v <= OVERFLOW_CAP);
        if ok(limit) {
            return limit;
        }
        let mut lo = 1.0;
        if !ok(lo) {
            return 1.0;
        }
        let mut hi = limit;
        for _ in 0..200 {
            if hi / lo <= 1.0 + 1e-6 {
                break;
            }
            let mid = (0.5 * (lo.ln() + hi.ln())).exp();
            if ok(mid) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    }

    /// Fit upper/lower type exponents on the default grid
    /// (33 log-spaced scales in [1e-3, 1e3] × 33 factors).
    pub fn estimate_types(&self) -> Result<TypeEstimate> {
        let mut warnings = Vec::new();
        let (dom_lo, dom_hi) = self.eval_domain();
        let s_lo = 1e-3_f64
            .max(if dom_lo > 0.0 { dom_lo * 1.001 } else { 0.0 })
            .max(1e-12);
        let s_hi = 1e3_f64.min(self.overflow_edge(if dom_hi.is_finite() {
            dom_hi * 0.999
        } else {
            1e3
        }));
        if s_hi <= s_lo * 1.0001 {
            return Err(Error::Numerical("type estimation grid collapsed".into()));
        }
        let scales = log_grid(s_lo, s_hi, 33);

        // One data set per regime: pairs (ln t, ln Φ(st)/Φ(s)).
        let collect = |t_grid: &[f64], warnings: &mut Vec<String>| -> Vec<(f64, Vec<(f64, f64)>)> {
            let mut runs = Vec::new();
            let mut skipped = 0usize;
            for &s in &scales {
                let phi_s = match self.eval(s) {
                    Ok(v) if v.is_finite() && v > 0.0 && v < OVERFLOW_CAP => v,
                    _ => {
                        skipped += 1;
                        continue;
                    }
                };
                let mut pts = Vec::new();
                for &t in t_grid {
                    let st = s * t;
                    if st < dom_lo || st > dom_hi {
                        continue;
                    }
                    match self.eval(st) {
                        Ok(v) if v.is_finite() && v > 0.0 && v < OVERFLOW_CAP => {
                            pts.push((t.ln(), (v / phi_s).ln()));
                        }
                        _ => skipped += 1,
                    }
                }
                if pts.len() >= 4 {
                    runs.push((s, pts));
                }
            }
            if skipped > 0 {
                warnings.push(format!(
                    "{skipped} grid pairs skipped (overflow or out of domain)"
                ));
            }
            runs
        };

        let lower_runs = collect(&log_grid(1e-3, 1.0, 33), &mut warnings);
        let upper_runs = collect(&log_grid(1.0, 1e3, 33), &mut warnings);
        if lower_runs.is_empty() || upper_runs.is_empty() {
            return Err(Error::Numerical("type estimation grid collapsed".into()));
        }

        // Lower regime: the admissible exponent is bounded by every scale's
        // slope, so take the most conservative per-scale least-squares fit.
        // A single pooled fit would be polluted by the exponential tail and
        // misreport e.g. exp(t)-1, whose lower type is exactly 1.
        let per_scale_slope = |pts: &[(f64, f64)]| {
            let xs: Vec<f64> = pts.iter().map(|p| p.0).collect();
            let ys: Vec<f64> = pts.iter().map(|p| p.1).collect();
            ls_slope(&xs, &ys)
        };
        let p_lower = lower_runs
            .iter()
            .map(|(_, pts)| per_scale_slope(pts))
            .fold(f64::INFINITY, f64::min);

        // Upper regime: pooled least-squares slope; the constant needed to
        // make the bound hold on the whole grid detects exponential type.
        let mut xs = Vec::new();
        let mut ys = Vec::new();
        for (_, pts) in &upper_runs {
            for &(x, y) in pts {
                xs.push(x);
                ys.push(y);
            }
        }
        let p_upper = ls_slope(&xs, &ys);

        let needed_c = |runs: &[(f64, Vec<(f64, f64)>)], p: f64| -> f64 {
            let mut ln_c: f64 = 0.0;
            for (_, pts) in runs {
                for &(lt, lr) in pts {
                    ln_c = ln_c.max(lr - p * lt);
                }
            }
            ln_c.exp().max(1.0)
        };
        let c_lower = needed_c(&lower_runs, p_lower);
        let c_upper = needed_c(&upper_runs, p_upper);

        let mut residual: f64 = 0.0;
        let mut count = 0usize;
        for (_, pts) in &lower_runs {
            let slope = per_scale_slope(pts);
            for &(lt, lr) in pts {
                residual += (lr - slope * lt).powi(2);
                count += 1;
            }
        }
        let residual = (residual / count.max(1) as f64).sqrt();

        let lower_exponent = (c_lower <= CONSTANT_CAP).then_some(p_lower);
        let upper_exponent = (c_upper <= CONSTANT_CAP).then_some(p_upper);
        let (lower_exponent, upper_exponent) = match (lower_exponent, upper_exponent) {
            (Some(lo), Some(hi)) if lo > hi => (Some(lo.min(hi)), Some(hi)),
            other => other,
        };
        let constant_c = match (lower_exponent, upper_exponent) {
            (Some(_), Some(_)) => c_lower.max(c_upper),
            (Some(_), None) => c_lower,
            (None, Some(_)) => c_upper,
            (None, None) => c_lower.max(c_upper),
        };
        Ok(TypeEstimate {
            lower_exponent,
            upper_exponent,
            constant_c,
            residual,
            warnings,
        })
    }

    /// Index estimate from centered log-log slopes over the tail grid.
    /// The grid sits at the top of the overflow-safe evaluation domain,
    /// default `[1e9, 1e12]` for unbounded kinds.
    pub fn boyd_indices(&self) -> Result<IndexEstimate> {
        let (dom_lo, dom_hi) = self.eval_domain();
        let hi = self.overflow_edge(if dom_hi.is_finite() {
            dom_hi * 0.9
        } else {
            1e12
        });
        let lo = (hi / 1e3)
            .max(if dom_lo > 0.0 { dom_lo * 2.0 } else { 0.0 })
            .max(1e-300);
        if hi <= lo * 1.0001 {
            return Err(Error::Numerical("index tail grid collapsed".into()));
        }
        let grid = log_grid(lo, hi, 65);
        let mut ln_phi = Vec::with_capacity(grid.len());
        for &t in &grid {
            let v = self.eval(t)?;
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::Numerical(format!(
                    "slope estimate non-finite at t={t}"
                )));
            }
            ln_phi.push(v.ln());
        }
        let mut a = f64::INFINITY;
        let mut b = f64::NEG_INFINITY;
        for i in 1..grid.len() - 1 {
            let slope = (ln_phi[i + 1] - ln_phi[i - 1]) / (grid[i + 1].ln() - grid[i - 1].ln());
            if !slope.is_finite() {
                return Err(Error::Numerical(format!(
                    "slope estimate non-finite at t={}",
                    grid[i]
                )));
            }
            a = a.min(slope);
            b = b.max(slope);
        }
        Ok(IndexEstimate {
            a_lower: a,
            b_upper: b,
            grid_used: grid,
        })
    }

    /// Young conjugate `Ψ(s) = sup_t {st − Φ(t)}`, materialized as a
    /// monotone log-log table: coarse scan over a 4096-point log grid in
    /// `t ∈ [1e-8, 1e8]` (clamped to the evaluation domain), then
    /// golden-section refinement per knot.
    pub fn complementary(&self) -> Result<GrowthFunction> {
        let idx = self.boyd_indices()?;
        if idx.a_lower <= 1.0 {
            return Err(Error::Precondition(format!(
                "degenerate conjugate: index a={:.6} ≤ 1 for {}",
                idx.a_lower,
                self.label()
            )));
        }
        let (dom_lo, dom_hi) = self.eval_domain();
        let t_lo = 1e-8_f64
            .max(if dom_lo > 0.0 { dom_lo * 1.000001 } else { 0.0 })
            .max(1e-12);
        let t_hi = self
            .overflow_edge(if dom_hi.is_finite() {
                dom_hi * 0.999999
            } else {
                1e8
            })
            .min(1e8);
        if t_hi <= t_lo * 100.0 {
            return Err(Error::Numerical("conjugation grid collapsed".into()));
        }
        let t_grid = log_grid(t_lo, t_hi, 4096);
        let phi: Vec<f64> = t_grid
            .iter()
            .map(|&t| self.eval(t))
            .collect::<Result<_>>()?;

        // Valid s-range: the argmax must stay interior, so stay away from
        // the secant slopes at the grid ends.
        let slope_at = |i0: usize, i1: usize| (phi[i1] - phi[i0]) / (t_grid[i1] - t_grid[i0]);
        let s_floor = slope_at(0, 8) * 4.0;
        let s_cap = slope_at(4087, 4095) / 4.0;
        if !(s_floor > 0.0 && s_cap > s_floor * 10.0) {
            return Err(Error::Numerical(format!(
                "conjugate s-range degenerate: [{s_floor}, {s_cap}]"
            )));
        }
        let s_knots = log_grid(s_floor, s_cap, 513);

        let mut knots = Vec::with_capacity(s_knots.len());
        let mut best = 0usize;
        for &s in &s_knots {
            // The objective st - Φ(t) is unimodal in t; the previous argmax
            // is a warm start since s increases.
            let mut k = best;
            while k + 1 < t_grid.len() && s * t_grid[k + 1] - phi[k + 1] >= s * t_grid[k] - phi[k] {
                k += 1;
            }
            best = k;
            let lo_b = t_grid[k.saturating_sub(1)];
            let hi_b = t_grid[(k + 1).min(t_grid.len() - 1)];
            let obj = |t: f64| s * t - self.eval(t).unwrap_or(f64::NEG_INFINITY);
            let (_, val) = golden_max(obj, lo_b, hi_b, 60);
            let val = val.max(s * t_grid[k] - phi[k]);
            if val > 0.0 {
                if let Some(&(_, prev)) = knots.last() {
                    if val <= prev {
                        continue;
                    }
                }
                knots.push((s, val));
            }
        }
        if knots.len() < 16 {
            return Err(Error::Numerical("conjugate table too sparse".into()));
        }
        let table = LogLogTable::from_knots(&knots)?;
        Ok(GrowthFunction {
            kind: GrowthKind::Complementary {
                of: Box::new(self.clone()),
                table,
            },
            declared_lower_type: None,
            declared_upper_type: None,
        })
    }

    /// Doubling report: `K = sup Φ(2t)/Φ(t)` on the grid decides Δ₂; ∇₂
    /// searches `C ∈ {1.1^k}` for `Φ(t) ≤ Φ(Ct)/(2C)`.
    pub fn check_doubling(&self) -> DoublingReport {
        let (dom_lo, dom_hi) = self.eval_domain();
        let lo = 1e-6_f64.max(dom_lo * 1.001).max(1e-12);
        let hi = 1e6_f64.min(if dom_hi.is_finite() {
            dom_hi * 0.499
        } else {
            f64::INFINITY
        });
        let grid = log_grid(lo, hi.max(lo * 10.0), 64);
        let mut k_sup: f64 = 0.0;
        for &t in &grid {
            let (a, b) = (self.eval(t), self.eval(2.0 * t));
            match (a, b) {
                (Ok(a), Ok(b)) if a > 0.0 && a.is_finite() => {
                    k_sup = k_sup.max(if b.is_finite() { b / a } else { f64::INFINITY });
                }
                (Ok(a), Err(_)) if a > 0.0 => {}
                _ => {}
            }
        }
        let delta2 = k_sup.is_finite() && k_sup <= CONSTANT_CAP;

        let mut nabla2 = false;
        let mut c_found = f64::NAN;
        'outer: for k in 1..=120 {
            let c = 1.1_f64.powi(k);
            let mut checked = 0usize;
            for &t in &grid {
                let (a, b) = match (self.eval(t), self.eval(c * t)) {
                    (Ok(a), Ok(b)) => (a, b),
                    (Ok(_), Err(_)) => continue,
                    _ => continue,
                };
                if !a.is_finite() {
                    continue;
                }
                checked += 1;
                let rhs = if b.is_finite() {
                    b / (2.0 * c)
                } else {
                    f64::INFINITY
                };
                if a > rhs * (1.0 + 1e-12) {
                    continue 'outer;
                }
            }
            if checked >= grid.len() / 4 {
                nabla2 = true;
                c_found = c;
                break;
            }
        }
        DoublingReport {
            delta2,
            k: k_sup,
            nabla2,
            c: c_found,
        }
    }

    /// `Φ_p(t) = Φ(t^{1/p})`, the power substitution that convexifies a
    /// lower-type-p growth function. Flags when `p` exceeds the estimated
    /// lower type (the substitution then need not be convex).
    pub fn convexify_power(&self, p: f64) -> Result<Convexified> {
        if !(p.is_finite() && p > 0.0) {
            return Err(Error::InvalidInput(format!(
                "substitution power must be positive, got {p}"
            )));
        }
        let est = self.estimate_types()?;
        let exceeds = match est.lower_exponent {
            Some(lower) => p > lower + 1e-6,
            None => true,
        };
        Ok(Convexified {
            function: GrowthFunction {
                kind: GrowthKind::PowerSubstitution {
                    of: Box::new(self.clone()),
                    p,
                },
                declared_lower_type: self.declared_lower_type.map(|q| q / p),
                declared_upper_type: self.declared_upper_type.map(|q| q / p),
            },
            exceeds_lower_type: exceeds,
        })
    }

    /// Smallest chord constant `c ∈ {1.05^k}` witnessing equivalence to a
    /// convex function: `Φ(t₁)/t₁ ≤ c·Φ(c·t₂)/t₂` for all grid `t₁ < t₂`.
    /// The grid spans enough decades that sub-linear growth cannot hide
    /// behind a bounded constant.
    pub fn chord_convexity_constant(&self, c_max: f64) -> Result<Option<f64>> {
        let (dom_lo, dom_hi) = self.eval_domain();
        let lo = 1e-24_f64.max(dom_lo * 1.001).max(1e-300);
        let hi = 1e24_f64.min(self.overflow_edge(if dom_hi.is_finite() {
            dom_hi * 0.9
        } else {
            1e24
        }));
        let grid = log_grid(lo, hi, 48);
        let ratios: Vec<f64> = grid
            .iter()
            .map(|&t| self.eval(t).map(|v| v / t))
            .collect::<Result<_>>()?;
        let mut k = 0;
        loop {
            let c = 1.05_f64.powi(k);
            if c > c_max {
                return Ok(None);
            }
            let mut pass = true;
            'pairs: for (i, &ratio1) in ratios.iter().enumerate() {
                for &t2 in &grid[i + 1..] {
                    let rhs = match self.eval(c * t2) {
                        Ok(v) if v.is_finite() => c * v / t2,
                        _ => continue,
                    };
                    if ratio1 > rhs * (1.0 + 1e-12) {
                        pass = false;
                        break 'pairs;
                    }
                }
            }
            if pass {
                return Ok(Some(c));
            }
            k += 1;
        }
    }
}

/// Grid equivalence test `c⁻¹ f₁(c⁻¹ t) ≤ f₂(t) ≤ c f₁(c t)` with the
/// scan `c ∈ {1.05^k}`; reports the first passing constant.
pub fn check_equivalent(
    f1: &GrowthFunction,
    f2: &GrowthFunction,
    c_max: f64,
) -> Result<EquivalenceReport> {
    if c_max <= 1.0 || c_max.is_nan() {
        return Err(Error::Precondition(format!(
            "c_max must exceed 1, got {c_max}"
        )));
    }
    let e1 = |t: f64| f1.eval(t);
    let e2 = |t: f64| f2.eval(t);
    let (a1, b1) = f1.eval_domain();
    let (a2, b2) = f2.eval_domain();
    Ok(check_equivalent_fns(
        &e1,
        &e2,
        (a1.max(a2), b1.min(b2)),
        c_max,
    ))
}

/// Equivalence scan over arbitrary monotone evaluators; used directly for
/// the `Φ₃⁻¹ ~ Φ₁⁻¹·Φ₂⁻¹` hypothesis checks on inverse functions.
///
/// `domain` is where the evaluators are defined (table hulls); the probe
/// grid spans its intersection with `[1e-24, 1e24]`. Points where the
/// rescaled argument `c·t` or `t/c` leaves the domain are skipped —
/// that only relaxes the test for hull-limited tables, never for
/// unbounded kinds.
pub fn check_equivalent_fns(
    f1: &dyn Fn(f64) -> Result<f64>,
    f2: &dyn Fn(f64) -> Result<f64>,
    domain: (f64, f64),
    c_max: f64,
) -> EquivalenceReport {
    let (dom_lo, dom_hi) = domain;
    let lo = dom_lo.max(1e-24).max(f64::MIN_POSITIVE);
    let hi = dom_hi.min(1e24);
    if hi <= lo * 10.0 {
        return EquivalenceReport {
            equivalent: false,
            c: f64::NAN,
        };
    }
    let grid = log_grid(lo, hi, 64);
    let min_checked = (grid.len() / 4).max(8);
    let mut k = 0;
    loop {
        let c = 1.05_f64.powi(k);
        if c > c_max {
            return EquivalenceReport {
                equivalent: false,
                c: f64::NAN,
            };
        }
        let mut pass = true;
        let mut checked = 0usize;
        for &t in &grid {
            let v2 = match f2(t) {
                Ok(v) if v.is_finite() => v,
                _ => continue,
            };
            let mut this_checked = false;
            if t / c >= dom_lo {
                match f1(t / c) {
                    Ok(v) if v.is_finite() => {
                        this_checked = true;
                        if v / c > v2 * (1.0 + 1e-12) {
                            pass = false;
                            break;
                        }
                    }
                    _ => {}
                }
            }
            if c * t <= dom_hi {
                if let Ok(v) = f1(c * t) {
                    this_checked = true;
                    if v.is_finite() && v2 > c * v * (1.0 + 1e-12) {
                        pass = false;
                        break;
                    }
                }
            }
            if this_checked {
                checked += 1;
            }
        }
        if pass && checked >= min_checked {
            return EquivalenceReport {
                equivalent: true,
                c,
            };
        }
        k += 1;
    }
}

/// `Φ₃` with `Φ₃⁻¹ = Φ₁⁻¹ · Φ₂⁻¹`; lower type `(1/p₁ + 1/p₂)⁻¹`.
pub fn product_inverse_compose(f1: &GrowthFunction, f2: &GrowthFunction) -> Result<GrowthFunction> {
    for y in [1e-3, 1.0, 1e3] {
        f1.inverse(y)?;
        f2.inverse(y)?;
    }
    Ok(GrowthFunction {
        kind: GrowthKind::ProductInverse {
            f1: Box::new(f1.clone()),
            f2: Box::new(f2.clone()),
        },
        declared_lower_type: match (f1.declared_lower_type, f2.declared_lower_type) {
            (Some(p1), Some(p2)) => Some(1.0 / (1.0 / p1 + 1.0 / p2)),
            _ => None,
        },
        declared_upper_type: None,
    })
}

/// `Φ₃` with `Φ₃⁻¹ = Φ₂⁻¹ / Φ₁⁻¹`; requires the ratio to be strictly
/// increasing (the theorem's `p₂ ≤ q₂ < p₁` regime).
pub fn ratio_inverse_compose(f1: &GrowthFunction, f2: &GrowthFunction) -> Result<GrowthFunction> {
    let (a1, b1) = f1.inverse_domain();
    let (a2, b2) = f2.inverse_domain();
    let lo = a1.max(a2).max(1e-6);
    let hi = b1.min(b2).min(1e6);
    let grid = log_grid(lo, hi, 64);
    let mut prev = 0.0;
    for &y in &grid {
        let r = f2.inverse(y)? / f1.inverse(y)?;
        if !(r.is_finite() && r > prev * (1.0 + 1e-10)) {
            return Err(Error::Precondition(format!(
                "degenerate composition: Φ₂⁻¹/Φ₁⁻¹ is not strictly increasing near y={y}"
            )));
        }
        prev = r;
    }
    Ok(GrowthFunction {
        kind: GrowthKind::RatioInverse {
            f1: Box::new(f1.clone()),
            f2: Box::new(f2.clone()),
        },
        declared_lower_type: None,
        declared_upper_type: None,
    })
}

/// Arc-length weight for the BMO spaces. `rho` is the paper's
/// `ρ(t) = 1/(t·Φ⁻¹(1/t))`; `ratio` is `ϱ = ρ₁/ρ₂`.
#[derive(Debug, Clone)]
pub struct Weight {
    kind: WeightKind,
}

#[derive(Debug, Clone)]
enum WeightKind {
    Rho(Box<GrowthFunction>),
    Ratio(Box<GrowthFunction>, Box<GrowthFunction>),
}

impl Weight {
    pub fn eval(&self, t: f64) -> Result<f64> {
        if t <= 0.0 || t.is_nan() {
            return Err(Error::Domain(format!(
                "weights are defined for t > 0, got {t}"
            )));
        }
        match &self.kind {
            WeightKind::Rho(f) => Ok(1.0 / (t * f.inverse(1.0 / t)?)),
            WeightKind::Ratio(f1, f2) => Ok(f2.inverse(1.0 / t)? / f1.inverse(1.0 / t)?),
        }
    }

    pub fn label(&self) -> String {
        match &self.kind {
            WeightKind::Rho(f) => format!("rho({})", f.label()),
            WeightKind::Ratio(f1, f2) => format!("rho_ratio({}, {})", f1.label(), f2.label()),
        }
    }

    /// The classical unweighted case `ρ ≡ 1`.
    pub fn one() -> Weight {
        Weight {
            kind: WeightKind::Rho(Box::new(GrowthFunction::power(1.0).unwrap())),
        }
    }
}

pub fn weight_rho(f: &GrowthFunction) -> Weight {
    Weight {
        kind: WeightKind::Rho(Box::new(f.clone())),
    }
}

pub fn weight_ratio(f1: &GrowthFunction, f2: &GrowthFunction) -> Weight {
    Weight {
        kind: WeightKind::Ratio(Box::new(f1.clone()), Box::new(f2.clone())),
    }
}
