//! JSON wire formats for the domain objects and reports: growth-function
//! specs, boundary/analytic function specs, zero lists, atomic measures,
//! and Hankel experiment bundles. Parse failures carry the offending
//! field path.

use crate::circle::BoundaryFunction;
use crate::error::{Error, Result};
use crate::factor::{AtomicMeasure, FactorizationReport, ZeroList};
use crate::growth::{product_inverse_compose, ratio_inverse_compose, GrowthFunction};
use crate::hankel::{DictionaryConfig, ExperimentReport, HankelReport};
use crate::hardy::{szego_project, AnalyticFunction, RadialReport};
use num_complex::Complex64;
use serde::Deserialize;
use serde_json::{json, Value};

fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de)
        .map_err(|e| Error::InvalidInput(format!("at `{}`: {}", e.path(), e.inner())))
}

/// Growth-function spec grammar.
#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum GrowthSpec {
    Power {
        p: f64,
    },
    PowerLog {
        p: f64,
        a: f64,
    },
    ExpMinusOne,
    Table {
        knots: Vec<(f64, f64)>,
    },
    Complementary {
        of: Box<GrowthSpec>,
    },
    ProductInverse {
        f1: Box<GrowthSpec>,
        f2: Box<GrowthSpec>,
    },
    RatioInverse {
        f1: Box<GrowthSpec>,
        f2: Box<GrowthSpec>,
    },
}

impl GrowthSpec {
    pub fn build(&self) -> Result<GrowthFunction> {
        match self {
            GrowthSpec::Power { p } => GrowthFunction::power(*p),
            GrowthSpec::PowerLog { p, a } => GrowthFunction::power_log(*p, *a),
            GrowthSpec::ExpMinusOne => Ok(GrowthFunction::exp_minus_one()),
            GrowthSpec::Table { knots } => GrowthFunction::table(knots),
            GrowthSpec::Complementary { of } => of.build()?.complementary(),
            GrowthSpec::ProductInverse { f1, f2 } => {
                product_inverse_compose(&f1.build()?, &f2.build()?)
            }
            GrowthSpec::RatioInverse { f1, f2 } => {
                ratio_inverse_compose(&f1.build()?, &f2.build()?)
            }
        }
    }
}

pub fn parse_growth(text: &str) -> Result<GrowthFunction> {
    parse::<GrowthSpec>(text)?.build()
}

#[derive(Debug, Clone, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct BuiltinParams {
    pub coeffs: Option<Vec<(f64, f64)>>,
    pub k: Option<i64>,
    pub amplitude: Option<f64>,
    pub from: Option<f64>,
    pub to: Option<f64>,
}

/// Boundary-function spec grammar.
#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum BoundarySpec {
    Coeffs {
        data: Vec<(i64, f64, f64)>,
    },
    Samples {
        data: Vec<(f64, f64)>,
    },
    Builtin {
        name: String,
        #[serde(default)]
        params: BuiltinParams,
    },
}

impl BoundarySpec {
    pub fn build(&self, n: usize) -> Result<BoundaryFunction> {
        match self {
            BoundarySpec::Coeffs { data } => {
                let modes: Vec<(i64, Complex64)> = data
                    .iter()
                    .map(|&(m, re, im)| (m, Complex64::new(re, im)))
                    .collect();
                BoundaryFunction::from_coeff_list(n, &modes)
            }
            BoundarySpec::Samples { data } => BoundaryFunction::from_samples(
                data.iter()
                    .map(|&(re, im)| Complex64::new(re, im))
                    .collect(),
            ),
            BoundarySpec::Builtin { name, params } => match name.as_str() {
                "poly" => {
                    let coeffs = params.coeffs.as_ref().ok_or_else(|| {
                        Error::InvalidInput("builtin poly needs params.coeffs".into())
                    })?;
                    let modes: Vec<(i64, Complex64)> = coeffs
                        .iter()
                        .enumerate()
                        .map(|(k, &(re, im))| (k as i64, Complex64::new(re, im)))
                        .collect();
                    BoundaryFunction::from_coeff_list(n, &modes)
                }
                "cos" => {
                    let k = params.k.unwrap_or(1);
                    let amp = params.amplitude.unwrap_or(1.0);
                    BoundaryFunction::from_fn(n, |t| {
                        Complex64::new(amp * (k as f64 * t).cos(), 0.0)
                    })
                }
                "indicator" => {
                    let from = params.from.unwrap_or(0.0);
                    let to = params.to.unwrap_or(std::f64::consts::PI);
                    BoundaryFunction::from_fn(n, |t| {
                        Complex64::new(if t >= from && t < to { 1.0 } else { 0.0 }, 0.0)
                    })
                }
                other => Err(Error::InvalidInput(format!(
                    "unknown builtin boundary function `{other}`"
                ))),
            },
        }
    }
}

pub fn parse_boundary(text: &str, n: usize) -> Result<BoundaryFunction> {
    parse::<BoundarySpec>(text)?.build(n)
}

/// Analytic-function spec grammar.
#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum AnalyticSpec {
    Taylor {
        coeffs: Vec<(f64, f64)>,
    },
    FromBoundary {
        #[serde(rename = "fn")]
        function: Box<BoundarySpec>,
    },
}

impl AnalyticSpec {
    pub fn build(&self, n: usize) -> Result<AnalyticFunction> {
        match self {
            AnalyticSpec::Taylor { coeffs } => AnalyticFunction::new(
                coeffs
                    .iter()
                    .map(|&(re, im)| Complex64::new(re, im))
                    .collect(),
                n,
            ),
            AnalyticSpec::FromBoundary { function } => Ok(szego_project(&function.build(n)?)),
        }
    }
}

pub fn parse_analytic(text: &str, n: usize) -> Result<AnalyticFunction> {
    parse::<AnalyticSpec>(text)?.build(n)
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ZeroListSpec {
    pub zeros: Vec<(f64, f64)>,
}

pub fn parse_zeros(text: &str) -> Result<ZeroList> {
    let spec: ZeroListSpec = parse(text)?;
    ZeroList::new(
        spec.zeros
            .iter()
            .map(|&(re, im)| Complex64::new(re, im))
            .collect(),
    )
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MeasureSpec {
    pub atoms: Vec<(f64, f64)>,
}

pub fn parse_measure(text: &str) -> Result<AtomicMeasure> {
    let spec: MeasureSpec = parse(text)?;
    AtomicMeasure::new(spec.atoms.clone())
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DictionarySpec {
    #[serde(default = "default_monomials")]
    pub monomials: usize,
    #[serde(default = "default_kernels")]
    pub kernels: bool,
    #[serde(default = "default_random")]
    pub random: usize,
}

fn default_monomials() -> usize {
    16
}
fn default_kernels() -> bool {
    true
}
fn default_random() -> usize {
    32
}

impl Default for DictionarySpec {
    fn default() -> Self {
        DictionarySpec {
            monomials: 16,
            kernels: true,
            random: 32,
        }
    }
}

impl DictionarySpec {
    pub fn to_config(&self) -> DictionaryConfig {
        DictionaryConfig {
            monomials: self.monomials,
            kernels: self.kernels,
            random: self.random,
            max_degree: None,
        }
    }
}

/// Hankel experiment bundle.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentSpec {
    pub phi1: GrowthSpec,
    pub phi2: GrowthSpec,
    pub family: Vec<AnalyticSpec>,
    #[serde(default)]
    pub dictionary: DictionarySpec,
    #[serde(default = "default_seed")]
    pub seed: u64,
}

fn default_seed() -> u64 {
    7
}

pub fn parse_experiment(text: &str) -> Result<ExperimentSpec> {
    parse(text)
}

impl ExperimentSpec {
    pub fn build_family(&self, n: usize) -> Result<Vec<(String, AnalyticFunction)>> {
        self.family
            .iter()
            .enumerate()
            .map(|(i, s)| Ok((format!("b{i}"), s.build(n)?)))
            .collect()
    }
}

// --- Report serialization -------------------------------------------------

pub fn complex_json(z: Complex64) -> Value {
    json!([z.re, z.im])
}

pub fn analytic_json(f: &AnalyticFunction) -> Value {
    json!({
        "kind": "taylor",
        "coeffs": f.coeffs().iter().map(|&c| complex_json(c)).collect::<Vec<_>>(),
    })
}

pub fn radial_report_json(r: &RadialReport) -> Value {
    json!({
        "radii": r.radii,
        "norms": r.norms,
        "boundary_norm": r.boundary_norm,
        "converged": r.converged,
        "warnings": r.warnings,
    })
}

pub fn factorization_json(r: &FactorizationReport) -> Value {
    json!({
        "factors": r.factors.iter().map(|(name, f)| {
            json!({"name": name, "function": analytic_json(f)})
        }).collect::<Vec<_>>(),
        "norm_identities": r.norm_identities.iter().map(|id| {
            json!({"label": id.label, "lhs": id.lhs, "rhs": id.rhs, "ratio": id.ratio})
        }).collect::<Vec<_>>(),
        "reconstruction_residual": r.reconstruction_residual,
        "warnings": r.warnings,
    })
}

pub fn hankel_report_json(r: &HankelReport) -> Value {
    json!({
        "family_tag": r.family_tag,
        "symbol_norm": r.symbol_norm,
        "operator_estimate": r.operator_estimate,
        "ratio": r.ratio,
    })
}

pub fn experiment_json(r: &ExperimentReport) -> Value {
    json!({
        "rows": r.rows.iter().map(hankel_report_json).collect::<Vec<_>>(),
        "band": r.band.map(|(lo, hi)| json!([lo, hi])),
        "spread": r.spread,
    })
}

/// Flat CSV for experiment sweeps: `family_tag,symbol_norm,
/// operator_estimate,ratio` rows under a schema/config comment line.
pub fn experiment_csv(r: &ExperimentReport, config_echo: &Value) -> String {
    let mut out = String::new();
    out.push_str(&format!("# schema_version=1 config={config_echo}\n"));
    out.push_str("family_tag,symbol_norm,operator_estimate,ratio\n");
    for row in &r.rows {
        out.push_str(&format!(
            "{},{:.12e},{:.12e},{:.12e}\n",
            row.family_tag, row.symbol_norm, row.operator_estimate, row.ratio
        ));
    }
    if let (Some((lo, hi)), Some(spread)) = (r.band, r.spread) {
        out.push_str(&format!(
            "# band_lo={lo:.12e} band_hi={hi:.12e} spread={spread:.12e}\n"
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_power_growth() {
        let f = parse_growth(r#"{"kind":"power","p":2.0}"#).unwrap();
        assert_eq!(f.eval(3.0).unwrap(), 9.0);
    }

    #[test]
    fn parse_rejects_negative_power() {
        let err = parse_growth(r#"{"kind":"power","p":-1.0}"#).unwrap_err();
        assert!(matches!(err, Error::InvalidInput(_)), "{err}");
    }

    #[test]
    fn parse_rejects_unknown_kind() {
        let err = parse_growth(r#"{"kind":"mystery"}"#).unwrap_err();
        assert!(matches!(err, Error::InvalidInput(_)));
    }

    #[test]
    fn parse_nested_product_inverse() {
        let f = parse_growth(
            r#"{"kind":"product_inverse","f1":{"kind":"power","p":2.0},"f2":{"kind":"power","p":2.0}}"#,
        )
        .unwrap();
        let v = f.eval(5.0).unwrap();
        assert!((v - 5.0).abs() < 1e-6 * 5.0);
    }

    #[test]
    fn parse_taylor_analytic() {
        let f = parse_analytic(r#"{"kind":"taylor","coeffs":[[1,0],[0.5,0]]}"#, 64).unwrap();
        assert_eq!(f.coeffs().len(), 2);
        assert!((f.coeffs()[1] - Complex64::new(0.5, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn parse_boundary_builtins() {
        let g = parse_boundary(
            r#"{"kind":"builtin","name":"cos","params":{"k":2,"amplitude":3.0}}"#,
            64,
        )
        .unwrap();
        assert!((g.samples()[0].re - 3.0).abs() < 1e-14);
        let ind = parse_boundary(
            r#"{"kind":"builtin","name":"indicator","params":{"from":0.0,"to":3.141592653589793}}"#,
            64,
        )
        .unwrap();
        assert_eq!(ind.samples()[0].re, 1.0);
        assert_eq!(ind.samples()[33].re, 0.0);
        assert!(parse_boundary(r#"{"kind":"builtin","name":"nope"}"#, 64).is_err());
    }

    #[test]
    fn parse_zero_list_validates_disk() {
        assert!(parse_zeros(r#"{"zeros":[[0.5,0.0]]}"#).is_ok());
        let err = parse_zeros(r#"{"zeros":[[1.5,0.0]]}"#).unwrap_err();
        assert!(matches!(err, Error::InvalidInput(_)));
    }

    #[test]
    fn parse_measure_validates_masses() {
        assert!(parse_measure(r#"{"atoms":[[0.5,0.8]]}"#).is_ok());
        assert!(parse_measure(r#"{"atoms":[[0.5,-1.0]]}"#).is_err());
        assert!(parse_measure(r#"{"atoms":[[0.5,0.0]]}"#).is_err());
    }

    #[test]
    fn parse_experiment_defaults() {
        let e = parse_experiment(
            r#"{"phi1":{"kind":"power","p":4.0},"phi2":{"kind":"power","p":2.0},
               "family":[{"kind":"taylor","coeffs":[[0,0],[1,0]]}]}"#,
        )
        .unwrap();
        assert_eq!(e.seed, 7);
        assert_eq!(e.dictionary.monomials, 16);
        assert!(e.dictionary.kernels);
        let fam = e.build_family(64).unwrap();
        assert_eq!(fam.len(), 1);
        assert_eq!(fam[0].0, "b0");
    }

    #[test]
    fn parse_error_reports_field_path() {
        let err = parse_growth(r#"{"kind":"power","p":"two"}"#).unwrap_err();
        let msg = format!("{err}");
        assert!(msg.contains('p'), "{msg}");
    }
}
