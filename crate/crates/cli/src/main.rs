//! `ho` — command-line front end for the hardy-orlicz toolkit.
//!
//! Specs are inline JSON or `@path` references; reports are JSON (CSV for
//! the Hankel experiment sweeps) with a schema version and the resolved
//! run configuration echoed for reproducibility.

use clap::{Args, Parser, Subcommand};
use hardy_orlicz::spec::{
    self, parse_analytic, parse_boundary, parse_experiment, parse_growth, parse_measure,
    parse_zeros,
};
use hardy_orlicz::{circle, factor, growth, hankel, hardy, verify, Error};
use serde_json::{json, Value};
use std::f64::consts::TAU;
use std::process::ExitCode;

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_INTERNAL: u8 = 5;

#[derive(Parser)]
#[command(
    name = "ho",
    version,
    about = "Hardy-Orlicz space computations on the unit disk"
)]
struct Cli {
    #[command(flatten)]
    run: RunArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct RunArgs {
    /// Boundary grid size N (power of two ≥ 16); HO_GRID overrides the default 4096.
    #[arg(long, global = true)]
    grid: Option<usize>,
    /// Seed for the randomized dictionaries.
    #[arg(long, global = true, default_value_t = 7)]
    seed: u64,
    /// Reporting tolerance echoed into reports.
    #[arg(long, global = true, default_value_t = 1e-8)]
    tol: f64,
    /// Evaluation radius echoed into reports (default 1 - 2π/N).
    #[arg(long, global = true)]
    radius: Option<f64>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<std::path::PathBuf>,
    /// Report format; experiment sweeps default to csv, everything else to json.
    #[arg(long, global = true, value_parser = ["json", "csv"])]
    format: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Growth-function operations.
    Gf {
        #[command(subcommand)]
        cmd: GfCommand,
    },
    /// Luxemburg / Hardy-Orlicz norm of a function.
    Norm {
        /// Growth function spec.
        #[arg(long)]
        phi: String,
        /// Analytic function spec (Taylor or from_boundary).
        #[arg(long = "fn")]
        function: Option<String>,
        /// Boundary function spec (norm taken on the circle).
        #[arg(long)]
        boundary: Option<String>,
    },
    /// Factorization operations.
    Factor {
        #[command(subcommand)]
        cmd: FactorCommand,
    },
    /// Hankel operator operations.
    Hankel {
        #[command(subcommand)]
        cmd: HankelCommand,
    },
    /// Run verification suites.
    Verify {
        #[command(subcommand)]
        cmd: VerifyCommand,
    },
}

#[derive(Subcommand)]
enum GfCommand {
    /// Type exponents, indices and doubling classification of a growth function.
    Inspect {
        #[arg(long)]
        spec: String,
    },
}

#[derive(Subcommand)]
enum FactorCommand {
    /// Riesz division G/B by a declared zero list.
    Riesz {
        #[arg(long = "fn")]
        function: String,
        #[arg(long)]
        zeros: String,
        #[arg(long)]
        phi: String,
    },
    /// Inner-outer decomposition G = I·O.
    InnerOuter {
        #[arg(long = "fn")]
        function: String,
        #[arg(long)]
        phi: String,
        #[arg(long)]
        zeros: Option<String>,
        #[arg(long)]
        sigma: Option<String>,
    },
    /// Strong factorization G = G₁·G₂ across H^{Φ₁}·H^{Φ₂} = H^{Φ₃}.
    Strong {
        #[arg(long = "fn")]
        function: String,
        #[arg(long)]
        phi1: String,
        #[arg(long)]
        phi2: String,
        #[arg(long)]
        phi3: String,
        #[arg(long)]
        zeros: Option<String>,
        #[arg(long)]
        sigma: Option<String>,
    },
}

#[derive(Subcommand)]
enum HankelCommand {
    /// Apply h_b to an analytic function.
    Apply {
        #[arg(long)]
        symbol: String,
        #[arg(long)]
        arg: String,
    },
    /// Truncated Hankel matrix of a symbol.
    Matrix {
        #[arg(long)]
        symbol: String,
        #[arg(long, default_value_t = 16)]
        truncation: usize,
    },
    /// Dictionary norm estimate with the H² SVD reference.
    Norm {
        #[arg(long)]
        symbol: String,
        #[arg(long)]
        phi1: String,
        #[arg(long)]
        phi2: String,
    },
    /// Loss-regime boundedness experiment from an experiment spec.
    Loss {
        #[arg(long)]
        spec: String,
    },
    /// Gain-regime boundedness experiment from an experiment spec.
    Gain {
        #[arg(long)]
        spec: String,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Run the full invariant suite; nonzero exit on any failure.
    All,
}

struct RunConfig {
    grid: usize,
    seed: u64,
    tol: f64,
    radius: f64,
    format: Option<String>,
    output: Option<std::path::PathBuf>,
}

impl RunConfig {
    fn resolve(args: &RunArgs) -> Result<Self, Error> {
        let grid = match args.grid {
            Some(n) => n,
            None => match std::env::var("HO_GRID") {
                Ok(v) => v
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidInput(format!("HO_GRID={v} is not a number")))?,
                Err(_) => 4096,
            },
        };
        if grid < 16 || !grid.is_power_of_two() {
            return Err(Error::InvalidInput(format!(
                "grid size must be a power of two ≥ 16, got {grid}"
            )));
        }
        if args.tol <= 0.0 || args.tol.is_nan() {
            return Err(Error::InvalidInput(format!(
                "tol must be positive, got {}",
                args.tol
            )));
        }
        let radius = args.radius.unwrap_or(1.0 - TAU / grid as f64);
        if !(radius > 0.0 && radius <= 1.0) {
            return Err(Error::InvalidInput(format!(
                "radius {radius} outside (0, 1]"
            )));
        }
        Ok(RunConfig {
            grid,
            seed: args.seed,
            tol: args.tol,
            radius,
            format: args.format.clone(),
            output: args.output.clone(),
        })
    }

    fn echo(&self) -> Value {
        json!({
            "grid": self.grid,
            "seed": self.seed,
            "tol": self.tol,
            "radius": self.radius,
        })
    }
}

/// Inline JSON, or the contents of a file when the argument is `@path`.
fn load_spec(text: &str) -> Result<String, Error> {
    if let Some(path) = text.strip_prefix('@') {
        std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidInput(format!("cannot read spec file {path}: {e}")))
    } else {
        Ok(text.to_string())
    }
}

fn emit(config: &RunConfig, command: &str, body: Value) -> Result<(), Error> {
    let report = json!({
        "schema_version": 1,
        "command": command,
        "config": config.echo(),
        "report": body,
    });
    let text = serde_json::to_string_pretty(&report).expect("report is serializable") + "\n";
    write_out(config, &text)
}

fn write_out(config: &RunConfig, text: &str) -> Result<(), Error> {
    match &config.output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::Numerical(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn growth_report(f: &growth::GrowthFunction) -> Value {
    let types = match f.estimate_types() {
        Ok(t) => json!({
            "lower_exponent": t.lower_exponent,
            "upper_exponent": t.upper_exponent,
            "constant_c": t.constant_c,
            "residual": t.residual,
            "warnings": t.warnings,
        }),
        Err(e) => json!({"error": format!("{e}")}),
    };
    let boyd = match f.boyd_indices() {
        Ok(i) => json!({"a_lower": i.a_lower, "b_upper": i.b_upper}),
        Err(e) => json!({"error": format!("{e}")}),
    };
    let dbl = f.check_doubling();
    json!({
        "kind": f.label(),
        "types": types,
        "boyd_indices": boyd,
        "doubling": {
            "delta2": dbl.delta2,
            "K": if dbl.k.is_finite() { json!(dbl.k) } else { json!("unbounded") },
            "nabla2": dbl.nabla2,
            "C": if dbl.c.is_finite() { json!(dbl.c) } else { Value::Null },
        },
    })
}

fn run(cli: Cli) -> Result<(), u8> {
    let config = RunConfig::resolve(&cli.run).map_err(print_error)?;
    let n = config.grid;
    let result: Result<(), Error> = (|| match cli.command {
        Command::Gf {
            cmd: GfCommand::Inspect { spec },
        } => {
            let f = parse_growth(&load_spec(&spec)?)?;
            emit(&config, "gf inspect", growth_report(&f))
        }
        Command::Norm {
            phi,
            function,
            boundary,
        } => {
            let phi = parse_growth(&load_spec(&phi)?)?;
            let body = match (function, boundary) {
                (Some(f), None) => {
                    let g = parse_analytic(&load_spec(&f)?, n)?;
                    let rep = hardy::hphi_norm(&g, &phi)?;
                    json!({
                        "space": format!("H^Phi with Phi = {}", phi.label()),
                        "value": rep.boundary_norm,
                        "radial": spec::radial_report_json(&rep),
                    })
                }
                (None, Some(b)) => {
                    let g = parse_boundary(&load_spec(&b)?, n)?;
                    let rep = circle::luxemburg_norm(&g, &phi)?;
                    json!({
                        "space": format!("L^Phi with Phi = {}", phi.label()),
                        "value": rep.value,
                        "bracket": [rep.bracket.0, rep.bracket.1],
                        "iterations": rep.iterations,
                        "warnings": rep.warnings,
                    })
                }
                _ => {
                    return Err(Error::InvalidInput(
                        "norm needs exactly one of --fn or --boundary".into(),
                    ))
                }
            };
            emit(&config, "norm", body)
        }
        Command::Factor { cmd } => match cmd {
            FactorCommand::Riesz {
                function,
                zeros,
                phi,
            } => {
                let g = parse_analytic(&load_spec(&function)?, n)?;
                let zeros = parse_zeros(&load_spec(&zeros)?)?;
                let phi = parse_growth(&load_spec(&phi)?)?;
                let rep = factor::divide_by_blaschke(&g, &zeros, &phi)?;
                emit(&config, "factor riesz", spec::factorization_json(&rep))
            }
            FactorCommand::InnerOuter {
                function,
                phi,
                zeros,
                sigma,
            } => {
                let g = parse_analytic(&load_spec(&function)?, n)?;
                let phi = parse_growth(&load_spec(&phi)?)?;
                let zeros = match zeros {
                    Some(z) => parse_zeros(&load_spec(&z)?)?,
                    None => factor::ZeroList::empty(),
                };
                let sigma = match sigma {
                    Some(s) => parse_measure(&load_spec(&s)?)?,
                    None => factor::AtomicMeasure::empty(),
                };
                let rep = factor::inner_outer(&g, &zeros, &sigma, &phi)?;
                emit(
                    &config,
                    "factor inner-outer",
                    spec::factorization_json(&rep),
                )
            }
            FactorCommand::Strong {
                function,
                phi1,
                phi2,
                phi3,
                zeros,
                sigma,
            } => {
                let g = parse_analytic(&load_spec(&function)?, n)?;
                let phi1 = parse_growth(&load_spec(&phi1)?)?;
                let phi2 = parse_growth(&load_spec(&phi2)?)?;
                let phi3 = parse_growth(&load_spec(&phi3)?)?;
                let zeros = match zeros {
                    Some(z) => parse_zeros(&load_spec(&z)?)?,
                    None => factor::ZeroList::empty(),
                };
                let sigma = match sigma {
                    Some(s) => parse_measure(&load_spec(&s)?)?,
                    None => factor::AtomicMeasure::empty(),
                };
                let rep = factor::strong_factorize(&g, &zeros, &sigma, &phi1, &phi2, &phi3)?;
                emit(&config, "factor strong", spec::factorization_json(&rep))
            }
        },
        Command::Hankel { cmd } => match cmd {
            HankelCommand::Apply { symbol, arg } => {
                let b = parse_analytic(&load_spec(&symbol)?, n)?;
                let g = parse_analytic(&load_spec(&arg)?, n)?;
                let h = hankel::hankel_apply(&b, &g)?;
                emit(&config, "hankel apply", spec::analytic_json(&h))
            }
            HankelCommand::Matrix { symbol, truncation } => {
                let b = parse_analytic(&load_spec(&symbol)?, n)?;
                let m = hankel::hankel_matrix(&b, truncation)?;
                let entries: Vec<Vec<Value>> = m
                    .entries()
                    .iter()
                    .map(|row| row.iter().map(|&z| spec::complex_json(z)).collect())
                    .collect();
                emit(
                    &config,
                    "hankel matrix",
                    json!({
                        "truncation": m.truncation(),
                        "entries": entries,
                        "top_singular_value": m.top_singular_value(),
                    }),
                )
            }
            HankelCommand::Norm { symbol, phi1, phi2 } => {
                let b = parse_analytic(&load_spec(&symbol)?, n)?;
                let phi1 = parse_growth(&load_spec(&phi1)?)?;
                let phi2 = parse_growth(&load_spec(&phi2)?)?;
                let dict = hankel::DictionaryConfig::default();
                let estimate = hankel::hankel_norm_estimate(&b, &phi1, &phi2, &dict, config.seed)?;
                let svd = hankel::hankel_matrix(&b, (n / 4).min(64))?.top_singular_value();
                emit(
                    &config,
                    "hankel norm",
                    json!({
                        "operator_estimate": estimate,
                        "h2_svd_reference": svd,
                        "dictionary": {
                            "monomials": dict.monomials,
                            "kernels": dict.kernels,
                            "random": dict.random,
                        },
                    }),
                )
            }
            HankelCommand::Loss { spec: s } => {
                let exp = parse_experiment(&load_spec(&s)?)?;
                let family = exp.build_family(n)?;
                let rep = hankel::loss_experiment(
                    &family,
                    &exp.phi1.build()?,
                    &exp.phi2.build()?,
                    &exp.dictionary.to_config(),
                    exp.seed,
                )?;
                emit_experiment(&config, "hankel loss", &rep)
            }
            HankelCommand::Gain { spec: s } => {
                let exp = parse_experiment(&load_spec(&s)?)?;
                let family = exp.build_family(n)?;
                let rep = hankel::gain_experiment(
                    &family,
                    &exp.phi1.build()?,
                    &exp.phi2.build()?,
                    &exp.dictionary.to_config(),
                    exp.seed,
                )?;
                emit_experiment(&config, "hankel gain", &rep)
            }
        },
        Command::Verify {
            cmd: VerifyCommand::All,
        } => {
            let checks = verify::run_all(n, config.seed);
            let failed = checks.iter().filter(|c| !c.pass).count();
            for c in &checks {
                println!(
                    "{} {} — {}",
                    if c.pass { "PASS" } else { "FAIL" },
                    c.name,
                    c.detail
                );
            }
            println!(
                "verify all: {}/{} checks passed (grid={}, seed={})",
                checks.len() - failed,
                checks.len(),
                n,
                config.seed
            );
            if failed > 0 {
                return Err(Error::Numerical(format!(
                    "{failed} verification checks failed"
                )));
            }
            Ok(())
        }
    })();
    match result {
        Ok(()) => Ok(()),
        Err(e) => Err(print_error(e)),
    }
}

fn emit_experiment(
    config: &RunConfig,
    command: &str,
    rep: &hankel::ExperimentReport,
) -> Result<(), Error> {
    let format = config.format.as_deref().unwrap_or("csv");
    if format == "csv" {
        write_out(config, &spec::experiment_csv(rep, &config.echo()))
    } else {
        emit(config, command, spec::experiment_json(rep))
    }
}

fn print_error(e: Error) -> u8 {
    eprintln!("error: {e}");
    e.exit_code() as u8
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let is_verify = matches!(cli.command, Command::Verify { .. });
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(code) => {
            // Verification failures exit 1; operational errors keep the
            // parse=2 / precondition=3 / numerical=4 code map (clap's own
            // usage errors already exit 2).
            if is_verify && code == 4 {
                ExitCode::from(EXIT_VERIFY_FAILED)
            } else if code == 0 {
                ExitCode::from(EXIT_INTERNAL)
            } else {
                ExitCode::from(code)
            }
        }
    }
}
