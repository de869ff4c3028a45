//! Command-line front end: verification suites, conformal transforms,
//! twistor computations and purity checks, JSON in and out.
//!
//! Exit codes: 0 success / all checks pass, 1 computation ran but checks
//! failed, 2 usage or input error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use paravec::algebra::multivector::scalar_to_json;
use paravec::algebra::Backend;
use paravec::conformal::{
    compactify, mobius_from_json, paravector_from_json, paravector_coeff_array,
};
use paravec::error::Error;
use paravec::purespinor::{
    annihilator, flag_vector, generalized_flagpole, orbit_dimension, penrose_flagpole, FockSpinor,
};
use paravec::twistor::{
    incidence, reference_twistor, robinson_locus, FourVector, WeylSpinor,
};
use paravec::verify::{run_scope, Scope, SuiteConfig};

#[derive(Parser)]
#[command(
    name = "paravec",
    about = "Exact Clifford-algebra engine: conformal maps, twistors, pure spinors",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonOpts {
    /// Seed for randomized sweeps
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Use complex doubles instead of exact Gaussian rationals
    #[arg(long)]
    float: bool,
    /// Residual tolerance (float mode only)
    #[arg(long, default_value_t = 1e-9)]
    tolerance: f64,
    /// Read the JSON payload from a file instead of the command line
    #[arg(long)]
    input: Option<PathBuf>,
    /// Write the JSON result to a file instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

impl CommonOpts {
    fn backend(&self) -> Backend {
        if self.float {
            Backend::Float
        } else {
            Backend::Exact
        }
    }

    fn config(&self) -> SuiteConfig {
        SuiteConfig {
            seed: self.seed,
            backend: self.backend(),
            tolerance: self.tolerance,
        }
    }

    fn payload(&self, inline: &Option<String>) -> Result<Value, Error> {
        let text = match (&self.input, inline) {
            (Some(path), None) => fs::read_to_string(path)
                .map_err(|e| Error::invalid(format!("cannot read {}: {e}", path.display())))?,
            (None, Some(s)) => s.clone(),
            (Some(_), Some(_)) => {
                return Err(Error::invalid("give either an inline payload or --input"))
            }
            (None, None) => return Err(Error::invalid("missing payload (inline or --input)")),
        };
        serde_json::from_str(&text).map_err(|e| Error::invalid(format!("bad JSON: {e}")))
    }

    fn emit(&self, value: &Value) -> Result<(), Error> {
        let text = format!("{}\n", serde_json::to_string(value).expect("serializable"));
        match &self.output {
            Some(path) => fs::write(path, text)
                .map_err(|e| Error::invalid(format!("cannot write {}: {e}", path.display()))),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run identity verification suites
    Verify {
        /// all | algebra | conformal | generators | twistor | pure
        #[arg(value_parser = parse_scope)]
        scope: Scope,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Apply a conformal map to a point: {"map":{...},"point":[a5,a1,a2,a3]}
    Transform {
        payload: Option<String>,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Twistor computations
    Twistor {
        #[command(subcommand)]
        mode: TwistorMode,
    },
    /// Pure-spinor computations
    Pure {
        #[command(subcommand)]
        mode: PureMode,
    },
}

#[derive(Subcommand)]
enum TwistorMode {
    /// Build a reference twistor: {"x":[t,x,y,z],"xi":[[re,im],[re,im]]}
    Build {
        payload: Option<String>,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Incidence product: {"x":[...],"x_prime":[...],"xi":[...]}
    Incidence {
        payload: Option<String>,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Zero locus over a grid: {"x":[...],"xi":[...],"grid":[[...],...]}
    /// or {"grid_range":[lo,hi]} for an integer box
    Locus {
        payload: Option<String>,
        #[command(flatten)]
        opts: CommonOpts,
    },
}

#[derive(Subcommand)]
enum PureMode {
    /// Purity check; exits 1 when the spinor is impure
    Check {
        payload: Option<String>,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Orbit dimension of a pure spinor class
    OrbitDim {
        payload: Option<String>,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Flag vector and flagpole 2-forms
    Flagpole {
        payload: Option<String>,
        #[command(flatten)]
        opts: CommonOpts,
    },
}

fn parse_scope(s: &str) -> Result<Scope, String> {
    s.parse()
}

fn parse_xi(v: &Value, backend: Backend) -> Result<WeylSpinor, Error> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::invalid("\"xi\" must be a 2-array of [re,im] pairs"))?;
    if arr.len() != 2 {
        return Err(Error::invalid("\"xi\" must have 2 components"));
    }
    let mut xi = [
        paravec::Scalar::zero(backend),
        paravec::Scalar::zero(backend),
    ];
    for (i, pair) in arr.iter().enumerate() {
        xi[i] = match pair {
            Value::Array(p) if p.len() == 2 => {
                paravec::algebra::multivector::scalar_from_json(Some(&p[0]), Some(&p[1]), backend)?
            }
            other => paravec::algebra::multivector::scalar_from_json(Some(other), None, backend)?,
        };
    }
    Ok(WeylSpinor::dotted_from_xi(xi))
}

fn field<'v>(v: &'v Value, name: &str) -> Result<&'v Value, Error> {
    v.get(name)
        .ok_or_else(|| Error::invalid(format!("missing \"{name}\"")))
}

fn run_verify(scope: Scope, opts: &CommonOpts) -> Result<ExitCode, Error> {
    let cfg = opts.config();
    let reports = run_scope(scope, &cfg);
    let pass = reports.iter().all(|r| r.pass);
    let out = json!({
        "seed": cfg.seed,
        "backend": if opts.float { "float" } else { "exact" },
        "suites": reports,
        "pass": pass,
    });
    opts.emit(&out)?;
    Ok(if pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn run_transform(payload: &Option<String>, opts: &CommonOpts) -> Result<ExitCode, Error> {
    let backend = opts.backend();
    let v = opts.payload(payload)?;
    let map = mobius_from_json(field(&v, "map")?, backend)?;
    let point = paravector_from_json(field(&v, "point")?, backend)?;
    let out = match map.apply(&point) {
        Ok((image, delta)) => {
            let (dre, dim) = scalar_to_json(&delta);
            json!({
                "at_infinity": false,
                "x_prime": paravector_coeff_array(&image),
                "delta": {"re": dre, "im": dim},
            })
        }
        Err(Error::AtInfinity) => {
            let projective = map.twisted_adjoint(&compactify(&point));
            json!({
                "at_infinity": true,
                "projective": projective.to_json(),
            })
        }
        Err(e) => return Err(e),
    };
    opts.emit(&out)?;
    Ok(ExitCode::SUCCESS)
}

fn run_twistor(mode: &TwistorMode) -> Result<ExitCode, Error> {
    match mode {
        TwistorMode::Build { payload, opts } => {
            let backend = opts.backend();
            let v = opts.payload(payload)?;
            let x = FourVector::from_json(field(&v, "x")?, backend)?;
            let xi = parse_xi(field(&v, "xi")?, backend)?;
            let twistor = reference_twistor(&x, &xi)?;
            opts.emit(&json!({"eta": twistor.eta.to_json()}))?;
            Ok(ExitCode::SUCCESS)
        }
        TwistorMode::Incidence { payload, opts } => {
            let backend = opts.backend();
            let v = opts.payload(payload)?;
            let x = FourVector::from_json(field(&v, "x")?, backend)?;
            let xp = FourVector::from_json(field(&v, "x_prime")?, backend)?;
            let xi = parse_xi(field(&v, "xi")?, backend)?;
            let j = incidence(&x, &xp, &xi)?;
            let (re, im) = scalar_to_json(&j);
            opts.emit(&json!({"J": [re, im]}))?;
            Ok(ExitCode::SUCCESS)
        }
        TwistorMode::Locus { payload, opts } => {
            let backend = opts.backend();
            let v = opts.payload(payload)?;
            let x = FourVector::from_json(field(&v, "x")?, backend)?;
            let xi = parse_xi(field(&v, "xi")?, backend)?;
            let grid: Vec<FourVector> = if let Some(g) = v.get("grid") {
                let arr = g
                    .as_array()
                    .ok_or_else(|| Error::invalid("\"grid\" must be an array of vectors"))?;
                arr.iter()
                    .map(|p| FourVector::from_json(p, backend))
                    .collect::<Result<_, _>>()?
            } else if let Some(r) = v.get("grid_range") {
                let arr = r
                    .as_array()
                    .filter(|a| a.len() == 2)
                    .ok_or_else(|| Error::invalid("\"grid_range\" must be [lo, hi]"))?;
                let lo = arr[0]
                    .as_i64()
                    .ok_or_else(|| Error::invalid("bad grid_range low bound"))?;
                let hi = arr[1]
                    .as_i64()
                    .ok_or_else(|| Error::invalid("bad grid_range high bound"))?;
                if lo > hi || (hi - lo) > 8 {
                    return Err(Error::invalid("grid_range must satisfy lo <= hi <= lo+8"));
                }
                let mut grid = Vec::new();
                for t in lo..=hi {
                    for a in lo..=hi {
                        for b in lo..=hi {
                            for c in lo..=hi {
                                grid.push(FourVector::from_i64(backend, [t, a, b, c]));
                            }
                        }
                    }
                }
                grid
            } else {
                return Err(Error::invalid("missing \"grid\" or \"grid_range\""));
            };
            let locus = robinson_locus(&x, &xi, &grid, opts.tolerance)?;
            let hits: Vec<Value> = locus.iter().map(FourVector::to_json).collect();
            opts.emit(&json!({"count": hits.len(), "locus": hits}))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn run_pure(mode: &PureMode) -> Result<ExitCode, Error> {
    match mode {
        PureMode::Check { payload, opts } => {
            let v = opts.payload(payload)?;
            let u = FockSpinor::from_json(&v, opts.backend())?;
            let ann = annihilator(&u)?;
            let pure = ann.dim == u.n() as usize;
            opts.emit(&json!({"pure": pure, "dim": ann.dim}))?;
            Ok(if pure { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        PureMode::OrbitDim { payload, opts } => {
            let v = opts.payload(payload)?;
            let u = FockSpinor::from_json(&v, opts.backend())?;
            let dim = orbit_dimension(&u)?;
            opts.emit(&json!({"dim": dim}))?;
            Ok(ExitCode::SUCCESS)
        }
        PureMode::Flagpole { payload, opts } => {
            let v = opts.payload(payload)?;
            let u = FockSpinor::from_json(&v, opts.backend())?;
            let out = json!({
                "p": flag_vector(&u).to_json(),
                "f": penrose_flagpole(&u).to_json(),
                "g": generalized_flagpole(&u).to_json(),
            });
            opts.emit(&out)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn dispatch(cli: &Cli) -> Result<ExitCode, Error> {
    match &cli.command {
        Command::Verify { scope, opts } => run_verify(*scope, opts),
        Command::Transform { payload, opts } => run_transform(payload, opts),
        Command::Twistor { mode } => run_twistor(mode),
        Command::Pure { mode } => run_pure(mode),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
