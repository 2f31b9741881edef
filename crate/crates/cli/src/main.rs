//! `moncart`: build monomial-Cartesian codes, their duals and derived
//! quantum and locally recoverable codes from TOML specifications.
//!
//! Exit codes: 0 on success (including "no" verdicts), 2 when a spec cannot
//! be parsed, 3 when it parses but describes an invalid or unsupported
//! construction.

mod spec;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use moncart::code::{Code, DEFAULT_DISTANCE_BUDGET};
use moncart::lrc::{self, ComponentLrc};
use moncart::poly::divide_by_power;
use moncart::quantum;
use moncart::Field;
use serde_json::json;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Semantic(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Semantic(_) => 3,
        }
    }

    pub fn context(self, what: &str) -> CliError {
        match self {
            CliError::Parse(m) => CliError::Parse(format!("{what}: {m}")),
            CliError::Semantic(m) => CliError::Semantic(format!("{what}: {m}")),
        }
    }
}

impl From<moncart::Error> for CliError {
    fn from(e: moncart::Error) -> Self {
        CliError::Semantic(e.to_string())
    }
}

#[derive(Parser)]
#[command(
    name = "moncart",
    version,
    about = "Monomial-Cartesian codes: duals, LCD and dual-containing checks, CSS parameters, LRC availability"
)]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    Lcd,
    DualContaining,
}

#[derive(Subcommand)]
enum Command {
    /// Print n, k and the generator matrix.
    Build { spec: PathBuf },
    /// Print the parity-check matrix built from the Q_b polynomials.
    Dual {
        spec: PathBuf,
        /// Also list the quotients q_{i,j} and every Q_b.
        #[arg(long)]
        show_q: bool,
    },
    /// Decide LCD or dual containment and print the certificate.
    Check {
        spec: PathBuf,
        #[arg(long, value_enum)]
        property: Property,
    },
    /// Stabilizer parameters of C(S, A_t) with S_i the first n_i field elements.
    Quantum {
        /// Field order.
        #[arg(long)]
        q: u64,
        /// Component sizes n_i, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        /// Offsets t_i, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        offsets: Vec<usize>,
    },
    /// Availability check of the direct product of one-variable box codes.
    LrcSim {
        #[arg(required = true)]
        specs: Vec<PathBuf>,
        /// Random codewords when the product code is too large to enumerate.
        #[arg(long, default_value_t = lrc::DEFAULT_TRIALS)]
        trials: usize,
        #[arg(long, default_value_t = lrc::DEFAULT_SEED)]
        seed: u64,
    },
    /// Exact minimum distance by enumeration.
    Distance {
        spec: PathBuf,
        #[arg(long, default_value_t = DEFAULT_DISTANCE_BUDGET)]
        budget: u128,
    },
}

fn build(path: &Path) -> Result<Code, CliError> {
    let spec = spec::load(path)?;
    Ok(Code::build(spec.set, spec.exponents)?)
}

fn emit(json: bool, value: serde_json::Value, text: String) -> String {
    if json {
        let mut s = serde_json::to_string_pretty(&value).expect("serializable report");
        s.push('\n');
        s
    } else {
        text
    }
}

fn run(cli: Cli) -> Result<String, CliError> {
    let json = cli.json;
    match cli.command {
        Command::Build { spec } => {
            let code = build(&spec)?;
            Ok(emit(
                json,
                json!({ "n": code.n(), "k": code.k(), "generator": code.generator() }),
                format!("n={} k={}\n{}", code.n(), code.k(), code.generator().to_text()),
            ))
        }
        Command::Dual { spec, show_q } => {
            let code = build(&spec)?;
            let dual = code.dual_basis();
            let mut text = format!("n={} k={} dual_dim={}\n", code.n(), code.k(), dual.matrix.rows());
            if dual.matrix.rows() == 0 {
                text.push_str("dual is the zero code\n");
            }
            text.push_str(&dual.matrix.to_text());
            let mut value = json!({
                "n": code.n(),
                "k": code.k(),
                "dual_dim": dual.matrix.rows(),
                "parity_check": &dual.matrix,
            });
            if show_q {
                let set = code.set();
                let mut quotients = Vec::new();
                text.push_str("quotients:\n");
                for (i, l) in set.vanishing_generators().iter().enumerate() {
                    for j in 0..set.sizes()[i] {
                        let q = divide_by_power(l, j + 1)?.0.render();
                        text.push_str(&format!("q_{},{j} = {q}\n", i + 1));
                        quotients.push(json!({ "var": i + 1, "j": j, "q": q }));
                    }
                }
                text.push_str("Q_b:\n");
                let mut qb = Vec::new();
                for (b, q) in dual.exponents.iter().zip(&dual.q_polynomials) {
                    text.push_str(&format!("b={b} Q={}\n", q.render()));
                    qb.push(json!({ "b": b, "q": q.render() }));
                }
                value["quotients"] = json!(quotients);
                value["q_b"] = json!(qb);
            }
            Ok(emit(json, value, text))
        }
        Command::Check { spec, property } => {
            let code = build(&spec)?;
            let yes_no = |b: bool| if b { "yes" } else { "no" };
            Ok(match property {
                Property::Lcd => {
                    let cert = code.is_lcd();
                    emit(
                        json,
                        json!({ "property": "lcd", "verdict": cert.lcd, "certificate": &cert }),
                        format!("LCD: {}\n{cert}", yes_no(cert.lcd)),
                    )
                }
                Property::DualContaining => {
                    let cert = code.is_dual_containing();
                    emit(
                        json,
                        json!({ "property": "dual-containing", "verdict": cert.holds, "certificate": &cert }),
                        format!("DUAL-CONTAINING: {}\n{cert}", yes_no(cert.holds)),
                    )
                }
            })
        }
        Command::Quantum { q, sizes, offsets } => {
            let field = Field::with_order(q)?;
            let set = quantum::standard_set(&field, &sizes)?;
            let params = quantum::derive_stabilizer_params(&set, &offsets).map_err(|e| match e {
                moncart::Error::ContainmentFailed(_) => {
                    let formula = quantum::css_formula(q, &sizes, &offsets);
                    CliError::Semantic(format!(
                        "{e}; no stabilizer code is derived (the parameter formula alone would give {formula})"
                    ))
                }
                other => other.into(),
            })?;
            Ok(emit(
                json,
                serde_json::to_value(&params).expect("serializable"),
                format!(
                    "{params}\npure_to={} (recorded, not verified)\ncertificate={}\n",
                    params.pure_to, params.certificate_ref
                ),
            ))
        }
        Command::LrcSim { specs, trials, seed } => {
            let mut comps: Vec<ComponentLrc> = Vec::with_capacity(specs.len());
            for path in &specs {
                let spec = spec::load(path)?;
                let ctx = |m: String| CliError::Semantic(format!("{}: {m}", path.display()));
                if spec.set.nvars() != 1 {
                    return Err(ctx("components must be one-variable sets".into()));
                }
                let k = spec.exponents.len();
                if spec.exponents.exponents().iter().any(|e| e.0[0] as usize >= k) {
                    return Err(ctx("component exponents must be {0, ..., k-1}".into()));
                }
                if let Some(first) = comps.first() {
                    if first.field() != spec.set.field() {
                        return Err(ctx("components are over different fields".into()));
                    }
                }
                comps.push(lrc::make_rs_component(spec.set, k).map_err(|e| ctx(e.to_string()))?);
            }
            let report = lrc::availability_report(&comps, trials, seed)?;
            Ok(emit(json, serde_json::to_value(&report).expect("serializable"), report.to_string()))
        }
        Command::Distance { spec, budget } => {
            let code = build(&spec)?;
            let d = code.min_distance_exhaustive(budget)?;
            Ok(emit(
                json,
                json!({ "n": code.n(), "k": code.k(), "d": d }),
                format!("n={} k={} d={d}\n", code.n(), code.k()),
            ))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
