//! Command-line front end. Every command produces a JSON payload and an exit
//! code: 0 ok/pass, 1 failure or internal error, 2 rejected input.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::circleindex::{ind2, ind2_oracle, CircleIndexResult, LoopFile, MatrixLoop};
use crate::harness::{
    self, fixtures, load_scenario, run_suite, HarnessError, Mode, Suite, SuiteConfig,
    VerificationReport,
};
use crate::simplicial::io::{read_complex_file, ComplexFile, FormatError};
use crate::simplicial::{
    betti_over, boundary_subcomplex, cut, euler, glue, kappa, kappa_relative, product_complex,
    relative_betti_over, standard, ComplexPair, Field, SimplicialComplex,
};

#[derive(Debug, Parser)]
#[command(
    name = "kervaire",
    version,
    about = "Kervaire semi-characteristics and mod-2 circle indices"
)]
pub struct Cli {
    /// Human-readable summary instead of JSON.
    #[arg(long, global = true)]
    pub pretty: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, clap::Args)]
pub struct ComplexArgs {
    /// Complex file (JSON).
    pub complex: PathBuf,
    /// Subcomplex: a complex file, or `boundary`.
    #[arg(long)]
    pub sub: Option<String>,
    /// Relative to `--sub`, else the file's `sub_top_simplices`, else the boundary.
    #[arg(long)]
    pub rel: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Betti numbers (relative when a subcomplex is given).
    Betti {
        #[command(flatten)]
        input: ComplexArgs,
        /// Coefficients in GF(2) instead of the rationals.
        #[arg(long)]
        gf2: bool,
    },
    /// Kervaire semi-characteristic (relative with --rel or --sub).
    Kappa {
        #[command(flatten)]
        input: ComplexArgs,
    },
    /// Euler characteristic.
    Euler {
        #[command(flatten)]
        input: ComplexArgs,
    },
    /// Mod-2 index of a loop of symmetric matrices.
    CircleIndex {
        loop_file: PathBuf,
        /// Use the dense 2^m operator instead of the wedge construction.
        #[arg(long)]
        oracle: bool,
    },
    /// Randomized property suite.
    Check {
        suite: Suite,
        #[arg(long, default_value_t = harness::DEFAULT_TRIALS)]
        trials: usize,
        #[arg(long, default_value_t = harness::DEFAULT_SEED)]
        seed: u64,
        /// Vector space dimension (clifford, lemma1) or maximal simplex
        /// dimension (euler-les).
        #[arg(long)]
        dim: Option<usize>,
    },
    /// Verify a theorem on a scenario.
    Verify { mode: VerifyMode, scenario: PathBuf },
    /// Construct fixture complexes.
    Build {
        #[command(subcommand)]
        what: BuildTarget,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum VerifyMode {
    Counting,
    Closed,
    Cutpaste,
}

#[derive(Debug, Subcommand)]
pub enum BuildTarget {
    /// The shipped corpus: complexes, loops and scenarios.
    Fixtures {
        #[arg(long)]
        out: PathBuf,
    },
    /// Boundary of the n-simplex.
    BoundarySimplex {
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Staircase product of two complexes (sorted vertex orders).
    Product {
        first: PathBuf,
        second: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cut a scenario's manifold and reglue it under one of its automorphisms.
    Reglue {
        scenario: PathBuf,
        #[arg(long, default_value_t = 0)]
        automorphism: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

impl clap::ValueEnum for Suite {
    fn value_variants<'a>() -> &'a [Self] {
        &Suite::ALL
    }

    fn to_possible_value(&self) -> Option<clap::builder::PossibleValue> {
        Some(clap::builder::PossibleValue::new(self.name()))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CommandResult {
    pub command: String,
    pub status: i32,
    pub payload: Value,
}

impl CommandResult {
    fn ok(command: &str, payload: Value) -> Self {
        Self::with_status(command, 0, payload)
    }

    fn with_status(command: &str, status: i32, payload: Value) -> Self {
        CommandResult {
            command: command.to_string(),
            status,
            payload,
        }
    }

    fn error(command: &str, e: &HarnessError) -> Self {
        Self::with_status(
            command,
            e.exit_code(),
            json!({"error": e.kind(), "message": e.to_string()}),
        )
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("payload serializes")
}

fn validation(e: impl std::fmt::Display) -> HarnessError {
    HarnessError::Validation(e.to_string())
}

fn read_complex(path: &Path) -> Result<ComplexFile, HarnessError> {
    read_complex_file(path).map_err(|e| match e {
        FormatError::Json(err) => HarnessError::Parse(format!("{}: {err}", path.display())),
        other => other.into(),
    })
}

/// Total complex and, when requested, the pair it is taken relative to.
fn load_input(
    input: &ComplexArgs,
) -> Result<(SimplicialComplex, Option<ComplexPair>), HarnessError> {
    let (total, file_sub) = read_complex(&input.complex)?.build()?;
    let sub = match (input.sub.as_deref(), input.rel) {
        (Some("boundary"), _) => Some(boundary_subcomplex(&total)?),
        (Some(path), _) => {
            let (s, _) = read_complex(Path::new(path))?.build()?;
            Some(s)
        }
        (None, true) => Some(match file_sub {
            Some(s) => s,
            None => boundary_subcomplex(&total)?,
        }),
        (None, false) => None,
    };
    let pair = sub
        .map(|s| ComplexPair::new(total.clone(), s))
        .transpose()?;
    Ok((total, pair))
}

fn read_loop(path: &Path) -> Result<MatrixLoop, HarnessError> {
    let text = std::fs::read_to_string(path).map_err(|source| HarnessError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let file: LoopFile = serde_json::from_str(&text)
        .map_err(|e| HarnessError::Parse(format!("{}: {e}", path.display())))?;
    Ok(MatrixLoop::try_from(file)?)
}

fn write_json(path: &Path, value: &impl Serialize) -> Result<(), HarnessError> {
    let text = serde_json::to_string_pretty(value).expect("serializes") + "\n";
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(|source| HarnessError::Io {
            path: dir.display().to_string(),
            source,
        })?;
    }
    std::fs::write(path, text).map_err(|source| HarnessError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn emit_complex(c: &SimplicialComplex, out: Option<&Path>) -> Result<Value, HarnessError> {
    let file = ComplexFile::from_complex(c);
    match out {
        Some(path) => {
            write_json(path, &file)?;
            Ok(json!({"written": [path.display().to_string()], "f_vector": c.f_vector()}))
        }
        None => Ok(to_value(&file)),
    }
}

pub fn run(cli: &Cli) -> CommandResult {
    let name = command_name(&cli.command);
    match execute(&cli.command) {
        Ok(r) => r,
        Err(e) => CommandResult::error(name, &e),
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Betti { .. } => "betti",
        Command::Kappa { .. } => "kappa",
        Command::Euler { .. } => "euler",
        Command::CircleIndex { .. } => "circle-index",
        Command::Check { .. } => "check",
        Command::Verify { .. } => "verify",
        Command::Build { .. } => "build",
    }
}

fn execute(command: &Command) -> Result<CommandResult, HarnessError> {
    let name = command_name(command);
    match command {
        Command::Betti { input, gf2 } => {
            let field = if *gf2 { Field::Gf2 } else { Field::Rational };
            let (total, pair) = load_input(input)?;
            let b = match &pair {
                Some(p) => relative_betti_over(p, field),
                None => betti_over(&total, field),
            };
            Ok(CommandResult::ok(name, json!({"betti": b})))
        }
        Command::Kappa { input } => {
            let (total, pair) = load_input(input)?;
            let k = match &pair {
                Some(p) => kappa_relative(p),
                None => kappa(&total),
            };
            Ok(CommandResult::ok(name, json!({"kappa": k})))
        }
        Command::Euler { input } => {
            let (total, pair) = load_input(input)?;
            let payload = match &pair {
                Some(p) => {
                    let r = harness::euler_les_check(p);
                    let d = r.euler.expect("euler details");
                    json!({
                        "euler": d.euler_relative,
                        "euler_total": d.euler_total,
                        "euler_sub": d.euler_sub,
                        "status": r.status,
                    })
                }
                None => json!({"euler": euler(&total)}),
            };
            Ok(CommandResult::ok(name, payload))
        }
        Command::CircleIndex { loop_file, oracle } => {
            let l = read_loop(loop_file)?;
            let r: CircleIndexResult = if *oracle { ind2_oracle(&l) } else { ind2(&l) }?;
            let mut v = to_value(&r);
            v["route"] = json!(if *oracle { "oracle" } else { "wedge" });
            Ok(CommandResult::ok(name, v))
        }
        Command::Check {
            suite,
            trials,
            seed,
            dim,
        } => {
            let cfg = SuiteConfig {
                trials: *trials,
                seed: *seed,
                dim: dim.unwrap_or(suite.default_dim()),
            };
            let r = run_suite(*suite, cfg)?;
            let status = if r.passed() { 0 } else { 1 };
            Ok(CommandResult::with_status(name, status, to_value(&r)))
        }
        Command::Verify { mode, scenario } => verify(name, *mode, scenario),
        Command::Build { what } => build(name, what),
    }
}

fn verify(name: &str, mode: VerifyMode, path: &Path) -> Result<CommandResult, HarnessError> {
    let report_mode = match mode {
        VerifyMode::Counting => Mode::Counting,
        VerifyMode::Closed => Mode::Closed,
        VerifyMode::Cutpaste => Mode::Cutpaste,
    };
    let refused = |e: &HarnessError, scenario: Option<&str>| {
        let r = VerificationReport::precondition_violated(report_mode, scenario, e);
        CommandResult::with_status(name, 2, to_value(&r))
    };
    let s = match load_scenario(path) {
        Ok(s) => s,
        Err(e @ HarnessError::Precondition(_)) => return Ok(refused(&e, None)),
        Err(e) => return Err(e),
    };
    let outcome = match mode {
        VerifyMode::Counting => harness::verify_counting(&s),
        VerifyMode::Closed => harness::verify_closed(&s),
        VerifyMode::Cutpaste => harness::verify_cutpaste_scenario(&s),
    };
    match outcome {
        Ok(r) => {
            let status = if r.passed() && r.fixture_errors.is_empty() {
                0
            } else {
                1
            };
            Ok(CommandResult::with_status(name, status, to_value(&r)))
        }
        Err(e @ HarnessError::Precondition(_)) => Ok(refused(&e, Some(&s.name))),
        Err(e) => Err(e),
    }
}

fn build(name: &str, what: &BuildTarget) -> Result<CommandResult, HarnessError> {
    let payload = match what {
        BuildTarget::Fixtures { out } => {
            let written = write_corpus(out)?;
            json!({"written": written})
        }
        BuildTarget::BoundarySimplex { n, out } => {
            emit_complex(&standard::boundary_of_simplex(*n), out.as_deref())?
        }
        BuildTarget::Product { first, second, out } => {
            let (a, _) = read_complex(first)?.build()?;
            let (b, _) = read_complex(second)?.build()?;
            emit_complex(&product_complex(&a, &b), out.as_deref())?
        }
        BuildTarget::Reglue {
            scenario,
            automorphism,
            out,
        } => {
            let s = load_scenario(scenario)?;
            let spec = s
                .cut
                .as_ref()
                .ok_or_else(|| validation("scenario has no cut section"))?;
            let phi = spec.automorphisms.get(*automorphism).ok_or_else(|| {
                validation(format!(
                    "automorphism {automorphism} out of range ({} given)",
                    spec.automorphisms.len()
                ))
            })?;
            let pieces = cut(s.manifold.total(), &spec.sides)?;
            let glued = glue(&pieces.first, &pieces.second, phi)?;
            emit_complex(&glued, out.as_deref())?
        }
    };
    Ok(CommandResult::ok(name, payload))
}

/// Writes the shipped complexes, loops and scenarios under `dir` and returns
/// the written paths.
pub fn write_corpus(dir: &Path) -> Result<Vec<String>, HarnessError> {
    let mut written = Vec::new();
    let mut put = |rel: &str, value: Value| -> Result<(), HarnessError> {
        let path = dir.join(rel);
        write_json(&path, &value)?;
        written.push(path.display().to_string());
        Ok(())
    };
    for (file, value) in fixtures::corpus() {
        put(&file, value)?;
    }
    Ok(written)
}

/// Plain-text rendering of a payload for `--pretty`.
pub fn pretty(result: &CommandResult) -> String {
    let p = &result.payload;
    if let Some(err) = p.get("error") {
        return format!(
            "{}: {} ({})",
            result.command,
            p["message"].as_str().unwrap_or(""),
            err.as_str().unwrap_or("")
        );
    }
    match result.command.as_str() {
        "betti" => format!("Betti numbers: {}", p["betti"]),
        "kappa" => format!("kappa = {}", p["kappa"]),
        "euler" => format!("Euler characteristic: {}", p["euler"]),
        "circle-index" => format!(
            "monodromy {:+}, kernel parity {}, ind2 = {} (min overlap {:.3}, {} route)",
            p["monodromy"].as_i64().unwrap_or(0),
            p["parity"].as_str().unwrap_or("?"),
            p["ind2"],
            p["min_overlap"].as_f64().unwrap_or(f64::NAN),
            p["route"].as_str().unwrap_or("?"),
        ),
        "check" => {
            let mut s = format!(
                "{} (dim {}, seed {}): {} trials, {} checks, {} failures",
                p["suite"].as_str().unwrap_or("?"),
                p["dim"],
                p["seed"],
                p["trials"],
                p["checks"],
                p["failures"]
            );
            if let Some(f) = p.get("first_failure") {
                s += &format!(
                    "\nfirst failure: trial {} ({})",
                    f["trial"],
                    f["detail"].as_str().unwrap_or("")
                );
            }
            s
        }
        "verify" => {
            let mut s = format!(
                "{} {}: lhs = {}, rhs = {} -> {}",
                p["mode"].as_str().unwrap_or("?"),
                p["scenario"].as_str().unwrap_or(""),
                p["lhs"],
                p["rhs"],
                p["status"].as_str().unwrap_or("?"),
            );
            if let Some(circles) = p["per_circle"].as_array() {
                for c in circles {
                    s += &format!(
                        "\n  circle {} ({}{}): ind2 = {}",
                        c["index"],
                        c["location"].as_str().unwrap_or("?"),
                        if c["counted"].as_bool() == Some(true) {
                            ""
                        } else {
                            ", not counted"
                        },
                        c["ind2"]
                    );
                }
            }
            if let Some(d) = p.get("cutpaste") {
                s += &format!(
                    "\n  kappa(M1,dM1) = {}, kappa(M2,dM2) = {}",
                    d["kappa_first_relative"], d["kappa_second_relative"]
                );
                for t in d["twists"].as_array().into_iter().flatten() {
                    s += &format!(
                        "\n  reglued with automorphism {}: kappa = {}",
                        t["automorphism"], t["kappa"]
                    );
                }
            }
            for key in ["notes", "fixture_errors"] {
                for n in p[key].as_array().into_iter().flatten() {
                    s += &format!(
                        "\n  {}: {}",
                        key.trim_end_matches('s'),
                        n.as_str().unwrap_or("")
                    );
                }
            }
            s
        }
        _ => serde_json::to_string_pretty(p).expect("serializes"),
    }
}
