//! `graphcurv` command-line driver.
//!
//! Exit codes: 0 success, 1 a check failed, 2 a hypothesis of a requested
//! check does not hold, 3 input or validation error, 4 numerical failure.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::curvature::{curvature_function, CurvatureProfile, Dimension, DEFAULT_TOL};
use crate::error::{Error, Result};
use crate::graph::{paper_example, MeasuredWeightedGraph};
use crate::report::json_f64;
use crate::semigroup::{kato_condition_check_with, kato_window_search, KatoVariant, Semigroup, DEFAULT_QUAD_TOL};
use crate::spectral::{cheeger_constant, ground_state, lambda1, spectral_positivity, CHEEGER_MAX_VERTICES};
use crate::theorems::{run_suite, Suite, VerifyConfig, DEFAULT_T_GRID_FACTORS};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_HYPOTHESIS: i32 = 2;
pub const EXIT_INPUT: i32 = 3;
pub const EXIT_NUMERICAL: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "graphcurv",
    version,
    about = "Bakry-Emery curvature and spectral checks on measured weighted graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum VariantArg {
    A,
    B,
}

impl From<VariantArg> for KatoVariant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::A => KatoVariant::A,
            VariantArg::B => KatoVariant::B,
        }
    }
}

#[derive(Debug, Args)]
pub struct RhoArgs {
    /// Dimension parameter n, a positive number or `inf`.
    #[arg(long = "dim", default_value = "inf")]
    pub dim: String,
    /// `from-curvature`, or a JSON file mapping vertex id to value.
    #[arg(long = "rho", default_value = "from-curvature")]
    pub rho: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Pointwise curvature at every vertex.
    Curvature {
        graph: PathBuf,
        #[arg(long = "dim", default_value = "inf")]
        dim: String,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Kato constant of (rho - K)_- and its threshold comparison.
    Kato {
        graph: PathBuf,
        #[arg(long = "K")]
        k: f64,
        #[arg(long = "T")]
        t: f64,
        #[arg(long, value_enum, default_value = "b")]
        variant: VariantArg,
        #[arg(long)]
        strict: bool,
        #[command(flatten)]
        rho: RhoArgs,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Admissible (K, T) pairs on a grid, as CSV.
    KatoWindow {
        graph: PathBuf,
        /// `start:end:steps`
        #[arg(long = "K-grid")]
        k_grid: String,
        /// `start:end:steps`
        #[arg(long = "T-grid")]
        t_grid: String,
        #[arg(long, value_enum, default_value = "b")]
        variant: VariantArg,
        #[command(flatten)]
        rho: RhoArgs,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// lambda1, ground state of L/2 + rho, and the Cheeger constant.
    Spectrum {
        graph: PathBuf,
        #[command(flatten)]
        rho: RhoArgs,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Run verification checks and emit one JSON report per line.
    Verify {
        graph: PathBuf,
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long = "K")]
        k: f64,
        #[arg(long = "T")]
        t: f64,
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long = "tol-report", default_value_t = crate::report::DEFAULT_TOL_REPORT)]
        tol_report: f64,
        #[command(flatten)]
        rho: RhoArgs,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Write a built-in example graph.
    Example {
        /// Example name; only `paper3` is available.
        name: String,
        #[arg(long, default_value_t = 0.01)]
        eps: f64,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
}

fn load_graph(path: &Path) -> Result<MeasuredWeightedGraph> {
    let bytes = std::fs::read(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    MeasuredWeightedGraph::from_json(&bytes)
}

/// Reads a JSON object mapping every vertex id to a finite number.
pub fn load_rho_file(g: &MeasuredWeightedGraph, path: &Path) -> Result<Vec<f64>> {
    let bytes = std::fs::read(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let map: BTreeMap<String, f64> =
        serde_json::from_slice(&bytes).map_err(|e| Error::Schema(format!("rho file: {e}")))?;
    let mut rho = vec![f64::NAN; g.len()];
    for (label, value) in &map {
        rho[g.vertex_index(label)?] = *value;
    }
    if let Some(x) = rho.iter().position(|v| !v.is_finite()) {
        return Err(Error::Schema(format!(
            "rho file: missing or non-finite value for `{}`",
            g.id(x)
        )));
    }
    Ok(rho)
}

fn resolve_rho(g: &MeasuredWeightedGraph, args: &RhoArgs, n: Dimension) -> Result<Vec<f64>> {
    if args.rho == "from-curvature" {
        Ok(curvature_function(g, n, DEFAULT_TOL)?.rho)
    } else {
        load_rho_file(g, Path::new(&args.rho))
    }
}

/// Parses `start:end:steps` into `steps` evenly spaced values.
pub fn parse_grid(spec: &str) -> Result<Vec<f64>> {
    let parts: Vec<&str> = spec.split(':').collect();
    let bad = || Error::Domain(format!("grid `{spec}` must be start:end:steps"));
    if parts.len() != 3 {
        return Err(bad());
    }
    let a: f64 = parts[0].trim().parse().map_err(|_| bad())?;
    let b: f64 = parts[1].trim().parse().map_err(|_| bad())?;
    let steps: usize = parts[2].trim().parse().map_err(|_| bad())?;
    if steps == 0 || !a.is_finite() || !b.is_finite() {
        return Err(bad());
    }
    if steps == 1 {
        return Ok(vec![a]);
    }
    Ok((0..steps)
        .map(|i| a + (b - a) * i as f64 / (steps - 1) as f64)
        .collect())
}

fn vertex_map(g: &MeasuredWeightedGraph, values: &[f64]) -> Value {
    let mut map = Map::new();
    for (id, &v) in g.ids().iter().zip(values) {
        map.insert(id.to_string(), json_f64(v));
    }
    Value::Object(map)
}

fn profile_json(g: &MeasuredWeightedGraph, p: &CurvatureProfile, tol: f64) -> Value {
    json!({
        "n": p.n.to_string(),
        "tol": json_f64(tol),
        "rho": vertex_map(g, &p.rho),
        "diagnostics": p.diagnostics,
    })
}

fn emit(output: &Option<PathBuf>, stdout: &mut dyn Write, text: &str) -> Result<()> {
    match output {
        Some(path) => std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display()))),
        None => stdout.write_all(text.as_bytes()).map_err(Error::from),
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value serializes");
    s.push('\n');
    s
}

fn execute(cmd: Command, stdout: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Curvature {
            graph,
            dim,
            tol,
            format,
            output,
        } => {
            let g = load_graph(&graph)?;
            let n: Dimension = dim.parse()?;
            let profile = curvature_function(&g, n, tol)?;
            let text = match format {
                Format::Json => pretty(&profile_json(&g, &profile, tol)),
                Format::Csv => {
                    let mut s = String::from("vertex,rho\n");
                    for (id, r) in g.ids().iter().zip(&profile.rho) {
                        s.push_str(&format!("{id},{r}\n"));
                    }
                    s
                }
            };
            emit(&output, stdout, &text)?;
            Ok(EXIT_OK)
        }
        Command::Kato {
            graph,
            k,
            t,
            variant,
            strict,
            rho,
            output,
        } => {
            let g = load_graph(&graph)?;
            let n: Dimension = rho.dim.parse()?;
            let rho_v = resolve_rho(&g, &rho, n)?;
            let heat = Semigroup::heat(&g)?;
            let r = kato_condition_check_with(&heat, &rho_v, k, t, variant.into(), strict, DEFAULT_QUAD_TOL)?;
            emit(
                &output,
                stdout,
                &pretty(&serde_json::to_value(&r).expect("kato result serializes")),
            )?;
            Ok(if r.admissible { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        Command::KatoWindow {
            graph,
            k_grid,
            t_grid,
            variant,
            rho,
            output,
        } => {
            let g = load_graph(&graph)?;
            let n: Dimension = rho.dim.parse()?;
            let ks = parse_grid(&k_grid)?;
            let ts = parse_grid(&t_grid)?;
            if ks.iter().chain(&ts).any(|v| *v <= 0.0) {
                return Err(Error::Domain("grid values for K and T must be positive".into()));
            }
            let rho_v = resolve_rho(&g, &rho, n)?;
            let pairs = kato_window_search(&g, &rho_v, &ks, &ts, variant.into())?;
            let mut s = String::from("K,T\n");
            for (k, t) in pairs {
                s.push_str(&format!("{k},{t}\n"));
            }
            emit(&output, stdout, &s)?;
            Ok(EXIT_OK)
        }
        Command::Spectrum { graph, rho, output } => {
            let g = load_graph(&graph)?;
            let n: Dimension = rho.dim.parse()?;
            let rho_v = resolve_rho(&g, &rho, n)?;
            let l1 = if g.len() >= 2 {
                json_f64(lambda1(&g)?)
            } else {
                Value::Null
            };
            let (e, positive) = spectral_positivity(&g, &rho_v)?;
            let gs = ground_state(&g, &rho_v)?;
            let h = if (2..=CHEEGER_MAX_VERTICES).contains(&g.len()) {
                json_f64(cheeger_constant(&g)?)
            } else {
                Value::Null
            };
            let v = json!({
                "lambda1": l1,
                "E": json_f64(e),
                "spectrally_positive": positive,
                "phi": vertex_map(&g, &gs.phi),
                "cheeger": h,
                "rho": vertex_map(&g, &rho_v),
            });
            emit(&output, stdout, &pretty(&v))?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            graph,
            suite,
            k,
            t,
            samples,
            seed,
            tol_report,
            rho,
            output,
        } => {
            let suite: Suite = suite.parse()?;
            let n: Dimension = rho.dim.parse()?;
            let cfg = VerifyConfig {
                k,
                t,
                n,
                samples,
                seed,
                t_grid: DEFAULT_T_GRID_FACTORS.iter().map(|f| f * t).collect(),
                tol_report,
            };
            cfg.validate()?;
            let g = load_graph(&graph)?;
            let rho_v = resolve_rho(&g, &rho, n)?;
            let reports = run_suite(&g, &rho_v, &cfg, suite)?;
            let mut text = String::new();
            for r in &reports {
                text.push_str(&r.to_json_line());
                text.push('\n');
            }
            emit(&output, stdout, &text)?;
            let failed = reports.iter().any(|r| r.hypotheses_satisfied && !r.passed);
            let unmet = reports.iter().any(|r| !r.hypotheses_satisfied);
            Ok(if failed {
                EXIT_CHECK_FAILED
            } else if unmet {
                EXIT_HYPOTHESIS
            } else {
                EXIT_OK
            })
        }
        Command::Example { name, eps, output } => {
            if name != "paper3" {
                return Err(Error::Domain(format!("unknown example `{name}` (available: paper3)")));
            }
            let mut text = paper_example(eps)?.to_json();
            text.push('\n');
            emit(&output, stdout, &text)?;
            Ok(EXIT_OK)
        }
    }
}

fn exit_code_for(e: &Error) -> i32 {
    if e.is_input_error() {
        EXIT_INPUT
    } else {
        EXIT_NUMERICAL
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    EXIT_OK
                }
                _ => {
                    let msg = e.to_string();
                    let first = msg.lines().next().unwrap_or("invalid arguments");
                    let _ = writeln!(
                        stderr,
                        "graphcurv: error[usage]: {}",
                        first.trim_start_matches("error: ")
                    );
                    EXIT_INPUT
                }
            };
        }
    };
    match execute(cli.command, stdout) {
        Ok(code) => code,
        Err(e) => {
            let msg = e.to_string().replace('\n', " ");
            let _ = writeln!(stderr, "graphcurv: error[{}]: {msg}", e.kind());
            exit_code_for(&e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grids() {
        assert_eq!(parse_grid("1:2:3").unwrap(), vec![1.0, 1.5, 2.0]);
        assert_eq!(parse_grid("0.5:9:1").unwrap(), vec![0.5]);
        assert!(parse_grid("1:2").is_err());
        assert!(parse_grid("1:2:0").is_err());
        assert!(parse_grid("a:2:3").is_err());
    }

    #[test]
    fn usage_errors_exit_with_input_code() {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run_with(["graphcurv", "curvature"], &mut out, &mut err);
        assert_eq!(code, EXIT_INPUT);
        let line = String::from_utf8(err).unwrap();
        assert_eq!(line.lines().count(), 1, "{line}");
        assert!(line.starts_with("graphcurv: error[usage]"));
    }

    #[test]
    fn unknown_example() {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        assert_eq!(
            run_with(["graphcurv", "example", "nope"], &mut out, &mut err),
            EXIT_INPUT
        );
    }
}
