//! Command-line front end: build family members, certify operators,
//! detect entanglement, run parameter sweeps.
//!
//! Exit codes: 0 success (certified / detected), 1 inconclusive or not
//! detected, 2 usage or data error. Matrices travel as JSON files with
//! separate real and imaginary arrays; sweeps emit CSV. The default
//! certification tolerance is 1e-9, overridable by the `WITNESSKIT_TOL`
//! environment variable and per-invocation by `--tol`.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::densecore::{min_eigenvalue, ComplexMatrix, HermitianOperator};
use crate::superops::{inverse_reduction_map, maximally_entangled_projector};
use crate::verify::{blockpos_min, certify_via_map, detect, WitnessVerdict, DEFAULT_ITERS};
use crate::witnessfam::{build_witness, build_wtilde, feasibility_report, ChoiFamilyParams};

/// Default certification tolerance.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Environment variable overriding the default tolerance.
pub const TOL_ENV_VAR: &str = "WITNESSKIT_TOL";

/// JSON wire format for an operator: separate real/imaginary arrays
/// (plain JSON has no complex literal), `d` the local dimension, `dim`
/// the matrix dimension (d^2 for bipartite operators, d for
/// single-system ones).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixFile {
    pub d: usize,
    pub dim: usize,
    pub re: Vec<Vec<f64>>,
    pub im: Vec<Vec<f64>>,
    #[serde(default)]
    pub hermitian: bool,
}

impl MatrixFile {
    pub fn from_matrix(d: usize, m: &ComplexMatrix, hermitian: bool) -> Self {
        let dim = m.rows();
        let re = (0..dim)
            .map(|i| (0..dim).map(|j| m[(i, j)].re).collect())
            .collect();
        let im = (0..dim)
            .map(|i| (0..dim).map(|j| m[(i, j)].im).collect())
            .collect();
        Self {
            d,
            dim,
            re,
            im,
            hermitian,
        }
    }

    /// Decode into a dense matrix, validating shape and finiteness, plus
    /// Hermiticity when the file declares `hermitian: true`.
    pub fn to_matrix(&self) -> Result<ComplexMatrix, String> {
        if self.dim == 0 {
            return Err("dim must be positive".to_string());
        }
        for (name, rows) in [("re", &self.re), ("im", &self.im)] {
            if rows.len() != self.dim {
                return Err(format!(
                    "{name} has {} rows, expected {}",
                    rows.len(),
                    self.dim
                ));
            }
            for (i, row) in rows.iter().enumerate() {
                if row.len() != self.dim {
                    return Err(format!(
                        "{name} row {i} has {} entries, expected {}",
                        row.len(),
                        self.dim
                    ));
                }
                if row.iter().any(|v| !v.is_finite()) {
                    return Err(format!("{name} row {i} contains a non-finite entry"));
                }
            }
        }
        let m = ComplexMatrix::from_fn(self.dim, self.dim, |i, j| {
            Complex64::new(self.re[i][j], self.im[i][j])
        });
        if self.hermitian {
            HermitianOperator::new(m.clone())
                .map_err(|e| format!("declared hermitian but failed validation: {e}"))?;
        }
        Ok(m)
    }

    pub fn to_hermitian(&self) -> Result<HermitianOperator, String> {
        HermitianOperator::new(self.to_matrix()?).map_err(|e| e.to_string())
    }

    pub fn load(path: &Path) -> Result<Self, String> {
        let data = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        serde_json::from_str(&data).map_err(|e| format!("cannot parse {}: {e}", path.display()))
    }

    pub fn save(&self, path: &Path) -> Result<(), String> {
        let data = serde_json::to_string_pretty(self)
            .map_err(|e| format!("cannot serialize matrix: {e}"))?;
        std::fs::write(path, data).map_err(|e| format!("cannot write {}: {e}", path.display()))
    }
}

/// One line of a sweep report.
#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    pub d: usize,
    /// Semicolon-joined diagonal weights.
    pub a: String,
    pub x: f64,
    pub wtilde_min_eig: f64,
    pub w_min_eig: f64,
    pub certified: u8,
    pub blockpos_min: f64,
    /// Tr(W P_d^+).
    pub detect_maxent: f64,
}

#[derive(Debug, Parser)]
#[command(
    name = "witnesskit",
    about = "Construct and certify entanglement witnesses via the inverse reduction map"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a family member: writes <output>.wtilde.json and
    /// <output>.w.json, prints the feasibility report.
    Build(BuildArgs),
    /// Certify an operator from a matrix file; exit 0 when certified,
    /// 1 when inconclusive.
    Verify(VerifyArgs),
    /// Evaluate Tr(W rho); exit 0 when rho is detected, 1 otherwise.
    Detect(DetectArgs),
    /// Sweep family parameters and write one CSV row per grid point.
    Sweep(SweepArgs),
}

#[derive(Debug, Args)]
struct BuildArgs {
    /// Local dimension.
    #[arg(long)]
    d: usize,
    /// Comma-separated diagonal weights a_1..a_d (nonnegative).
    #[arg(long, allow_hyphen_values = true)]
    a: String,
    /// Off-diagonal corner weight.
    #[arg(long, allow_negative_numbers = true)]
    x: f64,
    /// Output base path; files get .wtilde.json / .w.json suffixes.
    #[arg(long)]
    output: PathBuf,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Matrix file holding a d^2-dimensional Hermitian operator.
    input: PathBuf,
    /// Certification map; only inverse-reduction ships.
    #[arg(long, default_value = "inverse-reduction")]
    map: String,
    /// Certification tolerance (default 1e-9, or WITNESSKIT_TOL).
    #[arg(long)]
    tol: Option<f64>,
    /// Also report the seesaw product-state minimum.
    #[arg(long)]
    with_blockpos: bool,
    /// Seesaw restarts.
    #[arg(long, default_value_t = crate::verify::DEFAULT_RESTARTS)]
    restarts: usize,
    /// Seed for the seesaw restarts.
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

#[derive(Debug, Args)]
struct DetectArgs {
    /// Matrix file holding the witness.
    #[arg(long)]
    witness: PathBuf,
    /// State source: a matrix file path, or builtin:maxent for the
    /// maximally entangled state of the witness dimension.
    #[arg(long)]
    state: String,
    /// Detection tolerance (default 1e-9, or WITNESSKIT_TOL).
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Debug, Args)]
struct SweepArgs {
    /// Local dimension.
    #[arg(long)]
    d: usize,
    /// Comma-separated per-component grids for a_1..a_d; each component
    /// is a number or a start:stop:step range (stop exclusive).
    #[arg(long, allow_hyphen_values = true)]
    a: String,
    /// Grid for x: a number or start:stop:step.
    #[arg(long, allow_hyphen_values = true)]
    x: String,
    /// Output CSV path.
    #[arg(long)]
    output: PathBuf,
    /// Seesaw restarts per grid point.
    #[arg(long, default_value_t = crate::verify::DEFAULT_RESTARTS)]
    restarts: usize,
    /// Seed shared by all grid points.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Evaluate grid points on all cores; row order is unchanged.
    #[arg(long)]
    parallel: bool,
}

/// Parse argv and run; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are not errors.
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let outcome = match cli.command {
        Command::Build(args) => cmd_build(&args),
        Command::Verify(args) => cmd_verify(&args),
        Command::Detect(args) => cmd_detect(&args),
        Command::Sweep(args) => cmd_sweep(&args),
    };
    match outcome {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            2
        }
    }
}

fn cmd_build(args: &BuildArgs) -> Result<i32, String> {
    let a = parse_weights(&args.a)?;
    let params = ChoiFamilyParams::new(args.d, a, args.x).map_err(|e| e.to_string())?;
    let report = feasibility_report(&params).map_err(|e| e.to_string())?;

    let wtilde = build_wtilde(&params);
    let witness = build_witness(&params);

    let wtilde_path = with_suffix(&args.output, "wtilde.json");
    let w_path = with_suffix(&args.output, "w.json");
    MatrixFile::from_matrix(args.d, wtilde.matrix(), true).save(&wtilde_path)?;
    MatrixFile::from_matrix(args.d, witness.matrix(), true).save(&w_path)?;

    let summary = serde_json::json!({
        "feasibility": report,
        "wtilde_path": wtilde_path.display().to_string(),
        "w_path": w_path.display().to_string(),
    });
    println!("{}", pretty(&summary)?);
    Ok(0)
}

fn cmd_verify(args: &VerifyArgs) -> Result<i32, String> {
    if args.map != "inverse-reduction" {
        return Err(format!(
            "unknown map {:?}; available maps: inverse-reduction",
            args.map
        ));
    }
    let tol = resolve_tol(args.tol)?;
    let file = MatrixFile::load(&args.input)?;
    if file.dim != file.d * file.d {
        return Err(format!(
            "operator must live on a bipartite d^2 space: dim {} != d^2 = {}",
            file.dim,
            file.d * file.d
        ));
    }
    let w = file.to_hermitian()?;
    let lam = inverse_reduction_map(file.d);
    let verdict = certify_via_map(&w, &lam, tol, &args.map).map_err(|e| e.to_string())?;

    let mut output = verdict_json(&verdict, tol);
    if args.with_blockpos {
        let (value, _) =
            blockpos_min(&w, args.restarts, DEFAULT_ITERS, args.seed).map_err(|e| e.to_string())?;
        output["blockpos_min"] = serde_json::json!(value);
    }
    println!("{}", pretty(&output)?);
    Ok(if verdict.certified { 0 } else { 1 })
}

fn cmd_detect(args: &DetectArgs) -> Result<i32, String> {
    let tol = resolve_tol(args.tol)?;
    let witness_file = MatrixFile::load(&args.witness)?;
    let w = witness_file.to_hermitian()?;

    let rho = if args.state == "builtin:maxent" {
        maximally_entangled_projector(witness_file.d)
    } else {
        MatrixFile::load(Path::new(&args.state))?.to_hermitian()?
    };

    let (detected, value) = detect(&w, &rho, tol).map_err(|e| e.to_string())?;
    println!(
        "{}",
        pretty(&serde_json::json!({ "detected": detected, "value": value }))?
    );
    Ok(if detected { 0 } else { 1 })
}

fn cmd_sweep(args: &SweepArgs) -> Result<i32, String> {
    let tol = resolve_tol(None)?;
    let component_grids: Vec<Vec<f64>> = args
        .a
        .split(',')
        .map(parse_grid_component)
        .collect::<Result<_, _>>()?;
    if component_grids.len() != args.d {
        return Err(format!(
            "expected {} diagonal-weight grids, got {}",
            args.d,
            component_grids.len()
        ));
    }
    let x_grid = parse_grid_component(&args.x)?;
    let points = cartesian_points(&component_grids, &x_grid);
    if points.is_empty() {
        return Err("empty grid".to_string());
    }

    let evaluate = |point: &(Vec<f64>, f64)| -> Result<SweepRow, String> {
        sweep_point(args.d, &point.0, point.1, tol, args.restarts, args.seed)
    };
    let rows: Result<Vec<SweepRow>, String> = if args.parallel {
        points.par_iter().map(evaluate).collect()
    } else {
        points.iter().map(evaluate).collect()
    };
    let rows = rows?;

    let mut writer = csv::Writer::from_path(&args.output)
        .map_err(|e| format!("cannot write {}: {e}", args.output.display()))?;
    for row in &rows {
        writer.serialize(row).map_err(|e| e.to_string())?;
    }
    writer.flush().map_err(|e| e.to_string())?;

    println!(
        "wrote {} rows to {} ({} certified)",
        rows.len(),
        args.output.display(),
        rows.iter().filter(|r| r.certified == 1).count()
    );
    Ok(0)
}

fn sweep_point(
    d: usize,
    a: &[f64],
    x: f64,
    tol: f64,
    restarts: usize,
    seed: u64,
) -> Result<SweepRow, String> {
    let params = ChoiFamilyParams::new(d, a.to_vec(), x).map_err(|e| e.to_string())?;
    let wtilde = build_wtilde(&params);
    let witness = build_witness(&params);
    let lam = inverse_reduction_map(d);
    let verdict =
        certify_via_map(&witness, &lam, tol, "inverse-reduction").map_err(|e| e.to_string())?;
    let (blockpos, _) =
        blockpos_min(&witness, restarts, DEFAULT_ITERS, seed).map_err(|e| e.to_string())?;
    let maxent = maximally_entangled_projector(d);
    let detect_maxent = (witness.matrix() * maxent.matrix()).trace().re;
    Ok(SweepRow {
        d,
        a: a.iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(";"),
        x,
        wtilde_min_eig: min_eigenvalue(&wtilde).map_err(|e| e.to_string())?,
        w_min_eig: verdict.min_eigenvalue,
        certified: u8::from(verdict.certified),
        blockpos_min: blockpos,
        detect_maxent,
    })
}

/// Grid points in lexicographic order: all a-components vary before x,
/// the last a-component fastest among them, x fastest overall.
fn cartesian_points(component_grids: &[Vec<f64>], x_grid: &[f64]) -> Vec<(Vec<f64>, f64)> {
    let mut assignments: Vec<Vec<f64>> = vec![Vec::new()];
    for grid in component_grids {
        let mut next = Vec::with_capacity(assignments.len() * grid.len());
        for prefix in &assignments {
            for &value in grid {
                let mut extended = prefix.clone();
                extended.push(value);
                next.push(extended);
            }
        }
        assignments = next;
    }
    let mut points = Vec::with_capacity(assignments.len() * x_grid.len());
    for a in &assignments {
        for &x in x_grid {
            points.push((a.clone(), x));
        }
    }
    points
}

fn parse_weights(spec: &str) -> Result<Vec<f64>, String> {
    spec.split(',')
        .map(|part| {
            part.trim()
                .parse::<f64>()
                .map_err(|_| format!("cannot parse weight {part:?}"))
        })
        .collect()
}

/// A scalar, or a half-open range start:stop:step.
fn parse_grid_component(spec: &str) -> Result<Vec<f64>, String> {
    let spec = spec.trim();
    if !spec.contains(':') {
        return Ok(vec![spec
            .parse::<f64>()
            .map_err(|_| format!("cannot parse grid value {spec:?}"))?]);
    }
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 {
        return Err(format!("grid spec {spec:?} must be start:stop:step"));
    }
    let nums: Vec<f64> = parts
        .iter()
        .map(|p| {
            p.trim()
                .parse::<f64>()
                .map_err(|_| format!("cannot parse grid bound {p:?}"))
        })
        .collect::<Result<_, _>>()?;
    let (start, stop, step) = (nums[0], nums[1], nums[2]);
    if !step.is_finite() || step <= 0.0 {
        return Err(format!("grid step must be positive, got {step}"));
    }
    let count = ((stop - start) / step - 1e-9).ceil();
    if !count.is_finite() || count < 1.0 {
        return Ok(Vec::new());
    }
    Ok((0..count as usize)
        .map(|k| start + k as f64 * step)
        .collect())
}

fn resolve_tol(flag: Option<f64>) -> Result<f64, String> {
    let tol = match flag {
        Some(t) => t,
        None => match std::env::var(TOL_ENV_VAR) {
            Ok(raw) => raw
                .parse::<f64>()
                .map_err(|_| format!("cannot parse {TOL_ENV_VAR}={raw:?}"))?,
            Err(_) => DEFAULT_TOL,
        },
    };
    if !tol.is_finite() || tol < 0.0 {
        return Err(format!("tolerance must be a nonnegative number, got {tol}"));
    }
    Ok(tol)
}

fn verdict_json(verdict: &WitnessVerdict, tol: f64) -> serde_json::Value {
    serde_json::json!({
        "hermitian": verdict.hermitian,
        "min_eigenvalue": verdict.min_eigenvalue,
        "negative_witness_vector": {
            "re": verdict.negative_witness_vector.iter().map(|z| z.re).collect::<Vec<_>>(),
            "im": verdict.negative_witness_vector.iter().map(|z| z.im).collect::<Vec<_>>(),
        },
        "transformed_min_eigenvalue": verdict.transformed_min_eigenvalue,
        "certified": verdict.certified,
        "map_name": verdict.map_name,
        "status": if verdict.certified { "certified" } else { "inconclusive" },
        "reason": verdict.inconclusive_reason(tol),
    })
}

fn pretty(value: &serde_json::Value) -> Result<String, String> {
    serde_json::to_string_pretty(value).map_err(|e| e.to_string())
}

fn with_suffix(base: &Path, suffix: &str) -> PathBuf {
    let mut name = base.as_os_str().to_os_string();
    name.push(".");
    name.push(suffix);
    PathBuf::from(name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_component_scalar_and_range() {
        assert_eq!(parse_grid_component("1").unwrap(), vec![1.0]);
        let grid = parse_grid_component("-0.6:1.2:0.1").unwrap();
        assert_eq!(grid.len(), 18);
        assert!((grid[0] - (-0.6)).abs() <= 1e-15);
        assert!((grid[17] - 1.1).abs() <= 1e-12);

        assert!(parse_grid_component("1:1:0.1").unwrap().is_empty());
        assert!(parse_grid_component("0:1:-0.5").is_err());
        assert!(parse_grid_component("0:1").is_err());
        assert!(parse_grid_component("a:b:c").is_err());
    }

    #[test]
    fn cartesian_points_are_lexicographic() {
        let points = cartesian_points(&[vec![1.0], vec![0.0, 0.5]], &[0.0, 1.0]);
        let expected = [
            (vec![1.0, 0.0], 0.0),
            (vec![1.0, 0.0], 1.0),
            (vec![1.0, 0.5], 0.0),
            (vec![1.0, 0.5], 1.0),
        ];
        assert_eq!(points.len(), expected.len());
        for (got, want) in points.iter().zip(&expected) {
            assert_eq!(got.0, want.0);
            assert_eq!(got.1, want.1);
        }
    }

    #[test]
    fn matrix_file_validates_shapes() {
        let bad = MatrixFile {
            d: 2,
            dim: 4,
            re: vec![vec![0.0; 4]; 3],
            im: vec![vec![0.0; 4]; 4],
            hermitian: false,
        };
        assert!(bad.to_matrix().is_err());

        let non_finite = MatrixFile {
            d: 2,
            dim: 2,
            re: vec![vec![f64::NAN, 0.0], vec![0.0, 0.0]],
            im: vec![vec![0.0; 2]; 2],
            hermitian: false,
        };
        assert!(non_finite.to_matrix().is_err());
    }

    #[test]
    fn matrix_file_checks_declared_hermiticity() {
        let skew = MatrixFile {
            d: 2,
            dim: 2,
            re: vec![vec![0.0, 1.0], vec![0.0, 0.0]],
            im: vec![vec![0.0; 2]; 2],
            hermitian: true,
        };
        assert!(skew.to_matrix().is_err());
        let relaxed = MatrixFile {
            hermitian: false,
            ..skew
        };
        assert!(relaxed.to_matrix().is_ok());
    }
}
