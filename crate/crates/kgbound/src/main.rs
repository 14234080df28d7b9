//! Command-line front end: batch spectrum computation, wavefunction
//! sampling, oracle comparisons, reference-table reproduction, and
//! potential-curve data emission.
//!
//! Output is CSV only (header row, comma separator, LF endings), every
//! numeric cell printed with 12 significant digits in scientific notation.
//! Exit codes: 0 ok, 1 usage, 2 no roots, 3 table mismatch,
//! 4 non-normalizable, 5 oracle disagreement.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use kgbound::error::KgError;
use kgbound::oracle::{
    approximation_error, build_effective, shoot_scan, IntegratorConfig, OracleMode,
};
use kgbound::potentials::{dimensional_numbers, evaluate_potential, Family, PotentialModel,
    SignBranch};
use kgbound::spectrum::{
    find_bound_states, nonrelativistic_energy, NonRelMode, ScanConfig,
};
use kgbound::wavefn::{normalize, ode_residual, radial_r, radial_u, GridConfig, OdeGrid};

const EXIT_OK: u8 = 0;
const EXIT_USAGE: u8 = 1;
const EXIT_NO_ROOTS: u8 = 2;
const EXIT_TABLE_MISMATCH: u8 = 3;
const EXIT_NON_NORMALIZABLE: u8 = 4;
const EXIT_ORACLE_DISAGREEMENT: u8 = 5;

#[derive(Parser)]
#[command(name = "kgbound", disable_help_subcommand = true)]
#[command(about = "Bound-state spectra of the D-dimensional Klein-Gordon equation \
with equally mixed exponential-type potentials")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Locate all bound-state energies for one (n, l, D) and emit them as CSV.
    #[command(allow_negative_numbers = true)]
    Spectrum(SpectrumArgs),
    /// Recompute the four s-wave reference-table blocks and diff against the
    /// tabulated values.
    Table1(Table1Args),
    /// Sample the radial wavefunction of one located root.
    #[command(allow_negative_numbers = true)]
    Wavefunction(WavefunctionArgs),
    /// Shooting-method cross-checks of the closed-form energies.
    #[command(allow_negative_numbers = true)]
    Oracle(OracleArgs),
    /// Emit potential-curve data V(x) on a grid.
    #[command(allow_negative_numbers = true)]
    PotentialCurve(PotentialCurveArgs),
}

/// Model selection shared by most subcommands.
#[derive(Args, Clone)]
struct ModelArgs {
    /// One of: eckart-type, rosen-morse-type, hulthen, woods-saxon,
    /// standard-eckart, rosen-morse-well, trig-rosen-morse.
    #[arg(long)]
    model: String,
    #[arg(long)]
    v1: Option<f64>,
    #[arg(long)]
    v2: Option<f64>,
    #[arg(long)]
    v3: Option<f64>,
    #[arg(long)]
    v0: Option<f64>,
    #[arg(long, default_value_t = 1.0)]
    q: f64,
    #[arg(long)]
    alpha: Option<f64>,
    /// Trigonometric-well parameter a (V1 = a(a+1)).
    #[arg(long)]
    a: Option<f64>,
    /// Trigonometric-well parameter b (V2 = 2b).
    #[arg(long)]
    b: Option<f64>,
}

impl ModelArgs {
    fn build(&self) -> Result<PotentialModel, String> {
        let need = |o: Option<f64>, name: &str| {
            o.ok_or_else(|| format!("--{name} is required for model '{}'", self.model))
        };
        let alpha = need(self.alpha, "alpha")?;
        match self.model.as_str() {
            "eckart-type" => Ok(PotentialModel::EckartType {
                v1: need(self.v1, "v1")?,
                v2: need(self.v2, "v2")?,
                v3: need(self.v3, "v3")?,
                q: self.q,
                alpha,
            }),
            "rosen-morse-type" => Ok(PotentialModel::RosenMorseType {
                v1: need(self.v1, "v1")?,
                v2: need(self.v2, "v2")?,
                v3: need(self.v3, "v3")?,
                q: self.q,
                alpha,
            }),
            "hulthen" => Ok(PotentialModel::Hulthen {
                v0: need(self.v0, "v0")?,
                alpha,
            }),
            "woods-saxon" => Ok(PotentialModel::WoodsSaxon {
                v0: need(self.v0, "v0")?,
                alpha,
            }),
            "standard-eckart" => Ok(PotentialModel::StandardEckart {
                v1: need(self.v1, "v1")?,
                v2: need(self.v2, "v2")?,
                alpha,
            }),
            "rosen-morse-well" => Ok(PotentialModel::RosenMorseWell {
                v1: need(self.v1, "v1")?,
                v2: need(self.v2, "v2")?,
                q: self.q,
                alpha,
            }),
            "trig-rosen-morse" => Ok(PotentialModel::TrigRosenMorse {
                a: self.a.unwrap_or(0.5),
                b: self.b.unwrap_or(17.0),
                alpha,
            }),
            other => Err(format!("unknown model '{other}'")),
        }
    }
}

/// Quantum numbers and branch selection.
#[derive(Args, Clone)]
struct StateArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    l: usize,
    #[arg(long, default_value_t = 3)]
    dim: usize,
    #[arg(long)]
    mass: f64,
    /// "+1", "-1", or "both".
    #[arg(long, default_value = "both")]
    branch: String,
}

impl StateArgs {
    fn branches(&self) -> Result<Vec<SignBranch>, String> {
        match self.branch.as_str() {
            "+1" | "plus" => Ok(vec![SignBranch::Plus]),
            "-1" | "minus" => Ok(vec![SignBranch::Minus]),
            "both" => Ok(vec![SignBranch::Plus, SignBranch::Minus]),
            other => Err(format!("unknown branch '{other}' (use +1, -1, both)")),
        }
    }
}

/// Root-scan parameters; defaults follow ScanConfig::for_mass and the
/// KG_TOL_ROOT environment override.
#[derive(Args, Clone)]
struct ScanArgs {
    #[arg(long, default_value_t = 2048)]
    grid: usize,
    #[arg(long)]
    tol_root: Option<f64>,
    #[arg(long, default_value_t = 1e-9)]
    eta: f64,
}

impl ScanArgs {
    fn config(&self, mass: f64) -> ScanConfig {
        let mut cfg = ScanConfig::for_mass(mass);
        cfg.grid = self.grid;
        cfg.eta = self.eta;
        if let Some(t) = self.tol_root {
            cfg.tol_root = t;
        } else if let Ok(v) = std::env::var("KG_TOL_ROOT") {
            if let Ok(t) = v.parse::<f64>() {
                cfg.tol_root = t;
            }
        }
        cfg
    }
}

#[derive(Args, Clone)]
struct OutputArgs {
    /// Output file; stdout when omitted.
    #[arg(long)]
    output: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct SpectrumArgs {
    #[command(flatten)]
    model: ModelArgs,
    #[command(flatten)]
    state: StateArgs,
    #[command(flatten)]
    scan: ScanArgs,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct Table1Args {
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct WavefunctionArgs {
    #[command(flatten)]
    model: ModelArgs,
    #[command(flatten)]
    state: StateArgs,
    #[command(flatten)]
    scan: ScanArgs,
    /// Index into the (energy-descending) root list.
    #[arg(long, default_value_t = 0)]
    root_index: usize,
    /// Normalize u^2 to unit integral; fails on non-normalizable roots.
    #[arg(long)]
    normalize: bool,
    #[arg(long, default_value_t = 1024)]
    samples: usize,
    /// Output format; csv is the only supported value.
    #[arg(long, default_value = "csv")]
    format: String,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    model: ModelArgs,
    #[command(flatten)]
    state: StateArgs,
    #[command(flatten)]
    scan: ScanArgs,
    /// approx | exact | nonrel-V | nonrel-2V.
    #[arg(long)]
    mode: String,
    /// Comma-separated screening parameters for the exact-mode error sweep.
    #[arg(long)]
    alpha_sweep: Option<String>,
    /// Agreement tolerance (relative for approx, absolute for nonrel modes).
    #[arg(long, default_value_t = 1e-6)]
    tol: f64,
    /// Integrator step size; 1e-3/alpha when omitted.
    #[arg(long)]
    step: Option<f64>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct PotentialCurveArgs {
    #[command(flatten)]
    model: ModelArgs,
    #[arg(long, default_value_t = 500)]
    points: usize,
    #[arg(long)]
    x_min: Option<f64>,
    #[arg(long)]
    x_max: Option<f64>,
    #[command(flatten)]
    out: OutputArgs,
}

/// 12 significant digits, decimal scientific notation.
fn fmt12(x: f64) -> String {
    format!("{:.11e}", x)
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn write_out(out: &OutputArgs, body: &str) -> Result<(), String> {
    match &out.output {
        Some(path) => std::fs::write(path, body).map_err(|e| format!("cannot write {path:?}: {e}")),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(body.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| format!("cannot write stdout: {e}"))
        }
    }
}

/// Expand `--config FILE` into the key=value flags stored in the file, one
/// `key=value` per line (comments with #), each becoming `--key value` at the
/// position of the --config flag.
fn expand_config(args: impl Iterator<Item = String>) -> Result<Vec<String>, String> {
    let mut out = Vec::new();
    let mut iter = args.peekable();
    while let Some(arg) = iter.next() {
        if arg == "--config" {
            let path = iter
                .next()
                .ok_or_else(|| "--config requires a file argument".to_string())?;
            let text = std::fs::read_to_string(&path)
                .map_err(|e| format!("cannot read config file {path}: {e}"))?;
            for line in text.lines() {
                let line = line.trim();
                if line.is_empty() || line.starts_with('#') {
                    continue;
                }
                let (k, v) = line
                    .split_once('=')
                    .ok_or_else(|| format!("config line without '=': {line}"))?;
                out.push(format!("--{}", k.trim()));
                out.push(v.trim().to_string());
            }
        } else {
            out.push(arg);
        }
    }
    Ok(out)
}

fn main() -> ExitCode {
    let args = match expand_config(std::env::args()) {
        Ok(a) => a,
        Err(msg) => return usage_error(&msg),
    };
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            // Help/version requests are success; genuine parse failures map to
            // the usage exit code.
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::from(EXIT_OK);
            }
            let _ = e.print();
            return ExitCode::from(EXIT_USAGE);
        }
    };
    match cli.cmd {
        Cmd::Spectrum(a) => cmd_spectrum(a),
        Cmd::Table1(a) => cmd_table1(a),
        Cmd::Wavefunction(a) => cmd_wavefunction(a),
        Cmd::Oracle(a) => cmd_oracle(a),
        Cmd::PotentialCurve(a) => cmd_potential_curve(a),
    }
}

fn cmd_spectrum(a: SpectrumArgs) -> ExitCode {
    let model = match a.model.build() {
        Ok(m) => m,
        Err(e) => return usage_error(&e),
    };
    let branches = match a.state.branches() {
        Ok(b) => b,
        Err(e) => return usage_error(&e),
    };
    let dn = dimensional_numbers(a.state.dim, a.state.l);
    let scan = a.scan.config(a.state.mass);
    let states = match find_bound_states(&model, a.state.n, &dn, &branches, a.state.mass, &scan) {
        Ok(s) => s,
        Err(e) => return usage_error(&e.to_string()),
    };
    let mut body = String::from("n,l,D,branch,E,p,w,admissible_flags\n");
    for s in &states {
        body.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            s.n,
            s.l,
            s.d,
            s.sign_branch,
            fmt12(s.energy),
            fmt12(s.exponents.p),
            fmt12(s.exponents.w),
            s.flags.bits()
        ));
    }
    if let Err(e) = write_out(&a.out, &body) {
        return usage_error(&e);
    }
    if states.is_empty() {
        ExitCode::from(EXIT_NO_ROOTS)
    } else {
        ExitCode::from(EXIT_OK)
    }
}

/// One reference-table block: (alpha, q, V1, V2, M) and the tabulated energies
/// for n = 1..5 (None where the table prints a dash).
struct TableBlock {
    alpha: f64,
    q: f64,
    v1: f64,
    v2: f64,
    mass: f64,
    rows: [[Option<f64>; 4]; 5],
}

fn table_blocks() -> [TableBlock; 4] {
    [
        TableBlock {
            alpha: 1.0,
            q: 1.0,
            v1: 1.0,
            v2: -1.0,
            mass: 4.0,
            rows: [
                [Some(1.8137), Some(-1.9140), Some(-3.3923), Some(-3.9088)],
                [Some(-2.2117), Some(-3.6791), None, None],
                [Some(-0.6606), Some(-3.3105), None, None],
                [Some(0.8879), Some(-2.7697), None, None],
                [Some(1.8766), Some(-1.9765), None, None],
            ],
        },
        TableBlock {
            alpha: 1.0,
            q: 1.0,
            v1: 2.0,
            v2: -2.0,
            mass: 5.0,
            rows: [
                [Some(0.9989), Some(-3.7763), Some(-4.7275), Some(-4.9351)],
                [Some(-4.1746), Some(-4.7795), None, None],
                [Some(-3.3814), Some(-4.5376), None, None],
                [Some(-2.3989), Some(-4.2008), None, None],
                [Some(-1.3083), Some(-3.7529), None, None],
            ],
        },
        TableBlock {
            alpha: 0.5,
            q: 1.0,
            v1: 1.0,
            v2: -1.0,
            mass: 4.0,
            rows: [
                [Some(1.9558), Some(-3.5288), Some(-3.8460), Some(-3.9773)],
                [Some(1.9608), Some(-2.5367), Some(-3.5326), Some(-3.9216)],
                [Some(1.2294), Some(-0.5126), Some(-3.0732), Some(-3.8358)],
                [Some(-2.4823), Some(-3.7191), None, None],
                [Some(-1.7822), Some(-3.5695), None, None],
            ],
        },
        TableBlock {
            alpha: 1.0,
            q: 0.5,
            v1: 1.0,
            v2: -1.0,
            mass: 4.0,
            rows: [
                [Some(1.5783), Some(-3.2245), Some(-3.6502), Some(-3.9258)],
                [Some(1.9995), Some(-1.5367), Some(-2.9520), Some(-3.7496)],
                [Some(-1.9529), Some(-3.4736), None, None],
                [Some(-0.7335), Some(-3.0839), None, None],
                [Some(0.5489), Some(-2.5528), None, None],
            ],
        },
    ]
}

fn cmd_table1(a: Table1Args) -> ExitCode {
    let mut body = String::from(
        "block,n,E_computed_1,E_computed_2,E_computed_3,E_computed_4,\
E_paper_1,E_paper_2,E_paper_3,E_paper_4,match\n",
    );
    let mut all_match = true;
    let mut offenders = Vec::new();
    for (bi, block) in table_blocks().iter().enumerate() {
        let model = PotentialModel::RosenMorseWell {
            v1: block.v1,
            v2: block.v2,
            q: block.q,
            alpha: block.alpha,
        };
        let dn = dimensional_numbers(3, 0);
        let scan = ScanConfig::for_mass(block.mass);
        for (ri, paper) in block.rows.iter().enumerate() {
            let n = ri + 1;
            let states = match find_bound_states(
                &model,
                n,
                &dn,
                &[SignBranch::Plus, SignBranch::Minus],
                block.mass,
                &scan,
            ) {
                Ok(s) => s,
                Err(e) => return usage_error(&e.to_string()),
            };
            let computed: Vec<f64> = states.iter().map(|s| s.energy).collect();
            let expected = paper.iter().flatten().count();
            let mut ok = computed.len() == expected;
            for (ci, pv) in paper.iter().enumerate() {
                if let Some(pv) = pv {
                    let hit = computed
                        .get(ci)
                        .map(|c| (c - pv).abs() < 5e-4)
                        .unwrap_or(false);
                    ok &= hit;
                }
            }
            if !ok {
                all_match = false;
                offenders.push(format!(
                    "block {} n {}: computed {:?} vs tabulated {:?}",
                    bi + 1,
                    n,
                    computed,
                    paper
                ));
            }
            let cell = |i: usize| -> String {
                computed.get(i).map(|&e| fmt12(e)).unwrap_or_default()
            };
            let pcell = |i: usize| -> String {
                paper[i].map(fmt12).unwrap_or_default()
            };
            body.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{},{}\n",
                bi + 1,
                n,
                cell(0),
                cell(1),
                cell(2),
                cell(3),
                pcell(0),
                pcell(1),
                pcell(2),
                pcell(3),
                ok
            ));
        }
    }
    if let Err(e) = write_out(&a.out, &body) {
        return usage_error(&e);
    }
    if all_match {
        ExitCode::from(EXIT_OK)
    } else {
        for o in offenders {
            eprintln!("mismatch: {o}");
        }
        ExitCode::from(EXIT_TABLE_MISMATCH)
    }
}

fn cmd_wavefunction(a: WavefunctionArgs) -> ExitCode {
    if a.format != "csv" {
        return usage_error(&format!("unsupported format '{}'", a.format));
    }
    let model = match a.model.build() {
        Ok(m) => m,
        Err(e) => return usage_error(&e),
    };
    let branches = match a.state.branches() {
        Ok(b) => b,
        Err(e) => return usage_error(&e),
    };
    let dn = dimensional_numbers(a.state.dim, a.state.l);
    let scan = a.scan.config(a.state.mass);
    let states = match find_bound_states(&model, a.state.n, &dn, &branches, a.state.mass, &scan) {
        Ok(s) => s,
        Err(e) => return usage_error(&e.to_string()),
    };
    let state = match states.get(a.root_index) {
        Some(s) => *s,
        None => {
            return usage_error(&format!(
                "root index {} out of range ({} roots located)",
                a.root_index,
                states.len()
            ))
        }
    };
    let cfg = GridConfig {
        samples: a.samples,
        panels: 512,
    };
    let mut body = String::from("r,u,R\n");
    let (node_count, max_res) = if a.normalize {
        let sample = match normalize(&state, &model, &cfg) {
            Ok(s) => s,
            Err(KgError::NonNormalizable(msg)) => {
                eprintln!("error: non-normalizable state: {msg}");
                return ExitCode::from(EXIT_NON_NORMALIZABLE);
            }
            Err(e) => return usage_error(&e.to_string()),
        };
        for i in 0..sample.grid.len() {
            body.push_str(&format!(
                "{},{},{}\n",
                fmt12(sample.grid[i]),
                fmt12(sample.u_values[i]),
                fmt12(sample.big_r_values[i])
            ));
        }
        (sample.node_count, sample.max_ode_residual)
    } else {
        // Raw (unnormalized) sampling on a fixed domain; decay is not
        // required here, so inadmissible roots can still be inspected.
        let s = model.canonical();
        let full_line = matches!(s.family, Family::RosenMorseLike);
        let (lo, hi) = match s.family {
            Family::EckartLike => (0.01 / s.alpha, 8.0 / s.alpha),
            Family::RosenMorseLike => (-8.0 / s.alpha, 8.0 / s.alpha),
            Family::Trigonometric => {
                return usage_error("trigonometric-well wavefunctions are not real-valued")
            }
        };
        let mut us = Vec::with_capacity(a.samples);
        for i in 0..a.samples {
            let r = lo + (hi - lo) * (i as f64 + 0.5) / a.samples as f64;
            let u = match radial_u(&state, &model, r) {
                Ok(u) => u,
                Err(e) => return usage_error(&e.to_string()),
            };
            let big_r = if full_line {
                u
            } else {
                match radial_r(&state, &model, r, a.state.dim) {
                    Ok(v) => v,
                    Err(e) => return usage_error(&e.to_string()),
                }
            };
            body.push_str(&format!("{},{},{}\n", fmt12(r), fmt12(u), fmt12(big_r)));
            us.push(u);
        }
        let nodes = {
            let max = us.iter().fold(0.0_f64, |m, &v| m.max(v.abs()));
            let dead = 1e-12 * max;
            let mut last = 0.0_f64;
            let mut count = 0;
            for &v in &us {
                if v.abs() <= dead {
                    continue;
                }
                if last != 0.0 && v.signum() != last {
                    count += 1;
                }
                last = v.signum();
            }
            count
        };
        (nodes, ode_residual(&state, &model, &OdeGrid::default_for(&model)))
    };
    if let Err(e) = write_out(&a.out, &body) {
        return usage_error(&e);
    }
    eprintln!("node_count: {node_count}");
    eprintln!("max_ode_residual: {}", fmt12(max_res));
    ExitCode::from(EXIT_OK)
}

fn cmd_oracle(a: OracleArgs) -> ExitCode {
    let model = match a.model.build() {
        Ok(m) => m,
        Err(e) => return usage_error(&e),
    };
    let branches = match a.state.branches() {
        Ok(b) => b,
        Err(e) => return usage_error(&e),
    };
    let dn = dimensional_numbers(a.state.dim, a.state.l);
    let scan = a.scan.config(a.state.mass);
    let icfg = IntegratorConfig {
        h: a.step,
        ..IntegratorConfig::default()
    };
    match a.mode.as_str() {
        "approx" => {
            let states = match find_bound_states(
                &model, a.state.n, &dn, &branches, a.state.mass, &scan,
            ) {
                Ok(s) => s,
                Err(e) => return usage_error(&e.to_string()),
            };
            if states.is_empty() {
                return ExitCode::from(EXIT_NO_ROOTS);
            }
            let mut body = String::from("n,branch,E_closed,E_shoot,rel_error\n");
            let mut worst = 0.0_f64;
            for s in &states {
                let eq = match build_effective(
                    &model,
                    s.sign_branch,
                    &dn,
                    a.state.mass,
                    OracleMode::RelativisticApprox,
                ) {
                    Ok(eq) => eq,
                    Err(e) => return usage_error(&e.to_string()),
                };
                let window = (
                    -a.state.mass * (1.0 - 1e-6),
                    a.state.mass * (1.0 - 1e-6),
                );
                let eigs = shoot_scan(&eq, window, 200, &icfg);
                let nearest = eigs
                    .iter()
                    .copied()
                    .min_by(|x, y| {
                        (x - s.energy)
                            .abs()
                            .partial_cmp(&(y - s.energy).abs())
                            .unwrap()
                    });
                let (e_shoot, rel) = match nearest {
                    Some(es) => (es, (es - s.energy).abs() / s.energy.abs().max(1e-30)),
                    None => (f64::NAN, f64::INFINITY),
                };
                worst = worst.max(rel);
                body.push_str(&format!(
                    "{},{},{},{},{}\n",
                    s.n,
                    s.sign_branch,
                    fmt12(s.energy),
                    fmt12(e_shoot),
                    fmt12(rel)
                ));
            }
            if let Err(e) = write_out(&a.out, &body) {
                return usage_error(&e);
            }
            if worst > a.tol {
                eprintln!(
                    "oracle disagreement: worst relative error {} exceeds {}",
                    fmt12(worst),
                    fmt12(a.tol)
                );
                ExitCode::from(EXIT_ORACLE_DISAGREEMENT)
            } else {
                ExitCode::from(EXIT_OK)
            }
        }
        "exact" => {
            let sweep = match &a.alpha_sweep {
                Some(s) => {
                    let parsed: Result<Vec<f64>, _> =
                        s.split(',').map(|t| t.trim().parse::<f64>()).collect();
                    match parsed {
                        Ok(v) if !v.is_empty() => v,
                        _ => return usage_error("--alpha-sweep needs comma-separated numbers"),
                    }
                }
                None => return usage_error("--mode exact requires --alpha-sweep"),
            };
            let sign = match branches.as_slice() {
                [one] => *one,
                _ => SignBranch::Plus,
            };
            let rows = match approximation_error(
                &model,
                a.state.n,
                &dn,
                sign,
                a.state.mass,
                &sweep,
                &icfg,
            ) {
                Ok(r) => r,
                Err(e) => return usage_error(&e.to_string()),
            };
            let mut body = String::from("alpha,E_closed,E_exact,abs_error\n");
            for r in &rows {
                body.push_str(&format!(
                    "{},{},{},{}\n",
                    fmt12(r.alpha),
                    fmt12(r.e_closed),
                    fmt12(r.e_exact),
                    fmt12(r.abs_error)
                ));
            }
            if let Err(e) = write_out(&a.out, &body) {
                return usage_error(&e);
            }
            ExitCode::from(EXIT_OK)
        }
        "nonrel-V" | "nonrel-2V" => {
            let (mode, omode) = if a.mode == "nonrel-V" {
                (NonRelMode::SchrodingerV, OracleMode::NonRelV)
            } else {
                (NonRelMode::KgLimit2V, OracleMode::NonRel2V)
            };
            let e_closed =
                match nonrelativistic_energy(&model, a.state.n, &dn, a.state.mass, mode) {
                    Ok(e) => e,
                    Err(e) => return usage_error(&e.to_string()),
                };
            let eq = match build_effective(&model, SignBranch::Plus, &dn, a.state.mass, omode) {
                Ok(eq) => eq,
                Err(e) => return usage_error(&e.to_string()),
            };
            let span = e_closed.abs().max(1.0);
            let window = (e_closed - 0.75 * span, (e_closed + 0.75 * span).min(-1e-12));
            let eigs = shoot_scan(&eq, window, 200, &icfg);
            let nearest = eigs.iter().copied().min_by(|x, y| {
                (x - e_closed)
                    .abs()
                    .partial_cmp(&(y - e_closed).abs())
                    .unwrap()
            });
            let (e_shoot, err) = match nearest {
                Some(es) => (es, (es - e_closed).abs()),
                None => (f64::NAN, f64::INFINITY),
            };
            let mut body = String::from("n,E_closed,E_shoot,abs_error\n");
            body.push_str(&format!(
                "{},{},{},{}\n",
                a.state.n,
                fmt12(e_closed),
                fmt12(e_shoot),
                fmt12(err)
            ));
            if let Err(e) = write_out(&a.out, &body) {
                return usage_error(&e);
            }
            if err > a.tol {
                eprintln!(
                    "oracle disagreement: |dE| = {} exceeds {}",
                    fmt12(err),
                    fmt12(a.tol)
                );
                ExitCode::from(EXIT_ORACLE_DISAGREEMENT)
            } else {
                ExitCode::from(EXIT_OK)
            }
        }
        other => usage_error(&format!(
            "unknown oracle mode '{other}' (use approx, exact, nonrel-V, nonrel-2V)"
        )),
    }
}

fn cmd_potential_curve(a: PotentialCurveArgs) -> ExitCode {
    let model = match a.model.build() {
        Ok(m) => m,
        Err(e) => return usage_error(&e),
    };
    let s = model.canonical();
    let (lo, hi) = match (a.x_min, a.x_max) {
        (Some(lo), Some(hi)) => (lo, hi),
        _ => match s.family {
            Family::Trigonometric => (
                0.01 * std::f64::consts::PI / s.alpha,
                0.99 * std::f64::consts::PI / s.alpha,
            ),
            _ => (0.01 / s.alpha, 10.0 / s.alpha),
        },
    };
    if a.points < 2 {
        return usage_error("--points must be at least 2");
    }
    let mut body = String::from("x,V\n");
    for i in 0..a.points {
        let x = lo + (hi - lo) * i as f64 / (a.points - 1) as f64;
        let v = match evaluate_potential(&model, x) {
            Ok(v) => v,
            Err(e) => return usage_error(&format!("grid point out of domain: {e}")),
        };
        body.push_str(&format!("{},{}\n", fmt12(x), fmt12(v)));
    }
    if let Err(e) = write_out(&a.out, &body) {
        return usage_error(&e);
    }
    ExitCode::from(EXIT_OK)
}
