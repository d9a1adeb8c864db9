//! Command-line front end.
//!
//! Exit codes: 0 when every verdict passes, 1 when a quantitative verdict
//! fails, 2 for unusable input (bad flags, unreadable or invalid spec).

use std::io::IsTerminal;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::geometry::{
    boundary_curve, goodman_saff_scan, scan, univalence_scan, GoodmanSaffVerdict, Quantity, UnivalenceVerdict,
    DEFAULT_TOL,
};
use crate::grid::{ScanGrid, DEFAULT_ANGLES, DEFAULT_R_MAX, DEFAULT_R_MIN, DEFAULT_R_STEP};
use crate::identities::{random_suite, spec_suite, IdentityResult};
use crate::mappings::{local_univalence_check, LocalUnivalenceVerdict};
use crate::report::{self, grid_json, scan_csv, scan_summary, to_json_text, write_atomic, VERSION};
use crate::specfile::{load_document, MappingDocument};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "logpoly", version, about = "Log-polyharmonic mappings of the unit disk")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the identity suite on random instances or on one spec.
    CheckIdentities(IdentityArgs),
    /// Tabulate an indicator or the Jacobian over a polar grid.
    Scan(ScanArgs),
    /// Check subdisk convexity of log F up to radius √2 − 1.
    GoodmanSaff(GoodmanSaffArgs),
    /// Draw boundary curves u(re^{it}) as SVG.
    Render(RenderArgs),
    /// Screen boundary curves for non-injectivity.
    Univalence(UnivalenceArgs),
    /// Evaluate the local-univalence hypotheses and min J_{log F} on a grid.
    LocalUnivalence(LocalUnivalenceArgs),
}

#[derive(Debug, Args)]
pub struct GridArgs {
    #[arg(long, default_value_t = DEFAULT_R_MIN)]
    pub r_min: f64,
    #[arg(long, default_value_t = DEFAULT_R_MAX)]
    pub r_max: f64,
    #[arg(long, default_value_t = DEFAULT_R_STEP)]
    pub r_step: f64,
    #[arg(long, default_value_t = DEFAULT_ANGLES)]
    pub angles: usize,
}

impl GridArgs {
    fn grid(&self) -> Result<ScanGrid> {
        ScanGrid::uniform(self.r_min, self.r_max, self.r_step, self.angles)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    #[value(name = "logF")]
    LogF,
    #[value(name = "logG")]
    LogG,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum QuantityArg {
    Starlike,
    Convex,
    Jacobian,
}

impl From<QuantityArg> for Quantity {
    fn from(q: QuantityArg) -> Self {
        match q {
            QuantityArg::Starlike => Quantity::Starlike,
            QuantityArg::Convex => Quantity::Convex,
            QuantityArg::Jacobian => Quantity::Jacobian,
        }
    }
}

#[derive(Debug, Args)]
pub struct IdentityArgs {
    #[arg(long, conflicts_with = "random", required_unless_present = "random")]
    pub spec: Option<PathBuf>,
    #[arg(long)]
    pub random: bool,
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
    /// Random instances per identity, or sample points with --spec.
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[arg(long)]
    pub spec: PathBuf,
    #[arg(long, value_enum)]
    pub quantity: QuantityArg,
    #[arg(long, value_enum, default_value = "logF")]
    pub target: Target,
    #[command(flatten)]
    pub grid: GridArgs,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GoodmanSaffArgs {
    #[arg(long)]
    pub spec: PathBuf,
    #[command(flatten)]
    pub grid: GridArgs,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    #[arg(long)]
    pub spec: PathBuf,
    #[arg(long, value_enum, default_value = "logF")]
    pub target: Target,
    /// Comma-separated radii.
    #[arg(long, value_delimiter = ',', required = true)]
    pub radii: Vec<f64>,
    #[arg(long, default_value_t = DEFAULT_ANGLES)]
    pub angles: usize,
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct UnivalenceArgs {
    #[arg(long)]
    pub spec: PathBuf,
    #[arg(long, value_enum, default_value = "logF")]
    pub target: Target,
    #[command(flatten)]
    pub grid: GridArgs,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct LocalUnivalenceArgs {
    #[arg(long)]
    pub spec: PathBuf,
    #[command(flatten)]
    pub grid: GridArgs,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// What a command produced: a JSON summary for stdout and an exit code.
struct Outcome {
    summary: Value,
    code: i32,
}

fn series_for(doc: &MappingDocument, target: Target) -> Result<crate::wirtinger::BiSeries> {
    match target {
        Target::LogF => doc.primary_series(),
        Target::LogG => doc
            .log_g_series()
            .ok_or_else(|| Error::Schema("--target logG needs a spec with `log_G`".into())),
    }
}

fn class_spec(doc: &MappingDocument) -> Result<&crate::mappings::LphgSpec> {
    doc.class()
        .ok_or_else(|| Error::Schema("this command needs a spec with `log_G` and `lambda`".into()))
}

fn target_name(target: Target) -> &'static str {
    match target {
        Target::LogF => "logF",
        Target::LogG => "logG",
    }
}

fn write_summary(out: Option<&Path>, summary: &Value) -> Result<()> {
    if let Some(dir) = out {
        write_atomic(&dir.join("summary.json"), to_json_text(summary).as_bytes())?;
    }
    Ok(())
}

fn identity_outcome(results: Vec<IdentityResult>, command_detail: Value, out: Option<&Path>) -> Result<Outcome> {
    let passed = results.iter().all(|r| r.passed);
    let worst = results
        .iter()
        .filter(|r| !r.passed)
        .max_by(|a, b| {
            (a.max_error / a.tolerance.max(f64::MIN_POSITIVE))
                .total_cmp(&(b.max_error / b.tolerance.max(f64::MIN_POSITIVE)))
        })
        .map(|r| json!({ "name": r.name, "max_error": r.max_error, "at": r.worst }));
    let summary = json!({
        "command": "check-identities",
        "verdict": if passed { "pass" } else { "fail" },
        "input": command_detail,
        "identities": results,
        "worst_failure": worst,
        "version": VERSION,
    });
    write_summary(out, &summary)?;
    Ok(Outcome {
        summary,
        code: if passed { EXIT_PASS } else { EXIT_FAIL },
    })
}

fn check_identities(args: &IdentityArgs) -> Result<Outcome> {
    if args.trials == 0 {
        return Err(Error::InvalidArgument("--trials must be at least 1".into()));
    }
    match &args.spec {
        None => {
            let results = random_suite(args.seed, args.trials)?;
            let detail = json!({ "mode": "random", "seed": args.seed, "trials": args.trials });
            identity_outcome(results, detail, args.out.as_deref())
        }
        Some(path) => {
            let doc = load_document(path)?;
            let detail = json!({ "mode": "spec", "seed": args.seed, "points": args.trials });
            let results = match &doc {
                MappingDocument::Class(spec) => spec_suite(spec, args.seed, args.trials)?,
                MappingDocument::Polyharmonic(spec) => {
                    crate::identities::polyharmonic_spec_suite(spec, args.seed, args.trials)?
                }
            };
            identity_outcome(results, detail, args.out.as_deref())
        }
    }
}

fn run_scan(args: &ScanArgs) -> Result<Outcome> {
    let doc = load_document(&args.spec)?;
    let u = series_for(&doc, args.target)?;
    let grid = args.grid.grid()?;
    let report = scan(&u, args.quantity.into(), &grid, args.tol)?;
    let mut summary = scan_summary("scan", report.verdict.label(), &report);
    summary.insert("target".into(), json!(target_name(args.target)));
    let summary = Value::Object(summary);
    if let Some(dir) = &args.out {
        write_atomic(&dir.join("scan.csv"), scan_csv(&report).as_bytes())?;
    }
    write_summary(args.out.as_deref(), &summary)?;
    let code = if report.verdict.is_positive() {
        EXIT_PASS
    } else {
        EXIT_FAIL
    };
    Ok(Outcome { summary, code })
}

fn run_goodman_saff(args: &GoodmanSaffArgs) -> Result<Outcome> {
    let doc = load_document(&args.spec)?;
    let spec = class_spec(&doc)?;
    let grid = args.grid.grid()?;
    let report = goodman_saff_scan(spec, &grid, args.tol)?;
    let mut summary = scan_summary("goodman-saff", report.verdict.label(), &report.scan);
    summary.insert("hypotheses".into(), json!(report.hypotheses));
    summary.insert("per_radius".into(), json!(report.per_radius));
    summary.insert("radius_cap".into(), json!(crate::geometry::GOODMAN_SAFF_RADIUS));
    summary.insert("detail".into(), json!(report.verdict));
    let summary = Value::Object(summary);
    if let Some(dir) = &args.out {
        write_atomic(&dir.join("goodman_saff.csv"), scan_csv(&report.scan).as_bytes())?;
    }
    write_summary(args.out.as_deref(), &summary)?;
    let code = match report.verdict {
        GoodmanSaffVerdict::Pass => EXIT_PASS,
        _ => EXIT_FAIL,
    };
    Ok(Outcome { summary, code })
}

fn run_render(args: &RenderArgs, diag: &Diagnostics) -> Result<Outcome> {
    let doc = load_document(&args.spec)?;
    let u = series_for(&doc, args.target)?;
    let name = target_name(args.target);
    let mut files = Vec::new();
    let mut skipped = Vec::new();
    for (i, &r) in args.radii.iter().enumerate() {
        let curve = boundary_curve(&u, r, args.angles)?;
        if curve.is_degenerate() {
            diag.warn(&format!("boundary curve at r = {r} is degenerate; skipped"));
            skipped.push(r);
            continue;
        }
        let file = format!("{name}_r{i:03}.svg");
        let svg = report::curve_svg(&curve, &format!("{name}, r = {r}"));
        write_atomic(&args.out.join(&file), svg.as_bytes())?;
        files.push(json!({ "r": r, "file": file, "points": curve.len() }));
    }
    let summary = json!({
        "command": "render",
        "verdict": "done",
        "target": name,
        "angles": args.angles,
        "files": files,
        "skipped": skipped,
        "version": VERSION,
    });
    Ok(Outcome {
        summary,
        code: EXIT_PASS,
    })
}

fn run_univalence(args: &UnivalenceArgs) -> Result<Outcome> {
    let doc = load_document(&args.spec)?;
    let u = series_for(&doc, args.target)?;
    let grid = args.grid.grid()?;
    let report = univalence_scan(&u, &grid)?;
    let verdict = match report.verdict {
        UnivalenceVerdict::NotFalsified => "not-falsified",
        UnivalenceVerdict::NonUnivalentAt { .. } => "non-univalent-at",
    };
    let summary = json!({
        "command": "univalence",
        "verdict": verdict,
        "target": target_name(args.target),
        "detail": report.verdict,
        "grid": grid_json(&grid),
        "probes": crate::geometry::UNIVALENCE_PROBES,
        "radii": report.radii,
        "version": VERSION,
    });
    write_summary(args.out.as_deref(), &summary)?;
    let code = if report.falsified() { EXIT_FAIL } else { EXIT_PASS };
    Ok(Outcome { summary, code })
}

fn run_local_univalence(args: &LocalUnivalenceArgs) -> Result<Outcome> {
    let doc = load_document(&args.spec)?;
    let spec = class_spec(&doc)?;
    let grid = args.grid.grid()?;
    let report = local_univalence_check(spec, &grid)?;
    let verdict = match (report.verdict, report.conclusion_positive) {
        (LocalUnivalenceVerdict::HypothesesFail, _) => "hypotheses-unmet",
        (_, Some(true)) => "positive",
        _ => "fail",
    };
    let summary = json!({
        "command": "local-univalence",
        "verdict": verdict,
        "min": report.min_jacobian_log_f,
        "argmin_r": report.argmin_r,
        "argmin_t": report.argmin_t,
        "grid": grid_json(&grid),
        "skipped": report.skipped,
        "report": report,
        "version": VERSION,
    });
    write_summary(args.out.as_deref(), &summary)?;
    let code = if verdict == "positive" { EXIT_PASS } else { EXIT_FAIL };
    Ok(Outcome { summary, code })
}

/// Diagnostics on stderr, colored unless `NO_COLOR` is set or stderr is not a terminal.
pub struct Diagnostics {
    color: bool,
}

impl Diagnostics {
    pub fn from_env() -> Self {
        let no_color = std::env::var_os("NO_COLOR").is_some_and(|v| !v.is_empty());
        Diagnostics {
            color: !no_color && std::io::stderr().is_terminal(),
        }
    }

    fn emit(&self, label: &str, code: &str, msg: &str) {
        if self.color {
            eprintln!("\x1b[{code}m{label}:\x1b[0m {msg}");
        } else {
            eprintln!("{label}: {msg}");
        }
    }

    pub fn error(&self, msg: &str) {
        self.emit("error", "1;31", msg);
    }

    pub fn warn(&self, msg: &str) {
        self.emit("warning", "1;33", msg);
    }
}

/// Runs a parsed command, prints its JSON summary and returns the exit code.
pub fn run(cli: Cli) -> i32 {
    let diag = Diagnostics::from_env();
    let outcome = match &cli.command {
        Command::CheckIdentities(a) => check_identities(a),
        Command::Scan(a) => run_scan(a),
        Command::GoodmanSaff(a) => run_goodman_saff(a),
        Command::Render(a) => run_render(a, &diag),
        Command::Univalence(a) => run_univalence(a),
        Command::LocalUnivalence(a) => run_local_univalence(a),
    };
    match outcome {
        Ok(Outcome { summary, code }) => {
            print!("{}", to_json_text(&summary));
            code
        }
        Err(e) => {
            diag.error(&e.to_string());
            EXIT_INPUT
        }
    }
}

/// Sizes the global evaluation pool from `LOGPOLY_THREADS` when set.
pub fn configure_threads(diag: &Diagnostics) {
    let Ok(value) = std::env::var("LOGPOLY_THREADS") else {
        return;
    };
    match value.trim().parse::<usize>() {
        Ok(n) if n > 0 => {
            if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
                diag.warn(&format!("could not size the thread pool: {e}"));
            }
        }
        _ => diag.warn(&format!(
            "ignoring LOGPOLY_THREADS={value:?}; expected a positive integer"
        )),
    }
}

pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    configure_threads(&Diagnostics::from_env());
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_PASS };
            let _ = e.print();
            code
        }
    }
}
