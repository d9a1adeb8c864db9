//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use logpoly::geometry::{convexity_radius, goodman_saff_scan, univalence_scan, GoodmanSaffVerdict};
use logpoly::grid::ScanGrid;
use logpoly::identities::{self, IdentityResult, IndicatorLaw};
use logpoly::mappings::{HarmonicLogMap, LphgSpec};
use logpoly::random::seeded;
use logpoly::specfile::load_document;
use logpoly::wirtinger::{fd_wirtinger, FdConfig, DEFAULT_DEGREE_CAP};
use logpoly::{AnalyticSeries, BiSeries, ComplexPoint, C64};

const CAP: usize = DEFAULT_DEGREE_CAP;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn within(start: Instant, budget: Duration) -> Result<(), String> {
    let spent = start.elapsed();
    if spent <= budget {
        Ok(())
    } else {
        Err(format!("took {spent:.2?}, budget {budget:?}"))
    }
}

fn identities_pass(results: &[IdentityResult]) -> Outcome {
    let mut parts = Vec::new();
    for r in results {
        if !r.passed {
            return Err(format!(
                "{}: max error {:e} > {:e} at {}",
                r.name,
                r.max_error,
                r.tolerance,
                r.worst.as_deref().unwrap_or("?")
            ));
        }
        parts.push(format!("{} max {:e} over {}", r.name, r.max_error, r.samples));
    }
    Ok(parts.join("; "))
}

fn operator_algebra() -> Outcome {
    let start = Instant::now();
    let mut rng = seeded(1);
    let results = [
        identities::operator_linearity(&mut rng, CAP, 1000).map_err(err)?,
        identities::product_rule(&mut rng, CAP, 1000).map_err(err)?,
    ];
    let detail = identities_pass(&results)?;
    within(start, Duration::from_secs(5))?;
    Ok(detail)
}

fn distribution_law() -> Outcome {
    let start = Instant::now();
    let mut rng = seeded(2);
    let result = identities::distribution_law(&mut rng, CAP, 200, 4, 16, &[1, 2, 3]).map_err(err)?;
    let detail = identities_pass(&[result])?;
    within(start, Duration::from_secs(10))?;
    Ok(detail)
}

fn jacobian_closed_form() -> Outcome {
    let mut rng = seeded(3);
    let random = identities::jacobian_closed_form(&mut rng, CAP, 200).map_err(err)?;
    let mut detail = identities_pass(&[random])?;

    // log F = z²z̄ = |z|²·z, i.e. log G = z with weights (0, 1).
    let z = ComplexPoint::new(0.5, 0.0).map_err(err)?;
    let u = BiSeries::monomial(CAP, 2, 1, C64::new(1.0, 0.0)).map_err(err)?;
    let w = z.value();
    let (oracle_z, oracle_zb) = (2.0 * w * w.conj(), w * w);
    let (fd_z, fd_zb) = fd_wirtinger(|v| v * v * v.conj(), z, &FdConfig::default()).map_err(err)?;
    let fd_gap = (fd_z - oracle_z).norm().max((fd_zb - oracle_zb).norm());
    if fd_gap > 1e-9 {
        return Err(format!(
            "finite differences disagree with u_z = 2zz̄, u_z̄ = z² by {fd_gap:e}"
        ));
    }
    let sym_gap = (u.partial_z().eval(z).map_err(err)? - oracle_z)
        .norm()
        .max((u.partial_zbar().eval(z).map_err(err)? - oracle_zb).norm());
    if sym_gap > 1e-15 {
        return Err(format!("symbolic Wirtinger pair off by {sym_gap:e}"));
    }
    let identity = AnalyticSeries::new(vec![C64::new(0.0, 0.0), C64::new(1.0, 0.0)], CAP).map_err(err)?;
    let spec = LphgSpec::pure(
        HarmonicLogMap::analytic(identity),
        vec![C64::new(0.0, 0.0), C64::new(1.0, 0.0)],
    )
    .map_err(err)?;
    let prep = spec.prepare().map_err(err)?;
    for (label, value) in [
        ("direct", prep.jacobian_direct(z).map_err(err)?),
        ("closed", prep.jacobian_closed(z).map_err(err)?),
    ] {
        if (value - 0.1875).abs() > 1e-12 {
            return Err(format!("{label} Jacobian of z²z̄ at 0.5 is {value}, expected 0.1875"));
        }
    }
    detail.push_str("; z²z̄ at 0.5 gives 0.1875");
    Ok(detail)
}

fn power_family_jacobian() -> Outcome {
    let mut rng = seeded(4);
    let result = identities::jacobian_power_family(&mut rng, CAP, &[2, 3, 4], 100).map_err(err)?;
    identities_pass(&[result])
}

fn ratio_identity() -> Outcome {
    let mut rng = seeded(5);
    let result = identities::ratio_identity(&mut rng, CAP, 50, &[2, 3]).map_err(err)?;
    identities_pass(&[result])
}

fn tangential_derivatives() -> Outcome {
    let mut rng = seeded(6);
    let (first, second) = identities::tangential_derivatives(&mut rng, CAP, 30, 30).map_err(err)?;
    identities_pass(&[first, second])
}

fn indicator_equalities() -> Outcome {
    let mut rng = seeded(7);
    let results = [
        identities::indicator_equality(&mut rng, CAP, 50, IndicatorLaw::Starlike).map_err(err)?,
        identities::indicator_equality(&mut rng, CAP, 50, IndicatorLaw::Convex).map_err(err)?,
    ];
    identities_pass(&results)
}

fn koebe_convexity_radius() -> Outcome {
    let start = Instant::now();
    let step = 0.005;
    let doc = load_document(&fixture("koebe.json")).map_err(err)?;
    let u = doc.primary_series().map_err(err)?;
    let grid = ScanGrid::uniform(step, 0.6, step, 1024).map_err(err)?;
    let radius = convexity_radius(&u, &grid, 1e-9).map_err(err)?;
    let expected = 2.0 - 3f64.sqrt();
    if (radius - expected).abs() > step {
        return Err(format!("radius {radius}, expected {expected:.6} ± {step}"));
    }
    within(start, Duration::from_secs(30))?;
    Ok(format!("radius {radius} vs 2 − √3 = {expected:.6}"))
}

fn goodman_saff() -> Outcome {
    let start = Instant::now();
    let grid = ScanGrid::uniform(0.01, 0.99, 0.01, 1024).map_err(err)?;
    let mut parts = Vec::new();
    for name in ["power_two.json", "ellipse.json", "half_plane.json"] {
        let doc = load_document(&fixture(name)).map_err(err)?;
        let spec = doc.class().ok_or_else(|| format!("{name} is not a class spec"))?;
        let report = goodman_saff_scan(spec, &grid, 1e-9).map_err(err)?;
        if report.verdict != GoodmanSaffVerdict::Pass {
            return Err(format!("{name}: verdict {:?}", report.verdict));
        }
        if !report.scan.skipped.is_empty() || report.scan.min_value < -1e-9 {
            return Err(format!(
                "{name}: min {} with {} skipped",
                report.scan.min_value,
                report.scan.skipped.len()
            ));
        }
        if report.scan.grid.radii().iter().any(|&r| r > 0.41421356) {
            return Err(format!("{name}: scanned past √2 − 1"));
        }
        parts.push(format!("{name} min {:.6}", report.scan.min_value));
    }
    within(start, Duration::from_secs(60))?;
    Ok(parts.join("; "))
}

fn polyharmonicity() -> Outcome {
    let mut rng = seeded(10);
    let result = identities::polyharmonicity(&mut rng, CAP, 100, 4).map_err(err)?;
    identities_pass(&[result])
}

fn univalence_scanner() -> Outcome {
    let grid = ScanGrid::uniform(0.05, 0.95, 0.05, 1024).map_err(err)?;
    let identity = load_document(&fixture("identity.json"))
        .map_err(err)?
        .primary_series()
        .map_err(err)?;
    let square = load_document(&fixture("square.json"))
        .map_err(err)?
        .primary_series()
        .map_err(err)?;
    let passing = univalence_scan(&identity, &grid).map_err(err)?;
    if passing.falsified() {
        return Err(format!("identity map falsified: {:?}", passing.verdict));
    }
    let failing = univalence_scan(&square, &grid).map_err(err)?;
    if let Some(bad) = failing.radii.iter().find(|r| !r.falsified || r.max_abs_winding != 2) {
        return Err(format!(
            "z² at r = {}: falsified {}, winding {}",
            bad.r, bad.falsified, bad.max_abs_winding
        ));
    }
    if univalence_scan(&identity, &grid).map_err(err)? != passing
        || univalence_scan(&square, &grid).map_err(err)? != failing
    {
        return Err("repeated scans differ".into());
    }
    Ok(format!(
        "{} radii: identity not falsified, z² winds twice everywhere",
        grid.radii().len()
    ))
}

fn read_tree(dir: &Path) -> BTreeMap<String, Vec<u8>> {
    let mut files = BTreeMap::new();
    for entry in std::fs::read_dir(dir).expect("output directory") {
        let path = entry.expect("directory entry").path();
        let name = path.file_name().unwrap().to_string_lossy().into_owned();
        files.insert(name, std::fs::read(&path).expect("output file"));
    }
    files
}

fn cli_determinism() -> Outcome {
    let exe = env!("CARGO_BIN_EXE_logpoly");
    let spec = |name: &str| fixture(name).to_string_lossy().into_owned();
    let grid = [
        "--r-min", "0.05", "--r-max", "0.95", "--r-step", "0.05", "--angles", "256",
    ];
    let with_grid = |head: Vec<String>| {
        let mut args = head;
        args.extend(grid.iter().map(|s| s.to_string()));
        args
    };
    let strings = |xs: &[&str]| xs.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    let commands: Vec<Vec<String>> = vec![
        strings(&["check-identities", "--random", "--seed", "11", "--trials", "10"]),
        strings(&["check-identities", "--spec", &spec("ellipse.json"), "--trials", "20"]),
        strings(&[
            "check-identities",
            "--spec",
            &spec("polyharmonic_parts.json"),
            "--trials",
            "20",
        ]),
        with_grid(strings(&[
            "scan",
            "--spec",
            &spec("ellipse.json"),
            "--quantity",
            "convex",
        ])),
        with_grid(strings(&[
            "scan",
            "--spec",
            &spec("koebe.json"),
            "--quantity",
            "starlike",
        ])),
        with_grid(strings(&[
            "scan",
            "--spec",
            &spec("power_two.json"),
            "--quantity",
            "jacobian",
        ])),
        with_grid(strings(&[
            "scan",
            "--spec",
            &spec("half_plane.json"),
            "--quantity",
            "convex",
            "--target",
            "logG",
        ])),
        with_grid(strings(&["goodman-saff", "--spec", &spec("half_plane.json")])),
        with_grid(strings(&["goodman-saff", "--spec", &spec("nonconstant_log_f.json")])),
        with_grid(strings(&["univalence", "--spec", &spec("square.json")])),
        with_grid(strings(&["local-univalence", "--spec", &spec("ellipse_weighted.json")])),
        strings(&[
            "render",
            "--spec",
            &spec("ellipse.json"),
            "--radii",
            "0.3,0.9",
            "--angles",
            "256",
        ]),
    ];
    for args in &commands {
        let mut runs = Vec::new();
        for _ in 0..2 {
            let dir = tempfile::tempdir().map_err(err)?;
            let output = Command::new(exe)
                .args(args)
                .arg("--out")
                .arg(dir.path())
                .env("LOGPOLY_THREADS", "4")
                .output()
                .map_err(err)?;
            if output.status.code().is_none_or(|c| c == 2) {
                return Err(format!(
                    "`{}` failed: {}",
                    args.join(" "),
                    String::from_utf8_lossy(&output.stderr)
                ));
            }
            let files = read_tree(dir.path());
            if files.is_empty() {
                return Err(format!("`{}` wrote no files", args.join(" ")));
            }
            runs.push((output.status.code(), output.stdout, files));
        }
        if runs[0] != runs[1] {
            return Err(format!("`{}` differs between runs", args.join(" ")));
        }
    }
    Ok(format!("{} commands reproduced byte for byte", commands.len()))
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("operator algebra", operator_algebra),
        ("distribution law", distribution_law),
        ("closed-form Jacobian", jacobian_closed_form),
        ("power-family Jacobian", power_family_jacobian),
        ("ratio identity", ratio_identity),
        ("tangential derivatives", tangential_derivatives),
        ("indicator equalities", indicator_equalities),
        ("Koebe convexity radius", koebe_convexity_radius),
        ("subdisk convexity up to √2 − 1", goodman_saff),
        ("polyharmonicity", polyharmonicity),
        ("univalence scanner", univalence_scanner),
        ("CLI determinism", cli_determinism),
    ];
    let mut failures = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        match check() {
            Ok(detail) => println!("PASS {name} ({:.2?}): {detail}", start.elapsed()),
            Err(detail) => {
                failures += 1;
                println!("FAIL {name} ({:.2?}): {detail}", start.elapsed());
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
