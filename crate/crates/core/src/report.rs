//! Report emission: CSV grids, JSON summaries and SVG boundary curves.
//! Every file is written to a temporary sibling and renamed into place.

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::Path;

use num_complex::Complex64 as C64;
use serde_json::{json, Value};

use crate::error::Result;
use crate::geometry::{BoundaryCurve, ScanReport};
use crate::grid::ScanGrid;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub const CSV_HEADER: &str = "r,t,value,flag";

/// Writes `contents` to `path` atomically (temp file in the same directory, then rename).
pub fn write_atomic(path: &Path, contents: &[u8]) -> Result<()> {
    let dir = path
        .parent()
        .filter(|p| !p.as_os_str().is_empty())
        .unwrap_or(Path::new("."));
    fs::create_dir_all(dir)?;
    let name = path
        .file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| "out".into());
    let tmp = dir.join(format!(".{name}.tmp{}", std::process::id()));
    {
        let mut file = fs::File::create(&tmp)?;
        file.write_all(contents)?;
        file.sync_all()?;
    }
    fs::rename(&tmp, path)?;
    Ok(())
}

/// The scan grid as CSV. Skipped singular points get no row; they are
/// listed in the JSON summary instead. `flag` is `ok` or `neg` (below `−tol`).
pub fn scan_csv(report: &ScanReport) -> String {
    let mut out = String::with_capacity(report.values.len() * 40);
    out.push_str(CSV_HEADER);
    out.push('\n');
    for (r, t, value) in report.rows() {
        if let Some(v) = value {
            let flag = if v < -report.tol { "neg" } else { "ok" };
            let _ = writeln!(out, "{r},{t},{v},{flag}");
        }
    }
    out
}

pub fn grid_json(grid: &ScanGrid) -> Value {
    let radii = grid.radii();
    json!({
        "r_min": radii.first(),
        "r_max": radii.last(),
        "r_count": radii.len(),
        "angles": grid.angles(),
        "r_values": radii,
    })
}

/// Summary of a scan with the fields shared by every grid command.
pub fn scan_summary(command: &str, verdict: &str, report: &ScanReport) -> serde_json::Map<String, Value> {
    let mut map = serde_json::Map::new();
    map.insert("command".into(), json!(command));
    map.insert("verdict".into(), json!(verdict));
    map.insert("quantity".into(), json!(report.quantity.name()));
    map.insert("min".into(), json!(report.min_value));
    map.insert("argmin_r".into(), json!(report.argmin.0));
    map.insert("argmin_t".into(), json!(report.argmin.1));
    map.insert("tol".into(), json!(report.tol));
    map.insert("grid".into(), grid_json(&report.grid));
    map.insert("skipped".into(), json!(report.skipped));
    map.insert("detail".into(), json!(report.verdict));
    map.insert("version".into(), json!(VERSION));
    map
}

pub fn to_json_text(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("JSON values always serialize");
    text.push('\n');
    text
}

const SVG_SIZE: f64 = 512.0;
const SVG_MARGIN: f64 = 32.0;

/// One boundary curve as an SVG 1.1 document: axis box, coordinate axes
/// where they cross the box, the closed polyline and a radius label.
pub fn curve_svg(curve: &BoundaryCurve, label: &str) -> String {
    let (mut lo, mut hi) = (
        C64::new(f64::INFINITY, f64::INFINITY),
        C64::new(f64::NEG_INFINITY, f64::NEG_INFINITY),
    );
    for p in &curve.points {
        lo = C64::new(lo.re.min(p.re), lo.im.min(p.im));
        hi = C64::new(hi.re.max(p.re), hi.im.max(p.im));
    }
    let span = (hi.re - lo.re).max(hi.im - lo.im).max(1e-12);
    let centre = (lo + hi) * 0.5;
    let half = 0.5 * span * 1.05;
    let scale = (SVG_SIZE - 2.0 * SVG_MARGIN) / (2.0 * half);
    let mid = SVG_SIZE / 2.0;
    let map = |p: C64| (mid + (p.re - centre.re) * scale, mid - (p.im - centre.im) * scale);
    let (x0, x1) = (SVG_MARGIN, SVG_SIZE - SVG_MARGIN);

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8" standalone="no"?>"#);
    let _ = writeln!(s, "<!-- logpoly {VERSION} -->");
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SVG_SIZE}" height="{SVG_SIZE}" viewBox="0 0 {SVG_SIZE} {SVG_SIZE}">"#
    );
    let _ = writeln!(
        s,
        r#"<rect x="0" y="0" width="{SVG_SIZE}" height="{SVG_SIZE}" fill="white"/>"#
    );
    let _ = writeln!(
        s,
        r##"<rect x="{x0}" y="{x0}" width="{w}" height="{w}" fill="none" stroke="#888" stroke-width="1"/>"##,
        w = x1 - x0
    );
    let (ox, oy) = map(C64::new(0.0, 0.0));
    if (x0..=x1).contains(&oy) {
        let _ = writeln!(
            s,
            r##"<line x1="{x0}" y1="{oy:.3}" x2="{x1}" y2="{oy:.3}" stroke="#ccc" stroke-width="1"/>"##
        );
    }
    if (x0..=x1).contains(&ox) {
        let _ = writeln!(
            s,
            r##"<line x1="{ox:.3}" y1="{x0}" x2="{ox:.3}" y2="{x1}" stroke="#ccc" stroke-width="1"/>"##
        );
    }
    let mut points = String::with_capacity(curve.points.len() * 18);
    for (i, p) in curve.points.iter().chain(curve.points.first()).enumerate() {
        let (x, y) = map(*p);
        if i > 0 {
            points.push(' ');
        }
        let _ = write!(points, "{x:.3},{y:.3}");
    }
    let _ = writeln!(
        s,
        r##"<polyline points="{points}" fill="none" stroke="#1f4e9c" stroke-width="1.25" stroke-linejoin="round"/>"##
    );
    let _ = writeln!(
        s,
        r#"<text x="{x0}" y="{ty}" font-family="sans-serif" font-size="14">{label}</text>"#,
        ty = SVG_MARGIN - 10.0
    );
    s.push_str("</svg>\n");
    s
}
