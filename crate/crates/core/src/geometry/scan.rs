//! Grid scans: indicator tables, univalence screening, convexity radius and
//! the subdisk-convexity check up to `√2 − 1`.

use std::f64::consts::TAU;

use num_complex::Complex64 as C64;
use rayon::prelude::*;
use serde::Serialize;

use super::curve::{boundary_curve, is_simple, winding_number};
use super::tangential_second_series;
use crate::error::{Error, Result};
use crate::grid::ScanGrid;
use crate::mappings::{LphgSpec, SINGULAR_EPS};
use crate::wirtinger::{BiSeries, ComplexPoint};

/// `√2 − 1` to 11 decimals.
pub const GOODMAN_SAFF_RADIUS: f64 = 0.41421356237;

/// Number of interior probe points used by the winding test on each circle.
pub const UNIVALENCE_PROBES: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    Starlike,
    Convex,
    Jacobian,
}

impl Quantity {
    pub fn name(self) -> &'static str {
        match self {
            Quantity::Starlike => "starlike",
            Quantity::Convex => "convex",
            Quantity::Jacobian => "jacobian",
        }
    }
}

/// Series needed to evaluate one [`Quantity`] of `u` pointwise.
#[derive(Clone, Debug)]
pub enum QuantityField {
    /// `Re(numerator / denominator)` with a singular denominator check.
    Ratio {
        quantity: Quantity,
        numerator: BiSeries,
        denominator: BiSeries,
    },
    Jacobian {
        dz: BiSeries,
        dzb: BiSeries,
    },
}

impl QuantityField {
    pub fn new(u: &BiSeries, quantity: Quantity) -> Self {
        match quantity {
            Quantity::Starlike => QuantityField::Ratio {
                quantity,
                numerator: u.op_l(),
                denominator: u.clone(),
            },
            Quantity::Convex => QuantityField::Ratio {
                quantity,
                numerator: tangential_second_series(u),
                denominator: u.op_l(),
            },
            Quantity::Jacobian => QuantityField::Jacobian {
                dz: u.partial_z(),
                dzb: u.partial_zbar(),
            },
        }
    }

    pub fn quantity(&self) -> Quantity {
        match self {
            QuantityField::Ratio { quantity, .. } => *quantity,
            QuantityField::Jacobian { .. } => Quantity::Jacobian,
        }
    }

    pub fn value(&self, z: ComplexPoint) -> Result<f64> {
        z.ensure_punctured_disk()?;
        match self {
            QuantityField::Ratio {
                quantity,
                numerator,
                denominator,
            } => {
                let den = denominator.eval(z)?;
                if den.norm() <= SINGULAR_EPS {
                    let what = match quantity {
                        Quantity::Starlike => "u",
                        _ => "𝓛[u]",
                    };
                    return Err(Error::singular(z.value(), what));
                }
                Ok((numerator.eval(z)? / den).re)
            }
            QuantityField::Jacobian { dz, dzb } => Ok(dz.eval(z)?.norm_sqr() - dzb.eval(z)?.norm_sqr()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ScanVerdict {
    Positive,
    /// Points below `−tol`; at most 16 witnesses are listed, `count` is the total.
    NonpositiveAt {
        count: usize,
        witnesses: Vec<(f64, f64)>,
    },
}

impl ScanVerdict {
    pub fn is_positive(&self) -> bool {
        matches!(self, ScanVerdict::Positive)
    }

    pub fn label(&self) -> &'static str {
        match self {
            ScanVerdict::Positive => "positive",
            ScanVerdict::NonpositiveAt { .. } => "nonpositive-at",
        }
    }
}

const MAX_WITNESSES: usize = 16;

/// Values of one quantity over a grid, radius-major; `None` marks a skipped
/// singular point.
#[derive(Clone, Debug, PartialEq)]
pub struct ScanReport {
    pub quantity: Quantity,
    pub grid: ScanGrid,
    pub values: Vec<Option<f64>>,
    pub min_value: f64,
    pub argmin: (f64, f64),
    pub tol: f64,
    pub verdict: ScanVerdict,
    pub skipped: Vec<(f64, f64)>,
}

impl ScanReport {
    fn from_values(quantity: Quantity, grid: &ScanGrid, values: Vec<Option<f64>>, tol: f64) -> Result<Self> {
        let mut best: Option<(usize, f64)> = None;
        let mut skipped = Vec::new();
        let mut count = 0;
        let mut witnesses = Vec::new();
        for (idx, v) in values.iter().enumerate() {
            match v {
                None => skipped.push(grid.coords(idx)),
                Some(v) => {
                    if best.is_none_or(|(_, b)| *v < b) {
                        best = Some((idx, *v));
                    }
                    if *v < -tol {
                        count += 1;
                        if witnesses.len() < MAX_WITNESSES {
                            witnesses.push(grid.coords(idx));
                        }
                    }
                }
            }
        }
        let (idx, min_value) =
            best.ok_or_else(|| Error::Degenerate(format!("every point of the {} scan is singular", quantity.name())))?;
        let verdict = if count == 0 {
            ScanVerdict::Positive
        } else {
            ScanVerdict::NonpositiveAt { count, witnesses }
        };
        Ok(ScanReport {
            quantity,
            grid: grid.clone(),
            values,
            min_value,
            argmin: grid.coords(idx),
            tol,
            verdict,
            skipped,
        })
    }

    /// `(r, t, value)` rows in grid order.
    pub fn rows(&self) -> impl Iterator<Item = (f64, f64, Option<f64>)> + '_ {
        self.values.iter().enumerate().map(|(idx, v)| {
            let (r, t) = self.grid.coords(idx);
            (r, t, *v)
        })
    }
}

/// Evaluates a quantity of `u` over the grid.
pub fn scan(u: &BiSeries, quantity: Quantity, grid: &ScanGrid, tol: f64) -> Result<ScanReport> {
    let field = QuantityField::new(u, quantity);
    let values = grid.evaluate(|z| field.value(z))?;
    ScanReport::from_values(quantity, grid, values, tol)
}

/// Minimum of the convex indicator on one circle.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CircleMinimum {
    pub r: f64,
    /// `None` when every sample on the circle is singular.
    pub min: Option<f64>,
    pub argmin_t: Option<f64>,
    pub skipped: usize,
}

fn minima_from_values(grid: &ScanGrid, values: &[Option<f64>]) -> Vec<CircleMinimum> {
    let m = grid.angles();
    grid.radii()
        .iter()
        .enumerate()
        .map(|(i, &r)| {
            let row = &values[i * m..(i + 1) * m];
            let mut best: Option<(usize, f64)> = None;
            for (j, v) in row.iter().enumerate() {
                if let Some(v) = v {
                    if best.is_none_or(|(_, b)| *v < b) {
                        best = Some((j, *v));
                    }
                }
            }
            CircleMinimum {
                r,
                min: best.map(|(_, v)| v),
                argmin_t: best.map(|(j, _)| grid.angle(j)),
                skipped: row.iter().filter(|v| v.is_none()).count(),
            }
        })
        .collect()
}

/// Per-circle minima of the convex indicator of `u`.
pub fn circle_minima(u: &BiSeries, grid: &ScanGrid) -> Result<Vec<CircleMinimum>> {
    let field = QuantityField::new(u, Quantity::Convex);
    let values = grid.evaluate(|z| field.value(z))?;
    Ok(minima_from_values(grid, &values))
}

/// Largest grid radius `r*` such that the convex indicator is `≥ −tol` on
/// every grid circle of radius `≤ r*`; `0` if the first circle already fails.
/// Fully singular circles are skipped.
pub fn convexity_radius(u: &BiSeries, grid: &ScanGrid, tol: f64) -> Result<f64> {
    let minima = circle_minima(u, grid)?;
    if minima.iter().all(|c| c.min.is_none()) {
        return Err(Error::Degenerate("𝓛[u] vanishes on every scanned circle".into()));
    }
    let mut radius = 0.0;
    for circle in &minima {
        match circle.min {
            Some(v) if v < -tol => break,
            Some(_) => radius = circle.r,
            None => {}
        }
    }
    Ok(radius)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RadiusUnivalence {
    pub r: f64,
    pub degenerate: bool,
    pub simple: bool,
    pub crossing: Option<(usize, usize)>,
    /// Winding number about the image of each probe point; `None` if the
    /// image lies on the curve.
    pub windings: Vec<Option<i64>>,
    pub max_abs_winding: i64,
    pub falsified: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum UnivalenceVerdict {
    NotFalsified,
    NonUnivalentAt {
        r: f64,
        max_abs_winding: i64,
        crossing: Option<(usize, usize)>,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct UnivalenceReport {
    pub radii: Vec<RadiusUnivalence>,
    pub verdict: UnivalenceVerdict,
}

impl UnivalenceReport {
    pub fn falsified(&self) -> bool {
        !matches!(self.verdict, UnivalenceVerdict::NotFalsified)
    }
}

/// Probe points inside `|z| < r`: the centre and three rings of five.
fn probes(r: f64) -> Vec<C64> {
    let mut out = vec![C64::new(0.0, 0.0)];
    for (ring, frac) in [0.3, 0.6, 0.85].into_iter().enumerate() {
        for k in 0..5 {
            let t = TAU * k as f64 / 5.0 + 0.37 * (ring + 1) as f64;
            out.push(C64::from_polar(frac * r, t));
        }
    }
    debug_assert_eq!(out.len(), UNIVALENCE_PROBES);
    out
}

fn radius_univalence(u: &BiSeries, r: f64, angles: usize) -> Result<RadiusUnivalence> {
    let curve = boundary_curve(u, r, angles)?;
    if curve.is_degenerate() {
        return Ok(RadiusUnivalence {
            r,
            degenerate: true,
            simple: false,
            crossing: None,
            windings: Vec::new(),
            max_abs_winding: 0,
            falsified: true,
        });
    }
    let simplicity = is_simple(&curve)?;
    let clearance = 1e-9 * curve.diameter();
    let windings = probes(r)
        .into_iter()
        .map(|p| {
            let image = u.eval(ComplexPoint::from_complex(p)?)?;
            let dist = curve
                .points
                .iter()
                .map(|q| (q - image).norm())
                .fold(f64::INFINITY, f64::min);
            if dist <= clearance {
                Ok(None)
            } else {
                winding_number(&curve.points, image).map(Some)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let max_abs_winding = windings.iter().flatten().map(|w| w.abs()).max().unwrap_or(0);
    Ok(RadiusUnivalence {
        r,
        degenerate: false,
        simple: simplicity.simple,
        crossing: simplicity.crossing,
        falsified: !simplicity.simple || max_abs_winding > 1,
        windings,
        max_abs_winding,
    })
}

/// Screens each circle for non-injectivity: the boundary curve must be simple
/// and wind at most once around the image of every probe point.
pub fn univalence_scan(u: &BiSeries, grid: &ScanGrid) -> Result<UnivalenceReport> {
    let radii = grid
        .radii()
        .par_iter()
        .map(|&r| radius_univalence(u, r, grid.angles()))
        .collect::<Result<Vec<_>>>()?;
    let verdict = radii
        .iter()
        .find(|r| r.falsified)
        .map_or(UnivalenceVerdict::NotFalsified, |bad| {
            UnivalenceVerdict::NonUnivalentAt {
                r: bad.r,
                max_abs_winding: bad.max_abs_winding,
                crossing: bad.crossing,
            }
        });
    Ok(UnivalenceReport { radii, verdict })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GoodmanSaffHypotheses {
    pub f_h_constant: bool,
    /// Minimum of the convex indicator of `log G` over the scanned grid.
    pub log_g_convex_min: f64,
    pub log_g_convex: bool,
    pub log_g_univalent: bool,
    pub log_f_univalent: bool,
    /// No zeros of `𝓛[log G]` or `B(z)` on the scanned circles.
    pub nonvanishing: bool,
}

impl GoodmanSaffHypotheses {
    pub fn all_hold(&self) -> bool {
        self.f_h_constant && self.log_g_convex && self.log_g_univalent && self.log_f_univalent && self.nonvanishing
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GoodmanSaffVerdict {
    Pass,
    Fail { r: f64, t: f64, value: f64 },
    HypothesesUnmet,
}

impl GoodmanSaffVerdict {
    pub fn label(&self) -> &'static str {
        match self {
            GoodmanSaffVerdict::Pass => "pass",
            GoodmanSaffVerdict::Fail { .. } => "fail",
            GoodmanSaffVerdict::HypothesesUnmet => "hypotheses-unmet",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GoodmanSaffReport {
    pub hypotheses: GoodmanSaffHypotheses,
    /// Convex indicator of `log F` on the grid capped at `√2 − 1`.
    pub scan: ScanReport,
    pub per_radius: Vec<CircleMinimum>,
    pub verdict: GoodmanSaffVerdict,
}

/// Checks that `log F` maps every subdisk `|z| < ρ ≤ √2 − 1` onto a convex
/// region, after checking the hypotheses on the same circles. The scan is
/// always run; unmet hypotheses only change the verdict.
pub fn goodman_saff_scan(spec: &LphgSpec, grid: &ScanGrid, tol: f64) -> Result<GoodmanSaffReport> {
    let capped = grid
        .capped(GOODMAN_SAFF_RADIUS)
        .ok_or_else(|| Error::InvalidArgument(format!("no grid radius lies below {GOODMAN_SAFF_RADIUS}")))?;
    let log_f = spec.assemble_log_f()?;
    let log_g = spec.log_g().to_series();

    let g_scan = scan(&log_g, Quantity::Convex, &capped, tol)?;
    let f_scan = scan(&log_f, Quantity::Convex, &capped, tol)?;
    let weight_ok = capped.radii().iter().all(|r| spec.weight(r * r).norm() > SINGULAR_EPS);

    let hypotheses = GoodmanSaffHypotheses {
        f_h_constant: spec.has_constant_factors(),
        log_g_convex_min: g_scan.min_value,
        log_g_convex: g_scan.verdict.is_positive(),
        log_g_univalent: !univalence_scan(&log_g, &capped)?.falsified(),
        log_f_univalent: !univalence_scan(&log_f, &capped)?.falsified(),
        nonvanishing: g_scan.skipped.is_empty() && weight_ok,
    };

    let per_radius = minima_from_values(&capped, &f_scan.values);
    let verdict = if !hypotheses.all_hold() {
        GoodmanSaffVerdict::HypothesesUnmet
    } else if f_scan.verdict.is_positive() {
        GoodmanSaffVerdict::Pass
    } else {
        GoodmanSaffVerdict::Fail {
            r: f_scan.argmin.0,
            t: f_scan.argmin.1,
            value: f_scan.min_value,
        }
    };
    Ok(GoodmanSaffReport {
        hypotheses,
        scan: f_scan,
        per_radius,
        verdict,
    })
}
