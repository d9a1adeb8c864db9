//! Sampled boundary curves `t ↦ u(re^{it})` and polyline predicates on them.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64 as C64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::grid::MIN_ANGLES;
use crate::wirtinger::{BiSeries, ComplexPoint};

const DEGENERATE_DIAMETER: f64 = 1e-12;
const LEVEL_CLEARANCE: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq)]
pub struct BoundaryCurve {
    pub r: f64,
    pub points: Vec<C64>,
    pub closed: bool,
}

impl BoundaryCurve {
    pub fn from_points(r: f64, points: Vec<C64>) -> Self {
        BoundaryCurve {
            r,
            points,
            closed: true,
        }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Largest axis-aligned extent of the samples.
    pub fn diameter(&self) -> f64 {
        let (lo, hi) = bbox(&self.points);
        (hi.re - lo.re).max(hi.im - lo.im)
    }

    pub fn is_degenerate(&self) -> bool {
        self.points.len() < 3 || self.diameter() <= DEGENERATE_DIAMETER
    }

    fn segment_count(&self) -> usize {
        if self.closed {
            self.points.len()
        } else {
            self.points.len().saturating_sub(1)
        }
    }

    fn segment(&self, i: usize) -> (C64, C64) {
        (self.points[i], self.points[(i + 1) % self.points.len()])
    }
}

fn bbox(points: &[C64]) -> (C64, C64) {
    let mut lo = C64::new(f64::INFINITY, f64::INFINITY);
    let mut hi = C64::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
    for p in points {
        lo.re = lo.re.min(p.re);
        lo.im = lo.im.min(p.im);
        hi.re = hi.re.max(p.re);
        hi.im = hi.im.max(p.im);
    }
    (lo, hi)
}

/// Samples `u(re^{2πij/M})` for `j = 0..M`.
pub fn boundary_curve(u: &BiSeries, r: f64, angles: usize) -> Result<BoundaryCurve> {
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::InvalidArgument(format!("radius {r} is not in (0, 1)")));
    }
    if angles < MIN_ANGLES {
        return Err(Error::InvalidArgument(format!(
            "at least {MIN_ANGLES} samples are required, got {angles}"
        )));
    }
    let points = (0..angles)
        .map(|j| {
            let z = ComplexPoint::from_polar(r, TAU * j as f64 / angles as f64)?;
            u.eval(z)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BoundaryCurve::from_points(r, points))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Simplicity {
    pub simple: bool,
    /// Lexicographically smallest pair of intersecting non-adjacent segments.
    pub crossing: Option<(usize, usize)>,
}

fn cross(a: C64, b: C64) -> f64 {
    a.re * b.im - a.im * b.re
}

fn in_box(p: C64, a: C64, b: C64, slack: f64) -> bool {
    p.re >= a.re.min(b.re) - slack
        && p.re <= a.re.max(b.re) + slack
        && p.im >= a.im.min(b.im) - slack
        && p.im <= a.im.max(b.im) + slack
}

/// Segment test with a collinearity band of width `eps` (in area units):
/// touching and overlapping segments count as intersecting.
fn segments_intersect(p1: C64, p2: C64, q1: C64, q2: C64, eps: f64, slack: f64) -> bool {
    let d1 = cross(q2 - q1, p1 - q1);
    let d2 = cross(q2 - q1, p2 - q1);
    let d3 = cross(p2 - p1, q1 - p1);
    let d4 = cross(p2 - p1, q2 - p1);
    let sign = |d: f64| {
        if d > eps {
            1
        } else if d < -eps {
            -1
        } else {
            0
        }
    };
    let (s1, s2, s3, s4) = (sign(d1), sign(d2), sign(d3), sign(d4));
    if s1 * s2 < 0 && s3 * s4 < 0 {
        return true;
    }
    (s1 == 0 && in_box(p1, q1, q2, slack))
        || (s2 == 0 && in_box(p2, q1, q2, slack))
        || (s3 == 0 && in_box(q1, p1, p2, slack))
        || (s4 == 0 && in_box(q2, p1, p2, slack))
}

/// Pairwise intersection test over the closed polyline, skipping adjacent
/// segments. Segments are swept in order of their left x-extent so only
/// pairs with overlapping x-ranges are compared.
pub fn is_simple(curve: &BoundaryCurve) -> Result<Simplicity> {
    if curve.is_degenerate() {
        return Err(Error::Degenerate(format!(
            "curve at r = {} has diameter {:e}",
            curve.r,
            curve.diameter()
        )));
    }
    let count = curve.segment_count();
    let diam = curve.diameter();
    let eps = 1e-12 * diam * diam;
    let slack = 1e-12 * diam;

    let segs: Vec<(C64, C64)> = (0..count).map(|i| curve.segment(i)).collect();
    let mut order: Vec<usize> = (0..count).collect();
    let x_lo = |i: usize| segs[i].0.re.min(segs[i].1.re);
    let x_hi = |i: usize| segs[i].0.re.max(segs[i].1.re);
    order.sort_by(|&a, &b| x_lo(a).total_cmp(&x_lo(b)).then(a.cmp(&b)));

    let adjacent = |i: usize, j: usize| {
        let d = i.abs_diff(j);
        d <= 1 || (curve.closed && d == count - 1)
    };

    let mut best: Option<(usize, usize)> = None;
    for (pos, &i) in order.iter().enumerate() {
        let (p1, p2) = segs[i];
        let (ylo, yhi) = (p1.im.min(p2.im), p1.im.max(p2.im));
        for &j in &order[pos + 1..] {
            if x_lo(j) > x_hi(i) + slack {
                break;
            }
            if adjacent(i, j) {
                continue;
            }
            let (q1, q2) = segs[j];
            if q1.im.max(q2.im) < ylo - slack || q1.im.min(q2.im) > yhi + slack {
                continue;
            }
            if segments_intersect(p1, p2, q1, q2, eps, slack) {
                let pair = (i.min(j), i.max(j));
                if best.is_none_or(|b| pair < b) {
                    best = Some(pair);
                }
            }
        }
    }
    Ok(Simplicity {
        simple: best.is_none(),
        crossing: best,
    })
}

/// Winding number of the closed polyline about `p`.
pub fn winding_number(points: &[C64], p: C64) -> Result<i64> {
    if points.iter().any(|q| (q - p).norm() == 0.0) {
        return Err(Error::Degenerate("winding point lies on the curve".into()));
    }
    let mut total = 0.0;
    for (i, a) in points.iter().enumerate() {
        let b = points[(i + 1) % points.len()];
        let mut d = (b - p).arg() - (a - p).arg();
        if d > PI {
            d -= TAU;
        } else if d <= -PI {
            d += TAU;
        }
        total += d;
    }
    Ok((total / TAU).round() as i64)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DirectionalConvexity {
    pub convex: bool,
    /// Level (in the rotated frame) with a crossing count other than 0 or 2.
    pub witness_level: Option<f64>,
    pub witness_crossings: Option<usize>,
    pub levels_tested: usize,
}

/// Tests whether every line parallel to `e^{iφ}` meets the region bounded by
/// the curve in a connected set, by counting crossings of horizontal levels
/// after rotating the samples by `e^{-iφ}`.
pub fn directional_convexity(curve: &BoundaryCurve, phi: f64) -> Result<DirectionalConvexity> {
    let simplicity = is_simple(curve)?;
    if !simplicity.simple {
        return Err(Error::Precondition(format!("curve at r = {} is not simple", curve.r)));
    }
    let rot = C64::from_polar(1.0, -phi);
    let ys: Vec<f64> = curve.points.iter().map(|p| (p * rot).im).collect();
    let mut sorted = ys.clone();
    sorted.sort_by(f64::total_cmp);
    let (ymin, ymax) = (sorted[0], sorted[sorted.len() - 1]);

    let n_levels = 2 * curve.len();
    let mut levels_tested = 0;
    for k in 0..n_levels {
        let level = ymin + (k as f64 + 0.5) / n_levels as f64 * (ymax - ymin);
        let pos = sorted.partition_point(|y| *y < level);
        let near = |idx: usize| sorted.get(idx).is_some_and(|y| (y - level).abs() < LEVEL_CLEARANCE);
        if near(pos) || (pos > 0 && near(pos - 1)) {
            continue;
        }
        levels_tested += 1;
        let crossings = (0..ys.len())
            .filter(|&i| {
                let a = ys[i] - level;
                let b = ys[(i + 1) % ys.len()] - level;
                (a < 0.0) != (b < 0.0)
            })
            .count();
        if crossings != 0 && crossings != 2 {
            return Ok(DirectionalConvexity {
                convex: false,
                witness_level: Some(level),
                witness_crossings: Some(crossings),
                levels_tested,
            });
        }
    }
    Ok(DirectionalConvexity {
        convex: true,
        witness_level: None,
        witness_crossings: None,
        levels_tested,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn polar_curve(m: usize, rho: impl Fn(f64) -> f64) -> BoundaryCurve {
        let pts = (0..m)
            .map(|j| {
                let t = TAU * j as f64 / m as f64;
                C64::from_polar(rho(t), t)
            })
            .collect();
        BoundaryCurve::from_points(0.5, pts)
    }

    fn series_z(cap: usize, m: usize) -> BiSeries {
        BiSeries::monomial(cap, m, 0, c(1.0, 0.0)).unwrap()
    }

    #[test]
    fn circle_and_ellipse_samples() {
        let circle = boundary_curve(&series_z(8, 1), 0.5, 1024).unwrap();
        assert_eq!(circle.len(), 1024);
        assert!(circle.points.iter().all(|p| (p.norm() - 0.5).abs() < 1e-15));

        let ellipse_u = series_z(8, 1)
            .add(&BiSeries::monomial(8, 0, 1, c(0.3, 0.0)).unwrap())
            .unwrap();
        let r = 0.5;
        let ellipse = boundary_curve(&ellipse_u, r, 256).unwrap();
        let max_re = ellipse.points.iter().map(|p| p.re).fold(f64::MIN, f64::max);
        let max_im = ellipse.points.iter().map(|p| p.im).fold(f64::MIN, f64::max);
        assert!((max_re - 1.3 * r).abs() < 1e-14);
        assert!((max_im - 0.7 * r).abs() < 1e-14);
    }

    #[test]
    fn constant_curve_is_degenerate() {
        let u = BiSeries::constant(8, c(0.4, 0.1)).unwrap();
        let curve = boundary_curve(&u, 0.5, 64).unwrap();
        assert!(curve.is_degenerate());
        assert!(matches!(is_simple(&curve), Err(Error::Degenerate(_))));
    }

    #[test]
    fn simplicity() {
        let circle = boundary_curve(&series_z(8, 1), 0.5, 1024).unwrap();
        assert_eq!(
            is_simple(&circle).unwrap(),
            Simplicity {
                simple: true,
                crossing: None
            }
        );
        let double = boundary_curve(&series_z(8, 2), 0.5, 1024).unwrap();
        assert!(!is_simple(&double).unwrap().simple);
    }

    #[test]
    fn figure_eight_crossing() {
        // Lemniscate of Gerono traversed once: crosses itself at the origin.
        let m = 128;
        let pts: Vec<C64> = (0..m)
            .map(|j| {
                let t = TAU * (j as f64 + 0.5) / m as f64;
                c(t.cos(), t.sin() * t.cos())
            })
            .collect();
        let curve = BoundaryCurve::from_points(0.5, pts);
        let s = is_simple(&curve).unwrap();
        assert!(!s.simple);
        // The branches pass through the origin near t = π/2 and t = 3π/2.
        assert_eq!(s.crossing, Some((31, 95)));
    }

    #[test]
    fn winding_numbers() {
        let circle = boundary_curve(&series_z(8, 1), 0.5, 256).unwrap();
        assert_eq!(winding_number(&circle.points, c(0.1, 0.0)).unwrap(), 1);
        assert_eq!(winding_number(&circle.points, c(0.7, 0.0)).unwrap(), 0);
        let double = boundary_curve(&series_z(8, 2), 0.5, 256).unwrap();
        assert_eq!(winding_number(&double.points, c(0.0, 0.0)).unwrap(), 2);
        let reversed: Vec<C64> = circle.points.iter().rev().copied().collect();
        assert_eq!(winding_number(&reversed, c(0.0, 0.0)).unwrap(), -1);
    }

    #[test]
    fn directional_convexity_of_ellipse_and_peanut() {
        let ellipse = polar_curve(512, |t| 1.0 / (1.0 - 0.6 * t.cos().powi(2)).sqrt());
        for phi in [0.0, 0.7, 1.9, 3.0] {
            assert!(directional_convexity(&ellipse, phi).unwrap().convex);
        }

        let peanut = polar_curve(512, |t| 1.0 + 0.7 * (2.0 * t).cos());
        let horiz = directional_convexity(&peanut, 0.0).unwrap();
        assert!(!horiz.convex);
        assert_eq!(horiz.witness_crossings, Some(4));
        let level = horiz.witness_level.unwrap();
        assert!(level.abs() > 0.3 && level.abs() < 0.9);

        for phi in [0.0, 0.4, 1.2, std::f64::consts::FRAC_PI_2] {
            let a = directional_convexity(&peanut, phi).unwrap().convex;
            let b = directional_convexity(&peanut, phi + PI).unwrap().convex;
            assert_eq!(a, b);
        }
    }

    #[test]
    fn directional_convexity_needs_simple_curve() {
        let double = boundary_curve(&series_z(8, 2), 0.5, 256).unwrap();
        assert!(matches!(
            directional_convexity(&double, 0.0),
            Err(Error::Precondition(_))
        ));
    }
}
