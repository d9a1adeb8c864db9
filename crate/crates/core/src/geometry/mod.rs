//! Starlikeness and convexity indicators on circles `|z| = r`.
//!
//! For `u` evaluated along `t ↦ u(re^{it})`:
//!
//! ```text
//! ∂_t u    = i·𝓛[u]
//! −∂²_t u  = 𝔏[u] − 2|z|² u_{zz̄} + z² u_{zz} + z̄² u_{z̄z̄}
//! ∂_t arg u     = Re(𝓛[u] / u)                      (starlike indicator)
//! ∂_t arg ∂_t u = Re((−∂²_t u) / 𝓛[u])              (convex indicator)
//! ```

mod curve;
mod scan;

pub use curve::{
    boundary_curve, directional_convexity, is_simple, winding_number, BoundaryCurve, DirectionalConvexity, Simplicity,
};
pub use scan::{
    circle_minima, convexity_radius, goodman_saff_scan, scan, univalence_scan, CircleMinimum, GoodmanSaffHypotheses,
    GoodmanSaffReport, GoodmanSaffVerdict, Quantity, QuantityField, RadiusUnivalence, ScanReport, ScanVerdict,
    UnivalenceReport, UnivalenceVerdict, GOODMAN_SAFF_RADIUS, UNIVALENCE_PROBES,
};

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::mappings::{LphgSpec, SINGULAR_EPS};
use crate::wirtinger::{BiSeries, ComplexPoint};

/// Default tolerance for "≥ 0" verdicts.
pub const DEFAULT_TOL: f64 = 1e-9;

const I: C64 = C64::new(0.0, 1.0);

/// `Re(𝓛[u](z) / u(z))`, the angular speed of `arg u(re^{it})`.
pub fn starlike_indicator(u: &BiSeries, z: ComplexPoint) -> Result<f64> {
    z.ensure_punctured_disk()?;
    let value = u.eval(z)?;
    if value.norm() <= SINGULAR_EPS {
        return Err(Error::singular(z.value(), "u"));
    }
    Ok((u.op_l().eval(z)? / value).re)
}

/// `∂_t u(re^{it}) = i·𝓛[u](z)`.
pub fn tangential_derivative(u: &BiSeries, z: ComplexPoint) -> Result<C64> {
    Ok(I * u.op_l().eval(z)?)
}

/// The series `𝔏[u] − 2|z|² u_{zz̄} + z² u_{zz} + z̄² u_{z̄z̄}`, equal to `−∂²_t u`.
///
/// Each multiplication by `|z|²`, `z²` or `z̄²` undoes a differentiation, so
/// the shifts never leave the cap.
pub fn tangential_second_series(u: &BiSeries) -> BiSeries {
    let two = C64::new(2.0, 0.0);
    let mixed = u.partial_z().partial_zbar().shifted(1, 1).scale(two);
    let zz = u.partial_z().partial_z().shifted(2, 0);
    let bb = u.partial_zbar().partial_zbar().shifted(0, 2);
    u.op_frak_l()
        .sub(&mixed)
        .and_then(|s| s.add(&zz))
        .and_then(|s| s.add(&bb))
        .expect("all terms share the cap of u")
}

/// `−∂²_t u(re^{it})` evaluated at `z`; negate for the second derivative itself.
pub fn tangential_second_derivative(u: &BiSeries, z: ComplexPoint) -> Result<C64> {
    tangential_second_series(u).eval(z)
}

/// `Re(−∂²_t u / 𝓛[u])`, the angular speed of the tangent direction of `u(re^{it})`.
pub fn convex_indicator(u: &BiSeries, z: ComplexPoint) -> Result<f64> {
    z.ensure_punctured_disk()?;
    let lu = u.op_l().eval(z)?;
    if lu.norm() <= SINGULAR_EPS {
        return Err(Error::singular(z.value(), "𝓛[u]"));
    }
    Ok((tangential_second_derivative(u, z)? / lu).re)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndicatorKind {
    Starlike,
    Convex,
}

/// `|indicator(log F) − indicator(log G)|` at `z` under the hypotheses that
/// make the two indicators equal pointwise.
pub fn indicator_equality_gap(spec: &LphgSpec, kind: IndicatorKind, z: ComplexPoint) -> Result<f64> {
    z.ensure_punctured_disk()?;
    let w = z.value();
    let weight = spec.weight(w.norm_sqr());
    if weight.norm() <= SINGULAR_EPS {
        return Err(Error::singular(w, "B(z)"));
    }
    let log_f = spec.assemble_log_f()?;
    let log_g = spec.log_g().to_series();
    match kind {
        IndicatorKind::Starlike => {
            if !spec.has_trivial_factors() {
                return Err(Error::Precondition(
                    "the starlike equality needs log f = log h = 0".into(),
                ));
            }
            if log_g.eval(z)?.norm() <= SINGULAR_EPS {
                return Err(Error::singular(w, "log G"));
            }
            Ok((starlike_indicator(&log_f, z)? - starlike_indicator(&log_g, z)?).abs())
        }
        IndicatorKind::Convex => {
            if !spec.has_constant_factors() {
                return Err(Error::Precondition("the convex equality needs constant f and h".into()));
            }
            if log_g.op_l().eval(z)?.norm() <= SINGULAR_EPS {
                return Err(Error::singular(w, "𝓛[log G]"));
            }
            Ok((convex_indicator(&log_f, z)? - convex_indicator(&log_g, z)?).abs())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wirtinger::{central_diff, AnalyticSeries};

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn pt(re: f64, im: f64) -> ComplexPoint {
        ComplexPoint::new(re, im).unwrap()
    }

    fn affine(cap: usize, k: f64) -> BiSeries {
        BiSeries::monomial(cap, 1, 0, c(1.0, 0.0))
            .unwrap()
            .add(&BiSeries::monomial(cap, 0, 1, c(k, 0.0)).unwrap())
            .unwrap()
    }

    #[test]
    fn starlike_values() {
        let z = BiSeries::monomial(8, 1, 0, c(1.0, 0.0)).unwrap();
        let z2 = BiSeries::monomial(8, 2, 0, c(1.0, 0.0)).unwrap();
        for p in [pt(0.3, 0.1), pt(-0.7, 0.2)] {
            assert!((starlike_indicator(&z, p).unwrap() - 1.0).abs() < 1e-15);
            assert!((starlike_indicator(&z2, p).unwrap() - 2.0).abs() < 1e-15);
        }
        assert!(starlike_indicator(&z, pt(0.0, 0.0)).is_err());
    }

    #[test]
    fn starlike_matches_argument_speed() {
        let u = affine(8, 0.3);
        let (r, t) = (0.5, std::f64::consts::FRAC_PI_2);
        let arg_at = |s: f64| {
            let v = u.eval(ComplexPoint::from_polar(r, s).unwrap()).unwrap();
            c(v.im.atan2(v.re), 0.0)
        };
        let fd = central_diff(arg_at, t, 1e-4, 2).re;
        let z = ComplexPoint::from_polar(r, t).unwrap();
        let sym = starlike_indicator(&u, z).unwrap();
        assert!((sym - fd).abs() < 1e-6);
        // (z − 0.3 z̄)/(z + 0.3 z̄) at z = i/2 is 1.3/0.7.
        assert!((sym - 13.0 / 7.0).abs() < 1e-14);
    }

    #[test]
    fn tangential_values() {
        let z = BiSeries::monomial(8, 1, 0, c(1.0, 0.0)).unwrap();
        let modsq = BiSeries::modulus_power(8, 1).unwrap();
        let p = ComplexPoint::from_polar(0.4, 1.1).unwrap();
        assert!((tangential_derivative(&z, p).unwrap() - c(0.0, 1.0) * p.value()).norm() < 1e-15);
        assert_eq!(tangential_derivative(&modsq, p).unwrap(), c(0.0, 0.0));
        assert!((tangential_second_derivative(&z, p).unwrap() - p.value()).norm() < 1e-15);
        assert!(tangential_second_derivative(&modsq, p).unwrap().norm() < 1e-15);
    }

    #[test]
    fn second_series_is_l_squared() {
        let u = BiSeries::from_fn(10, |m, n| c(m as f64 - 2.0 * n as f64, (m * n) as f64 + 1.0)).unwrap();
        assert_eq!(tangential_second_series(&u), u.op_l_power(2).unwrap());
    }

    #[test]
    fn convex_values() {
        let z = BiSeries::monomial(8, 1, 0, c(1.0, 0.0)).unwrap();
        assert!((convex_indicator(&z, pt(0.2, 0.6)).unwrap() - 1.0).abs() < 1e-15);

        let k = 0.4;
        let u = affine(8, k);
        for t in [0.0, 0.4, 1.3, 2.9, 4.4] {
            let p = ComplexPoint::from_polar(0.6, t).unwrap();
            let expected = (1.0 - k * k) / (c(0.0, 2.0 * t).exp() - k).norm_sqr();
            assert!((convex_indicator(&u, p).unwrap() - expected).abs() < 1e-13);
        }

        let modsq = BiSeries::modulus_power(8, 1).unwrap();
        assert!(matches!(
            convex_indicator(&modsq, pt(0.3, 0.3)),
            Err(Error::Singular { .. })
        ));
    }

    #[test]
    fn koebe_is_not_convex_past_its_radius() {
        let cap = 32;
        let koebe = AnalyticSeries::new((0..=cap).map(|n| c(n as f64, 0.0)).collect(), cap).unwrap();
        let u = BiSeries::embed(&koebe);
        let p = ComplexPoint::from_polar(0.5, std::f64::consts::PI).unwrap();
        assert!(convex_indicator(&u, p).unwrap() < 0.0);
    }

    #[test]
    fn equality_gap_trivial_instances() {
        use crate::mappings::HarmonicLogMap;
        let cap = 8;
        let log_g = HarmonicLogMap::analytic(AnalyticSeries::new(vec![c(0.0, 0.0), c(1.0, 0.0)], cap).unwrap());
        let spec = LphgSpec::pure(log_g, vec![c(1.0, 0.0), c(0.5, 0.0)]).unwrap();
        let z = pt(0.3, -0.2);
        assert!(indicator_equality_gap(&spec, IndicatorKind::Starlike, z).unwrap() < 1e-15);
        assert!(indicator_equality_gap(&spec, IndicatorKind::Convex, z).unwrap() < 1e-15);
    }
}
