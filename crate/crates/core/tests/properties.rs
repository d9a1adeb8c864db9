use proptest::prelude::*;

use logpoly::geometry::{convex_indicator, convexity_radius, starlike_indicator};
use logpoly::grid::ScanGrid;
use logpoly::random::{self, seeded, LphgShape};
use logpoly::specfile::{parse_document, MappingDocument, MappingSpecFile};
use logpoly::wirtinger::{fd_wirtinger, FdConfig};
use logpoly::{BiSeries, ComplexPoint, C64};

const CAP: usize = 16;

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn same(a: &BiSeries, b: &BiSeries) -> bool {
    a.coeffs() == b.coeffs()
}

fn point() -> impl Strategy<Value = ComplexPoint> {
    (0.05f64..0.9, 0.0f64..std::f64::consts::TAU).prop_map(|(r, t)| ComplexPoint::from_polar(r, t).unwrap())
}

fn integer_series(max_index: usize) -> impl Strategy<Value = BiSeries> {
    any::<u64>().prop_map(move |seed| random::integer_bi_series(&mut seeded(seed), CAP, max_index, 9).unwrap())
}

fn gaussian() -> impl Strategy<Value = C64> {
    (-5i32..=5, -5i32..=5).prop_map(|(a, b)| c(a as f64, b as f64))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn operators_are_linear(u in integer_series(CAP), v in integer_series(CAP), a in gaussian(), b in gaussian()) {
        let combo = u.scale(a).add(&v.scale(b)).unwrap();
        let l = u.op_l().scale(a).add(&v.op_l().scale(b)).unwrap();
        let fl = u.op_frak_l().scale(a).add(&v.op_frak_l().scale(b)).unwrap();
        prop_assert!(same(&combo.op_l(), &l));
        prop_assert!(same(&combo.op_frak_l(), &fl));
    }

    #[test]
    fn l_is_a_derivation(u in integer_series(CAP / 2), v in integer_series(CAP / 2)) {
        let lhs = u.mul(&v).unwrap().op_l();
        let rhs = u.op_l().mul(&v).unwrap().add(&u.mul(&v.op_l()).unwrap()).unwrap();
        prop_assert!(same(&lhs, &rhs));
    }

    #[test]
    fn monomials_are_eigenvectors(m in 0..=CAP, n in 0..=CAP, k in gaussian()) {
        let u = BiSeries::monomial(CAP, m, n, k).unwrap();
        prop_assert!(same(&u.op_l(), &u.scale(c(m as f64 - n as f64, 0.0))));
        prop_assert!(same(&u.op_frak_l(), &u.scale(c((m + n) as f64, 0.0))));
    }

    #[test]
    fn l_annihilates_radial_series(k in 0..=CAP / 2, a in gaussian()) {
        let u = BiSeries::modulus_power(CAP, k).unwrap().scale(a);
        prop_assert!(u.op_l().is_zero());
    }

    #[test]
    fn laplacian_commutes_with_l(u in integer_series(CAP)) {
        prop_assert!(same(&u.op_l().laplacian(), &u.laplacian().op_l()));
    }

    #[test]
    fn wirtinger_derivatives_match_finite_differences(seed in any::<u64>(), z in point()) {
        let u = random::decaying_bi_series(&mut seeded(seed), CAP, CAP, 0.7).unwrap();
        let (fz, fzb) = fd_wirtinger(|w| u.eval(ComplexPoint::from_complex(w).unwrap()).unwrap(), z, &FdConfig::default()).unwrap();
        let scale = 1.0 + u.coeffs().iter().map(|c| c.norm()).sum::<f64>() * CAP as f64;
        prop_assert!((u.partial_z().eval(z).unwrap() - fz).norm() < 1e-7 * scale);
        prop_assert!((u.partial_zbar().eval(z).unwrap() - fzb).norm() < 1e-7 * scale);
    }

    #[test]
    fn class_members_are_polyharmonic(seed in any::<u64>(), p in 1usize..=4) {
        let spec = random::random_lphg(&mut seeded(seed), LphgShape::new(CAP * 2, p, CAP)).unwrap();
        let log_f = spec.assemble_log_f().unwrap();
        prop_assert!(log_f.laplacian_power(p).max_abs() < 1e-14);
    }

    #[test]
    fn indicators_are_scale_invariant(seed in any::<u64>(), z in point(), k in gaussian()) {
        prop_assume!(k.norm() > 0.0);
        let u = random::decaying_bi_series(&mut seeded(seed), CAP, CAP, 0.7).unwrap();
        prop_assume!(u.eval(z).unwrap().norm() > 1e-2 && u.op_l().eval(z).unwrap().norm() > 1e-2);
        let v = u.scale(k);
        let star = starlike_indicator(&u, z).unwrap();
        let convex = convex_indicator(&u, z).unwrap();
        prop_assert!((starlike_indicator(&v, z).unwrap() - star).abs() <= 1e-12 * star.abs().max(1.0));
        prop_assert!((convex_indicator(&v, z).unwrap() - convex).abs() <= 1e-12 * convex.abs().max(1.0));
    }

    #[test]
    fn indicators_rotate_with_the_disk(seed in any::<u64>(), z in point(), theta in 0.0f64..std::f64::consts::TAU) {
        let u = random::decaying_bi_series(&mut seeded(seed), CAP, CAP, 0.7).unwrap();
        let turned = ComplexPoint::from_complex(z.value() * C64::from_polar(1.0, theta)).unwrap();
        prop_assume!(u.eval(turned).unwrap().norm() > 1e-2 && u.op_l().eval(turned).unwrap().norm() > 1e-2);
        let v = u.rotated(theta);
        let star = starlike_indicator(&u, turned).unwrap();
        let convex = convex_indicator(&u, turned).unwrap();
        prop_assert!((starlike_indicator(&v, z).unwrap() - star).abs() <= 1e-12 * star.abs().max(1.0));
        prop_assert!((convex_indicator(&v, z).unwrap() - convex).abs() <= 1e-12 * convex.abs().max(1.0));
    }

    #[test]
    fn class_specs_round_trip(seed in any::<u64>(), p in 1usize..=4) {
        let spec = random::random_lphg(&mut seeded(seed), LphgShape::new(CAP * 2, p, CAP)).unwrap();
        let doc = MappingDocument::Class(spec.clone());
        let text = MappingSpecFile::from_document(&doc).to_json();
        let back = parse_document(&text).unwrap();
        prop_assert_eq!(back.class(), Some(&spec));
        prop_assert_eq!(MappingSpecFile::from_document(&back).to_json(), text);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn finer_angles_never_enlarge_the_convexity_radius(seed in any::<u64>()) {
        let u = random::decaying_bi_series(&mut seeded(seed), CAP, CAP, 0.6).unwrap();
        let coarse = ScanGrid::uniform(0.05, 0.95, 0.05, 64).unwrap();
        let fine = ScanGrid::uniform(0.05, 0.95, 0.05, 256).unwrap();
        match (convexity_radius(&u, &coarse, 1e-9), convexity_radius(&u, &fine, 1e-9)) {
            (Ok(rc), Ok(rf)) => prop_assert!(rf <= rc),
            (Err(_), _) | (_, Err(_)) => {}
        }
    }
}
