//! Seeded generators for test instances.
//!
//! Integer-valued coefficients keep every product and sum exactly
//! representable, which is what the coefficient-exact identity checks need.

use std::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::mappings::{HarmonicLogMap, LphgSpec, PolyharmonicSpec};
use crate::wirtinger::{AnalyticSeries, BiSeries, ComplexPoint, C64};

pub type SeededRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A Gaussian integer with both parts in `[-bound, bound]`.
pub fn gaussian_integer(rng: &mut impl Rng, bound: i32) -> C64 {
    C64::new(
        rng.gen_range(-bound..=bound) as f64,
        rng.gen_range(-bound..=bound) as f64,
    )
}

/// A complex number drawn uniformly from the disk of radius `radius`.
pub fn disk_sample(rng: &mut impl Rng, radius: f64) -> C64 {
    let r = radius * rng.gen::<f64>().sqrt();
    C64::from_polar(r, rng.gen_range(0.0..TAU))
}

/// Bi-series with Gaussian-integer coefficients on `0 ≤ m, n ≤ max_index`.
pub fn integer_bi_series(rng: &mut impl Rng, cap: usize, max_index: usize, bound: i32) -> Result<BiSeries> {
    let top = max_index.min(cap);
    BiSeries::from_fn(cap, |m, n| {
        if m <= top && n <= top {
            gaussian_integer(rng, bound)
        } else {
            C64::new(0.0, 0.0)
        }
    })
}

/// Bi-series with coefficients of size about `decay^(m+n)` on `0 ≤ m, n ≤ max_index`.
pub fn decaying_bi_series(rng: &mut impl Rng, cap: usize, max_index: usize, decay: f64) -> Result<BiSeries> {
    let top = max_index.min(cap);
    BiSeries::from_fn(cap, |m, n| {
        if m <= top && n <= top {
            disk_sample(rng, 1.0) * decay.powi((m + n) as i32)
        } else {
            C64::new(0.0, 0.0)
        }
    })
}

pub fn integer_analytic(rng: &mut impl Rng, cap: usize, degree: usize, bound: i32) -> Result<AnalyticSeries> {
    let coeffs = (0..=degree.min(cap)).map(|_| gaussian_integer(rng, bound)).collect();
    AnalyticSeries::new(coeffs, cap)
}

/// Analytic series with `|c_n| ≤ decay^n`.
pub fn decaying_analytic(rng: &mut impl Rng, cap: usize, degree: usize, decay: f64) -> Result<AnalyticSeries> {
    let coeffs = (0..=degree.min(cap))
        .map(|n| disk_sample(rng, 1.0) * decay.powi(n as i32))
        .collect();
    AnalyticSeries::new(coeffs, cap)
}

pub fn integer_harmonic(rng: &mut impl Rng, cap: usize, degree: usize, bound: i32) -> Result<HarmonicLogMap> {
    HarmonicLogMap::new(
        integer_analytic(rng, cap, degree, bound)?,
        integer_analytic(rng, cap, degree, bound)?,
    )
}

pub fn decaying_harmonic(rng: &mut impl Rng, cap: usize, degree: usize, decay: f64) -> Result<HarmonicLogMap> {
    HarmonicLogMap::new(
        decaying_analytic(rng, cap, degree, decay)?,
        decaying_analytic(rng, cap, degree, decay)?,
    )
}

/// Polyharmonic spec with `p` integer-coefficient parts of degree `degree`.
pub fn integer_polyharmonic(
    rng: &mut impl Rng,
    cap: usize,
    p: usize,
    degree: usize,
    bound: i32,
) -> Result<PolyharmonicSpec> {
    let parts = (0..p)
        .map(|_| integer_harmonic(rng, cap, degree, bound))
        .collect::<Result<Vec<_>>>()?;
    PolyharmonicSpec::new(parts)
}

/// Shape of a random class member.
#[derive(Clone, Copy, Debug)]
pub struct LphgShape {
    pub cap: usize,
    pub p: usize,
    pub degree: usize,
    pub decay: f64,
    pub factors: FactorKind,
    pub weights: WeightKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorKind {
    /// `log f = log h = 0`.
    Trivial,
    /// Constant `log f`, `log h`.
    Constant,
    General,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightKind {
    Complex,
    /// Real weights in `[0, 1]` with a positive first entry.
    NonNegative,
    /// `(0, …, 0, 1)`.
    TopOnly,
}

impl LphgShape {
    pub fn new(cap: usize, p: usize, degree: usize) -> Self {
        LphgShape {
            cap,
            p,
            degree,
            decay: 0.8,
            factors: FactorKind::General,
            weights: WeightKind::Complex,
        }
    }

    pub fn factors(mut self, factors: FactorKind) -> Self {
        self.factors = factors;
        self
    }

    pub fn weights(mut self, weights: WeightKind) -> Self {
        self.weights = weights;
        self
    }
}

pub fn random_lphg(rng: &mut impl Rng, shape: LphgShape) -> Result<LphgSpec> {
    let LphgShape {
        cap, p, degree, decay, ..
    } = shape;
    let (log_f, log_h) = match shape.factors {
        FactorKind::Trivial => (AnalyticSeries::zero(cap), AnalyticSeries::zero(cap)),
        FactorKind::Constant => (
            AnalyticSeries::constant(disk_sample(rng, 1.0), cap)?,
            AnalyticSeries::constant(disk_sample(rng, 1.0), cap)?,
        ),
        FactorKind::General => (
            decaying_analytic(rng, cap, degree, decay)?,
            decaying_analytic(rng, cap, degree, decay)?,
        ),
    };
    let log_g = decaying_harmonic(rng, cap, degree, decay)?;
    let lambdas = (0..p)
        .map(|k| match shape.weights {
            WeightKind::Complex => disk_sample(rng, 1.0),
            WeightKind::NonNegative if k == 0 => C64::new(rng.gen_range(0.1..1.0), 0.0),
            WeightKind::NonNegative => C64::new(rng.gen_range(0.0..1.0), 0.0),
            WeightKind::TopOnly => C64::new(if k + 1 == p { 1.0 } else { 0.0 }, 0.0),
        })
        .collect();
    LphgSpec::new(log_f, log_h, log_g, lambdas)
}

/// A point with modulus uniform in `[r_min, r_max]` and uniform argument.
pub fn random_point(rng: &mut impl Rng, r_min: f64, r_max: f64) -> ComplexPoint {
    let r = rng.gen_range(r_min..=r_max);
    ComplexPoint::from_polar(r, rng.gen_range(0.0..TAU)).expect("radius below one")
}
