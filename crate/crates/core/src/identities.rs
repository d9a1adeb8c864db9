//! Identity suites: every algebraic identity of the operator calculus and
//! every closed-form formula checked against an independent route.

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{convex_indicator, starlike_indicator, tangential_second_series};
use crate::mappings::{jacobian_power_case, LphgSpec, PolyharmonicSpec, PreparedLphg};
use crate::random::{self, FactorKind, LphgShape, SeededRng, WeightKind};
use crate::wirtinger::{central_diff, central_second_diff, fd_wirtinger, BiSeries, ComplexPoint, FdConfig, C64};

pub const JACOBIAN_TOL: f64 = 1e-9;
pub const RATIO_TOL: f64 = 1e-10;
pub const INDICATOR_TOL: f64 = 1e-10;
pub const TANGENT_TOL: f64 = 1e-7;
pub const SECOND_TANGENT_TOL: f64 = 1e-5;
pub const WIRTINGER_TOL: f64 = 1e-7;
pub const POLYHARMONIC_TOL: f64 = 1e-14;

/// Step used for the second-difference oracle in `t`.
const SECOND_FD_STEP: f64 = 1e-3;
/// Points closer than this to a zero of a denominator are not admissible.
const ADMISSIBLE: f64 = 1e-2;
const R_MIN: f64 = 0.05;
const R_MAX: f64 = 0.95;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ErrorKind {
    /// Coefficient grids must agree bit for bit; the error is the largest entry difference.
    Exact,
    Absolute,
    Relative,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentityResult {
    pub name: String,
    pub kind: ErrorKind,
    pub max_error: f64,
    pub tolerance: f64,
    pub samples: usize,
    pub skipped: usize,
    pub worst: Option<String>,
    pub passed: bool,
}

#[derive(Clone, Debug, Default)]
struct Tally {
    max_error: f64,
    worst: Option<String>,
    samples: usize,
    skipped: usize,
}

impl Tally {
    fn record(&mut self, error: f64, at: impl FnOnce() -> String) {
        self.samples += 1;
        if error > self.max_error || error.is_nan() || (self.worst.is_none() && error > 0.0) {
            self.max_error = if error.is_nan() { f64::INFINITY } else { error };
            self.worst = Some(at());
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.samples += other.samples;
        self.skipped += other.skipped;
        if other.max_error > self.max_error {
            self.max_error = other.max_error;
            self.worst = other.worst;
        }
        self
    }

    fn finish(self, name: &str, kind: ErrorKind, tolerance: f64) -> IdentityResult {
        let passed = self.samples > 0
            && match kind {
                ErrorKind::Exact => self.max_error == 0.0,
                _ => self.max_error <= tolerance,
            };
        IdentityResult {
            name: name.to_string(),
            kind,
            max_error: self.max_error,
            tolerance,
            samples: self.samples,
            skipped: self.skipped,
            worst: self.worst,
            passed,
        }
    }
}

fn merge_all(tallies: Vec<Tally>) -> Tally {
    tallies.into_iter().fold(Tally::default(), Tally::merge)
}

fn grid_gap(a: &BiSeries, b: &BiSeries) -> Result<f64> {
    Ok(a.sub(b)?.max_abs())
}

fn relative(error: f64, scale: f64) -> f64 {
    if scale > 0.0 {
        error / scale
    } else {
        error
    }
}

fn describe(z: ComplexPoint) -> String {
    format!("z = {:.6}{:+.6}i", z.re(), z.im())
}

/// `Σ |c_{m,n}| · weight(m, n) · r^{m+n}`: a magnitude bound used to scale errors.
fn weighted_magnitude(u: &BiSeries, r: f64, weight: impl Fn(usize, usize) -> f64) -> f64 {
    u.nonzero()
        .map(|(m, n, c)| c.norm() * weight(m, n) * r.powi((m + n) as i32))
        .sum()
}

/// Linearity of `𝓛` and `𝔏` on Gaussian-integer series and weights.
pub fn operator_linearity(rng: &mut SeededRng, cap: usize, count: usize) -> Result<IdentityResult> {
    let mut tally = Tally::default();
    for trial in 0..count {
        let u = random::integer_bi_series(rng, cap, cap, 9)?;
        let v = random::integer_bi_series(rng, cap, cap, 9)?;
        let alpha = random::gaussian_integer(rng, 5);
        let beta = random::gaussian_integer(rng, 5);
        let combo = u.scale(alpha).add(&v.scale(beta))?;
        let gap_l = grid_gap(&combo.op_l(), &u.op_l().scale(alpha).add(&v.op_l().scale(beta))?)?;
        let gap_fl = grid_gap(
            &combo.op_frak_l(),
            &u.op_frak_l().scale(alpha).add(&v.op_frak_l().scale(beta))?,
        )?;
        tally.record(gap_l.max(gap_fl), || format!("trial {trial}"));
    }
    Ok(tally.finish("operator_linearity", ErrorKind::Exact, 0.0))
}

/// `𝓛[uv] = 𝓛[u]v + u𝓛[v]` for pairs whose product fits the cap.
pub fn product_rule(rng: &mut SeededRng, cap: usize, count: usize) -> Result<IdentityResult> {
    let pairs = (0..count)
        .map(|_| {
            Ok((
                random::integer_bi_series(rng, cap, cap / 2, 9)?,
                random::integer_bi_series(rng, cap, cap / 2, 9)?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    let tallies = pairs
        .par_iter()
        .enumerate()
        .map(|(trial, (u, v))| {
            let lhs = u.mul(v)?.op_l();
            let rhs = u.op_l().mul(v)?.add(&u.mul(&v.op_l())?)?;
            let mut tally = Tally::default();
            tally.record(grid_gap(&lhs, &rhs)?, || format!("trial {trial}"));
            Ok(tally)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(merge_all(tallies).finish("product_rule", ErrorKind::Exact, 0.0))
}

/// `𝓛ⁿ[Σ |z|^{2(k-1)} G_k] = Σ |z|^{2(k-1)} 𝓛ⁿ[G_k]` for each `n` in `powers`.
pub fn distribution_law(
    rng: &mut SeededRng,
    cap: usize,
    count: usize,
    max_p: usize,
    max_degree: usize,
    powers: &[u32],
) -> Result<IdentityResult> {
    let mut tally = Tally::default();
    for trial in 0..count {
        let p = rng.gen_range(1..=max_p);
        let degree = rng.gen_range(1..=max_degree);
        let spec = random::integer_polyharmonic(rng, cap, p, degree, 9)?;
        let assembled = spec.assemble()?;
        for &n in powers {
            let lhs = assembled.op_l_power(n)?;
            let mut rhs = BiSeries::zeros(cap);
            for (k, part) in spec.parts().iter().enumerate() {
                let term = part.to_series().op_l_power(n)?;
                rhs = rhs.add(&BiSeries::modulus_power(cap, k)?.mul(&term)?)?;
            }
            tally.record(grid_gap(&lhs, &rhs)?, || format!("trial {trial}, p = {p}, n = {n}"));
        }
    }
    Ok(tally.finish("distribution_law", ErrorKind::Exact, 0.0))
}

/// `Δ^p log F = 0` for random class members of order `p`.
pub fn polyharmonicity(rng: &mut SeededRng, cap: usize, count: usize, max_p: usize) -> Result<IdentityResult> {
    let mut tally = Tally::default();
    for trial in 0..count {
        let p = rng.gen_range(1..=max_p);
        let spec = random::random_lphg(rng, LphgShape::new(cap, p, cap / 2))?;
        let residual = spec.assemble_log_f()?.laplacian_power(p).max_abs();
        tally.record(residual, || format!("trial {trial}, p = {p}"));
    }
    Ok(tally.finish("polyharmonicity", ErrorKind::Absolute, POLYHARMONIC_TOL))
}

/// Draws a point at which `accept` holds, counting rejections.
fn admissible_point(
    rng: &mut SeededRng,
    tally: &mut Tally,
    mut accept: impl FnMut(ComplexPoint) -> Result<bool>,
) -> Result<ComplexPoint> {
    for _ in 0..1000 {
        let z = random::random_point(rng, R_MIN, R_MAX);
        if accept(z)? {
            return Ok(z);
        }
        tally.skipped += 1;
    }
    Err(Error::Degenerate("no admissible point found in 1000 draws".into()))
}

fn log_g_clear(prep: &PreparedLphg, z: ComplexPoint) -> Result<bool> {
    Ok(prep.log_g_at(z)?.value.norm() >= ADMISSIBLE)
}

/// Closed-form Jacobian of `log F` against the direct `|u_z|² − |u_z̄|²`,
/// relative to `|u_z|² + |u_z̄|²`.
pub fn jacobian_closed_form(rng: &mut SeededRng, cap: usize, count: usize) -> Result<IdentityResult> {
    let mut tally = Tally::default();
    for trial in 0..count {
        let p = rng.gen_range(1..=4);
        let spec = random::random_lphg(rng, LphgShape::new(cap, p, 8))?;
        let prep = spec.prepare()?;
        let z = admissible_point(rng, &mut tally, |z| log_g_clear(&prep, z))?;
        let gap = (prep.jacobian_closed(z)? - prep.jacobian_direct(z)?).abs();
        let err = relative(gap, prep.jacobian_scale(z)?);
        tally.record(err, || format!("trial {trial}, p = {p}, {}", describe(z)));
    }
    Ok(tally.finish("jacobian_closed_form", ErrorKind::Relative, JACOBIAN_TOL))
}

/// The `F = G^{|z|^{2(p-1)}}` Jacobian formula against the direct Jacobian.
pub fn jacobian_power_family(
    rng: &mut SeededRng,
    cap: usize,
    orders: &[usize],
    points: usize,
) -> Result<IdentityResult> {
    let mut tally = Tally::default();
    for &p in orders {
        let shape = LphgShape::new(cap, p, 8)
            .factors(FactorKind::Trivial)
            .weights(WeightKind::TopOnly);
        let spec = random::random_lphg(rng, shape)?;
        let prep = spec.prepare()?;
        for _ in 0..points {
            let z = admissible_point(rng, &mut tally, |z| log_g_clear(&prep, z))?;
            let formula = jacobian_power_case(spec.log_g(), p, z)?;
            let gap = (formula - prep.jacobian_direct(z)?).abs();
            let err = relative(gap, prep.jacobian_scale(z)?);
            tally.record(err, || format!("p = {p}, {}", describe(z)));
        }
    }
    Ok(tally.finish("jacobian_power_family", ErrorKind::Relative, JACOBIAN_TOL))
}

fn ratio_admissible(spec: &LphgSpec, log_g: &BiSeries, z: ComplexPoint) -> Result<bool> {
    let w = z.value();
    Ok(spec.weight(w.norm_sqr()).norm() >= ADMISSIBLE && log_g.op_l().eval(z)?.norm() >= ADMISSIBLE)
}

/// `𝓛ⁿ[log F]/𝓛[log F] = 𝓛ⁿ[log G]/𝓛[log G]` for `F = Π G^{λ_k |z|^{2(k-1)}}`,
/// scaled by `max(1, |𝓛ⁿ[log G]/𝓛[log G]|)`.
pub fn ratio_identity(rng: &mut SeededRng, cap: usize, count: usize, powers: &[u32]) -> Result<IdentityResult> {
    let mut tally = Tally::default();
    for trial in 0..count {
        let p = rng.gen_range(1..=3);
        let shape = LphgShape::new(cap, p, 8).factors(FactorKind::Trivial);
        let spec = random::random_lphg(rng, shape)?;
        let prep = spec.prepare()?;
        let log_g = spec.log_g().to_series();
        let z = admissible_point(rng, &mut tally, |z| ratio_admissible(&spec, &log_g, z))?;
        let lg = log_g.op_l().eval(z)?;
        for &n in powers {
            let ratio = log_g.op_l_power(n)?.eval(z)? / lg;
            let err = prep.ratio_identity_gap(n, z)? / ratio.norm().max(1.0);
            tally.record(err, || format!("trial {trial}, n = {n}, {}", describe(z)));
        }
    }
    Ok(tally.finish("ratio_identity", ErrorKind::Relative, RATIO_TOL))
}

/// Symbolic `∂_t u` and `−∂²_t u` against finite differences in `t`, scaled
/// by `Σ |c_{m,n}| |m−n|^k r^{m+n}` for `k = 1, 2`.
fn tangential_tallies(u: &BiSeries, pts: &[ComplexPoint]) -> (Tally, Tally) {
    let cfg = FdConfig::default();
    let mut first = Tally::default();
    let mut second = Tally::default();
    let tangent = u.op_l();
    let second_series = tangential_second_series(u);
    for &z in pts {
        let (r, t) = (z.modulus(), z.arg());
        let along = |s: f64| u.eval_unchecked(C64::from_polar(r, s));
        let fd1 = central_diff(along, t, cfg.step, cfg.richardson_levels);
        let fd2 = central_second_diff(along, t, SECOND_FD_STEP, cfg.richardson_levels);
        let w = z.value();
        let sym1 = C64::new(0.0, 1.0) * tangent.eval_unchecked(w);
        let sym2 = second_series.eval_unchecked(w);
        let scale1 = weighted_magnitude(u, r, |m, n| (m as f64 - n as f64).abs());
        let scale2 = weighted_magnitude(u, r, |m, n| (m as f64 - n as f64).powi(2));
        first.record(relative((sym1 - fd1).norm(), scale1), || describe(z));
        second.record(relative((sym2 + fd2).norm(), scale2), || describe(z));
    }
    (first, second)
}

/// Symbolic `∂_t u` and `−∂²_t u` on circles against finite differences in `t`.
pub fn tangential_derivatives(
    rng: &mut SeededRng,
    cap: usize,
    mappings: usize,
    points: usize,
) -> Result<(IdentityResult, IdentityResult)> {
    let mut series = Vec::with_capacity(mappings);
    let mut samples = Vec::with_capacity(mappings);
    for _ in 0..mappings {
        let p = rng.gen_range(1..=3);
        let spec = random::random_lphg(rng, LphgShape::new(cap, p, 8))?;
        series.push(spec.assemble_log_f()?);
        samples.push(
            (0..points)
                .map(|_| random::random_point(rng, R_MIN, R_MAX))
                .collect::<Vec<_>>(),
        );
    }
    let tallies = series
        .par_iter()
        .zip(samples.par_iter())
        .enumerate()
        .map(|(trial, (u, pts))| {
            let (mut first, mut second) = tangential_tallies(u, pts);
            for tally in [&mut first, &mut second] {
                tally.worst = tally.worst.take().map(|w| format!("mapping {trial}, {w}"));
            }
            (first, second)
        })
        .collect::<Vec<_>>();
    let (first, second): (Vec<_>, Vec<_>) = tallies.into_iter().unzip();
    Ok((
        merge_all(first).finish("tangential_derivative", ErrorKind::Relative, TANGENT_TOL),
        merge_all(second).finish("tangential_second_derivative", ErrorKind::Relative, SECOND_TANGENT_TOL),
    ))
}

/// Symbolic Wirtinger derivatives against the finite-difference pair.
pub fn wirtinger_oracle(rng: &mut SeededRng, cap: usize, count: usize, points: usize) -> Result<IdentityResult> {
    let cfg = FdConfig::default();
    let mut tally = Tally::default();
    for trial in 0..count {
        let u = random::decaying_bi_series(rng, cap, cap / 2, 0.8)?;
        let (dz, dzb) = (u.partial_z(), u.partial_zbar());
        for _ in 0..points {
            let z = random::random_point(rng, 0.0, 0.9);
            let (fz, fzb) = fd_wirtinger(|w| u.eval_unchecked(w), z, &cfg)?;
            let r = z.modulus();
            let scale = weighted_magnitude(&u, r, |m, n| if m + n == 0 { 0.0 } else { (m + n) as f64 / r });
            let gap = (dz.eval(z)? - fz).norm().max((dzb.eval(z)? - fzb).norm());
            tally.record(relative(gap, scale), || format!("trial {trial}, {}", describe(z)));
        }
    }
    Ok(tally.finish("wirtinger_fd_oracle", ErrorKind::Relative, WIRTINGER_TOL))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndicatorLaw {
    /// `f = h = 1`: starlike indicators of `log F` and `log G` agree.
    Starlike,
    /// Constant `f`, `h`: convex indicators agree.
    Convex,
}

/// Pointwise equality of the indicators of `log F` and `log G`.
pub fn indicator_equality(rng: &mut SeededRng, cap: usize, count: usize, law: IndicatorLaw) -> Result<IdentityResult> {
    let mut tally = Tally::default();
    for trial in 0..count {
        let p = rng.gen_range(1..=4);
        let factors = match law {
            IndicatorLaw::Starlike => FactorKind::Trivial,
            IndicatorLaw::Convex => FactorKind::Constant,
        };
        let shape = LphgShape::new(cap, p, 8)
            .factors(factors)
            .weights(WeightKind::NonNegative);
        let spec = random::random_lphg(rng, shape)?;
        let log_f = spec.assemble_log_f()?;
        let log_g = spec.log_g().to_series();
        let denominator = match law {
            IndicatorLaw::Starlike => log_g.clone(),
            IndicatorLaw::Convex => log_g.op_l(),
        };
        let z = admissible_point(rng, &mut tally, |z| Ok(denominator.eval(z)?.norm() >= ADMISSIBLE))?;
        let gap = match law {
            IndicatorLaw::Starlike => starlike_indicator(&log_f, z)? - starlike_indicator(&log_g, z)?,
            IndicatorLaw::Convex => convex_indicator(&log_f, z)? - convex_indicator(&log_g, z)?,
        };
        tally.record(gap.abs(), || format!("trial {trial}, p = {p}, {}", describe(z)));
    }
    let name = match law {
        IndicatorLaw::Starlike => "starlike_equality",
        IndicatorLaw::Convex => "convex_equality",
    };
    Ok(tally.finish(name, ErrorKind::Absolute, INDICATOR_TOL))
}

/// The randomized suite; `trials` scales the number of instances per identity.
pub fn random_suite(seed: u64, trials: usize) -> Result<Vec<IdentityResult>> {
    if trials == 0 {
        return Err(Error::InvalidArgument("--trials must be at least 1".into()));
    }
    let cap = crate::wirtinger::DEFAULT_DEGREE_CAP;
    let mut rng = random::seeded(seed);
    let per_point = trials.div_ceil(10).max(1);
    let (tangent, second) = tangential_derivatives(&mut rng, cap, trials.div_ceil(4), 10)?;
    Ok(vec![
        operator_linearity(&mut rng, cap, trials)?,
        product_rule(&mut rng, cap, trials)?,
        distribution_law(&mut rng, cap, trials, 4, 16, &[1, 2, 3])?,
        polyharmonicity(&mut rng, cap, trials, 4)?,
        wirtinger_oracle(&mut rng, cap, trials.div_ceil(4), 10)?,
        jacobian_closed_form(&mut rng, cap, trials)?,
        jacobian_power_family(&mut rng, cap, &[2, 3, 4], per_point * 10)?,
        ratio_identity(&mut rng, cap, trials, &[2, 3])?,
        tangent,
        second,
        indicator_equality(&mut rng, cap, trials, IndicatorLaw::Starlike)?,
        indicator_equality(&mut rng, cap, trials, IndicatorLaw::Convex)?,
    ])
}

/// Identities that apply to one given class member, sampled at `points`
/// seeded points. Identities whose hypotheses the spec does not meet are
/// left out; singular points are counted as skipped.
pub fn spec_suite(spec: &LphgSpec, seed: u64, points: usize) -> Result<Vec<IdentityResult>> {
    let mut rng = random::seeded(seed);
    let prep = spec.prepare()?;
    let log_f = prep.log_f_series().clone();
    let log_g = spec.log_g().to_series();
    let p = spec.order();
    let pts: Vec<ComplexPoint> = (0..points)
        .map(|_| random::random_point(&mut rng, R_MIN, R_MAX))
        .collect();
    let mut out = Vec::new();

    let mut tally = Tally::default();
    tally.record(log_f.laplacian_power(p).max_abs(), || format!("p = {p}"));
    out.push(tally.finish("polyharmonicity", ErrorKind::Absolute, POLYHARMONIC_TOL));

    let mut closed = Tally::default();
    for &z in &pts {
        match prep.jacobian_closed(z) {
            Ok(j) => {
                let err = relative((j - prep.jacobian_direct(z)?).abs(), prep.jacobian_scale(z)?);
                closed.record(err, || describe(z));
            }
            Err(e) if e.is_singular() => closed.skipped += 1,
            Err(e) => return Err(e),
        }
    }
    out.push(closed.finish("jacobian_closed_form", ErrorKind::Relative, JACOBIAN_TOL));

    let top_only = p >= 2
        && spec.lambdas()[..p - 1].iter().all(|l| *l == C64::new(0.0, 0.0))
        && spec.lambdas()[p - 1] == C64::new(1.0, 0.0);
    if top_only && spec.has_trivial_factors() {
        let mut power = Tally::default();
        for &z in &pts {
            match jacobian_power_case(spec.log_g(), p, z) {
                Ok(j) => {
                    let err = relative((j - prep.jacobian_direct(z)?).abs(), prep.jacobian_scale(z)?);
                    power.record(err, || describe(z));
                }
                Err(e) if e.is_singular() => power.skipped += 1,
                Err(e) => return Err(e),
            }
        }
        out.push(power.finish("jacobian_power_family", ErrorKind::Relative, JACOBIAN_TOL));
    }

    if spec.has_trivial_factors() {
        let mut ratio = Tally::default();
        for &z in &pts {
            for n in [2, 3] {
                match prep.ratio_identity_gap(n, z) {
                    Ok(gap) => {
                        let lg = log_g.op_l().eval(z)?;
                        let scale = (log_g.op_l_power(n)?.eval(z)? / lg).norm().max(1.0);
                        ratio.record(gap / scale, || format!("n = {n}, {}", describe(z)));
                    }
                    Err(e) if e.is_singular() => ratio.skipped += 1,
                    Err(e) => return Err(e),
                }
            }
        }
        out.push(ratio.finish("ratio_identity", ErrorKind::Relative, RATIO_TOL));
    }

    let (first, second) = tangential_tallies(&log_f, &pts);
    out.push(first.finish("tangential_derivative", ErrorKind::Relative, TANGENT_TOL));
    out.push(second.finish("tangential_second_derivative", ErrorKind::Relative, SECOND_TANGENT_TOL));

    let laws = [
        (spec.has_trivial_factors(), IndicatorLaw::Starlike),
        (spec.has_constant_factors(), IndicatorLaw::Convex),
    ];
    for (applies, law) in laws {
        if !applies {
            continue;
        }
        let mut eq = Tally::default();
        for &z in &pts {
            let gap = match law {
                IndicatorLaw::Starlike => {
                    starlike_indicator(&log_f, z).and_then(|a| Ok(a - starlike_indicator(&log_g, z)?))
                }
                IndicatorLaw::Convex => convex_indicator(&log_f, z).and_then(|a| Ok(a - convex_indicator(&log_g, z)?)),
            };
            match gap {
                Ok(g) => eq.record(g.abs(), || describe(z)),
                Err(e) if e.is_singular() => eq.skipped += 1,
                Err(e) => return Err(e),
            }
        }
        let name = match law {
            IndicatorLaw::Starlike => "starlike_equality",
            IndicatorLaw::Convex => "convex_equality",
        };
        out.push(eq.finish(name, ErrorKind::Absolute, INDICATOR_TOL));
    }
    Ok(out)
}

/// Identities for a raw polyharmonic map `Σ |z|^{2(k-1)} G_k`.
pub fn polyharmonic_spec_suite(spec: &PolyharmonicSpec, seed: u64, points: usize) -> Result<Vec<IdentityResult>> {
    let mut rng = random::seeded(seed);
    let cap = spec.degree_cap();
    let u = spec.assemble()?;
    let p = spec.order();
    let mut out = Vec::new();

    let mut tally = Tally::default();
    tally.record(u.laplacian_power(p).max_abs(), || format!("p = {p}"));
    out.push(tally.finish("polyharmonicity", ErrorKind::Absolute, POLYHARMONIC_TOL));

    let mut law = Tally::default();
    for n in [1, 2, 3] {
        let mut rhs = BiSeries::zeros(cap);
        for (k, part) in spec.parts().iter().enumerate() {
            rhs = rhs.add(&part.to_series().op_l_power(n)?.shifted(k, k))?;
        }
        law.record(grid_gap(&u.op_l_power(n)?, &rhs)?, || format!("n = {n}"));
    }
    out.push(law.finish("distribution_law", ErrorKind::Exact, 0.0));

    let pts: Vec<ComplexPoint> = (0..points)
        .map(|_| random::random_point(&mut rng, R_MIN, R_MAX))
        .collect();
    let (first, second) = tangential_tallies(&u, &pts);
    out.push(first.finish("tangential_derivative", ErrorKind::Relative, TANGENT_TOL));
    out.push(second.finish("tangential_second_derivative", ErrorKind::Relative, SECOND_TANGENT_TOL));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mappings::HarmonicLogMap;
    use crate::wirtinger::AnalyticSeries;

    #[test]
    fn small_random_suite_passes() {
        let results = random_suite(11, 8).unwrap();
        for r in &results {
            assert!(r.passed, "{r:?}");
        }
    }

    #[test]
    fn suite_is_deterministic() {
        assert_eq!(random_suite(5, 4).unwrap(), random_suite(5, 4).unwrap());
    }

    #[test]
    fn harmonic_reduction_has_exact_ratio_gap() {
        let cap = 16;
        let a = AnalyticSeries::new(vec![C64::new(0.1, 0.0), C64::new(1.0, 0.0), C64::new(0.2, -0.3)], cap).unwrap();
        let b = AnalyticSeries::new(vec![C64::new(0.0, 0.0), C64::new(0.0, 0.0), C64::new(0.1, 0.1)], cap).unwrap();
        let spec = LphgSpec::pure(HarmonicLogMap::new(a, b).unwrap(), vec![C64::new(1.0, 0.0)]).unwrap();
        let results = spec_suite(&spec, 3, 40).unwrap();
        let ratio = results.iter().find(|r| r.name == "ratio_identity").unwrap();
        assert_eq!(ratio.max_error, 0.0);
        assert!(results.iter().all(|r| r.passed), "{results:?}");
    }
}
