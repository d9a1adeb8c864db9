//! Harmonic, polyharmonic and log-polyharmonic mappings of the unit disk.
//!
//! Every nonvanishing factor is stored through its logarithm, so `f`, `h`
//! and `G` can never vanish and `log F` is an exact finite series:
//!
//! ```text
//! F(z)     = f(z) · h(z̄) · Π_k G(z)^{λ_k |z|^{2(k-1)}}
//! log F(z) = log f(z) + log h(z̄) + B(|z|²) · log G(z),   B(s) = Σ_k λ_k s^{k-1}
//! ```
//!
//! `log h` holds the coefficients of `h` in its own argument; it is embedded
//! as `Σ c_n z̄^n` without conjugation.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::grid::ScanGrid;
use crate::wirtinger::{AnalyticSeries, BiSeries, ComplexPoint, C64};

/// Magnitude below which a pointwise denominator is treated as zero.
pub const SINGULAR_EPS: f64 = 1e-13;

const ZERO: C64 = C64::new(0.0, 0.0);

/// The harmonic function `a(z) + conj(b(z))`.
#[derive(Clone, Debug, PartialEq)]
pub struct HarmonicLogMap {
    a: AnalyticSeries,
    b: AnalyticSeries,
}

impl HarmonicLogMap {
    pub fn new(a: AnalyticSeries, b: AnalyticSeries) -> Result<Self> {
        if a.degree_cap() != b.degree_cap() {
            return Err(Error::CapMismatch {
                left: a.degree_cap(),
                right: b.degree_cap(),
            });
        }
        Ok(HarmonicLogMap { a, b })
    }

    /// `a(z)` alone.
    pub fn analytic(a: AnalyticSeries) -> Self {
        let cap = a.degree_cap();
        HarmonicLogMap {
            a,
            b: AnalyticSeries::zero(cap),
        }
    }

    pub fn a(&self) -> &AnalyticSeries {
        &self.a
    }

    pub fn b(&self) -> &AnalyticSeries {
        &self.b
    }

    pub fn degree_cap(&self) -> usize {
        self.a.degree_cap()
    }

    pub fn to_series(&self) -> BiSeries {
        BiSeries::embed(&self.a)
            .add(&BiSeries::embed_conj(&self.b))
            .expect("parts share a degree cap")
    }

    pub fn eval(&self, z: ComplexPoint) -> Result<C64> {
        z.ensure_in_disk()?;
        let w = z.value();
        Ok(self.a.eval(w) + self.b.eval(w).conj())
    }

    /// `(∂_z, ∂_z̄)` at `z`: `a'(z)` and `conj(b'(z))`.
    pub fn wirtinger_at(&self, z: ComplexPoint) -> Result<(C64, C64)> {
        z.ensure_in_disk()?;
        let w = z.value();
        Ok((self.a.derivative().eval(w), self.b.derivative().eval(w).conj()))
    }

    fn max_index(&self) -> Option<usize> {
        match (self.a.degree(), self.b.degree()) {
            (None, None) => None,
            (x, y) => Some(x.unwrap_or(0).max(y.unwrap_or(0))),
        }
    }
}

/// The parts `G_1, …, G_p` of `F = Σ_k |z|^{2(k-1)} G_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyharmonicSpec {
    parts: Vec<HarmonicLogMap>,
}

impl PolyharmonicSpec {
    pub fn new(parts: Vec<HarmonicLogMap>) -> Result<Self> {
        let first = parts
            .first()
            .ok_or_else(|| Error::InvalidArgument("at least one harmonic part is required".into()))?;
        let cap = first.degree_cap();
        if let Some(other) = parts.iter().find(|g| g.degree_cap() != cap) {
            return Err(Error::CapMismatch {
                left: cap,
                right: other.degree_cap(),
            });
        }
        if parts.len() > (cap / 2).max(1) {
            return Err(Error::DegreeOverflow(format!(
                "order {} exceeds half the degree cap {cap}",
                parts.len()
            )));
        }
        Ok(PolyharmonicSpec { parts })
    }

    pub fn parts(&self) -> &[HarmonicLogMap] {
        &self.parts
    }

    pub fn order(&self) -> usize {
        self.parts.len()
    }

    pub fn degree_cap(&self) -> usize {
        self.parts[0].degree_cap()
    }

    pub fn assemble(&self) -> Result<BiSeries> {
        assemble_polyharmonic(self)
    }
}

/// `Σ_k |z|^{2(k-1)} G_k` as a bi-series.
pub fn assemble_polyharmonic(spec: &PolyharmonicSpec) -> Result<BiSeries> {
    let cap = spec.degree_cap();
    let mut out = BiSeries::zeros(cap);
    for (k, part) in spec.parts.iter().enumerate() {
        if let Some(top) = part.max_index() {
            if top + k > cap {
                return Err(Error::DegreeOverflow(format!(
                    "part {} has degree {top}; shifting by |z|^{} needs cap {}, have {cap}",
                    k + 1,
                    2 * k,
                    top + k
                )));
            }
        }
        let shifted = BiSeries::modulus_power(cap, k)?.mul(&part.to_series())?;
        out = out.add(&shifted)?;
    }
    Ok(out)
}

/// A member of the class `f(z) h(z̄) Π_k G(z)^{λ_k |z|^{2(k-1)}}`, stored by logarithms.
#[derive(Clone, Debug, PartialEq)]
pub struct LphgSpec {
    log_f: AnalyticSeries,
    log_h: AnalyticSeries,
    log_g: HarmonicLogMap,
    lambdas: Vec<C64>,
}

impl LphgSpec {
    pub fn new(log_f: AnalyticSeries, log_h: AnalyticSeries, log_g: HarmonicLogMap, lambdas: Vec<C64>) -> Result<Self> {
        let cap = log_g.degree_cap();
        for other in [log_f.degree_cap(), log_h.degree_cap()] {
            if other != cap {
                return Err(Error::CapMismatch {
                    left: cap,
                    right: other,
                });
            }
        }
        if lambdas.is_empty() {
            return Err(Error::InvalidArgument(
                "the weight vector must have at least one entry".into(),
            ));
        }
        if lambdas.iter().any(|l| !(l.re.is_finite() && l.im.is_finite())) {
            return Err(Error::NonFinite("weights"));
        }
        Ok(LphgSpec {
            log_f,
            log_h,
            log_g,
            lambdas,
        })
    }

    /// `F = G^{λ_1} · …` with `f = h = 1`.
    pub fn pure(log_g: HarmonicLogMap, lambdas: Vec<C64>) -> Result<Self> {
        let cap = log_g.degree_cap();
        Self::new(AnalyticSeries::zero(cap), AnalyticSeries::zero(cap), log_g, lambdas)
    }

    pub fn log_f(&self) -> &AnalyticSeries {
        &self.log_f
    }

    pub fn log_h(&self) -> &AnalyticSeries {
        &self.log_h
    }

    pub fn log_g(&self) -> &HarmonicLogMap {
        &self.log_g
    }

    pub fn lambdas(&self) -> &[C64] {
        &self.lambdas
    }

    pub fn order(&self) -> usize {
        self.lambdas.len()
    }

    pub fn degree_cap(&self) -> usize {
        self.log_g.degree_cap()
    }

    /// `B(z) = Σ_k λ_k |z|^{2(k-1)}`, as a polynomial in `s = |z|²`.
    pub fn weight(&self, s: f64) -> C64 {
        self.lambdas.iter().rev().fold(ZERO, |acc, l| acc * s + l)
    }

    /// `A(z) = Σ_{k≥2} λ_k (k-1) |z|^{2(k-2)}`, i.e. `dB/ds`.
    pub fn weight_slope(&self, s: f64) -> C64 {
        self.lambdas
            .iter()
            .enumerate()
            .skip(1)
            .rev()
            .fold(ZERO, |acc, (k, l)| acc * s + l * k as f64)
    }

    pub fn has_trivial_factors(&self) -> bool {
        self.log_f.is_zero() && self.log_h.is_zero()
    }

    pub fn has_constant_factors(&self) -> bool {
        self.log_f.is_constant() && self.log_h.is_constant()
    }

    /// `B(|z|²)` as a bi-series.
    pub fn weight_series(&self) -> Result<BiSeries> {
        let cap = self.degree_cap();
        let mut out = BiSeries::zeros(cap);
        for (k, l) in self.lambdas.iter().enumerate() {
            if *l == ZERO {
                continue;
            }
            if k > cap {
                return Err(Error::DegreeOverflow(format!(
                    "weight {} needs |z|^{} beyond cap {cap}",
                    k + 1,
                    2 * k
                )));
            }
            out = out.add(&BiSeries::monomial(cap, k, k, *l)?)?;
        }
        Ok(out)
    }

    pub fn assemble_log_f(&self) -> Result<BiSeries> {
        assemble_log_f(self)
    }

    pub fn prepare(&self) -> Result<PreparedLphg> {
        PreparedLphg::new(self)
    }
}

/// `log F = log f(z) + log h(z̄) + B(|z|²)·log G(z)`.
pub fn assemble_log_f(spec: &LphgSpec) -> Result<BiSeries> {
    let cap = spec.degree_cap();
    let highest_weight = spec.lambdas.iter().rposition(|l| *l != ZERO);
    if let (Some(k), Some(top)) = (highest_weight, spec.log_g.max_index()) {
        if top + k > cap {
            return Err(Error::DegreeOverflow(format!(
                "log G has degree {top}; weight {} needs cap {}, have {cap}",
                k + 1,
                top + k
            )));
        }
    }
    let weighted = spec.weight_series()?.mul(&spec.log_g.to_series())?;
    BiSeries::embed(&spec.log_f)
        .add(&BiSeries::embed_anti(&spec.log_h))?
        .add(&weighted)
}

/// The scalar coefficients of the closed-form Jacobian at one point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct JacobianCoefficients {
    /// `A(z) = Σ_{k=2}^p λ_k (k-1) |z|^{2(k-2)}`.
    pub weight_slope: C64,
    /// `B(z) = Σ_{k=1}^p λ_k |z|^{2(k-1)}`.
    pub weight: C64,
    /// `C = (f'/f)(z)·conj((log G)_z) − (h'/h)(z̄)·conj((log G)_z̄)`.
    pub cross: C64,
    pub at: ComplexPoint,
}

pub fn jacobian_coefficients(spec: &LphgSpec, z: ComplexPoint) -> Result<JacobianCoefficients> {
    z.ensure_in_disk()?;
    let w = z.value();
    let s = w.norm_sqr();
    let (g_z, g_zb) = spec.log_g.wirtinger_at(z)?;
    let df = spec.log_f.derivative().eval(w);
    let dh = spec.log_h.derivative().eval(w.conj());
    Ok(JacobianCoefficients {
        weight_slope: spec.weight_slope(s),
        weight: spec.weight(s),
        cross: df * g_z.conj() - dh * g_zb.conj(),
        at: z,
    })
}

/// Series and derivative tables of one [`LphgSpec`], built once and reused
/// for pointwise evaluation.
#[derive(Clone, Debug)]
pub struct PreparedLphg {
    spec: LphgSpec,
    log_f_series: BiSeries,
    log_f_dz: BiSeries,
    log_f_dzb: BiSeries,
    dlog_f: AnalyticSeries,
    dlog_h: AnalyticSeries,
    dlog_g_a: AnalyticSeries,
    dlog_g_b: AnalyticSeries,
}

/// Pointwise quantities of `log G` used by several formulas.
#[derive(Clone, Copy, Debug)]
pub struct LogGPoint {
    pub value: C64,
    pub dz: C64,
    pub dzb: C64,
}

impl LogGPoint {
    pub fn jacobian(&self) -> f64 {
        self.dz.norm_sqr() - self.dzb.norm_sqr()
    }

    /// `𝓛[log G] = z·(log G)_z − z̄·(log G)_z̄`.
    pub fn op_l(&self, z: C64) -> C64 {
        z * self.dz - z.conj() * self.dzb
    }
}

impl PreparedLphg {
    pub fn new(spec: &LphgSpec) -> Result<Self> {
        let log_f_series = assemble_log_f(spec)?;
        Ok(PreparedLphg {
            log_f_dz: log_f_series.partial_z(),
            log_f_dzb: log_f_series.partial_zbar(),
            log_f_series,
            dlog_f: spec.log_f.derivative(),
            dlog_h: spec.log_h.derivative(),
            dlog_g_a: spec.log_g.a.derivative(),
            dlog_g_b: spec.log_g.b.derivative(),
            spec: spec.clone(),
        })
    }

    pub fn spec(&self) -> &LphgSpec {
        &self.spec
    }

    pub fn log_f_series(&self) -> &BiSeries {
        &self.log_f_series
    }

    pub fn log_g_at(&self, z: ComplexPoint) -> Result<LogGPoint> {
        let value = self.spec.log_g.eval(z)?;
        let w = z.value();
        Ok(LogGPoint {
            value,
            dz: self.dlog_g_a.eval(w),
            dzb: self.dlog_g_b.eval(w).conj(),
        })
    }

    /// `(log f)'(w)` for an arbitrary argument `w`.
    pub fn dlog_f_at(&self, w: C64) -> C64 {
        self.dlog_f.eval(w)
    }

    /// `(log h)'(w)` for an arbitrary argument `w`.
    pub fn dlog_h_at(&self, w: C64) -> C64 {
        self.dlog_h.eval(w)
    }

    pub fn eval_log_f(&self, z: ComplexPoint) -> Result<C64> {
        self.log_f_series.eval(z)
    }

    pub fn eval_f(&self, z: ComplexPoint) -> Result<C64> {
        Ok(self.eval_log_f(z)?.exp())
    }

    pub fn jacobian_direct(&self, z: ComplexPoint) -> Result<f64> {
        z.ensure_punctured_disk()?;
        let uz = self.log_f_dz.eval(z)?;
        let uzb = self.log_f_dzb.eval(z)?;
        Ok(uz.norm_sqr() - uzb.norm_sqr())
    }

    /// `|u_z|² + |u_z̄|²` for `u = log F`: the magnitude the Jacobian is a difference of.
    pub fn jacobian_scale(&self, z: ComplexPoint) -> Result<f64> {
        let uz = self.log_f_dz.eval(z)?;
        let uzb = self.log_f_dzb.eval(z)?;
        Ok(uz.norm_sqr() + uzb.norm_sqr())
    }

    pub fn jacobian_closed(&self, z: ComplexPoint) -> Result<f64> {
        z.ensure_punctured_disk()?;
        let w = z.value();
        let g = self.log_g_at(z)?;
        if g.value.norm() < SINGULAR_EPS {
            return Err(Error::singular(w, "log G"));
        }
        let s = w.norm_sqr();
        let a = self.spec.weight_slope(s);
        let b = self.spec.weight(s);
        let df = self.dlog_f.eval(w);
        let dh = self.dlog_h.eval(w.conj());
        let cross = df * g.dz.conj() - dh * g.dzb.conj();
        // 𝓛[log(log G)] = 𝓛[log G] / log G and 𝓛[log(f h)] = z f'/f − z̄ h'/h.
        let nested = g.op_l(w) / g.value;
        let l_fh = w * df - w.conj() * dh;
        let terms = [
            df.norm_sqr(),
            -dh.norm_sqr(),
            b.norm_sqr() * g.jacobian(),
            2.0 * g.value.norm_sqr() * (a.conj() * b * nested).re,
            2.0 * (a.conj() * g.value.conj() * l_fh).re,
            2.0 * (b.conj() * cross).re,
        ];
        Ok(terms.iter().sum())
    }

    pub fn ratio_identity_gap(&self, n: u32, z: ComplexPoint) -> Result<f64> {
        ratio_gap_prepared(self, n, z)
    }
}

pub fn eval_f(spec: &LphgSpec, z: ComplexPoint) -> Result<C64> {
    Ok(assemble_log_f(spec)?.eval(z)?.exp())
}

/// `|(log F)_z|² − |(log F)_z̄|²` from the symbolic derivatives of the assembled series.
pub fn jacobian_log_f_direct(spec: &LphgSpec, z: ComplexPoint) -> Result<f64> {
    PreparedLphg::new(spec)?.jacobian_direct(z)
}

/// The six-term closed form of `J_{log F}` in terms of `f`, `h`, `log G` and the weights.
pub fn jacobian_log_f_closed(spec: &LphgSpec, z: ComplexPoint) -> Result<f64> {
    PreparedLphg::new(spec)?.jacobian_closed(z)
}

/// `J_{log F}` for `F = G^{|z|^{2(p-1)}}`:
/// `|z|^{4(p-1)} J_{log G} + 2(p-1) |log G|² |z|^{2(2p-3)} Re(𝓛[log G]/log G)`.
pub fn jacobian_power_case(log_g: &HarmonicLogMap, p: usize, z: ComplexPoint) -> Result<f64> {
    if p < 2 {
        return Err(Error::InvalidArgument(format!("the power case needs p ≥ 2, got {p}")));
    }
    z.ensure_punctured_disk()?;
    let w = z.value();
    let value = log_g.eval(z)?;
    if value.norm() < SINGULAR_EPS {
        return Err(Error::singular(w, "log G"));
    }
    let (dz, dzb) = log_g.wirtinger_at(z)?;
    let g = LogGPoint { value, dz, dzb };
    let s = w.norm_sqr();
    let pm1 = (p - 1) as i32;
    let leading = s.powi(2 * pm1) * g.jacobian();
    let nested = (g.op_l(w) / value).re;
    let tail = 2.0 * pm1 as f64 * value.norm_sqr() * s.powi(2 * p as i32 - 3) * nested;
    Ok(leading + tail)
}

fn ratio_gap_prepared(prep: &PreparedLphg, n: u32, z: ComplexPoint) -> Result<f64> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "the ratio identity is stated for n ≥ 2, got {n}"
        )));
    }
    let spec = &prep.spec;
    if !spec.has_trivial_factors() {
        return Err(Error::Precondition("the ratio identity needs log f = log h = 0".into()));
    }
    z.ensure_punctured_disk()?;
    let w = z.value();
    if spec.weight(w.norm_sqr()).norm() < SINGULAR_EPS {
        return Err(Error::singular(w, "B(z)"));
    }
    let log_g = spec.log_g.to_series();
    let g1 = log_g.op_l().eval(z)?;
    if g1.norm() < SINGULAR_EPS {
        return Err(Error::singular(w, "𝓛[log G]"));
    }
    let gn = log_g.op_l_power(n)?.eval(z)?;
    let f1 = prep.log_f_series.op_l().eval(z)?;
    if f1.norm() < SINGULAR_EPS {
        return Err(Error::singular(w, "𝓛[log F]"));
    }
    let fnn = prep.log_f_series.op_l_power(n)?.eval(z)?;
    Ok((fnn / f1 - gn / g1).norm())
}

/// `|𝓛ⁿ[log F]/𝓛[log F] − 𝓛ⁿ[log G]/𝓛[log G]|` at `z`.
pub fn ratio_identity_gap(spec: &LphgSpec, n: u32, z: ComplexPoint) -> Result<f64> {
    ratio_gap_prepared(&PreparedLphg::new(spec)?, n, z)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FlagStatus {
    Holds,
    /// The strict inequality reduces to `0 > 0` at every grid point.
    Degenerate,
    Fails,
}

/// Grid outcome of one strict-positivity hypothesis.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PositivityFlag {
    pub status: FlagStatus,
    pub min: f64,
    pub argmin_r: f64,
    pub argmin_t: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LocalUnivalenceVerdict {
    /// All hypotheses hold; `conclusion_positive` carries the sign of `min J_{log F}`.
    HypothesesHold,
    /// As above, but the cross-term hypothesis is identically zero instead of positive.
    HypothesesHoldDegenerate,
    HypothesesFail,
}

/// Local-univalence hypotheses and the sign of `J_{log F}` on a grid.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LocalUnivalenceReport {
    pub weights_real_nonnegative: bool,
    pub weight_sum_nonzero: bool,
    pub jacobian_log_g: PositivityFlag,
    pub log_g_starlike: PositivityFlag,
    pub cross_condition: PositivityFlag,
    pub symmetry_condition: bool,
    pub symmetry_max_gap: f64,
    pub min_jacobian_log_f: f64,
    pub argmin_r: f64,
    pub argmin_t: f64,
    pub skipped: Vec<(f64, f64)>,
    pub verdict: LocalUnivalenceVerdict,
    /// `Some(min J_{log F} > 0)` unless a hypothesis fails.
    pub conclusion_positive: Option<bool>,
}

const SYMMETRY_TOL: f64 = 1e-10;
const DEGENERATE_EPS: f64 = 1e-14;

fn positivity_flag(grid: &ScanGrid, values: &[Option<f64>]) -> PositivityFlag {
    let mut best: Option<(usize, f64)> = None;
    let mut max_abs: f64 = 0.0;
    for (idx, v) in values.iter().enumerate() {
        if let Some(v) = v {
            max_abs = max_abs.max(v.abs());
            if best.is_none_or(|(_, b)| *v < b) {
                best = Some((idx, *v));
            }
        }
    }
    let Some((idx, min)) = best else {
        return PositivityFlag {
            status: FlagStatus::Fails,
            min: f64::NAN,
            argmin_r: f64::NAN,
            argmin_t: f64::NAN,
        };
    };
    let (argmin_r, argmin_t) = grid.coords(idx);
    let status = if max_abs <= DEGENERATE_EPS {
        FlagStatus::Degenerate
    } else if min > 0.0 {
        FlagStatus::Holds
    } else {
        FlagStatus::Fails
    };
    PositivityFlag {
        status,
        min,
        argmin_r,
        argmin_t,
    }
}

/// Evaluates the local-univalence hypotheses for `log F`
/// as independent flags, then the minimum of `J_{log F}` over the grid.
pub fn local_univalence_check(spec: &LphgSpec, grid: &ScanGrid) -> Result<LocalUnivalenceReport> {
    let prep = spec.prepare()?;

    let weights_real_nonnegative = spec.lambdas.iter().all(|l| l.im == 0.0 && l.re >= 0.0);
    let weight_sum_nonzero = spec.lambdas.iter().sum::<C64>() != ZERO;

    let jac_g = grid.evaluate(|z| Ok(prep.log_g_at(z)?.jacobian()))?;
    let starlike_g = grid.evaluate(|z| {
        let g = prep.log_g_at(z)?;
        if g.value.norm() < SINGULAR_EPS {
            return Err(Error::singular(z.value(), "log G"));
        }
        Ok((g.op_l(z.value()) / g.value).re)
    })?;
    let cross = grid.evaluate(|z| {
        let w = z.value();
        let g = prep.log_g_at(z)?;
        Ok((w.conj() * prep.dlog_f_at(w.conj()) * g.op_l(w)).re)
    })?;
    let symmetry = grid.evaluate(|z| {
        let w = z.value();
        let lhs = w.conj() * prep.dlog_f_at(w.conj());
        let rhs = w * prep.dlog_h_at(w);
        Ok((lhs - rhs).norm())
    })?;
    let jac_f = grid.evaluate(|z| prep.jacobian_direct(z))?;

    let symmetry_max_gap = symmetry.iter().flatten().fold(0.0, |a: f64, b| a.max(*b));
    let symmetry_condition = symmetry_max_gap <= SYMMETRY_TOL;

    let jacobian_log_g = positivity_flag(grid, &jac_g);
    let log_g_starlike = positivity_flag(grid, &starlike_g);
    let cross_condition = positivity_flag(grid, &cross);
    let conclusion = positivity_flag(grid, &jac_f);

    let mut skipped = Vec::new();
    for (idx, (a, b)) in starlike_g.iter().zip(&jac_f).enumerate() {
        if a.is_none() || b.is_none() {
            skipped.push(grid.coords(idx));
        }
    }

    let strict_ok = weights_real_nonnegative
        && weight_sum_nonzero
        && symmetry_condition
        && jacobian_log_g.status == FlagStatus::Holds
        && log_g_starlike.status == FlagStatus::Holds;
    let verdict = match (strict_ok, cross_condition.status) {
        (true, FlagStatus::Holds) => LocalUnivalenceVerdict::HypothesesHold,
        (true, FlagStatus::Degenerate) => LocalUnivalenceVerdict::HypothesesHoldDegenerate,
        _ => LocalUnivalenceVerdict::HypothesesFail,
    };
    let conclusion_positive = match verdict {
        LocalUnivalenceVerdict::HypothesesFail => None,
        _ => Some(conclusion.min > 0.0),
    };

    Ok(LocalUnivalenceReport {
        weights_real_nonnegative,
        weight_sum_nonzero,
        jacobian_log_g,
        log_g_starlike,
        cross_condition,
        symmetry_condition,
        symmetry_max_gap,
        min_jacobian_log_f: conclusion.min,
        argmin_r: conclusion.argmin_r,
        argmin_t: conclusion.argmin_t,
        skipped,
        verdict,
        conclusion_positive,
    })
}
