//! Truncated series in `z` and `z̄` together with the Wirtinger operator calculus.
//!
//! A [`BiSeries`] stores the coefficients of `Σ c[m][n] z^m z̄^n` on a dense
//! `(N+1)×(N+1)` grid, where `N` is the degree cap. All operators act on the
//! grid by index shifts and integer scalings, so they are exact up to the
//! rounding of the coefficients themselves:
//!
//! | operator          | action on `z^m z̄^n`          |
//! |-------------------|-------------------------------|
//! | `∂_z`             | `m z^(m-1) z̄^n`              |
//! | `∂_z̄`             | `n z^m z̄^(n-1)`              |
//! | `𝓛 = z∂_z − z̄∂_z̄` | `(m − n) z^m z̄^n`            |
//! | `𝔏 = z∂_z + z̄∂_z̄` | `(m + n) z^m z̄^n`            |
//! | `Δ = 4∂_z∂_z̄`     | `4mn z^(m-1) z̄^(n-1)`        |
//!
//! Multiplication discards every product index above the cap. Division is
//! never done at series level; quotients are formed pointwise after
//! evaluation.
//!
//! [`fd_wirtinger`] is a finite-difference oracle that only needs pointwise
//! evaluation, so it can check any symbolic derivative independently.

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C64 = Complex64;

pub const DEFAULT_DEGREE_CAP: usize = 32;
pub const MAX_DEGREE_CAP: usize = 128;

const ZERO: C64 = C64::new(0.0, 0.0);
const I: C64 = C64::new(0.0, 1.0);

fn all_finite(values: &[C64]) -> bool {
    values.iter().all(|c| c.re.is_finite() && c.im.is_finite())
}

fn check_cap(cap: usize) -> Result<()> {
    if cap > MAX_DEGREE_CAP {
        return Err(Error::InvalidArgument(format!(
            "degree cap {cap} exceeds the maximum of {MAX_DEGREE_CAP}"
        )));
    }
    Ok(())
}

/// A finite point of the complex plane.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ComplexPoint(C64);

impl ComplexPoint {
    pub fn new(re: f64, im: f64) -> Result<Self> {
        Self::from_complex(C64::new(re, im))
    }

    pub fn from_complex(z: C64) -> Result<Self> {
        if !(z.re.is_finite() && z.im.is_finite()) {
            return Err(Error::NonFinite("point"));
        }
        Ok(ComplexPoint(z))
    }

    pub fn from_polar(r: f64, t: f64) -> Result<Self> {
        if !(r.is_finite() && t.is_finite()) || r < 0.0 {
            return Err(Error::InvalidArgument(format!(
                "polar coordinates ({r}, {t}) are not a valid point"
            )));
        }
        Self::from_complex(C64::from_polar(r, t))
    }

    pub fn value(self) -> C64 {
        self.0
    }

    pub fn re(self) -> f64 {
        self.0.re
    }

    pub fn im(self) -> f64 {
        self.0.im
    }

    pub fn modulus(self) -> f64 {
        self.0.norm()
    }

    /// Argument normalised to `[0, 2π)`.
    pub fn arg(self) -> f64 {
        let t = self.0.im.atan2(self.0.re);
        if t < 0.0 {
            let shifted = t + TAU;
            // atan2 can return -0.0 or a value so small that the shift rounds to 2π.
            if shifted >= TAU {
                0.0
            } else {
                shifted
            }
        } else {
            t
        }
    }

    pub fn conj(self) -> Self {
        ComplexPoint(self.0.conj())
    }

    /// Errors unless the point lies in the open unit disk.
    pub fn ensure_in_disk(self) -> Result<()> {
        if self.modulus() < 1.0 {
            Ok(())
        } else {
            Err(Error::domain(self.0, "|z| must be < 1"))
        }
    }

    /// Errors unless `0 < |z| < 1`.
    pub fn ensure_punctured_disk(self) -> Result<()> {
        self.ensure_in_disk()?;
        if self.0 == ZERO {
            return Err(Error::domain(self.0, "the origin is excluded"));
        }
        Ok(())
    }
}

/// Truncated Taylor series `Σ c_n w^n` in a single complex variable.
#[derive(Clone, Debug, PartialEq)]
pub struct AnalyticSeries {
    coeffs: Vec<C64>,
}

impl AnalyticSeries {
    /// Builds a series with degree cap `cap`, zero-padding `coeffs` to length `cap + 1`.
    pub fn new(mut coeffs: Vec<C64>, cap: usize) -> Result<Self> {
        check_cap(cap)?;
        if coeffs.len() > cap + 1 {
            return Err(Error::DegreeOverflow(format!(
                "{} coefficients do not fit degree cap {cap}",
                coeffs.len()
            )));
        }
        if !all_finite(&coeffs) {
            return Err(Error::NonFinite("analytic series coefficients"));
        }
        coeffs.resize(cap + 1, ZERO);
        Ok(AnalyticSeries { coeffs })
    }

    pub fn zero(cap: usize) -> Self {
        AnalyticSeries {
            coeffs: vec![ZERO; cap + 1],
        }
    }

    pub fn constant(c: C64, cap: usize) -> Result<Self> {
        Self::new(vec![c], cap)
    }

    pub fn degree_cap(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C64] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> C64 {
        self.coeffs.get(n).copied().unwrap_or(ZERO)
    }

    /// Index of the highest nonzero coefficient, `None` for the zero series.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| *c != ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.degree().is_none()
    }

    pub fn is_constant(&self) -> bool {
        self.degree().is_none_or(|d| d == 0)
    }

    pub fn eval(&self, w: C64) -> C64 {
        let top = self.degree().unwrap_or(0);
        self.coeffs[..=top].iter().rev().fold(ZERO, |acc, c| acc * w + c)
    }

    pub fn derivative(&self) -> AnalyticSeries {
        let mut coeffs = vec![ZERO; self.coeffs.len()];
        for (n, c) in self.coeffs.iter().enumerate().skip(1) {
            coeffs[n - 1] = c * n as f64;
        }
        AnalyticSeries { coeffs }
    }

    pub fn scale(&self, k: C64) -> AnalyticSeries {
        AnalyticSeries {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Truncated bi-degree series `Σ c[m][n] z^m z̄^n` on a dense grid.
#[derive(Clone, Debug, PartialEq)]
pub struct BiSeries {
    cap: usize,
    coeffs: Vec<C64>,
    // Number of leading rows / columns that can hold nonzero entries.
    rows: usize,
    cols: usize,
}

impl BiSeries {
    fn from_grid(cap: usize, coeffs: Vec<C64>) -> Self {
        let width = cap + 1;
        let mut rows = 0;
        let mut cols = 0;
        for (idx, c) in coeffs.iter().enumerate() {
            if *c != ZERO {
                rows = rows.max(idx / width + 1);
                cols = cols.max(idx % width + 1);
            }
        }
        BiSeries {
            cap,
            coeffs,
            rows,
            cols,
        }
    }

    pub fn zeros(cap: usize) -> Self {
        BiSeries {
            cap,
            coeffs: vec![ZERO; (cap + 1) * (cap + 1)],
            rows: 0,
            cols: 0,
        }
    }

    /// Builds a series from a coefficient function evaluated on every index pair.
    pub fn from_fn(cap: usize, mut f: impl FnMut(usize, usize) -> C64) -> Result<Self> {
        check_cap(cap)?;
        let width = cap + 1;
        let coeffs: Vec<C64> = (0..width * width).map(|idx| f(idx / width, idx % width)).collect();
        if !all_finite(&coeffs) {
            return Err(Error::NonFinite("bi-series coefficients"));
        }
        Ok(Self::from_grid(cap, coeffs))
    }

    pub fn monomial(cap: usize, m: usize, n: usize, c: C64) -> Result<Self> {
        if m > cap || n > cap {
            return Err(Error::DegreeOverflow(format!(
                "monomial z^{m} z̄^{n} exceeds degree cap {cap}"
            )));
        }
        Self::from_fn(cap, |i, j| if (i, j) == (m, n) { c } else { ZERO })
    }

    pub fn constant(cap: usize, c: C64) -> Result<Self> {
        Self::monomial(cap, 0, 0, c)
    }

    /// `|z|^{2k} = z^k z̄^k`.
    pub fn modulus_power(cap: usize, k: usize) -> Result<Self> {
        Self::monomial(cap, k, k, C64::new(1.0, 0.0))
    }

    /// Analytic series placed in column `n = 0`.
    pub fn embed(a: &AnalyticSeries) -> Self {
        let cap = a.degree_cap();
        let width = cap + 1;
        let mut coeffs = vec![ZERO; width * width];
        for (m, c) in a.coeffs().iter().enumerate() {
            coeffs[m * width] = *c;
        }
        Self::from_grid(cap, coeffs)
    }

    /// The series `Σ c_n z̄^n` with the coefficients of `a` left unconjugated.
    pub fn embed_anti(a: &AnalyticSeries) -> Self {
        let cap = a.degree_cap();
        let width = cap + 1;
        let mut coeffs = vec![ZERO; width * width];
        coeffs[..width].copy_from_slice(a.coeffs());
        Self::from_grid(cap, coeffs)
    }

    /// `conj(a(z)) = Σ conj(c_n) z̄^n`.
    pub fn embed_conj(a: &AnalyticSeries) -> Self {
        Self::embed_anti(&AnalyticSeries {
            coeffs: a.coeffs().iter().map(|c| c.conj()).collect(),
        })
    }

    pub fn degree_cap(&self) -> usize {
        self.cap
    }

    /// Row-major coefficient grid; entry `m * (N+1) + n` is the coefficient of `z^m z̄^n`.
    pub fn coeffs(&self) -> &[C64] {
        &self.coeffs
    }

    pub fn coeff(&self, m: usize, n: usize) -> C64 {
        if m > self.cap || n > self.cap {
            return ZERO;
        }
        self.coeffs[m * (self.cap + 1) + n]
    }

    pub fn is_zero(&self) -> bool {
        self.rows == 0
    }

    /// Largest `max(m, n)` over nonzero entries.
    pub fn max_index(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.rows.max(self.cols) - 1)
        }
    }

    /// Largest `m + n` over nonzero entries.
    pub fn total_degree(&self) -> Option<usize> {
        self.nonzero().map(|(m, n, _)| m + n).max()
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Nonzero entries as `(m, n, c)` in row-major order.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, C64)> + '_ {
        let width = self.cap + 1;
        (0..self.rows).flat_map(move |m| {
            (0..self.cols).filter_map(move |n| {
                let c = self.coeffs[m * width + n];
                (c != ZERO).then_some((m, n, c))
            })
        })
    }

    fn same_cap(&self, other: &BiSeries) -> Result<()> {
        if self.cap != other.cap {
            return Err(Error::CapMismatch {
                left: self.cap,
                right: other.cap,
            });
        }
        Ok(())
    }

    pub fn arith(&self, other: &BiSeries, op: ArithOp) -> Result<BiSeries> {
        self.same_cap(other)?;
        let coeffs = match op {
            ArithOp::Add => self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
            ArithOp::Sub => self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
            ArithOp::Mul => return Ok(self.cauchy_product(other)),
        };
        Ok(Self::from_grid(self.cap, coeffs))
    }

    pub fn add(&self, other: &BiSeries) -> Result<BiSeries> {
        self.arith(other, ArithOp::Add)
    }

    pub fn sub(&self, other: &BiSeries) -> Result<BiSeries> {
        self.arith(other, ArithOp::Sub)
    }

    pub fn mul(&self, other: &BiSeries) -> Result<BiSeries> {
        self.arith(other, ArithOp::Mul)
    }

    fn cauchy_product(&self, other: &BiSeries) -> BiSeries {
        let cap = self.cap;
        let width = cap + 1;
        let mut out = vec![ZERO; width * width];
        for (i, j, a) in self.nonzero() {
            for k in 0..other.rows.min(width - i) {
                let src = k * width;
                let dst = (i + k) * width + j;
                for l in 0..other.cols.min(width - j) {
                    let b = other.coeffs[src + l];
                    if b != ZERO {
                        out[dst + l] += a * b;
                    }
                }
            }
        }
        Self::from_grid(cap, out)
    }

    /// Multiplication by the monomial `z^dm z̄^dn`, dropping indices above the cap.
    pub fn shifted(&self, dm: usize, dn: usize) -> BiSeries {
        let width = self.cap + 1;
        let mut out = vec![ZERO; width * width];
        for (m, n, c) in self.nonzero() {
            if m + dm < width && n + dn < width {
                out[(m + dm) * width + n + dn] = c;
            }
        }
        Self::from_grid(self.cap, out)
    }

    pub fn scale(&self, k: C64) -> BiSeries {
        Self::from_grid(self.cap, self.coeffs.iter().map(|c| c * k).collect())
    }

    /// The series of `z ↦ u(e^{iθ} z)`.
    pub fn rotated(&self, theta: f64) -> BiSeries {
        let width = self.cap + 1;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(idx, c)| {
                let (m, n) = (idx / width, idx % width);
                if *c == ZERO {
                    ZERO
                } else {
                    c * C64::from_polar(1.0, theta * (m as f64 - n as f64))
                }
            })
            .collect();
        Self::from_grid(self.cap, coeffs)
    }

    fn map_indexed(&self, f: impl Fn(usize, usize, C64) -> C64) -> BiSeries {
        let width = self.cap + 1;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(idx, c)| f(idx / width, idx % width, *c))
            .collect();
        Self::from_grid(self.cap, coeffs)
    }

    pub fn partial_z(&self) -> BiSeries {
        self.map_indexed(|m, n, _| self.coeff(m + 1, n) * (m + 1) as f64)
    }

    pub fn partial_zbar(&self) -> BiSeries {
        self.map_indexed(|m, n, _| self.coeff(m, n + 1) * (n + 1) as f64)
    }

    /// `𝓛 = z∂_z − z̄∂_z̄`, the generator of rotations.
    pub fn op_l(&self) -> BiSeries {
        self.map_indexed(|m, n, c| c * (m as f64 - n as f64))
    }

    /// `𝔏 = z∂_z + z̄∂_z̄`, the generator of radial scaling.
    pub fn op_frak_l(&self) -> BiSeries {
        self.map_indexed(|m, n, c| c * (m + n) as f64)
    }

    /// `𝓛ⁿ` as an `n`-fold composition; `n = 0` is rejected.
    pub fn op_l_power(&self, n: u32) -> Result<BiSeries> {
        if n == 0 {
            return Err(Error::InvalidArgument("operator power must be at least 1".into()));
        }
        let mut out = self.op_l();
        for _ in 1..n {
            out = out.op_l();
        }
        Ok(out)
    }

    pub fn laplacian(&self) -> BiSeries {
        self.map_indexed(|m, n, _| self.coeff(m + 1, n + 1) * (4 * (m + 1) * (n + 1)) as f64)
    }

    pub fn laplacian_power(&self, p: usize) -> BiSeries {
        (0..p).fold(self.clone(), |acc, _| acc.laplacian())
    }

    /// Evaluates at a point of the open unit disk.
    pub fn eval(&self, z: ComplexPoint) -> Result<C64> {
        z.ensure_in_disk()?;
        Ok(self.eval_unchecked(z.value()))
    }

    /// Nested Horner evaluation: each row is summed in `z̄` from the highest
    /// column down, then rows are combined in `z` from the highest row down.
    /// The order is fixed so results are bit-reproducible.
    pub(crate) fn eval_unchecked(&self, z: C64) -> C64 {
        let width = self.cap + 1;
        let zb = z.conj();
        let mut acc = ZERO;
        for m in (0..self.rows).rev() {
            let row = &self.coeffs[m * width..m * width + self.cols];
            let row_val = row.iter().rev().fold(ZERO, |s, c| s * zb + c);
            acc = acc * z + row_val;
        }
        acc
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum FdScheme {
    #[default]
    Central,
}

/// Settings for the finite-difference derivative oracle.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FdConfig {
    pub step: f64,
    pub scheme: FdScheme,
    pub richardson_levels: usize,
}

impl Default for FdConfig {
    fn default() -> Self {
        FdConfig {
            step: 1e-5,
            scheme: FdScheme::Central,
            richardson_levels: 2,
        }
    }
}

impl FdConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.step > 0.0 && self.step <= 1e-2) {
            return Err(Error::InvalidArgument(format!(
                "finite-difference step {} must lie in (0, 1e-2]",
                self.step
            )));
        }
        Ok(())
    }
}

// Richardson tableau over step halvings for a symmetric (even-order error) rule.
fn richardson(levels: usize, h: f64, rule: impl Fn(f64) -> C64) -> C64 {
    let mut row: Vec<C64> = (0..=levels).map(|j| rule(h / f64::powi(2.0, j as i32))).collect();
    for k in 1..=levels {
        let w = f64::powi(4.0, k as i32);
        row = row.windows(2).map(|pair| (pair[1] * w - pair[0]) / (w - 1.0)).collect();
    }
    row[0]
}

/// First derivative of `f` at `x` by central differences with Richardson extrapolation.
pub fn central_diff(f: impl Fn(f64) -> C64, x: f64, h: f64, levels: usize) -> C64 {
    richardson(levels, h, |s| (f(x + s) - f(x - s)) / (2.0 * s))
}

/// Second derivative of `f` at `x` by the three-point rule with Richardson extrapolation.
pub fn central_second_diff(f: impl Fn(f64) -> C64, x: f64, h: f64, levels: usize) -> C64 {
    let fx = f(x);
    richardson(levels, h, |s| (f(x + s) - fx * 2.0 + f(x - s)) / (s * s))
}

/// Finite-difference Wirtinger pair `(∂_z u, ∂_z̄ u)` of a pointwise map.
pub fn fd_wirtinger(u: impl Fn(C64) -> C64, z: ComplexPoint, cfg: &FdConfig) -> Result<(C64, C64)> {
    cfg.validate()?;
    z.ensure_in_disk()?;
    if cfg.step >= (1.0 - z.modulus()) / 4.0 {
        return Err(Error::domain(
            z.value(),
            format!("step {} too large this close to the boundary", cfg.step),
        ));
    }
    let z0 = z.value();
    let ux = central_diff(|s| u(z0 + s), 0.0, cfg.step, cfg.richardson_levels);
    let uy = central_diff(|s| u(z0 + I * s), 0.0, cfg.step, cfg.richardson_levels);
    Ok(((ux - I * uy) * 0.5, (ux + I * uy) * 0.5))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn mono(m: usize, n: usize) -> BiSeries {
        BiSeries::monomial(8, m, n, c(1.0, 0.0)).unwrap()
    }

    #[test]
    fn monomial_products() {
        let zz = mono(1, 0).mul(&mono(0, 1)).unwrap();
        assert_eq!(zz, mono(1, 1));

        let one = mono(0, 0);
        let z = mono(1, 0);
        let lhs = one.add(&z).unwrap().mul(&one.sub(&z).unwrap()).unwrap();
        let expected = one.sub(&mono(2, 0)).unwrap();
        assert_eq!(lhs, expected);
        assert_eq!(lhs.coeff(0, 0), c(1.0, 0.0));
        assert_eq!(lhs.coeff(2, 0), c(-1.0, 0.0));

        let a = mono(3, 2).scale(c(2.0, -1.0));
        assert_eq!(a.add(&BiSeries::zeros(8)).unwrap(), a);
    }

    #[test]
    fn cap_mismatch_is_an_error() {
        let a = BiSeries::zeros(4);
        let b = BiSeries::zeros(5);
        assert!(matches!(a.add(&b), Err(Error::CapMismatch { left: 4, right: 5 })));
        assert!(a.mul(&b).is_err());
    }

    #[test]
    fn multiplication_truncates_above_cap() {
        let a = BiSeries::monomial(4, 3, 0, c(1.0, 0.0)).unwrap();
        let b = BiSeries::monomial(4, 2, 1, c(1.0, 0.0)).unwrap();
        assert!(a.mul(&b).unwrap().is_zero());
    }

    #[test]
    fn wirtinger_derivatives_of_monomials() {
        assert_eq!(mono(2, 1).partial_z(), mono(1, 1).scale(c(2.0, 0.0)));
        assert!(mono(2, 0).partial_zbar().is_zero());
        assert_eq!(mono(2, 2).partial_zbar().partial_z(), mono(1, 1).scale(c(4.0, 0.0)));
        assert_eq!(mono(1, 1).laplacian(), mono(0, 0).scale(c(4.0, 0.0)));
    }

    #[test]
    fn operator_eigenvalues() {
        for m in 0..=8 {
            for n in 0..=8 {
                let u = mono(m, n);
                assert_eq!(u.op_l(), u.scale(c(m as f64 - n as f64, 0.0)));
                assert_eq!(u.op_frak_l(), u.scale(c((m + n) as f64, 0.0)));
            }
        }
        for k in 0..=4 {
            assert!(mono(k, k).op_l().is_zero());
        }
        assert_eq!(mono(2, 1).op_l_power(2).unwrap(), mono(2, 1));
        assert_eq!(mono(0, 2).op_l_power(3).unwrap(), mono(0, 2).scale(c(-8.0, 0.0)));
        assert!(mono(1, 0).op_l_power(0).is_err());
        assert!(mono(0, 0).op_frak_l().is_zero());
    }

    #[test]
    fn evaluation() {
        let u = mono(2, 1);
        let z = ComplexPoint::new(0.5, 0.0).unwrap();
        assert_eq!(u.eval(z).unwrap(), c(0.125, 0.0));

        let w = BiSeries::from_fn(8, |m, n| c(m as f64 + 0.25, n as f64 - 1.5)).unwrap();
        let origin = ComplexPoint::new(0.0, 0.0).unwrap();
        assert_eq!(w.eval(origin).unwrap(), w.coeff(0, 0));

        let outside = ComplexPoint::new(0.8, 0.6).unwrap();
        assert!(matches!(u.eval(outside), Err(Error::Domain { .. })));
    }

    #[test]
    fn analytic_series_basics() {
        let a = AnalyticSeries::new(vec![c(1.5, -2.0), c(1.0, 0.0), c(0.0, 3.0)], 6).unwrap();
        assert_eq!(a.degree_cap(), 6);
        assert_eq!(a.coeffs().len(), 7);
        assert_eq!(a.eval(ZERO), c(1.5, -2.0));
        assert_eq!(a.degree(), Some(2));
        assert_eq!(a.derivative().coeff(1), c(0.0, 6.0));
        assert!(AnalyticSeries::new(vec![ZERO; 4], 2).is_err());
        assert!(AnalyticSeries::new(vec![c(f64::NAN, 0.0)], 2).is_err());
    }

    #[test]
    fn embeddings_occupy_one_axis() {
        let a = AnalyticSeries::new(vec![c(1.0, 0.0), c(2.0, 1.0), c(0.5, -0.5)], 5).unwrap();
        let e = BiSeries::embed(&a);
        let anti = BiSeries::embed_anti(&a);
        let conj = BiSeries::embed_conj(&a);
        for m in 0..=5 {
            for n in 1..=5 {
                assert_eq!(e.coeff(m, n), ZERO);
                assert_eq!(anti.coeff(n, m), ZERO);
            }
        }
        assert_eq!(anti.coeff(0, 1), c(2.0, 1.0));
        assert_eq!(conj.coeff(0, 1), c(2.0, -1.0));
    }

    #[test]
    fn complex_point_polar() {
        let p = ComplexPoint::from_polar(0.75, 5.0).unwrap();
        assert!((p.modulus() - 0.75).abs() <= 1e-14);
        assert!((p.arg() - 5.0).abs() < 1e-14);
        assert!(ComplexPoint::new(f64::INFINITY, 0.0).is_err());
        assert!(ComplexPoint::from_polar(-1.0, 0.0).is_err());
        let q = ComplexPoint::new(-1e-300, -0.0).unwrap();
        assert!((0.0..TAU).contains(&q.arg()));
    }

    #[test]
    fn fd_wirtinger_on_simple_maps() {
        let z = ComplexPoint::new(0.3, 0.1).unwrap();
        let cfg = FdConfig::default();
        let (dz, dzb) = fd_wirtinger(|w| w * w, z, &cfg).unwrap();
        assert!((dz - c(0.6, 0.2)).norm() < 1e-8);
        assert!(dzb.norm() < 1e-8);

        let (dz, dzb) = fd_wirtinger(|w| w.conj(), z, &cfg).unwrap();
        assert!(dz.norm() < 1e-8);
        assert!((dzb - c(1.0, 0.0)).norm() < 1e-8);
    }

    #[test]
    fn fd_rejects_bad_steps() {
        let near_edge = ComplexPoint::new(0.99999, 0.0).unwrap();
        assert!(fd_wirtinger(|w| w, near_edge, &FdConfig::default()).is_err());
        let big = FdConfig {
            step: 0.1,
            ..FdConfig::default()
        };
        assert!(big.validate().is_err());
    }
}
