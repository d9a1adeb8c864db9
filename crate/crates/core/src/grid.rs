//! Polar sampling grids over the punctured unit disk.

use std::f64::consts::TAU;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::wirtinger::ComplexPoint;

pub const DEFAULT_R_MIN: f64 = 1e-3;
pub const DEFAULT_R_MAX: f64 = 0.99;
pub const DEFAULT_R_STEP: f64 = 0.01;
pub const DEFAULT_ANGLES: usize = 1024;
pub const MIN_ANGLES: usize = 64;

/// Concentric circles `|z| = r` sampled at `M` uniform angles `2πj/M`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScanGrid {
    r_values: Vec<f64>,
    angles: usize,
}

impl ScanGrid {
    pub fn new(r_values: Vec<f64>, angles: usize) -> Result<Self> {
        if angles < MIN_ANGLES {
            return Err(Error::InvalidArgument(format!(
                "at least {MIN_ANGLES} angles per circle are required, got {angles}"
            )));
        }
        if r_values.is_empty() {
            return Err(Error::InvalidArgument("grid has no radii".into()));
        }
        if let Some(bad) = r_values.iter().find(|r| !(**r > 0.0 && **r < 1.0)) {
            return Err(Error::InvalidArgument(format!("radius {bad} is not in (0, 1)")));
        }
        if r_values.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::InvalidArgument("radii must be strictly increasing".into()));
        }
        Ok(ScanGrid { r_values, angles })
    }

    /// Radii `r_min + k·r_step` up to `r_max` inclusive.
    pub fn uniform(r_min: f64, r_max: f64, r_step: f64, angles: usize) -> Result<Self> {
        if !(r_step > 0.0 && r_step.is_finite()) {
            return Err(Error::InvalidArgument(format!("radius step {r_step} must be positive")));
        }
        if !(r_min.is_finite() && r_max.is_finite()) || r_max < r_min {
            return Err(Error::InvalidArgument(format!(
                "radius range [{r_min}, {r_max}] is empty"
            )));
        }
        let count = ((r_max - r_min) / r_step + 1e-9).floor() as usize + 1;
        // Rounded to 12 decimals so radii print as typed (0.851, not 0.8510000000000001).
        let r_values = (0..count)
            .map(|k| ((r_min + k as f64 * r_step) * 1e12).round() / 1e12)
            .collect();
        Self::new(r_values, angles)
    }

    pub fn radii(&self) -> &[f64] {
        &self.r_values
    }

    pub fn angles(&self) -> usize {
        self.angles
    }

    pub fn angle(&self, j: usize) -> f64 {
        TAU * j as f64 / self.angles as f64
    }

    pub fn len(&self) -> usize {
        self.r_values.len() * self.angles
    }

    pub fn is_empty(&self) -> bool {
        self.r_values.is_empty()
    }

    /// Keeps the radii `≤ r_cap`; `None` when nothing is left.
    pub fn capped(&self, r_cap: f64) -> Option<ScanGrid> {
        let r_values: Vec<f64> = self.r_values.iter().copied().filter(|r| *r <= r_cap).collect();
        (!r_values.is_empty()).then_some(ScanGrid {
            r_values,
            angles: self.angles,
        })
    }

    pub fn point(&self, i: usize, j: usize) -> ComplexPoint {
        ComplexPoint::from_polar(self.r_values[i], self.angle(j)).expect("grid radii and angles are finite")
    }

    /// `(r, t)` of flat index `idx` (radius-major).
    pub fn coords(&self, idx: usize) -> (f64, f64) {
        (self.r_values[idx / self.angles], self.angle(idx % self.angles))
    }

    /// Evaluates `f` at every grid point, radius-major. Singular points become
    /// `None`; any other error aborts the evaluation.
    pub fn evaluate<F>(&self, f: F) -> Result<Vec<Option<f64>>>
    where
        F: Fn(ComplexPoint) -> Result<f64> + Sync,
    {
        let rows: Vec<Vec<Option<f64>>> = (0..self.r_values.len())
            .into_par_iter()
            .map(|i| {
                (0..self.angles)
                    .map(|j| match f(self.point(i, j)) {
                        Ok(v) => Ok(Some(v)),
                        Err(e) if e.is_singular() => Ok(None),
                        Err(e) => Err(e),
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(rows.into_iter().flatten().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniform_radii() {
        let g = ScanGrid::uniform(0.001, 0.41421356237, 0.01, 64).unwrap();
        assert_eq!(g.radii().len(), 42);
        assert_eq!(g.radii()[0], 0.001);
        assert!((g.radii()[41] - 0.411).abs() < 1e-12);
        assert_eq!(g.len(), 42 * 64);
    }

    #[test]
    fn rejects_bad_grids() {
        assert!(ScanGrid::new(vec![0.1, 0.1], 64).is_err());
        assert!(ScanGrid::new(vec![0.5, 1.0], 64).is_err());
        assert!(ScanGrid::new(vec![0.5], 32).is_err());
        assert!(ScanGrid::uniform(0.5, 0.4, 0.01, 64).is_err());
    }

    #[test]
    fn cap_filters_radii() {
        let g = ScanGrid::uniform(0.1, 0.9, 0.1, 64).unwrap();
        assert_eq!(g.capped(0.35).unwrap().radii().len(), 3);
        assert!(g.capped(0.05).is_none());
    }
}
