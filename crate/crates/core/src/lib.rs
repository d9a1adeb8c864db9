//! Log-polyharmonic mappings of the unit disk.
//!
//! A mapping `F = f(z) h(z̄) Π_k G(z)^{λ_k |z|^{2(k-1)}}` is handled through
//! `log F`, an exact truncated series in `z` and `z̄`. On top of that carrier
//! the crate provides the Wirtinger operator calculus, closed-form Jacobians,
//! starlike and convex indicators on circles, univalence screening and
//! convexity-radius scans.

pub mod cli;
pub mod error;
pub mod geometry;
pub mod grid;
pub mod identities;
pub mod mappings;
pub mod random;
pub mod report;
pub mod specfile;
pub mod wirtinger;

pub use error::{Error, Result};
pub use wirtinger::{AnalyticSeries, BiSeries, ComplexPoint, C64};
