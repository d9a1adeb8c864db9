//! JSON mapping specifications.
//!
//! ```json
//! {
//!   "degree_cap": 32,
//!   "log_f": [[0.1, 0.0]],
//!   "log_h": [[0.0, 0.0]],
//!   "log_G": { "a": [[0, 0], [1, 0]], "b": [[0, 0], [0, 0], [0.2, 0]] },
//!   "lambda": [[0, 0], [1, 0]]
//! }
//! ```
//!
//! Coefficients are `[re, im]` pairs, lowest degree first. `log_f` and
//! `log_h` default to zero. Instead of `log_G` and `lambda` a document may
//! give `parts`, the harmonic parts `G_1 … G_p` of a polyharmonic map.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mappings::{HarmonicLogMap, LphgSpec, PolyharmonicSpec};
use crate::wirtinger::{AnalyticSeries, BiSeries, C64, DEFAULT_DEGREE_CAP};

pub type Coefficients = Vec<[f64; 2]>;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HarmonicFile {
    pub a: Coefficients,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub b: Coefficients,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MappingSpecFile {
    #[serde(default = "default_cap")]
    pub degree_cap: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub log_f: Option<Coefficients>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub log_h: Option<Coefficients>,
    #[serde(rename = "log_G", default, skip_serializing_if = "Option::is_none")]
    pub log_g: Option<HarmonicFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Coefficients>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parts: Option<Vec<HarmonicFile>>,
}

fn default_cap() -> usize {
    DEFAULT_DEGREE_CAP
}

/// A validated specification.
#[derive(Clone, Debug, PartialEq)]
pub enum MappingDocument {
    Class(LphgSpec),
    Polyharmonic(PolyharmonicSpec),
}

impl MappingDocument {
    pub fn degree_cap(&self) -> usize {
        match self {
            MappingDocument::Class(s) => s.degree_cap(),
            MappingDocument::Polyharmonic(s) => s.degree_cap(),
        }
    }

    /// `log F` for a class member, the assembled map for raw parts.
    pub fn primary_series(&self) -> Result<BiSeries> {
        match self {
            MappingDocument::Class(s) => s.assemble_log_f(),
            MappingDocument::Polyharmonic(s) => s.assemble(),
        }
    }

    pub fn log_g_series(&self) -> Option<BiSeries> {
        match self {
            MappingDocument::Class(s) => Some(s.log_g().to_series()),
            MappingDocument::Polyharmonic(_) => None,
        }
    }

    pub fn class(&self) -> Option<&LphgSpec> {
        match self {
            MappingDocument::Class(s) => Some(s),
            MappingDocument::Polyharmonic(_) => None,
        }
    }
}

fn schema(msg: impl Into<String>) -> Error {
    Error::Schema(msg.into())
}

fn to_complex(field: &str, coeffs: &Coefficients) -> Result<Vec<C64>> {
    if coeffs.is_empty() {
        return Err(schema(format!("`{field}` must not be empty")));
    }
    Ok(coeffs.iter().map(|[re, im]| C64::new(*re, *im)).collect())
}

fn analytic(field: &str, coeffs: &Coefficients, cap: usize) -> Result<AnalyticSeries> {
    AnalyticSeries::new(to_complex(field, coeffs)?, cap).map_err(|e| schema(format!("`{field}`: {e}")))
}

fn harmonic(field: &str, file: &HarmonicFile, cap: usize) -> Result<HarmonicLogMap> {
    let a = analytic(&format!("{field}.a"), &file.a, cap)?;
    let b = if file.b.is_empty() {
        AnalyticSeries::zero(cap)
    } else {
        analytic(&format!("{field}.b"), &file.b, cap)?
    };
    HarmonicLogMap::new(a, b)
}

fn trimmed(coeffs: &[C64]) -> Coefficients {
    let len = coeffs
        .iter()
        .rposition(|c| *c != C64::new(0.0, 0.0))
        .map_or(1, |i| i + 1);
    coeffs[..len].iter().map(|c| [c.re, c.im]).collect()
}

fn harmonic_file(g: &HarmonicLogMap) -> HarmonicFile {
    let b = if g.b().is_zero() {
        Vec::new()
    } else {
        trimmed(g.b().coeffs())
    };
    HarmonicFile {
        a: trimmed(g.a().coeffs()),
        b,
    }
}

impl MappingSpecFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| schema(format!("invalid spec JSON: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("spec files always serialize")
    }

    pub fn validate(&self) -> Result<MappingDocument> {
        let cap = self.degree_cap;
        if cap == 0 || cap > crate::wirtinger::MAX_DEGREE_CAP {
            return Err(schema(format!(
                "`degree_cap` must lie in 1..={}, got {cap}",
                crate::wirtinger::MAX_DEGREE_CAP
            )));
        }
        match (&self.parts, &self.log_g, &self.lambda) {
            (Some(parts), None, None) => {
                if self.log_f.is_some() || self.log_h.is_some() {
                    return Err(schema("`parts` cannot be combined with `log_f` or `log_h`"));
                }
                if parts.is_empty() {
                    return Err(schema("`parts` must not be empty"));
                }
                let parts = parts
                    .iter()
                    .enumerate()
                    .map(|(k, g)| harmonic(&format!("parts[{k}]"), g, cap))
                    .collect::<Result<Vec<_>>>()?;
                let spec = PolyharmonicSpec::new(parts)?;
                spec.assemble()?;
                Ok(MappingDocument::Polyharmonic(spec))
            }
            (None, Some(log_g), Some(lambda)) => {
                let opt = |field: &str, c: &Option<Coefficients>| match c {
                    Some(c) => analytic(field, c, cap),
                    None => Ok(AnalyticSeries::zero(cap)),
                };
                let spec = LphgSpec::new(
                    opt("log_f", &self.log_f)?,
                    opt("log_h", &self.log_h)?,
                    harmonic("log_G", log_g, cap)?,
                    to_complex("lambda", lambda)?,
                )?;
                spec.assemble_log_f()?;
                Ok(MappingDocument::Class(spec))
            }
            (Some(_), _, _) => Err(schema("`parts` cannot be combined with `log_G`/`lambda`")),
            (None, Some(_), None) => Err(schema("`lambda` is required with `log_G`")),
            (None, None, Some(_)) => Err(schema("`log_G` is required with `lambda`")),
            (None, None, None) => Err(schema("either `log_G` with `lambda`, or `parts`, is required")),
        }
    }

    pub fn from_document(doc: &MappingDocument) -> Self {
        match doc {
            MappingDocument::Class(s) => {
                let opt = |a: &AnalyticSeries| (!a.is_zero()).then(|| trimmed(a.coeffs()));
                MappingSpecFile {
                    degree_cap: s.degree_cap(),
                    log_f: opt(s.log_f()),
                    log_h: opt(s.log_h()),
                    log_g: Some(harmonic_file(s.log_g())),
                    lambda: Some(s.lambdas().iter().map(|c| [c.re, c.im]).collect()),
                    parts: None,
                }
            }
            MappingDocument::Polyharmonic(s) => MappingSpecFile {
                degree_cap: s.degree_cap(),
                log_f: None,
                log_h: None,
                log_g: None,
                lambda: None,
                parts: Some(s.parts().iter().map(harmonic_file).collect()),
            },
        }
    }
}

pub fn parse_document(text: &str) -> Result<MappingDocument> {
    MappingSpecFile::parse(text)?.validate()
}

/// Reads and validates a spec file; I/O failures map to schema errors so
/// callers can report every bad input the same way.
pub fn load_document(path: &Path) -> Result<MappingDocument> {
    let text = std::fs::read_to_string(path).map_err(|e| schema(format!("cannot read {}: {e}", path.display())))?;
    parse_document(&text)
}
