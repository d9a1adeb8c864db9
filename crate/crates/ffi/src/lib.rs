//! C ABI over `logpoly`.
//!
//! Mappings are loaded from the same JSON documents the CLI reads and are
//! passed around as opaque `LpMapping` handles. Every function returns an
//! `LpStatus`; on failure a message for the calling thread is available from
//! `lp_last_error_message` until the next call on that thread. Panics never
//! cross the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use logpoly::geometry::{self, convexity_radius};
use logpoly::grid::ScanGrid;
use logpoly::mappings::PreparedLphg;
use logpoly::specfile::{parse_document, MappingDocument};
use logpoly::{BiSeries, ComplexPoint, Error};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LpStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Schema = 3,
    Domain = 4,
    Singular = 5,
    InvalidArgument = 6,
    Degenerate = 7,
    Precondition = 8,
    DegreeOverflow = 9,
    Panic = 10,
    Internal = 11,
}

/// Which series an indicator or scan is applied to.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LpTarget {
    /// `log F` (the assembled map for `parts` documents).
    LogF = 0,
    LogG = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LpIndicator {
    Starlike = 0,
    Convex = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct LpComplex {
    pub re: f64,
    pub im: f64,
}

/// Opaque mapping handle.
pub struct LpMapping {
    doc: MappingDocument,
    primary: BiSeries,
    log_g: Option<BiSeries>,
    prepared: Option<PreparedLphg>,
}

impl LpMapping {
    fn series(&self, target: LpTarget) -> Result<&BiSeries, Error> {
        match target {
            LpTarget::LogF => Ok(&self.primary),
            LpTarget::LogG => self
                .log_g
                .as_ref()
                .ok_or_else(|| Error::Precondition("the mapping has no log G".into())),
        }
    }

    fn prepared(&self) -> Result<&PreparedLphg, Error> {
        self.prepared
            .as_ref()
            .ok_or_else(|| Error::Precondition("this needs a spec with log_G and lambda".into()))
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: &str) {
    let text = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(text));
}

fn status_of(err: &Error) -> LpStatus {
    match err {
        Error::Schema(_) => LpStatus::Schema,
        Error::Domain { .. } => LpStatus::Domain,
        Error::Singular { .. } => LpStatus::Singular,
        Error::InvalidArgument(_) | Error::NonFinite(_) | Error::CapMismatch { .. } => LpStatus::InvalidArgument,
        Error::Degenerate(_) => LpStatus::Degenerate,
        Error::Precondition(_) => LpStatus::Precondition,
        Error::DegreeOverflow(_) => LpStatus::DegreeOverflow,
        Error::Io(_) => LpStatus::Internal,
    }
}

enum Failure {
    Null(&'static str),
    Utf8,
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn guard(body: impl FnOnce() -> Result<(), Failure>) -> LpStatus {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => LpStatus::Ok,
        Ok(Err(Failure::Null(what))) => {
            set_last_error(&format!("null pointer passed as {what}"));
            LpStatus::NullPointer
        }
        Ok(Err(Failure::Utf8)) => {
            set_last_error("input is not valid UTF-8");
            LpStatus::InvalidUtf8
        }
        Ok(Err(Failure::Lib(e))) => {
            set_last_error(&e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_last_error("internal panic");
            LpStatus::Panic
        }
    }
}

unsafe fn handle<'a>(ptr: *const LpMapping) -> Result<&'a LpMapping, Failure> {
    ptr.as_ref().ok_or(Failure::Null("mapping"))
}

unsafe fn output<'a, T>(ptr: *mut T) -> Result<&'a mut T, Failure> {
    ptr.as_mut().ok_or(Failure::Null("output"))
}

fn point(re: f64, im: f64) -> Result<ComplexPoint, Failure> {
    Ok(ComplexPoint::new(re, im)?)
}

/// Parses a JSON mapping spec and stores a new handle in `*out`.
/// Release it with `lp_mapping_free`.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lp_mapping_from_json(json: *const c_char, out: *mut *mut LpMapping) -> LpStatus {
    guard(|| {
        if json.is_null() {
            return Err(Failure::Null("json"));
        }
        let out = output(out)?;
        let text = CStr::from_ptr(json).to_str().map_err(|_| Failure::Utf8)?;
        let doc = parse_document(text)?;
        let primary = doc.primary_series()?;
        let log_g = doc.log_g_series();
        let prepared = doc.class().map(|s| s.prepare()).transpose()?;
        *out = Box::into_raw(Box::new(LpMapping {
            doc,
            primary,
            log_g,
            prepared,
        }));
        Ok(())
    })
}

/// Releases a handle; null is ignored.
///
/// # Safety
/// `mapping` must come from `lp_mapping_from_json` and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn lp_mapping_free(mapping: *mut LpMapping) {
    if !mapping.is_null() {
        drop(Box::from_raw(mapping));
    }
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn lp_mapping_degree_cap(mapping: *const LpMapping, out: *mut usize) -> LpStatus {
    guard(|| {
        *output(out)? = handle(mapping)?.doc.degree_cap();
        Ok(())
    })
}

/// Polyharmonic order `p`: the number of weights or harmonic parts.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn lp_mapping_order(mapping: *const LpMapping, out: *mut usize) -> LpStatus {
    guard(|| {
        let m = handle(mapping)?;
        *output(out)? = match &m.doc {
            MappingDocument::Class(s) => s.order(),
            MappingDocument::Polyharmonic(s) => s.order(),
        };
        Ok(())
    })
}

/// Evaluates the target series at `re + i·im`, `|z| < 1`.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn lp_eval(
    mapping: *const LpMapping,
    target: LpTarget,
    re: f64,
    im: f64,
    out: *mut LpComplex,
) -> LpStatus {
    guard(|| {
        let v = handle(mapping)?.series(target)?.eval(point(re, im)?)?;
        *output(out)? = LpComplex { re: v.re, im: v.im };
        Ok(())
    })
}

/// `F(z) = exp(log F(z))`; needs a class spec.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn lp_eval_f(mapping: *const LpMapping, re: f64, im: f64, out: *mut LpComplex) -> LpStatus {
    guard(|| {
        let v = handle(mapping)?.prepared()?.eval_f(point(re, im)?)?;
        *output(out)? = LpComplex { re: v.re, im: v.im };
        Ok(())
    })
}

/// `J_{log F} = |u_z|² − |u_z̄|²` from the symbolic derivatives, `0 < |z| < 1`.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn lp_jacobian_direct(mapping: *const LpMapping, re: f64, im: f64, out: *mut f64) -> LpStatus {
    guard(|| {
        *output(out)? = handle(mapping)?.prepared()?.jacobian_direct(point(re, im)?)?;
        Ok(())
    })
}

/// `J_{log F}` from the closed form in `f`, `h`, `log G` and the weights.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn lp_jacobian_closed(mapping: *const LpMapping, re: f64, im: f64, out: *mut f64) -> LpStatus {
    guard(|| {
        *output(out)? = handle(mapping)?.prepared()?.jacobian_closed(point(re, im)?)?;
        Ok(())
    })
}

/// Starlike `Re(𝓛u/u)` or convex `Re(−∂²_t u / 𝓛u)` indicator at `z`.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn lp_indicator(
    mapping: *const LpMapping,
    target: LpTarget,
    kind: LpIndicator,
    re: f64,
    im: f64,
    out: *mut f64,
) -> LpStatus {
    guard(|| {
        let u = handle(mapping)?.series(target)?;
        let z = point(re, im)?;
        *output(out)? = match kind {
            LpIndicator::Starlike => geometry::starlike_indicator(u, z)?,
            LpIndicator::Convex => geometry::convex_indicator(u, z)?,
        };
        Ok(())
    })
}

/// Largest radius of the grid `r_min + k·r_step ≤ r_max` (with `angles`
/// samples per circle) up to which every circle has convex indicator `≥ −tol`.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn lp_convexity_radius(
    mapping: *const LpMapping,
    target: LpTarget,
    r_min: f64,
    r_max: f64,
    r_step: f64,
    angles: usize,
    tol: f64,
    out: *mut f64,
) -> LpStatus {
    guard(|| {
        let u = handle(mapping)?.series(target)?;
        let grid = ScanGrid::uniform(r_min, r_max, r_step, angles)?;
        *output(out)? = convexity_radius(u, &grid, tol)?;
        Ok(())
    })
}

/// Message for the last failed call on this thread, or null. The pointer is
/// valid until the next `lp_*` call on the same thread.
#[no_mangle]
pub extern "C" fn lp_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(std::ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn lp_version() -> *const c_char {
    static VERSION: &CStr = match CStr::from_bytes_with_nul(concat!(env!("CARGO_PKG_VERSION"), "\0").as_bytes()) {
        Ok(v) => v,
        Err(_) => panic!("version string has an interior NUL"),
    };
    VERSION.as_ptr()
}
