//! C ABI for `graphcurv`.
//!
//! Graphs are opaque [`GcGraph`] handles created by `gc_graph_*` constructors
//! and released with [`gc_graph_free`]. Every fallible function returns a
//! [`GcStatus`]; on failure a message is available from
//! [`gc_last_error_message`] on the calling thread. Strings returned through
//! `char **` out-parameters are owned by the caller and released with
//! [`gc_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use graphcurv::curvature::{curvature_function, Dimension};
use graphcurv::semigroup::{kato_condition_check, kato_constant, KatoVariant, DEFAULT_QUAD_TOL};
use graphcurv::spectral::{cheeger_constant, ground_state, lambda1};
use graphcurv::theorems::{run_suite, Suite, VerifyConfig};
use graphcurv::{paper_example, Error, MeasuredWeightedGraph};

/// Opaque graph handle.
pub struct GcGraph {
    inner: MeasuredWeightedGraph,
}

/// Status codes. Values 0 to 4 match the `graphcurv` CLI exit codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GcStatus {
    Ok = 0,
    CheckFailed = 1,
    HypothesisUnsatisfied = 2,
    InvalidInput = 3,
    Numerical = 4,
    NullPointer = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GcKatoVariant {
    A = 0,
    B = 1,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

struct Failure(GcStatus);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = if e.is_input_error() {
            GcStatus::InvalidInput
        } else {
            GcStatus::Numerical
        };
        set_error(format!("{}: {e}", e.kind()));
        Failure(status)
    }
}

fn null(what: &str) -> Failure {
    set_error(format!("null pointer: {what}"));
    Failure(GcStatus::NullPointer)
}

fn invalid(msg: impl Into<String>) -> Failure {
    set_error(msg.into());
    Failure(GcStatus::InvalidInput)
}

fn guard(body: impl FnOnce() -> Result<GcStatus, Failure>) -> GcStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(s)) => s,
        Ok(Err(Failure(s))) => s,
        Err(_) => {
            set_error("internal panic".into());
            GcStatus::Panic
        }
    }
}

unsafe fn graph_ref<'a>(g: *const GcGraph) -> Result<&'a MeasuredWeightedGraph, Failure> {
    // SAFETY: the caller passes a handle obtained from a gc_graph constructor.
    unsafe { g.as_ref() }.map(|h| &h.inner).ok_or_else(|| null("graph"))
}

unsafe fn slice_in<'a>(p: *const f64, len: usize, expected: usize, what: &str) -> Result<&'a [f64], Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    if len != expected {
        return Err(invalid(format!(
            "{what} has length {len}, graph has {expected} vertices"
        )));
    }
    // SAFETY: the caller guarantees `p` points to `len` readable doubles.
    Ok(unsafe { std::slice::from_raw_parts(p, len) })
}

unsafe fn slice_out<'a>(p: *mut f64, len: usize, expected: usize, what: &str) -> Result<&'a mut [f64], Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    if len != expected {
        return Err(invalid(format!(
            "{what} has length {len}, graph has {expected} vertices"
        )));
    }
    // SAFETY: the caller guarantees `p` points to `len` writable doubles.
    Ok(unsafe { std::slice::from_raw_parts_mut(p, len) })
}

unsafe fn write<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(what));
    }
    // SAFETY: non-null and supplied by the caller as writable.
    unsafe { out.write(value) };
    Ok(())
}

fn dimension(n: f64) -> Result<Dimension, Failure> {
    if n == f64::INFINITY {
        Ok(Dimension::INFINITE)
    } else {
        Ok(Dimension::new(n)?)
    }
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("json has no interior nul").into_raw()
}

/// Parses a graph document. `json` must be a nul-terminated UTF-8 string.
///
/// # Safety
/// `json` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gc_graph_from_json(json: *const c_char, out: *mut *mut GcGraph) -> GcStatus {
    guard(|| {
        if json.is_null() {
            return Err(null("json"));
        }
        // SAFETY: checked non-null; caller guarantees nul termination.
        let bytes = unsafe { CStr::from_ptr(json) }.to_bytes();
        let g = MeasuredWeightedGraph::from_json(bytes)?;
        unsafe { write(out, Box::into_raw(Box::new(GcGraph { inner: g })), "out")? };
        Ok(GcStatus::Ok)
    })
}

/// Three-vertex example graph with parameter `eps > 0`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gc_graph_paper_example(eps: f64, out: *mut *mut GcGraph) -> GcStatus {
    guard(|| {
        let g = paper_example(eps)?;
        unsafe { write(out, Box::into_raw(Box::new(GcGraph { inner: g })), "out")? };
        Ok(GcStatus::Ok)
    })
}

/// Releases a graph. Null is ignored.
///
/// # Safety
/// `g` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn gc_graph_free(g: *mut GcGraph) {
    if !g.is_null() {
        // SAFETY: handle came from Box::into_raw in a constructor.
        drop(unsafe { Box::from_raw(g) });
    }
}

/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gc_graph_vertex_count(g: *const GcGraph, out: *mut usize) -> GcStatus {
    guard(|| {
        let g = unsafe { graph_ref(g)? };
        unsafe { write(out, g.len(), "out")? };
        Ok(GcStatus::Ok)
    })
}

/// Serializes the graph. Release the string with [`gc_string_free`].
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gc_graph_to_json(g: *const GcGraph, out: *mut *mut c_char) -> GcStatus {
    guard(|| {
        let g = unsafe { graph_ref(g)? };
        unsafe { write(out, into_c_string(g.to_json()), "out")? };
        Ok(GcStatus::Ok)
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn gc_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: produced by CString::into_raw.
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Curvature at every vertex for dimension `n` (`INFINITY` allowed), written
/// to `out_rho` in vertex order.
///
/// # Safety
/// `g` must be a live handle; `out_rho` must hold `len` doubles.
#[no_mangle]
pub unsafe extern "C" fn gc_curvature(g: *const GcGraph, n: f64, tol: f64, out_rho: *mut f64, len: usize) -> GcStatus {
    guard(|| {
        let g = unsafe { graph_ref(g)? };
        let out = unsafe { slice_out(out_rho, len, g.len(), "out_rho")? };
        let profile = curvature_function(g, dimension(n)?, tol)?;
        out.copy_from_slice(&profile.rho);
        Ok(GcStatus::Ok)
    })
}

/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gc_lambda1(g: *const GcGraph, out: *mut f64) -> GcStatus {
    guard(|| {
        let g = unsafe { graph_ref(g)? };
        unsafe { write(out, lambda1(g)?, "out")? };
        Ok(GcStatus::Ok)
    })
}

/// Lowest eigenvalue of `L/2 + rho` and, if `out_phi` is non-null, its
/// positive eigenfunction.
///
/// # Safety
/// `rho` and `out_phi` (if non-null) must hold `len` doubles.
#[no_mangle]
pub unsafe extern "C" fn gc_ground_state(
    g: *const GcGraph,
    rho: *const f64,
    len: usize,
    out_e: *mut f64,
    out_phi: *mut f64,
) -> GcStatus {
    guard(|| {
        let g = unsafe { graph_ref(g)? };
        let rho = unsafe { slice_in(rho, len, g.len(), "rho")? };
        let gs = ground_state(g, rho)?;
        if !out_phi.is_null() {
            unsafe { slice_out(out_phi, len, g.len(), "out_phi")? }.copy_from_slice(&gs.phi);
        }
        unsafe { write(out_e, gs.e, "out_e")? };
        Ok(GcStatus::Ok)
    })
}

/// Exact Cheeger constant (at most 24 vertices).
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gc_cheeger(g: *const GcGraph, out: *mut f64) -> GcStatus {
    guard(|| {
        let g = unsafe { graph_ref(g)? };
        unsafe { write(out, cheeger_constant(g)?, "out")? };
        Ok(GcStatus::Ok)
    })
}

/// Kato constant of the non-negative potential `w` on `[0, horizon]`.
///
/// # Safety
/// `w` must hold `len` doubles and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn gc_kato_constant(
    g: *const GcGraph,
    w: *const f64,
    len: usize,
    horizon: f64,
    out: *mut f64,
) -> GcStatus {
    guard(|| {
        let g = unsafe { graph_ref(g)? };
        let w = unsafe { slice_in(w, len, g.len(), "w")? };
        let k = kato_constant(g, w, horizon, DEFAULT_QUAD_TOL)?;
        unsafe { write(out, k.value, "out")? };
        Ok(GcStatus::Ok)
    })
}

/// Kato condition for `(rho - k)_-`. Writes the Kato constant and whether
/// it is below the chosen threshold.
///
/// # Safety
/// `rho` must hold `len` doubles; `out_admissible` and `out_value` must be valid.
#[no_mangle]
pub unsafe extern "C" fn gc_kato_check(
    g: *const GcGraph,
    rho: *const f64,
    len: usize,
    k: f64,
    t: f64,
    variant: GcKatoVariant,
    strict: bool,
    out_admissible: *mut bool,
    out_value: *mut f64,
) -> GcStatus {
    guard(|| {
        let g = unsafe { graph_ref(g)? };
        let rho = unsafe { slice_in(rho, len, g.len(), "rho")? };
        let variant = match variant {
            GcKatoVariant::A => KatoVariant::A,
            GcKatoVariant::B => KatoVariant::B,
        };
        let r = kato_condition_check(g, rho, k, t, variant, strict)?;
        unsafe {
            write(out_admissible, r.admissible, "out_admissible")?;
            write(out_value, r.value, "out_value")?;
        }
        Ok(GcStatus::Ok)
    })
}

/// Runs a verification suite (`"all"` or a single check name) and writes
/// one JSON report per line to `out_json`. A null `rho` means the curvature
/// profile for dimension `n`. Returns `CheckFailed` or
/// `HypothesisUnsatisfied` with the reports still written.
///
/// # Safety
/// `suite` must be a valid C string; `rho` is null or holds `len` doubles;
/// `out_json` must be valid.
#[no_mangle]
pub unsafe extern "C" fn gc_verify(
    g: *const GcGraph,
    suite: *const c_char,
    rho: *const f64,
    len: usize,
    k: f64,
    t: f64,
    n: f64,
    samples: usize,
    seed: u64,
    out_json: *mut *mut c_char,
) -> GcStatus {
    guard(|| {
        let g = unsafe { graph_ref(g)? };
        if suite.is_null() {
            return Err(null("suite"));
        }
        if out_json.is_null() {
            return Err(null("out_json"));
        }
        // SAFETY: checked non-null; caller guarantees nul termination.
        let suite: Suite = unsafe { CStr::from_ptr(suite) }
            .to_str()
            .map_err(|_| invalid("suite is not UTF-8"))?
            .parse()?;
        let dim = dimension(n)?;
        let mut cfg = VerifyConfig::new(k, t)?;
        cfg.n = dim;
        cfg.samples = samples;
        cfg.seed = seed;
        cfg.validate()?;
        let owned;
        let rho = if rho.is_null() {
            owned = curvature_function(g, dim, graphcurv::curvature::DEFAULT_TOL)?.rho;
            &owned[..]
        } else {
            unsafe { slice_in(rho, len, g.len(), "rho")? }
        };
        let reports = run_suite(g, rho, &cfg, suite)?;
        let text: String = reports.iter().map(|r| r.to_json_line() + "\n").collect();
        unsafe { write(out_json, into_c_string(text), "out_json")? };
        if reports.iter().any(|r| r.hypotheses_satisfied && !r.passed) {
            Ok(GcStatus::CheckFailed)
        } else if reports.iter().any(|r| !r.hypotheses_satisfied) {
            Ok(GcStatus::HypothesisUnsatisfied)
        } else {
            Ok(GcStatus::Ok)
        }
    })
}

/// Message for the most recent failure on this thread, or null. The pointer
/// stays valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn gc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}
