//! C ABI over `chroma-core`.
//!
//! Graphs and decisions are opaque heap handles owned by the caller and
//! released with the matching `_free` function. Every entry point returns a
//! [`ChromaStatus`]; on failure [`chroma_last_error`] describes the problem
//! for the calling thread. Panics never cross the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use chroma_core::cli::parse_dimacs;
use chroma_core::pattern::{is_subgraph_free, PatternSpec};
use chroma_core::solver::{
    solve_colouring_H, solve_colouring_S, solve_stable_cut, Certificate, Decision, SolverConfig,
    Verdict,
};
use chroma_core::treedepth::{treedepth_exact, TreedepthResult};
use chroma_core::Graph;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChromaStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    InvalidParams = 3,
    CapExceeded = 4,
    BufferTooSmall = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChromaVerdict {
    Yes = 0,
    No = 1,
    CapExceeded = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChromaFamily {
    /// Graphs without the subdivided H-graph with parameters `m` and `k`.
    H = 0,
    /// Graphs without the subdivided star with parameter `k`.
    S = 1,
}

/// Opaque graph handle.
pub struct ChromaGraph(Graph);

/// Opaque solver result.
pub struct ChromaDecision(Decision);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn fail(status: ChromaStatus, msg: impl Into<String>) -> ChromaStatus {
    set_error(msg);
    status
}

fn guard(f: impl FnOnce() -> ChromaStatus) -> ChromaStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(ChromaStatus::Panic, "internal panic"),
    }
}

fn boxed<T>(out: *mut *mut T, value: T) -> ChromaStatus {
    // SAFETY: callers check `out` for null before computing `value`.
    unsafe { *out = Box::into_raw(Box::new(value)) };
    ChromaStatus::Ok
}

/// Message for the last failed call on this thread. Valid until the next
/// call on the same thread; never null.
#[no_mangle]
pub extern "C" fn chroma_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Builds a graph on `0..n` from `m` edges given as `2*m` endpoint ids.
///
/// # Safety
/// `edges` must point to `2*m` readable values (or be null when `m == 0`);
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn chroma_graph_new(
    n: usize,
    edges: *const u32,
    m: usize,
    out: *mut *mut ChromaGraph,
) -> ChromaStatus {
    guard(|| {
        if out.is_null() || (edges.is_null() && m > 0) {
            return fail(ChromaStatus::NullPointer, "null argument");
        }
        let raw = if m == 0 {
            &[][..]
        } else {
            std::slice::from_raw_parts(edges, 2 * m)
        };
        let pairs: Vec<(usize, usize)> = raw
            .chunks(2)
            .map(|p| (p[0] as usize, p[1] as usize))
            .collect();
        match Graph::new(n, &pairs) {
            Ok(g) => boxed(out, ChromaGraph(g)),
            Err(e) => fail(ChromaStatus::InvalidInput, e.to_string()),
        }
    })
}

/// Parses DIMACS `.col` text.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn chroma_graph_from_dimacs(
    text: *const c_char,
    out: *mut *mut ChromaGraph,
) -> ChromaStatus {
    guard(|| {
        if text.is_null() || out.is_null() {
            return fail(ChromaStatus::NullPointer, "null argument");
        }
        let Ok(text) = CStr::from_ptr(text).to_str() else {
            return fail(ChromaStatus::InvalidInput, "input is not UTF-8");
        };
        match parse_dimacs(text) {
            Ok(g) => boxed(out, ChromaGraph(g)),
            Err(e) => fail(ChromaStatus::InvalidInput, e.to_string()),
        }
    })
}

/// # Safety
/// `g` must come from a `chroma_graph_*` constructor and not be freed yet.
#[no_mangle]
pub unsafe extern "C" fn chroma_graph_free(g: *mut ChromaGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live graph handle or null.
#[no_mangle]
pub unsafe extern "C" fn chroma_graph_vertex_count(g: *const ChromaGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.vertex_count())
}

/// # Safety
/// `g` must be a live graph handle or null.
#[no_mangle]
pub unsafe extern "C" fn chroma_graph_edge_count(g: *const ChromaGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.edge_count())
}

/// Decides `r`-colourability. A cap of 0 selects the default.
///
/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn chroma_solve_colouring(
    g: *const ChromaGraph,
    family: ChromaFamily,
    m: u32,
    k: u32,
    r: u32,
    cap: u32,
    fallback: bool,
    out: *mut *mut ChromaDecision,
) -> ChromaStatus {
    guard(|| {
        let (Some(g), false) = (g.as_ref(), out.is_null()) else {
            return fail(ChromaStatus::NullPointer, "null argument");
        };
        let defaults = SolverConfig::default();
        let cfg = SolverConfig {
            cap: if cap == 0 { defaults.cap } else { cap as usize },
            fallback,
            m: m as usize,
            k: k as usize,
            seed: 0,
        };
        let res = match family {
            ChromaFamily::H => solve_colouring_H(&g.0, r, &cfg),
            ChromaFamily::S => solve_colouring_S(&g.0, r, &cfg),
        };
        match res {
            Ok(d) => boxed(out, ChromaDecision(d)),
            Err(e) => fail(ChromaStatus::InvalidParams, e.to_string()),
        }
    })
}

/// Decides whether some independent set disconnects the graph.
///
/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn chroma_solve_stable_cut(
    g: *const ChromaGraph,
    cap: u32,
    fallback: bool,
    out: *mut *mut ChromaDecision,
) -> ChromaStatus {
    guard(|| {
        let (Some(g), false) = (g.as_ref(), out.is_null()) else {
            return fail(ChromaStatus::NullPointer, "null argument");
        };
        let defaults = SolverConfig::default();
        let cfg = SolverConfig {
            cap: if cap == 0 { defaults.cap } else { cap as usize },
            fallback,
            ..defaults
        };
        match solve_stable_cut(&g.0, &cfg) {
            Ok(d) => boxed(out, ChromaDecision(d)),
            Err(e) => fail(ChromaStatus::InvalidParams, e.to_string()),
        }
    })
}

/// # Safety
/// `d` must be a live decision handle.
#[no_mangle]
pub unsafe extern "C" fn chroma_decision_verdict(d: *const ChromaDecision) -> ChromaVerdict {
    match d.as_ref().map(|d| &d.0.verdict) {
        Some(Verdict::Yes(_)) => ChromaVerdict::Yes,
        Some(Verdict::CapExceeded(_)) => ChromaVerdict::CapExceeded,
        Some(Verdict::No) | None => ChromaVerdict::No,
    }
}

/// Copies the certificate of a Yes decision into `buf`: one colour per vertex
/// id for colourings, the cut vertices for stable cuts. `written` receives the
/// required length even when the buffer is too small.
///
/// # Safety
/// `d` must be a live decision handle; `buf` must hold `len` values;
/// `written` must be writable.
#[no_mangle]
pub unsafe extern "C" fn chroma_decision_certificate(
    d: *const ChromaDecision,
    buf: *mut u32,
    len: usize,
    written: *mut usize,
) -> ChromaStatus {
    guard(|| {
        let (Some(d), false) = (d.as_ref(), written.is_null()) else {
            return fail(ChromaStatus::NullPointer, "null argument");
        };
        let values: Vec<u32> = match &d.0.verdict {
            Verdict::Yes(Certificate::Colouring { colours, .. }) => colours.clone(),
            Verdict::Yes(Certificate::StableCut { vertices }) => {
                vertices.iter().map(|&v| v as u32).collect()
            }
            _ => return fail(ChromaStatus::InvalidParams, "decision has no certificate"),
        };
        *written = values.len();
        if values.len() > len {
            return fail(ChromaStatus::BufferTooSmall, "certificate buffer too small");
        }
        if !values.is_empty() {
            if buf.is_null() {
                return fail(ChromaStatus::NullPointer, "null buffer");
            }
            ptr::copy_nonoverlapping(values.as_ptr(), buf, values.len());
        }
        ChromaStatus::Ok
    })
}

/// The decision as a JSON record. Release with [`chroma_string_free`].
///
/// # Safety
/// `d` must be a live decision handle or null.
#[no_mangle]
pub unsafe extern "C" fn chroma_decision_json(d: *const ChromaDecision) -> *mut c_char {
    match d.as_ref() {
        Some(d) => CString::new(d.0.to_json()).map_or(ptr::null_mut(), CString::into_raw),
        None => ptr::null_mut(),
    }
}

/// # Safety
/// `d` must come from a solver call and not be freed yet.
#[no_mangle]
pub unsafe extern "C" fn chroma_decision_free(d: *mut ChromaDecision) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// # Safety
/// `s` must come from this library and not be freed yet.
#[no_mangle]
pub unsafe extern "C" fn chroma_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Exact treedepth, or [`ChromaStatus::CapExceeded`] if it is above `cap`.
///
/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn chroma_treedepth(
    g: *const ChromaGraph,
    cap: u32,
    out: *mut u32,
) -> ChromaStatus {
    guard(|| {
        let (Some(g), false) = (g.as_ref(), out.is_null()) else {
            return fail(ChromaStatus::NullPointer, "null argument");
        };
        match treedepth_exact(&g.0, cap as usize) {
            TreedepthResult::Value(d, _) => {
                *out = d as u32;
                ChromaStatus::Ok
            }
            TreedepthResult::ExceedsCap => fail(
                ChromaStatus::CapExceeded,
                format!("treedepth exceeds {cap}"),
            ),
        }
    })
}

/// Whether the graph has no subgraph matching `spec`, e.g. `"S(1,2,2,2)"`.
///
/// # Safety
/// `g` must be a live graph handle; `spec` a NUL-terminated string; `out`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn chroma_is_free(
    g: *const ChromaGraph,
    spec: *const c_char,
    out: *mut bool,
) -> ChromaStatus {
    guard(|| {
        let (Some(g), false, false) = (g.as_ref(), spec.is_null(), out.is_null()) else {
            return fail(ChromaStatus::NullPointer, "null argument");
        };
        let parsed = CStr::from_ptr(spec)
            .to_str()
            .map_err(|e| e.to_string())
            .and_then(|s| s.parse::<PatternSpec>().map_err(|e| e.to_string()));
        let spec = match parsed {
            Ok(s) => s,
            Err(e) => return fail(ChromaStatus::InvalidParams, e),
        };
        match is_subgraph_free(&g.0, &spec) {
            Ok(free) => {
                *out = free;
                ChromaStatus::Ok
            }
            Err(e) => fail(ChromaStatus::InvalidParams, e.to_string()),
        }
    })
}
