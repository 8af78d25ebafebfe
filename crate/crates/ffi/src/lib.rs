//! C ABI over the decision procedure.
//!
//! Graphs and outcomes are opaque heap handles owned by the caller and
//! released with the matching `*_free`. Every entry point returns a
//! [`P6bError`] code; results come back through out-pointers. Vertices are
//! 0-based, colours 1-based. Panics never cross the boundary.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use p6bull::harness::{emit_report, parse_dimacs, Format};
use p6bull::listcolor::ExactOracle;
use p6bull::outcome::Options;
use p6bull::{decide4_with, verify_coloring, Coloring, Graph, Outcome, Status};

/// Result codes of every entry point.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum P6bError {
    Ok = 0,
    NullPointer = 1,
    InvalidVertex = 2,
    SelfLoop = 3,
    Parse = 4,
    InvalidUtf8 = 5,
    /// An out-buffer is too short; the required length was written back.
    BufferTooSmall = 6,
    NoColoring = 7,
    Contract = 8,
    Panic = 9,
}

/// Mirrors the four verdicts; values match the command-line exit codes.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum P6bStatus {
    FourColorable = 0,
    NotFourColorable = 1,
    OutOfClass = 2,
    InvariantViolation = 3,
}

impl From<Status> for P6bStatus {
    fn from(s: Status) -> Self {
        match s {
            Status::FourColorable => P6bStatus::FourColorable,
            Status::NotFourColorable => P6bStatus::NotFourColorable,
            Status::OutOfClass => P6bStatus::OutOfClass,
            Status::InvariantViolation => P6bStatus::InvariantViolation,
        }
    }
}

/// Opaque graph handle.
pub struct P6bGraph(Graph);

/// Opaque outcome handle.
pub struct P6bOutcome(Outcome);

fn guard(f: impl FnOnce() -> P6bError) -> P6bError {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(P6bError::Panic)
}

fn map_error(e: p6bull::Error) -> P6bError {
    match e {
        p6bull::Error::VertexOutOfRange { .. } => P6bError::InvalidVertex,
        p6bull::Error::SelfLoop(_) => P6bError::SelfLoop,
        p6bull::Error::Parse { .. } => P6bError::Parse,
        p6bull::Error::Contract(_) => P6bError::Contract,
    }
}

fn boxed<T>(value: T, out: *mut *mut T) {
    // SAFETY: callers check `out` for null before building `value`.
    unsafe { *out = Box::into_raw(Box::new(value)) };
}

/// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
/// `edges` (`u0, v0, u1, v1, ...`). `edges` may be null when `edge_count`
/// is 0.
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values; `out` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn p6b_graph_new(
    n: usize,
    edges: *const u32,
    edge_count: usize,
    out: *mut *mut P6bGraph,
) -> P6bError {
    guard(|| {
        if out.is_null() || (edges.is_null() && edge_count > 0) {
            return P6bError::NullPointer;
        }
        let flat = if edge_count == 0 { &[][..] } else { std::slice::from_raw_parts(edges, 2 * edge_count) };
        let pairs: Vec<(usize, usize)> = flat.chunks_exact(2).map(|e| (e[0] as usize, e[1] as usize)).collect();
        match Graph::new(n, &pairs) {
            Ok(g) => {
                boxed(P6bGraph(g), out);
                P6bError::Ok
            }
            Err(e) => map_error(e),
        }
    })
}

/// Parses a NUL-terminated DIMACS text.
///
/// # Safety
/// `text` must be a valid C string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn p6b_graph_from_dimacs(text: *const c_char, out: *mut *mut P6bGraph) -> P6bError {
    guard(|| {
        if text.is_null() || out.is_null() {
            return P6bError::NullPointer;
        }
        let Ok(text) = CStr::from_ptr(text).to_str() else {
            return P6bError::InvalidUtf8;
        };
        match parse_dimacs(text) {
            Ok(g) => {
                boxed(P6bGraph(g), out);
                P6bError::Ok
            }
            Err(e) => map_error(e),
        }
    })
}

/// Vertex count of `graph`.
///
/// # Safety
/// `graph` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn p6b_graph_order(graph: *const P6bGraph, out: *mut usize) -> P6bError {
    guard(|| {
        if graph.is_null() || out.is_null() {
            return P6bError::NullPointer;
        }
        *out = (*graph).0.order();
        P6bError::Ok
    })
}

/// Releases a graph. Null is ignored.
///
/// # Safety
/// `graph` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn p6b_graph_free(graph: *mut P6bGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// Decides 4-colourability. With `force` nonzero the class check is
/// skipped and the answer carries no guarantee.
///
/// # Safety
/// `graph` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn p6b_decide(graph: *const P6bGraph, force: i32, out: *mut *mut P6bOutcome) -> P6bError {
    guard(|| {
        if graph.is_null() || out.is_null() {
            return P6bError::NullPointer;
        }
        let options = Options { assume_class: force != 0, ..Options::default() };
        boxed(P6bOutcome(decide4_with(&(*graph).0, &ExactOracle, options)), out);
        P6bError::Ok
    })
}

/// # Safety
/// `outcome` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn p6b_outcome_status(outcome: *const P6bOutcome, out: *mut P6bStatus) -> P6bError {
    guard(|| {
        if outcome.is_null() || out.is_null() {
            return P6bError::NullPointer;
        }
        *out = (*outcome).0.status().into();
        P6bError::Ok
    })
}

/// Copies the colouring into `colors`. `len` holds the buffer length on
/// entry and the vertex count on return. Fails with `NoColoring` unless the
/// status is four-colourable.
///
/// # Safety
/// `outcome` must be a live handle; `len` must be writable; `colors` must
/// hold `*len` writable bytes or be null when `*len` is 0.
#[no_mangle]
pub unsafe extern "C" fn p6b_outcome_coloring(outcome: *const P6bOutcome, colors: *mut u8, len: *mut usize) -> P6bError {
    guard(|| {
        if outcome.is_null() || len.is_null() {
            return P6bError::NullPointer;
        }
        let Some(c) = (*outcome).0.coloring() else {
            return P6bError::NoColoring;
        };
        let capacity = *len;
        *len = c.len();
        if capacity < c.len() {
            return P6bError::BufferTooSmall;
        }
        if !c.is_empty() {
            if colors.is_null() {
                return P6bError::NullPointer;
            }
            ptr::copy_nonoverlapping(c.as_slice().as_ptr(), colors, c.len());
        }
        P6bError::Ok
    })
}

/// The JSON report as a new C string, released with [`p6b_string_free`].
///
/// # Safety
/// `outcome` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn p6b_outcome_json(outcome: *const P6bOutcome, out: *mut *mut c_char) -> P6bError {
    guard(|| {
        if outcome.is_null() || out.is_null() {
            return P6bError::NullPointer;
        }
        let json = emit_report(&(*outcome).0, Format::Json);
        // serde_json escapes control characters, so no interior NUL
        *out = CString::new(json.trim_end()).expect("JSON has no NUL").into_raw();
        P6bError::Ok
    })
}

/// # Safety
/// `outcome` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn p6b_outcome_free(outcome: *mut P6bOutcome) {
    if !outcome.is_null() {
        drop(Box::from_raw(outcome));
    }
}

/// # Safety
/// `s` must be null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn p6b_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Sets `*valid` to 1 iff `colors` (length `len`, colours in 1..=4) is a
/// proper colouring of `graph`, else 0.
///
/// # Safety
/// `graph` must be a live handle; `colors` must hold `len` readable bytes;
/// `valid` must be writable.
#[no_mangle]
pub unsafe extern "C" fn p6b_verify_coloring(
    graph: *const P6bGraph,
    colors: *const u8,
    len: usize,
    valid: *mut i32,
) -> P6bError {
    guard(|| {
        if graph.is_null() || valid.is_null() || (colors.is_null() && len > 0) {
            return P6bError::NullPointer;
        }
        let slice = if len == 0 { &[][..] } else { std::slice::from_raw_parts(colors, len) };
        let g = &(*graph).0;
        *valid = match Coloring::new(slice.to_vec(), 4) {
            Ok(c) if c.len() == g.order() => verify_coloring(g, &c).unwrap_or(false) as i32,
            _ => 0,
        };
        P6bError::Ok
    })
}
