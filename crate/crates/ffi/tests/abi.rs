use std::ffi::{CStr, CString};
use std::ptr;

use p6bull_ffi::*;

unsafe fn graph(n: usize, edges: &[u32]) -> *mut P6bGraph {
    let mut g = ptr::null_mut();
    assert_eq!(p6b_graph_new(n, edges.as_ptr(), edges.len() / 2, &mut g), P6bError::Ok);
    g
}

unsafe fn decide(g: *const P6bGraph, force: i32) -> (*mut P6bOutcome, P6bStatus) {
    let mut o = ptr::null_mut();
    assert_eq!(p6b_decide(g, force, &mut o), P6bError::Ok);
    let mut status = P6bStatus::InvariantViolation;
    assert_eq!(p6b_outcome_status(o, &mut status), P6bError::Ok);
    (o, status)
}

#[test]
fn c5_round_trip() {
    unsafe {
        let g = graph(5, &[0, 1, 1, 2, 2, 3, 3, 4, 4, 0]);
        let mut n = 0;
        assert_eq!(p6b_graph_order(g, &mut n), P6bError::Ok);
        assert_eq!(n, 5);

        let (o, status) = decide(g, 0);
        assert_eq!(status, P6bStatus::FourColorable);

        let mut len = 2;
        let mut colors = [0u8; 5];
        assert_eq!(p6b_outcome_coloring(o, colors.as_mut_ptr(), &mut len), P6bError::BufferTooSmall);
        assert_eq!(len, 5);
        assert_eq!(p6b_outcome_coloring(o, colors.as_mut_ptr(), &mut len), P6bError::Ok);

        let mut valid = 0;
        assert_eq!(p6b_verify_coloring(g, colors.as_ptr(), 5, &mut valid), P6bError::Ok);
        assert_eq!(valid, 1);
        let bad = [1u8, 1, 2, 1, 2];
        assert_eq!(p6b_verify_coloring(g, bad.as_ptr(), 5, &mut valid), P6bError::Ok);
        assert_eq!(valid, 0);

        let mut json = ptr::null_mut();
        assert_eq!(p6b_outcome_json(o, &mut json), P6bError::Ok);
        let text = CStr::from_ptr(json).to_str().unwrap();
        assert!(text.starts_with("{\"status\":\"four_colorable\""), "{text}");
        p6b_string_free(json);

        p6b_outcome_free(o);
        p6b_graph_free(g);
    }
}

#[test]
fn statuses() {
    unsafe {
        let k5: Vec<u32> = (0..5u32).flat_map(|u| (u + 1..5).flat_map(move |v| [u, v])).collect();
        let g = graph(5, &k5);
        let (o, status) = decide(g, 0);
        assert_eq!(status, P6bStatus::NotFourColorable);
        let mut len = 5;
        assert_eq!(p6b_outcome_coloring(o, ptr::null_mut(), &mut len), P6bError::NoColoring);
        p6b_outcome_free(o);
        p6b_graph_free(g);

        let text = CString::new("p edge 6 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\n").unwrap();
        let mut p6 = ptr::null_mut();
        assert_eq!(p6b_graph_from_dimacs(text.as_ptr(), &mut p6), P6bError::Ok);
        let (o, status) = decide(p6, 0);
        assert_eq!(status, P6bStatus::OutOfClass);
        p6b_outcome_free(o);
        let (o, status) = decide(p6, 1);
        assert_eq!(status, P6bStatus::FourColorable);
        p6b_outcome_free(o);
        p6b_graph_free(p6);
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(p6b_graph_new(2, [0u32, 2].as_ptr(), 1, &mut g), P6bError::InvalidVertex);
        assert_eq!(p6b_graph_new(2, [1u32, 1].as_ptr(), 1, &mut g), P6bError::SelfLoop);
        assert_eq!(p6b_graph_new(2, ptr::null(), 1, &mut g), P6bError::NullPointer);
        assert_eq!(p6b_graph_new(2, ptr::null(), 0, ptr::null_mut()), P6bError::NullPointer);
        assert!(g.is_null());

        let bad = CString::new("p edge 2 1\ne 1 3\n").unwrap();
        assert_eq!(p6b_graph_from_dimacs(bad.as_ptr(), &mut g), P6bError::Parse);
        assert_eq!(p6b_graph_from_dimacs(ptr::null(), &mut g), P6bError::NullPointer);
        let latin1 = [b'p', 0xff, 0];
        assert_eq!(p6b_graph_from_dimacs(latin1.as_ptr().cast(), &mut g), P6bError::InvalidUtf8);

        let mut o = ptr::null_mut();
        assert_eq!(p6b_decide(ptr::null(), 0, &mut o), P6bError::NullPointer);
        p6b_graph_free(ptr::null_mut());
        p6b_outcome_free(ptr::null_mut());
        p6b_string_free(ptr::null_mut());
    }
}

#[test]
fn header_is_current() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/p6bull.h")).unwrap();
    for name in ["p6b_graph_new", "p6b_decide", "p6b_outcome_json", "p6b_verify_coloring", "P6B_ERROR_PANIC"] {
        assert!(header.contains(name), "{name} missing from header");
    }
}
