//! Machine- and human-readable reports of an [`Outcome`].

use std::fmt::Write as _;

use serde::Serialize;

use crate::outcome::{Outcome, Stats, TraceEvent, Verdict, Violation};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Format {
    Json,
    Text,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    coloring: Option<&'a [u8]>,
    /// 1-based vertices of the forbidden induced subgraph.
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness_pattern: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    violations: Option<&'a [Violation]>,
    stats: &'a Stats,
}

fn json_report(outcome: &Outcome) -> JsonReport<'_> {
    let mut r = JsonReport {
        status: outcome.status().as_str(),
        coloring: None,
        witness: None,
        witness_pattern: None,
        violations: None,
        stats: &outcome.stats,
    };
    match &outcome.verdict {
        Verdict::FourColorable(c) => r.coloring = Some(c.as_slice()),
        Verdict::NotFourColorable => {}
        Verdict::OutOfClass(w) => {
            r.witness = Some(w.embedding.vertices().iter().map(|v| v + 1).collect());
            r.witness_pattern = Some(w.pattern.name());
        }
        Verdict::InvariantViolation(v) => r.violations = Some(v),
    }
    r
}

pub fn emit_report(outcome: &Outcome, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string(&json_report(outcome)).expect("report serialises");
            s.push('\n');
            s
        }
        Format::Text => text_report(outcome),
    }
}

fn text_report(outcome: &Outcome) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "status: {}", outcome.status());
    match &outcome.verdict {
        Verdict::FourColorable(c) => {
            let colors: Vec<String> = c.as_slice().iter().map(u8::to_string).collect();
            let _ = writeln!(out, "coloring: {}", colors.join(" "));
        }
        Verdict::NotFourColorable => {}
        Verdict::OutOfClass(w) => {
            let vs: Vec<String> = w.embedding.vertices().iter().map(|v| (v + 1).to_string()).collect();
            let _ = writeln!(out, "induced {}: {}", w.pattern.name(), vs.join(" "));
        }
        Verdict::InvariantViolation(vs) => {
            for v in vs {
                let _ = writeln!(out, "violation: {v}");
            }
        }
    }
    let s = &outcome.stats;
    if let Some(route) = s.route {
        let _ = writeln!(out, "route: {}", route.name());
    }
    let _ = writeln!(
        out,
        "precolorings: {}  oracle calls: {}  2-SAT calls: {}  reductions: {}  depth: {}",
        s.precolorings, s.oracle_calls, s.two_sat_calls, s.reductions, s.max_depth
    );
    out
}

pub fn emit_trace(trace: &[TraceEvent]) -> String {
    let mut out = String::new();
    for e in trace {
        let _ = writeln!(out, "{}{}", "  ".repeat(e.depth), e.message);
    }
    out
}
