//! Verdicts, run statistics, and the mutable context threaded through a
//! decision.

use std::fmt;

use serde::Serialize;

use crate::graph::{Coloring, Graph};
use crate::listcolor::{ColoringOracle, ExactOracle};
use crate::patterns::{Pattern, Witness};

/// A structural claim the algorithm relies on that failed on an input.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Violation {
    pub claim: String,
    pub detail: String,
}

impl Violation {
    pub fn new(claim: impl Into<String>, detail: impl Into<String>) -> Violation {
        Violation { claim: claim.into(), detail: detail.into() }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.claim, self.detail)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Verdict {
    FourColorable(Coloring),
    NotFourColorable,
    OutOfClass(Witness),
    InvariantViolation(Vec<Violation>),
}

impl Verdict {
    pub fn violation(claim: impl Into<String>, detail: impl Into<String>) -> Verdict {
        Verdict::InvariantViolation(vec![Violation::new(claim, detail)])
    }

    pub fn status(&self) -> Status {
        match self {
            Verdict::FourColorable(_) => Status::FourColorable,
            Verdict::NotFourColorable => Status::NotFourColorable,
            Verdict::OutOfClass(_) => Status::OutOfClass,
            Verdict::InvariantViolation(_) => Status::InvariantViolation,
        }
    }

    pub fn coloring(&self) -> Option<&Coloring> {
        match self {
            Verdict::FourColorable(c) => Some(c),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    FourColorable,
    NotFourColorable,
    OutOfClass,
    InvariantViolation,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::FourColorable => "four_colorable",
            Status::NotFourColorable => "not_four_colorable",
            Status::OutOfClass => "out_of_class",
            Status::InvariantViolation => "invariant_violation",
        }
    }

    /// Process exit code used by the command-line tool.
    pub fn exit_code(self) -> i32 {
        match self {
            Status::FourColorable => 0,
            Status::NotFourColorable => 1,
            Status::OutOfClass => 2,
            Status::InvariantViolation => 3,
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The step that settled the top-level graph.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Route {
    Empty,
    OutOfClass,
    Components,
    CoComponents,
    ModuleObstruction,
    Obstruction(Pattern),
    Magnet(Pattern),
    GemMagnet,
    Gem,
    GemFreePerfect,
    GemFreeC5,
}

impl Route {
    pub fn name(self) -> String {
        match self {
            Route::Empty => "empty".into(),
            Route::OutOfClass => "out_of_class".into(),
            Route::Components => "components".into(),
            Route::CoComponents => "co_components".into(),
            Route::ModuleObstruction => "module_obstruction".into(),
            Route::Obstruction(p) => format!("obstruction_{}", p.name().to_lowercase()),
            Route::Magnet(p) => format!("magnet_{}", p.name().to_lowercase()),
            Route::GemMagnet => "gem_magnet".into(),
            Route::Gem => "gem".into(),
            Route::GemFreePerfect => "gemfree_perfect".into(),
            Route::GemFreeC5 => "gemfree_c5".into(),
        }
    }
}

impl Serialize for Route {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.name())
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize)]
pub struct Stats {
    pub route: Option<Route>,
    /// Precolourings of a magnet or gem anchor that were tried.
    pub precolorings: u64,
    pub oracle_calls: u64,
    pub two_sat_calls: u64,
    pub reductions: u64,
    /// Gem partitions built and checked, at any depth.
    pub partitions_checked: u64,
    pub recursive_calls: u64,
    pub max_depth: usize,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Outcome {
    pub verdict: Verdict,
    pub stats: Stats,
}

impl Outcome {
    pub fn status(&self) -> Status {
        self.verdict.status()
    }

    pub fn coloring(&self) -> Option<&Coloring> {
        self.verdict.coloring()
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct TraceEvent {
    pub depth: usize,
    pub message: String,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Options {
    /// Run extra self-checks that cost additional precolouring trials.
    pub paranoid: bool,
    /// Skip the membership test for the input. Answers on graphs outside the
    /// class carry no guarantee.
    pub assume_class: bool,
}

/// Per-run state: the colouring oracle, counters, and an optional trace.
pub struct Context<'o> {
    pub oracle: &'o dyn ColoringOracle,
    pub options: Options,
    pub stats: Stats,
    pub depth: usize,
    trace: Option<Vec<TraceEvent>>,
}

impl<'o> Context<'o> {
    pub fn new(oracle: &'o dyn ColoringOracle, options: Options, tracing: bool) -> Self {
        Context { oracle, options, stats: Stats::default(), depth: 0, trace: tracing.then(Vec::new) }
    }

    pub fn k_color(&mut self, g: &Graph, k: u8) -> Option<Coloring> {
        self.stats.oracle_calls += 1;
        self.oracle.k_color(g, k)
    }

    pub fn note(&mut self, message: impl FnOnce() -> String) {
        if let Some(trace) = &mut self.trace {
            trace.push(TraceEvent { depth: self.depth, message: message() });
        }
    }

    pub fn take_trace(&mut self) -> Vec<TraceEvent> {
        self.trace.take().unwrap_or_default()
    }
}

impl Default for Context<'static> {
    fn default() -> Self {
        Context::new(&ExactOracle, Options::default(), false)
    }
}
