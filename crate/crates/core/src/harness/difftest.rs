//! Differential testing of the pipeline against the exact oracle.

use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::Serialize;

use crate::graph::Graph;
use crate::harness::dimacs::write_dimacs;
use crate::harness::generate::{gem_seeded, grow_in_class};
use crate::listcolor::{exact_k_color, ExactOracle};
use crate::outcome::{Options, Outcome, Verdict, Violation};
use crate::pipeline::decide4_with;

#[derive(Clone, Debug)]
pub struct DifftestConfig {
    pub count: usize,
    pub nmin: usize,
    pub nmax: usize,
    /// Attachment probabilities, cycled through by instance index.
    pub probabilities: Vec<f64>,
    pub seed: u64,
    /// Share of instances, in percent, built around an anchor gem.
    pub gem_percent: u8,
    pub paranoid: bool,
}

impl Default for DifftestConfig {
    fn default() -> Self {
        DifftestConfig {
            count: 100,
            nmin: 8,
            nmax: 14,
            probabilities: (1..=9).map(|i| i as f64 / 10.0).collect(),
            seed: 0,
            gem_percent: 0,
            paranoid: false,
        }
    }
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct RunReport {
    pub id: String,
    pub generator: &'static str,
    pub n: usize,
    pub m: usize,
    pub p: f64,
    pub status: &'static str,
    pub route: Option<String>,
    pub oracle_calls: u64,
    pub precolorings: u64,
    pub partitions_checked: u64,
    pub exact_feasible: bool,
    pub disagreement: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub violations: Vec<Violation>,
}

/// One generated instance with its report.
#[derive(Clone, Debug)]
pub struct Run {
    pub graph: Graph,
    pub report: RunReport,
}

fn instance_seed(seed: u64, index: usize) -> u64 {
    // splitmix64 step
    let mut z = seed.wrapping_add((index as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Compares a pipeline outcome with the exact oracle's answer.
pub fn compare(id: String, generator: &'static str, p: f64, g: &Graph, outcome: &Outcome) -> RunReport {
    let exact_feasible = exact_k_color(g, 4).is_some();
    let agrees = match &outcome.verdict {
        Verdict::FourColorable(_) => exact_feasible,
        Verdict::NotFourColorable => !exact_feasible,
        Verdict::OutOfClass(_) | Verdict::InvariantViolation(_) => false,
    };
    RunReport {
        id,
        generator,
        n: g.order(),
        m: g.edge_count(),
        p,
        status: outcome.status().as_str(),
        route: outcome.stats.route.map(|r| r.name()),
        oracle_calls: outcome.stats.oracle_calls,
        precolorings: outcome.stats.precolorings,
        partitions_checked: outcome.stats.partitions_checked,
        exact_feasible,
        disagreement: !agrees,
        violations: match &outcome.verdict {
            Verdict::InvariantViolation(v) => v.clone(),
            _ => Vec::new(),
        },
    }
}

/// Decides `g` with the pipeline and the exact oracle.
pub fn check_instance(id: String, generator: &'static str, p: f64, g: &Graph, paranoid: bool) -> RunReport {
    let options = Options { paranoid, ..Options::default() };
    let outcome = decide4_with(g, &ExactOracle, options);
    compare(id, generator, p, g, &outcome)
}

/// Runs `config.count` seeded instances in parallel. Results come back in
/// instance order and depend only on the configuration.
pub fn difftest(config: &DifftestConfig) -> Vec<Run> {
    let span = config.nmax.saturating_sub(config.nmin) + 1;
    (0..config.count)
        .into_par_iter()
        .map(|i| {
            let s = instance_seed(config.seed, i);
            let n = config.nmin + (s % span as u64) as usize;
            let p = if config.probabilities.is_empty() {
                0.5
            } else {
                config.probabilities[i % config.probabilities.len()]
            };
            let gem = (s >> 32) % 100 < config.gem_percent as u64;
            let (generator, graph) = if gem && n >= 6 {
                ("gem", gem_seeded(n, p, s))
            } else {
                ("grow", grow_in_class(n, p, s))
            };
            let report = check_instance(format!("{}-{i}", config.seed), generator, p, &graph, config.paranoid);
            Run { graph, report }
        })
        .collect()
}

/// One JSON object per line.
pub fn reports_json(runs: &[Run]) -> String {
    let mut out = String::new();
    for run in runs {
        out.push_str(&serde_json::to_string(&run.report).expect("report serialises"));
        out.push('\n');
    }
    out
}

/// Writes every disagreeing instance to `dir` as `<id>.col`.
pub fn persist_failures(runs: &[Run], dir: &Path) -> std::io::Result<Vec<PathBuf>> {
    let mut written = Vec::new();
    for run in runs.iter().filter(|r| r.report.disagreement) {
        std::fs::create_dir_all(dir)?;
        let path = dir.join(format!("{}.col", run.report.id));
        let note = serde_json::to_string(&run.report).expect("report serialises");
        std::fs::write(&path, write_dimacs(&run.graph, &[&note]))?;
        written.push(path);
    }
    Ok(written)
}
