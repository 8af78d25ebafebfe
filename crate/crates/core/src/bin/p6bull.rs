//! Command-line front end.
//!
//! Exit codes: 0 four-colourable, 1 not four-colourable, 2 out of class,
//! 3 invariant violation or any input error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use p6bull::harness::difftest::{persist_failures, reports_json};
use p6bull::harness::generate::gem_seeded;
use p6bull::harness::report::emit_trace;
use p6bull::harness::{
    difftest, emit_report, generate_in_class, grow_in_class, parse_coloring, parse_dimacs, write_dimacs,
    DifftestConfig, Format,
};
use p6bull::listcolor::ExactOracle;
use p6bull::outcome::{Context, Options};
use p6bull::{pipeline, verify_coloring, Graph, Status};

const INPUT_ERROR: u8 = 3;
/// Seeds tried per requested instance by the rejection generator.
const REJECTION_TRIES: u64 = 100_000;

#[derive(Parser)]
#[command(name = "p6bull", version, about = "Decide 4-colourability of (P6, bull)-free graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct RunFlags {
    /// Print a JSON report instead of text.
    #[arg(long)]
    json: bool,
    /// Refuse graphs outside the class (the default).
    #[arg(long, overrides_with = "force")]
    strict_class: bool,
    /// Run the pipeline on any graph; the answer then carries no guarantee.
    #[arg(long, overrides_with = "strict_class")]
    force: bool,
    /// Extra internal self-checks.
    #[arg(long)]
    paranoid: bool,
}

impl RunFlags {
    fn options(self) -> Options {
        Options { paranoid: self.paranoid, assume_class: self.force && !self.strict_class }
    }

    fn format(self) -> Format {
        if self.json {
            Format::Json
        } else {
            Format::Text
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    /// Grow vertex by vertex, rejecting only the new vertex.
    Grow,
    /// Whole-graph rejection sampling.
    Reject,
    /// Attachments around an anchor gem.
    Gem,
}

#[derive(Subcommand)]
enum Command {
    /// Decide a DIMACS graph.
    Decide {
        file: PathBuf,
        #[command(flatten)]
        flags: RunFlags,
    },
    /// Check that a colouring file properly 4-colours a graph.
    Verify { file: PathBuf, coloring: PathBuf },
    /// Generate seeded graphs in the class as DIMACS.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, value_enum, default_value_t = Method::Grow)]
        method: Method,
        /// Write one file per instance into this directory instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare the pipeline with the exact oracle on seeded instances.
    Difftest {
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 8)]
        nmin: usize,
        #[arg(long, default_value_t = 14)]
        nmax: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Percentage of instances built around an anchor gem.
        #[arg(long, default_value_t = 20)]
        gem_percent: u8,
        #[arg(long)]
        paranoid: bool,
        /// Where disagreeing instances are written.
        #[arg(long, default_value = "difftest-failures")]
        failures: PathBuf,
    },
    /// Decide a graph and print every step taken.
    Trace {
        file: PathBuf,
        #[command(flatten)]
        flags: RunFlags,
    },
}

fn read_graph(path: &Path) -> Result<Graph, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_dimacs(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn decide(file: &Path, flags: RunFlags, trace: bool) -> Result<u8, String> {
    let g = read_graph(file)?;
    let options = flags.options();
    if options.assume_class {
        log::warn!("class check skipped; the answer is not covered by the class guarantee");
    }
    let mut ctx = Context::new(&ExactOracle, options, trace);
    let outcome = pipeline::run(&g, &mut ctx);
    if trace {
        print!("{}", emit_trace(&ctx.take_trace()));
    }
    let mut report = emit_report(&outcome, flags.format());
    if options.assume_class {
        report = label_unchecked(report, flags.format());
    }
    print!("{report}");
    Ok(outcome.status().exit_code() as u8)
}

/// Marks a report whose input skipped the class check.
fn label_unchecked(report: String, format: Format) -> String {
    match format {
        Format::Text => format!("{report}class: unchecked, answer not guaranteed\n"),
        Format::Json => {
            let mut value: serde_json::Value = serde_json::from_str(&report).expect("report is JSON");
            value["class_checked"] = serde_json::Value::Bool(false);
            format!("{value}\n")
        }
    }
}

fn verify(file: &Path, coloring: &Path) -> Result<u8, String> {
    let g = read_graph(file)?;
    let text = std::fs::read_to_string(coloring).map_err(|e| format!("{}: {e}", coloring.display()))?;
    let c = parse_coloring(&text, g.order()).map_err(|e| format!("{}: {e}", coloring.display()))?;
    let proper = verify_coloring(&g, &c).map_err(|e| e.to_string())?;
    if proper && c.palette() <= 4 {
        println!("valid");
        Ok(Status::FourColorable.exit_code() as u8)
    } else {
        println!("invalid");
        Ok(Status::NotFourColorable.exit_code() as u8)
    }
}

fn generate_one(method: Method, n: usize, p: f64, seed: u64) -> Result<Graph, String> {
    match method {
        Method::Grow => Ok(grow_in_class(n, p, seed)),
        Method::Gem if n >= 6 => Ok(gem_seeded(n, p, seed)),
        Method::Gem => Err("the gem generator needs n >= 6".into()),
        Method::Reject => (0..REJECTION_TRIES)
            .find_map(|t| generate_in_class(n, p, seed.wrapping_add(t.wrapping_mul(0x9E37_79B9))))
            .ok_or_else(|| format!("no graph in the class after {REJECTION_TRIES} draws")),
    }
}

fn gen(n: usize, p: f64, seed: u64, count: usize, method: Method, out: Option<&Path>) -> Result<u8, String> {
    if !(0.0..=1.0).contains(&p) {
        return Err(format!("edge probability {p} outside [0, 1]"));
    }
    if let Some(dir) = out {
        std::fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
    }
    for i in 0..count {
        let s = seed.wrapping_add(i as u64);
        let g = generate_one(method, n, p, s)?;
        let header = format!("n={n} p={p} seed={s}");
        let text = write_dimacs(&g, &[&header]);
        match out {
            Some(dir) => {
                let path = dir.join(format!("gen-{s}.col"));
                std::fs::write(&path, text).map_err(|e| format!("{}: {e}", path.display()))?;
            }
            None => print!("{text}"),
        }
    }
    Ok(0)
}

fn run_difftest(config: DifftestConfig, failures: &Path) -> Result<u8, String> {
    let runs = difftest(&config);
    print!("{}", reports_json(&runs));
    let written = persist_failures(&runs, failures).map_err(|e| format!("{}: {e}", failures.display()))?;
    eprintln!("{} instances, {} disagreements", runs.len(), written.len());
    for path in &written {
        eprintln!("  {}", path.display());
    }
    Ok(if written.is_empty() { 0 } else { INPUT_ERROR })
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { INPUT_ERROR } else { 0 });
        }
    };
    let result = match cli.command {
        Command::Decide { file, flags } => decide(&file, flags, false),
        Command::Trace { file, flags } => decide(&file, flags, true),
        Command::Verify { file, coloring } => verify(&file, &coloring),
        Command::Gen { n, p, seed, count, method, out } => gen(n, p, seed, count, method, out.as_deref()),
        Command::Difftest { count, nmin, nmax, seed, gem_percent, paranoid, failures } => {
            if nmin > nmax {
                Err(format!("--nmin {nmin} exceeds --nmax {nmax}"))
            } else {
                let config =
                    DifftestConfig { count, nmin, nmax, seed, gem_percent, paranoid, ..DifftestConfig::default() };
                run_difftest(config, &failures)
            }
        }
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(INPUT_ERROR)
        }
    }
}
