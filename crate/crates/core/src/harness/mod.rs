//! File formats, instance generation, and the differential test campaign
//! behind the command-line tool.

pub mod difftest;
pub mod dimacs;
pub mod enumerate;
pub mod generate;
pub mod report;

pub use difftest::{difftest, DifftestConfig, RunReport};
pub use dimacs::{parse_coloring, parse_dimacs, write_coloring, write_dimacs};
pub use generate::{generate_in_class, grow_in_class};
pub use report::{emit_report, Format};
