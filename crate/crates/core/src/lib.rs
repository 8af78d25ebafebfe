//! Four-colourability of graphs with no induced six-vertex path and no
//! induced bull, decided by structural decomposition.

pub mod error;
pub mod gemcase;
pub mod gemfree;
pub mod graph;
pub mod harness;
pub mod listcolor;
pub mod modular;
pub mod outcome;
pub mod patterns;
pub mod pipeline;

pub use error::{Error, Result};
pub use graph::{verify_coloring, Coloring, Graph, VertexSet};
pub use outcome::{Outcome, Status, Verdict};
pub use pipeline::{decide4, decide4_with, decide4_with_trace};
