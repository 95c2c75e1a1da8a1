//! Random-like graph families, exact induced-subgraph censuses on three and
//! four vertices, and finite checks of their extremal properties.

pub mod error;
pub mod exec;
pub mod graph;

pub use error::{Error, Result};
pub use exec::Exec;
pub use graph::{Graph, GraphBuilder, Permutation, VertexSet};
pub mod census;
pub mod claims;
pub mod analyzers;
pub mod constructions;
pub mod report;
