//! Colouring and Stable Cut for graphs excluding subdivided stars and
//! subdivided H-graphs, with the structure detectors and oracles behind them.

pub mod cli;
pub mod colouring;
pub mod graph;
pub mod pattern;
pub mod reduce;
pub mod solver;
pub mod structure;
pub mod treedepth;

pub use graph::{Bridge, EdgeId, Graph, GraphError, SignedPath, Vertex};
