//! Extremal constructions, exact subgraph counting and brute-force extremal
//! oracles for counting copies of a fixed graph in hosts with a given number
//! of vertices and edges.

pub mod constructions;
pub mod count;
pub mod counting;
pub mod diagram;
pub mod error;
pub mod graph;
pub mod iso;
pub mod nested;
pub mod oracle;
pub mod decomposition;
pub mod asymptotics;
pub mod edgelist;
pub mod random;
pub mod report;
pub mod verify;

pub use count::Count;
pub use diagram::FerrersDiagram;
pub use error::{Error, Result};
pub use graph::{Bipartition, Graph};
