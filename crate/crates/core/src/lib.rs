//! Structural resilience analysis for undirected networks.
//!
//! The crate computes node centralities (degree, closeness, betweenness),
//! detects communities (Girvan–Newman, Louvain) and simulates node-removal
//! attacks, reporting how the network fragments.
//!
//! Per-source BFS sweeps run on rayon when the `parallel` feature is enabled
//! (the default). Results are bit-identical to the sequential path: per-source
//! contributions are always reduced in ascending source order.

pub mod attack;
pub mod centrality;
pub mod community;
mod error;
pub mod exec;
pub mod generators;
pub mod graph;
pub mod paths;
pub mod report;
pub mod rng;

pub use error::{Error, Result};
pub use exec::Exec;
pub use graph::{Graph, NodeId};
