//! Solving and strategy tools for Cops and Robber with limited visibility.

pub mod batch;
pub mod cli;
pub mod engine;
pub mod error;
pub mod families;
pub mod graph;
pub mod solver;
pub mod strategies;
pub mod treerank;

pub use error::{Error, Result};
pub use families::Recipe;
pub use graph::{Graph, VertexSet};
