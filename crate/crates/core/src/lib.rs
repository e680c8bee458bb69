//! Exact computation of game burning numbers, burning numbers, cooling
//! numbers and related graph parameters on graphs with at most 64 vertices.

pub mod canon;
pub mod classical;
pub mod corpus;
pub mod engine;
pub mod error;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod spanning;
pub mod vertex_set;

pub use engine::{PlayTrace, Player};
pub use error::{CorpusError, GraphError};
pub use graph::{Distance, DistanceMatrix, Graph};
pub use vertex_set::VertexSet;
