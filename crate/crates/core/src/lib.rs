//! Flag vectors of finite simple graphs, computed exactly.
//!
//! Every `n`-vertex graph gets a verbose flag vector (indexed by words in
//! `a`, `b`), a concise flag vector and a subgraph flag vector (both indexed
//! by partitions of `n`). The three forms are linear functions of each other;
//! [`flagvec`] computes all of them and the maps between them. [`polytope`]
//! studies their span and the convex hull of all `n`-vertex flag vectors
//! using the exact linear algebra in [`exactlin`].

pub mod acceptance;
pub mod error;
pub mod exactlin;
pub mod flagvec;
pub mod graphcore;
pub mod polytope;
pub mod shelling;

pub use error::{FlagError, Result};
pub use graphcore::{parse_graph, Graph, GraphSum, OptionalGraph, Partition};
pub use shelling::Word;
