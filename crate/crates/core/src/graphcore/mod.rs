//! Graphs, graphs with optional edges, formal sums of graphs, partitions,
//! canonical forms and isomorphism-class enumeration.

mod canon;
mod graph;
mod partition;
mod sum;

pub use canon::{canonical, canonical_form, enumerate_graphs, CANON_LIMIT, ENUMERATE_LIMIT};
pub use graph::{pair_count, pair_index, pairs, parse_graph, Graph, OptionalGraph, MAX_VERTICES};
pub use partition::{enumerate_partitions, partition_count, Partition};
pub use sum::{completions, expand, GraphSum, EXPAND_LIMIT};

pub(crate) use canon::canonical_unchecked;
pub(crate) use graph::components_of;
