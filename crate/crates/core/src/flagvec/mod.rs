//! The verbose, concise and subgraph flag vectors, the maps between them,
//! the complement transform, the total flag vector, basis elements and the
//! edge flag vector.

mod basis;
mod complement;
pub(crate) mod concise;
mod convert;
mod edge;
mod vectors;
mod verbose;

pub use basis::{anchor_word, basis_graph, optional_dynkin_d, optional_path, path_union, BASIS_PART_LIMIT};
pub use complement::{average_coefficient, complement_transform, total_flag_vector, COMPLEMENT_LIMIT, TOTAL_LIMIT};
pub use concise::{
    concise_flag_vector, multinomial, scale_subgraph_to_concise, scale_subgraph_to_concise_with,
    subgraph_flag_vector, SUBGRAPH_EDGE_LIMIT,
};
pub use convert::{
    anchor_matrix, concise_from_verbose, concise_from_verbose_with, shuffle, verbose_from_concise,
    verbose_from_concise_with, ComponentFactors, CONVERSION_LIMIT,
};
pub use edge::{edge_flag_vector, EDGE_FLAG_LIMIT};
pub use vectors::{Combination, ConciseVector, EdgeWordVector, VerboseVector};
pub use verbose::{verbose_flag_vector, verbose_of_graph, GraphLike, VerboseMethod};
