//! The span of flag vectors, the convex hull Δ(n) and the nullspace of the
//! flag vector map.

mod facets;
mod hull;
mod nullspace;

pub use facets::{delta_facets, verify_facets, Facet, FACET_DIM_LIMIT, FACET_POINT_LIMIT};
pub use hull::{delta_vertices, hull_report, HullReport, VertexCertificate};
pub use nullspace::{cycle_relations, kernel_relations, nullspace_report, NullspaceReport};

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{check_limit, Result};
use crate::exactlin::RationalMatrix;
use crate::flagvec::{concise_flag_vector, ConciseVector};
use crate::graphcore::{enumerate_graphs, enumerate_partitions, Graph, Partition};

/// Largest order handled by the exhaustive class computations here.
pub const POLYTOPE_LIMIT: usize = 6;

/// Every isomorphism class of order `n` with its concise flag vector, in
/// canonical order.
pub fn class_points(n: usize) -> Result<Vec<(Graph, ConciseVector)>> {
    check_limit("vertex count", n, POLYTOPE_LIMIT)?;
    enumerate_graphs(n)?
        .into_par_iter()
        .map(|g| concise_flag_vector(&g).map(|v| (g, v)))
        .collect()
}

/// Coordinates, classes, and the partitions × classes matrix of concise
/// flag vectors.
pub(crate) type ClassMatrix = (Vec<Partition>, Vec<Graph>, Vec<Vec<BigInt>>);

pub(crate) fn class_matrix(n: usize) -> Result<ClassMatrix> {
    let parts = enumerate_partitions(n);
    let points = class_points(n)?;
    let rows = (0..parts.len())
        .map(|i| points.iter().map(|(_, v)| v.coeff(&parts[i])).collect())
        .collect();
    Ok((parts, points.into_iter().map(|(g, _)| g).collect(), rows))
}

/// Dimension of the span of the flag vectors of all `n`-vertex graphs.
pub fn span_dimension(n: usize) -> Result<usize> {
    let (_, _, rows) = class_matrix(n)?;
    Ok(RationalMatrix::from_integer_rows(&rows).rank())
}
