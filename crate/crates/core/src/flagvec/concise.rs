use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::convert::ComponentFactors;
use super::verbose::GraphLike;
use super::ConciseVector;
use crate::error::{check_limit, FlagError, Result};
use crate::graphcore::{components_of, Graph, Partition};
use crate::shelling::{acyclic_count, tree_count, SHELLING_LIMIT};

/// Largest edge count for the `2^|E|` spanning-subgraph sums.
pub const SUBGRAPH_EDGE_LIMIT: usize = 22;

/// Concise flag vector: each spanning subgraph `H` contributes `s(H)·π(H)`.
/// Extended linearly over formal sums.
pub fn concise_flag_vector(g: &impl GraphLike) -> Result<ConciseVector> {
    linear(g, concise_of_graph)
}

/// Subgraph flag vector: each spanning subgraph `H` contributes
/// `s^a(H)·π(H)`.
pub fn subgraph_flag_vector(g: &impl GraphLike) -> Result<ConciseVector> {
    check_limit("vertex count", g.n(), SHELLING_LIMIT)?;
    linear(g, subgraph_of_graph)
}

fn linear(g: &impl GraphLike, f: fn(&Graph) -> Result<ConciseVector>) -> Result<ConciseVector> {
    let sum = g.to_graph_sum()?;
    let mut out = ConciseVector::zero(g.n());
    for (h, c) in sum.terms() {
        out.add_scaled(&f(h)?, c);
    }
    Ok(out)
}

fn concise_of_graph(g: &Graph) -> Result<ConciseVector> {
    spanning_sum(g, |adj, comps| comps.iter().map(|&c| tree_count(adj, c)).product())
}

fn subgraph_of_graph(g: &Graph) -> Result<ConciseVector> {
    spanning_sum(g, |adj, _| acyclic_count(adj))
}

/// `Σ_{H ⊆ E, H acyclic} weight(H)·π(H)`; cyclic subgraphs contribute zero
/// to both forms.
fn spanning_sum(g: &Graph, mut weight: impl FnMut(&[u32], &[u32]) -> u64) -> Result<ConciseVector> {
    check_limit("edge count", g.edge_count(), SUBGRAPH_EDGE_LIMIT)?;
    let n = g.n();
    let edges = g.edges();
    let mut acc: HashMap<Vec<usize>, u128> = HashMap::new();
    let mut adj = vec![0u32; n];
    for subset in 0u32..1 << edges.len() {
        adj.iter_mut().for_each(|a| *a = 0);
        for (k, &(i, j)) in edges.iter().enumerate() {
            if subset >> k & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
        let comps = components_of(&adj);
        if subset.count_ones() as usize + comps.len() != n {
            continue;
        }
        let w = weight(&adj, &comps);
        if w == 0 {
            continue;
        }
        let mut sizes: Vec<usize> = comps.iter().map(|c| c.count_ones() as usize).collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        *acc.entry(sizes).or_default() += w as u128;
    }
    let mut out = ConciseVector::zero(n);
    for (parts, c) in acc {
        out.add_term(Partition::new(parts), c);
    }
    Ok(out)
}

/// Divides the coefficient of each partition `π = [n_1+...+n_r]` by
/// `multinomial(n; n_1..n_r)·Π c(n_i)`, turning a subgraph flag vector into
/// the concise one.
pub fn scale_subgraph_to_concise(v: &ConciseVector) -> Result<ConciseVector> {
    scale_subgraph_to_concise_with(v, &ComponentFactors::default())
}

pub fn scale_subgraph_to_concise_with(
    v: &ConciseVector,
    factors: &ComponentFactors,
) -> Result<ConciseVector> {
    let mut out = ConciseVector::zero(v.n());
    for (p, c) in v.iter() {
        let d = multinomial(p.parts()) * factors.product(p);
        if d.is_zero() {
            return Err(FlagError::NonExactDivision(format!("zero scale for {p}")));
        }
        let (q, r) = c.div_rem(&d);
        if !r.is_zero() {
            return Err(FlagError::NonExactDivision(format!(
                "coefficient {c} of {p} is not divisible by {d}"
            )));
        }
        out.add_term(p.clone(), q);
    }
    Ok(out)
}

/// `(Σ parts)! / Π parts!`
pub fn multinomial(parts: &[usize]) -> BigInt {
    let mut out = BigInt::from(1);
    let mut total = 0usize;
    for &p in parts {
        for k in 1..=p {
            total += 1;
            out = out * total / k;
        }
    }
    out
}
