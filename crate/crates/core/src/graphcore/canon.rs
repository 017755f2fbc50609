//! Canonical forms and isomorphism-class enumeration.
//!
//! The canonical form of a graph is its relabeling with the lexicographically
//! least adjacency bit-string (pair order `(0,1), (0,2), ...`). The search
//! below is exact: it fixes labels `0, 1, 2, ...` in turn, and the row of
//! label `k` only depends on which vertex gets `k` and on the ordered cells
//! of still-unlabeled vertices, so every row can be minimised greedily with
//! branching only on ties. Branches through twin vertices are identical and
//! are explored once.

use std::collections::BTreeSet;

use super::graph::{pair_count, Graph};
use crate::error::{check_limit, Result};

/// Largest vertex count accepted by [`canonical_form`].
pub const CANON_LIMIT: usize = 10;
/// Largest vertex count accepted by [`enumerate_graphs`].
pub const ENUMERATE_LIMIT: usize = 7;

/// Returns the canonical representative of `g` together with a permutation
/// `perm` (vertex `v` of `g` maps to `perm[v]`) such that
/// `g.relabel(&perm)` is that representative.
pub fn canonical_form(g: &Graph) -> Result<(Graph, Vec<usize>)> {
    check_limit("vertex count", g.n(), CANON_LIMIT)?;
    Ok(canonical_unchecked(g))
}

/// Canonical representative only.
pub fn canonical(g: &Graph) -> Result<Graph> {
    canonical_form(g).map(|(c, _)| c)
}

pub(crate) fn canonical_unchecked(g: &Graph) -> (Graph, Vec<usize>) {
    let n = g.n();
    if n <= 1 {
        return (*g, (0..n).collect());
    }
    let adj = g.adjacency();
    let mut search = Search {
        adj: &adj,
        total_bits: pair_count(n),
        best: None,
    };
    let mut placed = Vec::with_capacity(n);
    search.dfs(&mut placed, vec![(0..n).collect()], 0, 0);
    let (_, order) = search.best.expect("search visits at least one leaf");
    let mut perm = vec![0; n];
    for (label, &v) in order.iter().enumerate() {
        perm[v] = label;
    }
    (g.relabel(&perm), perm)
}

struct Search<'a> {
    adj: &'a [u32],
    total_bits: usize,
    /// (key, vertices in label order)
    best: Option<(u128, Vec<usize>)>,
}

impl Search<'_> {
    fn dfs(&mut self, placed: &mut Vec<usize>, cells: Vec<Vec<usize>>, key: u128, bits: usize) {
        if cells.is_empty() {
            if self.best.as_ref().is_none_or(|(b, _)| key < *b) {
                self.best = Some((key, placed.clone()));
            }
            return;
        }

        let first = &cells[0];
        let mut candidates: Vec<usize> = Vec::with_capacity(first.len());
        for &v in first {
            let twin = candidates.iter().any(|&u| {
                self.adj[u] & !(1 << v) == self.adj[v] & !(1 << u)
            });
            if !twin {
                candidates.push(v);
            }
        }

        let mut branches: Vec<(u128, usize, Vec<Vec<usize>>)> = Vec::new();
        for &v in &candidates {
            let (row, next) = self.split(&cells, v);
            match branches.first() {
                Some((r, _, _)) if row > *r => continue,
                Some((r, _, _)) if row < *r => branches.clear(),
                _ => {}
            }
            branches.push((row, v, next));
        }

        let row_len = self.adj.len() - placed.len() - 1;
        for (row, v, next) in branches {
            let new_key = (key << row_len) | row;
            let new_bits = bits + row_len;
            if let Some((b, _)) = &self.best {
                if new_key > b >> (self.total_bits - new_bits) {
                    continue;
                }
            }
            placed.push(v);
            self.dfs(placed, next, new_key, new_bits);
            placed.pop();
        }
    }

    /// Row bits for labelling `v` next, and the refined cells.
    fn split(&self, cells: &[Vec<usize>], v: usize) -> (u128, Vec<Vec<usize>>) {
        let nbrs = self.adj[v];
        let mut row = 0u128;
        let mut next = Vec::with_capacity(cells.len() + 1);
        for (k, cell) in cells.iter().enumerate() {
            let (ones, zeros): (Vec<usize>, Vec<usize>) = cell
                .iter()
                .copied()
                .filter(|&u| k > 0 || u != v)
                .partition(|&u| nbrs >> u & 1 == 1);
            let len = ones.len() + zeros.len();
            row = (row << len) | ((1u128 << ones.len()) - 1);
            if !zeros.is_empty() {
                next.push(zeros);
            }
            if !ones.is_empty() {
                next.push(ones);
            }
        }
        (row, next)
    }
}

/// One canonical representative per isomorphism class of `n`-vertex graphs,
/// in canonical-form order.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    check_limit("vertex count", n, ENUMERATE_LIMIT)?;
    let mut all: BTreeSet<Graph> = BTreeSet::new();
    let mut level: BTreeSet<Graph> = BTreeSet::from([Graph::empty(n)]);
    for _ in 0..=pair_count(n) {
        let mut next = BTreeSet::new();
        for g in &level {
            let mask = g.mask();
            for p in 0..pair_count(n) {
                if mask >> p & 1 == 0 {
                    let h = Graph::from_mask(n, mask | 1 << p);
                    next.insert(canonical_unchecked(&h).0);
                }
            }
        }
        all.append(&mut level);
        level = next;
    }
    Ok(all.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut p: Vec<usize> = (0..n).collect();
        heap(n, &mut p, &mut out);
        out
    }

    fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(p.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, p, out);
            if k.is_multiple_of(2) {
                p.swap(i, k - 1);
            } else {
                p.swap(0, k - 1);
            }
        }
    }

    /// Exhaustive n! oracle.
    fn brute_canonical(g: &Graph, perms: &[Vec<usize>]) -> Graph {
        perms
            .iter()
            .map(|p| g.relabel(p))
            .min_by_key(|h| h.adjacency_key())
            .unwrap()
    }

    #[test]
    fn path_relabelings_agree() {
        let a: Graph = "3:0-1,1-2".parse().unwrap();
        let b: Graph = "3:0-2,2-1".parse().unwrap();
        assert_eq!(canonical(&a).unwrap(), canonical(&b).unwrap());
    }

    #[test]
    fn edgeless_is_fixed() {
        for n in 0..=8 {
            assert_eq!(canonical(&Graph::empty(n)).unwrap(), Graph::empty(n));
        }
    }

    #[test]
    fn witness_permutation_relabels_to_canonical() {
        let g: Graph = "6:0-1,1-2,2-0,3-4,0-5".parse().unwrap();
        let (c, perm) = canonical_form(&g).unwrap();
        assert_eq!(g.relabel(&perm), c);
    }

    #[test]
    fn matches_exhaustive_oracle_up_to_five() {
        for n in 0..=5 {
            let perms = permutations(n);
            for mask in 0..1u128 << pair_count(n) {
                let g = Graph::from_mask(n, mask);
                assert_eq!(canonical(&g).unwrap(), brute_canonical(&g, &perms), "{g}");
            }
        }
    }

    #[test]
    fn matches_exhaustive_oracle_on_six_vertex_sample() {
        let perms = permutations(6);
        // every 37th labelled graph on 6 vertices
        for mask in (0..1u128 << 15).step_by(37) {
            let g = Graph::from_mask(6, mask);
            assert_eq!(canonical(&g).unwrap(), brute_canonical(&g, &perms), "{g}");
        }
    }

    #[test]
    fn invariant_under_every_relabeling() {
        for n in 0..=5 {
            let perms = permutations(n);
            for mask in (0..1u128 << pair_count(n)).step_by(7) {
                let g = Graph::from_mask(n, mask);
                let c = canonical(&g).unwrap();
                assert_eq!(canonical(&c).unwrap(), c);
                for p in &perms {
                    assert_eq!(canonical(&g.relabel(p)).unwrap(), c);
                }
            }
        }
    }

    #[test]
    fn labelled_four_vertex_graphs_give_eleven_classes() {
        let classes: BTreeSet<Graph> = (0..64u128)
            .map(|m| canonical(&Graph::from_mask(4, m)).unwrap())
            .collect();
        assert_eq!(classes.len(), 11);
    }

    #[test]
    fn class_counts_through_seven() {
        let sizes: Vec<usize> = (0..=7).map(|n| enumerate_graphs(n).unwrap().len()).collect();
        assert_eq!(sizes, vec![1, 1, 2, 4, 11, 34, 156, 1044]);
    }

    #[test]
    fn enumeration_matches_labelled_canonicalization() {
        // brute-force oracle: canonicalize all 2^10 labelled graphs on 5 vertices
        let brute: Vec<Graph> = (0..1u128 << 10)
            .map(|m| canonical(&Graph::from_mask(5, m)).unwrap())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        assert_eq!(enumerate_graphs(5).unwrap(), brute);
    }

    #[test]
    fn complement_respects_classes() {
        let perms = permutations(5);
        for g in enumerate_graphs(5).unwrap() {
            let c = canonical(&g.complement()).unwrap();
            for p in perms.iter().step_by(11) {
                assert_eq!(canonical(&g.relabel(p).complement()).unwrap(), c);
            }
        }
    }

    #[test]
    fn limits() {
        assert!(enumerate_graphs(8).is_err());
        assert!(canonical(&Graph::empty(11)).is_err());
        let petersen: Graph =
            "10:0-1,1-2,2-3,3-4,4-0,0-5,1-6,2-7,3-8,4-9,5-7,7-9,9-6,6-8,8-5".parse().unwrap();
        let (c, perm) = canonical_form(&petersen).unwrap();
        assert_eq!(petersen.relabel(&perm), c);
        assert_eq!(c.edge_count(), 15);
    }
}
