use num_bigint::BigInt;

use crate::error::{check_limit, Result};
use crate::graphcore::{expand, GraphSum, OptionalGraph, Partition};
use crate::shelling::Word;

/// Largest part allowed in [`basis_graph`].
pub const BASIS_PART_LIMIT: usize = 9;

/// The path `A_m` on `m` vertices with all edges optional.
pub fn optional_path(m: usize) -> OptionalGraph {
    let edges: Vec<(usize, usize)> = (1..m).map(|i| (i - 1, i)).collect();
    OptionalGraph::new(m, &[], &edges).expect("path edges are valid")
}

/// `D_m` with all edges optional: vertex 0 carries two arms of one edge
/// (to 1 and 2) and one arm of `m-3` edges (0-3-4-...). `D_3` is `A_3`.
pub fn optional_dynkin_d(m: usize) -> OptionalGraph {
    assert!(m >= 3, "D_m needs at least 3 vertices");
    let mut edges = vec![(0, 1), (0, 2)];
    let mut prev = 0;
    for v in 3..m {
        edges.push((prev, v));
        prev = v;
    }
    OptionalGraph::new(m, &[], &edges).expect("D_m edges are valid")
}

/// Formal sum of graphs whose concise flag vector is exactly `1·π`:
/// the disjoint union over parts of `2A_m - D_m` (`m ≥ 3`) or `A_m`
/// (`m ≤ 2`), expanded into ordinary graphs.
pub fn basis_graph(p: &Partition) -> Result<GraphSum> {
    if let Some(&largest) = p.parts().first() {
        check_limit("basis part", largest, BASIS_PART_LIMIT)?;
    }
    let mut terms: Vec<(OptionalGraph, BigInt)> = vec![(OptionalGraph::from_masks(0, 0, 0), 1.into())];
    for &m in p.parts() {
        let factors: Vec<(OptionalGraph, BigInt)> = if m >= 3 {
            vec![(optional_path(m), 2.into()), (optional_dynkin_d(m), (-1).into())]
        } else {
            vec![(optional_path(m), 1.into())]
        };
        terms = terms
            .iter()
            .flat_map(|(g, c)| factors.iter().map(move |(h, d)| (g.disjoint_union(h), c * d)))
            .collect();
    }
    let mut out = GraphSum::zero();
    for (og, c) in terms {
        out = &out + &expand(&og)?.scale(&c);
    }
    Ok(out)
}

/// Disjoint union of optional paths, one per part: the simpler independent
/// family whose verbose vectors are triangular on the anchor words.
pub fn path_union(p: &Partition) -> Result<GraphSum> {
    let og = p
        .parts()
        .iter()
        .fold(OptionalGraph::from_masks(0, 0, 0), |g, &m| g.disjoint_union(&optional_path(m)));
    expand(&og)
}

/// `w(π) = b^{n_1-1} a · b^{n_2-1} a ⋯` with parts in non-decreasing order.
pub fn anchor_word(p: &Partition) -> Word {
    p.anchor_word()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flagvec::{concise_flag_vector, ConciseVector};
    use crate::graphcore::enumerate_partitions;

    #[test]
    fn d_three_is_a_three() {
        let d3 = expand(&optional_dynkin_d(3)).unwrap();
        assert_eq!(d3, expand(&optional_path(3)).unwrap());
        let b = basis_graph(&"[3]".parse().unwrap()).unwrap();
        assert_eq!(b, d3);
    }

    #[test]
    fn path_and_d_concise_vectors() {
        for m in 3..=7 {
            let full = Partition::new(vec![m]);
            let a = concise_flag_vector(&optional_path(m)).unwrap();
            assert_eq!(a, ConciseVector::unit(&full).scale(&BigInt::from(1u64 << (m - 3))));
            let d = concise_flag_vector(&optional_dynkin_d(m)).unwrap();
            assert_eq!(d, ConciseVector::unit(&full).scale(&BigInt::from((1u64 << (m - 2)) - 1)));
        }
    }

    #[test]
    fn basis_is_unit() {
        for n in 0..=6 {
            for p in enumerate_partitions(n) {
                let b = basis_graph(&p).unwrap();
                assert_eq!(concise_flag_vector(&b).unwrap(), ConciseVector::unit(&p), "{p}");
            }
        }
    }

    #[test]
    fn unit_parts() {
        let b = basis_graph(&"[1+1]".parse().unwrap()).unwrap();
        assert_eq!(b.to_string(), "(2:)");
        assert_eq!(concise_flag_vector(&b).unwrap().to_string(), "[1+1]");
    }

    #[test]
    fn anchor_examples() {
        assert_eq!(anchor_word(&"[2+1+1]".parse().unwrap()).to_string(), "aaba");
        assert_eq!(anchor_word(&"[4]".parse().unwrap()).to_string(), "bbba");
        assert_eq!(anchor_word(&Partition::singletons(3)).to_string(), "aaa");
    }

    #[test]
    fn part_limit() {
        assert!(basis_graph(&"[10]".parse().unwrap()).is_err());
    }
}
