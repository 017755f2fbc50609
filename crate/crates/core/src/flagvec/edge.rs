use std::collections::HashMap;

use super::EdgeWordVector;
use crate::error::{check_limit, Result};
use crate::graphcore::Graph;

/// Largest edge count for the edge flag vector.
pub const EDGE_FLAG_LIMIT: usize = 7;

/// Sum over all edge removal orders of `Π_k (a + (d_min - 1) b + (d_max - d_min) c)`,
/// where `d_min ≤ d_max` are the end degrees of the `k`-th removed edge in
/// the graph that still contains it.
pub fn edge_flag_vector(g: &Graph) -> Result<EdgeWordVector> {
    let edges = g.edges();
    let m = edges.len();
    check_limit("edge count", m, EDGE_FLAG_LIMIT)?;
    let mut memo: HashMap<u32, Vec<i128>> = HashMap::new();
    let full = if m == 0 { 0 } else { u32::MAX >> (32 - m) };
    let dense = remaining(&edges, g.n(), full, &mut memo);
    let mut out = EdgeWordVector::zero(m);
    for (idx, &c) in dense.iter().enumerate() {
        if c != 0 {
            out.add_term(decode(idx, m), c);
        }
    }
    Ok(out)
}

/// Dense vector over words of length `|set|`, base 3 with the first letter
/// most significant (`a = 0, b = 1, c = 2`).
fn remaining(
    edges: &[(usize, usize)],
    n: usize,
    set: u32,
    memo: &mut HashMap<u32, Vec<i128>>,
) -> Vec<i128> {
    if set == 0 {
        return vec![1];
    }
    if let Some(v) = memo.get(&set) {
        return v.clone();
    }
    let k = set.count_ones();
    let block = 3usize.pow(k - 1);
    let mut degree = vec![0i128; n];
    for (e, &(u, v)) in edges.iter().enumerate() {
        if set >> e & 1 == 1 {
            degree[u] += 1;
            degree[v] += 1;
        }
    }
    let mut out = vec![0i128; 3 * block];
    for (e, &(u, v)) in edges.iter().enumerate() {
        if set >> e & 1 == 0 {
            continue;
        }
        let (lo, hi) = (degree[u].min(degree[v]), degree[u].max(degree[v]));
        let child = remaining(edges, n, set & !(1 << e), memo);
        for (idx, &c) in child.iter().enumerate() {
            out[idx] += c;
            out[block + idx] += c * (lo - 1);
            out[2 * block + idx] += c * (hi - lo);
        }
    }
    memo.insert(set, out.clone());
    out
}

fn decode(mut idx: usize, m: usize) -> String {
    let mut letters = vec!['a'; m];
    for slot in letters.iter_mut().rev() {
        *slot = ['a', 'b', 'c'][idx % 3];
        idx /= 3;
    }
    letters.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn e(s: &str) -> String {
        edge_flag_vector(&s.parse().unwrap()).unwrap().to_string()
    }

    /// Oracle: walk every edge ordering and expand the product directly.
    fn brute(g: &Graph) -> EdgeWordVector {
        let edges = g.edges();
        let m = edges.len();
        let mut out = EdgeWordVector::zero(m);
        let mut order: Vec<usize> = (0..m).collect();
        permute(&mut order, 0, &mut |ord| {
            let mut deg = g.degrees();
            let mut words: Vec<(String, i64)> = vec![(String::new(), 1)];
            for &k in ord {
                let (u, v) = edges[k];
                let (lo, hi) = (deg[u].min(deg[v]) as i64, deg[u].max(deg[v]) as i64);
                words = words
                    .into_iter()
                    .flat_map(|(w, c)| {
                        [('a', c), ('b', c * (lo - 1)), ('c', c * (hi - lo))]
                            .map(|(l, c)| (format!("{w}{l}"), c))
                    })
                    .collect();
                deg[u] -= 1;
                deg[v] -= 1;
            }
            for (w, c) in words {
                out.add_term(w, c);
            }
        });
        out
    }

    fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == p.len() {
            f(p);
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            permute(p, k + 1, f);
            p.swap(k, i);
        }
    }

    #[test]
    fn examples() {
        assert_eq!(e("2:0-1"), "a");
        assert_eq!(e("4:0-1,2-3"), "2aa");
        assert_eq!(e("3:0-1,1-2"), "2aa + 2ca");
        assert_eq!(e("3:"), "1");
    }

    #[test]
    fn matches_brute_force() {
        for s in ["3:0-1,1-2,0-2", "4:0-1,0-2,0-3", "4:0-1,1-2,2-3,3-0,0-2", "5:0-1,1-2,2-3,3-4,4-0,0-2"] {
            let g: Graph = s.parse().unwrap();
            assert_eq!(edge_flag_vector(&g).unwrap(), brute(&g), "{s}");
        }
    }

    #[test]
    fn total_mass_counts_orderings_at_a_power() {
        let g = Graph::complete(4);
        let v = edge_flag_vector(&g).unwrap();
        assert_eq!(v.coeff(&"aaaaaa".to_string()), BigInt::from(720));
        assert!(edge_flag_vector(&"5:0-1,0-2,0-3,0-4,1-2,1-3,1-4,2-3".parse().unwrap()).is_err());
    }
}
