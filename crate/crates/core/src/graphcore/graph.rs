use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{FlagError, Result};

/// Largest vertex count a [`Graph`] can hold. Edge sets are `u128` masks over
/// the `n(n-1)/2` vertex pairs.
pub const MAX_VERTICES: usize = 16;

/// Number of unordered vertex pairs on `n` vertices.
pub const fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Position of the pair `{i, j}` (`i < j`) in the lexicographic pair order
/// `(0,1), (0,2), ..., (0,n-1), (1,2), ...`.
pub const fn pair_index(i: usize, j: usize, n: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

/// Iterates all pairs `(i, j)` with `i < j < n` in pair order.
pub fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
}

/// A simple undirected graph on vertices `0..n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: u128,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "graph on {n} vertices exceeds {MAX_VERTICES}");
        Graph { n, edges: 0 }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        g.edges = full_mask(n);
        g
    }

    /// Builds a graph from an edge list, validating every pair.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(FlagError::SizeLimit {
                what: "vertex count",
                limit: MAX_VERTICES,
                got: n,
            });
        }
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            let bit = checked_pair_bit(u, v, n)?;
            if g.edges & bit != 0 {
                return Err(FlagError::Invariant(format!(
                    "duplicate edge {}-{}",
                    u.min(v),
                    u.max(v)
                )));
            }
            g.edges |= bit;
        }
        Ok(g)
    }

    /// Builds a graph from a pair-indexed edge mask. Bits beyond the pair
    /// count are rejected.
    pub fn from_mask(n: usize, mask: u128) -> Self {
        assert!(n <= MAX_VERTICES);
        assert_eq!(mask & !full_mask(n), 0, "mask has bits beyond the pair count");
        Graph { n, edges: mask }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Pair-indexed edge mask; bit `p` is set iff pair `p` is an edge.
    pub fn mask(&self) -> u128 {
        self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u == v || u >= self.n || v >= self.n {
            return false;
        }
        let (i, j) = (u.min(v), u.max(v));
        self.edges >> pair_index(i, j, self.n) & 1 == 1
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        pairs(self.n)
            .enumerate()
            .filter(|(p, _)| self.edges >> p & 1 == 1)
            .map(|(_, e)| e)
            .collect()
    }

    /// Neighbourhood bitmasks, one `u32` per vertex.
    pub fn adjacency(&self) -> Vec<u32> {
        let mut adj = vec![0u32; self.n];
        for (i, j) in self.edges() {
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency().iter().map(|a| a.count_ones() as usize).collect()
    }

    /// The graph on the same vertices whose edges are the non-edges of `self`.
    pub fn complement(&self) -> Graph {
        Graph {
            n: self.n,
            edges: !self.edges & full_mask(self.n),
        }
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut out = Graph::empty(self.n);
        for (i, j) in self.edges() {
            let (a, b) = (perm[i].min(perm[j]), perm[i].max(perm[j]));
            out.edges |= 1 << pair_index(a, b, self.n);
        }
        out
    }

    /// Subgraph induced on the vertices in `keep` (a vertex bitmask),
    /// renumbered in increasing order.
    pub fn induced(&self, keep: u32) -> Graph {
        let verts: Vec<usize> = (0..self.n).filter(|v| keep >> v & 1 == 1).collect();
        let mut map = vec![usize::MAX; self.n];
        for (k, &v) in verts.iter().enumerate() {
            map[v] = k;
        }
        let m = verts.len();
        let mut out = Graph::empty(m);
        for (i, j) in self.edges() {
            if map[i] != usize::MAX && map[j] != usize::MAX {
                out.edges |= 1 << pair_index(map[i], map[j], m);
            }
        }
        out
    }

    /// Spanning subgraph keeping only the edges selected by `sub` (a mask
    /// that must be contained in this graph's edge mask).
    pub fn spanning(&self, sub: u128) -> Graph {
        debug_assert_eq!(sub & !self.edges, 0);
        Graph { n: self.n, edges: sub }
    }

    /// Disjoint union; the vertices of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut edges: Vec<(usize, usize)> = self.edges();
        edges.extend(other.edges().into_iter().map(|(i, j)| (i + self.n, j + self.n)));
        Graph::from_edges(n, &edges).expect("disjoint union of valid graphs")
    }

    /// Adjacency bit-string in pair order, as a number whose most significant
    /// of the `n(n-1)/2` bits is pair `(0,1)`. Numeric order on equal `n`
    /// coincides with lexicographic order of the bit-strings.
    pub fn adjacency_key(&self) -> u128 {
        let total = pair_count(self.n);
        let mut key = 0u128;
        for p in 0..total {
            if self.edges >> p & 1 == 1 {
                key |= 1 << (total - 1 - p);
            }
        }
        key
    }

    /// `n ":" bitstring` over the fixed pair order.
    pub fn bitstring(&self) -> String {
        let bits: String = (0..pair_count(self.n))
            .map(|p| if self.edges >> p & 1 == 1 { '1' } else { '0' })
            .collect();
        format!("{}:{}", self.n, bits)
    }

    pub fn from_bitstring(s: &str) -> Result<Graph> {
        let (n, bits) = s.split_once(':').ok_or_else(|| FlagError::Parse {
            pos: 0,
            msg: "expected `n:bitstring`".into(),
        })?;
        let n: usize = n.trim().parse().map_err(|_| FlagError::Parse {
            pos: 0,
            msg: format!("bad vertex count `{n}`"),
        })?;
        if n > MAX_VERTICES {
            return Err(FlagError::SizeLimit {
                what: "vertex count",
                limit: MAX_VERTICES,
                got: n,
            });
        }
        if bits.len() != pair_count(n) {
            return Err(FlagError::Parse {
                pos: s.len(),
                msg: format!("expected {} bits, found {}", pair_count(n), bits.len()),
            });
        }
        let mut g = Graph::empty(n);
        for (p, c) in bits.chars().enumerate() {
            match c {
                '0' => {}
                '1' => g.edges |= 1 << p,
                _ => {
                    return Err(FlagError::Parse {
                        pos: n.to_string().len() + 1 + p,
                        msg: format!("unexpected `{c}` in bitstring"),
                    })
                }
            }
        }
        Ok(g)
    }

    /// Connected components as vertex bitmasks, ordered by smallest vertex.
    pub fn components(&self) -> Vec<u32> {
        components_of(&self.adjacency())
    }

    pub fn is_acyclic(&self) -> bool {
        self.edge_count() + self.components().len() == self.n
    }

    /// The partition of `n` given by connected-component sizes.
    pub fn connected_partition(&self) -> super::Partition {
        super::Partition::new(
            self.components()
                .into_iter()
                .map(|c| c.count_ones() as usize)
                .collect(),
        )
    }
}

pub(crate) fn components_of(adj: &[u32]) -> Vec<u32> {
    let n = adj.len();
    let mut seen = 0u32;
    let mut out = Vec::new();
    for start in 0..n {
        if seen >> start & 1 == 1 {
            continue;
        }
        let mut comp = 1u32 << start;
        let mut frontier = comp;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = adj[v] & !comp;
            comp |= fresh;
            frontier |= fresh;
        }
        seen |= comp;
        out.push(comp);
    }
    out
}

fn full_mask(n: usize) -> u128 {
    let total = pair_count(n);
    if total == 128 {
        u128::MAX
    } else {
        (1u128 << total) - 1
    }
}

fn checked_pair_bit(u: usize, v: usize, n: usize) -> Result<u128> {
    if u == v {
        return Err(FlagError::Invariant(format!("self-loop at vertex {u}")));
    }
    if u >= n || v >= n {
        return Err(FlagError::Invariant(format!(
            "edge {u}-{v} out of range for {n} vertices"
        )));
    }
    Ok(1 << pair_index(u.min(v), u.max(v), n))
}

impl Ord for Graph {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.adjacency_key().cmp(&other.adjacency_key()))
    }
}

impl PartialOrd for Graph {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.n)?;
        let edges = self.edges();
        for (k, (i, j)) in edges.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}-{j}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({self})")
    }
}

/// A graph whose pairs are either absent, regular edges, or optional edges.
/// It stands for the signed sum of its `2^|C|` completions.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct OptionalGraph {
    regular: Graph,
    optional: u128,
}

impl OptionalGraph {
    pub fn new(n: usize, regular: &[(usize, usize)], optional: &[(usize, usize)]) -> Result<Self> {
        let reg = Graph::from_edges(n, regular)?;
        let opt = Graph::from_edges(n, optional)?;
        if reg.edges & opt.edges != 0 {
            let clash = Graph::from_mask(n, reg.edges & opt.edges).edges()[0];
            return Err(FlagError::Invariant(format!(
                "pair {}-{} listed both regular and optional",
                clash.0, clash.1
            )));
        }
        Ok(OptionalGraph {
            regular: reg,
            optional: opt.edges,
        })
    }

    pub fn from_masks(n: usize, regular: u128, optional: u128) -> Self {
        assert_eq!(regular & optional, 0);
        OptionalGraph {
            regular: Graph::from_mask(n, regular),
            optional: Graph::from_mask(n, optional).edges,
        }
    }

    pub fn n(&self) -> usize {
        self.regular.n
    }

    pub fn regular(&self) -> Graph {
        self.regular
    }

    pub fn optional(&self) -> Graph {
        Graph::from_mask(self.regular.n, self.optional)
    }

    pub fn optional_count(&self) -> usize {
        self.optional.count_ones() as usize
    }

    pub fn is_ordinary(&self) -> bool {
        self.optional == 0
    }

    pub fn disjoint_union(&self, other: &OptionalGraph) -> OptionalGraph {
        let reg = self.regular.disjoint_union(&other.regular);
        let opt = self.optional().disjoint_union(&other.optional());
        OptionalGraph::from_masks(reg.n, reg.edges, opt.edges)
    }
}

impl From<Graph> for OptionalGraph {
    fn from(g: Graph) -> Self {
        OptionalGraph {
            regular: g,
            optional: 0,
        }
    }
}

impl fmt::Display for OptionalGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n();
        write!(f, "{n}:")?;
        let mut first = true;
        for (p, (i, j)) in pairs(n).enumerate() {
            let tag = if self.regular.edges >> p & 1 == 1 {
                ""
            } else if self.optional >> p & 1 == 1 {
                "?"
            } else {
                continue;
            };
            if !first {
                f.write_str(",")?;
            }
            first = false;
            write!(f, "{tag}{i}-{j}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for OptionalGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OptionalGraph({self})")
    }
}

/// Parses `n ":" edge ("," edge)*` where `edge = ["?"] i "-" j`.
pub fn parse_graph(text: &str) -> Result<OptionalGraph> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    p.skip_ws();
    let n = p.number()?;
    if n > MAX_VERTICES {
        return Err(FlagError::SizeLimit {
            what: "vertex count",
            limit: MAX_VERTICES,
            got: n,
        });
    }
    p.skip_ws();
    p.expect(b':')?;
    p.skip_ws();
    let mut regular = Vec::new();
    let mut optional = Vec::new();
    let mut seen = 0u128;
    if !p.at_end() {
        loop {
            p.skip_ws();
            let start = p.pos;
            let is_optional = p.eat(b'?');
            let i = p.number()?;
            p.skip_ws();
            p.expect(b'-')?;
            p.skip_ws();
            let j = p.number()?;
            let bit = checked_pair_bit(i, j, n).map_err(|e| match e {
                FlagError::Invariant(msg) => FlagError::Parse { pos: start, msg },
                other => other,
            })?;
            if seen & bit != 0 {
                return Err(FlagError::Parse {
                    pos: start,
                    msg: format!("duplicate pair {}-{}", i.min(j), i.max(j)),
                });
            }
            seen |= bit;
            if is_optional {
                optional.push((i, j));
            } else {
                regular.push((i, j));
            }
            p.skip_ws();
            if p.at_end() {
                break;
            }
            p.expect(b',')?;
        }
    }
    OptionalGraph::new(n, &regular, &optional)
}

impl FromStr for OptionalGraph {
    type Err = FlagError;

    fn from_str(s: &str) -> Result<Self> {
        parse_graph(s)
    }
}

impl FromStr for Graph {
    type Err = FlagError;

    /// Parses the edge-list grammar; optional edges are rejected.
    fn from_str(s: &str) -> Result<Self> {
        let og = parse_graph(s)?;
        if !og.is_ordinary() {
            return Err(FlagError::Invariant(
                "optional edges are not allowed in an ordinary graph".into(),
            ));
        }
        Ok(og.regular)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.src.get(self.pos) == Some(&c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(FlagError::Parse {
                pos: self.pos,
                msg: match self.src.get(self.pos) {
                    Some(&found) => format!("expected `{}`, found `{}`", c as char, found as char),
                    None => format!("expected `{}`, found end of input", c as char),
                },
            })
        }
    }

    fn number(&mut self) -> Result<usize> {
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(FlagError::Parse {
                pos: start,
                msg: "expected a number".into(),
            });
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| FlagError::Parse {
                pos: start,
                msg: "number too large".into(),
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_index_is_row_major() {
        let n = 5;
        for (k, (i, j)) in pairs(n).enumerate() {
            assert_eq!(pair_index(i, j, n), k);
        }
    }

    #[test]
    fn parse_edgeless() {
        let g = parse_graph("3:").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.regular().edge_count(), 0);
        assert!(g.is_ordinary());
        assert_eq!(parse_graph("0:").unwrap().n(), 0);
    }

    #[test]
    fn parse_path_and_optional_triangle() {
        let a4 = parse_graph("4:0-1,1-2,2-3").unwrap();
        assert_eq!(a4.regular().edges(), vec![(0, 1), (1, 2), (2, 3)]);
        let tri = parse_graph("3:?0-1,?1-2,?0-2").unwrap();
        assert_eq!(tri.optional_count(), 3);
        assert_eq!(tri.regular().edge_count(), 0);
        assert_eq!(tri.to_string(), "3:?0-1,?0-2,?1-2");
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(matches!(parse_graph("3:0-0"), Err(FlagError::Parse { .. })));
        assert!(matches!(parse_graph("3:0-3"), Err(FlagError::Parse { .. })));
        assert!(matches!(parse_graph("3:0-1,1-0"), Err(FlagError::Parse { .. })));
        assert!(matches!(parse_graph("3:0-1,?0-1"), Err(FlagError::Parse { .. })));
        assert!(matches!(parse_graph("3 0-1"), Err(FlagError::Parse { pos: 2, .. })));
        assert!(matches!(parse_graph("3:0-1,"), Err(FlagError::Parse { .. })));
        assert!(matches!(parse_graph("40:"), Err(FlagError::SizeLimit { .. })));
        let err = parse_graph("3:0-1,1-1").unwrap_err();
        assert!(err.to_string().contains("self-loop"), "{err}");
    }

    #[test]
    fn complement_examples() {
        let e3: Graph = "3:".parse().unwrap();
        assert_eq!(e3.complement(), Graph::complete(3));
        let g: Graph = "4:0-1".parse().unwrap();
        assert_eq!(g.complement().edge_count(), 5);
    }

    #[test]
    fn complement_is_involution() {
        for n in 0..=5 {
            for mask in 0..1u128 << pair_count(n) {
                let g = Graph::from_mask(n, mask);
                assert_eq!(g.complement().complement(), g);
            }
        }
    }

    #[test]
    fn connected_partition_examples() {
        let p = |s: &str| s.parse::<Graph>().unwrap().connected_partition();
        assert_eq!(p("4:0-1,1-2,2-3").parts(), &[4]);
        assert_eq!(p("4:0-1").parts(), &[2, 1, 1]);
        assert_eq!(p("4:").parts(), &[1, 1, 1, 1]);
        assert_eq!(p("0:").parts(), &[] as &[usize]);
    }

    #[test]
    fn bitstring_round_trip() {
        let g: Graph = "4:0-1,2-3".parse().unwrap();
        assert_eq!(g.bitstring(), "4:100001");
        assert_eq!(Graph::from_bitstring("4:100001").unwrap(), g);
        assert!(Graph::from_bitstring("4:10").is_err());
    }

    #[test]
    fn induced_and_union() {
        let g: Graph = "4:0-1,1-2,2-3".parse().unwrap();
        assert_eq!(g.induced(0b1110).to_string(), "3:0-1,1-2");
        let u = g.disjoint_union(&"2:0-1".parse().unwrap());
        assert_eq!(u.to_string(), "6:0-1,1-2,2-3,4-5");
        assert!(u.is_acyclic());
        assert!(!Graph::complete(3).is_acyclic());
    }
}
