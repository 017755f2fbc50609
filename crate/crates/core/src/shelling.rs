//! Shellings (vertex removal orders), acyclic shelling numbers, tree
//! shelling numbers, per-shelling verbose contributions and semi-concise
//! flag counts.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{check_limit, FlagError, Result};
use crate::flagvec::VerboseVector;
use crate::graphcore::{components_of, Graph};

/// Largest vertex count for which shellings are enumerated or counted.
pub const SHELLING_LIMIT: usize = 8;
/// Largest tree component handled by [`tree_shelling_number`].
pub const TREE_LIMIT: usize = 12;

/// A word over `{a, b}`. The leftmost letter belongs to the first vertex
/// removed. Words of equal length compare lexicographically with `a < b`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word {
    // length first so the derived order compares lengths before letters
    len: u8,
    /// letter at left offset `k` is bit `len - 1 - k`; set means `b`
    bits: u64,
}

impl Word {
    pub const MAX_LEN: usize = 64;

    pub fn empty() -> Self {
        Word::default()
    }

    /// Builds a word from its `b` mask, most significant bit leftmost.
    pub fn from_bits(len: usize, bits: u64) -> Self {
        assert!(len <= Self::MAX_LEN);
        assert!(len == 64 || bits >> len == 0);
        Word { len: len as u8, bits }
    }

    /// `a^n`
    pub fn all_a(n: usize) -> Self {
        Word::from_bits(n, 0)
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Whether the letter at left offset `k` is `b`.
    pub fn is_b(&self, k: usize) -> bool {
        assert!(k < self.len());
        self.bits >> (self.len() - 1 - k) & 1 == 1
    }

    /// The right-to-left index of left offset `k`: the rightmost letter has
    /// index 1, the leftmost index `len`.
    pub fn right_index(&self, k: usize) -> usize {
        self.len() - k
    }

    pub fn push(&mut self, b: bool) {
        assert!(self.len() < Self::MAX_LEN);
        self.bits = self.bits << 1 | b as u64;
        self.len += 1;
    }

    pub fn letters(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len()).map(|k| self.is_b(k))
    }

    pub fn count_b(&self) -> usize {
        self.bits.count_ones() as usize
    }

    /// All `2^n` words of length `n` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Word> {
        assert!(n < Self::MAX_LEN);
        (0..1u64 << n).map(move |bits| Word::from_bits(n, bits))
    }

    /// Lengths `d(1), ..., d(r+1)` of the `a`-runs when the word is written
    /// `a^{d(1)} b a^{d(2)} b ... b a^{d(r+1)}`.
    pub fn a_runs(&self) -> Vec<usize> {
        let mut runs = vec![0];
        for b in self.letters() {
            if b {
                runs.push(0);
            } else {
                *runs.last_mut().unwrap() += 1;
            }
        }
        runs
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.letters() {
            f.write_str(if b { "b" } else { "a" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = FlagError;

    fn from_str(s: &str) -> Result<Self> {
        let mut w = Word::empty();
        for (pos, c) in s.chars().enumerate() {
            if w.len() == Self::MAX_LEN {
                return Err(FlagError::Parse {
                    pos,
                    msg: "word too long".into(),
                });
            }
            match c {
                'a' => w.push(false),
                'b' => w.push(true),
                _ => {
                    return Err(FlagError::Parse {
                        pos,
                        msg: format!("unexpected letter `{c}`, words use only `a` and `b`"),
                    })
                }
            }
        }
        Ok(w)
    }
}

/// A removal order: `order[0]` is removed first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Shelling {
    order: Vec<usize>,
}

impl Shelling {
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let n = order.len();
        let mut seen = vec![false; n];
        for &v in &order {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(FlagError::Invariant(format!(
                    "{order:?} is not a permutation of 0..{n}"
                )));
            }
        }
        Ok(Shelling { order })
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// `m_i`: edges from the `i`-th removed vertex to vertices removed later.
    pub fn forward_degrees(&self, g: &Graph) -> Vec<usize> {
        let adj = g.adjacency();
        let mut remaining: u32 = self.order.iter().map(|&v| 1u32 << v).sum();
        self.order
            .iter()
            .map(|&v| {
                remaining &= !(1 << v);
                (adj[v] & remaining).count_ones() as usize
            })
            .collect()
    }
}

/// All `n!` shellings in lexicographic order of the removal sequence.
pub fn enumerate_shellings(g: &Graph) -> Result<Shellings> {
    check_limit("vertex count", g.n(), SHELLING_LIMIT)?;
    Ok(Shellings {
        next: Some((0..g.n()).collect()),
    })
}

pub struct Shellings {
    next: Option<Vec<usize>>,
}

impl Iterator for Shellings {
    type Item = Shelling;

    fn next(&mut self) -> Option<Shelling> {
        let current = self.next.take()?;
        let mut p = current.clone();
        if let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) {
            let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
            p.swap(i - 1, j);
            p[i..].reverse();
            self.next = Some(p);
        }
        Some(Shelling { order: current })
    }
}

/// Number of shellings in which every removed vertex has at most one edge
/// to the vertices still present. Zero when `g` has a cycle.
pub fn acyclic_shelling_number(g: &Graph) -> Result<u64> {
    check_limit("vertex count", g.n(), SHELLING_LIMIT)?;
    Ok(acyclic_count(&g.adjacency()))
}

/// Subset dynamic programme over the set of vertices still present.
pub(crate) fn acyclic_count(adj: &[u32]) -> u64 {
    let n = adj.len();
    let mut ways = vec![0u64; 1 << n];
    ways[0] = 1;
    for set in 1u32..1 << n {
        let mut total = 0;
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if (adj[v] & set).count_ones() <= 1 {
                total += ways[(set & !(1 << v)) as usize];
            }
        }
        ways[set as usize] = total;
    }
    ways[(1usize << n) - 1]
}

/// `s(G)`: product over tree components of the number of leaf-removal
/// sequences down to a 3-vertex tree (components with at most 3 vertices
/// contribute 1); zero if `g` has a cycle.
pub fn tree_shelling_number(g: &Graph) -> Result<u64> {
    if !g.is_acyclic() {
        return Ok(0);
    }
    let adj = g.adjacency();
    let mut product = 1u64;
    for comp in components_of(&adj) {
        check_limit("tree component size", comp.count_ones() as usize, TREE_LIMIT)?;
        product *= tree_count(&adj, comp);
    }
    Ok(product)
}

/// Leaf-removal sequences from the tree spanned by `comp` down to 3 vertices.
pub(crate) fn tree_count(adj: &[u32], comp: u32) -> u64 {
    fn go(adj: &[u32], set: u32, memo: &mut HashMap<u32, u64>) -> u64 {
        if set.count_ones() <= 3 {
            return 1;
        }
        if let Some(&c) = memo.get(&set) {
            return c;
        }
        let mut total = 0;
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if (adj[v] & set).count_ones() == 1 {
                total += go(adj, set & !(1 << v), memo);
            }
        }
        memo.insert(set, total);
        total
    }
    go(adj, comp, &mut HashMap::new())
}

/// Expansion of the noncommutative product `Π_i (a + m_i b)` for one shelling.
pub fn verbose_contribution(g: &Graph, s: &Shelling) -> Result<VerboseVector> {
    if s.order.len() != g.n() {
        return Err(FlagError::Invariant(format!(
            "shelling of length {} for a graph on {} vertices",
            s.order.len(),
            g.n()
        )));
    }
    let m = s.forward_degrees(g);
    let mut dense = vec![1i128];
    for &mi in &m {
        dense = dense
            .iter()
            .flat_map(|&c| [c, c * mi as i128])
            .collect();
    }
    Ok(VerboseVector::from_dense(g.n(), &dense))
}

/// Number of semi-concise flags of type `w` on `g`: ordered choices of
/// disjoint vertex sets `S_1, v_1, S_2, v_2, ..., v_r, S_{r+1}` with
/// `|S_i| = d(i)`, weighted by the number of edges from each `v_i` to
/// vertices placed after it.
pub fn count_semiconcise_flags(g: &Graph, w: &Word) -> Result<BigInt> {
    if w.len() != g.n() {
        return Err(FlagError::Invariant(format!(
            "word of length {} for a graph on {} vertices",
            w.len(),
            g.n()
        )));
    }
    let runs = w.a_runs();
    let mut steps = Vec::with_capacity(2 * runs.len());
    for (k, &d) in runs.iter().enumerate() {
        if k > 0 {
            steps.push(Step::Edge);
        }
        steps.push(Step::Set(d));
    }
    let adj = g.adjacency();
    let full = if g.n() == 0 { 0 } else { u32::MAX >> (32 - g.n()) };
    let mut memo = HashMap::new();
    Ok(BigInt::from(semi_count(&adj, &steps, 0, full, &mut memo)))
}

#[derive(Clone, Copy)]
enum Step {
    Set(usize),
    Edge,
}

fn semi_count(
    adj: &[u32],
    steps: &[Step],
    idx: usize,
    remaining: u32,
    memo: &mut HashMap<(usize, u32), u128>,
) -> u128 {
    if idx == steps.len() {
        return (remaining == 0) as u128;
    }
    if let Some(&c) = memo.get(&(idx, remaining)) {
        return c;
    }
    let total = match steps[idx] {
        Step::Set(d) => {
            let mut total = 0;
            // all submasks of `remaining` of size d
            let mut sub = remaining;
            loop {
                if sub.count_ones() as usize == d {
                    total += semi_count(adj, steps, idx + 1, remaining & !sub, memo);
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & remaining;
            }
            total
        }
        Step::Edge => {
            let mut total = 0;
            let mut rest = remaining;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let after = remaining & !(1 << v);
                let choices = (adj[v] & after).count_ones() as u128;
                if choices > 0 {
                    total += choices * semi_count(adj, steps, idx + 1, after, memo);
                }
            }
            total
        }
    };
    memo.insert((idx, remaining), total);
    total
}
