use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::canon::{canonical_form, canonical_unchecked, CANON_LIMIT};
use super::graph::{Graph, OptionalGraph};
use crate::error::{check_limit, Result};

/// Largest optional-edge count [`expand`] will handle.
pub const EXPAND_LIMIT: usize = 20;

/// Integer formal sum of graphs up to isomorphism. Keys are canonical forms;
/// zero coefficients are never stored.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct GraphSum {
    terms: BTreeMap<Graph, BigInt>,
}

impl GraphSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(g: &Graph) -> Result<Self> {
        let mut s = Self::zero();
        s.add_term(g, BigInt::one())?;
        Ok(s)
    }

    /// Adds `coeff * g`, canonicalizing `g`.
    pub fn add_term(&mut self, g: &Graph, coeff: impl Into<BigInt>) -> Result<()> {
        check_limit("vertex count", g.n(), CANON_LIMIT)?;
        self.add_canonical(canonical_unchecked(g).0, coeff.into());
        Ok(())
    }

    fn add_canonical(&mut self, g: Graph, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(g).or_default();
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&g);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Graph, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, g: &Graph) -> BigInt {
        canonical_form(g)
            .ok()
            .and_then(|(c, _)| self.terms.get(&c).cloned())
            .unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Common vertex count of the terms, if any.
    pub fn order(&self) -> Option<usize> {
        self.terms.keys().next().map(Graph::n)
    }

    pub fn scale(&self, k: &BigInt) -> GraphSum {
        if k.is_zero() {
            return GraphSum::zero();
        }
        GraphSum {
            terms: self.terms.iter().map(|(g, c)| (*g, c * k)).collect(),
        }
    }

    /// Sum of absolute coefficients.
    pub fn mass(&self) -> BigInt {
        self.terms.values().map(BigInt::abs).sum()
    }

    /// Bilinear extension of disjoint union.
    pub fn disjoint_union(&self, other: &GraphSum) -> Result<GraphSum> {
        let mut out = GraphSum::zero();
        for (g, c) in &self.terms {
            for (h, d) in &other.terms {
                out.add_term(&g.disjoint_union(h), c * d)?;
            }
        }
        Ok(out)
    }
}

impl Add for &GraphSum {
    type Output = GraphSum;

    fn add(self, rhs: &GraphSum) -> GraphSum {
        let mut out = self.clone();
        for (g, c) in &rhs.terms {
            out.add_canonical(*g, c.clone());
        }
        out
    }
}

impl Sub for &GraphSum {
    type Output = GraphSum;

    fn sub(self, rhs: &GraphSum) -> GraphSum {
        self + &(-rhs)
    }
}

impl Neg for &GraphSum {
    type Output = GraphSum;

    fn neg(self) -> GraphSum {
        GraphSum {
            terms: self.terms.iter().map(|(g, c)| (*g, -c)).collect(),
        }
    }
}

impl fmt::Display for GraphSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (g, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            let a = c.abs();
            if a.is_one() {
                write!(f, "({g})")?;
            } else {
                write!(f, "{a}({g})")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GraphSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GraphSum({self})")
    }
}

/// The `2^|C|` signed completions `(-1)^{|C|-|B|} (V, E ∪ B)`, before any
/// merging of isomorphic terms.
pub fn completions(og: &OptionalGraph) -> Result<Vec<(Graph, i8)>> {
    let c = og.optional_count();
    check_limit("optional edge count", c, EXPAND_LIMIT)?;
    let optional_bits: Vec<u128> = (0..128)
        .filter(|p| og.optional().mask() >> p & 1 == 1)
        .map(|p| 1u128 << p)
        .collect();
    let base = og.regular().mask();
    Ok((0u32..1 << c)
        .map(|choice| {
            let mut mask = base;
            for (k, bit) in optional_bits.iter().enumerate() {
                if choice >> k & 1 == 1 {
                    mask |= bit;
                }
            }
            let sign = if (c - choice.count_ones() as usize).is_multiple_of(2) { 1 } else { -1 };
            (Graph::from_mask(og.n(), mask), sign)
        })
        .collect())
}

/// Expands a graph with optional edges into a formal sum of ordinary graphs.
pub fn expand(og: &OptionalGraph) -> Result<GraphSum> {
    check_limit("vertex count", og.n(), CANON_LIMIT)?;
    let mut out = GraphSum::zero();
    for (g, sign) in completions(og)? {
        out.add_term(&g, sign)?;
    }
    Ok(out)
}
