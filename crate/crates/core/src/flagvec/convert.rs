//! Linear maps between the verbose and concise forms.
//!
//! A forest of optional edges with tree components of sizes `n_1..n_r`
//! has verbose flag vector `Π s^a(T_i) · shuffle(π)`, where `shuffle(π)` is
//! the sum of all interleavings of the words `b^{n_i-1} a`. Since
//! `s^a(T) = c(|T|)·s(T)` with `c(1)=1, c(2)=2, c(m≥3)=4`, the verbose vector
//! of any graph is `Σ_π f^c_π · Π c(n_i) · shuffle(π)`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{ConciseVector, VerboseVector};
use crate::error::{check_limit, FlagError, Result};
use crate::graphcore::{enumerate_partitions, Partition};
use crate::shelling::Word;

/// Largest order for which the partition-indexed conversions are built.
pub const CONVERSION_LIMIT: usize = 12;

/// Ratio `s^a(T)/s(T)` for a tree component with `m` vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ComponentFactors {
    pub single: u64,
    pub pair: u64,
    pub larger: u64,
}

impl Default for ComponentFactors {
    fn default() -> Self {
        ComponentFactors {
            single: 1,
            pair: 2,
            larger: 4,
        }
    }
}

impl ComponentFactors {
    pub fn factor(&self, m: usize) -> u64 {
        match m {
            0 => panic!("empty component"),
            1 => self.single,
            2 => self.pair,
            _ => self.larger,
        }
    }

    /// `Π c(n_i)` over the parts of `p`.
    pub fn product(&self, p: &Partition) -> BigInt {
        p.parts().iter().map(|&m| BigInt::from(self.factor(m))).product()
    }
}

/// Sum over all interleavings of the words `b^{n_i-1} a`, one per part,
/// the parts treated as distinguishable.
pub fn shuffle(p: &Partition) -> Result<VerboseVector> {
    check_limit("partition order", p.n(), CONVERSION_LIMIT)?;
    let mut acc: HashMap<Word, u128> = HashMap::from([(Word::empty(), 1)]);
    for &m in p.parts() {
        let mut next: HashMap<Word, u128> = HashMap::new();
        for (x, c) in &acc {
            let len = x.len() + m;
            // `chosen` marks the positions taken by the new block
            for chosen in 0u64..1 << len {
                if chosen.count_ones() as usize != m {
                    continue;
                }
                let mut w = Word::empty();
                let (mut i, mut j) = (0, 0);
                for pos in 0..len {
                    if chosen >> (len - 1 - pos) & 1 == 1 {
                        j += 1;
                        w.push(j < m);
                    } else {
                        w.push(x.is_b(i));
                        i += 1;
                    }
                }
                *next.entry(w).or_default() += c;
            }
        }
        acc = next;
    }
    let mut out = VerboseVector::zero(p.n());
    for (w, c) in acc {
        out.add_term(w, c);
    }
    Ok(out)
}

/// `Σ_π v(π) · Π c(n_i) · shuffle(π)`.
pub fn verbose_from_concise(v: &ConciseVector) -> Result<VerboseVector> {
    verbose_from_concise_with(v, &ComponentFactors::default())
}

pub fn verbose_from_concise_with(
    v: &ConciseVector,
    factors: &ComponentFactors,
) -> Result<VerboseVector> {
    let mut out = VerboseVector::zero(v.n());
    for (p, c) in v.iter() {
        out.add_scaled(&shuffle(p)?, &(c * factors.product(p)));
    }
    Ok(out)
}

/// Recovers the concise vector from a verbose one by solving the triangular
/// system on the anchor words `w(π)`. With `check_consistency`, the result is
/// mapped back and compared on every word; a mismatch means the input lies
/// outside the span of flag vectors.
pub fn concise_from_verbose(v: &VerboseVector, check_consistency: bool) -> Result<ConciseVector> {
    concise_from_verbose_with(v, check_consistency, &ComponentFactors::default())
}

pub fn concise_from_verbose_with(
    v: &VerboseVector,
    check_consistency: bool,
    factors: &ComponentFactors,
) -> Result<ConciseVector> {
    let n = v.n();
    check_limit("order", n, CONVERSION_LIMIT)?;
    let partitions = enumerate_partitions(n);
    let anchors: Vec<Word> = partitions.iter().map(Partition::anchor_word).collect();
    let columns: Vec<VerboseVector> = partitions
        .iter()
        .map(|p| Ok(shuffle(p)?.scale(&factors.product(p))))
        .collect::<Result<_>>()?;

    let mut solution: Vec<BigRational> = Vec::with_capacity(partitions.len());
    for (k, anchor) in anchors.iter().enumerate() {
        let mut rhs = BigRational::from_integer(v.coeff(anchor));
        for (earlier, x) in solution.iter().enumerate() {
            rhs -= x * BigRational::from_integer(columns[earlier].coeff(anchor));
        }
        let diag = columns[k].coeff(anchor);
        if diag.is_zero() {
            return Err(FlagError::Inconsistent(format!(
                "zero diagonal at {}",
                partitions[k]
            )));
        }
        solution.push(rhs / BigRational::from_integer(diag));
    }

    let mut out = ConciseVector::zero(n);
    for (p, x) in partitions.iter().zip(solution) {
        if !x.is_integer() {
            return Err(FlagError::NonExactDivision(format!(
                "coefficient of {p} would be {x}"
            )));
        }
        out.add_term(p.clone(), x.to_integer());
    }
    if check_consistency {
        let back = verbose_from_concise_with(&out, factors)?;
        if &back != v {
            let diff = &back - v;
            let (w, _) = diff.iter().next().expect("nonzero difference");
            return Err(FlagError::Inconsistent(format!(
                "input is outside the span of flag vectors (word {w} disagrees)"
            )));
        }
    }
    Ok(out)
}

/// Matrix `M[π][π'] = Π c(π)·shuffle(π)` at the anchor word of `π'`, rows
/// and columns in anchor order.
pub fn anchor_matrix(n: usize) -> Result<Vec<Vec<BigInt>>> {
    check_limit("order", n, CONVERSION_LIMIT)?;
    let partitions = enumerate_partitions(n);
    let factors = ComponentFactors::default();
    partitions
        .iter()
        .map(|p| {
            let col = shuffle(p)?.scale(&factors.product(p));
            Ok(partitions.iter().map(|q| col.coeff(&q.anchor_word())).collect())
        })
        .collect()
}
