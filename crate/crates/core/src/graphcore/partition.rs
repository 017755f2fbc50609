use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{FlagError, Result};
use crate::shelling::Word;

/// An integer partition, parts stored in non-increasing order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts the given positive parts into non-increasing order.
    pub fn new(mut parts: Vec<usize>) -> Self {
        assert!(parts.iter().all(|&p| p > 0), "partition parts must be positive");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// `[1+1+...+1]`
    pub fn singletons(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `b^{m1-1} a b^{m2-1} a ...` with parts taken in non-decreasing order.
    /// Distinct partitions of the same `n` give distinct words.
    pub fn anchor_word(&self) -> Word {
        let mut w = Word::empty();
        for &m in self.parts.iter().rev() {
            for _ in 1..m {
                w.push(true);
            }
            w.push(false);
        }
        w
    }
}

/// All partitions of `n`, ordered by anchor word (lexicographic, `a < b`).
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    out.sort();
    out
}

fn fill(rest: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for part in (1..=max.min(rest)).rev() {
        current.push(part);
        fill(rest - part, part, current, out);
        current.pop();
    }
}

/// Number of partitions of `n`.
pub fn partition_count(n: usize) -> usize {
    enumerate_partitions(n).len()
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n()
            .cmp(&other.n())
            .then_with(|| self.anchor_word().cmp(&other.anchor_word()))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                f.write_str("+")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = FlagError;

    /// Accepts `[3+1]`, `3+1` or `[]`; parts may come in any order.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .map(|r| {
                r.strip_suffix(']').ok_or(FlagError::Parse {
                    pos: t.len(),
                    msg: "missing `]`".into(),
                })
            })
            .unwrap_or(Ok(t))?;
        if inner.trim().is_empty() {
            return Ok(Partition { parts: vec![] });
        }
        let mut parts = Vec::new();
        let mut pos = 0;
        for piece in inner.split('+') {
            let v: usize = piece.trim().parse().map_err(|_| FlagError::Parse {
                pos,
                msg: format!("bad part `{}`", piece.trim()),
            })?;
            if v == 0 {
                return Err(FlagError::Parse {
                    pos,
                    msg: "parts must be positive".into(),
                });
            }
            parts.push(v);
            pos += piece.len() + 1;
        }
        Ok(Partition::new(parts))
    }
}
