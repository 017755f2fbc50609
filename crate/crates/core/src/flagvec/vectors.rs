use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::graphcore::Partition;
use crate::shelling::Word;

/// Formal integer combination of keys; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct Combination<K: Ord> {
    coeffs: BTreeMap<K, BigInt>,
}

impl<K: Ord> Default for Combination<K> {
    fn default() -> Self {
        Combination {
            coeffs: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> Combination<K> {
    pub fn add_term(&mut self, key: K, c: impl Into<BigInt>) {
        let c = c.into();
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&key) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.coeffs.remove(&key);
                }
            }
            None => {
                self.coeffs.insert(key, c);
            }
        }
    }

    pub fn coeff(&self, key: &K) -> BigInt {
        self.coeffs.get(key).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    fn add_assign_scaled(&mut self, other: &Self, k: &BigInt) {
        for (key, c) in &other.coeffs {
            self.add_term(key.clone(), c * k);
        }
    }
}

macro_rules! indexed_vector {
    ($(#[$doc:meta])* $name:ident, $key:ty, $len:ident) => {
        $(#[$doc])*
        #[derive(Clone, PartialEq, Eq)]
        pub struct $name {
            $len: usize,
            terms: Combination<$key>,
        }

        impl $name {
            pub fn zero($len: usize) -> Self {
                $name { $len, terms: Combination::default() }
            }

            pub fn $len(&self) -> usize {
                self.$len
            }

            pub fn coeff(&self, key: &$key) -> BigInt {
                self.terms.coeff(key)
            }

            /// Nonzero entries in key order.
            pub fn iter(&self) -> impl Iterator<Item = (&$key, &BigInt)> {
                self.terms.iter()
            }

            pub fn is_zero(&self) -> bool {
                self.terms.is_zero()
            }

            /// Number of nonzero entries.
            pub fn support_len(&self) -> usize {
                self.terms.len()
            }

            pub fn scale(&self, k: &BigInt) -> Self {
                let mut out = Self::zero(self.$len);
                out.terms.add_assign_scaled(&self.terms, k);
                out
            }

            /// `self += k * other`
            pub fn add_scaled(&mut self, other: &Self, k: &BigInt) {
                assert_eq!(self.$len, other.$len, "vectors of different orders");
                self.terms.add_assign_scaled(&other.terms, k);
            }

            /// `key:coeff` pairs separated by spaces, in key order.
            pub fn to_text_map(&self) -> String {
                self.iter()
                    .map(|(k, c)| format!("{k}:{c}"))
                    .collect::<Vec<_>>()
                    .join(" ")
            }
        }

        impl Add for &$name {
            type Output = $name;

            fn add(self, rhs: &$name) -> $name {
                let mut out = self.clone();
                out.add_scaled(rhs, &BigInt::one());
                out
            }
        }

        impl Sub for &$name {
            type Output = $name;

            fn sub(self, rhs: &$name) -> $name {
                let mut out = self.clone();
                out.add_scaled(rhs, &-BigInt::one());
                out
            }
        }

        impl Neg for &$name {
            type Output = $name;

            fn neg(self) -> $name {
                self.scale(&-BigInt::one())
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write_sum(f, self.iter())
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}({}; {})", stringify!($name), self.$len, self)
            }
        }
    };
}

indexed_vector!(
    /// Verbose flag vector: integer coefficients on words of length `n`.
    /// On zero vertices it is the scalar carried by the empty word.
    VerboseVector,
    Word,
    n
);

indexed_vector!(
    /// Concise (or subgraph) flag vector: integer coefficients on
    /// partitions of `n`, iterated in anchor-word order.
    ConciseVector,
    Partition,
    n
);

indexed_vector!(
    /// Edge flag vector: integer coefficients on words of length `m` over
    /// `{a, b, c}`.
    EdgeWordVector,
    String,
    m
);

impl VerboseVector {
    pub fn add_term(&mut self, w: Word, c: impl Into<BigInt>) {
        assert_eq!(w.len(), self.n, "word {w} has the wrong length");
        self.terms.add_term(w, c);
    }

    /// From a dense coefficient slice indexed by word bits.
    pub fn from_dense(n: usize, dense: &[i128]) -> Self {
        assert_eq!(dense.len(), 1 << n);
        let mut v = VerboseVector::zero(n);
        for (bits, &c) in dense.iter().enumerate() {
            v.terms.add_term(Word::from_bits(n, bits as u64), c);
        }
        v
    }
}

impl ConciseVector {
    pub fn add_term(&mut self, p: Partition, c: impl Into<BigInt>) {
        assert_eq!(p.n(), self.n, "partition {p} has the wrong order");
        self.terms.add_term(p, c);
    }

    /// `1·π`
    pub fn unit(p: &Partition) -> Self {
        let mut v = ConciseVector::zero(p.n());
        v.add_term(p.clone(), 1);
        v
    }

    /// Coefficients listed in the order of `partitions`.
    pub fn to_dense(&self, partitions: &[Partition]) -> Vec<BigInt> {
        partitions.iter().map(|p| self.coeff(p)).collect()
    }
}

impl EdgeWordVector {
    pub fn add_term(&mut self, w: String, c: impl Into<BigInt>) {
        assert_eq!(w.len(), self.m, "edge word {w} has the wrong length");
        assert!(w.chars().all(|c| matches!(c, 'a' | 'b' | 'c')));
        self.terms.add_term(w, c);
    }
}

fn write_sum<'a, K: fmt::Display + 'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a K, &'a BigInt)>,
) -> fmt::Result {
    let mut first = true;
    for (key, c) in terms {
        let key = key.to_string();
        if first {
            if c.is_negative() {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if c.is_negative() { " - " } else { " + " })?;
        }
        first = false;
        let a = c.abs();
        if key.is_empty() {
            write!(f, "{a}")?;
        } else if a.is_one() {
            f.write_str(&key)?;
        } else {
            write!(f, "{a}{key}")?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}
