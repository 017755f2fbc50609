use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::VerboseVector;
use crate::error::{check_limit, Result};
use crate::shelling::Word;

/// Largest word length for the `4^n` complement expansion.
pub const COMPLEMENT_LIMIT: usize = 12;
/// Largest order for the closed-form total flag vector.
pub const TOTAL_LIMIT: usize = 20;

/// Substitutes `a ↦ a + (i-1) b`, `b ↦ -b` letter by letter, `i` the
/// right-to-left index, and expands. Sends the verbose vector of a graph to
/// that of its complement; applying it twice is the identity.
pub fn complement_transform(v: &VerboseVector) -> Result<VerboseVector> {
    let n = v.n();
    check_limit("word length", n, COMPLEMENT_LIMIT)?;
    let mut acc: HashMap<u64, BigInt> = HashMap::new();
    for (w, c) in v.iter() {
        // (partial image bits, coefficient) built left to right
        let mut images: Vec<(u64, BigInt)> = vec![(0, c.clone())];
        for k in 0..n {
            let i = w.right_index(k) as i64;
            images = if w.is_b(k) {
                images.into_iter().map(|(bits, c)| (bits << 1 | 1, -c)).collect()
            } else {
                images
                    .into_iter()
                    .flat_map(|(bits, c)| {
                        let b = &c * (i - 1);
                        [(bits << 1, c), (bits << 1 | 1, b)]
                    })
                    .filter(|(_, c)| !c.is_zero())
                    .collect()
            };
        }
        for (bits, c) in images {
            *acc.entry(bits).or_default() += c;
        }
    }
    let mut out = VerboseVector::zero(n);
    for (bits, c) in acc {
        out.add_term(Word::from_bits(n, bits), c);
    }
    Ok(out)
}

/// Sum of the verbose flag vectors of all `2^{n(n-1)/2}` labelled graphs on
/// `n` vertices, from the product formula
/// `f_w(n) = n! Π_i λ_i`, `λ_i = 2^{i-1}` for `a` and `(i-1) 2^{i-2}` for `b`.
pub fn total_flag_vector(n: usize) -> Result<VerboseVector> {
    check_limit("order", n, TOTAL_LIMIT)?;
    let factorial: BigInt = (1..=n).map(BigInt::from).product();
    let mut out = VerboseVector::zero(n);
    for w in Word::all(n) {
        let mut c = factorial.clone();
        for k in 0..n {
            let i = w.right_index(k);
            c *= lambda(i, w.is_b(k));
            if c.is_zero() {
                break;
            }
        }
        out.add_term(w, c);
    }
    Ok(out)
}

fn lambda(i: usize, is_b: bool) -> BigInt {
    if is_b {
        if i == 1 {
            BigInt::zero()
        } else {
            BigInt::from(i - 1) << (i - 2)
        }
    } else {
        BigInt::one() << (i - 1)
    }
}

/// Total of the `w` coefficient over all labelled graphs and the
/// corresponding mean, as `(total, number of labelled graphs)`.
pub fn average_coefficient(n: usize, w: &Word) -> Result<(BigInt, BigInt)> {
    check_limit("order", n, TOTAL_LIMIT)?;
    assert_eq!(w.len(), n);
    let factorial: BigInt = (1..=n).map(BigInt::from).product();
    let total = (0..n).fold(factorial, |c, k| c * lambda(w.right_index(k), w.is_b(k)));
    let graphs = BigInt::one() << crate::graphcore::pair_count(n);
    Ok((total, graphs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flagvec::{verbose_flag_vector, VerboseMethod};
    use crate::graphcore::{enumerate_graphs, pair_count, Graph};

    fn verbose(g: &Graph) -> VerboseVector {
        verbose_flag_vector(g, VerboseMethod::Recursion).unwrap()
    }

    #[test]
    fn edgeless_to_complete() {
        let mut v = VerboseVector::zero(3);
        v.add_term(Word::all_a(3), 6);
        assert_eq!(
            complement_transform(&v).unwrap().to_string(),
            "6aaa + 6aba + 12baa + 12bba"
        );
    }

    #[test]
    fn conjugates_complement() {
        for n in 0..=5 {
            for g in enumerate_graphs(n).unwrap() {
                assert_eq!(
                    complement_transform(&verbose(&g)).unwrap(),
                    verbose(&g.complement()),
                    "{g}"
                );
            }
        }
    }

    #[test]
    fn four_one_goes_to_four_five() {
        let g: Graph = "4:0-1".parse().unwrap();
        let h = g.complement();
        assert_eq!(h.edge_count(), 5);
        assert_eq!(complement_transform(&verbose(&g)).unwrap(), verbose(&h));
    }

    #[test]
    fn total_examples() {
        let t3 = total_flag_vector(3).unwrap();
        assert_eq!(t3.coeff(&"baa".parse().unwrap()), BigInt::from(48));
        let t2 = total_flag_vector(2).unwrap();
        assert_eq!(t2.coeff(&"aa".parse().unwrap()), BigInt::from(4));
        for n in 1..=8 {
            let t = total_flag_vector(n).unwrap();
            assert!(t.iter().all(|(w, _)| !w.is_b(n - 1)));
        }
        assert_eq!(total_flag_vector(0).unwrap().to_string(), "1");
        assert!(total_flag_vector(21).is_err());
    }

    #[test]
    fn total_matches_labelled_sum() {
        for n in 0..=4 {
            let mut brute = VerboseVector::zero(n);
            for mask in 0..1u128 << pair_count(n) {
                brute.add_scaled(&verbose(&Graph::from_mask(n, mask)), &BigInt::one());
            }
            assert_eq!(total_flag_vector(n).unwrap(), brute, "n = {n}");
        }
    }

    #[test]
    fn average_of_baa() {
        let (total, graphs) = average_coefficient(3, &"baa".parse().unwrap()).unwrap();
        assert_eq!(total, BigInt::from(48));
        assert_eq!(graphs, BigInt::from(8));
    }
}
