//! Exact phase-1 simplex for `A x = b, x ≥ 0`.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::matrix::{is_nonnegative, Rational, RationalMatrix};

/// Outcome of [`lp_feasible`], each carrying a checkable certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Feasibility {
    /// `x ≥ 0` with `A x = b`.
    Feasible(Vec<Rational>),
    /// Farkas vector `y` with `yᵀA ≥ 0` componentwise and `yᵀb < 0`.
    Infeasible(Vec<Rational>),
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible(_))
    }

    /// Re-checks the certificate against the system exactly.
    pub fn verify(&self, eq: &RationalMatrix, rhs: &[Rational]) -> bool {
        match self {
            Feasibility::Feasible(x) => {
                x.len() == eq.cols() && is_nonnegative(x) && eq.mul_vec(x) == rhs
            }
            Feasibility::Infeasible(y) => {
                y.len() == eq.rows()
                    && is_nonnegative(&eq.left_mul_vec(y))
                    && y.iter().zip(rhs).map(|(a, b)| a * b).sum::<Rational>().is_negative()
            }
        }
    }
}

/// Decides feasibility of `eq · x = rhs, x ≥ 0` with Bland's rule.
pub fn lp_feasible(eq: &RationalMatrix, rhs: &[Rational]) -> Feasibility {
    assert_eq!(eq.rows(), rhs.len(), "rhs length must match the row count");
    let (m, n) = (eq.rows(), eq.cols());
    let width = n + m + 1;

    // rows scaled so that the right-hand side is nonnegative
    let signs: Vec<Rational> = rhs
        .iter()
        .map(|b| if b.is_negative() { -Rational::one() } else { Rational::one() })
        .collect();
    let mut t: Vec<Vec<Rational>> = (0..m)
        .map(|i| {
            let mut row: Vec<Rational> = eq.row(i).iter().map(|a| a * &signs[i]).collect();
            row.extend((0..m).map(|k| if k == i { Rational::one() } else { Rational::zero() }));
            row.push(&rhs[i] * &signs[i]);
            row
        })
        .collect();
    let mut basis: Vec<usize> = (n..n + m).collect();

    // reduced costs of the phase-1 objective (sum of artificials)
    let mut cost: Vec<Rational> = vec![Rational::zero(); width];
    for row in &t {
        for j in 0..n {
            cost[j] -= &row[j];
        }
        cost[width - 1] -= &row[width - 1];
    }

    while let Some(enter) = (0..n + m).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, BigRational)> = None;
        for (i, row) in t.iter().enumerate() {
            if !row[enter].is_positive() {
                continue;
            }
            let ratio = &row[width - 1] / &row[enter];
            let better = match &leave {
                None => true,
                Some((li, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*li]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        let (r, _) = leave.expect("phase-1 objective is bounded below");
        pivot(&mut t, &mut cost, r, enter);
        basis[r] = enter;
    }

    // objective value is -cost[rhs]
    if cost[width - 1].is_zero() {
        let mut x = vec![Rational::zero(); n];
        for (i, &b) in basis.iter().enumerate() {
            if b < n {
                x[b] = t[i][width - 1].clone();
            }
        }
        Feasibility::Feasible(x)
    } else {
        // y* = c_Bᵀ B⁻¹, read off the artificial columns; certificate is -y*
        let y: Vec<Rational> = (0..m)
            .map(|k| {
                let ystar: Rational = basis
                    .iter()
                    .enumerate()
                    .filter(|(_, &b)| b >= n)
                    .map(|(i, _)| t[i][n + k].clone())
                    .sum();
                -ystar * &signs[k]
            })
            .collect();
        Feasibility::Infeasible(y)
    }
}

fn pivot(t: &mut [Vec<Rational>], cost: &mut [Rational], r: usize, c: usize) {
    let inv = t[r][c].recip();
    for x in t[r].iter_mut() {
        *x *= &inv;
    }
    let pivot_row = t[r].clone();
    for (i, row) in t.iter_mut().enumerate() {
        if i == r || row[c].is_zero() {
            continue;
        }
        let f = row[c].clone();
        for (x, p) in row.iter_mut().zip(&pivot_row) {
            if !p.is_zero() {
                *x -= p * &f;
            }
        }
    }
    if !cost[c].is_zero() {
        let f = cost[c].clone();
        for (x, p) in cost.iter_mut().zip(&pivot_row) {
            if !p.is_zero() {
                *x -= p * &f;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn q(x: i64) -> Rational {
        Rational::from_integer(BigInt::from(x))
    }

    #[test]
    fn simple_feasible() {
        let a = RationalMatrix::from_integer_rows(&[vec![1, 1]]);
        let res = lp_feasible(&a, &[q(1)]);
        assert!(res.is_feasible());
        assert!(res.verify(&a, &[q(1)]));
        assert_eq!(res, Feasibility::Feasible(vec![q(1), q(0)]));
    }

    #[test]
    fn simple_infeasible() {
        let a = RationalMatrix::from_integer_rows(&[vec![1]]);
        let res = lp_feasible(&a, &[q(-1)]);
        assert!(!res.is_feasible());
        assert!(res.verify(&a, &[q(-1)]));
    }

    #[test]
    fn redundant_rows() {
        let a = RationalMatrix::from_integer_rows(&[vec![1, 1, 0], vec![2, 2, 0], vec![0, 1, 1]]);
        let b = [q(2), q(4), q(1)];
        let res = lp_feasible(&a, &b);
        assert!(res.verify(&a, &b));
        assert!(res.is_feasible());
        let b = [q(2), q(5), q(1)];
        let res = lp_feasible(&a, &b);
        assert!(!res.is_feasible());
        assert!(res.verify(&a, &b));
    }

    #[test]
    fn degenerate_cycling_example() {
        // Beale's example constraints (degenerate vertex), as equalities with slacks
        let a = RationalMatrix::from_rows(vec![
            vec![q(1) / q(4), q(-8), q(-1), q(9), q(1), q(0), q(0)],
            vec![q(1) / q(2), q(-12), q(-1) / q(2), q(3), q(0), q(1), q(0)],
            vec![q(0), q(0), q(1), q(0), q(0), q(0), q(1)],
        ]);
        let b = [q(0), q(0), q(1)];
        let res = lp_feasible(&a, &b);
        assert!(res.is_feasible() && res.verify(&a, &b));
    }

    proptest! {
        #[test]
        fn certificates_always_verify(
            rows in 1usize..4,
            cols in 1usize..6,
            entries in proptest::collection::vec(-3i64..=3, 24),
            rhs in proptest::collection::vec(-4i64..=4, 4),
        ) {
            let data: Vec<Vec<i64>> = (0..rows)
                .map(|i| (0..cols).map(|j| entries[i * cols + j]).collect())
                .collect();
            let a = RationalMatrix::from_integer_rows(&data);
            let b: Vec<Rational> = rhs[..rows].iter().map(|&x| q(x)).collect();
            let res = lp_feasible(&a, &b);
            prop_assert!(res.verify(&a, &b), "{:?}", res);
        }
    }
}
