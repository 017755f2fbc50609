use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{check_limit, FlagError, Result};
use crate::exactlin::{primitive, primitive_integer_vector, RationalMatrix};
use crate::flagvec::ConciseVector;
use crate::graphcore::{enumerate_partitions, Partition};

pub const FACET_POINT_LIMIT: usize = 40;
pub const FACET_DIM_LIMIT: usize = 11;

/// The inequality `normal·x + offset ≥ 0`, with coprime integer entries.
///
/// Only meaningful on the affine hull of the input points; `normal` is zero
/// outside the coordinates used to parametrise that hull.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Facet {
    pub normal: Vec<BigInt>,
    pub offset: BigInt,
}

impl Facet {
    pub fn eval(&self, x: &[BigInt]) -> BigInt {
        self.normal.iter().zip(x).map(|(a, b)| a * b).sum::<BigInt>() + &self.offset
    }

    /// e.g. `2*[2+1] - [3] + 1 >= 0`
    pub fn display_with(&self, coords: &[Partition]) -> String {
        let mut out = String::new();
        for (a, p) in self.normal.iter().zip(coords) {
            if a.is_zero() {
                continue;
            }
            let sign = if a.is_negative() { "-" } else { "+" };
            if out.is_empty() {
                if a.is_negative() {
                    out.push('-');
                }
            } else {
                let _ = write!(out, " {sign} ");
            }
            let m = a.abs();
            if m == BigInt::from(1) {
                let _ = write!(out, "{p}");
            } else {
                let _ = write!(out, "{m}*{p}");
            }
        }
        if out.is_empty() {
            let _ = write!(out, "{}", self.offset);
        } else if !self.offset.is_zero() {
            let sign = if self.offset.is_negative() { "-" } else { "+" };
            let _ = write!(out, " {sign} {}", self.offset.abs());
        }
        out.push_str(" >= 0");
        out
    }
}

/// Facets of the convex hull of `points` inside their affine hull, by
/// double description.
pub fn delta_facets(points: &[ConciseVector]) -> Result<Vec<Facet>> {
    check_limit("point count", points.len(), FACET_POINT_LIMIT)?;
    let Some(first) = points.first() else {
        return Err(FlagError::Invariant("no points".into()));
    };
    let n = first.n();
    if points.iter().any(|p| p.n() != n) {
        return Err(FlagError::Invariant("points of different orders".into()));
    }
    let coords = enumerate_partitions(n);
    check_limit("ambient dimension", coords.len(), FACET_DIM_LIMIT)?;
    let dense: Vec<Vec<BigInt>> = points.iter().map(|p| p.to_dense(&coords)).collect();
    Ok(facets_of(&dense))
}

/// Facets of the hull of integer points, each as an inequality in the
/// ambient coordinates.
pub(crate) fn facets_of(points: &[Vec<BigInt>]) -> Vec<Facet> {
    let d = points[0].len();
    let diffs: Vec<Vec<BigInt>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(&points[0]).map(|(a, b)| a - b).collect())
        .collect();
    let pivots = if diffs.is_empty() {
        Vec::new()
    } else {
        RationalMatrix::from_integer_rows(&diffs).rref().1
    };
    let k = pivots.len();
    if k == 0 {
        return Vec::new();
    }

    // homogenised projections (1, x_P); the hull is full dimensional here
    let rows: Vec<Vec<BigInt>> = points
        .iter()
        .map(|p| {
            let mut r = vec![BigInt::from(1)];
            r.extend(pivots.iter().map(|&c| p[c].clone()));
            r
        })
        .collect();
    let mut facets: Vec<Facet> = double_description(&rows, k + 1)
        .into_iter()
        .map(|z| {
            let mut normal = vec![BigInt::zero(); d];
            for (i, &c) in pivots.iter().enumerate() {
                normal[c] = z[i + 1].clone();
            }
            Facet {
                normal,
                offset: z[0].clone(),
            }
        })
        .collect();
    facets.sort();
    facets
}

struct Ray {
    z: Vec<BigInt>,
    /// Processed constraints tight at this ray.
    tight: u64,
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Extreme rays of `{z : rows·z ≥ 0}` for a pointed cone of dimension `dim`.
fn double_description(rows: &[Vec<BigInt>], dim: usize) -> Vec<Vec<BigInt>> {
    // choose an initial basis of independent constraints
    let mut basis: Vec<usize> = Vec::new();
    for i in 0..rows.len() {
        let mut trial: Vec<Vec<BigInt>> = basis.iter().map(|&j| rows[j].clone()).collect();
        trial.push(rows[i].clone());
        if RationalMatrix::from_integer_rows(&trial).rank() == trial.len() {
            basis.push(i);
            if basis.len() == dim {
                break;
            }
        }
    }
    assert_eq!(basis.len(), dim, "constraint rows do not span");

    let mut done: u64 = basis.iter().fold(0, |m, &i| m | 1 << i);
    let mut rays: Vec<Ray> = Vec::new();
    for (pos, &i) in basis.iter().enumerate() {
        let others: Vec<Vec<BigInt>> = basis
            .iter()
            .enumerate()
            .filter(|&(p, _)| p != pos)
            .map(|(_, &j)| rows[j].clone())
            .collect();
        let v = if others.is_empty() {
            vec![BigInt::from(1)]
        } else {
            let ker = RationalMatrix::from_integer_rows(&others).kernel_basis();
            primitive_integer_vector(&ker[0])
        };
        let v = if dot(&rows[i], &v).is_negative() { v.into_iter().map(|x| -x).collect() } else { v };
        rays.push(Ray {
            tight: tight_set(rows, &v, done),
            z: v,
        });
    }

    for i in 0..rows.len() {
        if done >> i & 1 == 1 {
            continue;
        }
        let vals: Vec<BigInt> = rays.iter().map(|r| dot(&rows[i], &r.z)).collect();
        let mut next: Vec<Ray> = Vec::new();
        let (mut pos, mut neg) = (Vec::new(), Vec::new());
        for (r, v) in rays.iter().zip(&vals) {
            if v.is_positive() {
                pos.push(r);
            } else if v.is_negative() {
                neg.push(r);
            }
        }
        let new_done = done | 1 << i;
        for (ai, a) in rays.iter().enumerate() {
            for (bi, b) in rays.iter().enumerate() {
                if !(vals[ai].is_positive() && vals[bi].is_negative()) {
                    continue;
                }
                if !adjacent(&rays, ai, bi, dim) {
                    continue;
                }
                let z: Vec<BigInt> = a
                    .z
                    .iter()
                    .zip(&b.z)
                    .map(|(x, y)| &vals[ai] * y - &vals[bi] * x)
                    .collect();
                let z = primitive(&z);
                next.push(Ray {
                    tight: tight_set(rows, &z, new_done),
                    z,
                });
            }
        }
        for (r, v) in rays.into_iter().zip(&vals) {
            if !v.is_negative() {
                let tight = if v.is_zero() { r.tight | 1 << i } else { r.tight };
                next.push(Ray { z: r.z, tight });
            }
        }
        rays = next;
        done = new_done;
    }
    rays.into_iter().map(|r| r.z).collect()
}

fn tight_set(rows: &[Vec<BigInt>], z: &[BigInt], among: u64) -> u64 {
    (0..rows.len())
        .filter(|&i| among >> i & 1 == 1 && dot(&rows[i], z).is_zero())
        .fold(0, |m, i| m | 1 << i)
}

/// Combinatorial adjacency: the common tight set is large enough and not
/// contained in the tight set of any third ray.
fn adjacent(rays: &[Ray], a: usize, b: usize, dim: usize) -> bool {
    let common = rays[a].tight & rays[b].tight;
    if (common.count_ones() as usize) + 2 < dim {
        return false;
    }
    !rays
        .iter()
        .enumerate()
        .any(|(c, r)| c != a && c != b && common & r.tight == common)
}

/// Checks that every point satisfies every facet and that each facet is
/// tight on an affinely independent set of `dim` points, where `dim` is the
/// dimension of the hull.
pub fn verify_facets(points: &[Vec<BigInt>], facets: &[Facet]) -> bool {
    let affine_rank = |pts: &[&Vec<BigInt>]| -> usize {
        if pts.is_empty() {
            return 0;
        }
        let diffs: Vec<Vec<BigInt>> = pts[1..]
            .iter()
            .map(|p| p.iter().zip(pts[0]).map(|(a, b)| a - b).collect())
            .collect();
        if diffs.is_empty() {
            1
        } else {
            RationalMatrix::from_integer_rows(&diffs).rank() + 1
        }
    };
    let all: Vec<&Vec<BigInt>> = points.iter().collect();
    let dim = affine_rank(&all) - 1;
    facets.iter().all(|f| {
        let tight: Vec<&Vec<BigInt>> = points.iter().filter(|p| f.eval(p).is_zero()).collect();
        points.iter().all(|p| !f.eval(p).is_negative()) && affine_rank(&tight) == dim
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pts(raw: &[&[i64]]) -> Vec<Vec<BigInt>> {
        raw.iter().map(|p| p.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn unit_square() {
        let p = pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let f = facets_of(&p);
        assert_eq!(f.len(), 4);
        assert!(verify_facets(&p, &f));
    }

    #[test]
    fn collinear_points() {
        let p = pts(&[&[0, 0, 1], &[1, 1, 1], &[2, 2, 1]]);
        let f = facets_of(&p);
        assert_eq!(f.len(), 2);
        assert!(verify_facets(&p, &f));
    }

    #[test]
    fn cube_and_cross_polytope() {
        let cube: Vec<Vec<BigInt>> = (0..8)
            .map(|m: i64| (0..3).map(|b| BigInt::from(m >> b & 1)).collect())
            .collect();
        assert_eq!(facets_of(&cube).len(), 6);
        let cross = pts(&[&[1, 0, 0], &[-1, 0, 0], &[0, 1, 0], &[0, -1, 0], &[0, 0, 1], &[0, 0, -1]]);
        let f = facets_of(&cross);
        assert_eq!(f.len(), 8);
        assert!(verify_facets(&cross, &f));
    }

    #[test]
    fn single_point_has_no_facets() {
        assert!(facets_of(&pts(&[&[3, 4]])).is_empty());
    }

    #[test]
    fn display() {
        let coords = crate::graphcore::enumerate_partitions(2);
        let f = Facet {
            normal: vec![BigInt::from(0), BigInt::from(-2)],
            offset: BigInt::from(1),
        };
        assert_eq!(f.display_with(&coords), "-2*[2] + 1 >= 0");
    }

    /// Oracle for full-dimensional hulls in 3 dimensions: every plane through
    /// three affinely independent points with all points on one side.
    fn brute_3d(p: &[Vec<BigInt>]) -> Vec<Facet> {
        let mut out: Vec<Facet> = Vec::new();
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                for k in j + 1..p.len() {
                    let rows: Vec<Vec<BigInt>> = [i, j, k]
                        .iter()
                        .map(|&t| {
                            let mut r = vec![BigInt::from(1)];
                            r.extend(p[t].iter().cloned());
                            r
                        })
                        .collect();
                    let ker = RationalMatrix::from_integer_rows(&rows).kernel_basis();
                    if ker.len() != 1 {
                        continue;
                    }
                    let z = primitive_integer_vector(&ker[0]);
                    for sign in [1, -1] {
                        let f = Facet {
                            normal: z[1..].iter().map(|x| x * sign).collect(),
                            offset: &z[0] * sign,
                        };
                        if p.iter().all(|x| !f.eval(x).is_negative()) && !out.contains(&f) {
                            out.push(f);
                        }
                    }
                }
            }
        }
        out.sort();
        out
    }

    proptest! {
        #[test]
        fn random_hulls_match_oracle(raw in proptest::collection::vec((-4i64..=4, -4i64..=4, -4i64..=4), 4..12)) {
            let p: Vec<Vec<BigInt>> = raw.iter().map(|&(a, b, c)| vec![a.into(), b.into(), c.into()]).collect();
            let f = facets_of(&p);
            prop_assert!(verify_facets(&p, &f));
            let all: Vec<&Vec<BigInt>> = p.iter().collect();
            let diffs: Vec<Vec<BigInt>> = all[1..]
                .iter()
                .map(|q| q.iter().zip(all[0]).map(|(a, b)| a - b).collect())
                .collect();
            if RationalMatrix::from_integer_rows(&diffs).rank() == 3 {
                prop_assert_eq!(f, brute_3d(&p));
            }
        }
    }
}
