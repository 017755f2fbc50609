use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use super::{class_points, delta_facets, Facet};
use crate::error::Result;
use crate::exactlin::{lp_feasible, Feasibility, Rational, RationalMatrix};
use crate::flagvec::ConciseVector;
use crate::graphcore::{enumerate_partitions, Graph, Partition};

/// Why a distinct point is or is not a vertex of the hull.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VertexCertificate {
    /// `normal·x + offset` is negative at the point and nonnegative at every
    /// other point.
    Separator { normal: Vec<Rational>, offset: Rational },
    /// Convex weights on other distinct points (indices into
    /// [`HullReport::distinct`]) reproducing the point.
    Combination(Vec<(usize, Rational)>),
}

#[derive(Clone, Debug)]
pub struct HullReport {
    pub n: usize,
    /// Coordinate order of the dense points.
    pub partitions: Vec<Partition>,
    pub points: BTreeMap<Graph, ConciseVector>,
    pub vertex_flags: BTreeMap<Graph, bool>,
    /// Distinct points in first-seen canonical order.
    pub distinct: Vec<Vec<BigInt>>,
    /// One certificate per distinct point.
    pub certificates: Vec<VertexCertificate>,
    pub facets: Option<Vec<Facet>>,
}

impl HullReport {
    pub fn all_distinct(&self) -> bool {
        self.distinct.len() == self.points.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_flags.values().filter(|&&v| v).count()
    }

    /// Re-checks every certificate exactly.
    pub fn verify(&self) -> bool {
        let q = |x: &BigInt| Rational::from_integer(x.clone());
        self.certificates.iter().enumerate().all(|(i, cert)| match cert {
            VertexCertificate::Separator { normal, offset } => {
                let eval = |p: &[BigInt]| -> Rational {
                    normal.iter().zip(p).map(|(a, x)| a * q(x)).sum::<Rational>() + offset
                };
                eval(&self.distinct[i]).is_negative()
                    && self
                        .distinct
                        .iter()
                        .enumerate()
                        .all(|(j, p)| j == i || !eval(p).is_negative())
            }
            VertexCertificate::Combination(weights) => {
                let total: Rational = weights.iter().map(|(_, w)| w.clone()).sum();
                let mut acc = vec![Rational::zero(); self.partitions.len()];
                for (j, w) in weights {
                    for (a, x) in acc.iter_mut().zip(&self.distinct[*j]) {
                        *a += w * q(x);
                    }
                }
                total.is_one()
                    && weights.iter().all(|(j, w)| *j != i && !w.is_negative())
                    && acc.iter().zip(&self.distinct[i]).all(|(a, x)| *a == q(x))
            }
        })
    }

    /// One `graph<TAB>vertex|non-vertex<TAB>concise` line per class, then
    /// one line per facet when present.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (g, v) in &self.points {
            let flag = if self.vertex_flags[g] { "vertex" } else { "non-vertex" };
            let _ = writeln!(out, "{g}\t{flag}\t{}", v.to_text_map());
        }
        if let Some(facets) = &self.facets {
            for f in facets {
                let _ = writeln!(out, "facet\t{}", f.display_with(&self.partitions));
            }
        }
        out
    }
}

/// Classifies every class point of order `n` as a vertex of Δ(n) or not by
/// exact LP.
pub fn delta_vertices(n: usize) -> Result<HullReport> {
    hull_report(n, false)
}

/// [`delta_vertices`], with the facet list of Δ(n) when `with_facets` is set.
pub fn hull_report(n: usize, with_facets: bool) -> Result<HullReport> {
    let partitions = enumerate_partitions(n);
    let classes = class_points(n)?;

    let mut distinct: Vec<Vec<BigInt>> = Vec::new();
    let mut index_of: Vec<usize> = Vec::with_capacity(classes.len());
    for (_, v) in &classes {
        let p = v.to_dense(&partitions);
        let idx = match distinct.iter().position(|q| *q == p) {
            Some(i) => i,
            None => {
                distinct.push(p);
                distinct.len() - 1
            }
        };
        index_of.push(idx);
    }

    let facets = if with_facets {
        let pts: Vec<ConciseVector> = distinct
            .iter()
            .map(|p| {
                let mut v = ConciseVector::zero(n);
                for (part, c) in partitions.iter().zip(p) {
                    v.add_term(part.clone(), c.clone());
                }
                v
            })
            .collect();
        Some(delta_facets(&pts)?)
    } else {
        None
    };

    let certificates: Vec<VertexCertificate> = (0..distinct.len())
        .into_par_iter()
        .map(|i| vertex_test(&distinct, i))
        .collect();

    let mut points = BTreeMap::new();
    let mut vertex_flags = BTreeMap::new();
    for ((g, v), &idx) in classes.into_iter().zip(&index_of) {
        let is_vertex = matches!(certificates[idx], VertexCertificate::Separator { .. });
        vertex_flags.insert(g, is_vertex);
        points.insert(g, v);
    }
    Ok(HullReport {
        n,
        partitions,
        points,
        vertex_flags,
        distinct,
        certificates,
        facets,
    })
}

/// Is `points[i]` a convex combination of the other points?
fn vertex_test(points: &[Vec<BigInt>], i: usize) -> VertexCertificate {
    let others: Vec<usize> = (0..points.len()).filter(|&j| j != i).collect();
    let d = points[i].len();
    let mut rows: Vec<Vec<BigInt>> = (0..d)
        .map(|k| others.iter().map(|&j| points[j][k].clone()).collect())
        .collect();
    rows.push(vec![BigInt::one(); others.len()]);
    let mut rhs: Vec<Rational> = points[i].iter().map(|x| Rational::from_integer(x.clone())).collect();
    rhs.push(Rational::one());
    let eq = RationalMatrix::from_integer_rows(&rows);
    match lp_feasible(&eq, &rhs) {
        Feasibility::Feasible(x) => VertexCertificate::Combination(
            others
                .into_iter()
                .zip(x)
                .filter(|(_, w)| !w.is_zero())
                .collect(),
        ),
        Feasibility::Infeasible(mut y) => {
            let offset = y.pop().expect("certificate has d + 1 entries");
            VertexCertificate::Separator { normal: y, offset }
        }
    }
}
