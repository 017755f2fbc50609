use std::collections::HashMap;
use std::rc::Rc;

use super::VerboseVector;
use crate::error::{check_limit, Result};
use crate::graphcore::{canonical_unchecked, expand, Graph, GraphSum, OptionalGraph};
use crate::shelling::{enumerate_shellings, SHELLING_LIMIT};

/// How the verbose flag vector of an ordinary graph is evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum VerboseMethod {
    /// `f(G) = Σ_v (a + m_v b) f(G_v)`, memoised on canonical forms.
    #[default]
    Recursion,
    /// Sum of the per-shelling contributions over all `n!` shellings.
    ShellingSum,
}

/// Anything that denotes a formal integer sum of graphs.
pub trait GraphLike {
    fn n(&self) -> usize;
    fn to_graph_sum(&self) -> Result<GraphSum>;
}

impl GraphLike for Graph {
    fn n(&self) -> usize {
        Graph::n(self)
    }

    fn to_graph_sum(&self) -> Result<GraphSum> {
        GraphSum::single(self)
    }
}

impl GraphLike for OptionalGraph {
    fn n(&self) -> usize {
        OptionalGraph::n(self)
    }

    fn to_graph_sum(&self) -> Result<GraphSum> {
        expand(self)
    }
}

impl GraphLike for GraphSum {
    /// Zero for the empty sum.
    fn n(&self) -> usize {
        self.order().unwrap_or(0)
    }

    fn to_graph_sum(&self) -> Result<GraphSum> {
        Ok(self.clone())
    }
}

/// Verbose flag vector, extended linearly over formal sums.
pub fn verbose_flag_vector(g: &impl GraphLike, method: VerboseMethod) -> Result<VerboseVector> {
    check_limit("vertex count", g.n(), SHELLING_LIMIT)?;
    let sum = g.to_graph_sum()?;
    let mut out = VerboseVector::zero(g.n());
    let mut cache = VerboseCache::default();
    for (h, c) in sum.terms() {
        let v = match method {
            VerboseMethod::Recursion => VerboseVector::from_dense(h.n(), &cache.get(h)),
            VerboseMethod::ShellingSum => shelling_sum(h)?,
        };
        out.add_scaled(&v, c);
    }
    Ok(out)
}

/// Verbose flag vector of a single ordinary graph by recursion.
pub fn verbose_of_graph(g: &Graph) -> Result<VerboseVector> {
    check_limit("vertex count", g.n(), SHELLING_LIMIT)?;
    Ok(VerboseVector::from_dense(g.n(), &VerboseCache::default().get(g)))
}

fn shelling_sum(g: &Graph) -> Result<VerboseVector> {
    let n = g.n();
    let mut dense = vec![0i128; 1 << n];
    let mut terms = vec![0i128; 1 << n];
    for s in enumerate_shellings(g)? {
        let m = s.forward_degrees(g);
        terms[0] = 1;
        for (k, &mk) in m.iter().enumerate() {
            // extend words of length k by one letter
            for idx in (0..1usize << k).rev() {
                let c = terms[idx];
                terms[2 * idx] = c;
                terms[2 * idx + 1] = c * mk as i128;
            }
        }
        for (d, t) in dense.iter_mut().zip(&terms) {
            *d += t;
        }
    }
    Ok(VerboseVector::from_dense(n, &dense))
}

/// Dense verbose vectors keyed by canonical form.
#[derive(Default)]
pub(crate) struct VerboseCache {
    memo: HashMap<Graph, Rc<Vec<i128>>>,
}

impl VerboseCache {
    pub(crate) fn get(&mut self, g: &Graph) -> Rc<Vec<i128>> {
        let key = canonical_unchecked(g).0;
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let n = key.n();
        let v = if n == 0 {
            vec![1]
        } else {
            let half = 1usize << (n - 1);
            let all = (1u32 << n) - 1;
            let degrees = key.degrees();
            let mut dense = vec![0i128; 2 * half];
            for (v, &m) in degrees.iter().enumerate() {
                let child = self.get(&key.induced(all & !(1 << v)));
                for (idx, &c) in child.iter().enumerate() {
                    dense[idx] += c;
                    dense[half + idx] += c * m as i128;
                }
            }
            dense
        };
        let v = Rc::new(v);
        self.memo.insert(key, v.clone());
        v
    }
}
