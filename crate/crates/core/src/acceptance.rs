//! The release gate: thirteen end-to-end checks against published values and
//! internal consistency, each with a time budget where one applies.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::flagvec::{
    anchor_matrix, basis_graph, complement_transform, concise_flag_vector, concise_from_verbose_with,
    optional_dynkin_d, optional_path, scale_subgraph_to_concise_with, subgraph_flag_vector,
    total_flag_vector, verbose_flag_vector, verbose_from_concise_with, verbose_of_graph, ComponentFactors,
    ConciseVector, VerboseMethod, VerboseVector,
};
use crate::graphcore::{
    enumerate_graphs, enumerate_partitions, expand, pair_count, pair_index, partition_count, Graph,
    GraphSum, OptionalGraph, Partition,
};
use crate::polytope::{delta_vertices, kernel_relations, nullspace_report, span_dimension};
use crate::shelling::{count_semiconcise_flags, Word};

pub const CRITERION_COUNT: usize = 13;

#[derive(Clone, Debug)]
pub struct AcceptanceConfig {
    /// Component factors used by the conversion checks; the default is the
    /// correct table, anything else should make criterion 11 fail.
    pub factors: ComponentFactors,
    pub seed: u64,
}

impl Default for AcceptanceConfig {
    fn default() -> Self {
        AcceptanceConfig {
            factors: ComponentFactors::default(),
            seed: 0x5eed_f1a6,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl CriterionResult {
    /// `PASS  3 concise table (0.12s)` or with a failure reason.
    pub fn line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        let mut s = format!("{status} {:>2} {} ({:.2?})", self.id, self.name, self.elapsed);
        if !self.detail.is_empty() {
            s.push_str(": ");
            s.push_str(&self.detail);
        }
        s
    }
}

type Check = fn(&AcceptanceConfig) -> Result<std::result::Result<String, String>>;

const CRITERIA: [(&str, Option<u64>, Check); CRITERION_COUNT] = [
    ("three-vertex verbose vectors", Some(1), c01_three_vertex),
    ("three-vertex relation in all forms", None, c02_relation),
    ("concise table on four vertices", Some(5), c03_table),
    ("every four-vertex point is a distinct vertex", Some(10), c04_vertices),
    ("span dimension is p(n) for n <= 6", Some(600), c05_span),
    ("recursion and shelling sum agree for n <= 5", None, c06_methods),
    ("complement transform", None, c07_complement),
    ("total flag vector closed form", None, c08_total),
    ("optional cycles vanish", None, c09_optional_cycles),
    ("basis elements and anchor words", None, c10_basis),
    ("conversion closure", None, c11_conversions),
    ("semi-concise identity and divisibility by 12", None, c12_semiconcise),
    ("nullspace at n = 3 and n = 4", None, c13_nullspace),
];

/// Runs criterion `id` (1-based).
pub fn run_criterion(id: usize, cfg: &AcceptanceConfig) -> CriterionResult {
    let (name, budget, check) = CRITERIA[id - 1];
    let start = Instant::now();
    let outcome = check(cfg);
    let elapsed = start.elapsed();
    let (mut passed, mut detail) = match outcome {
        Ok(Ok(d)) => (true, d),
        Ok(Err(d)) => (false, d),
        Err(e) => (false, format!("error: {e}")),
    };
    if let Some(secs) = budget {
        if passed && elapsed > Duration::from_secs(secs) {
            passed = false;
            detail = format!("over the {secs}s budget");
        }
    }
    CriterionResult {
        id,
        name,
        passed,
        detail,
        elapsed,
    }
}

pub fn run_all(cfg: &AcceptanceConfig) -> Vec<CriterionResult> {
    (1..=CRITERION_COUNT).map(|id| run_criterion(id, cfg)).collect()
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Ok(Err(format!($($msg)+)));
        }
    };
}

fn g(s: &str) -> Graph {
    s.parse().expect("fixed graph literal")
}

fn verbose(x: &Graph) -> Result<VerboseVector> {
    verbose_of_graph(x)
}

fn classes_up_to(n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for k in 0..=n {
        out.extend(enumerate_graphs(k)?);
    }
    Ok(out)
}

fn three_vertex() -> [Graph; 4] {
    [g("3:"), g("3:0-1"), g("3:0-1,1-2"), g("3:0-1,1-2,0-2")]
}

fn c01_three_vertex(_: &AcceptanceConfig) -> Result<std::result::Result<String, String>> {
    let expected = [
        "6aaa",
        "6aaa + 2aba + 4baa",
        "6aaa + 4aba + 8baa + 4bba",
        "6aaa + 6aba + 12baa + 12bba",
    ];
    for (x, want) in three_vertex().iter().zip(expected) {
        let got = verbose(x)?.to_string();
        ensure!(got == want, "{x}: got {got}, expected {want}");
    }
    Ok(Ok(String::new()))
}

fn c02_relation(_: &AcceptanceConfig) -> Result<std::result::Result<String, String>> {
    let mut rel = GraphSum::zero();
    for (x, c) in three_vertex().iter().zip([1, -3, 3, -1]) {
        rel.add_term(x, c)?;
    }
    let v = verbose_flag_vector(&rel, VerboseMethod::Recursion)?;
    ensure!(v.is_zero(), "verbose form is {v}");
    let c = concise_flag_vector(&rel)?;
    ensure!(c.is_zero(), "concise form is {c}");
    let s = subgraph_flag_vector(&rel)?;
    ensure!(s.is_zero(), "subgraph form is {s}");
    let tri = expand(&"3:?0-1,?1-2,?0-2".parse::<OptionalGraph>()?)?;
    ensure!(tri == rel || tri == -&rel, "optional triangle expands to {tri}");
    Ok(Ok(String::new()))
}

/// Concise vectors of the eleven classes on four vertices, columns `[1+1+1+1] [2+1+1] [2+2] [3+1] [4]`.
pub const FOUR_VERTEX_CONCISE: [(&str, [i64; 5]); 11] = [
    ("4:", [1, 0, 0, 0, 0]),
    ("4:0-1", [1, 1, 0, 0, 0]),
    ("4:0-1,2-3", [1, 2, 1, 0, 0]),
    ("4:0-1,1-2", [1, 2, 0, 1, 0]),
    ("4:0-1,1-2,2-3", [1, 3, 1, 2, 2]),
    ("4:0-1,1-2,0-2", [1, 3, 0, 3, 0]),
    ("4:0-1,0-2,0-3", [1, 3, 0, 3, 3]),
    ("4:0-3,1-3,2-3,0-2", [1, 4, 1, 5, 7]),
    ("4:0-2,0-3,1-2,1-3", [1, 4, 2, 4, 8]),
    ("4:0-2,0-3,1-2,1-3,2-3", [1, 5, 2, 8, 18]),
    ("4:0-1,0-2,0-3,1-2,1-3,2-3", [1, 6, 3, 12, 36]),
];

const TABLE_COLUMNS: [&str; 5] = ["[1+1+1+1]", "[2+1+1]", "[2+2]", "[3+1]", "[4]"];

fn table_vector(row: &[i64; 5]) -> ConciseVector {
    let mut v = ConciseVector::zero(4);
    for (p, &c) in TABLE_COLUMNS.iter().zip(row) {
        v.add_term(p.parse::<Partition>().expect("column label"), c);
    }
    v
}

fn c03_table(_: &AcceptanceConfig) -> Result<std::result::Result<String, String>> {
    let mut seen = Vec::new();
    for (s, row) in FOUR_VERTEX_CONCISE {
        let x = g(s);
        let got = concise_flag_vector(&x)?;
        ensure!(got == table_vector(&row), "{x}: got {got}");
        seen.push(crate::graphcore::canonical(&x)?);
    }
    seen.sort();
    seen.dedup();
    ensure!(seen == enumerate_graphs(4)?, "table rows do not cover the 11 classes");
    Ok(Ok(String::new()))
}

fn c04_vertices(_: &AcceptanceConfig) -> Result<std::result::Result<String, String>> {
    let r = delta_vertices(4)?;
    ensure!(r.points.len() == 11, "{} classes", r.points.len());
    ensure!(r.all_distinct(), "only {} distinct points", r.distinct.len());
    ensure!(r.vertex_count() == 11, "only {} vertices", r.vertex_count());
    ensure!(r.verify(), "a certificate failed to verify");
    for (s, row) in FOUR_VERTEX_CONCISE {
        let x = crate::graphcore::canonical(&g(s))?;
        ensure!(r.points[&x] == table_vector(&row), "{x} point differs from the table");
    }
    Ok(Ok("11 of 11 vertices".into()))
}

fn c05_span(_: &AcceptanceConfig) -> Result<std::result::Result<String, String>> {
    let mut dims = Vec::new();
    for n in 1..=6 {
        let d = span_dimension(n)?;
        ensure!(d == partition_count(n), "n = {n}: span {d}, p(n) = {}", partition_count(n));
        dims.push(d.to_string());
    }
    Ok(Ok(dims.join(",")))
}

fn c06_methods(_: &AcceptanceConfig) -> Result<std::result::Result<String, String>> {
    let classes = classes_up_to(5)?;
    for x in &classes {
        let a = verbose_flag_vector(x, VerboseMethod::Recursion)?;
        let b = verbose_flag_vector(x, VerboseMethod::ShellingSum)?;
        ensure!(a == b, "{x}: {a} vs {b}");
    }
    Ok(Ok(format!("{} classes", classes.len())))
}

fn c07_complement(_: &AcceptanceConfig) -> Result<std::result::Result<String, String>> {
    let classes = classes_up_to(5)?;
    for x in &classes {
        let v = verbose(x)?;
        let t = complement_transform(&v)?;
        ensure!(t == verbose(&x.complement())?, "{x}: transform disagrees with the complement");
        ensure!(complement_transform(&t)? == v, "{x}: transform is not an involution");
    }
    for n in 0..=5 {
        for w in Word::all(n) {
            let mut e = VerboseVector::zero(n);
            e.add_term(w, 1);
            ensure!(complement_transform(&complement_transform(&e)?)? == e, "involution fails at {w}");
        }
    }
    Ok(Ok(format!("{} classes", classes.len())))
}

fn c08_total(_: &AcceptanceConfig) -> Result<std::result::Result<String, String>> {
    for n in 2..=4 {
        let mut brute = VerboseVector::zero(n);
        for mask in 0u128..1 << pair_count(n) {
            brute = &brute + &verbose(&Graph::from_mask(n, mask))?;
        }
        let closed = total_flag_vector(n)?;
        ensure!(closed == brute, "n = {n}: closed form {closed}, brute force {brute}");
    }
    Ok(Ok(String::new()))
}

/// A random optional-edge graph on `n` vertices whose optional set contains
/// a cycle; the other pairs are absent, regular or optional at random.
pub fn random_optional_cycle_graph(rng: &mut impl Rng, n: usize) -> OptionalGraph {
    assert!(n >= 3);
    let k = rng.random_range(3..=n);
    let mut verts: Vec<usize> = (0..n).collect();
    verts.shuffle(rng);
    let mut optional: u128 = 0;
    for i in 0..k {
        let (u, v) = (verts[i], verts[(i + 1) % k]);
        optional |= 1 << pair_index(u.min(v), u.max(v), n);
    }
    let mut regular: u128 = 0;
    for p in 0..pair_count(n) {
        if optional >> p & 1 == 1 {
            continue;
        }
        match rng.random_range(0..3) {
            0 => regular |= 1 << p,
            1 => optional |= 1 << p,
            _ => {}
        }
    }
    OptionalGraph::from_masks(n, regular, optional)
}

fn c09_optional_cycles(cfg: &AcceptanceConfig) -> Result<std::result::Result<String, String>> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..50 {
        let n = rng.random_range(3..=6);
        let og = random_optional_cycle_graph(&mut rng, n);
        let v = verbose_flag_vector(&og, VerboseMethod::Recursion)?;
        ensure!(v.is_zero(), "{og}: {v}");
    }
    Ok(Ok("50 graphs".into()))
}

fn c10_basis(_: &AcceptanceConfig) -> Result<std::result::Result<String, String>> {
    for m in 3..=7u32 {
        let top = Partition::new(vec![m as usize]);
        let a = concise_flag_vector(&optional_path(m as usize))?;
        let want_a = ConciseVector::unit(&top).scale(&BigInt::from(2u64.pow(m - 3)));
        ensure!(a == want_a, "A_{m}: {a}");
        let d = concise_flag_vector(&optional_dynkin_d(m as usize))?;
        let want_d = ConciseVector::unit(&top).scale(&BigInt::from(2u64.pow(m - 2) - 1));
        ensure!(d == want_d, "D_{m}: {d}");
    }
    for n in 0..=6 {
        for p in enumerate_partitions(n) {
            let c = concise_flag_vector(&basis_graph(&p)?)?;
            ensure!(c == ConciseVector::unit(&p), "basis element {p}: {c}");
        }
        let m = anchor_matrix(n)?;
        for (i, row) in m.iter().enumerate() {
            ensure!(!row[i].is_zero(), "n = {n}: zero diagonal at {i}");
            ensure!(row[..i].iter().all(Zero::is_zero), "n = {n}: row {i} not upper triangular");
        }
    }
    Ok(Ok(String::new()))
}

fn c11_conversions(cfg: &AcceptanceConfig) -> Result<std::result::Result<String, String>> {
    let f = &cfg.factors;
    let classes = classes_up_to(5)?;
    for x in &classes {
        let v = verbose(x)?;
        let c = concise_flag_vector(x)?;
        let back = verbose_from_concise_with(&c, f)?;
        ensure!(back == v, "{x}: verbose from concise is {back}, direct is {v}");
        match concise_from_verbose_with(&v, true, f) {
            Ok(c2) => ensure!(c2 == c, "{x}: concise from verbose is {c2}, direct is {c}"),
            Err(e) => return Ok(Err(format!("{x}: concise from verbose failed: {e}"))),
        }
        let scaled = scale_subgraph_to_concise_with(&subgraph_flag_vector(x)?, f)?;
        ensure!(scaled == c, "{x}: scaled subgraph vector is {scaled}, direct is {c}");
    }
    Ok(Ok(format!("{} classes", classes.len())))
}

fn c12_semiconcise(cfg: &AcceptanceConfig) -> Result<std::result::Result<String, String>> {
    let classes = classes_up_to(5)?;
    for x in &classes {
        let v = verbose(x)?;
        for w in Word::all(x.n()) {
            let weight: BigInt = w
                .a_runs()
                .iter()
                .map(|&d| (1..=d).map(BigInt::from).product::<BigInt>())
                .product();
            let count = count_semiconcise_flags(x, &w)?;
            ensure!(v.coeff(&w) == &weight * &count, "{x} at {w}: {} vs {weight}*{count}", v.coeff(&w));
        }
    }
    let w: Word = "aabbaaa".parse().expect("word literal");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 7);
    let samples = 100;
    for _ in 0..samples {
        let x = Graph::from_mask(7, rng.random::<u32>() as u128 & ((1 << pair_count(7)) - 1));
        let c = verbose(&x)?.coeff(&w);
        ensure!(c.is_multiple_of(&BigInt::from(12)), "{x}: coefficient {c} at aabbaaa");
    }
    Ok(Ok(format!("{} classes, {samples} seven-vertex samples", classes.len())))
}

fn c13_nullspace(_: &AcceptanceConfig) -> Result<std::result::Result<String, String>> {
    let r3 = nullspace_report(3)?;
    ensure!(r3.kernel_dim == 1, "n = 3 kernel dimension {}", r3.kernel_dim);
    let k = kernel_relations(3)?;
    let tri = expand(&"3:?0-1,?1-2,?0-2".parse::<OptionalGraph>()?)?;
    ensure!(k.len() == 1 && (k[0] == tri || k[0] == -&tri), "n = 3 kernel is not the triangle relation");
    ensure!(r3.cycle_span_dim == 1 && r3.spans, "n = 3 cycle span {}", r3.cycle_span_dim);
    let r4 = nullspace_report(4)?;
    ensure!(
        r4.kernel_dim == 6 && r4.kernel_dim == r4.class_count - partition_count(4),
        "n = 4 kernel dimension {}",
        r4.kernel_dim
    );
    ensure!(r4.cycle_span_dim <= r4.kernel_dim, "cycle span exceeds the kernel");
    Ok(Ok(format!(
        "n = 4: kernel {}, optional-cycle span {}, spans {}",
        r4.kernel_dim, r4.cycle_span_dim, r4.spans
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn random_graphs_contain_optional_cycles() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            let og = random_optional_cycle_graph(&mut rng, 5);
            assert!(!og.optional().is_acyclic());
            assert_eq!(og.regular().mask() & og.optional().mask(), 0);
        }
    }

    #[test]
    fn table_vector_order() {
        let v = table_vector(&FOUR_VERTEX_CONCISE[4].1);
        assert_eq!(v.coeff(&"[2+2]".parse().unwrap()), BigInt::one());
        assert_eq!(v.coeff(&"[3+1]".parse().unwrap()), BigInt::from(2));
    }

    #[test]
    fn corrupted_factors_fail_conversions() {
        let cfg = AcceptanceConfig {
            factors: ComponentFactors {
                pair: 3,
                ..ComponentFactors::default()
            },
            ..AcceptanceConfig::default()
        };
        let r = run_criterion(11, &cfg);
        assert!(!r.passed, "{}", r.line());
        assert!(run_criterion(11, &AcceptanceConfig::default()).passed);
    }
}
