use num_bigint::BigInt;
use num_traits::One;

use graphflag::acceptance::FOUR_VERTEX_CONCISE;
use graphflag::exactlin::{lp_feasible, Rational, RationalMatrix};
use graphflag::flagvec::concise_flag_vector;
use graphflag::graphcore::enumerate_partitions;
use graphflag::polytope::{delta_facets, hull_report, verify_facets};
use graphflag::Graph;

fn table_rows() -> Vec<Vec<i64>> {
    FOUR_VERTEX_CONCISE.iter().map(|(_, r)| r.to_vec()).collect()
}

#[test]
fn table_rank_and_kernel() {
    let m = RationalMatrix::from_integer_rows(&table_rows());
    assert_eq!(m.rank(), 5);
    let classes = m.transpose();
    assert_eq!(classes.kernel_basis().len(), 6);
}

#[test]
fn complete_graph_is_not_a_combination_of_the_others() {
    let rows = table_rows();
    let (last, others) = rows.split_last().unwrap();
    let mut eq: Vec<Vec<i64>> = (0..5).map(|k| others.iter().map(|r| r[k]).collect()).collect();
    eq.push(vec![1; others.len()]);
    let mut rhs: Vec<Rational> = last.iter().map(|&x| Rational::from_integer(x.into())).collect();
    rhs.push(Rational::one());
    let eq = RationalMatrix::from_integer_rows(&eq);
    let res = lp_feasible(&eq, &rhs);
    assert!(!res.is_feasible());
    assert!(res.verify(&eq, &rhs));
}

#[test]
fn facets_of_table_points() {
    let points: Vec<_> = FOUR_VERTEX_CONCISE
        .iter()
        .map(|(s, _)| concise_flag_vector(&s.parse::<Graph>().unwrap()).unwrap())
        .collect();
    let facets = delta_facets(&points).unwrap();
    let parts = enumerate_partitions(4);
    let dense: Vec<Vec<BigInt>> = points.iter().map(|p| p.to_dense(&parts)).collect();
    assert!(verify_facets(&dense, &facets));
    assert_eq!(facets.len(), 20);
    let r = hull_report(4, true).unwrap();
    assert_eq!(r.facets.unwrap(), facets);
}

#[test]
fn five_vertex_hull() {
    let r = hull_report(5, true).unwrap();
    assert_eq!(r.points.len(), 34);
    assert!(r.all_distinct());
    assert_eq!(r.vertex_count(), 34);
    assert!(r.verify());
    let facets = r.facets.as_ref().unwrap();
    assert!(verify_facets(&r.distinct, facets));
    // regression value from the first verified run
    assert_eq!(facets.len(), 552);
}
