mod common;

use num_bigint::BigInt;
use num_integer::Integer;
use toric_dual::cone::ConeType2D;
use toric_dual::threefold::threefold_euler_table;
use toric_dual::wps::{
    reduced_triples, weight_vertex, wps2_closed_formulas, wps3_isolated_closed_terms, wps3_local_cone_data,
    wps_polytope, wps_report, Weights,
};

use common::big;

fn same_up_to_swap(a: &[ConeType2D], b: &[ConeType2D]) -> bool {
    let mut left: Vec<&ConeType2D> = b.iter().collect();
    a.iter().all(|x| match left.iter().position(|y| x.equivalent(y)) {
        Some(i) => {
            left.remove(i);
            true
        }
        None => false,
    })
}

fn isolated(t: &[u64; 3]) -> bool {
    t[0].gcd(&t[1]) == 1 && t[0].gcd(&t[2]) == 1 && t[1].gcd(&t[2]) == 1
}

#[test]
fn closed_cone_data_matches_polytope_up_to_20() {
    for t in reduced_triples(20) {
        let w = Weights::new(vec![1, t[0], t[1], t[2]]).unwrap();
        let p = wps_polytope(&w).unwrap();
        let table = threefold_euler_table(&p).unwrap();
        let data = wps3_local_cone_data(t[0], t[1], t[2]).unwrap();
        for (i, d) in data.iter().enumerate() {
            let v = p.vertex_index(&weight_vertex(&w, i + 1)).unwrap();
            let facets: Vec<ConeType2D> = table.facet_cones[v].iter().map(|(_, c)| c.clone()).collect();
            let edges: Vec<ConeType2D> = p.edges_at(v).into_iter().map(|e| table.edge_cones[e].clone()).collect();
            assert!(same_up_to_swap(&facets, &d.facets), "facets at weight {} of (1,{t:?})", i + 1);
            assert!(same_up_to_swap(&edges, &d.edges), "edges at weight {} of (1,{t:?})", i + 1);
        }
    }
}

#[test]
fn isolated_closed_terms_match_polytope_up_to_20() {
    for t in reduced_triples(20).into_iter().filter(isolated) {
        let (vol, area, edges) = wps3_isolated_closed_terms(t[0], t[1], t[2]).unwrap();
        let p = wps_polytope(&Weights::new(vec![1, t[0], t[1], t[2]]).unwrap()).unwrap();
        let facet_area: BigInt = (0..p.facets().len()).map(|f| p.facet_area(f)).sum();
        assert_eq!(p.normalized_volume(), vol, "(1,{t:?})");
        assert_eq!(facet_area, area, "(1,{t:?})");
        assert_eq!(p.edge_length_sum(), edges, "(1,{t:?})");
    }
}

#[test]
fn isolated_closed_terms_examples() {
    assert_eq!(wps3_isolated_closed_terms(1, 1, 1).unwrap(), (big(1), big(4), big(6)));
    assert_eq!(wps3_isolated_closed_terms(2, 3, 7).unwrap(), (big(1764), big(546), big(53)));
    assert!(wps3_isolated_closed_terms(2, 2, 3).is_err());
}

#[test]
fn surface_closed_formula_examples() {
    let values = |k, m, n| -> Vec<BigInt> { wps2_closed_formulas(k, m, n).into_iter().map(|(_, v)| v).collect() };
    assert!(values(2, 3, 5).contains(&big(69)));
    assert!(values(3, 5, 7).contains(&big(283)));
    assert!(values(5, 6, 7).contains(&big(591)));
    assert!(values(2, 5, 11).is_empty());
}

#[test]
fn surface_reports_agree_with_closed_formulas_up_to_30() {
    for t in reduced_triples(30).into_iter().filter(isolated) {
        let r = wps_report(&Weights::new(t.to_vec()).unwrap()).unwrap();
        for (f, v) in wps2_closed_formulas(t[0], t[1], t[2]) {
            assert_eq!(r.degree, v, "{f:?} on {t:?}");
        }
    }
}

#[test]
fn small_threefold_reports() {
    let r = wps_report(&Weights::new(vec![1, 1, 1, 2]).unwrap()).unwrap();
    assert_eq!(r.vertex_eu[3], big(1));
    assert_eq!(r.vertex_rsv[3], big(4));
    let r = wps_report(&Weights::new(vec![1, 1, 3, 3]).unwrap()).unwrap();
    assert_eq!(r.vertex_eu[1..], [big(1), big(-1), big(-1)]);
}
