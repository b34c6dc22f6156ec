mod common;

use std::collections::BTreeMap;

use osa_core::corpus;
use osa_core::matroid::Graph;
use osa_core::osideal::{graded_dims, GbOracle};
use osa_core::search::{
    check_proposition, joint_minimum, minimize_forge_count, minimize_total_gb_size, Strategy,
};
use osa_core::{Domain, Matroid, VariableOrder};

fn all_orders(n: usize) -> Vec<VariableOrder> {
    fn go(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<VariableOrder>) {
        if prefix.len() == n {
            out.push(VariableOrder::from_sequence(prefix.clone()).unwrap());
            return;
        }
        for i in 0..n {
            if !prefix.contains(&i) {
                prefix.push(i);
                go(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), n, &mut out);
    out
}

#[test]
fn exhaustive_search_examines_every_order() {
    for e in corpus::small() {
        let n = e.matroid.n();
        let r = minimize_total_gb_size(&e.matroid, Strategy::Exhaustive).unwrap();
        let factorial: usize = (1..=n).product();
        assert_eq!(r.orders_examined, factorial, "{}", e.name);
        assert_eq!(r.histogram.values().sum::<usize>(), factorial);
        assert_eq!(r.min_examined(), Some(r.best_count));
    }
}

#[test]
fn random_search_is_deterministic_per_seed() {
    let m = corpus::whirl3();
    let s = Strategy::Random {
        seed: 17,
        samples: 50,
    };
    let a = minimize_forge_count(&m, 3, s).unwrap();
    let b = minimize_forge_count(&m, 3, s).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.orders_examined, 50);
    assert_eq!(a.histogram.values().sum::<usize>(), 50);
}

#[test]
fn total_minimum_matches_oracle_sizes_on_k4() {
    let m = Matroid::from_graph(4, Graph::complete(4).edges()).unwrap();
    let oracle = GbOracle::new(&m, Domain::Rational).unwrap();
    let mut histogram = BTreeMap::new();
    for o in all_orders(6) {
        *histogram.entry(oracle.basis(&o).len()).or_insert(0) += 1;
    }
    let r = minimize_total_gb_size(&m, Strategy::Exhaustive).unwrap();
    assert_eq!(r.histogram, histogram);
    assert_eq!(Some(&r.best_count), histogram.keys().next());
}

#[test]
fn uniform_minimum_attains_the_quotient_dimension() {
    let m = Matroid::uniform(3, 5).unwrap();
    let circuits: Vec<u64> = m.circuits().iter().map(|c| c.bits()).collect();
    let r = minimize_forge_count(&m, 3, Strategy::Exhaustive).unwrap();
    assert_eq!(r.best_count, common::quotient_dim(5, &circuits, 3));
    assert_eq!(r.best_count, 4);
}

#[test]
fn worked_example_minima() {
    let m = corpus::worked_example();
    let total = minimize_total_gb_size(&m, Strategy::Exhaustive).unwrap();
    assert_eq!(total.best_count, 3);
    assert_eq!(total.histogram, [(3, 480), (4, 240)].into_iter().collect());
    let four = minimize_forge_count(&m, 4, Strategy::Exhaustive).unwrap();
    assert_eq!(four.best_count, 1);
    assert_eq!(four.histogram, [(1, 480), (2, 240)].into_iter().collect());
    let check = check_proposition(&m, 4, &[Domain::Rational, Domain::Prime(2)]).unwrap();
    assert!(check.holds());
}

#[test]
fn lower_bound_holds_everywhere_on_small_instances() {
    for e in corpus::small().into_iter().chain(corpus::extras()) {
        let m = &e.matroid;
        let dims = graded_dims(m, Domain::Rational, None).unwrap();
        let joint = joint_minimum(m, Strategy::Exhaustive).unwrap();
        for d in &dims.degrees {
            let min = joint.per_degree.get(&d.degree).copied().unwrap_or(0);
            assert!(min >= d.quotient, "{} q={}", e.name, d.degree);
        }
    }
}

#[test]
fn extras_show_a_gap_at_degree_three() {
    for e in corpus::extras() {
        let check =
            check_proposition(&e.matroid, 3, &[Domain::Rational, Domain::Prime(2)]).unwrap();
        assert!(check.lower_bound_holds(), "{}", e.name);
        assert!(!check.minimum_attains_dimension(), "{}", e.name);
        assert_eq!(check.search.best_count, 2);
        assert!(check.field_dims.iter().all(|&(_, d)| d == 1));
    }
}
