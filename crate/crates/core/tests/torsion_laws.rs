mod common;

use num_bigint::BigInt;
use num_traits::One;
use osa_core::corpus;
use osa_core::osideal::graded_dims;
use osa_core::torsion::{
    lattice_snf, presentation_aplus, quotient_group_i_mod_decomposable, saturation_check_i,
    smith_normal_form, torsion_report, IntMatrix, LatticeBasis,
};
use osa_core::{Domain, VariableOrder};
use proptest::prelude::*;

fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=5, 1usize..=5)
        .prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-6i64..=6, c), r))
}

fn to_big(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

/// A random unimodular `k × k` matrix as a product of elementary operations.
fn unimodular(k: usize) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec((0..k, 0..k, -3i64..=3, any::<bool>()), 0..12).prop_map(move |ops| {
        let mut m = IntMatrix::identity(k);
        for (i, j, f, swap) in ops {
            let mut e = IntMatrix::identity(k);
            if swap {
                e.set(i, i, BigInt::from(0));
                e.set(j, j, BigInt::from(0));
                e.set(i, j, BigInt::one());
                e.set(j, i, BigInt::one());
                if i == j {
                    e.set(i, i, BigInt::from(-1));
                }
            } else if i != j {
                e.set(i, j, BigInt::from(f));
            }
            m = e.mul(&m);
        }
        m
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn divisors_are_quotients_of_minor_gcds(rows in small_matrix()) {
        let a = to_big(&rows);
        let snf = smith_normal_form(&IntMatrix::from_rows(rows[0].len(), a.clone()));
        prop_assert!(snf.divisor_chain_holds());
        let mut product = BigInt::one();
        for k in 1..=rows.len().min(rows[0].len()) {
            let g = common::minors_gcd(&a, k);
            if k <= snf.rank() {
                product *= &snf.divisors[k - 1];
                prop_assert_eq!(&g, &product, "k = {}", k);
            } else {
                prop_assert_eq!(g, BigInt::from(0));
            }
        }
    }

    #[test]
    fn divisors_survive_unimodular_changes(
        (rows, u, v) in small_matrix().prop_flat_map(|rows| {
            let (r, c) = (rows.len(), rows[0].len());
            (Just(rows), unimodular(r), unimodular(c))
        })
    ) {
        let a = IntMatrix::from_rows(rows[0].len(), to_big(&rows));
        let moved = u.mul(&a).mul(&v);
        prop_assert_eq!(smith_normal_form(&a).divisors, smith_normal_form(&moved).divisors);
        prop_assert_eq!(lattice_snf(&a).divisors, smith_normal_form(&a).divisors);
    }

    #[test]
    fn lattice_coordinates_reconstruct_members(
        rows in small_matrix(),
        coeffs in prop::collection::vec(-5i64..=5, 5),
    ) {
        let a = to_big(&rows);
        let width = rows[0].len();
        let basis = LatticeBasis::from_rows(width, a.iter().map(|r| r.as_slice()));
        let v: Vec<BigInt> = (0..width)
            .map(|j| (0..a.len()).map(|i| &a[i][j] * coeffs[i]).sum())
            .collect();
        let c = basis.coordinates(&v).unwrap();
        let back: Vec<BigInt> = (0..width)
            .map(|j| (0..basis.rank()).map(|i| &c[i] * &basis.rows()[i][j]).sum())
            .collect();
        prop_assert_eq!(back, v);
        prop_assert_eq!(basis.rank(), common::q_rank(&common::int_rows_to_q(&rows)));
    }
}

#[test]
fn corpus_is_torsion_free() {
    for e in corpus::all().into_iter().chain(corpus::extras()) {
        let report = torsion_report(&e.matroid).unwrap();
        assert!(report.torsion_free(), "{}", e.name);
        assert!(report.ranks_match_fields(), "{}", e.name);
        assert!(report.fields_agree(), "{}", e.name);
        for q in 0..=e.matroid.n() {
            assert!(saturation_check_i(&e.matroid, q), "{} q={q}", e.name);
        }
    }
}

#[test]
fn doubled_presentation_shows_two() {
    let m = corpus::worked_example();
    for q in 3..=5 {
        let p = presentation_aplus(&m, q);
        if p.nrows() == 0 {
            continue;
        }
        let snf = lattice_snf(&p.scaled(2));
        assert!(!snf.torsion().is_empty());
        assert!(snf.torsion().iter().all(|d| *d == BigInt::from(2)), "q={q}");
    }
}

#[test]
fn dimension_split_from_independent_computations() {
    for e in corpus::small().into_iter().chain(corpus::extras()) {
        let m = &e.matroid;
        let circuits: Vec<u64> = m.circuits().iter().map(|c| c.bits()).collect();
        let o = VariableOrder::identity(m.n());
        for q in 0..=m.n() {
            let aplus = common::monomials(m.n(), q).len()
                - common::rank_mod(&common::span_rows(m.n(), &circuits, q, true), common::P);
            let algebra = m.nbc_sets(&o, q).len();
            let quotient = quotient_group_i_mod_decomposable(m, q).unwrap().free_rank();
            assert_eq!(aplus, algebra + quotient, "{} q={q}", e.name);
        }
        let dims = graded_dims(m, Domain::Prime(5), Some(m.n())).unwrap();
        for d in &dims.degrees {
            assert_eq!(d.decomposable_algebra, d.algebra + d.quotient);
        }
    }
}
