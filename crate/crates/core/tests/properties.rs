use deltaq::delta::{delta_prime_schur_t0, DeltaResult};
use deltaq::json::{FromJson, ToJson};
use deltaq::osp::{c_via_qprime, enumerate_osp};
use deltaq::partitions::enumerate_partitions;
use deltaq::qarith::Rational;
use deltaq::symfun::{e_multiply, e_perp, expand_in_vars, hall_inner, omega, rev_q_sym};
use deltaq::verify::{run, Bounds, Identity};
use deltaq::{Partition, QLaurent, SymFunc};
use proptest::prelude::*;

fn laurent() -> impl Strategy<Value = QLaurent> {
    proptest::collection::vec((-3i64..5, -4i64..5), 0..4).prop_map(|ts| {
        QLaurent::from_terms(
            ts.into_iter()
                .map(|(e, c)| (e, Rational::from_integer(c.into()))),
        )
    })
}

fn symfunc(degree: usize) -> impl Strategy<Value = SymFunc> {
    let shapes = enumerate_partitions(degree, None);
    let n = shapes.len();
    proptest::collection::vec(laurent(), n).prop_map(move |cs| {
        let mut f = SymFunc::zero(degree);
        for (lam, c) in shapes.iter().zip(cs) {
            f.add_term(lam.clone(), c);
        }
        f
    })
}

fn stirling2(n: usize, k: usize) -> u64 {
    match (n, k) {
        (0, 0) => 1,
        (_, 0) | (0, _) => 0,
        _ => k as u64 * stirling2(n - 1, k) + stirling2(n - 1, k - 1),
    }
}

fn factorial(k: usize) -> u64 {
    (1..=k as u64).product()
}

proptest! {
    #[test]
    fn omega_is_an_involution(f in (0usize..6).prop_flat_map(symfunc)) {
        prop_assert_eq!(omega(&omega(&f)), f);
    }

    #[test]
    fn rev_q_twice_is_identity(f in (0usize..5).prop_flat_map(symfunc)) {
        let shifted = f.shift(-f.min_q_exp().unwrap_or(0));
        let d = shifted.q_degree().unwrap_or(0);
        let once = rev_q_sym(&shifted, d).unwrap();
        prop_assert_eq!(rev_q_sym(&once, d).unwrap(), shifted);
    }

    #[test]
    fn json_round_trip(f in (0usize..5).prop_flat_map(symfunc)) {
        prop_assert_eq!(SymFunc::from_json(&f.to_json()).unwrap(), f);
    }

    #[test]
    fn e_perp_is_adjoint_to_e_multiply(
        (f, g, j) in (0usize..4, 0usize..3).prop_flat_map(|(d, j)| (symfunc(d), symfunc(d + j), Just(j)))
    ) {
        prop_assert_eq!(
            hall_inner(&e_multiply(j, &f), &g).unwrap(),
            hall_inner(&f, &e_perp(j, &g)).unwrap()
        );
    }
}

/// The coefficient of `x_1 ... x_n` in `C_{n,k}|_{q=1}` counts ordered set
/// partitions of `[n]` into `k` blocks, i.e. `k! S(n, k)`.
#[test]
fn standard_monomial_counts_ordered_set_partitions() {
    for n in 1..=6 {
        for k in 1..=n {
            let table = expand_in_vars(&c_via_qprime(n, k).unwrap(), n);
            let coeff = table
                .get(&vec![1; n])
                .cloned()
                .unwrap_or_else(QLaurent::zero);
            let expected = factorial(k) * stirling2(n, k);
            assert_eq!(
                coeff.eval_at_one(),
                Rational::from_integer(expected.into()),
                "n={n} k={k}"
            );
            assert_eq!(enumerate_osp(n, k).unwrap().len() as u64, expected);
        }
    }
}

#[test]
fn delta_values_are_positive_and_meet_the_degree_claim() {
    for m in 0..=3 {
        for nu in enumerate_partitions(m, None) {
            for n in 1..=5 {
                let r = DeltaResult::compute(&nu, n).unwrap();
                assert!(r.value.is_schur_positive());
                assert!(r.degree_claim_holds(), "{nu} n={n}");
                // Nonzero exactly when the operator has room: ℓ(ν) < n.
                assert_eq!(r.value.is_zero(), nu.len() >= n, "{nu} n={n}");
            }
        }
    }
}

#[test]
fn single_box_column_coefficient() {
    for n in 2..=5 {
        let d = delta_prime_schur_t0(&Partition::row(1), n).unwrap();
        let pairing = hall_inner(&d, &SymFunc::schur(Partition::column(n))).unwrap();
        // q [n-1]_q
        let expected: QLaurent = (1..n as i64).map(QLaurent::q_pow).sum();
        assert_eq!(pairing, expected, "n={n}");
    }
}

#[test]
fn every_identity_passes_at_small_bounds() {
    let small = Bounds {
        max_n: Some(4),
        max_m: Some(2),
        max_j: Some(1),
    };
    for &id in Identity::ALL {
        let report = run(id, small, 1).unwrap();
        assert!(report.passed(), "{id}: {:?}", report.failures.first());
        assert!(report.instances_checked > 0, "{id}");
    }
}
