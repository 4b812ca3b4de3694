use num_bigint::BigInt;
use proptest::prelude::*;
use qcap::partition::{
    brute_force_series, count_c2star, count_series, is_level3_gap, is_level3_multiplicity,
    GapConfig, Partition,
};
use qcap::series::{pochhammer_finite, pochhammer_infinite, qbinomial, Monomial, QSeries, TLaurent};
use qcap::theta::product_c2star;

const ORDER: i64 = 12;

fn series(lo: i64) -> impl Strategy<Value = QSeries> {
    prop::collection::vec((lo..ORDER, -3i64..=3, -4i64..=4), 0..10).prop_map(move |terms| {
        QSeries::from_terms(lo, ORDER, terms.into_iter().map(|(q, t, c)| (q, t, BigInt::from(c))))
    })
}

/// A series whose lowest term is `±t^e q^v`.
fn unit_led() -> impl Strategy<Value = QSeries> {
    (-2i64..=2, -3i64..=3, any::<bool>(), series(0)).prop_map(|(v, e, neg, tail)| {
        let lead = Monomial::new(if neg { -1 } else { 1 }, e, v);
        let mut s = QSeries::from_monomial(&lead, ORDER);
        for (q, t, c) in tail.terms() {
            if q > v {
                s.add_term(q, t, c);
            }
        }
        s
    })
}

fn laurent() -> impl Strategy<Value = TLaurent> {
    prop::collection::vec((-4i64..=4, -5i64..=5), 0..6).prop_map(|terms| {
        let mut l = TLaurent::zero();
        for (e, c) in terms {
            l.add_term(e, &BigInt::from(c));
        }
        l
    })
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..=14, 0..8)
        .prop_filter_map("size", |v| Partition::from_unsorted(v).ok().filter(|p| p.size() <= 40))
}

proptest! {
    #[test]
    fn laurent_ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert!(a.iter().all(|(_, c)| *c != BigInt::from(0)));
    }

    #[test]
    fn series_ring_axioms(a in series(0), b in series(0), c in series(0)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &QSeries::one(ORDER), a.clone());
        prop_assert_eq!(&a + &QSeries::zero(ORDER), a.clone());
    }

    #[test]
    fn negative_windows_associate(a in series(-2), b in series(-1), c in series(0)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn substitution_is_a_ring_map(a in series(0), b in series(0), k in 1i64..=4) {
        let lhs = (&a * &b).substitute_q(k).unwrap();
        let rhs = &a.substitute_q(k).unwrap() * &b.substitute_q(k).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn first_discrepancy_is_minimal(a in series(0), q in 0..ORDER, t in -3i64..=3) {
        let mut b = a.clone();
        b.add_term(q, t, &BigInt::from(1));
        let d = a.first_discrepancy(&b).unwrap();
        prop_assert_eq!((d.q_exp, d.t_exp), (q, t));
        prop_assert_eq!(d.rhs_coeff - d.lhs_coeff, BigInt::from(1));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn inverse_round_trip(a in unit_led()) {
        let inv = a.inv().unwrap();
        let prod = &a * &inv;
        prop_assert_eq!(prod.clone(), QSeries::one(prod.order()));
        prop_assert_eq!(&inv.inv().unwrap(), &a.truncate(inv.inv().unwrap().order()));
    }
}

proptest! {
    #[test]
    fn qbinomial_symmetry_and_pascal(n in 1i64..=12, m in 0i64..=12, k in 1i64..=3) {
        let m = m.min(n);
        let order = 40;
        let b = qbinomial(n, m, k, order).unwrap();
        prop_assert_eq!(&b, &qbinomial(n, n - m, k, order).unwrap());
        if m >= 1 && m < n {
            let pascal = &qbinomial(n - 1, m - 1, k, order).unwrap()
                + &qbinomial(n - 1, m, k, order).unwrap().shift_q(k * m).truncate(order);
            prop_assert_eq!(b.clone(), pascal);
        }
        prop_assert!(b.terms().all(|(_, t, c)| t == 0 && *c > BigInt::from(0)));
    }

    #[test]
    fn qbinomial_limit(m in 0i64..=5) {
        // [n, m] agrees with 1/(q;q)_m below q^{n-m+1}.
        let n = 30;
        let b = qbinomial(n, m, 1, n - m + 1).unwrap();
        let lim = pochhammer_finite(&Monomial::q(1), 1, m, n - m + 1).unwrap().inv().unwrap();
        prop_assert_eq!(b, lim);
    }

    #[test]
    fn gap_formulations_agree(p in partition()) {
        prop_assert_eq!(is_level3_gap(&p), is_level3_multiplicity(&p));
    }

    #[test]
    fn t_exponents_bounded_by_size(cfg in prop::sample::select(GapConfig::ALL.to_vec())) {
        let s = brute_force_series(cfg, None, 25);
        prop_assert!(s.terms().all(|(q, t, _)| t.abs() <= q));
    }
}

#[test]
fn counts_are_monotone() {
    let (c1, c2, c3) = (count_series(1, 40), count_series(2, 40), count_series(3, 40));
    for n in 0..40 {
        let (a, b, c) = (c1.coeff_at(n, 0), c2.coeff_at(n, 0), c3.coeff_at(n, 0));
        assert!(c <= b && b <= a, "n = {n}");
    }
}

#[test]
fn c2star_count_series_is_a_product() {
    let counts = QSeries::from_terms(0, 50, (0..50u32).map(|n| (n as i64, 0, BigInt::from(count_c2star(n)))));
    assert_eq!(counts, product_c2star(50).unwrap());
}

#[test]
fn t_one_specialization() {
    assert_eq!(brute_force_series(GapConfig::C2, None, 40).eval_t_one(), count_series(2, 40));
    assert_eq!(brute_force_series(GapConfig::C3, None, 40).eval_t_one(), count_series(3, 40));
    assert_eq!(brute_force_series(GapConfig::C1, None, 40).eval_t_one(), count_series(1, 40));
}

#[test]
fn euler_product_inverse() {
    // (q;q)_inf * 1/(q;q)_inf = 1, both from the Pochhammer constructor.
    let p = pochhammer_infinite(&Monomial::q(1), 1, 60).unwrap();
    assert_eq!(&p * &p.inv().unwrap(), QSeries::one(60));
}
