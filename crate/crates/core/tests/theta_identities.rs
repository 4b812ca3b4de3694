use num_bigint::BigInt;
use qcap::partition::{brute_force_series, count_series, enumerate_partitions, GapConfig};
use qcap::series::{pochhammer_infinite, qs, Monomial, QSeries};
use qcap::theta::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn triple_product_fixed_arguments() {
    for z in [Monomial::tq(1, 4), Monomial::new(-1, 2, 2), Monomial::tq(1, 1)] {
        let spec = ThetaSpec::new(z, 6);
        assert_eq!(theta_sum(&spec, 60).unwrap(), theta_product(&spec, 60).unwrap());
    }
}

#[test]
fn triple_product_q_base_two() {
    // theta(q; q^2) = (-q, -q, q^2; q^2)_inf, built independently from the
    // three Pochhammer symbols.
    let spec = ThetaSpec::new(Monomial::q(1), 2);
    let minus_q = pochhammer_infinite(&Monomial::new(-1, 0, 1), 2, 50).unwrap();
    let q2 = pochhammer_infinite(&Monomial::q(2), 2, 50).unwrap();
    let by_hand = &(&minus_q * &minus_q) * &q2;
    assert_eq!(theta_sum(&spec, 50).unwrap(), by_hand);
    assert_eq!(theta_product(&spec, 50).unwrap(), by_hand);
}

#[test]
fn triple_product_random_arguments() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..20 {
        let m = rng.gen_range(1..=6);
        let b = rng.gen_range(0..=m);
        let a = rng.gen_range(-2..=2);
        let c = if rng.gen_bool(0.5) { 1 } else { -1 };
        let spec = ThetaSpec::new(Monomial::new(c, a, b), m);
        let s = theta_sum(&spec, 100).unwrap();
        let p = theta_product(&spec, 100).unwrap();
        assert_eq!(s, p, "z = {} modulus {m}", spec.z);
    }
}

#[test]
fn euler_pentagonal_by_brute_force() {
    // (q;q)_inf = sum over distinct-part partitions of (-1)^{#parts} q^n.
    let order = 30;
    let mut oracle = QSeries::zero(order);
    for n in 0..order as u32 {
        for p in enumerate_partitions(n, None).filter(|p| !p.has_repeated_part()) {
            let sign = if p.len() % 2 == 0 { 1 } else { -1 };
            oracle.add_term(n as i64, 0, &BigInt::from(sign));
        }
    }
    let prod = pochhammer_infinite(&Monomial::q(1), 1, order).unwrap();
    assert_eq!(prod, oracle);
    assert_eq!(
        prod.truncate(6),
        qs(6, &[(0, 0, 1), (1, 0, -1), (2, 0, -1), (5, 0, 1)])
    );
}

#[test]
fn euler_identities() {
    for (v, x, m) in [
        (1, Monomial::q(1), 1),
        (2, Monomial::q(1), 1),
        (2, Monomial::new(-1, 1, 3), 3),
        (1, Monomial::tq(1, 2), 6),
        (2, Monomial::new(2, -1, 1), 2),
    ] {
        let (l, r) = euler_sides(v, &x, m, 60).unwrap();
        assert_eq!(l, r, "variant {v} x = {x}");
    }
}

#[test]
fn euler_one_counts_partitions() {
    let (l, r) = euler_sides(1, &Monomial::q(1), 1, 10).unwrap();
    let counts = QSeries::from_terms(
        0,
        10,
        (0..10u32).map(|n| (n as i64, 0, BigInt::from(enumerate_partitions(n, None).count()))),
    );
    assert_eq!(l, counts);
    assert_eq!(r, counts);
}

#[test]
fn euler_argument_past_window() {
    let (l, r) = euler_sides(1, &Monomial::q(12), 1, 12).unwrap();
    assert_eq!(l, QSeries::one(12));
    assert_eq!(r, QSeries::one(12));
}

#[test]
fn cauchy_even() {
    let (a, b, c) = cauchy_even_sides(1, 100).unwrap();
    assert_eq!(a, b);
    assert_eq!(b, c);
    let (a, b, c) = cauchy_even_sides(3, 60).unwrap();
    let m3 = minus_q3_pochhammer(60).unwrap();
    assert_eq!(a, m3);
    assert_eq!(b, m3);
    assert_eq!(c, m3);
    let (a, b, c) = cauchy_even_sides(1, 1).unwrap();
    assert!(a == QSeries::one(1) && b == QSeries::one(1) && c == QSeries::one(1));
}

#[test]
fn ramanujan_at_limit_instantiations() {
    let (l, r) = ramanujan_sides(&Monomial::tq(1, 4), &Monomial::tq(-1, 2), 6, 60).unwrap();
    assert_eq!(l, r);
    let (l, r) = ramanujan_sides(&Monomial::tq(-1, -1), &Monomial::tq(1, 1), 6, 60).unwrap();
    assert_eq!(l, r);
    let (l, r) = ramanujan_sides(&Monomial::q(1), &Monomial::q(1), 1, 40).unwrap();
    assert_eq!(l, r);
}

#[test]
fn rogers_at_limit_instantiations() {
    let (l, r) = rogers_sides(&Monomial::new(-1, -1, -4), 6, 60).unwrap();
    assert_eq!(l, r);
    assert_eq!(l.lo(), -2);
    let (l, r) = rogers_sides(&Monomial::new(-1, 1, 1), 6, 60).unwrap();
    assert_eq!(l, r);
    let (l, r) = rogers_sides(&Monomial::new(1, 1, 20), 1, 20).unwrap();
    assert_eq!(l, QSeries::one(20));
    assert_eq!(r, QSeries::one(20));
}

#[test]
fn false_theta_forms_agree() {
    for which in [FalseTheta::One, FalseTheta::Two] {
        let c = false_theta(which, FalseThetaForm::Character, 200);
        let s = false_theta(which, FalseThetaForm::Split, 200);
        assert_eq!(c, s);
        assert!(is_sign_series(&c));
    }
}

#[test]
fn theta_assembly_and_reindexing() {
    let (direct, theta) = theta_assembly_sides(100).unwrap();
    assert_eq!(direct, theta);
    let (pos, neg) = reindexing_sides(100);
    assert_eq!(pos, neg);
}

#[test]
fn capparelli_products_match_counts() {
    assert_eq!(product_c2(60).unwrap(), count_series(2, 60));
    let star = brute_force_series(GapConfig::C2_STAR, None, 40).eval_t_one();
    assert_eq!(product_c2star(40).unwrap(), star);
}

#[test]
fn refined_products_small_order() {
    assert_eq!(
        refined_c2_product(30).unwrap(),
        brute_force_series(GapConfig::C2, None, 30)
    );
    assert_eq!(
        refined_c2star_product(30).unwrap(),
        brute_force_series(GapConfig::C2_STAR, None, 30)
    );
}
