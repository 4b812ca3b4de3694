use num_bigint::BigInt;
use qcap::partition::{brute_force_series, GapConfig};
use qcap::qdiff::*;
use qcap::series::{pochhammer_finite, Monomial, QSeries, ZPoly};
use qcap::theta::{product_c2, refined_c2_product, refined_c2star_product};

#[test]
fn recurrence_equals_enumeration_to_m30() {
    for cfg in GapConfig::ALL {
        for m in 0..=30 {
            let c = finite_c(cfg, m, 40).unwrap();
            assert_eq!(c, brute_force_series(cfg, Some(m as u32), 40), "{} M={m}", cfg.label());
        }
    }
}

#[test]
fn combined_recurrence() {
    for cfg in GapConfig::ALL {
        assert!(combined_recurrence_check(cfg, 2, 40).unwrap());
    }
    for n in 3..=10 {
        assert!(combined_recurrence_check(GapConfig::C2, n, 40).unwrap());
        assert!(combined_recurrence_check(GapConfig::C3, n, 40).unwrap());
    }
    assert!(combined_recurrence_check(GapConfig::C1, 1, 40).is_err());
}

#[test]
fn combined_recurrence_detects_perturbation() {
    let cfg = GapConfig::C1;
    let n = 4;
    let c = |m| finite_c(cfg, m, 40).unwrap();
    assert!(combined_recurrence_holds(n, &c(13), &c(10), &c(7), &c(4)));
    let mut bad = c(10);
    bad.add_term(5, 1, &BigInt::from(1));
    assert!(!combined_recurrence_holds(n, &c(13), &bad, &c(7), &c(4)));
}

#[test]
fn gamma_times_pochhammer_is_c() {
    for cfg in GapConfig::ALL {
        let g = gamma_seq(cfg, 12, 40).unwrap();
        for (n, gn) in g.iter().enumerate().skip(1) {
            let back = gn * &pochhammer_finite(&Monomial::q(3), 3, n as i64, 40).unwrap();
            assert_eq!(back, finite_c(cfg, 3 * n as i64 - 2, 40).unwrap(), "n={n}");
        }
        let state = RecurrenceState::build(cfg, 12, 40).unwrap();
        assert_eq!(state.gamma(), &g[..]);
        assert_eq!(state.c(-2), Some(&QSeries::int(cfg.beta_i(), 40)));
    }
}

#[test]
fn delta_recurrence_matches_closed_form() {
    for cfg in GapConfig::ALL {
        let d = delta_seq(cfg, 16, 40).unwrap();
        for (n, dn) in d.iter().enumerate() {
            assert_eq!(*dn, delta_closed(cfg, n, 40).unwrap(), "{} n={n}", cfg.label());
        }
    }
}

#[test]
fn f_and_h() {
    for cfg in GapConfig::ALL {
        let (f, h) = build_f_h(cfg, 8, 40).unwrap();
        assert_eq!(*h.coeff(0), QSeries::int(cfg.beta_i(), 40));
        assert_eq!(*f.coeff(1), gamma_seq(cfg, 1, 40).unwrap()[1]);
    }
    assert!(matches!(build_f_h(GapConfig::C1, 2, 10), Err(QdiffError::DegreeTooSmall(2))));
}

#[test]
fn residuals_vanish() {
    for cfg in GapConfig::ALL {
        for eq in [Equation::F, Equation::H] {
            let r = qdiff_residual(eq, cfg, 8, 40).unwrap();
            assert_eq!(residual_defect(&r, 6), None, "{eq:?} {}", cfg.label());
            // Each residual coefficient only sees lower-degree data, so the
            // top two degrees vanish too.
            assert_eq!(residual_defect(&r, 8), None);
        }
    }
}

#[test]
fn inhomogeneous_term_needs_defect() {
    // Feeding the C2 configuration's F into the C1 equation leaves exactly
    // the z^2 forcing term t q^7 (after scaling by q^3).
    let (f, _) = build_f_h(GapConfig::C2, 6, 30).unwrap();
    let r = qdiff_residual_of(Equation::F, GapConfig::C1, &f).unwrap();
    let (deg, disc) = residual_defect(&r, 4).unwrap();
    assert_eq!((deg, disc.q_exp, disc.t_exp), (2, 7, 1));
    // With the correct configuration the residual vanishes.
    let r = qdiff_residual_of(Equation::F, GapConfig::C2, &f).unwrap();
    assert_eq!(residual_defect(&r, 4), None);
}

#[test]
fn residual_detects_perturbation() {
    let (f, _) = build_f_h(GapConfig::C3, 6, 30).unwrap();
    let mut coeffs = f.coeffs().to_vec();
    coeffs[3].add_term(10, 0, &BigInt::from(1));
    let bad = ZPoly::new(coeffs).unwrap();
    let r = qdiff_residual_of(Equation::F, GapConfig::C3, &bad).unwrap();
    assert_eq!(residual_defect(&r, 4).unwrap().0, 3);
}

#[test]
fn lemma_equals_recurrence() {
    for cfg in GapConfig::ALL {
        assert_eq!(lemma_eval(cfg, 0, 30).unwrap(), QSeries::int(cfg.beta_i(), 30));
        for n in 1..=10 {
            let m = 3 * n as i64 - 2;
            assert_eq!(lemma_eval(cfg, n, 40).unwrap(), finite_c(cfg, m, 40).unwrap(), "n={n}");
        }
        for n in 2..=8 {
            let m = 3 * n as u32 - 2;
            assert_eq!(lemma_eval(cfg, n, 30).unwrap(), brute_force_series(cfg, Some(m), 30));
        }
    }
}

#[test]
fn finite_values_stabilize_to_limit() {
    for cfg in GapConfig::ALL {
        let rhs = limit_chain(cfg, 41).unwrap().theorem_rhs;
        assert_eq!(lemma_eval(cfg, 20, 41).unwrap(), rhs, "{}", cfg.label());
        let a = finite_c(cfg, 3 * 8 - 2, 60).unwrap().truncate(3 * 6);
        let b = finite_c(cfg, 3 * 12 - 2, 60).unwrap().truncate(3 * 6);
        assert_eq!(a, b);
    }
}

#[test]
fn limit_chain_all_configurations() {
    for cfg in GapConfig::ALL {
        let ch = limit_chain(cfg, 50).unwrap();
        assert_eq!(ch.c0_raw, ch.c0_final, "{}", cfg.label());
        assert_eq!(ch.c1_raw, ch.c1_final, "{}", cfg.label());
        assert_eq!(&ch.c0_final + &ch.c1_final, ch.theorem_rhs);
        assert_eq!(ch.theorem_rhs, brute_force_series(cfg, None, 50), "{}", cfg.label());
    }
    assert!(limit_chain(GapConfig::C1, 3).is_err());
}

#[test]
fn limit_without_defect_is_a_product() {
    let c2 = limit_chain(GapConfig::C2, 50).unwrap().theorem_rhs;
    assert_eq!(c2, refined_c2_product(50).unwrap());
    assert_eq!(c2.eval_t_one(), product_c2(50).unwrap());
    let c2s = limit_chain(GapConfig::C2_STAR, 50).unwrap().theorem_rhs;
    assert_eq!(c2s, refined_c2star_product(50).unwrap());
}

#[test]
fn simplification_lines() {
    let lines = c0_ramanujan_lines(60).unwrap();
    for (i, l) in lines.iter().enumerate().skip(1) {
        assert_eq!(*l, lines[0], "even line {i}");
    }
    let lines = c0_rogers_lines(60).unwrap();
    for (i, l) in lines.iter().enumerate().skip(1) {
        assert_eq!(*l, lines[0], "Rogers line {i}");
    }
    let lines = c1_ramanujan_lines(60).unwrap();
    for (i, l) in lines.iter().enumerate().skip(1) {
        assert_eq!(*l, lines[0], "odd line {i}");
    }
    let (l, r) = c1_rogers_sides(60).unwrap();
    assert_eq!(l, r);
}

#[test]
fn theta2_fold() {
    for cfg in GapConfig::ALL {
        let (l, r) = theta2_fold_sides(cfg, 100).unwrap();
        assert_eq!(l, r, "{}", cfg.label());
    }
}

#[test]
fn unrefined_theorem_lines() {
    for (lhs, rhs) in theorem_main_sides(40).unwrap() {
        assert_eq!(lhs, rhs);
    }
}
