use std::collections::BTreeMap;

use num_bigint::BigInt;
use qcap::verify::*;
use serde_json::{json, Value};

fn overrides(pairs: &[(&str, Value)]) -> BTreeMap<String, Value> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

/// Every identity the library verifies, and the check that covers it.
const COVERAGE: &[(&str, &str)] = &[
    ("level 3 gap condition", "gap-equivalence"),
    ("c_2(n) = d_1(n)", "capparelli-c2-d1"),
    ("c*_2(n) = d_2(n)", "capparelli-c2star-d2"),
    ("C_2 product", "product-c2"),
    ("C*_2 product", "product-c2star"),
    ("C_2(t;q) refined product", "refined-c2"),
    ("C*_2(t;q) refined product", "refined-c2star"),
    ("unrefined main theorem, C_1 line", "theorem-main"),
    ("unrefined main theorem, C_3 line", "theorem-main"),
    ("false theta functions", "false-theta-forms"),
    ("theta function", "jtp"),
    ("Euler first identity", "euler1"),
    ("Euler second identity", "euler2"),
    ("Cauchy-Euler even sum", "cauchy-even"),
    ("Ramanujan identity", "ramanujan-lost"),
    ("Rogers identity", "rogers-false"),
    ("general main theorem", "theorem-mainab"),
    ("finite evaluation", "lemma-finite"),
    ("finite recurrences", "recurrence-cnrec"),
    ("initial values", "recurrence-cnrec"),
    ("combined recurrence", "recurrence-combined"),
    ("gamma definition", "gamma-rec"),
    ("gamma recurrence", "gamma-rec"),
    ("gamma initial values", "gamma-rec"),
    ("F definition", "fqdiff-residual"),
    ("H definition", "hqdiff-residual"),
    ("F q-difference equation", "fqdiff-residual"),
    ("H q-difference equation", "hqdiff-residual"),
    ("delta recurrence", "delta-rec-vs-closed"),
    ("delta even closed form", "delta-rec-vs-closed"),
    ("delta odd closed form", "delta-rec-vs-closed"),
    ("even part of the finite evaluation", "lemma-finite"),
    ("odd part of the finite evaluation", "lemma-finite"),
    ("even limit", "limit-c0"),
    ("even limit, Ramanujan step", "limit-c0"),
    ("even limit, Rogers step", "limit-c0"),
    ("even limit, final form", "limit-c0"),
    ("odd limit", "limit-c1"),
    ("odd limit, Ramanujan step", "limit-c1"),
    ("odd limit, Rogers step", "limit-c1"),
    ("odd limit, final form", "limit-c1"),
    ("theta assembly", "theta-assembly"),
    ("reindexing", "reindexing"),
];

#[test]
fn registry_covers_every_identity() {
    let names = names();
    for (identity, check) in COVERAGE {
        assert!(names.contains(check), "{identity} is not covered: no check {check}");
    }
    for n in &names {
        assert!(COVERAGE.iter().any(|(_, c)| c == n), "{n} is registered but covers nothing");
    }
    assert_eq!(names.len(), 27);
    let mut sorted = names.clone();
    sorted.dedup();
    assert_eq!(sorted.len(), names.len());
}

#[test]
fn every_check_passes_at_small_order() {
    let report = run_all(&RunConfig {
        order: Some(12),
        z_degree: Some(5),
        ..RunConfig::default()
    })
    .unwrap();
    for c in &report.checks {
        assert_eq!(c.status, Status::Pass, "{}: {:?}", c.name, c.note);
    }
    assert!(report.all_passed());
    assert_eq!(report.summary.passed, 27);
}

#[test]
fn order_five_still_passes() {
    let report = run_all(&RunConfig {
        order: Some(5),
        ..RunConfig::default()
    })
    .unwrap();
    assert!(report.all_passed());
    let skipped: Vec<_> = report
        .checks
        .iter()
        .filter(|c| c.status == Status::Skipped)
        .map(|c| c.name.as_str())
        .collect();
    assert!(skipped.is_empty(), "{skipped:?}");
}

#[test]
fn degenerate_order_is_skipped() {
    let r = run_check("jtp", &overrides(&[("order", json!(0))])).unwrap();
    assert_eq!(r.status, Status::Skipped);
    assert!(r.discrepancy.is_none());
    let r = run_check("limit-c0", &overrides(&[("order", json!(3))])).unwrap();
    assert_eq!(r.status, Status::Skipped);
}

#[test]
fn bad_names_and_overrides() {
    assert!(matches!(
        run_check("nonsense", &BTreeMap::new()),
        Err(VerifyError::UnknownName { .. })
    ));
    let err = run_check("nonsense", &BTreeMap::new()).unwrap_err().to_string();
    assert!(err.contains("theorem-mainab"));
    assert!(matches!(
        run_check("jtp", &overrides(&[("order", json!("big"))])),
        Err(VerifyError::InvalidOverride { .. })
    ));
    assert!(matches!(
        run_check("jtp", &overrides(&[("alpha", json!(2))])),
        Err(VerifyError::InvalidOverride { .. })
    ));
    assert!(matches!(
        run_check("jtp", &overrides(&[("colour", json!(1))])),
        Err(VerifyError::InvalidOverride { .. })
    ));
    assert!(run_all(&RunConfig {
        only: Some(vec!["jtp".into(), "bogus".into()]),
        ..RunConfig::default()
    })
    .is_err());
}

#[test]
fn configuration_filter() {
    let r = run_check(
        "theorem-mainab",
        &overrides(&[("order", json!(20)), ("alpha", json!(0)), ("beta", json!(1))]),
    )
    .unwrap();
    assert_eq!(r.status, Status::Pass);
    assert_eq!(r.params["configs"], json!(["(0,1)"]));
}

#[test]
fn reports_are_deterministic() {
    let cfg = RunConfig {
        order: Some(15),
        ..RunConfig::default()
    };
    let a = run_all(&cfg).unwrap().without_timing();
    let b = run_all(&cfg).unwrap().without_timing();
    assert_eq!(a, b);
    let names: Vec<_> = a.checks.iter().map(|c| c.name.clone()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
}

#[test]
fn report_json_round_trip() {
    let report = run_all(&RunConfig {
        order: Some(10),
        only: Some(vec!["jtp".into(), "reindexing".into()]),
        fault: Some(Fault {
            targets: vec!["jtp".into()],
            q_exp: 3,
            t_exp: 1,
            delta: "123456789012345678901234567890".parse().unwrap(),
        }),
        ..RunConfig::default()
    })
    .unwrap();
    let text = serde_json::to_string(&report).unwrap();
    assert!(text.contains("\"123456789012345678901234567890\""));
    let back: Report = serde_json::from_str(&text).unwrap();
    assert_eq!(back, report);
}

#[test]
fn injected_fault_is_localized() {
    let targets = vec!["refined-c2".to_string(), "fqdiff-residual".to_string(), "lemma-finite".to_string()];
    let report = run_all(&RunConfig {
        order: Some(20),
        z_degree: Some(5),
        fault: Some(Fault {
            targets: targets.clone(),
            q_exp: 7,
            t_exp: -1,
            delta: BigInt::from(1),
        }),
        ..RunConfig::default()
    })
    .unwrap();
    for c in &report.checks {
        if targets.contains(&c.name) {
            assert_eq!(c.status, Status::Fail, "{}", c.name);
            let d = c.discrepancy.as_ref().unwrap();
            assert_eq!((d.q_exp, d.t_exp), (7, -1));
            assert_eq!(&d.lhs_coeff - &d.rhs_coeff, BigInt::from(1));
        } else {
            assert_eq!(c.status, Status::Pass, "{}", c.name);
        }
    }
    assert_eq!(report.summary.failed, 3);
}
