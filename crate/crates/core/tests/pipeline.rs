use scrollkit::exactalg::parse_poly;
use scrollkit::invariants::bonnesen;
use scrollkit::report::any_failed;
use scrollkit::scrollgen::{construct, implicitize, BiForm, BiFormJson, GenConfig, ScrollModelJson};
use scrollkit::verify::{pinch_counts, verify, VerifyConfig};

fn explicit() -> BiForm {
    BiForm::new(&parse_poly("s0^2*u0^2 + s1^2*u0^2 + s0^2*u1^2 + 2*s1^2*u1^2", None).unwrap()).unwrap()
}

#[test]
fn quartic_scroll_matches_the_formulas() {
    let model = implicitize(&explicit());
    let inv = bonnesen(4, 1).unwrap();
    let (p1, p2) = pinch_counts(&model);
    let total = p1.counts().unwrap().with_multiplicity + p2.counts().unwrap().with_multiplicity;
    assert_eq!(inv.p, total as i64);
    // R1 and R2 are two lines
    assert_eq!(inv.delta, 2);
    assert!(!inv.validity_flags.is_empty());
    assert!(inv.not_applicable.iter().any(|f| f == "t"));
}

#[test]
fn json_round_trip_then_verify() {
    let model = construct(3, 2, 5, &GenConfig::default()).unwrap();
    let text = serde_json::to_string(&ScrollModelJson::from(&model)).unwrap();
    let back: ScrollModelJson = serde_json::from_str(&text).unwrap();
    let rebuilt = back.to_model().unwrap();
    assert_eq!(rebuilt, model);
    let report = verify(&rebuilt, &VerifyConfig::default());
    assert!(!any_failed(&report.checks), "{:?}", report.checks);
    assert_eq!(report.measured_degree, Some(5));
}

#[test]
fn tampered_model_is_rejected() {
    let model = construct(2, 2, 3, &GenConfig::default()).unwrap();
    let mut json = ScrollModelJson::from(&model);
    json.degree = 5;
    assert!(json.to_model().is_err());
}

#[test]
fn biform_json_header_must_match() {
    let mut j = BiFormJson::new(&explicit(), None);
    assert_eq!(j.to_biform().unwrap(), explicit());
    j.a = 3;
    assert!(j.to_biform().is_err());
}

#[test]
fn degenerate_input_fails_verification() {
    let f = BiForm::new(&parse_poly("s0^2*u0^2", None).unwrap()).unwrap();
    let report = verify(&implicitize(&f), &VerifyConfig::default());
    assert!(!report.smooth);
    assert!(any_failed(&report.checks));
}
