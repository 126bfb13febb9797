use classgen::certify::{self, certify, certify_pair, CertifyOptions, Verdict};
use classgen::generators::{build, search_parameter};
use classgen::{Elem, Error, Family, FieldSpec, Matrix};

fn quick() -> CertifyOptions {
    CertifyOptions {
        generation: false,
        ..CertifyOptions::default()
    }
}

fn keep_going() -> CertifyOptions {
    CertifyOptions {
        keep_going: true,
        ..quick()
    }
}

#[test]
fn sp6_over_gf2_reaches_full_order() {
    let f = FieldSpec::with_order(2).unwrap();
    let cert = certify(Family::Sp6Even, Some(&f), Some(Elem::ONE), &CertifyOptions::default()).unwrap();
    assert!(cert.passed(), "{}", cert.to_text());
    assert_eq!(cert.order.computed.as_deref(), Some("1451520"));
    assert_eq!(cert.order.expected, "1451520");
    assert_eq!(cert.check("generation").unwrap().verdict, Verdict::Pass);
    assert!(cert.to_text().contains("CHECK orders: PASS"));
}

#[test]
fn sp6_over_gf4_with_generating_parameter() {
    let f = FieldSpec::with_order(4).unwrap();
    let a = f.root_of_modulus();
    let cert = certify(Family::Sp6Even, Some(&f), Some(a), &quick()).unwrap();
    assert!(cert.passed(), "{}", cert.to_text());
    assert_eq!(cert.check("field_generation").unwrap().verdict, Verdict::Pass);
}

#[test]
fn sp6_over_gf4_with_a_in_prime_field_fails_only_field_generation() {
    let f = FieldSpec::with_order(4).unwrap();
    let cert = certify(Family::Sp6Even, Some(&f), Some(Elem::ONE), &keep_going()).unwrap();
    assert!(!cert.passed());
    let failed: Vec<_> = cert.failed_checks().map(|c| c.name.as_str()).collect();
    assert_eq!(failed, ["field_generation"]);
}

#[test]
fn fail_fast_stops_at_first_failure() {
    let f = FieldSpec::with_order(4).unwrap();
    let cert = certify(Family::Sp6Even, Some(&f), Some(Elem::ONE), &quick()).unwrap();
    assert_eq!(cert.checks.last().unwrap().name, "field_generation");
    assert!(cert.check("spanning_dimension").is_none());
}

#[test]
fn u7_over_gf9_passes_property_checks() {
    let f = FieldSpec::with_order(9).unwrap();
    let a = search_parameter(Family::Dim7Unit, &f, Family::Dim7Unit.default_strategy())
        .unwrap()
        .unwrap();
    let cert = certify(Family::Dim7Unit, Some(&f), Some(a), &CertifyOptions::default()).unwrap();
    assert!(cert.passed(), "{}", cert.to_text());
    assert_eq!(cert.q, 3);
    let generation = cert.check("generation").unwrap();
    assert_eq!(generation.verdict, Verdict::Skipped);
    assert_eq!(generation.details["reason"], certify::NOT_DESK_VERIFIABLE);
}

#[test]
fn u7_rejects_parameter_in_base_field() {
    let f = FieldSpec::with_order(25).unwrap();
    let err = certify(Family::Dim7Unit, Some(&f), Some(f.from_int(3)), &quick()).unwrap_err();
    assert!(matches!(err, Error::Precondition(_)));
}

#[test]
fn o7_over_gf7() {
    let f = FieldSpec::with_order(7).unwrap();
    let cert = certify(Family::Dim7Orth, Some(&f), Some(f.from_int(3)), &CertifyOptions::default()).unwrap();
    assert!(cert.passed(), "{}", cert.to_text());
    assert_eq!(cert.order.computed.as_deref(), Some("273457218604953600"));
    let bad = certify(Family::Dim7Orth, Some(&f), Some(f.from_int(2)), &quick()).unwrap();
    assert!(!bad.passed());
    assert_eq!(bad.failed_checks().next().unwrap().name, "conditions");
}

#[test]
fn o7_rejects_even_characteristic() {
    let f = FieldSpec::with_order(8).unwrap();
    let err = certify(Family::Dim7Orth, Some(&f), Some(Elem::ONE), &quick()).unwrap_err();
    assert!(matches!(err, Error::Precondition(_)));
}

#[test]
fn fixed_pairs_pass() {
    for fam in [Family::Sp6_3Intro, Family::SU7_4Special, Family::Om7_3Special, Family::Om7_5Special] {
        let cert = certify(fam, None, None, &quick()).unwrap();
        assert!(cert.passed(), "{}", cert.to_text());
        assert!(cert.a.is_none());
    }
    let cert = certify(Family::SU7_4Special, None, None, &quick()).unwrap();
    assert_eq!(cert.check("element_order_43").unwrap().verdict, Verdict::Pass);
}

#[test]
fn sl7_is_certified_by_properties_only() {
    let f = FieldSpec::with_order(5).unwrap();
    let a = search_parameter(Family::SL7Variant, &f, Family::SL7Variant.default_strategy())
        .unwrap()
        .unwrap();
    let cert = certify(Family::SL7Variant, Some(&f), Some(a), &CertifyOptions::default()).unwrap();
    assert!(cert.passed(), "{}", cert.to_text());
    assert_eq!(cert.check("generation").unwrap().verdict, Verdict::Skipped);
}

#[test]
fn certificates_are_reproducible() {
    let f = FieldSpec::with_order(4).unwrap();
    let a = f.root_of_modulus();
    let opts = CertifyOptions::default();
    let c1 = certify(Family::Sp6Even, Some(&f), Some(a), &opts).unwrap();
    let c2 = certify(Family::Sp6Even, Some(&f), Some(a), &opts).unwrap();
    let s1 = serde_json::to_string(&c1.deterministic_json()).unwrap();
    let s2 = serde_json::to_string(&c2.deterministic_json()).unwrap();
    assert_eq!(s1, s2);
    let back: certify::Certificate = serde_json::from_str(&serde_json::to_string(&c1).unwrap()).unwrap();
    assert_eq!(back, c1);
}

#[test]
fn json_has_schema_keys() {
    let cert = certify(Family::Om7_3Special, None, None, &quick()).unwrap();
    let v = serde_json::to_value(&cert).unwrap();
    for key in ["family", "q", "p", "n", "modulus", "a", "b", "checks", "order", "seed", "version"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    for c in v["checks"].as_array().unwrap() {
        assert!(c.get("name").is_some() && c.get("verdict").is_some() && c.get("details").is_some());
    }
    assert!(v["order"].get("computed").is_some() && v["order"].get("expected").is_some());
}

fn flip(m: &Matrix, i: usize, j: usize) -> Matrix {
    let mut out = m.clone();
    let f = m.field().clone();
    out.set(i, j, f.add(m.get(i, j), Elem::ONE));
    out
}

fn every_single_entry_mutation_fails(family: Family, q: u64, a: Option<Elem>, opts: &CertifyOptions) {
    let f = certify::field_for(family, q).unwrap();
    let pair = build(family, Some(&f), a).unwrap();
    assert!(certify_pair(&pair, opts).unwrap().passed());
    let n = pair.x.n();
    for which in 0..2 {
        for i in 0..n {
            for j in 0..n {
                let mut bad = pair.clone();
                if which == 0 {
                    bad.x = flip(&pair.x, i, j);
                } else {
                    bad.y = flip(&pair.y, i, j);
                }
                let cert = certify_pair(&bad, opts).unwrap();
                assert!(!cert.passed(), "{family} mutation of generator {which} at ({i},{j}) passed");
            }
        }
    }
}

#[test]
fn mutations_are_detected() {
    let f4 = FieldSpec::with_order(4).unwrap();
    every_single_entry_mutation_fails(Family::Sp6Even, 4, Some(f4.root_of_modulus()), &quick());
    let f7 = FieldSpec::with_order(7).unwrap();
    every_single_entry_mutation_fails(Family::Dim7Orth, 7, Some(f7.from_int(3)), &quick());
}

#[test]
fn mutations_of_fixed_pairs_are_detected_by_generation() {
    let opts = CertifyOptions::default();
    for (fam, q) in [(Family::SU7_4Special, 2), (Family::Om7_3Special, 3), (Family::Om7_5Special, 5), (Family::Sp6_3Intro, 3)] {
        every_single_entry_mutation_fails(fam, q, None, &opts);
    }
}

#[test]
fn diagonal_power_of_identity_pair() {
    let f = FieldSpec::with_order(3).unwrap();
    let id = Matrix::identity(&f, 7);
    assert_eq!(certify::min_diagonal_power(&id, &id, 32), Some(1));
}

#[test]
fn search_then_certify_passes_for_every_small_field() {
    for fam in [Family::Sp6Even, Family::Dim7Orth, Family::Dim7Unit, Family::SL7Variant] {
        for q in 2..=13u64 {
            let Ok(f) = certify::field_for(fam, q) else { continue };
            if fam.validate_field(&f).is_err() {
                continue;
            }
            let found = search_parameter(fam, &f, fam.default_strategy()).unwrap();
            let cert = match (fam, q, found) {
                (Family::Dim7Unit, 2, None) => certify(Family::SU7_4Special, None, None, &quick()),
                (Family::Dim7Orth, 3, None) => certify(Family::Om7_3Special, None, None, &quick()),
                (Family::Dim7Orth, 5, None) => certify(Family::Om7_5Special, None, None, &quick()),
                (_, _, Some(a)) => certify(fam, Some(&f), Some(a), &quick()),
                (_, _, None) => panic!("{fam} has no parameter at q = {q}"),
            }
            .unwrap();
            assert!(cert.passed(), "{fam} q={q}\n{}", cert.to_text());
        }
    }
}
