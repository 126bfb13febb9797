use classgen::algebra::spanning_dimension;
use classgen::forms::{self, FormKind, Sigma};
use classgen::generators::{
    self, build, check_conditions, reducibility_witness, search_parameter, Family, Strategy, WitnessKind,
};
use classgen::{Elem, FieldSpec, Matrix, Poly};

fn fields_up_to(qmax: u64) -> Vec<classgen::FieldRef> {
    (2..=qmax).filter_map(|q| FieldSpec::with_order(q).ok()).collect()
}

#[test]
fn involution_and_order_three_for_every_family() {
    for f in fields_up_to(13) {
        for fam in [Family::Sp6Even, Family::Dim7Orth, Family::SL7Variant] {
            if fam.validate_field(&f).is_err() {
                continue;
            }
            for a in f.elements() {
                let Ok(pair) = build(fam, Some(&f), Some(a)) else { continue };
                assert!(pair.x.pow(2).is_identity(), "{fam} q={} a={a:?}", f.order());
                assert!(pair.y.pow(3).is_identity());
            }
        }
    }
    for fam in [Family::SU7_4Special, Family::Om7_3Special, Family::Om7_5Special] {
        let pair = build(fam, None, None).unwrap();
        assert!(pair.x.pow(2).is_identity(), "{fam}");
        assert!(pair.y.pow(3).is_identity(), "{fam}");
        assert_eq!(pair.x.det(), Elem::ONE);
        assert_eq!(pair.y.det(), Elem::ONE);
    }
    let intro = build(Family::Sp6_3Intro, None, None).unwrap();
    let f3 = intro.field.clone();
    assert_eq!(intro.x.pow(2), Matrix::scalar(&f3, 6, f3.from_int(-1)));
    assert!(intro.y.pow(3).is_identity());
}

#[test]
fn sp6_fixes_its_gram_matrix() {
    for q in [2u64, 4, 8, 16] {
        let f = FieldSpec::with_order(q).unwrap();
        for a in f.nonzero_elements() {
            let pair = build(Family::Sp6Even, Some(&f), Some(a)).unwrap();
            let j = generators::sp6_gram(&f, a);
            assert!(forms::preserves(&pair.gens(), &j, Sigma::Identity));
            assert_eq!(j.transpose(), j);
        }
    }
}

#[test]
fn orthogonal_gram_is_the_normalized_invariant_form() {
    for q in [3u64, 5, 7, 9, 11, 13] {
        let f = FieldSpec::with_order(q).unwrap();
        for a in f.elements() {
            let pair = build(Family::Dim7Orth, Some(&f), Some(a)).unwrap();
            let b = generators::orthogonal_gram(&f, a);
            assert!(forms::preserves(&pair.gens(), &b, Sigma::Identity), "q={q} a={a:?}");
        }
    }
}

#[test]
fn orthogonal_search_examples() {
    let f7 = FieldSpec::prime(7).unwrap();
    let a = search_parameter(Family::Dim7Orth, &f7, Strategy::Exhaustive).unwrap().unwrap();
    let a1 = f7.sub(a, Elem::ONE);
    assert!(f7.is_square(a1).unwrap());
    assert!(![0, 1, 2, 5].contains(&a.code()));
    let f2 = FieldSpec::prime(2).unwrap();
    assert_eq!(search_parameter(Family::Sp6Even, &f2, Strategy::Exhaustive).unwrap(), Some(Elem::ONE));
    let f4 = FieldSpec::with_order(4).unwrap();
    assert_eq!(search_parameter(Family::Dim7Unit, &f4, Strategy::Exhaustive).unwrap(), None);
}

#[test]
fn two_two_violates_clause_ii() {
    let f = FieldSpec::prime(7).unwrap();
    let two = f.from_int(2);
    assert!(generators::irr7_expr_ii(&f, two, two).is_zero());
    assert!(!check_conditions(Family::Dim7Orth, &f, two).all_pass());
    let w = reducibility_witness(&f, two, two).unwrap();
    assert_eq!(w.kind, WitnessKind::TwoTwo);
    assert!(w.verified() && w.has_expected_dimension());
}

#[test]
fn eigenline_witness_over_extension() {
    // Any b = -omega a + 2 omega^2 needs omega, absent from GF(5); the witness lives in GF(25).
    let fam = FieldSpec::with_order(25).unwrap();
    let w = fam.omega().unwrap();
    for a in fam.elements() {
        let b = fam.add(fam.neg(fam.mul(w, a)), fam.mul(fam.from_int(2), fam.mul(w, w)));
        let rep = reducibility_witness(&fam, a, b).unwrap();
        assert_eq!(rep.kind, WitnessKind::EigenLine);
        assert!(rep.verified() && rep.has_expected_dimension(), "a={a:?}");
    }
}

#[test]
fn char2_witness_degenerates_at_one() {
    for q in [2u64, 4, 8, 16] {
        let f = FieldSpec::with_order(q).unwrap();
        for a in f.elements() {
            let Ok(rep) = reducibility_witness(&f, a, a) else { continue };
            assert!(rep.verified(), "q={q} a={a:?}");
            if rep.kind == WitnessKind::Char2 {
                assert_eq!(rep.has_expected_dimension(), a != Elem::ONE, "q={q} a={a:?}");
                if a == Elem::ONE {
                    assert_eq!(rep.dimension, 2);
                }
            }
        }
    }
}

#[test]
fn unitary_pair_has_hermitian_form() {
    let f = FieldSpec::with_order(9).unwrap();
    let a = search_parameter(Family::Dim7Unit, &f, Strategy::PrimitiveFirst).unwrap().unwrap();
    let pair = build(Family::Dim7Unit, Some(&f), Some(a)).unwrap();
    let sol = forms::invariant_forms(&pair.gens(), Sigma::unitary(&f)).unwrap();
    assert_eq!(sol.dimension(), 1);
    assert_eq!(sol.kinds[0], FormKind::Hermitian);
    assert!(sol.nondegenerate[0]);
    assert_eq!(spanning_dimension(&pair.gens()).unwrap(), 49);
}

#[test]
fn sp6_has_no_invariant_quadratic_form() {
    for q in [2u64, 4, 8, 16] {
        let f = FieldSpec::with_order(q).unwrap();
        for a in f.nonzero_elements() {
            let pair = build(Family::Sp6Even, Some(&f), Some(a)).unwrap();
            let j = generators::sp6_gram(&f, a);
            let sol = forms::invariant_quadratic_char2(&pair.gens(), Some(&j)).unwrap();
            assert_eq!(sol.dimension, 0, "q={q}");
        }
    }
    let f2 = FieldSpec::prime(2).unwrap();
    let id = Matrix::identity(&f2, 6);
    assert_eq!(forms::invariant_quadratic_char2(&[id.clone(), id], None).unwrap().dimension, 21);
}

#[test]
fn wall_gram_matches_closed_form() {
    for q in [3u64, 5, 7, 9, 11, 13] {
        let f = FieldSpec::with_order(q).unwrap();
        for a in f.elements() {
            let pair = build(Family::Dim7Orth, Some(&f), Some(a)).unwrap();
            let b = generators::orthogonal_gram(&f, a);
            if b.det().is_zero() {
                continue;
            }
            let basis = forms::orthogonal_wall_basis(&f, a);
            let w = forms::wall_form_in_basis(&pair.x, &b, &basis).unwrap();
            assert_eq!(w.gram, forms::orthogonal_wall_gram(&f, a), "q={q} a={a:?}");
        }
    }
}

#[test]
fn char_poly_display_examples() {
    let f = FieldSpec::prime(7).unwrap();
    let pair = build(Family::Dim7Orth, Some(&f), Some(f.from_int(3))).unwrap();
    let chi = pair.z().char_poly();
    assert_eq!(chi, Poly::from_ints(&f, &[-1, 0, 1, 2, -2, -1, 0, 1]));
}
