use proptest::prelude::*;

use classgen::algebra::spanning_dimension;
use classgen::generators::{check_conditions, search_parameter, Family};
use classgen::matrix::substitute_matrix;
use classgen::{Elem, FieldRef, FieldSpec, Matrix, Poly};

const ORDERS: [u64; 12] = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27];

fn field() -> impl Strategy<Value = FieldRef> {
    prop::sample::select(&ORDERS[..]).prop_map(|q| FieldSpec::with_order(q).unwrap())
}

fn elem(f: &FieldRef, raw: u32) -> Elem {
    f.elem(raw % f.order()).unwrap()
}

fn matrix(f: &FieldRef, n: usize, raw: &[u32]) -> Matrix {
    Matrix::from_fn(f, n, |i, j| elem(f, raw[i * n + j]))
}

/// A field, a dimension `n <= max_n` and raw entries for `count` matrices.
fn matrices(max_n: usize, count: usize) -> impl Strategy<Value = (FieldRef, usize, Vec<Vec<u32>>)> {
    (field(), 1..=max_n).prop_flat_map(move |(f, n)| {
        let raw = prop::collection::vec(prop::collection::vec(any::<u32>(), n * n), count);
        (Just(f), Just(n), raw)
    })
}

fn poly(f: &FieldRef, raw: &[u32]) -> Poly {
    Poly::new(f, raw.iter().map(|&r| elem(f, r)).collect())
}

fn polys() -> impl Strategy<Value = (FieldRef, Vec<u32>, Vec<u32>)> {
    (field(), prop::collection::vec(any::<u32>(), 2..6), prop::collection::vec(any::<u32>(), 2..6))
}

/// `det(tI - A)` by the Leibniz expansion over the polynomial ring.
fn leibniz_char_poly(a: &Matrix) -> Poly {
    let f = a.field();
    let n = a.n();
    let entry = |i: usize, j: usize| {
        let c = Poly::constant(f, f.neg(a.get(i, j)));
        if i == j {
            c.add(&Poly::t(f))
        } else {
            c
        }
    };
    let mut total = Poly::zero(f);
    let mut perm: Vec<usize> = (0..n).collect();
    permutations(&mut perm, 0, &mut |p| {
        let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
        let mut term = Poly::one(f);
        for (i, &j) in p.iter().enumerate() {
            term = term.mul(&entry(i, j));
        }
        total = if inversions % 2 == 0 { total.add(&term) } else { total.sub(&term) };
    });
    total
}

fn permutations(p: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        visit(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permutations(p, k + 1, visit);
        p.swap(k, i);
    }
}

/// Sylvester matrix determinant.
fn sylvester_resultant(f: &FieldRef, a: &Poly, b: &Poly) -> Elem {
    let (m, n) = (a.degree().unwrap(), b.degree().unwrap());
    let size = m + n;
    if size == 0 {
        return Elem::ONE;
    }
    let s = Matrix::from_fn(f, size, |i, j| {
        // Rows 0..n hold shifts of a, rows n..n+m shifts of b; coefficients descending.
        if i < n {
            j.checked_sub(i).filter(|&k| k <= m).map_or(Elem::ZERO, |k| a.coeff(m - k))
        } else {
            let r = i - n;
            j.checked_sub(r).filter(|&k| k <= n).map_or(Elem::ZERO, |k| b.coeff(n - k))
        }
    });
    s.det()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cayley_hamilton((f, n, raw) in matrices(6, 1)) {
        let a = matrix(&f, n, &raw[0]);
        let z = substitute_matrix(&a.char_poly(), &a).unwrap();
        prop_assert_eq!(z, Matrix::zero(&f, n));
    }

    #[test]
    fn char_poly_matches_leibniz((f, n, raw) in matrices(5, 1)) {
        let a = matrix(&f, n, &raw[0]);
        prop_assert_eq!(a.char_poly(), leibniz_char_poly(&a));
    }

    #[test]
    fn min_poly_annihilates_and_divides((f, n, raw) in matrices(6, 1)) {
        let a = matrix(&f, n, &raw[0]);
        let m = a.min_poly();
        prop_assert!(m.is_monic());
        prop_assert_eq!(substitute_matrix(&m, &a).unwrap(), Matrix::zero(&f, n));
        prop_assert!(m.divides(&a.char_poly()));
    }

    #[test]
    fn invariant_factors_multiply_to_char_poly((f, n, raw) in matrices(6, 1)) {
        let a = matrix(&f, n, &raw[0]);
        let inv = a.invariant_factors();
        let product = inv.iter().fold(Poly::one(&f), |acc, p| acc.mul(p));
        prop_assert_eq!(product, a.char_poly());
        prop_assert_eq!(inv.last().cloned().unwrap(), a.min_poly());
        for w in inv.windows(2) {
            prop_assert!(w[0].divides(&w[1]));
        }
    }

    #[test]
    fn det_is_multiplicative((f, n, raw) in matrices(5, 2)) {
        let (a, b) = (matrix(&f, n, &raw[0]), matrix(&f, n, &raw[1]));
        prop_assert_eq!(a.mul(&b).det(), f.mul(a.det(), b.det()));
    }

    #[test]
    fn inverse_is_two_sided((f, n, raw) in matrices(5, 1)) {
        let a = matrix(&f, n, &raw[0]);
        match a.inverse() {
            Ok(inv) => {
                prop_assert!(a.mul(&inv).is_identity());
                prop_assert!(inv.mul(&a).is_identity());
            }
            Err(_) => prop_assert!(a.det().is_zero()),
        }
    }

    #[test]
    fn spanning_dimension_is_conjugation_invariant((f, n, raw) in matrices(4, 3)) {
        let (a, b, c) = (matrix(&f, n, &raw[0]), matrix(&f, n, &raw[1]), matrix(&f, n, &raw[2]));
        if let Ok(ci) = c.inverse() {
            let d = spanning_dimension(&[a.clone(), b.clone()]).unwrap();
            let conj = |m: &Matrix| ci.mul(m).mul(&c);
            prop_assert_eq!(d, spanning_dimension(&[conj(&a), conj(&b)]).unwrap());
        }
    }

    #[test]
    fn resultant_matches_sylvester((f, ra, rb) in polys()) {
        let (a, b) = (poly(&f, &ra), poly(&f, &rb));
        if a.is_zero() || b.is_zero() {
            return Ok(());
        }
        prop_assert_eq!(a.resultant(&b), sylvester_resultant(&f, &a, &b));
    }

    #[test]
    fn resultant_vanishes_iff_common_factor((f, ra, rb) in polys()) {
        let (a, b) = (poly(&f, &ra), poly(&f, &rb));
        if a.is_constant() || b.is_constant() {
            return Ok(());
        }
        prop_assert_eq!(a.resultant(&b).is_zero(), !a.gcd(&b).is_constant());
    }

    #[test]
    fn discriminant_vanishes_iff_repeated_factor((f, ra, _rb) in polys()) {
        let a = poly(&f, &ra);
        if a.is_constant() {
            return Ok(());
        }
        let squarefree = a.gcd(&a.derivative()).is_constant();
        prop_assert_eq!(!a.discriminant().unwrap().is_zero(), squarefree);
    }

    #[test]
    fn frobenius_is_a_homomorphism(f in field(), x in any::<u32>(), y in any::<u32>(), k in 0u32..4) {
        let (x, y) = (elem(&f, x), elem(&f, y));
        prop_assert_eq!(f.frobenius(f.add(x, y), k), f.add(f.frobenius(x, k), f.frobenius(y, k)));
        prop_assert_eq!(f.frobenius(f.mul(x, y), k), f.mul(f.frobenius(x, k), f.frobenius(y, k)));
    }

    #[test]
    fn minimal_polynomial_of_element(f in field(), x in any::<u32>()) {
        let e = elem(&f, x);
        let m = f.minimal_polynomial(e);
        let codes: Vec<u32> = m.coeffs().iter().map(|c| c.code()).collect();
        prop_assert!(Poly::from_codes(&f, &codes).evaluate(e).is_zero());
        prop_assert!(m.is_irreducible());
        prop_assert_eq!(m.degree(), Some(f.generated_degree(e) as usize));
    }

    #[test]
    fn unitary_conditions_are_frobenius_invariant(q in prop::sample::select(&[4u64, 9, 16, 25, 49][..]), x in any::<u32>()) {
        let f = FieldSpec::with_order(q).unwrap();
        let a = elem(&f, x);
        let conj = f.frobenius(a, f.degree() / 2);
        let passes = |c| check_conditions(Family::Dim7Unit, &f, c).clauses.iter().map(|cl| cl.passed).collect::<Vec<_>>();
        prop_assert_eq!(passes(a), passes(conj));
    }
}

#[test]
fn is_square_matches_enumeration() {
    for q in [3u64, 5, 7, 9, 11, 13, 25, 27, 49] {
        let f = FieldSpec::with_order(q).unwrap();
        let squares: std::collections::HashSet<Elem> = f.nonzero_elements().map(|x| f.mul(x, x)).collect();
        for e in f.nonzero_elements() {
            assert_eq!(f.is_square(e).unwrap(), squares.contains(&e), "q={q}");
        }
    }
}

#[test]
fn search_output_satisfies_conditions() {
    for fam in [Family::Sp6Even, Family::Dim7Orth, Family::Dim7Unit, Family::SL7Variant] {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 49, 64, 81] {
            let f = FieldSpec::with_order(q).unwrap();
            if fam.validate_field(&f).is_err() {
                continue;
            }
            if let Some(a) = search_parameter(fam, &f, fam.default_strategy()).unwrap() {
                let report = check_conditions(fam, &f, a);
                assert!(report.all_pass(), "{fam} q={q}: {report:?}");
            }
        }
    }
}
