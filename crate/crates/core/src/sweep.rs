//! Closed-form polynomial identities satisfied by the generator pairs, and exhaustive
//! sweeps confirming them over small fields.

use serde::{Deserialize, Serialize};

use crate::field::{Elem, FieldRef, FieldSpec};
use crate::forms;
use crate::generators::{self, gen7, sp6_pair};
use crate::linalg::Vector;
use crate::matrix::Matrix;
use crate::poly::Poly;

fn k(f: &FieldSpec, v: i64) -> Elem {
    f.from_int(v)
}

/// Characteristic polynomial of `xy` for the Sp6 pair.
pub fn sp6_char_poly(f: &FieldRef, a: Elem) -> Poly {
    let a1 = f.add(a, Elem::ONE);
    Poly::new(f, vec![Elem::ONE, a1, Elem::ONE, Elem::ONE, Elem::ONE, a1, Elem::ONE])
}

/// Characteristic polynomial of `xy` for the 7-dimensional pair.
pub fn gen7_char_poly(f: &FieldRef, a: Elem, b: Elem) -> Poly {
    let o = Elem::ZERO;
    Poly::new(
        f,
        vec![k(f, -1), o, Elem::ONE, f.sub(b, Elem::ONE), f.sub(Elem::ONE, a), k(f, -1), o, Elem::ONE],
    )
}

/// Characteristic polynomial of `[x, y]` for the 7-dimensional pair with `b = a`.
pub fn orth_commutator_char_poly(f: &FieldRef, a: Elem) -> Poly {
    // c = a^2 - 4a + 3
    let c = f.add(f.sub(f.mul(a, a), f.mul(k(f, 4), a)), k(f, 3));
    let (l, m) = (Elem::ONE, k(f, -1));
    Poly::new(f, vec![m, m, m, c, f.neg(c), l, l, l])
}

/// Invariant factors of `x` and `y` for the Sp6 pair.
pub fn sp6_invariant_factors(f: &FieldRef) -> (Vec<Poly>, Vec<Poly>) {
    let t2p1 = Poly::from_ints(f, &[1, 0, 1]);
    let t3p1 = Poly::from_ints(f, &[1, 0, 0, 1]);
    (vec![t2p1.clone(), t2p1.clone(), t2p1], vec![t3p1.clone(), t3p1])
}

/// Invariant factors of `x` and `y` for the 7-dimensional pair.
pub fn gen7_invariant_factors(f: &FieldRef) -> (Vec<Poly>, Vec<Poly>) {
    let tp1 = Poly::from_ints(f, &[1, 1]);
    let t2m1 = Poly::from_ints(f, &[-1, 0, 1]);
    let cyc = Poly::from_ints(f, &[1, 1, 1]);
    let t3m1 = Poly::from_ints(f, &[-1, 0, 0, 1]);
    (
        vec![tp1, t2m1.clone(), t2m1.clone(), t2m1],
        vec![cyc.clone(), cyc, t3m1],
    )
}

/// `(a-1)(a-5)^3(27a^2-4a-148)^2`.
pub fn orth_char_disc(f: &FieldSpec, a: Elem) -> Elem {
    let q = f.sub(f.sub(f.mul(k(f, 27), f.mul(a, a)), f.mul(k(f, 4), a)), k(f, 148));
    let mut v = f.sub(a, Elem::ONE);
    v = f.mul(v, f.pow(f.sub(a, k(f, 5)), 3));
    f.mul(v, f.mul(q, q))
}

/// `(a-2)^6(a+2)^3(a-6)^3(27a^2-108a+76)^2`.
pub fn orth_commutator_disc(f: &FieldSpec, a: Elem) -> Elem {
    let q = f.add(f.sub(f.mul(k(f, 27), f.mul(a, a)), f.mul(k(f, 108), a)), k(f, 76));
    let mut v = f.pow(f.sub(a, k(f, 2)), 6);
    v = f.mul(v, f.pow(f.add(a, k(f, 2)), 3));
    v = f.mul(v, f.pow(f.sub(a, k(f, 6)), 3));
    f.mul(v, f.mul(q, q))
}

/// `16(a-2)^2(a-1)(a+2)^2`.
pub fn orth_wall_det(f: &FieldSpec, a: Elem) -> Elem {
    let am2 = f.sub(a, k(f, 2));
    let ap2 = f.add(a, k(f, 2));
    let mut v = f.mul(k(f, 16), f.mul(am2, am2));
    v = f.mul(v, f.sub(a, Elem::ONE));
    f.mul(v, f.mul(ap2, ap2))
}

/// `(a-2)^2(1-a)`.
pub fn orth_d71(f: &FieldSpec, a: Elem) -> Elem {
    let am2 = f.sub(a, k(f, 2));
    f.mul(f.mul(am2, am2), f.sub(Elem::ONE, a))
}

/// `a^3 (x1 + a + 1)^2`.
pub fn sp6_m2_det(f: &FieldSpec, a: Elem, x1: Elem) -> Elem {
    let s = f.add(f.add(x1, a), Elem::ONE);
    f.mul(f.pow(a, 3), f.mul(s, s))
}

fn columns(f: &FieldRef, cols: &[Vector]) -> Matrix {
    Matrix::from_columns(f, cols).expect("square")
}

/// `det(u | xu | yxu | xyxu | (yx)^2 u | x(yx)^2 u)` with `u = e1`.
pub fn sp6_m1(f: &FieldRef, a: Elem) -> Matrix {
    let (x, y) = sp6_pair(f, a);
    let mut u = vec![Elem::ZERO; 6];
    u[0] = Elem::ONE;
    let xu = x.mul_vec(&u);
    let yxu = y.mul_vec(&xu);
    let xyxu = x.mul_vec(&yxu);
    let yx2u = y.mul_vec(&xyxu);
    let xyx2u = x.mul_vec(&yx2u);
    columns(f, &[u, xu, yxu, xyxu, yx2u, xyx2u])
}

/// `det(u | xu | yxu | xyxu | xy^2xu | y^2xu)` with `u = (x1, 1, 0, 0, 0, a)`.
pub fn sp6_m2(f: &FieldRef, a: Elem, x1: Elem) -> Matrix {
    let (x, y) = sp6_pair(f, a);
    let u = vec![x1, Elem::ONE, Elem::ZERO, Elem::ZERO, Elem::ZERO, a];
    let xu = x.mul_vec(&u);
    let yxu = y.mul_vec(&xu);
    let xyxu = x.mul_vec(&yxu);
    let y2xu = y.mul_vec(&yxu);
    let xy2xu = x.mul_vec(&y2xu);
    columns(f, &[u, xu, yxu, xyxu, xy2xu, y2xu])
}

/// One identity checked over one field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepItem {
    pub name: String,
    pub field: String,
    pub cases: u64,
    pub mismatches: Vec<String>,
}

impl SweepItem {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.cases > 0
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub items: Vec<SweepItem>,
}

impl SweepReport {
    pub fn all_pass(&self) -> bool {
        self.items.iter().all(SweepItem::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &SweepItem> {
        self.items.iter().filter(|i| !i.passed())
    }
}

struct Recorder<'a> {
    report: &'a mut SweepReport,
    field: &'a FieldRef,
}

impl Recorder<'_> {
    fn item<I>(&mut self, name: &str, cases: I, mut check: impl FnMut(&I::Item) -> Option<String>)
    where
        I: IntoIterator,
    {
        let mut n = 0;
        let mut mismatches = Vec::new();
        for c in cases {
            n += 1;
            if let Some(m) = check(&c) {
                if mismatches.len() < 8 {
                    mismatches.push(m);
                }
            }
        }
        self.report.items.push(SweepItem {
            name: name.to_string(),
            field: format!("GF({})", self.field.order()),
            cases: n,
            mismatches,
        });
    }
}

fn mismatch<T: PartialEq + std::fmt::Debug>(what: String, got: T, want: T) -> Option<String> {
    (got != want).then(|| format!("{what}: got {got:?}, expected {want:?}"))
}

/// Every field GF(q), 2 <= q <= `q_max`, with its default modulus.
pub fn fields_up_to(q_max: u64) -> Vec<FieldRef> {
    (2..=q_max.min(crate::field::MAX_ORDER))
        .filter_map(|q| FieldSpec::with_order(q).ok())
        .collect()
}

/// Confirms the closed-form identities by exact evaluation at every parameter value over
/// every field of order at most `q_max` (the all-pairs `(a, b)` sweeps stop at 9, and the
/// unitary sweeps run over GF(q^2) for q <= `q_max`).
pub fn proof_identity_sweep(q_max: u64) -> SweepReport {
    let mut report = SweepReport::default();
    for f in fields_up_to(q_max) {
        let mut rec = Recorder {
            report: &mut report,
            field: &f,
        };
        if f.characteristic() == 2 {
            sweep_sp6(&mut rec, &f);
        } else {
            sweep_orth(&mut rec, &f);
        }
        sweep_gen7_general(&mut rec, &f);
    }
    for base in fields_up_to(q_max) {
        let q = base.order() as u64;
        let Ok(f) = FieldSpec::with_order(q * q) else { continue };
        let mut rec = Recorder {
            report: &mut report,
            field: &f,
        };
        sweep_unitary(&mut rec, &f);
    }
    report
}

fn sweep_sp6(rec: &mut Recorder, f: &FieldRef) {
    let nz: Vec<Elem> = f.nonzero_elements().collect();
    let (ix, iy) = sp6_invariant_factors(f);
    rec.item("sp6: x^2 = y^3 = I", nz.clone(), |&a| {
        let (x, y) = sp6_pair(f, a);
        (!(x.pow(2).is_identity() && y.pow(3).is_identity())).then(|| format!("a={}", f.format_elem(a)))
    });
    rec.item("sp6: Gram matrix preserved", nz.clone(), |&a| {
        let (x, y) = sp6_pair(f, a);
        let j = generators::sp6_gram(f, a);
        (!forms::preserves(&[x, y], &j, forms::Sigma::Identity)).then(|| format!("a={}", f.format_elem(a)))
    });
    rec.item("sp6: char poly of xy", nz.clone(), |&a| {
        let (x, y) = sp6_pair(f, a);
        mismatch(format!("a={}", f.format_elem(a)), x.mul(&y).char_poly(), sp6_char_poly(f, a))
    });
    rec.item("sp6: min poly of xy = char poly", nz.clone(), |&a| {
        let z = {
            let (x, y) = sp6_pair(f, a);
            x.mul(&y)
        };
        mismatch(format!("a={}", f.format_elem(a)), z.min_poly(), z.char_poly())
    });
    rec.item("sp6: invariant factors of x and y", nz.clone(), |&a| {
        let (x, y) = sp6_pair(f, a);
        mismatch(
            format!("a={}", f.format_elem(a)),
            (x.invariant_factors(), y.invariant_factors()),
            (ix.clone(), iy.clone()),
        )
    });
    rec.item("sp6: discriminant of char poly of xy = 1", nz.clone(), |&a| {
        mismatch(format!("a={}", f.format_elem(a)), sp6_char_poly(f, a).discriminant().ok(), Some(Elem::ONE))
    });
    rec.item("sp6: det M1 = a", nz.clone(), |&a| {
        mismatch(format!("a={}", f.format_elem(a)), sp6_m1(f, a).det(), a)
    });
    let pairs: Vec<(Elem, Elem)> = nz.iter().flat_map(|&a| f.elements().map(move |x1| (a, x1))).collect();
    rec.item("sp6: det M2 = a^3 (x1 + a + 1)^2", pairs, |&(a, x1)| {
        mismatch(
            format!("a={} x1={}", f.format_elem(a), f.format_elem(x1)),
            sp6_m2(f, a, x1).det(),
            sp6_m2_det(f, a, x1),
        )
    });
}

fn sweep_orth(rec: &mut Recorder, f: &FieldRef) {
    let all: Vec<Elem> = f.elements().collect();
    let (ix, iy) = gen7_invariant_factors(f);
    let label = |a: Elem| format!("a={}", f.format_elem(a));
    rec.item("o7: x^2 = y^3 = I", all.clone(), |&a| {
        let (x, y) = gen7(f, a, a);
        (!(x.pow(2).is_identity() && y.pow(3).is_identity())).then(|| label(a))
    });
    rec.item("o7: char poly of xy", all.clone(), |&a| {
        let (x, y) = gen7(f, a, a);
        mismatch(label(a), x.mul(&y).char_poly(), gen7_char_poly(f, a, a))
    });
    rec.item("o7: char poly of [x,y]", all.clone(), |&a| {
        let (x, y) = gen7(f, a, a);
        let w = x.commutator(&y).expect("invertible");
        mismatch(label(a), w.char_poly(), orth_commutator_char_poly(f, a))
    });
    rec.item("o7: invariant factors of x and y", all.clone(), |&a| {
        let (x, y) = gen7(f, a, a);
        mismatch(label(a), (x.invariant_factors(), y.invariant_factors()), (ix.clone(), iy.clone()))
    });
    rec.item("o7: discriminant of char poly of xy", all.clone(), |&a| {
        mismatch(label(a), gen7_char_poly(f, a, a).discriminant().ok(), Some(orth_char_disc(f, a)))
    });
    rec.item("o7: discriminant of char poly of [x,y]", all.clone(), |&a| {
        mismatch(label(a), orth_commutator_char_poly(f, a).discriminant().ok(), Some(orth_commutator_disc(f, a)))
    });
    rec.item("o7: ([x,y]^7)_{7,1} = (a-2)^2 (1-a)", all.clone(), |&a| {
        let (x, y) = gen7(f, a, a);
        let d = x.commutator(&y).expect("invertible").pow(7);
        mismatch(label(a), d.get(6, 0), orth_d71(f, a))
    });
    rec.item("o7: symmetric form preserved", all.clone(), |&a| {
        let (x, y) = gen7(f, a, a);
        let b = generators::orthogonal_gram(f, a);
        (!forms::preserves(&[x, y], &b, forms::Sigma::Identity)).then(|| label(a))
    });
    rec.item("o7: Wall Gram matrix in the explicit basis", all.clone(), |&a| {
        let (x, _) = gen7(f, a, a);
        let b = generators::orthogonal_gram(f, a);
        let basis = forms::orthogonal_wall_basis(f, a);
        match wall_by_evaluation(f, &x, &b, &basis) {
            Some(g) => mismatch(label(a), g, forms::orthogonal_wall_gram(f, a)),
            None => Some(format!("{}: basis outside the image of x - I", label(a))),
        }
    });
    rec.item("o7: Wall determinant = 16(a-2)^2(a-1)(a+2)^2", all, |&a| {
        mismatch(label(a), forms::orthogonal_wall_gram(f, a).det(), orth_wall_det(f, a))
    });
}

/// Wall Gram matrix computed without the nondegeneracy precondition.
fn wall_by_evaluation(f: &FieldRef, x: &Matrix, b: &Matrix, basis: &[Vector]) -> Option<Matrix> {
    let xm = x.sub(&Matrix::identity(f, x.n())).ok()?;
    let pre: Vec<Vector> = basis.iter().map(|u| xm.solve(u)).collect::<Result<_, _>>().ok()?;
    Some(Matrix::from_fn(f, basis.len(), |i, j| forms::bilinear_value(f, b, &pre[i], &basis[j])))
}

fn sweep_gen7_general(rec: &mut Recorder, f: &FieldRef) {
    let label = |a: Elem, b: Elem| format!("a={} b={}", f.format_elem(a), f.format_elem(b));
    let zeros: Vec<Elem> = f.elements().collect();
    rec.item("sl7: char poly of xy (b = 0)", zeros, |&a| {
        let (x, y) = gen7(f, a, Elem::ZERO);
        mismatch(label(a, Elem::ZERO), x.mul(&y).char_poly(), gen7_char_poly(f, a, Elem::ZERO))
    });
    if f.order() > 9 {
        return;
    }
    let pairs: Vec<(Elem, Elem)> = f.elements().flat_map(|a| f.elements().map(move |b| (a, b))).collect();
    rec.item("gen7: ((xy)^7)_{3,1} = 1", pairs.clone(), |&(a, b)| {
        let (x, y) = gen7(f, a, b);
        mismatch(label(a, b), x.mul(&y).pow(7).get(2, 0), Elem::ONE)
    });
    rec.item("gen7: char poly of xy for all (a, b)", pairs, |&(a, b)| {
        let (x, y) = gen7(f, a, b);
        mismatch(label(a, b), x.mul(&y).char_poly(), gen7_char_poly(f, a, b))
    });
}

fn sweep_unitary(rec: &mut Recorder, f: &FieldRef) {
    let half = f.degree() / 2;
    let all: Vec<Elem> = f.elements().collect();
    let (ix, iy) = gen7_invariant_factors(f);
    let label = |a: Elem| format!("a={}", f.format_elem(a));
    rec.item("u7: char poly of xy (b = a^q)", all.clone(), |&a| {
        let b = f.frobenius(a, half);
        let (x, y) = gen7(f, a, b);
        mismatch(label(a), x.mul(&y).char_poly(), gen7_char_poly(f, a, b))
    });
    rec.item("u7: invariant factors of x and y", all, |&a| {
        let b = f.frobenius(a, half);
        let (x, y) = gen7(f, a, b);
        mismatch(label(a), (x.invariant_factors(), y.invariant_factors()), (ix.clone(), iy.clone()))
    });
}

/// A characteristic polynomial checked at an isolated parameter value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialPolynomial {
    pub element: String,
    pub p: u32,
    pub a: i64,
    pub expected: Vec<String>,
    pub computed: Vec<String>,
    pub matches: bool,
    pub discriminant_nonzero: bool,
    /// Whether the coefficients violate the torus relation `f3 = f1 + f1^2 + f2`.
    pub torus_relation_violated: bool,
}

/// The isolated characteristic polynomials of `[x,y] xy` and `[x,y] (xy)^2` for the
/// orthogonal pair at the parameters where `xy` and `[x,y]` fail to be semisimple.
pub fn special_polynomials() -> Vec<SpecialPolynomial> {
    let wz: [i64; 8] = [-1, -3, 16, 82, -82, -16, 3, 1];
    let wz2: [i64; 8] = [-1, -14, -25, -6, 6, 25, 14, 1];
    [(7u32, 5i64, 1u64, wz), (211, 5, 1, wz), (53, 47, 2, wz2)]
        .into_iter()
        .map(|(p, a, power, coeffs)| {
            let f = FieldSpec::prime(p).expect("prime");
            let ae = f.from_int(a);
            let (x, y) = gen7(&f, ae, ae);
            let w = x.commutator(&y).expect("invertible");
            let s = w.mul(&x.mul(&y).pow(power));
            let computed = s.char_poly();
            let expected = Poly::from_ints(&f, &coeffs);
            let c = |j: usize| computed.coeff(j);
            let (f1, f2, f3) = (c(1), c(2), c(3));
            let rel = f.add(f.add(f1, f.mul(f1, f1)), f2);
            SpecialPolynomial {
                element: if power == 1 { "[x,y] xy" } else { "[x,y] (xy)^2" }.to_string(),
                p,
                a,
                expected: expected.to_strings(),
                computed: computed.to_strings(),
                matches: computed == expected,
                discriminant_nonzero: computed.discriminant().map(|d| !d.is_zero()).unwrap_or(false),
                torus_relation_violated: f3 != rel,
            }
        })
        .collect()
}
