//! The generator pairs, their parameter conditions and the reducibility witnesses.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{is_invariant, submodule_closure};
use crate::error::{Error, Result};
use crate::field::{omega_extension, Elem, FieldRef, FieldSpec};
use crate::linalg::{Subspace, Vector};
use crate::matrix::Matrix;

/// The generator families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    /// Sp6(q), q even, one parameter `a`.
    Sp6Even,
    /// The uniform 7-dimensional pair with `b = a` in GF(q), q odd.
    Dim7Orth,
    /// The uniform 7-dimensional pair with `b = a^q` in GF(q^2).
    Dim7Unit,
    /// The fixed PSp6(3) pair.
    Sp6_3Intro,
    /// The fixed SU7(4) pair.
    SU7_4Special,
    /// The fixed Omega7(3) pair.
    Om7_3Special,
    /// The fixed Omega7(5) pair.
    Om7_5Special,
    /// The uniform 7-dimensional pair with `b = 0`.
    SL7Variant,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::Sp6Even,
        Family::Dim7Orth,
        Family::Dim7Unit,
        Family::Sp6_3Intro,
        Family::SU7_4Special,
        Family::Om7_3Special,
        Family::Om7_5Special,
        Family::SL7Variant,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Sp6Even => "sp6",
            Family::Dim7Orth => "o7",
            Family::Dim7Unit => "u7",
            Family::Sp6_3Intro => "sp6-3",
            Family::SU7_4Special => "su7-4",
            Family::Om7_3Special => "o7-3",
            Family::Om7_5Special => "o7-5",
            Family::SL7Variant => "sl7",
        }
    }

    pub fn dimension(self) -> usize {
        match self {
            Family::Sp6Even | Family::Sp6_3Intro => 6,
            _ => 7,
        }
    }

    /// Whether the pair depends on a parameter `a`.
    pub fn is_parametric(self) -> bool {
        matches!(
            self,
            Family::Sp6Even | Family::Dim7Orth | Family::Dim7Unit | Family::SL7Variant
        )
    }

    /// The field a fixed pair lives over.
    pub fn fixed_field(self) -> Option<FieldRef> {
        let q = match self {
            Family::Sp6_3Intro | Family::Om7_3Special => 3,
            Family::SU7_4Special => 4,
            Family::Om7_5Special => 5,
            _ => return None,
        };
        Some(FieldSpec::with_order(q).expect("small prime power"))
    }

    /// Checks the field against the family's parity constraint.
    pub fn validate_field(self, field: &FieldSpec) -> Result<()> {
        let (p, n) = (field.characteristic(), field.degree());
        let ok = match self {
            Family::Sp6Even => p == 2,
            Family::Dim7Orth => p != 2,
            Family::Dim7Unit => n % 2 == 0,
            Family::Sp6_3Intro | Family::Om7_3Special => (p, n) == (3, 1),
            Family::Om7_5Special => (p, n) == (5, 1),
            Family::SU7_4Special => (p, n) == (2, 2),
            Family::SL7Variant => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Precondition(format!(
                "family {} is not defined over GF({})",
                self.name(),
                field.order()
            )))
        }
    }

    /// The `q` of the target group: for the unitary families the field is GF(q^2).
    pub fn group_q(self, field: &FieldSpec) -> u64 {
        match self {
            Family::Dim7Unit | Family::SU7_4Special => {
                (field.characteristic() as u64).pow(field.degree() / 2)
            }
            _ => field.order() as u64,
        }
    }

    pub fn default_strategy(self) -> Strategy {
        match self {
            Family::Dim7Unit => Strategy::PrimitiveFirst,
            Family::Dim7Orth => Strategy::AlphaSquaredPlusOne,
            _ => Strategy::Exhaustive,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|fam| fam.name() == s)
            .ok_or_else(|| Error::Parse {
                what: "family",
                input: s.to_string(),
            })
    }
}

#[derive(Clone, Debug)]
pub struct GeneratorPair {
    pub family: Family,
    pub field: FieldRef,
    pub a: Elem,
    pub b: Elem,
    pub x: Matrix,
    pub y: Matrix,
}

impl GeneratorPair {
    pub fn z(&self) -> Matrix {
        self.x.mul(&self.y)
    }

    pub fn gens(&self) -> [Matrix; 2] {
        [self.x.clone(), self.y.clone()]
    }
}

/// Builds the pair of `family` over `field`. Parametric families need `a`; the fixed pairs
/// ignore it and take their own field when `field` is `None`.
pub fn build(family: Family, field: Option<&FieldRef>, a: Option<Elem>) -> Result<GeneratorPair> {
    let field = match (field, family.fixed_field()) {
        (Some(f), _) => f.clone(),
        (None, Some(f)) => f,
        (None, None) => {
            return Err(Error::Precondition(format!("family {family} needs a field")));
        }
    };
    family.validate_field(&field)?;
    let f = &field;
    if !family.is_parametric() {
        let (x, y) = match family {
            Family::Sp6_3Intro => intro_pair(f),
            Family::SU7_4Special => su7_4_pair(f),
            _ => om7_special_pair(f),
        };
        return Ok(GeneratorPair {
            family,
            field,
            a: Elem::ZERO,
            b: Elem::ZERO,
            x,
            y,
        });
    }
    let a = a.ok_or_else(|| Error::Precondition(format!("family {family} needs a parameter a")))?;
    f.elem(a.code())?;
    let (b, (x, y)) = match family {
        Family::Sp6Even => {
            if a.is_zero() {
                return Err(Error::Precondition("a must be nonzero".into()));
            }
            (a, sp6_pair(f, a))
        }
        Family::Dim7Orth => (a, gen7(f, a, a)),
        Family::Dim7Unit => {
            let b = f.frobenius(a, f.degree() / 2);
            (b, gen7(f, a, b))
        }
        _ => (Elem::ZERO, gen7(f, a, Elem::ZERO)),
    };
    Ok(GeneratorPair {
        family,
        field,
        a,
        b,
        x,
        y,
    })
}

fn lit(f: &FieldSpec, v: i64) -> Elem {
    f.from_int(v)
}

/// The 6-dimensional pair for q even.
pub fn sp6_pair(f: &FieldRef, a: Elem) -> (Matrix, Matrix) {
    let x = Matrix::from_fn(f, 6, |i, j| match (i, j) {
        (0, 2) | (1, 3) | (2, 0) | (3, 1) | (4, 4) | (5, 5) => Elem::ONE,
        (5, 4) => a,
        _ => Elem::ZERO,
    });
    let y_rows: [[u8; 6]; 6] = [
        [1, 0, 0, 1, 1, 0],
        [0, 1, 0, 0, 0, 0],
        [0, 0, 0, 1, 0, 0],
        [0, 0, 1, 1, 0, 0],
        [0, 2, 1, 1, 1, 1],
        [0, 2, 1, 0, 1, 0],
    ];
    let y = Matrix::from_fn(f, 6, |i, j| match y_rows[i][j] {
        0 => Elem::ZERO,
        1 => Elem::ONE,
        _ => a,
    });
    (x, y)
}

/// The alternating Gram matrix fixed by the Sp6 pair.
pub fn sp6_gram(f: &FieldRef, a: Elem) -> Matrix {
    let a1 = f.add(a, Elem::ONE);
    let (o, l) = (Elem::ZERO, Elem::ONE);
    Matrix::from_rows(
        f,
        vec![
            vec![o, l, o, o, o, o],
            vec![l, o, o, a, a1, l],
            vec![o, o, o, l, o, o],
            vec![o, a, l, o, l, l],
            vec![o, a1, o, l, o, l],
            vec![o, l, o, l, l, o],
        ],
    )
    .expect("square")
}

/// The uniform 7-dimensional pair with parameters `a`, `b`.
pub fn gen7(f: &FieldRef, a: Elem, b: Elem) -> (Matrix, Matrix) {
    let m1 = lit(f, -1);
    let (o, l) = (Elem::ZERO, Elem::ONE);
    let x = Matrix::from_rows(
        f,
        vec![
            vec![o, l, o, o, o, o, a],
            vec![l, o, o, o, o, o, a],
            vec![o, o, o, l, o, o, o],
            vec![o, o, l, o, o, o, o],
            vec![o, o, o, o, o, l, m1],
            vec![o, o, o, o, l, o, m1],
            vec![o, o, o, o, o, o, m1],
        ],
    )
    .expect("square");
    let c = f.sub(f.add(a, b), l);
    let y = Matrix::from_rows(
        f,
        vec![
            vec![l, o, m1, o, m1, o, c],
            vec![o, o, m1, o, o, o, o],
            vec![o, l, m1, o, o, o, o],
            vec![o, o, o, o, m1, o, o],
            vec![o, o, o, l, m1, o, o],
            vec![o, o, o, o, o, o, m1],
            vec![o, o, o, o, o, l, m1],
        ],
    )
    .expect("square");
    (x, y)
}

/// Symmetric form fixed by the orthogonal 7-dimensional pair (`b = a`), scaled so that
/// entry (1,2) is -1.
pub fn orthogonal_gram(f: &FieldRef, a: Elem) -> Matrix {
    let k = |v: i64| lit(f, v);
    let two_a = f.add(a, a);
    let p = f.sub(two_a, Elem::ONE); // 2a - 1
    let r = f.sub(k(3), two_a); // 3 - 2a
    let s = f.sub(f.sub(f.mul(two_a, a), two_a), Elem::ONE); // 2a^2 - 2a - 1
    let (t, m) = (k(3), k(-1));
    Matrix::from_rows(
        f,
        vec![
            vec![t, m, m, m, m, p, p],
            vec![m, t, m, m, p, m, r],
            vec![m, m, t, r, m, m, m],
            vec![m, m, r, t, m, m, r],
            vec![m, p, m, m, t, m, m],
            vec![p, m, m, m, m, t, s],
            vec![p, r, m, r, m, s, t],
        ],
    )
    .expect("square")
}

fn intro_pair(f: &FieldRef) -> (Matrix, Matrix) {
    let x = Matrix::from_ints(
        f,
        &[
            &[-1, 0, 0, 1, 0, 0],
            &[0, -1, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 1],
            &[1, 0, 0, 1, 0, 0],
            &[0, 1, 0, 0, 1, 0],
            &[0, 0, -1, 0, 0, 0],
        ],
    );
    let y = Matrix::from_ints(
        f,
        &[
            &[0, 0, 1, 1, 1, 1],
            &[1, 0, 0, 1, 1, 1],
            &[0, 1, 0, 1, 1, 1],
            &[0, 0, 0, 0, 0, 1],
            &[0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 1, 0],
        ],
    );
    (x, y)
}

fn su7_4_pair(f: &FieldRef) -> (Matrix, Matrix) {
    let w = f.omega().expect("GF(4) contains a cube root of unity");
    let w2 = f.mul(w, w);
    // Codes: 0, 1, 2 = omega, 3 = omega^2.
    let x_rows: [[u8; 7]; 7] = [
        [0, 1, 0, 0, 0, 0, 0],
        [1, 0, 0, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, 0, 0],
        [0, 0, 0, 1, 1, 0, 2],
        [0, 0, 0, 1, 0, 3, 2],
        [0, 0, 0, 0, 2, 1, 3],
        [0, 0, 0, 3, 3, 2, 0],
    ];
    let x = Matrix::from_fn(f, 7, |i, j| match x_rows[i][j] {
        0 => Elem::ZERO,
        1 => Elem::ONE,
        2 => w,
        _ => w2,
    });
    let y = Matrix::from_ints(
        f,
        &[
            &[1, 0, 0, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0, 0],
            &[0, 1, 0, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 0, 1],
            &[0, 0, 0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 0, 1, 0],
        ],
    );
    (x, y)
}

fn om7_special_pair(f: &FieldRef) -> (Matrix, Matrix) {
    let half = f.inv(lit(f, 2)).expect("odd characteristic");
    let s = f.mul(lit(f, 7), half); // 7/2
    let t = f.neg(half); // -1/2
    let (o, l, m1, seven) = (Elem::ZERO, Elem::ONE, lit(f, -1), lit(f, 7));
    let x = Matrix::from_rows(
        f,
        vec![
            vec![o, o, o, l, o, o, o],
            vec![o, o, o, o, l, o, s],
            vec![o, o, o, o, o, l, t],
            vec![l, o, o, o, o, o, o],
            vec![o, l, o, o, o, o, s],
            vec![o, o, l, o, o, o, t],
            vec![o, o, o, o, o, o, m1],
        ],
    )
    .expect("square");
    let y = Matrix::from_rows(
        f,
        vec![
            vec![l, o, o, o, o, o, o],
            vec![o, l, o, o, o, o, seven],
            vec![o, o, l, l, m1, o, o],
            vec![o, o, o, o, m1, o, o],
            vec![o, o, o, l, m1, o, o],
            vec![o, o, o, o, o, o, m1],
            vec![o, o, o, o, o, l, m1],
        ],
    )
    .expect("square");
    (x, y)
}

/// First irreducibility expression `a^2 - ab + b^2 + 2a + 2b + 4`.
pub fn irr7_expr_i(f: &FieldSpec, a: Elem, b: Elem) -> Elem {
    let mut v = f.mul(a, a);
    v = f.sub(v, f.mul(a, b));
    v = f.add(v, f.mul(b, b));
    v = f.add(v, f.mul(f.from_int(2), f.add(a, b)));
    f.add(v, f.from_int(4))
}

/// Second irreducibility expression `(a+b)^3 - 8(a+b-2)^2 - 8ab`.
pub fn irr7_expr_ii(f: &FieldSpec, a: Elem, b: Elem) -> Elem {
    let s = f.add(a, b);
    let s2 = f.sub(s, f.from_int(2));
    let eight = f.from_int(8);
    let mut v = f.pow(s, 3);
    v = f.sub(v, f.mul(eight, f.mul(s2, s2)));
    f.sub(v, f.mul(eight, f.mul(a, b)))
}

/// One clause of a parameter condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Clause {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionReport {
    pub family: Family,
    pub clauses: Vec<Clause>,
}

impl ConditionReport {
    pub fn all_pass(&self) -> bool {
        self.clauses.iter().all(|c| c.passed)
    }

    pub fn failed(&self) -> impl Iterator<Item = &Clause> {
        self.clauses.iter().filter(|c| !c.passed)
    }
}

/// Evaluates the hypotheses of the theorem attached to `family` at parameter `a`.
/// Fixed pairs have no hypotheses and yield an empty report.
pub fn check_conditions(family: Family, field: &FieldRef, a: Elem) -> ConditionReport {
    let f = &**field;
    let mut clauses = Vec::new();
    let mut push = |name: &str, passed: bool, detail: String| {
        clauses.push(Clause {
            name: name.to_string(),
            passed,
            detail,
        })
    };
    let show = |e: Elem| f.format_elem(e);
    if family.validate_field(f).is_err() {
        push("field", false, format!("GF({}) has the wrong parity", f.order()));
        return ConditionReport { family, clauses };
    }
    match family {
        Family::Sp6Even => {
            push("a nonzero", !a.is_zero(), show(a));
            push(
                "F_p[a] = F_q",
                f.generates_field(a),
                format!("degree {} of {}", f.generated_degree(a), f.degree()),
            );
        }
        Family::Dim7Orth => {
            let excluded = [0, 1, 2, -2].iter().any(|&v| a == f.from_int(v));
            push("(i) a not in {0, 1, 2, -2}", !excluded, show(a));
            let am1 = f.sub(a, Elem::ONE);
            let sq = f.is_square(am1).unwrap_or(false);
            push("(ii) a - 1 nonzero square", sq, show(am1));
            push(
                "(iii) F_p[a] = F_q",
                f.generates_field(a),
                format!("degree {} of {}", f.generated_degree(a), f.degree()),
            );
        }
        Family::Dim7Unit => {
            let b = f.frobenius(a, f.degree() / 2);
            push("a outside F_q", a != b, show(a));
            let e1 = irr7_expr_i(f, a, b);
            push("(i)", !e1.is_zero(), show(e1));
            if f.characteristic() != 2 {
                let e2 = irr7_expr_ii(f, a, b);
                push("(ii)", !e2.is_zero(), show(e2));
            }
            let a7 = f.pow(a, 7);
            push(
                "(iii) F_p[a^7] = F_q^2",
                f.generates_field(a7),
                format!("degree {} of {}", f.generated_degree(a7), f.degree()),
            );
        }
        Family::SL7Variant => {
            let e1 = irr7_expr_i(f, a, Elem::ZERO);
            push("irreducibility (i)", !e1.is_zero(), show(e1));
            let e2 = irr7_expr_ii(f, a, Elem::ZERO);
            push("irreducibility (ii)", !e2.is_zero(), show(e2));
            push(
                "F_p[a] = F_q",
                f.generates_field(a),
                format!("degree {} of {}", f.generated_degree(a), f.degree()),
            );
        }
        _ => {}
    }
    ConditionReport { family, clauses }
}

/// Order in which candidate parameters are tried.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Strategy {
    /// Every element in code order.
    Exhaustive,
    /// Primitive elements in code order, then the rest.
    PrimitiveFirst,
    /// `alpha^2 + 1` for primitive `alpha` in code order.
    AlphaSquaredPlusOne,
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exhaustive" => Ok(Strategy::Exhaustive),
            "primitive-first" => Ok(Strategy::PrimitiveFirst),
            "alpha-squared-plus-one" => Ok(Strategy::AlphaSquaredPlusOne),
            _ => Err(Error::Parse {
                what: "strategy",
                input: s.to_string(),
            }),
        }
    }
}

fn candidates(f: &FieldSpec, strategy: Strategy) -> Vec<Elem> {
    let full = (f.order() - 1) as u64;
    let primitive = |e: Elem| f.element_order(e).ok() == Some(full);
    match strategy {
        Strategy::Exhaustive => f.elements().collect(),
        Strategy::PrimitiveFirst => {
            let (mut first, rest): (Vec<Elem>, Vec<Elem>) = f.nonzero_elements().partition(|&e| primitive(e));
            first.extend(rest);
            first.push(Elem::ZERO);
            first
        }
        Strategy::AlphaSquaredPlusOne => f
            .nonzero_elements()
            .filter(|&e| primitive(e))
            .map(|e| f.add(f.mul(e, e), Elem::ONE))
            .collect(),
    }
}

/// First parameter (in the strategy's order) passing [`check_conditions`], or `None`.
pub fn search_parameter(family: Family, field: &FieldRef, strategy: Strategy) -> Result<Option<Elem>> {
    family.validate_field(field)?;
    if !family.is_parametric() {
        return Err(Error::Precondition(format!("family {family} has no parameter")));
    }
    Ok(candidates(field, strategy)
        .into_iter()
        .find(|&a| check_conditions(family, field, a).all_pass()))
}

/// Which irreducibility clause a witness refutes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum WitnessKind {
    /// Clause (i): a common eigenvector.
    EigenLine,
    /// Clause (ii) in characteristic 2.
    Char2,
    /// Clause (ii) with `a = b = 2`.
    TwoTwo,
    /// Clause (ii), remaining cases.
    General,
}

impl WitnessKind {
    /// Number of spanning vectors in the construction, hence the generic dimension.
    pub fn expected_dimension(self) -> usize {
        match self {
            WitnessKind::EigenLine => 1,
            WitnessKind::Char2 => 6,
            WitnessKind::TwoTwo => 4,
            WitnessKind::General => 2,
        }
    }
}

#[derive(Clone, Debug)]
pub struct WitnessReport {
    pub kind: WitnessKind,
    /// Field the witness lives over (an extension when a cube root of unity was needed).
    pub field: FieldRef,
    /// The spanning vectors of the construction.
    pub vectors: Vec<Vector>,
    pub subspace: Subspace,
    pub dimension: usize,
    pub invariant: bool,
}

impl WitnessReport {
    /// The span is a proper nonzero invariant subspace.
    pub fn verified(&self) -> bool {
        self.invariant && self.dimension > 0 && self.dimension < 7
    }

    /// The spanning vectors are linearly independent.
    pub fn has_expected_dimension(&self) -> bool {
        self.dimension == self.kind.expected_dimension()
    }
}

/// Builds the explicit invariant subspace for a pair `(a, b)` violating irreducibility
/// clause (i) or (ii). Clause (i) takes priority when both fail.
pub fn reducibility_witness(field: &FieldRef, a: Elem, b: Elem) -> Result<WitnessReport> {
    let f = &**field;
    if irr7_expr_i(f, a, b).is_zero() {
        return eigenline_witness(field, a, b);
    }
    if !irr7_expr_ii(f, a, b).is_zero() {
        return Err(Error::Precondition(
            "parameters satisfy both irreducibility clauses".into(),
        ));
    }
    let (x, y) = gen7(field, a, b);
    let k = |v: i64| f.from_int(v);
    let two = k(2);
    let (kind, w) = if f.characteristic() == 2 {
        (WitnessKind::Char2, vec![Elem::ONE, Elem::ONE, Elem::ONE, Elem::ONE, Elem::ONE, Elem::ONE, Elem::ZERO])
    } else if a == two && b == two {
        (WitnessKind::TwoTwo, vec![Elem::ONE, Elem::ONE, two, two, Elem::ONE, Elem::ONE, Elem::ZERO])
    } else {
        let s = f.add(a, b);
        let mut n1 = f.mul(s, s);
        n1 = f.sub(n1, f.mul(k(6), a));
        n1 = f.sub(n1, f.mul(k(10), b));
        n1 = f.add(n1, k(16));
        let x1 = f.neg(f.div(n1, two)?);
        let x2 = f.sub(f.mul(two, b), k(4));
        let x3 = f.sub(s, k(4));
        (WitnessKind::General, vec![x1, x1, x2, x2, x3, x3, Elem::ZERO])
    };
    let xy = x.mul(&y);
    let vectors = match kind {
        WitnessKind::Char2 => {
            let xyw = xy.mul_vec(&w);
            let xy2w = xy.mul_vec(&xyw);
            vec![w.clone(), y.mul_vec(&w), xyw.clone(), y.mul_vec(&xyw), xy2w.clone(), y.mul_vec(&xy2w)]
        }
        WitnessKind::TwoTwo => {
            let xyw = xy.mul_vec(&w);
            vec![w.clone(), y.mul_vec(&w), xyw.clone(), y.mul_vec(&xyw)]
        }
        _ => vec![w.clone(), y.mul_vec(&w)],
    };
    Ok(finish_witness(field, kind, &[x, y], vectors))
}

fn eigenline_witness(field: &FieldRef, a: Elem, b: Elem) -> Result<WitnessReport> {
    let emb = omega_extension(field)?;
    let e = emb.target.clone();
    let (a, b) = (emb.map(a), emb.map(b));
    let w = e.omega().expect("extension contains a cube root of unity");
    let two = e.from_int(2);
    let j = [1u64, 2]
        .into_iter()
        .find(|&j| {
            let wj = e.pow(w, j);
            let rhs = e.add(e.neg(e.mul(wj, a)), e.mul(two, e.pow(wj, 2)));
            rhs == b
        })
        .ok_or_else(|| Error::Precondition("clause (i) holds but no cube root matches".into()))?;
    let wj = e.pow(w, j);
    let w2j = e.pow(w, 2 * j);
    let m1 = e.from_int(-1);
    let v = vec![e.add(a, w2j), e.neg(w2j), Elem::ONE, m1, wj, w2j, m1];
    let (x, y) = gen7(&e, a, b);
    Ok(finish_witness(&e, WitnessKind::EigenLine, &[x, y], vec![v]))
}

fn finish_witness(field: &FieldRef, kind: WitnessKind, gens: &[Matrix], vectors: Vec<Vector>) -> WitnessReport {
    let subspace = Subspace::spanned_by(field, 7, &vectors);
    let invariant = is_invariant(gens, &subspace);
    debug_assert!(!invariant || submodule_closure(gens, &vectors).map(|s| s.dim()).ok() == Some(subspace.dim()));
    WitnessReport {
        kind,
        field: field.clone(),
        dimension: subspace.dim(),
        vectors,
        subspace,
        invariant,
    }
}
