//! Per-family verification pipelines producing serializable certificates.

use std::time::{Instant, SystemTime, UNIX_EPOCH};

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::spanning_dimension;
use crate::error::{Error, Result};
use crate::field::{Elem, FieldRef, FieldSpec};
use crate::forms::{self, FormKind, Sigma};
use crate::generators::{self, check_conditions, Family, GeneratorPair};
use crate::groupcalc::{self, BsgsOptions, ChainStats, GroupOrder};
use crate::matrix::{BoundedOrder, Matrix};
use crate::poly::Poly;
use crate::sweep;

pub const DEFAULT_SEED: u64 = 7;
pub const DIAGONAL_POWER_CAP: u64 = 32;
/// Largest element order in PSU3(3).
const PSU3_3_MAX_ORDER: u64 = 12;
pub const DISCRIMINANT_CONVENTION: &str = "disc(f) = (-1)^(d(d-1)/2) Res(f, f') / lc(f)";
pub const NOT_DESK_VERIFIABLE: &str = "generation: not desk-verifiable, property suite only";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

impl Verdict {
    fn from_bool(ok: bool) -> Verdict {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Skipped => "SKIP",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub verdict: Verdict,
    pub details: Value,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderRecord {
    pub computed: Option<String>,
    pub expected: String,
    pub formula: String,
    pub center: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timestamp {
    pub unix_seconds: u64,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub family: String,
    pub q: u64,
    pub p: u32,
    pub n: u32,
    pub modulus: Vec<u32>,
    pub a: Option<String>,
    pub b: Option<String>,
    pub checks: Vec<Check>,
    pub order: OrderRecord,
    pub seed: u64,
    pub version: String,
    pub overall: Verdict,
    pub stats: Option<ChainStats>,
    pub timestamp: Timestamp,
}

impl Certificate {
    pub fn passed(&self) -> bool {
        self.overall == Verdict::Pass
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.verdict == Verdict::Fail)
    }

    /// JSON with the timestamp removed; equal inputs and seed give equal values.
    pub fn deterministic_json(&self) -> Value {
        let mut v = serde_json::to_value(self).expect("serializable");
        v.as_object_mut().expect("object").remove("timestamp");
        v
    }

    /// One line per check, then the order and the overall verdict.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "CERTIFICATE {} over GF({}){}\n",
            self.family,
            self.p.pow(self.n),
            self.a.as_ref().map(|a| format!(" a={a}")).unwrap_or_default()
        ));
        for c in &self.checks {
            out.push_str(&format!("CHECK {}: {} {}\n", c.name, c.verdict.label(), compact(&c.details)));
        }
        out.push_str(&format!(
            "ORDER computed={} expected={} ({})\n",
            self.order.computed.as_deref().unwrap_or("-"),
            self.order.expected,
            self.order.formula
        ));
        out.push_str(&format!("OVERALL {}\n", self.overall.label()));
        out
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

#[derive(Clone, Copy, Debug)]
pub struct CertifyOptions {
    pub seed: u64,
    pub bsgs: BsgsOptions,
    /// Run every check instead of stopping at the first failure.
    pub keep_going: bool,
    /// Attempt the BSGS order computation.
    pub generation: bool,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            seed: DEFAULT_SEED,
            bsgs: BsgsOptions::default(),
            keep_going: false,
            generation: true,
        }
    }
}

struct Outcome {
    verdict: Verdict,
    details: Value,
}

impl Outcome {
    fn check(ok: bool, details: Value) -> Result<Outcome> {
        Ok(Outcome {
            verdict: Verdict::from_bool(ok),
            details,
        })
    }
}

struct Pipeline<'a> {
    pair: &'a GeneratorPair,
    opts: &'a CertifyOptions,
    checks: Vec<Check>,
    halted: bool,
    computed: Option<BigUint>,
    center: Option<u64>,
    stats: Option<ChainStats>,
}

impl<'a> Pipeline<'a> {
    fn new(pair: &'a GeneratorPair, opts: &'a CertifyOptions) -> Self {
        Pipeline {
            pair,
            opts,
            checks: Vec::new(),
            halted: false,
            computed: None,
            center: None,
            stats: None,
        }
    }

    fn run(&mut self, name: &str, f: impl FnOnce(&GeneratorPair) -> Result<Outcome>) {
        if self.halted {
            return;
        }
        let out = f(self.pair).unwrap_or_else(|e| Outcome {
            verdict: Verdict::Fail,
            details: json!({ "error": e.to_string() }),
        });
        if out.verdict == Verdict::Fail && !self.opts.keep_going {
            self.halted = true;
        }
        self.checks.push(Check {
            name: name.to_string(),
            verdict: out.verdict,
            details: out.details,
        });
    }

    /// BSGS order of the pair compared with `accepted`.
    fn generation(&mut self, accepted: &[BigUint]) {
        if self.halted {
            return;
        }
        let outcome = if !self.opts.generation {
            Outcome {
                verdict: Verdict::Skipped,
                details: json!("disabled"),
            }
        } else {
            match groupcalc::bsgs(&self.pair.gens(), self.opts.seed, &self.opts.bsgs) {
                Ok(mut chain) => {
                    let order = chain.order();
                    let center = groupcalc::center_order(&mut chain);
                    self.stats = Some(chain.stats());
                    let ok = accepted.contains(&order);
                    let details = json!({
                        "computed": order.to_string(),
                        "accepted": accepted.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                        "center": center,
                    });
                    self.computed = Some(order);
                    self.center = Some(center);
                    Outcome {
                        verdict: Verdict::from_bool(ok),
                        details,
                    }
                }
                Err(Error::BudgetExceeded { points, budget }) => Outcome {
                    verdict: Verdict::Skipped,
                    details: json!({ "reason": NOT_DESK_VERIFIABLE, "points": points, "budget": budget }),
                },
                Err(e) => Outcome {
                    verdict: Verdict::Fail,
                    details: json!({ "error": e.to_string() }),
                },
            }
        };
        self.run("generation", |_| Ok(outcome));
    }

    fn skip(&mut self, name: &str, reason: &str) {
        self.run(name, |_| {
            Ok(Outcome {
                verdict: Verdict::Skipped,
                details: json!(reason),
            })
        });
    }

    fn finish(self, expected: GroupOrder, started: Instant) -> Certificate {
        let pair = self.pair;
        let f = &pair.field;
        let show = |e: Elem| f.format_elem(e);
        let (a, b) = if pair.family.is_parametric() {
            (Some(show(pair.a)), Some(show(pair.b)))
        } else {
            (None, None)
        };
        let failed = self.halted || self.checks.iter().any(|c| c.verdict == Verdict::Fail);
        Certificate {
            family: pair.family.name().to_string(),
            q: pair.family.group_q(f),
            p: f.characteristic(),
            n: f.degree(),
            modulus: f.modulus().to_vec(),
            a,
            b,
            checks: self.checks,
            order: OrderRecord {
                computed: self.computed.map(|v| v.to_string()),
                expected: expected.value.to_string(),
                formula: expected.formula,
                center: self.center,
            },
            seed: self.opts.seed,
            version: env!("CARGO_PKG_VERSION").to_string(),
            overall: Verdict::from_bool(!failed),
            stats: self.stats,
            timestamp: Timestamp {
                unix_seconds: SystemTime::now()
                    .duration_since(UNIX_EPOCH)
                    .map(|d| d.as_secs())
                    .unwrap_or(0),
                elapsed_ms: started.elapsed().as_millis() as u64,
            },
        }
    }
}

fn mat(m: &Matrix) -> Value {
    json!(m.to_strings())
}

fn polys(ps: &[Poly]) -> Value {
    json!(ps.iter().map(Poly::to_strings).collect::<Vec<_>>())
}

/// Least `k <= cap` with `(xy)^k` diagonal.
pub fn min_diagonal_power(x: &Matrix, y: &Matrix, cap: u64) -> Option<u64> {
    let z = x.mul(y);
    let mut p = z.clone();
    for k in 1..=cap {
        if p.is_diagonal() {
            return Some(k);
        }
        p = p.mul(&z);
    }
    None
}

/// The element `(xy^2xy)^2 (xy^2)^3`.
pub fn su7_4_test_element(x: &Matrix, y: &Matrix) -> Matrix {
    let y2 = y.mul(y);
    let xy2 = x.mul(&y2);
    xy2.mul(&x.mul(y)).pow(2).mul(&xy2.pow(3))
}

// ---- individual checks ----

fn conditions(pair: &GeneratorPair) -> Result<Outcome> {
    let report = check_conditions(pair.family, &pair.field, pair.a);
    Outcome::check(report.all_pass(), json!(report.clauses))
}

fn orders(pair: &GeneratorPair) -> Result<Outcome> {
    let x2 = pair.x.pow(2).is_identity();
    let y3 = pair.y.pow(3).is_identity();
    Outcome::check(x2 && y3, json!({ "x^2 = I": x2, "y^3 = I": y3 }))
}

fn projective_orders(pair: &GeneratorPair) -> Result<Outcome> {
    let x2 = pair.x.pow(2);
    let minus = Matrix::scalar(&pair.field, x2.n(), pair.field.from_int(-1));
    let sign = if x2.is_identity() {
        Some("I")
    } else if x2 == minus {
        Some("-I")
    } else {
        None
    };
    let y3 = pair.y.pow(3).is_identity();
    Outcome::check(sign.is_some() && y3, json!({ "x^2": sign, "y^3 = I": y3 }))
}

fn determinants(pair: &GeneratorPair) -> Result<Outcome> {
    let f = &pair.field;
    let (dx, dy) = (pair.x.det(), pair.y.det());
    Outcome::check(
        dx == Elem::ONE && dy == Elem::ONE,
        json!({ "det x": f.format_elem(dx), "det y": f.format_elem(dy) }),
    )
}

fn invariant_factors(pair: &GeneratorPair, expected: (Vec<Poly>, Vec<Poly>)) -> Result<Outcome> {
    let got = (pair.x.invariant_factors(), pair.y.invariant_factors());
    Outcome::check(
        got == expected,
        json!({ "x": polys(&got.0), "y": polys(&got.1) }),
    )
}

fn char_poly(m: &Matrix, expected: &Poly) -> Result<Outcome> {
    let got = m.char_poly();
    Outcome::check(
        got == *expected,
        json!({ "computed": got.to_strings(), "expected": expected.to_strings() }),
    )
}

fn min_equals_char(m: &Matrix) -> Result<Outcome> {
    let (mp, cp) = (m.min_poly(), m.char_poly());
    Outcome::check(mp == cp, json!({ "min_poly": mp.to_strings() }))
}

fn spanning(pair: &GeneratorPair) -> Result<Outcome> {
    let n = pair.x.n();
    let d = spanning_dimension(&pair.gens())?;
    Outcome::check(d == n * n, json!({ "dimension": d, "expected": n * n }))
}

/// The invariant-form space is one-dimensional, of the given kind and nondegenerate.
fn unique_form(pair: &GeneratorPair, sigma: Sigma, kind: FormKind) -> Result<Outcome> {
    let sol = forms::invariant_forms(&pair.gens(), sigma)?;
    let ok = sol.dimension() == 1 && sol.kinds[0] == kind && sol.nondegenerate[0];
    Outcome::check(
        ok,
        json!({
            "dimension": sol.dimension(),
            "kinds": sol.kinds,
            "nondegenerate": sol.nondegenerate,
            "forms": sol.basis.iter().map(mat).collect::<Vec<_>>(),
        }),
    )
}

fn preserved(pair: &GeneratorPair, gram: &Matrix, sigma: Sigma) -> Result<Outcome> {
    let ok = forms::preserves(&pair.gens(), gram, sigma);
    Outcome::check(ok, json!({ "gram": mat(gram) }))
}

fn min_diagonal(pair: &GeneratorPair) -> Result<Outcome> {
    let k = min_diagonal_power(&pair.x, &pair.y, DIAGONAL_POWER_CAP);
    Outcome::check(
        k.is_none_or(|k| k >= 13),
        json!({ "least_k": k, "cap": DIAGONAL_POWER_CAP }),
    )
}

fn projective_order_xy(pair: &GeneratorPair) -> Result<Outcome> {
    let order = pair.z().projective_order(crate::matrix::DEFAULT_ORDER_CAP)?;
    let (ok, shown) = match order {
        BoundedOrder::Finite(k) => (k > PSU3_3_MAX_ORDER, json!(k)),
        BoundedOrder::Unknown(cap) => (true, json!(format!("> {cap}"))),
    };
    Outcome::check(ok, json!({ "projective_order": shown, "must_exceed": PSU3_3_MAX_ORDER }))
}

/// `f_j`, the coefficient of `t^j`.
fn coeffs(p: &Poly, js: &[usize]) -> Vec<Elem> {
    js.iter().map(|&j| p.coeff(j)).collect()
}

fn sp6_g2(pair: &GeneratorPair) -> Result<Outcome> {
    let f = &pair.field;
    let chi = pair.z().char_poly();
    let disc = chi.discriminant()?;
    let c = coeffs(&chi, &[1, 3]);
    let violated = c[1] != f.mul(c[0], c[0]);
    Outcome::check(
        violated && !disc.is_zero(),
        json!({
            "char_poly": chi.to_strings(),
            "discriminant": f.format_elem(disc),
            "f1": f.format_elem(c[0]),
            "f3": f.format_elem(c[1]),
            "relation": "f3 = f1^2",
        }),
    )
}

fn orth_g2_torus(pair: &GeneratorPair) -> Result<Outcome> {
    let f = &pair.field;
    let z = pair.z();
    let w = pair.x.commutator(&pair.y)?;
    let candidates = [
        ("xy", z.clone()),
        ("[x,y]", w.clone()),
        ("[x,y] xy", w.mul(&z)),
        ("[x,y] (xy)^2", w.mul(&z.pow(2))),
    ];
    let mut tried = Vec::new();
    for (name, s) in candidates {
        let chi = s.char_poly();
        let disc = chi.discriminant()?;
        let c = coeffs(&chi, &[1, 2, 3]);
        let rel = f.add(f.add(c[0], f.mul(c[0], c[0])), c[1]);
        let violated = c[2] != rel;
        let entry = json!({
            "element": name,
            "char_poly": chi.to_strings(),
            "discriminant_nonzero": !disc.is_zero(),
            "relation_violated": violated,
        });
        if violated && !disc.is_zero() {
            return Outcome::check(true, json!({ "relation": "f3 = f1 + f1^2 + f2", "witness": entry }));
        }
        tried.push(entry);
    }
    Outcome::check(false, json!({ "relation": "f3 = f1 + f1^2 + f2", "tried": tried }))
}

fn orth_discriminants(pair: &GeneratorPair) -> Result<Outcome> {
    let f = &pair.field;
    let a = pair.a;
    let d1 = sweep::gen7_char_poly(f, a, a).discriminant()?;
    let d2 = sweep::orth_commutator_char_poly(f, a).discriminant()?;
    let e1 = sweep::orth_char_disc(f, a);
    let e2 = sweep::orth_commutator_disc(f, a);
    Outcome::check(
        d1 == e1 && d2 == e2,
        json!({
            "convention": DISCRIMINANT_CONVENTION,
            "xy": { "computed": f.format_elem(d1), "expected": f.format_elem(e1) },
            "[x,y]": { "computed": f.format_elem(d2), "expected": f.format_elem(e2) },
        }),
    )
}

fn orth_wall(pair: &GeneratorPair) -> Result<Outcome> {
    let f = &pair.field;
    let b = generators::orthogonal_gram(f, pair.a);
    let w = forms::wall_form_in_basis(&pair.x, &b, &forms::orthogonal_wall_basis(f, pair.a))?;
    let closed = forms::orthogonal_wall_gram(f, pair.a);
    let expected_det = sweep::orth_wall_det(f, pair.a);
    Outcome::check(
        w.gram == closed && w.det == expected_det,
        json!({
            "gram": mat(&w.gram),
            "det": f.format_elem(w.det),
            "expected_det": f.format_elem(expected_det),
        }),
    )
}

fn spinor(pair: &GeneratorPair, b: &Matrix) -> Result<Outcome> {
    let w = forms::wall_form(&pair.x, b)?;
    let square = forms::spinor_norm_in_omega(&pair.x, b)?;
    Outcome::check(
        square,
        json!({ "wall_det": pair.field.format_elem(w.det), "square": square, "wall_gram": mat(&w.gram) }),
    )
}

fn orth_commutator_power(pair: &GeneratorPair) -> Result<Outcome> {
    let f = &pair.field;
    let d = pair.x.commutator(&pair.y)?.pow(7);
    let entry = d.get(6, 0);
    let expected = sweep::orth_d71(f, pair.a);
    Outcome::check(
        !d.is_identity() && entry == expected,
        json!({
            "[x,y]^7 = I": d.is_identity(),
            "entry_7_1": f.format_elem(entry),
            "expected": f.format_elem(expected),
        }),
    )
}

fn expected_order(pair: &GeneratorPair) -> Result<GroupOrder> {
    groupcalc::classical_order(pair.family, pair.family.group_q(&pair.field))
}

// ---- pipelines ----

/// Runs the family's pipeline on `pair` as given, without re-checking preconditions.
pub fn certify_pair(pair: &GeneratorPair, opts: &CertifyOptions) -> Result<Certificate> {
    let started = Instant::now();
    let expected = expected_order(pair)?;
    let mut p = Pipeline::new(pair, opts);
    let f = pair.field.clone();
    let full = [expected.value.clone()];
    match pair.family {
        Family::Sp6Even => {
            p.run("orders", orders);
            p.run("determinant", determinants);
            p.run("symplectic_form", |g| preserved(g, &generators::sp6_gram(&f, g.a), Sigma::Identity));
            p.run("invariant_factors", |g| invariant_factors(g, sweep::sp6_invariant_factors(&f)));
            p.run("char_poly", |g| char_poly(&g.z(), &sweep::sp6_char_poly(&f, g.a)));
            p.run("min_poly", |g| min_equals_char(&g.z()));
            p.run("field_generation", conditions);
            p.run("spanning_dimension", spanning);
            p.run("quadratic_form", |g| {
                let j = generators::sp6_gram(&f, g.a);
                let sol = forms::invariant_quadratic_char2(&g.gens(), Some(&j))?;
                Outcome::check(sol.dimension == 0, json!({ "dimension": sol.dimension }))
            });
            p.run("g2_coefficients", sp6_g2);
            p.generation(&full);
        }
        Family::Dim7Unit => {
            p.run("conditions", conditions);
            p.run("orders", orders);
            p.run("determinant", determinants);
            p.run("invariant_factors", |g| invariant_factors(g, sweep::gen7_invariant_factors(&f)));
            p.run("char_poly", |g| char_poly(&g.z(), &sweep::gen7_char_poly(&f, g.a, g.b)));
            p.run("min_poly", |g| min_equals_char(&g.z()));
            p.run("spanning_dimension", spanning);
            p.run("hermitian_form", |g| unique_form(g, Sigma::unitary(&f), FormKind::Hermitian));
            p.run("diagonal_power", min_diagonal);
            p.run("projective_order", projective_order_xy);
            p.generation(&full);
        }
        Family::Dim7Orth => {
            p.run("conditions", conditions);
            p.run("orders", orders);
            p.run("determinant", determinants);
            p.run("invariant_factors", |g| invariant_factors(g, sweep::gen7_invariant_factors(&f)));
            p.run("char_poly", |g| char_poly(&g.z(), &sweep::gen7_char_poly(&f, g.a, g.a)));
            p.run("min_poly", |g| min_equals_char(&g.z()));
            p.run("commutator_char_poly", |g| {
                char_poly(&g.x.commutator(&g.y)?, &sweep::orth_commutator_char_poly(&f, g.a))
            });
            p.run("discriminants", orth_discriminants);
            p.run("spanning_dimension", spanning);
            p.run("orthogonal_form", |g| unique_form(g, Sigma::Identity, FormKind::Symmetric));
            p.run("wall_form", orth_wall);
            p.run("spinor_norm", |g| spinor(g, &generators::orthogonal_gram(&f, g.a)));
            p.run("commutator_power", orth_commutator_power);
            p.run("g2_torus", orth_g2_torus);
            p.run("diagonal_power", min_diagonal);
            p.run("projective_order", projective_order_xy);
            p.generation(&full);
        }
        Family::SL7Variant => {
            p.run("conditions", conditions);
            p.run("orders", orders);
            p.run("determinant", determinants);
            p.run("invariant_factors", |g| invariant_factors(g, sweep::gen7_invariant_factors(&f)));
            p.run("char_poly", |g| char_poly(&g.z(), &sweep::gen7_char_poly(&f, g.a, Elem::ZERO)));
            p.run("min_poly", |g| min_equals_char(&g.z()));
            p.run("spanning_dimension", spanning);
            p.run("diagonal_power", min_diagonal);
            p.skip("generation", NOT_DESK_VERIFIABLE);
        }
        Family::Sp6_3Intro => {
            p.run("orders", projective_orders);
            p.run("determinant", determinants);
            p.run("spanning_dimension", spanning);
            p.run("symplectic_form", |g| unique_form(g, Sigma::Identity, FormKind::Alternating));
            let half = &expected.value / BigUint::from(2u32);
            p.generation(&[expected.value.clone(), half]);
        }
        Family::SU7_4Special => {
            p.run("orders", orders);
            p.run("determinant", determinants);
            p.run("unitary_form", |g| {
                let id = Matrix::identity(&f, 7);
                let ok = forms::preserves(&g.gens(), &id, Sigma::unitary(&f));
                Outcome::check(ok, json!({ "gram": mat(&id) }))
            });
            p.run("hermitian_form", |g| unique_form(g, Sigma::unitary(&f), FormKind::Hermitian));
            p.run("element_order_43", |g| {
                let order = su7_4_test_element(&g.x, &g.y).element_order(crate::matrix::DEFAULT_ORDER_CAP)?;
                Outcome::check(order == BoundedOrder::Finite(43), json!({ "order": order.finite() }))
            });
            p.run("spanning_dimension", spanning);
            p.generation(&full);
        }
        Family::Om7_3Special | Family::Om7_5Special => {
            p.run("orders", orders);
            p.run("determinant", determinants);
            p.run("spanning_dimension", spanning);
            p.run("orthogonal_form", |g| unique_form(g, Sigma::Identity, FormKind::Symmetric));
            p.run("spinor_norm", |g| {
                let sol = forms::invariant_forms(&g.gens(), Sigma::Identity)?;
                let b = sol
                    .basis
                    .first()
                    .ok_or_else(|| Error::Precondition("no invariant form".into()))?;
                spinor(g, b)
            });
            p.generation(&full);
        }
    }
    Ok(p.finish(expected, started))
}

pub fn certify_sp6(field: &FieldRef, a: Elem, opts: &CertifyOptions) -> Result<Certificate> {
    let pair = generators::build(Family::Sp6Even, Some(field), Some(a))?;
    certify_pair(&pair, opts)
}

pub fn certify_u7(field: &FieldRef, a: Elem, opts: &CertifyOptions) -> Result<Certificate> {
    Family::Dim7Unit.validate_field(field)?;
    if field.in_subfield(a, field.degree() / 2) {
        return Err(Error::Precondition(format!(
            "a = {} must lie outside the subfield of order {}",
            field.format_elem(a),
            Family::Dim7Unit.group_q(field)
        )));
    }
    let pair = generators::build(Family::Dim7Unit, Some(field), Some(a))?;
    certify_pair(&pair, opts)
}

pub fn certify_o7(field: &FieldRef, a: Elem, opts: &CertifyOptions) -> Result<Certificate> {
    let pair = generators::build(Family::Dim7Orth, Some(field), Some(a))?;
    certify_pair(&pair, opts)
}

pub fn certify_sl7(field: &FieldRef, a: Elem, opts: &CertifyOptions) -> Result<Certificate> {
    let pair = generators::build(Family::SL7Variant, Some(field), Some(a))?;
    certify_pair(&pair, opts)
}

/// Certifies one of the fixed pairs over its own field.
pub fn certify_special(family: Family, opts: &CertifyOptions) -> Result<Certificate> {
    if family.is_parametric() {
        return Err(Error::Precondition(format!("family {family} is not a fixed pair")));
    }
    let pair = generators::build(family, None, None)?;
    certify_pair(&pair, opts)
}

/// Dispatches on `family`; fixed pairs ignore `a` and default to their own field.
pub fn certify(family: Family, field: Option<&FieldRef>, a: Option<Elem>, opts: &CertifyOptions) -> Result<Certificate> {
    if !family.is_parametric() {
        if let Some(f) = field {
            family.validate_field(f)?;
        }
        return certify_special(family, opts);
    }
    let field = field.ok_or_else(|| Error::Precondition(format!("family {family} needs a field")))?;
    family.validate_field(field)?;
    let a = a.ok_or_else(|| Error::Precondition(format!("family {family} needs a parameter a")))?;
    match family {
        Family::Sp6Even => certify_sp6(field, a, opts),
        Family::Dim7Unit => certify_u7(field, a, opts),
        Family::Dim7Orth => certify_o7(field, a, opts),
        _ => certify_sl7(field, a, opts),
    }
}

/// Field for a family given the order of the target group's `q`.
pub fn field_for(family: Family, q: u64) -> Result<FieldRef> {
    match family {
        Family::Dim7Unit | Family::SU7_4Special => FieldSpec::with_order(q * q),
        _ => FieldSpec::with_order(q),
    }
}
