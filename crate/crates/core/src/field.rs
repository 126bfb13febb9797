//! Finite fields GF(p^n) with an explicit defining modulus.
//!
//! An element is stored as a [`Elem`] code: the integer `c0 + c1 p + ... + c_{n-1} p^{n-1}`
//! built from the coefficients of its residue-class representative. The code order is the
//! canonical enumeration order used by every parameter search in the crate.
//!
//! Multiplication goes through log/exp tables built once per field, so a [`FieldSpec`] is
//! expensive to build and cheap to share: hand it around as a [`FieldRef`].

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::Poly;

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 16;

const ADD_TABLE_LIMIT: u32 = 1024;

/// Element of a finite field, as a code relative to its [`FieldSpec`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(pub(crate) u16);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    #[inline]
    pub fn code(self) -> u32 {
        self.0 as u32
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

pub type FieldRef = Arc<FieldSpec>;

#[derive(Debug)]
enum Adder {
    Prime,
    Binary,
    Table(Vec<u16>),
    Digits,
}

/// GF(p^n) = GF(p)[t]/(modulus).
pub struct FieldSpec {
    p: u32,
    n: u32,
    q: u32,
    modulus: Vec<u32>,
    exp: Vec<u16>,
    log: Vec<u32>,
    neg: Vec<u16>,
    adder: Adder,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}/", self.p, self.n)?;
        let coeffs: Vec<String> = self.modulus.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", coeffs.join(","))
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.modulus == other.modulus
    }
}

impl Eq for FieldSpec {}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Returns `(p, n)` with `q = p^n`, or `None` when `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut n = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        n += 1;
    }
    (rest == 1).then_some((p as u32, n))
}

pub(crate) fn prime_factors(mut m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            out.push(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl FieldSpec {
    /// The prime field GF(p), with modulus `t`.
    pub fn prime(p: u32) -> Result<FieldRef> {
        Self::new(p, vec![0, 1])
    }

    /// GF(p^n) defined by `modulus` (ascending coefficients, monic, irreducible over GF(p)).
    pub fn new(p: u32, modulus: Vec<u32>) -> Result<FieldRef> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if modulus.len() < 2 {
            return Err(Error::InvalidModulus("degree must be at least 1".into()));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidModulus(format!("coefficients must be reduced mod {p}")));
        }
        if *modulus.last().unwrap() != 1 {
            return Err(Error::InvalidModulus("modulus must be monic".into()));
        }
        let n = (modulus.len() - 1) as u32;
        let q = (p as u64).checked_pow(n).filter(|&q| q <= MAX_ORDER);
        let q = match q {
            Some(q) => q as u32,
            None => return Err(Error::FieldTooLarge((p as u64).saturating_pow(n))),
        };
        if n > 1 {
            let fp = Self::prime(p)?;
            let f = Poly::from_codes(&fp, &modulus);
            if !f.is_irreducible() {
                return Err(Error::InvalidModulus(format!(
                    "{} is reducible over GF({p})",
                    f
                )));
            }
        }
        let adder = if n == 1 {
            Adder::Prime
        } else if p == 2 {
            Adder::Binary
        } else if q <= ADD_TABLE_LIMIT {
            Adder::Table(Vec::new())
        } else {
            Adder::Digits
        };
        let mut spec = FieldSpec {
            p,
            n,
            q,
            modulus,
            exp: Vec::new(),
            log: Vec::new(),
            neg: Vec::new(),
            adder,
        };
        spec.build_tables();
        Ok(Arc::new(spec))
    }

    /// GF(p^n) with the default modulus: the irreducible monic polynomial of degree `n`
    /// whose lower coefficients have the least code.
    pub fn default_modulus(p: u32, n: u32) -> Result<FieldRef> {
        if n == 1 {
            return Self::prime(p);
        }
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        let q = (p as u64).checked_pow(n).filter(|&q| q <= MAX_ORDER);
        let q = q.ok_or(Error::FieldTooLarge((p as u64).saturating_pow(n)))?;
        let fp = Self::prime(p)?;
        for code in 0..q {
            let mut coeffs = digits(code as u32, p, n as usize);
            coeffs.push(1);
            if coeffs[0] == 0 {
                continue;
            }
            if Poly::from_codes(&fp, &coeffs).is_irreducible() {
                return Self::new(p, coeffs);
            }
        }
        unreachable!("an irreducible polynomial of every degree exists")
    }

    /// GF(q) with the default modulus.
    pub fn with_order(q: u64) -> Result<FieldRef> {
        let (p, n) = prime_power(q).ok_or(Error::Parse {
            what: "prime power",
            input: q.to_string(),
        })?;
        Self::default_modulus(p, n)
    }

    /// Parses `"p^n/c0,c1,...,1"`, `"p^n"` or a bare prime power `"q"`.
    pub fn parse(s: &str) -> Result<FieldRef> {
        let bad = || Error::Parse {
            what: "field specification",
            input: s.to_string(),
        };
        let s = s.trim();
        let (head, tail) = match s.split_once('/') {
            Some((h, t)) => (h, Some(t)),
            None => (s, None),
        };
        let (p, n) = match head.split_once('^') {
            Some((p, n)) => (
                p.trim().parse::<u32>().map_err(|_| bad())?,
                n.trim().parse::<u32>().map_err(|_| bad())?,
            ),
            None => {
                let q = head.parse::<u64>().map_err(|_| bad())?;
                prime_power(q).ok_or_else(bad)?
            }
        };
        match tail {
            None => Self::default_modulus(p, n),
            Some(t) => {
                let coeffs = t
                    .split(',')
                    .map(|c| parse_signed_mod(c, p))
                    .collect::<Option<Vec<u32>>>()
                    .ok_or_else(bad)?;
                if coeffs.len() != n as usize + 1 {
                    return Err(Error::InvalidModulus(format!(
                        "expected {} coefficients, got {}",
                        n + 1,
                        coeffs.len()
                    )));
                }
                Self::new(p, coeffs)
            }
        }
    }

    fn build_tables(&mut self) {
        let q = self.q;
        if let Adder::Table(ref mut table) = self.adder {
            let (p, n) = (self.p, self.n as usize);
            let mut t = vec![0u16; (q * q) as usize];
            for a in 0..q {
                let da = digits(a, p, n);
                for b in 0..q {
                    let db = digits(b, p, n);
                    let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                    t[(a * q + b) as usize] = undigits(&sum, p) as u16;
                }
            }
            *table = t;
        }
        self.neg = (0..q)
            .map(|a| {
                let d: Vec<u32> = digits(a, self.p, self.n as usize)
                    .iter()
                    .map(|&c| (self.p - c) % self.p)
                    .collect();
                undigits(&d, self.p) as u16
            })
            .collect();
        // Search for a primitive element using schoolbook multiplication.
        let order = q - 1;
        let start = if q == 2 { 1 } else { 2 };
        for g in start..q {
            let mut exp = Vec::with_capacity(order as usize);
            let mut cur = 1u32;
            let mut ok = true;
            for k in 0..order {
                if k > 0 && cur == 1 {
                    ok = false;
                    break;
                }
                exp.push(cur as u16);
                cur = self.slow_mul(cur, g);
            }
            if ok && cur == 1 {
                let mut log = vec![0u32; q as usize];
                for (k, &e) in exp.iter().enumerate() {
                    log[e as usize] = k as u32;
                }
                let doubled: Vec<u16> = exp.iter().chain(exp.iter()).copied().collect();
                self.exp = doubled;
                self.log = log;
                return;
            }
        }
        unreachable!("the multiplicative group of a finite field is cyclic");
    }

    fn slow_mul(&self, a: u32, b: u32) -> u32 {
        let (p, n) = (self.p as u64, self.n as usize);
        let da = digits(a, self.p, n);
        let db = digits(b, self.p, n);
        let mut prod = vec![0u64; 2 * n];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        for k in (n..2 * n).rev() {
            let c = prod[k];
            if c != 0 {
                for (i, &m) in self.modulus.iter().enumerate().take(n) {
                    let idx = k - n + i;
                    prod[idx] = (prod[idx] + (p - c) * m as u64) % p;
                }
                prod[k] = 0;
            }
        }
        let low: Vec<u32> = prod[..n].iter().map(|&c| c as u32).collect();
        undigits(&low, self.p)
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.n
    }

    #[inline]
    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Every element, in code order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.q).map(|c| Elem(c as u16))
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Elem> {
        (1..self.q).map(|c| Elem(c as u16))
    }

    pub fn elem(&self, code: u32) -> Result<Elem> {
        if code < self.q {
            Ok(Elem(code as u16))
        } else {
            Err(Error::Parse {
                what: "element code",
                input: code.to_string(),
            })
        }
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, v: i64) -> Elem {
        Elem(v.rem_euclid(self.p as i64) as u16)
    }

    /// Element with the given coefficients (ascending, shorter slices are zero-padded).
    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<Elem> {
        if coeffs.len() > self.n as usize || coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::Parse {
                what: "field element",
                input: format!("{coeffs:?}"),
            });
        }
        Ok(Elem(undigits(coeffs, self.p) as u16))
    }

    pub fn coeffs(&self, e: Elem) -> Vec<u32> {
        digits(e.code(), self.p, self.n as usize)
    }

    /// The residue class of `t`, i.e. the root of the modulus that defines the field.
    pub fn root_of_modulus(&self) -> Elem {
        if self.n == 1 {
            self.neg(Elem(self.modulus[0] as u16))
        } else {
            Elem(self.p as u16)
        }
    }

    /// The primitive element behind the log/exp tables.
    pub fn primitive_element(&self) -> Elem {
        if self.q == 2 {
            Elem::ONE
        } else {
            Elem(self.exp[1])
        }
    }

    pub fn format_elem(&self, e: Elem) -> String {
        let c: Vec<String> = self.coeffs(e).iter().map(|c| c.to_string()).collect();
        c.join(",")
    }

    /// Parses `"c0,c1,...,c{n-1}"`; missing trailing coefficients are zero and
    /// negative entries are reduced mod p.
    pub fn parse_elem(&self, s: &str) -> Result<Elem> {
        let bad = || Error::Parse {
            what: "field element",
            input: s.to_string(),
        };
        let coeffs = s
            .split(',')
            .map(|c| parse_signed_mod(c, self.p))
            .collect::<Option<Vec<u32>>>()
            .ok_or_else(bad)?;
        self.from_coeffs(&coeffs).map_err(|_| bad())
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let (x, y) = (a.0 as u32, b.0 as u32);
        Elem(match &self.adder {
            Adder::Prime => {
                let s = x + y;
                if s >= self.p {
                    (s - self.p) as u16
                } else {
                    s as u16
                }
            }
            Adder::Binary => (x ^ y) as u16,
            Adder::Table(t) => t[(x * self.q + y) as usize],
            Adder::Digits => {
                let n = self.n as usize;
                let s: Vec<u32> = digits(x, self.p, n)
                    .iter()
                    .zip(digits(y, self.p, n))
                    .map(|(u, v)| (u + v) % self.p)
                    .collect();
                undigits(&s, self.p) as u16
            }
        })
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        Elem(self.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 || b.0 == 0 {
            return Elem::ZERO;
        }
        if self.n == 1 {
            return Elem(((a.0 as u32 * b.0 as u32) % self.p) as u16);
        }
        let l = self.log[a.0 as usize] + self.log[b.0 as usize];
        Elem(self.exp[l as usize])
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self, a: Elem) -> Option<Elem> {
        if a.is_zero() {
            return None;
        }
        let m = self.q - 1;
        let l = self.log[a.0 as usize];
        Some(Elem(self.exp[((m - l) % m) as usize]))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        let inv = self.inv(b).ok_or(Error::DivisionByZero)?;
        Ok(self.mul(a, inv))
    }

    pub fn pow(&self, a: Elem, k: u64) -> Elem {
        if k == 0 {
            return Elem::ONE;
        }
        if a.is_zero() {
            return Elem::ZERO;
        }
        let m = (self.q - 1) as u64;
        let l = (self.log[a.0 as usize] as u64 * (k % m)) % m;
        Elem(self.exp[l as usize])
    }

    /// `a^(p^k)`.
    pub fn frobenius(&self, a: Elem, k: u32) -> Elem {
        if k.is_multiple_of(self.n) {
            return a;
        }
        let m = (self.q - 1) as u64;
        let mut e = 1u64;
        for _ in 0..(k % self.n) {
            e = e * self.p as u64 % m;
        }
        self.pow(a, e)
    }

    /// Whether `a` is a nonzero square. In characteristic 2 every element is a square and
    /// the answer is always `true`.
    pub fn is_square(&self, a: Elem) -> Result<bool> {
        if a.is_zero() {
            return Err(Error::ZeroElement);
        }
        if self.p == 2 {
            return Ok(true);
        }
        Ok(self.pow(a, ((self.q - 1) / 2) as u64) == Elem::ONE)
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: Elem) -> Result<u64> {
        if a.is_zero() {
            return Err(Error::ZeroElement);
        }
        let mut ord = (self.q - 1) as u64;
        for r in prime_factors(ord) {
            while ord.is_multiple_of(r) && self.pow(a, ord / r) == Elem::ONE {
                ord /= r;
            }
        }
        Ok(ord)
    }

    /// Whether `a` lies in the subfield GF(p^d).
    pub fn in_subfield(&self, a: Elem, d: u32) -> bool {
        d > 0 && self.n.is_multiple_of(d) && self.frobenius(a, d) == a
    }

    /// Size of the Frobenius orbit of `a`, i.e. the degree of the subfield GF(p)[a].
    pub fn generated_degree(&self, a: Elem) -> u32 {
        let mut cur = self.frobenius(a, 1);
        let mut d = 1;
        while cur != a {
            cur = self.frobenius(cur, 1);
            d += 1;
        }
        d
    }

    /// Whether GF(p)[a] is the whole field.
    pub fn generates_field(&self, a: Elem) -> bool {
        self.generated_degree(a) == self.n
    }

    /// Monic minimal polynomial of `a` over the prime field.
    pub fn minimal_polynomial(self: &Arc<Self>, a: Elem) -> Poly {
        let d = self.generated_degree(a);
        let mut prod = Poly::one(self);
        let mut conj = a;
        for _ in 0..d {
            prod = prod.mul(&Poly::new(self, vec![self.neg(conj), Elem::ONE]));
            conj = self.frobenius(conj, 1);
        }
        let fp = Self::prime(self.p).expect("p was validated at construction");
        let coeffs: Vec<u32> = prod.coeffs().iter().map(|&c| c.code()).collect();
        debug_assert!(coeffs.iter().all(|&c| c < self.p));
        Poly::from_codes(&fp, &coeffs)
    }

    /// A fixed primitive cube root of unity: the one with the least code. For p = 3 this is 1.
    /// `None` when the field has no primitive cube root of unity.
    pub fn omega(&self) -> Option<Elem> {
        if self.p == 3 {
            return Some(Elem::ONE);
        }
        self.nonzero_elements()
            .find(|&e| e != Elem::ONE && self.pow(e, 3) == Elem::ONE)
    }
}

/// Field homomorphism GF(p^m) -> GF(p^n), m | n, sending `t` to a root of the source modulus.
#[derive(Clone, Debug)]
pub struct Embedding {
    pub source: FieldRef,
    pub target: FieldRef,
    images: Vec<Elem>,
}

impl Embedding {
    pub fn new(source: &FieldRef, target: &FieldRef) -> Result<Self> {
        if source.p != target.p || !target.n.is_multiple_of(source.n) {
            return Err(Error::NoEmbedding(format!("GF({source}) -> GF({target})")));
        }
        let modulus: Vec<Elem> = source.modulus.iter().map(|&c| Elem(c as u16)).collect();
        let f = Poly::new(target, modulus);
        let root = target
            .elements()
            .find(|&r| f.evaluate(r).is_zero())
            .ok_or_else(|| Error::NoEmbedding("modulus has no root in the target".into()))?;
        let mut powers = vec![Elem::ONE];
        for _ in 1..source.n {
            let last = *powers.last().unwrap();
            powers.push(target.mul(last, root));
        }
        let images = source
            .elements()
            .map(|e| {
                source
                    .coeffs(e)
                    .iter()
                    .zip(&powers)
                    .fold(Elem::ZERO, |acc, (&c, &pw)| {
                        target.add(acc, target.mul(Elem(c as u16), pw))
                    })
            })
            .collect();
        Ok(Embedding {
            source: source.clone(),
            target: target.clone(),
            images,
        })
    }

    #[inline]
    pub fn map(&self, e: Elem) -> Elem {
        self.images[e.0 as usize]
    }
}

/// The smallest extension of `field` containing a primitive cube root of unity (or `field`
/// itself when p = 3 or one already exists), with the embedding into it.
pub fn omega_extension(field: &FieldRef) -> Result<Embedding> {
    if field.omega().is_some() {
        return Embedding::new(field, field);
    }
    let big = FieldSpec::default_modulus(field.p, 2 * field.n)?;
    Embedding::new(field, &big)
}

pub(crate) fn digits(mut code: u32, p: u32, n: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        out.push(code % p);
        code /= p;
    }
    out
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn parse_signed_mod(s: &str, p: u32) -> Option<u32> {
    let v = s.trim().parse::<i64>().ok()?;
    Some(v.rem_euclid(p as i64) as u32)
}

/// A field element bundled with its field, for ergonomic one-off arithmetic.
///
/// The operator impls panic when the operands come from different fields; use
/// [`FieldElem::arith`] for a checked version.
#[derive(Clone)]
pub struct FieldElem {
    field: FieldRef,
    value: Elem,
}

/// Binary operations accepted by [`FieldElem::arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl FieldElem {
    pub fn new(field: &FieldRef, value: Elem) -> Self {
        FieldElem {
            field: field.clone(),
            value,
        }
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn value(&self) -> Elem {
        self.value
    }

    pub fn coeffs(&self) -> Vec<u32> {
        self.field.coeffs(self.value)
    }

    pub fn arith(&self, other: &FieldElem, op: ArithOp) -> Result<FieldElem> {
        if !Arc::ptr_eq(&self.field, &other.field) && *self.field != *other.field {
            return Err(Error::MixedFields);
        }
        let f = &self.field;
        let (a, b) = (self.value, other.value);
        let value = match op {
            ArithOp::Add => f.add(a, b),
            ArithOp::Sub => f.sub(a, b),
            ArithOp::Mul => f.mul(a, b),
            ArithOp::Div => f.div(a, b)?,
        };
        Ok(FieldElem::new(f, value))
    }

    pub fn inv(&self) -> Result<FieldElem> {
        let v = self.field.inv(self.value).ok_or(Error::DivisionByZero)?;
        Ok(FieldElem::new(&self.field, v))
    }

    pub fn pow(&self, k: u64) -> FieldElem {
        FieldElem::new(&self.field, self.field.pow(self.value, k))
    }

    pub fn frobenius(&self, k: u32) -> FieldElem {
        FieldElem::new(&self.field, self.field.frobenius(self.value, k))
    }
}

impl PartialEq for FieldElem {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value && *self.field == *other.field
    }
}

impl Eq for FieldElem {}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] in {:?}", self.field.format_elem(self.value), self.field)
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.field.format_elem(self.value))
    }
}

macro_rules! forward_op {
    ($trait:ident, $method:ident, $op:expr) => {
        impl $trait for &FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: &FieldElem) -> FieldElem {
                self.arith(rhs, $op).expect(concat!("FieldElem::", stringify!($method)))
            }
        }
        impl $trait for FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: FieldElem) -> FieldElem {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_op!(Add, add, ArithOp::Add);
forward_op!(Sub, sub, ArithOp::Sub);
forward_op!(Mul, mul, ArithOp::Mul);
forward_op!(Div, div, ArithOp::Div);

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem::new(&self.field, self.field.neg(self.value))
    }
}

/// Greatest common divisor on `u64`, exposed for order bookkeeping.
pub fn gcd_u64(a: u64, b: u64) -> u64 {
    gcd(a, b)
}
