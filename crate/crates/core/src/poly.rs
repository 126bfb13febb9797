//! Univariate polynomials over a finite field.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Elem, FieldRef};

/// Dense polynomial with ascending coefficients; the zero polynomial has no coefficients.
#[derive(Clone)]
pub struct Poly {
    field: FieldRef,
    coeffs: Vec<Elem>,
}

impl Poly {
    pub fn new(field: &FieldRef, mut coeffs: Vec<Elem>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    /// Polynomial from element codes.
    pub fn from_codes(field: &FieldRef, codes: &[u32]) -> Self {
        let coeffs = codes
            .iter()
            .map(|&c| field.elem(c).expect("element code out of range"))
            .collect();
        Self::new(field, coeffs)
    }

    /// Polynomial with integer coefficients mapped into the prime subfield.
    pub fn from_ints(field: &FieldRef, ints: &[i64]) -> Self {
        Self::new(field, ints.iter().map(|&v| field.from_int(v)).collect())
    }

    pub fn zero(field: &FieldRef) -> Self {
        Self::new(field, Vec::new())
    }

    pub fn one(field: &FieldRef) -> Self {
        Self::new(field, vec![Elem::ONE])
    }

    pub fn constant(field: &FieldRef, c: Elem) -> Self {
        Self::new(field, vec![c])
    }

    /// The indeterminate `t`.
    pub fn t(field: &FieldRef) -> Self {
        Self::new(field, vec![Elem::ZERO, Elem::ONE])
    }

    /// `c t^k`.
    pub fn monomial(field: &FieldRef, c: Elem, k: usize) -> Self {
        let mut coeffs = vec![Elem::ZERO; k + 1];
        coeffs[k] = c;
        Self::new(field, coeffs)
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    /// Coefficient of `t^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(Elem::ZERO)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> Elem {
        self.coeffs.last().copied().unwrap_or(Elem::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff() == Elem::ONE
    }

    fn check(&self, other: &Poly) {
        debug_assert!(
            Arc::ptr_eq(&self.field, &other.field) || *self.field == *other.field,
            "polynomials over different fields"
        );
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.check(other);
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| f.add(self.coeff(i), other.coeff(i))).collect();
        Poly::new(f, coeffs)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.check(other);
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect();
        Poly::new(f, coeffs)
    }

    pub fn neg(&self) -> Poly {
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }

    pub fn scale(&self, c: Elem) -> Poly {
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|&x| f.mul(x, c)).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.check(other);
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Poly::zero(f);
        }
        let mut out = vec![Elem::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::new(f, out)
    }

    pub fn pow(&self, mut k: u64) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(&self.field);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    /// Quotient and remainder.
    pub fn divmod(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.check(divisor);
        let f = &self.field;
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let inv_lc = f.inv(divisor.leading_coeff()).expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(f), self.clone()));
        }
        let mut quot = vec![Elem::ZERO; rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = rem[k];
            if c.is_zero() {
                continue;
            }
            let m = f.mul(c, inv_lc);
            quot[k - dd] = m;
            for (i, &d) in divisor.coeffs.iter().enumerate() {
                let idx = k - dd + i;
                rem[idx] = f.sub(rem[idx], f.mul(m, d));
            }
        }
        rem.truncate(dd);
        Ok((Poly::new(f, quot), Poly::new(f, rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.divmod(divisor)?.1)
    }

    /// Scales to a monic polynomial (the zero polynomial stays zero).
    pub fn monic(&self) -> Poly {
        match self.field.inv(self.leading_coeff()) {
            Some(inv) => self.scale(inv),
            None => self.clone(),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("b is nonzero");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Monic least common multiple.
    pub fn lcm(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.field);
        }
        let g = self.gcd(other);
        let (q, _) = self.mul(other).divmod(&g).expect("gcd is nonzero");
        q.monic()
    }

    /// Whether `self` divides `other`.
    pub fn divides(&self, other: &Poly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.rem(self).expect("nonzero divisor").is_zero()
    }

    pub fn derivative(&self) -> Poly {
        let f = &self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| f.mul(c, f.from_int(i as i64)))
            .collect();
        Poly::new(f, coeffs)
    }

    /// Horner evaluation.
    pub fn evaluate(&self, x: Elem) -> Elem {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(Elem::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// `self^k mod modulus`.
    pub fn powmod(&self, mut k: u64, modulus: &Poly) -> Result<Poly> {
        let mut base = self.rem(modulus)?;
        let mut acc = Poly::one(&self.field).rem(modulus)?;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base).rem(modulus)?;
            }
            base = base.mul(&base).rem(modulus)?;
            k >>= 1;
        }
        Ok(acc)
    }

    /// Irreducibility over the coefficient field, by `gcd(f, t^(Q^i) - t) = 1` for
    /// `i <= deg f / 2`, `Q` the field order.
    pub fn is_irreducible(&self) -> bool {
        let d = match self.degree() {
            None | Some(0) => return false,
            Some(1) => return true,
            Some(d) => d,
        };
        let order = self.field.order() as u64;
        let t = Poly::t(&self.field);
        let mut h = t.clone();
        for _ in 1..=d / 2 {
            h = h.powmod(order, self).expect("nonzero modulus");
            if !self.gcd(&h.sub(&t)).is_constant() {
                return false;
            }
        }
        true
    }

    /// `Res(f, g) = lc(f)^deg(g) * prod g(r)` over the roots `r` of `f`, by the Euclidean
    /// remainder sequence.
    pub fn resultant(&self, other: &Poly) -> Elem {
        self.check(other);
        let fld = &self.field;
        if self.is_zero() || other.is_zero() {
            return Elem::ZERO;
        }
        let mut f = self.clone();
        let mut g = other.clone();
        let mut acc = Elem::ONE;
        loop {
            let df = f.degree().unwrap();
            let dg = g.degree().unwrap();
            if df == 0 {
                return fld.mul(acc, fld.pow(f.leading_coeff(), dg as u64));
            }
            if dg == 0 {
                return fld.mul(acc, fld.pow(g.leading_coeff(), df as u64));
            }
            if dg < df {
                if (df * dg) % 2 == 1 {
                    acc = fld.neg(acc);
                }
                std::mem::swap(&mut f, &mut g);
                continue;
            }
            let r = g.rem(&f).expect("f is nonzero");
            let dr = match r.degree() {
                None => return Elem::ZERO,
                Some(d) => d,
            };
            acc = fld.mul(acc, fld.pow(f.leading_coeff(), (dg - dr) as u64));
            g = r;
        }
    }

    /// `disc(f) = (-1)^(d(d-1)/2) lc(f)^(d-2) prod f'(r)`, which equals
    /// `(-1)^(d(d-1)/2) Res(f, f') / lc(f)` whenever `deg f' = d - 1`.
    pub fn discriminant(&self) -> Result<Elem> {
        let f = &self.field;
        let d = match self.degree() {
            None | Some(0) => return Err(Error::ConstantPolynomial),
            Some(d) => d,
        };
        let der = self.derivative();
        let Some(dd) = der.degree() else {
            return Ok(Elem::ZERO);
        };
        let lc = self.leading_coeff();
        let res = self.resultant(&der);
        // lc^(d - 2 - deg f') with a possibly negative exponent.
        let exp = d as i64 - 2 - dd as i64;
        let lc_pow = if exp >= 0 {
            f.pow(lc, exp as u64)
        } else {
            f.pow(f.inv(lc).expect("nonzero"), (-exp) as u64)
        };
        let mut disc = f.mul(res, lc_pow);
        if (d * (d - 1) / 2) % 2 == 1 {
            disc = f.neg(disc);
        }
        Ok(disc)
    }

    /// Ascending coefficients in the field-element string format.
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|&c| self.field.format_elem(c)).collect()
    }
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && *self.field == *other.field
    }
}

impl Eq for Poly {}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let fld = &self.field;
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let coeff = if fld.degree() == 1 {
                c.code().to_string()
            } else {
                format!("[{}]", fld.format_elem(c))
            };
            match (i, c == Elem::ONE) {
                (0, _) => f.write_str(&coeff)?,
                (1, true) => f.write_str("t")?,
                (1, false) => write!(f, "{coeff}t")?,
                (_, true) => write!(f, "t^{i}")?,
                (_, false) => write!(f, "{coeff}t^{i}")?,
            }
        }
        Ok(())
    }
}
