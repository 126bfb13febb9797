//! Dense square matrices over GF(q).
//!
//! Vectors are columns and matrices act on the left.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Elem, FieldRef};
use crate::linalg::{self, Subspace, Vector};
use crate::poly::Poly;
use crate::snf;

#[derive(Clone)]
pub struct Matrix {
    n: usize,
    field: FieldRef,
    data: Vec<Elem>,
}

/// Result of an order computation bounded by a cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundedOrder {
    Finite(u64),
    /// No power up to the cap qualified.
    Unknown(u64),
}

impl BoundedOrder {
    pub fn finite(self) -> Option<u64> {
        match self {
            BoundedOrder::Finite(k) => Some(k),
            BoundedOrder::Unknown(_) => None,
        }
    }
}

pub const DEFAULT_ORDER_CAP: u64 = 100_000;

impl Matrix {
    pub fn zero(field: &FieldRef, n: usize) -> Self {
        Matrix {
            n,
            field: field.clone(),
            data: vec![Elem::ZERO; n * n],
        }
    }

    pub fn scalar(field: &FieldRef, n: usize, c: Elem) -> Self {
        let mut m = Self::zero(field, n);
        for i in 0..n {
            m.data[i * n + i] = c;
        }
        m
    }

    pub fn identity(field: &FieldRef, n: usize) -> Self {
        Self::scalar(field, n, Elem::ONE)
    }

    pub fn from_fn(field: &FieldRef, n: usize, mut f: impl FnMut(usize, usize) -> Elem) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Matrix {
            n,
            field: field.clone(),
            data,
        }
    }

    pub fn from_rows(field: &FieldRef, rows: Vec<Vec<Elem>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension("matrix must be square".into()));
        }
        Ok(Matrix {
            n,
            field: field.clone(),
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Integer entries mapped into the prime subfield.
    pub fn from_ints(field: &FieldRef, rows: &[&[i64]]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Self::from_fn(field, n, |i, j| field.from_int(rows[i][j]))
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: &FieldRef, cols: &[Vector]) -> Result<Self> {
        let n = cols.len();
        if cols.iter().any(|c| c.len() != n) {
            return Err(Error::Dimension("need n columns of length n".into()));
        }
        Ok(Self::from_fn(field, n, |i, j| cols[j][i]))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn data(&self) -> &[Elem] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        self.data[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> Vector {
        self.data[i * self.n..(i + 1) * self.n].to_vec()
    }

    pub fn col(&self, j: usize) -> Vector {
        (0..self.n).map(|i| self.get(i, j)).collect()
    }

    pub fn rows(&self) -> Vec<Vector> {
        (0..self.n).map(|i| self.row(i)).collect()
    }

    fn same_shape(&self, other: &Matrix) -> Result<()> {
        if self.n != other.n {
            return Err(Error::Dimension(format!("{} vs {}", self.n, other.n)));
        }
        if !Arc::ptr_eq(&self.field, &other.field) && *self.field != *other.field {
            return Err(Error::MixedFields);
        }
        Ok(())
    }

    /// Product; panics on mismatched shapes (use [`Matrix::try_mul`] for a checked version).
    pub fn mul(&self, other: &Matrix) -> Matrix {
        self.try_mul(other).expect("matrix product")
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other)?;
        let n = self.n;
        let f = &*self.field;
        let mut out = vec![Elem::ZERO; n * n];
        for i in 0..n {
            let orow = &mut out[i * n..(i + 1) * n];
            for k in 0..n {
                let a = self.data[i * n + k];
                if a.is_zero() {
                    continue;
                }
                let brow = &other.data[k * n..(k + 1) * n];
                for (o, &b) in orow.iter_mut().zip(brow) {
                    if !b.is_zero() {
                        *o = f.add(*o, f.mul(a, b));
                    }
                }
            }
        }
        Ok(Matrix {
            n,
            field: self.field.clone(),
            data: out,
        })
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other)?;
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        Ok(Matrix {
            n: self.n,
            field: self.field.clone(),
            data,
        })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other)?;
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect();
        Ok(Matrix {
            n: self.n,
            field: self.field.clone(),
            data,
        })
    }

    pub fn scale(&self, c: Elem) -> Matrix {
        let f = &self.field;
        Matrix {
            n: self.n,
            field: self.field.clone(),
            data: self.data.iter().map(|&a| f.mul(a, c)).collect(),
        }
    }

    pub fn neg(&self) -> Matrix {
        let f = &self.field;
        Matrix {
            n: self.n,
            field: self.field.clone(),
            data: self.data.iter().map(|&a| f.neg(a)).collect(),
        }
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(&self.field, self.n, |i, j| self.get(j, i))
    }

    /// Entrywise `a -> a^(p^k)`.
    pub fn frobenius_entrywise(&self, k: u32) -> Matrix {
        let f = &self.field;
        Matrix {
            n: self.n,
            field: self.field.clone(),
            data: self.data.iter().map(|&a| f.frobenius(a, k)).collect(),
        }
    }

    /// Entrywise image under an arbitrary map into another field.
    pub fn map_entries(&self, target: &FieldRef, map: impl Fn(Elem) -> Elem) -> Matrix {
        Matrix {
            n: self.n,
            field: target.clone(),
            data: self.data.iter().map(|&a| map(a)).collect(),
        }
    }

    pub fn pow(&self, mut k: u64) -> Matrix {
        let mut base = self.clone();
        let mut acc = Matrix::identity(&self.field, self.n);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    pub fn mul_vec(&self, v: &[Elem]) -> Vector {
        let f = &*self.field;
        (0..self.n)
            .map(|i| {
                let row = &self.data[i * self.n..(i + 1) * self.n];
                row.iter()
                    .zip(v)
                    .fold(Elem::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
            })
            .collect()
    }

    /// Gauss-Jordan inverse.
    pub fn inverse(&self) -> Result<Matrix> {
        let n = self.n;
        if n == 0 {
            return Ok(self.clone());
        }
        let f = &*self.field;
        let mut aug: Vec<Vector> = (0..n)
            .map(|i| {
                let mut r = self.row(i);
                r.extend((0..n).map(|j| if i == j { Elem::ONE } else { Elem::ZERO }));
                r
            })
            .collect();
        let pivots = linalg::rref(f, &mut aug);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        Ok(Matrix::from_fn(&self.field, n, |i, j| aug[i][n + j]))
    }

    pub fn det(&self) -> Elem {
        let n = self.n;
        let f = &*self.field;
        let mut m = self.rows();
        let mut det = Elem::ONE;
        for c in 0..n {
            let Some(pr) = (c..n).find(|&i| !m[i][c].is_zero()) else {
                return Elem::ZERO;
            };
            if pr != c {
                m.swap(pr, c);
                det = f.neg(det);
            }
            let piv = m[c][c];
            det = f.mul(det, piv);
            let inv = f.inv(piv).unwrap();
            let prow = m[c].clone();
            for row in m.iter_mut().skip(c + 1) {
                let x = row[c];
                if !x.is_zero() {
                    linalg::axpy(f, row, f.neg(f.mul(x, inv)), &prow);
                }
            }
        }
        det
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.rows();
        linalg::rref(&self.field, &mut rows).len()
    }

    pub fn is_identity(&self) -> bool {
        self.is_scalar() == Some(Elem::ONE)
    }

    /// The scalar `c` when the matrix is `cI`.
    pub fn is_scalar(&self) -> Option<Elem> {
        if self.n == 0 {
            return Some(Elem::ONE);
        }
        let c = self.get(0, 0);
        let ok = (0..self.n).all(|i| (0..self.n).all(|j| self.get(i, j) == if i == j { c } else { Elem::ZERO }));
        ok.then_some(c)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| i == j || self.get(i, j).is_zero()))
    }

    /// `x^-1 y^-1 x y`.
    pub fn commutator(&self, other: &Matrix) -> Result<Matrix> {
        let xi = self.inverse()?;
        let yi = other.inverse()?;
        Ok(xi.mul(&yi).mul(self).mul(other))
    }

    /// Characteristic polynomial `det(tI - A)`, via reduction to upper Hessenberg form.
    pub fn char_poly(&self) -> Poly {
        let n = self.n;
        let f = &self.field;
        let mut h: Vec<Vector> = self.rows();
        for j in 0..n.saturating_sub(2) {
            let Some(i) = (j + 1..n).find(|&i| !h[i][j].is_zero()) else {
                continue;
            };
            if i != j + 1 {
                h.swap(i, j + 1);
                for row in h.iter_mut() {
                    row.swap(i, j + 1);
                }
            }
            let inv = f.inv(h[j + 1][j]).unwrap();
            for i in j + 2..n {
                let m = f.mul(h[i][j], inv);
                if m.is_zero() {
                    continue;
                }
                // row_i -= m row_{j+1}; col_{j+1} += m col_i
                let pr = h[j + 1].clone();
                linalg::axpy(f, &mut h[i], f.neg(m), &pr);
                for row in h.iter_mut() {
                    let v = row[i];
                    row[j + 1] = f.add(row[j + 1], f.mul(m, v));
                }
            }
        }
        let mut ps: Vec<Poly> = vec![Poly::one(f)];
        for m in 0..n {
            let lin = Poly::new(f, vec![f.neg(h[m][m]), Elem::ONE]);
            let mut pm = lin.mul(&ps[m]);
            let mut prod = Elem::ONE;
            for i in (0..m).rev() {
                prod = f.mul(prod, h[i + 1][i]);
                let c = f.mul(h[i][m], prod);
                if !c.is_zero() {
                    pm = pm.sub(&ps[i].scale(c));
                }
            }
            ps.push(pm);
        }
        ps.pop().unwrap()
    }

    /// Minimal annihilating polynomial of the vector `v`.
    pub fn vector_annihilator(&self, v: &[Elem]) -> Poly {
        let f = &self.field;
        let mut seq: Vec<Vector> = vec![v.to_vec()];
        let mut span = Subspace::new(f, self.n);
        if !span.insert(v) {
            return Poly::one(f);
        }
        loop {
            let next = self.mul_vec(seq.last().unwrap());
            if span.contains(&next) {
                // Solve sum c_i A^i v = A^k v.
                let k = seq.len();
                let rows: Vec<Vector> = (0..self.n).map(|r| seq.iter().map(|s| s[r]).collect()).collect();
                let c = linalg::solve(f, &rows, k, &next).expect("vector lies in the span");
                let mut coeffs: Vec<Elem> = c.iter().map(|&x| f.neg(x)).collect();
                coeffs.push(Elem::ONE);
                return Poly::new(f, coeffs);
            }
            span.insert(&next);
            seq.push(next);
        }
    }

    /// Minimal polynomial: lcm of the annihilators of the standard basis vectors.
    pub fn min_poly(&self) -> Poly {
        let f = &self.field;
        (0..self.n).fold(Poly::one(f), |acc, i| {
            let mut e = vec![Elem::ZERO; self.n];
            e[i] = Elem::ONE;
            acc.lcm(&self.vector_annihilator(&e))
        })
    }

    /// Nonconstant invariant factors of `tI - A`, each dividing the next.
    pub fn invariant_factors(&self) -> Vec<Poly> {
        snf::invariant_factors(self)
    }

    pub fn kernel_basis(&self) -> Vec<Vector> {
        linalg::kernel(&self.field, &self.rows(), self.n)
    }

    /// Reduced echelon basis of the column space.
    pub fn image_basis(&self) -> Vec<Vector> {
        let cols: Vec<Vector> = (0..self.n).map(|j| self.col(j)).collect();
        Subspace::spanned_by(&self.field, self.n, &cols).basis().to_vec()
    }

    pub fn solve(&self, b: &[Elem]) -> Result<Vector> {
        linalg::solve(&self.field, &self.rows(), self.n, b)
    }

    /// Least `k <= cap` with `A^k = I`.
    pub fn element_order(&self, cap: u64) -> Result<BoundedOrder> {
        self.power_search(cap, |m| m.is_identity())
    }

    /// Least `k <= cap` with `A^k` scalar.
    pub fn projective_order(&self, cap: u64) -> Result<BoundedOrder> {
        self.power_search(cap, |m| m.is_scalar().is_some())
    }

    fn power_search(&self, cap: u64, hit: impl Fn(&Matrix) -> bool) -> Result<BoundedOrder> {
        if self.det().is_zero() {
            return Err(Error::Singular);
        }
        let mut cur = self.clone();
        for k in 1..=cap {
            if hit(&cur) {
                return Ok(BoundedOrder::Finite(k));
            }
            cur = cur.mul(self);
        }
        Ok(BoundedOrder::Unknown(cap))
    }

    /// Row-major entries in the field-element string format.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.field.format_elem(self.get(i, j))).collect())
            .collect()
    }
}

/// `f(A)`, with scalars embedded as multiples of the identity.
pub fn substitute_matrix(f: &Poly, a: &Matrix) -> Result<Matrix> {
    if **f.field() != **a.field() {
        return Err(Error::MixedFields);
    }
    let n = a.n();
    let mut acc = Matrix::zero(a.field(), n);
    for &c in f.coeffs().iter().rev() {
        acc = acc.mul(a).add(&Matrix::scalar(a.field(), n, c))?;
    }
    Ok(acc)
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.data == other.data && *self.field == *other.field
    }
}

impl Eq for Matrix {}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells = self.to_strings();
        let width = cells.iter().flatten().map(|s| s.len()).max().unwrap_or(1);
        for row in cells {
            let line: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
            writeln!(f, "[{}]", line.join(" "))?;
        }
        Ok(())
    }
}
