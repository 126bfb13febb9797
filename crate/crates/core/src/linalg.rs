//! Gaussian elimination on row vectors over a finite field.

use crate::error::{Error, Result};
use crate::field::{Elem, FieldRef, FieldSpec};

/// Column vector of field elements.
pub type Vector = Vec<Elem>;

/// Subspace of `F^dim` kept as a fully reduced row-echelon basis.
#[derive(Clone, Debug)]
pub struct Subspace {
    field: FieldRef,
    dim_ambient: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn new(field: &FieldRef, dim_ambient: usize) -> Self {
        Subspace {
            field: field.clone(),
            dim_ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn spanned_by<'a>(
        field: &FieldRef,
        dim_ambient: usize,
        vectors: impl IntoIterator<Item = &'a Vector>,
    ) -> Self {
        let mut s = Self::new(field, dim_ambient);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim_ambient
    }

    /// Reduced echelon basis.
    pub fn basis(&self) -> &[Vector] {
        &self.rows
    }

    /// Remainder of `v` after elimination against the basis.
    pub fn reduce(&self, v: &[Elem]) -> Vector {
        let f = &self.field;
        let mut v = v.to_vec();
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            let c = v[piv];
            if !c.is_zero() {
                axpy(f, &mut v, f.neg(c), row);
            }
        }
        v
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        self.reduce(v).iter().all(|c| c.is_zero())
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[Elem]) -> bool {
        assert_eq!(v.len(), self.dim_ambient, "vector length");
        let f = self.field.clone();
        let mut r = self.reduce(v);
        let Some(piv) = r.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = f.inv(r[piv]).unwrap();
        for c in r.iter_mut() {
            *c = f.mul(*c, inv);
        }
        for row in self.rows.iter_mut() {
            let c = row[piv];
            if !c.is_zero() {
                axpy(&f, row, f.neg(c), &r);
            }
        }
        let pos = self.pivots.partition_point(|&p| p < piv);
        self.rows.insert(pos, r);
        self.pivots.insert(pos, piv);
        true
    }
}

/// `y += a x`.
#[inline]
pub(crate) fn axpy(f: &FieldSpec, y: &mut [Elem], a: Elem, x: &[Elem]) {
    for (yi, &xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi = f.add(*yi, f.mul(a, xi));
        }
    }
}

/// Reduced row echelon form in place; zero rows are dropped. Returns the pivot columns.
pub fn rref(f: &FieldSpec, rows: &mut Vec<Vector>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(pr) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = f.inv(rows[r][c]).unwrap();
        for x in rows[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let m = f.neg(row[c]);
                axpy(f, row, m, &pivot_row);
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Basis of `{x : A x = 0}` where `A` is given by its rows, each of length `ncols`.
pub fn kernel(f: &FieldSpec, rows: &[Vector], ncols: usize) -> Vec<Vector> {
    let mut m = rows.to_vec();
    let pivots = rref(f, &mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![Elem::ZERO; ncols];
            v[fc] = Elem::ONE;
            for (row, &pc) in m.iter().zip(&pivots) {
                v[pc] = f.neg(row[fc]);
            }
            v
        })
        .collect()
}

/// Some solution of `A x = b`, or [`Error::Inconsistent`].
pub fn solve(f: &FieldSpec, rows: &[Vector], ncols: usize, rhs: &[Elem]) -> Result<Vector> {
    if rows.len() != rhs.len() {
        return Err(Error::Dimension(format!(
            "{} equations but {} right-hand sides",
            rows.len(),
            rhs.len()
        )));
    }
    let mut aug: Vec<Vector> = rows
        .iter()
        .zip(rhs)
        .map(|(r, &b)| {
            let mut v = r.clone();
            v.push(b);
            v
        })
        .collect();
    let pivots = rref(f, &mut aug);
    if pivots.contains(&ncols) {
        return Err(Error::Inconsistent);
    }
    let mut x = vec![Elem::ZERO; ncols];
    for (row, &pc) in aug.iter().zip(&pivots) {
        x[pc] = row[ncols];
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subspace_stays_reduced() {
        let f = FieldSpec::prime(5).unwrap();
        let mut s = Subspace::new(&f, 3);
        let v = |a: i64, b: i64, c: i64| vec![f.from_int(a), f.from_int(b), f.from_int(c)];
        assert!(s.insert(&v(0, 2, 4)));
        assert!(s.insert(&v(1, 1, 1)));
        assert!(!s.insert(&v(2, 4, 6)));
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&v(1, 0, -1)));
        assert!(!s.contains(&v(0, 0, 1)));
    }

    #[test]
    fn inconsistent_system_is_flagged() {
        let f = FieldSpec::prime(3).unwrap();
        let rows = vec![vec![Elem::ONE, Elem::ONE], vec![Elem::ONE, Elem::ONE]];
        let rhs = [Elem::ZERO, Elem::ONE];
        assert_eq!(solve(&f, &rows, 2, &rhs), Err(Error::Inconsistent));
        let ker = kernel(&f, &rows, 2);
        assert_eq!(ker, vec![vec![f.from_int(-1), Elem::ONE]]);
    }
}
