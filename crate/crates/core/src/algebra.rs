//! Enveloping algebras and invariant subspaces of matrix groups.

use crate::error::{Error, Result};
use crate::field::Elem;
use crate::linalg::{Subspace, Vector};
use crate::matrix::Matrix;

/// Dimension of the algebra spanned by all words in `gens` (including the empty word).
///
/// The group is absolutely irreducible exactly when this equals `n^2`.
pub fn spanning_dimension(gens: &[Matrix]) -> Result<usize> {
    let first = gens
        .first()
        .ok_or_else(|| Error::Precondition("at least one generator is required".into()))?;
    let (field, n) = (first.field().clone(), first.n());
    for g in gens {
        if g.n() != n || **g.field() != *field {
            return Err(Error::MixedFields);
        }
    }
    let mut span = Subspace::new(&field, n * n);
    let id = Matrix::identity(&field, n);
    span.insert(id.data());
    let mut queue = vec![id];
    while let Some(m) = queue.pop() {
        for g in gens {
            let w = g.mul(&m);
            if span.insert(w.data()) {
                if span.dim() == n * n {
                    return Ok(n * n);
                }
                queue.push(w);
            }
        }
    }
    Ok(span.dim())
}

/// Smallest subspace containing `seeds` and invariant under every generator.
pub fn submodule_closure(gens: &[Matrix], seeds: &[Vector]) -> Result<Subspace> {
    let first = gens
        .first()
        .ok_or_else(|| Error::Precondition("at least one generator is required".into()))?;
    let n = first.n();
    let mut span = Subspace::new(first.field(), n);
    let mut queue = Vec::new();
    for s in seeds {
        if s.len() != n {
            return Err(Error::Dimension(format!("seed of length {} in dimension {n}", s.len())));
        }
        if span.insert(s) {
            queue.push(s.clone());
        }
    }
    while let Some(v) = queue.pop() {
        for g in gens {
            let w = g.mul_vec(&v);
            if span.insert(&w) {
                queue.push(w);
            }
        }
    }
    Ok(span)
}

/// Whether every generator maps the subspace into itself.
pub fn is_invariant(gens: &[Matrix], space: &Subspace) -> bool {
    space
        .basis()
        .iter()
        .all(|v| gens.iter().all(|g| space.contains(&g.mul_vec(v))))
}

/// Standard basis vector `e_i` (0-indexed).
pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = vec![Elem::ZERO; n];
    v[i] = Elem::ONE;
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    #[test]
    fn identity_spans_one_dimension() {
        let f = FieldSpec::prime(5).unwrap();
        assert_eq!(spanning_dimension(&[Matrix::identity(&f, 4)]).unwrap(), 1);
    }

    #[test]
    fn permutation_and_diagonal_span_everything() {
        let f = FieldSpec::prime(7).unwrap();
        let cyc = Matrix::from_ints(&f, &[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]]);
        let diag = Matrix::from_ints(&f, &[&[1, 0, 0], &[0, 2, 0], &[0, 0, 4]]);
        assert_eq!(spanning_dimension(std::slice::from_ref(&cyc)).unwrap(), 3);
        assert_eq!(spanning_dimension(&[cyc, diag]).unwrap(), 9);
    }

    #[test]
    fn closure_of_fixed_vector() {
        let f = FieldSpec::prime(3).unwrap();
        let cyc = Matrix::from_ints(&f, &[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]]);
        let ones = vec![Elem::ONE; 3];
        let s = submodule_closure(std::slice::from_ref(&cyc), &[ones]).unwrap();
        assert_eq!(s.dim(), 1);
        assert!(is_invariant(std::slice::from_ref(&cyc), &s));
        let s = submodule_closure(&[cyc], &[unit_vector(3, 0)]).unwrap();
        assert_eq!(s.dim(), 3);
    }
}
