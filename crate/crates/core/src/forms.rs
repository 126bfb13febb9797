//! Invariant forms of matrix groups, Wall forms and the spinor-norm test.
//!
//! A matrix `g` preserves the form with Gram matrix `M` when `g^T M g^sigma = M`, where
//! `sigma` is either the identity or a Frobenius power applied entrywise.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Elem, FieldRef, FieldSpec};
use crate::linalg::{self, Vector};
use crate::matrix::Matrix;

/// Field automorphism twisting the right-hand argument of a form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sigma {
    Identity,
    /// `c -> c^(p^k)`.
    Frobenius(u32),
}

impl Sigma {
    /// The involution `c -> c^q` of GF(q^2).
    pub fn unitary(field: &FieldSpec) -> Sigma {
        Sigma::Frobenius(field.degree() / 2)
    }

    fn apply(self, m: &Matrix) -> Matrix {
        match self {
            Sigma::Identity => m.clone(),
            Sigma::Frobenius(k) => m.frobenius_entrywise(k),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FormKind {
    Symmetric,
    Alternating,
    Hermitian,
    None,
}

#[derive(Clone, Debug)]
pub struct FormSolution {
    pub basis: Vec<Matrix>,
    pub kinds: Vec<FormKind>,
    pub nondegenerate: Vec<bool>,
}

impl FormSolution {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }
}

/// Whether `g^T M g^sigma = M` for every generator.
pub fn preserves(gens: &[Matrix], m: &Matrix, sigma: Sigma) -> bool {
    gens.iter()
        .all(|g| g.transpose().mul(m).mul(&sigma.apply(g)) == *m)
}

/// Solution space of `g^T M g^sigma = M` over all generators, with each basis element
/// classified. Hermitian solutions are rescaled to satisfy `(M^T)^sigma = M`.
pub fn invariant_forms(gens: &[Matrix], sigma: Sigma) -> Result<FormSolution> {
    let first = gens
        .first()
        .ok_or_else(|| Error::Precondition("at least one generator is required".into()))?;
    let (field, n) = (first.field().clone(), first.n());
    let f = &*field;
    let mut rows: Vec<Vector> = Vec::with_capacity(gens.len() * n * n);
    for g in gens {
        if g.n() != n || **g.field() != *f {
            return Err(Error::MixedFields);
        }
        let gs = sigma.apply(g);
        for i in 0..n {
            for j in 0..n {
                // sum_{k,l} g[k][i] M[k][l] gs[l][j] - M[i][j]
                let mut row = vec![Elem::ZERO; n * n];
                for k in 0..n {
                    let gki = g.get(k, i);
                    if gki.is_zero() {
                        continue;
                    }
                    for l in 0..n {
                        row[k * n + l] = f.add(row[k * n + l], f.mul(gki, gs.get(l, j)));
                    }
                }
                row[i * n + j] = f.sub(row[i * n + j], Elem::ONE);
                rows.push(row);
            }
        }
    }
    let kernel = linalg::kernel(f, &rows, n * n);
    let mut basis = Vec::new();
    let mut kinds = Vec::new();
    let mut nondegenerate = Vec::new();
    for v in kernel {
        let m = Matrix::from_fn(&field, n, |i, j| v[i * n + j]);
        let (m, kind) = classify(&m, sigma);
        nondegenerate.push(!m.det().is_zero());
        basis.push(m);
        kinds.push(kind);
    }
    Ok(FormSolution {
        basis,
        kinds,
        nondegenerate,
    })
}

fn classify(m: &Matrix, sigma: Sigma) -> (Matrix, FormKind) {
    let f = m.field().clone();
    let n = m.n();
    let mt = m.transpose();
    if let Sigma::Frobenius(_) = sigma {
        // Look for a scalar c with ((cM)^T)^sigma = cM.
        let mts = sigma.apply(&mt);
        for c in f.nonzero_elements() {
            let cs = match sigma {
                Sigma::Frobenius(k) => f.frobenius(c, k),
                Sigma::Identity => c,
            };
            if mts.scale(cs) == m.scale(c) {
                return (m.scale(c), FormKind::Hermitian);
            }
        }
        return (m.clone(), FormKind::None);
    }
    let zero_diag = (0..n).all(|i| m.get(i, i).is_zero());
    if mt == m.neg() && zero_diag {
        (m.clone(), FormKind::Alternating)
    } else if mt == *m {
        (m.clone(), FormKind::Symmetric)
    } else {
        (m.clone(), FormKind::None)
    }
}

/// Solutions of the quadratic-form problem in characteristic 2.
#[derive(Clone, Debug)]
pub struct QuadraticSolution {
    pub dimension: usize,
    /// Upper-triangular matrix `B` with `Q(v) = v^T B v`, for some nonzero solution.
    pub witness: Option<Matrix>,
}

/// Quadratic forms `Q(v) = v^T B v` (B upper triangular) preserved by every generator.
///
/// With `polarization = Some(J)`, the polar form of `Q` is additionally required to be a
/// scalar multiple `lambda J`; the scalar is an unknown, so the system stays homogeneous
/// and the returned dimension counts pairs `(B, lambda)`. With `None` only invariance is
/// imposed.
pub fn invariant_quadratic_char2(gens: &[Matrix], polarization: Option<&Matrix>) -> Result<QuadraticSolution> {
    let first = gens
        .first()
        .ok_or_else(|| Error::Precondition("at least one generator is required".into()))?;
    let (field, n) = (first.field().clone(), first.n());
    let f = &*field;
    if f.characteristic() != 2 {
        return Err(Error::Precondition("quadratic forms are only solved in characteristic 2".into()));
    }
    // Unknowns: B[i][j] for i <= j, then lambda.
    let mut index = vec![vec![usize::MAX; n]; n];
    let mut count = 0;
    for (i, row) in index.iter_mut().enumerate() {
        for slot in row.iter_mut().skip(i) {
            *slot = count;
            count += 1;
        }
    }
    let lambda = count;
    let nvars = count + usize::from(polarization.is_some());
    let mut rows: Vec<Vector> = Vec::new();
    for g in gens {
        if g.n() != n || **g.field() != *f {
            return Err(Error::MixedFields);
        }
        // D = g^T B g - B; need D[i][i] = 0 and D[i][j] + D[j][i] = 0 for i < j.
        // Coefficient of B[k][l] in (g^T B g)[i][j] is g[k][i] g[l][j].
        for i in 0..n {
            for j in i..n {
                let mut row = vec![Elem::ZERO; nvars];
                for k in 0..n {
                    for l in k..n {
                        let mut c = f.mul(g.get(k, i), g.get(l, j));
                        if i != j {
                            c = f.add(c, f.mul(g.get(k, j), g.get(l, i)));
                        }
                        let u = index[k][l];
                        row[u] = f.add(row[u], c);
                    }
                }
                if i == j {
                    let u = index[i][i];
                    row[u] = f.sub(row[u], Elem::ONE);
                } else {
                    // -(B[i][j] + B[j][i]) with B[j][i] = 0
                    let u = index[i][j];
                    row[u] = f.sub(row[u], Elem::ONE);
                }
                rows.push(row);
            }
        }
    }
    if let Some(j) = polarization {
        for i in 0..n {
            for k in i + 1..n {
                let mut row = vec![Elem::ZERO; nvars];
                row[index[i][k]] = Elem::ONE;
                row[lambda] = f.neg(j.get(i, k));
                rows.push(row);
            }
        }
    }
    let kernel = linalg::kernel(f, &rows, nvars);
    let witness = kernel.first().map(|v| {
        Matrix::from_fn(&field, n, |i, j| if i <= j { v[index[i][j]] } else { Elem::ZERO })
    });
    Ok(QuadraticSolution {
        dimension: kernel.len(),
        witness,
    })
}

/// `u^T B v`.
pub fn bilinear_value(f: &FieldSpec, b: &Matrix, u: &[Elem], v: &[Elem]) -> Elem {
    let bv = b.mul_vec(v);
    u.iter()
        .zip(&bv)
        .fold(Elem::ZERO, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
}

/// Wall form of an isometry on `V_x = Im(x - I)`.
#[derive(Clone, Debug)]
pub struct WallForm {
    pub basis: Vec<Vector>,
    pub gram: Matrix,
    pub det: Elem,
}

/// Wall form in the reduced echelon basis of `Im(x - I)`.
///
/// For `u, v` in `V_x` the form is `w(u, v) = B(u', v)` with `(x - I) u' = u`; this does
/// not depend on the choice of `u'` because `B(ker(x - I), V_x) = 0` for an isometry.
pub fn wall_form(x: &Matrix, bilinear: &Matrix) -> Result<WallForm> {
    let xm = x.sub(&Matrix::identity(x.field(), x.n()))?;
    let basis = xm.image_basis();
    wall_form_in_basis(x, bilinear, &basis)
}

/// Wall form with respect to a caller-supplied basis of `Im(x - I)`.
pub fn wall_form_in_basis(x: &Matrix, bilinear: &Matrix, basis: &[Vector]) -> Result<WallForm> {
    let field = x.field().clone();
    let f = &*field;
    if f.characteristic() == 2 {
        return Err(Error::Precondition("the Wall form test needs odd characteristic".into()));
    }
    if bilinear.transpose() != *bilinear || bilinear.det().is_zero() {
        return Err(Error::Precondition("bilinear form must be symmetric and nondegenerate".into()));
    }
    if x.transpose().mul(bilinear).mul(x) != *bilinear {
        return Err(Error::Precondition("x does not preserve the bilinear form".into()));
    }
    let xm = x.sub(&Matrix::identity(&field, x.n()))?;
    let pre: Vec<Vector> = basis
        .iter()
        .map(|u| xm.solve(u))
        .collect::<Result<_>>()
        .map_err(|_| Error::Precondition("basis vector outside Im(x - I)".into()))?;
    let k = basis.len();
    let gram = Matrix::from_fn(&field, k, |i, j| bilinear_value(f, bilinear, &pre[i], &basis[j]));
    let det = gram.det();
    Ok(WallForm {
        basis: basis.to_vec(),
        gram,
        det,
    })
}

/// True iff the Wall-form determinant of `x` is a nonzero square, i.e. `x` has trivial
/// spinor norm and lies in Omega.
pub fn spinor_norm_in_omega(x: &Matrix, bilinear: &Matrix) -> Result<bool> {
    let w = wall_form(x, bilinear)?;
    if w.det.is_zero() {
        return Err(Error::DegenerateWallForm);
    }
    x.field().is_square(w.det)
}

/// The basis `{e1 - e2, e3 - e4, e5 - e6, -a(e1 + e2) + e5 + e6 + 2 e7}` of `Im(x - I)` for
/// the orthogonal 7-dimensional involution.
pub fn orthogonal_wall_basis(f: &FieldRef, a: Elem) -> Vec<Vector> {
    let (o, l, m) = (Elem::ZERO, Elem::ONE, f.from_int(-1));
    let na = f.neg(a);
    vec![
        vec![l, m, o, o, o, o, o],
        vec![o, o, l, m, o, o, o],
        vec![o, o, o, o, l, m, o],
        vec![na, na, o, o, l, l, f.from_int(2)],
    ]
}

/// The 4x4 Wall Gram matrix in [`orthogonal_wall_basis`], in closed form.
pub fn orthogonal_wall_gram(f: &FieldRef, a: Elem) -> Matrix {
    let k = |v: i64| f.from_int(v);
    let two_a = f.add(a, a);
    let a2 = f.mul(a, a);
    let c03 = f.sub(k(4), f.mul(k(4), a)); // 4 - 4a
    let c13 = f.sub(k(4), two_a); // 4 - 2a
    let c23 = f.sub(f.add(a2, a2), two_a); // 2a^2 - 2a
    let c33 = f.sub(f.sub(f.mul(k(4), a), k(4)), f.add(a2, a2)); // 4a - 4 - 2a^2
    let o = Elem::ZERO;
    Matrix::from_rows(
        f,
        vec![
            vec![k(-4), o, two_a, c03],
            vec![o, f.neg(two_a), o, c13],
            vec![two_a, o, k(-4), c23],
            vec![c03, c13, c23, c33],
        ],
    )
    .expect("square")
}
