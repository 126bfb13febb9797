//! Smith normal form of `tI - A` over GF(q)[t].

use crate::field::Elem;
use crate::matrix::Matrix;
use crate::poly::Poly;

/// Diagonal of the Smith normal form of a square polynomial matrix (monic, each entry
/// dividing the next; zero entries last).
pub fn smith_diagonal(mut m: Vec<Vec<Poly>>) -> Vec<Poly> {
    let n = m.len();
    for k in 0..n {
        loop {
            // Pivot: nonzero entry of least degree in the trailing block.
            let mut best: Option<(usize, usize, usize)> = None;
            for (i, row) in m.iter().enumerate().skip(k) {
                for (j, e) in row.iter().enumerate().skip(k) {
                    if let Some(d) = e.degree() {
                        if best.is_none_or(|(_, _, bd)| d < bd) {
                            best = Some((i, j, d));
                        }
                    }
                }
            }
            let Some((pi, pj, _)) = best else {
                // Trailing block is zero.
                return finish(m);
            };
            m.swap(k, pi);
            for row in m.iter_mut() {
                row.swap(k, pj);
            }
            let pivot = m[k][k].clone();
            let mut clean = true;
            for i in k + 1..n {
                if m[i][k].is_zero() {
                    continue;
                }
                let (q, r) = m[i][k].divmod(&pivot).expect("pivot is nonzero");
                for j in k..n {
                    let t = m[k][j].mul(&q);
                    m[i][j] = m[i][j].sub(&t);
                }
                clean &= r.is_zero();
            }
            for j in k + 1..n {
                if m[k][j].is_zero() {
                    continue;
                }
                let (q, r) = m[k][j].divmod(&pivot).expect("pivot is nonzero");
                for row in m.iter_mut().skip(k) {
                    let t = row[k].mul(&q);
                    row[j] = row[j].sub(&t);
                }
                clean &= r.is_zero();
            }
            if !clean {
                continue;
            }
            // Row and column k are cleared; the pivot must divide the trailing block.
            let offender = (k + 1..n).find(|&i| (k + 1..n).any(|j| !pivot.divides(&m[i][j])));
            match offender {
                Some(i) => {
                    for j in k..n {
                        let t = m[i][j].clone();
                        m[k][j] = m[k][j].add(&t);
                    }
                }
                None => break,
            }
        }
    }
    finish(m)
}

fn finish(m: Vec<Vec<Poly>>) -> Vec<Poly> {
    m.iter().enumerate().map(|(i, row)| row[i].monic()).collect()
}

/// Nonconstant invariant factors of `A`.
pub fn invariant_factors(a: &Matrix) -> Vec<Poly> {
    let f = a.field();
    let n = a.n();
    let m: Vec<Vec<Poly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = f.neg(a.get(i, j));
                    if i == j {
                        Poly::new(f, vec![c, Elem::ONE])
                    } else {
                        Poly::constant(f, c)
                    }
                })
                .collect()
        })
        .collect();
    smith_diagonal(m)
        .into_iter()
        .filter(|p| p.degree().is_some_and(|d| d > 0))
        .collect()
}
