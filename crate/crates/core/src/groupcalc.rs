//! Group orders: a randomized Schreier-Sims engine acting on nonzero vectors, a brute-force
//! enumerator for small groups, and the classical order formulas.

use std::collections::HashSet;
use std::hash::Hash;

use num_bigint::BigUint;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{gcd_u64, prime_power, Elem, FieldRef};
use crate::generators::Family;
use crate::linalg::Vector;
use crate::matrix::{BoundedOrder, Matrix};

pub const DEFAULT_BUDGET: u64 = 1_000_000;
pub const DEFAULT_VERIFY_ROUNDS: usize = 64;
const DEFAULT_STOP_AFTER: usize = 40;
const MAX_ATTEMPTS: usize = 4;

const ABSENT: u16 = u16::MAX;
const ROOT: u16 = u16::MAX - 1;

#[derive(Clone, Copy, Debug)]
pub struct BsgsOptions {
    /// Largest admissible number of points `q^n - 1`.
    pub budget: u64,
    /// Fresh random elements sifted after the main loop.
    pub verify_rounds: usize,
    /// Consecutive trivial sifts that end the main loop.
    pub stop_after: usize,
}

impl Default for BsgsOptions {
    fn default() -> Self {
        BsgsOptions {
            budget: DEFAULT_BUDGET,
            verify_rounds: DEFAULT_VERIFY_ROUNDS,
            stop_after: DEFAULT_STOP_AFTER,
        }
    }
}

/// Vectors of `F_q^n` encoded as `sum_i code(v_i) q^i`.
#[derive(Clone, Debug)]
struct Codec {
    q: u32,
    n: usize,
}

impl Codec {
    #[inline]
    fn decode(&self, mut pt: u32, out: &mut [Elem]) {
        for e in out.iter_mut().take(self.n) {
            *e = Elem((pt % self.q) as u16);
            pt /= self.q;
        }
    }

    #[inline]
    fn encode(&self, v: &[Elem]) -> u32 {
        v[..self.n].iter().rev().fold(0, |acc, e| acc * self.q + e.code())
    }
}

#[derive(Clone, Debug)]
struct Level {
    point: u32,
    /// Indices into the strong generator pool.
    gens: Vec<usize>,
    /// Schreier vector: local generator index that reached each point.
    label: Vec<u16>,
    orbit: Vec<u32>,
}

/// Base and strong generating set of a matrix group acting on nonzero vectors.
#[derive(Clone, Debug)]
pub struct StabChain {
    field: FieldRef,
    n: usize,
    codec: Codec,
    pool: Vec<(Matrix, Matrix)>,
    levels: Vec<Level>,
    sifts: u64,
}

/// Deterministic summary of a chain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainStats {
    pub base: Vec<Vec<String>>,
    pub orbit_sizes: Vec<usize>,
    pub strong_generators: usize,
    pub sifts: u64,
}

impl StabChain {
    fn empty(field: &FieldRef, n: usize) -> Self {
        StabChain {
            field: field.clone(),
            n,
            codec: Codec {
                q: field.order(),
                n,
            },
            pool: Vec::new(),
            levels: Vec::new(),
            sifts: 0,
        }
    }

    /// Product of the orbit lengths.
    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    pub fn base(&self) -> Vec<Vector> {
        let mut buf = vec![Elem::ZERO; self.n];
        self.levels
            .iter()
            .map(|l| {
                self.codec.decode(l.point, &mut buf);
                buf.clone()
            })
            .collect()
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn strong_generators(&self) -> impl Iterator<Item = &Matrix> {
        self.pool.iter().map(|(g, _)| g)
    }

    pub fn stats(&self) -> ChainStats {
        ChainStats {
            base: self
                .base()
                .iter()
                .map(|v| v.iter().map(|&e| self.field.format_elem(e)).collect())
                .collect(),
            orbit_sizes: self.orbit_sizes(),
            strong_generators: self.pool.len(),
            sifts: self.sifts,
        }
    }

    #[inline]
    fn act(&self, m: &Matrix, pt: u32) -> u32 {
        let f = &*self.field;
        let n = self.n;
        let mut v = [Elem::ZERO; 32];
        let mut w = [Elem::ZERO; 32];
        self.codec.decode(pt, &mut v);
        let data = m.data();
        for i in 0..n {
            let row = &data[i * n..(i + 1) * n];
            let mut acc = Elem::ZERO;
            for (a, b) in row.iter().zip(&v[..n]) {
                if !a.is_zero() && !b.is_zero() {
                    acc = f.add(acc, f.mul(*a, *b));
                }
            }
            w[i] = acc;
        }
        self.codec.encode(&w)
    }

    /// Residue of `g` after sifting, and the level where sifting stopped.
    fn sift(&mut self, g: &Matrix) -> (Matrix, usize) {
        self.sifts += 1;
        let mut g = g.clone();
        for (li, level) in self.levels.iter().enumerate() {
            let mut pt = self.act(&g, level.point);
            if level.label[pt as usize] == ABSENT {
                return (g, li);
            }
            while pt != level.point {
                let s = level.gens[level.label[pt as usize] as usize];
                let inv = &self.pool[s].1;
                g = inv.mul(&g);
                pt = self.act(inv, pt);
            }
        }
        (g, self.levels.len())
    }

    /// Whether `g` lies in the group described by the chain.
    pub fn contains(&mut self, g: &Matrix) -> bool {
        g.n() == self.n && self.sift(g).0.is_identity()
    }

    fn add_generator(&mut self, h: Matrix, depth: usize) -> Result<()> {
        let inv = h.inverse()?;
        let id = self.pool.len();
        self.pool.push((h, inv));
        if depth == self.levels.len() {
            let h = &self.pool[id].0;
            let k = (0..self.n)
                .find(|&k| h.get(k, k) != Elem::ONE || (0..self.n).any(|i| i != k && !h.get(i, k).is_zero()))
                .expect("a nontrivial residue moves some basis vector");
            let point = self.codec.q.pow(k as u32);
            let mut label = vec![ABSENT; self.codec.q.pow(self.n as u32) as usize];
            label[point as usize] = ROOT;
            self.levels.push(Level {
                point,
                gens: Vec::new(),
                label,
                orbit: vec![point],
            });
        }
        for li in 0..=depth {
            self.extend_orbit(li, id);
        }
        Ok(())
    }

    fn extend_orbit(&mut self, li: usize, gen_id: usize) {
        let mut level = std::mem::replace(
            &mut self.levels[li],
            Level {
                point: 0,
                gens: Vec::new(),
                label: Vec::new(),
                orbit: Vec::new(),
            },
        );
        let local = level.gens.len();
        level.gens.push(gen_id);
        let old = level.orbit.len();
        let g = &self.pool[gen_id].0;
        for i in 0..old {
            let im = self.act(g, level.orbit[i]);
            if level.label[im as usize] == ABSENT {
                level.label[im as usize] = local as u16;
                level.orbit.push(im);
            }
        }
        let mut i = old;
        while i < level.orbit.len() {
            let pt = level.orbit[i];
            for (k, &gid) in level.gens.iter().enumerate() {
                let im = self.act(&self.pool[gid].0, pt);
                if level.label[im as usize] == ABSENT {
                    level.label[im as usize] = k as u16;
                    level.orbit.push(im);
                }
            }
            i += 1;
        }
        self.levels[li] = level;
    }

    /// Sifts `g` and extends the chain with its residue; true if the chain grew.
    fn absorb(&mut self, g: &Matrix) -> Result<bool> {
        let (h, depth) = self.sift(g);
        if h.is_identity() {
            return Ok(false);
        }
        self.add_generator(h, depth)?;
        Ok(true)
    }
}

/// Product-replacement random element generator.
struct RandomWords {
    state: Vec<Matrix>,
    acc: Matrix,
    rng: ChaCha8Rng,
}

impl RandomWords {
    fn new(gens: &[Matrix], seed: u64) -> Self {
        let mut state = Vec::new();
        while state.len() < 10.max(gens.len()) {
            state.extend(gens.iter().cloned());
        }
        let acc = Matrix::identity(gens[0].field(), gens[0].n());
        let mut rw = RandomWords {
            state,
            acc,
            rng: ChaCha8Rng::seed_from_u64(seed),
        };
        for _ in 0..60 {
            rw.next();
        }
        rw
    }

    fn next(&mut self) -> Matrix {
        let len = self.state.len();
        let i = self.rng.gen_range(0..len);
        let mut j = self.rng.gen_range(0..len - 1);
        if j >= i {
            j += 1;
        }
        self.state[i] = if self.rng.gen_bool(0.5) {
            self.state[i].mul(&self.state[j])
        } else {
            self.state[j].mul(&self.state[i])
        };
        self.acc = self.acc.mul(&self.state[i]);
        self.acc.clone()
    }
}

/// Randomized Schreier-Sims with a verification pass, deterministic in `seed`.
///
/// The returned order is the product of orbit lengths of the subgroups generated by the
/// strong generators, hence always a lower bound for the true group order.
pub fn bsgs(gens: &[Matrix], seed: u64, opts: &BsgsOptions) -> Result<StabChain> {
    let first = gens
        .first()
        .ok_or_else(|| Error::Precondition("at least one generator is required".into()))?;
    let (field, n) = (first.field().clone(), first.n());
    for g in gens {
        if g.n() != n || **g.field() != *field {
            return Err(Error::MixedFields);
        }
        if g.det().is_zero() {
            return Err(Error::Singular);
        }
    }
    let points = (field.order() as u64)
        .checked_pow(n as u32)
        .map(|v| v - 1)
        .unwrap_or(u64::MAX);
    if points > opts.budget || points >= u32::MAX as u64 || n > 32 {
        return Err(Error::BudgetExceeded {
            points,
            budget: opts.budget,
        });
    }
    let mut chain = StabChain::empty(&field, n);
    for g in gens {
        chain.absorb(g)?;
    }
    let mut words = RandomWords::new(gens, seed);
    let mut stop_after = opts.stop_after.max(1);
    for _ in 0..MAX_ATTEMPTS {
        let mut quiet = 0;
        while quiet < stop_after {
            let g = words.next();
            if chain.absorb(&g)? {
                quiet = 0;
            } else {
                quiet += 1;
            }
        }
        let mut clean = true;
        for _ in 0..opts.verify_rounds {
            let g = words.next();
            if chain.absorb(&g)? {
                clean = false;
            }
        }
        if clean {
            return Ok(chain);
        }
        stop_after *= 2;
    }
    Err(Error::VerificationFailed(MAX_ATTEMPTS))
}

/// Scalar matrices in the group described by `chain`.
pub fn center_order(chain: &mut StabChain) -> u64 {
    let field = chain.field.clone();
    let n = chain.n;
    field
        .nonzero_elements()
        .filter(|&c| chain.contains(&Matrix::scalar(&field, n, c)))
        .count() as u64
}

/// Outcome of a brute-force enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Enumeration {
    Count(u64),
    Exceeded(u64),
}

/// Counts `<gens>` by breadth-first closure, giving up above `cap` elements.
pub fn bfs_enumerate(gens: &[Matrix], cap: u64) -> Result<Enumeration> {
    let first = gens
        .first()
        .ok_or_else(|| Error::Precondition("at least one generator is required".into()))?;
    let q = first.field().order();
    let bits = 32 - (q - 1).leading_zeros().min(31);
    let n2 = first.n() * first.n();
    if n2 as u32 * bits <= 128 {
        let key = move |m: &Matrix| {
            m.data()
                .iter()
                .fold(0u128, |acc, e| (acc << bits) | e.code() as u128)
        };
        closure(gens, cap, key)
    } else {
        closure(gens, cap, |m: &Matrix| -> Box<[u16]> {
            m.data().iter().map(|e| e.code() as u16).collect()
        })
    }
}

fn closure<K: Hash + Eq>(gens: &[Matrix], cap: u64, key: impl Fn(&Matrix) -> K) -> Result<Enumeration> {
    let id = Matrix::identity(gens[0].field(), gens[0].n());
    let mut seen = HashSet::new();
    seen.insert(key(&id));
    let mut frontier = vec![id];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for m in &frontier {
            for g in gens {
                let h = m.mul(g);
                if seen.insert(key(&h)) {
                    if seen.len() as u64 > cap {
                        return Ok(Enumeration::Exceeded(cap));
                    }
                    next.push(h);
                }
            }
        }
        frontier = next;
    }
    Ok(Enumeration::Count(seen.len() as u64))
}

/// Least `k <= cap` with `A^k` scalar.
pub fn projective_order(a: &Matrix, cap: u64) -> Result<BoundedOrder> {
    a.projective_order(cap)
}

/// An order from a closed formula, tagged with the group it counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupOrder {
    pub value: BigUint,
    pub formula: String,
}

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

fn sp6_order(q: u64) -> BigUint {
    big(q).pow(9) * big(q * q - 1) * big(q.pow(4) - 1) * big(q.pow(6) - 1)
}

/// Order of the ambient classical group of `family` with parameter `q` (for the unitary
/// families the field is GF(q^2)).
pub fn classical_order(family: Family, q: u64) -> Result<GroupOrder> {
    let (p, _) = prime_power(q).ok_or_else(|| Error::Precondition(format!("{q} is not a prime power")))?;
    let odd = p != 2;
    let bad = |what: &str| Err(Error::Precondition(format!("{what} is not defined for q = {q}")));
    let (value, formula) = match family {
        Family::Sp6Even | Family::Sp6_3Intro => {
            if family == Family::Sp6Even && odd {
                return bad("sp6 with q even");
            }
            (sp6_order(q), format!("|Sp6({q})|"))
        }
        Family::Dim7Orth | Family::Om7_3Special | Family::Om7_5Special => {
            if !odd {
                return bad("Omega7");
            }
            (sp6_order(q) / big(2), format!("|Omega7({q})|"))
        }
        Family::Dim7Unit | Family::SU7_4Special => {
            let mut v = big(q).pow(21);
            for i in 2..=7u32 {
                let qi = big(q).pow(i);
                v *= if i % 2 == 0 { qi - big(1) } else { qi + big(1) };
            }
            (v, format!("|SU7({})|", q * q))
        }
        Family::SL7Variant => {
            let mut v = big(q).pow(21);
            for i in 2..=7u32 {
                v *= big(q).pow(i) - big(1);
            }
            (v, format!("|SL7({q})|"))
        }
    };
    Ok(GroupOrder { value, formula })
}

/// Order of the center of the ambient classical group.
pub fn classical_center_order(family: Family, q: u64) -> u64 {
    match family {
        Family::Sp6Even | Family::Sp6_3Intro => gcd_u64(2, q - 1),
        Family::Dim7Orth | Family::Om7_3Special | Family::Om7_5Special => 1,
        Family::Dim7Unit | Family::SU7_4Special => gcd_u64(7, q + 1),
        Family::SL7Variant => gcd_u64(7, q - 1),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    #[test]
    fn trivial_group() {
        let f = FieldSpec::prime(3).unwrap();
        let id = Matrix::identity(&f, 3);
        let chain = bsgs(std::slice::from_ref(&id), 1, &BsgsOptions::default()).unwrap();
        assert_eq!(chain.order(), BigUint::one());
        assert_eq!(bfs_enumerate(&[id], 10).unwrap(), Enumeration::Count(1));
    }

    #[test]
    fn gl2_of_three() {
        let f = FieldSpec::prime(3).unwrap();
        let a = Matrix::from_ints(&f, &[&[1, 1], &[0, 1]]);
        let b = Matrix::from_ints(&f, &[&[0, 1], &[-1, 0]]);
        let d = Matrix::from_ints(&f, &[&[-1, 0], &[0, 1]]);
        let chain = bsgs(&[a.clone(), b.clone(), d.clone()], 5, &BsgsOptions::default()).unwrap();
        assert_eq!(chain.order(), big(48));
        assert_eq!(bfs_enumerate(&[a, b, d], 100).unwrap(), Enumeration::Count(48));
    }

    #[test]
    fn formulas() {
        assert_eq!(classical_order(Family::Sp6Even, 2).unwrap().value, big(1_451_520));
        assert_eq!(classical_order(Family::Dim7Orth, 3).unwrap().value, big(4_585_351_680));
        assert!(classical_order(Family::Sp6Even, 3).is_err());
    }

    #[test]
    fn budget_is_enforced() {
        let f = FieldSpec::prime(5).unwrap();
        let id = Matrix::identity(&f, 7);
        let opts = BsgsOptions {
            budget: 1000,
            ..BsgsOptions::default()
        };
        assert!(matches!(bsgs(&[id], 0, &opts), Err(Error::BudgetExceeded { .. })));
    }
}
