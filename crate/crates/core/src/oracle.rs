//! Brute-force verifiers and seeded instance generation, independent of
//! Groebner bases.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::polyring::{monomials_of_degree, Monomial, MonomialOrder, PolyRing, Polynomial, Ring, RingExt};
use crate::scalar::{Field, Scalar};

/// Degree-`d` multiples of the generators written in the monomial basis.
#[derive(Debug, Clone)]
pub struct GradedSlice {
    pub degree: u32,
    pub basis: Vec<Monomial>,
    pub rows: Vec<Vec<Scalar>>,
}

impl GradedSlice {
    pub fn new(ideal: &Ideal, d: u32) -> Result<GradedSlice> {
        let ring = ideal.ring();
        let basis = monomials_of_degree(ring.nvars(), d);
        let one = ring.field().one();
        let mut rows = Vec::new();
        for g in ideal.gens().iter().filter(|g| !g.is_zero()) {
            if !g.is_homogeneous() {
                return Err(Error::NotHomogeneous);
            }
            let dg = g.total_degree();
            if dg > d {
                continue;
            }
            for m in monomials_of_degree(ring.nvars(), d - dg) {
                rows.push(coordinates(&g.mul_term(&m, &one), &basis));
            }
        }
        Ok(GradedSlice { degree: d, basis, rows })
    }

    /// Whether `v` lies in the row span, by exact elimination.
    pub fn spans(&self, field: &Field, v: Vec<Scalar>) -> bool {
        let mut echelon: Vec<(usize, Vec<Scalar>)> = Vec::new();
        for row in &self.rows {
            if let Some(r) = reduce_against(field, &echelon, row.clone()) {
                echelon.push(r);
            }
        }
        reduce_against(field, &echelon, v).is_none()
    }
}

fn coordinates(f: &Polynomial, basis: &[Monomial]) -> Vec<Scalar> {
    let zero = f.field().zero();
    let mut v = vec![zero; basis.len()];
    for (m, c) in f.terms() {
        let i = basis.iter().position(|b| b == m).expect("homogeneous of matching degree");
        v[i] = c.clone();
    }
    v
}

/// Reduces `v` by pivot rows; returns the new normalized pivot row, or `None` if `v` reduces to zero.
fn reduce_against(field: &Field, echelon: &[(usize, Vec<Scalar>)], mut v: Vec<Scalar>) -> Option<(usize, Vec<Scalar>)> {
    for (pivot, row) in echelon {
        if !v[*pivot].is_zero() {
            let c = v[*pivot].clone();
            for (a, b) in v.iter_mut().zip(row) {
                if !b.is_zero() {
                    *a = field.sub(a, &field.mul(&c, b));
                }
            }
        }
    }
    let pivot = v.iter().position(|a| !a.is_zero())?;
    let inv = field.inv(&v[pivot]).expect("nonzero pivot");
    let v = v.iter().map(|a| field.mul(a, &inv)).collect();
    Some((pivot, v))
}

/// Membership of a homogeneous `f` of degree `d` in a homogeneous ideal by linear algebra.
pub fn linalg_membership(f: &Polynomial, ideal: &Ideal, d: u32) -> Result<bool> {
    if !f.is_homogeneous() || (!f.is_zero() && f.total_degree() != d) {
        return Err(Error::NotHomogeneous);
    }
    let slice = GradedSlice::new(ideal, d)?;
    Ok(slice.spans(f.field(), coordinates(f, &slice.basis)))
}

/// Some generator divides `m`.
pub fn monomial_membership_bruteforce(m: &Monomial, gens: &[Monomial]) -> bool {
    gens.iter().any(|g| g.divides(m))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Profile {
    pub p: u64,
    pub nvars: usize,
    pub max_degree: u32,
    pub ngens: usize,
    pub nideals: usize,
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn var_names(n: usize) -> Vec<String> {
    const NAMES: [&str; 6] = ["x", "y", "z", "w", "s", "t"];
    (0..n).map(|i| NAMES.get(i).map_or_else(|| format!("x{i}"), |s| s.to_string())).collect()
}

pub fn random_ring(p: u64, nvars: usize) -> Result<Ring> {
    PolyRing::new(Field::prime(p)?, var_names(nvars), MonomialOrder::GrevLex)
}

/// A random homogeneous polynomial of degree `d` with at most `terms` terms.
pub fn random_homogeneous<R: Rng>(rng: &mut R, ring: &Ring, d: u32, terms: usize) -> Polynomial {
    let p = ring.field().characteristic();
    let monos = monomials_of_degree(ring.nvars(), d);
    let k = rng.gen_range(1..=terms.max(1));
    let picked = (0..k)
        .map(|_| {
            let m = monos[rng.gen_range(0..monos.len())].clone();
            (m, ring.field().from_int(rng.gen_range(1..p) as i64))
        })
        .collect();
    Polynomial::from_terms(ring, picked)
}

/// A random polynomial of degree at most `max_degree`.
pub fn random_polynomial<R: Rng>(rng: &mut R, ring: &Ring, max_degree: u32, terms: usize) -> Polynomial {
    let mut f = ring.zero();
    for _ in 0..terms {
        let d = rng.gen_range(0..=max_degree);
        f = &f + &random_homogeneous(rng, ring, d, 1);
    }
    f
}

/// A random monomial of degree between 1 and `max_degree`.
pub fn random_monomial<R: Rng>(rng: &mut R, nvars: usize, max_degree: u32) -> Monomial {
    let d = rng.gen_range(1..=max_degree);
    let monos = monomials_of_degree(nvars, d);
    monos[rng.gen_range(0..monos.len())].clone()
}

/// `(x_1^a_1, ..., x_n^a_n)` with `1 ≤ a_i ≤ max_exp`.
pub fn random_monomial_parameter_ideal<R: Rng>(rng: &mut R, ring: &Ring, max_exp: u32) -> Ideal {
    let gens = (0..ring.nvars()).map(|i| ring.var(i).pow(rng.gen_range(1..=max_exp))).collect();
    Ideal::new(ring, gens).expect("same ring")
}

/// Nonzero proper ideals, reproducible from the seed.
pub fn random_instance(seed: u64, profile: Profile) -> Result<(Ring, Vec<Ideal>)> {
    let ring = random_ring(profile.p, profile.nvars)?;
    let mut rng = rng(seed);
    let mut ideals = Vec::new();
    while ideals.len() < profile.nideals.max(1) {
        let gens: Vec<Polynomial> = (0..profile.ngens.max(1))
            .map(|_| {
                let d = rng.gen_range(1..=profile.max_degree.max(1));
                random_homogeneous(&mut rng, &ring, d, 3)
            })
            .collect();
        let ideal = Ideal::new(&ring, gens)?;
        if !ideal.is_zero() && !ideal.is_unit()? {
            ideals.push(ideal);
        }
    }
    Ok((ring, ideals))
}
