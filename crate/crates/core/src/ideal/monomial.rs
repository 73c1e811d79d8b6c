//! Monomial ideal combinatorics: dimension via independent variable sets and
//! irreducible decomposition into ideals generated by pure powers.

use super::Ideal;
use crate::error::{Error, Result};
use crate::polyring::{Monomial, Ring, RingExt};

fn support_mask(m: &Monomial) -> u64 {
    m.support().fold(0u64, |acc, i| acc | (1 << i))
}

/// Size of a maximal set of variables no subset of which supports a generator.
pub fn dimension_of_monomial_quotient(nvars: usize, gens: &[Monomial]) -> usize {
    assert!(nvars < 64, "too many variables for subset search");
    let masks: Vec<u64> = gens.iter().map(support_mask).collect();
    let mut best = 0;
    for set in 0u64..(1u64 << nvars) {
        let size = set.count_ones() as usize;
        if size > best && masks.iter().all(|&g| g & !set != 0) {
            best = size;
        }
    }
    best
}

/// Removes generators divisible by another generator; sorts the rest.
pub fn minimal_generators(gens: &[Monomial]) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = Vec::new();
    for (i, m) in gens.iter().enumerate() {
        let redundant = gens.iter().enumerate().any(|(j, g)| {
            (j != i) && g.divides(m) && (g != m || j < i)
        });
        if !redundant {
            out.push(m.clone());
        }
    }
    out.sort();
    out.dedup();
    out
}

pub fn monomial_ideal_contains(gens: &[Monomial], m: &Monomial) -> bool {
    gens.iter().any(|g| g.divides(m))
}

fn contains_ideal(big: &[Monomial], small: &[Monomial]) -> bool {
    small.iter().all(|m| monomial_ideal_contains(big, m))
}

fn split(gens: Vec<Monomial>, out: &mut Vec<Vec<Monomial>>) {
    let gens = minimal_generators(&gens);
    let mixed = gens.iter().find(|m| m.support().nth(1).is_some()).cloned();
    match mixed {
        None => out.push(gens),
        Some(m) => {
            let i = m.support().next().expect("nonconstant");
            let a = m.exps()[i];
            let mut pure = vec![0; m.nvars()];
            pure[i] = a;
            let pure = Monomial::new(pure);
            let rest = pure.quotient_of(&m).expect("divides");
            let mut left = gens.clone();
            left.push(pure);
            split(left, out);
            let mut right = gens;
            right.push(rest);
            split(right, out);
        }
    }
}

/// Irredundant irreducible decomposition; each component is a list of pure powers.
pub fn irreducible_components(gens: &[Monomial]) -> Vec<Vec<Monomial>> {
    let mut raw = Vec::new();
    split(gens.to_vec(), &mut raw);
    raw.sort();
    raw.dedup();
    let mut kept: Vec<Vec<Monomial>> = Vec::new();
    for (i, c) in raw.iter().enumerate() {
        let redundant = raw.iter().enumerate().any(|(j, d)| j != i && contains_ideal(c, d));
        if !redundant {
            kept.push(c.clone());
        }
    }
    kept
}

/// lcm-based intersection of monomial ideals.
pub fn intersect_monomial(a: &[Monomial], b: &[Monomial]) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(x.lcm(y));
        }
    }
    minimal_generators(&out)
}

pub(crate) fn monomials_of(ideal: &Ideal) -> Result<Vec<Monomial>> {
    ideal
        .gens()
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| if g.is_monomial() { Ok(g.terms()[0].0.clone()) } else { Err(Error::NotMonomial) })
        .collect()
}

pub(crate) fn ideal_of(ring: &Ring, gens: &[Monomial]) -> Ideal {
    let one = ring.field().one();
    Ideal::from_gens(ring, gens.iter().map(|m| ring.monomial(m.clone(), one.clone())).collect())
}

/// Writes a monomial ideal as an irredundant intersection of ideals generated
/// by pure powers of variables.
pub fn monomial_irreducible_decomposition(ideal: &Ideal) -> Result<Vec<Ideal>> {
    let gens = monomials_of(ideal)?;
    Ok(irreducible_components(&gens).iter().map(|c| ideal_of(ideal.ring(), c)).collect())
}
