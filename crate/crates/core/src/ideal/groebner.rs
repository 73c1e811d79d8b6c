//! Buchberger's algorithm with the Gebauer–Möller pair update (coprime and
//! chain criteria) and the normal selection strategy.

use std::collections::BTreeSet;

use crate::budget::Budget;
use crate::error::Result;
use crate::polyring::{Monomial, Polynomial, Ring, RingExt};

/// A reduced Groebner basis: monic, interreduced, sorted by ascending leading monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Ring,
    polys: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.polys.iter().any(|g| g.is_constant() && !g.is_zero())
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys.iter().map(|g| g.leading_monomial().expect("nonzero").clone()).collect()
    }

    /// Remainder of `f` on full division by the basis.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let f = f.reorder(&self.ring);
        reduce_full(&f, self.polys.iter())
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }
}

fn find_reducer<'a>(m: &Monomial, basis: impl Iterator<Item = &'a Polynomial>) -> Option<(&'a Polynomial, Monomial)> {
    basis
        .filter_map(|g| {
            let lm = g.leading_monomial()?;
            lm.quotient_of(m).map(|q| (g, q))
        })
        .next()
}

/// Full reduction by monic divisors.
pub(crate) fn reduce_full<'a, I>(f: &Polynomial, basis: I) -> Polynomial
where
    I: Iterator<Item = &'a Polynomial> + Clone,
{
    let ring = f.ring().clone();
    let mut rest = f.clone();
    let mut remainder = Vec::new();
    while let Some((m, c)) = rest.leading_term().cloned() {
        match find_reducer(&m, basis.clone()) {
            Some((g, q)) => {
                let lc = g.leading_coefficient().expect("nonzero");
                let c = if lc.is_one() { c } else { ring.field().div(&c, lc).expect("nonzero") };
                rest = &rest - &g.mul_term(&q, &c);
            }
            None => {
                remainder.push((m.clone(), c.clone()));
                rest = &rest - &ring.monomial(m, c);
            }
        }
    }
    Polynomial::from_terms(&ring, remainder)
}

fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (fm, gm) = (f.leading_monomial().expect("nonzero"), g.leading_monomial().expect("nonzero"));
    let lcm = fm.lcm(gm);
    let one = f.field().one();
    let a = f.mul_term(&fm.quotient_of(&lcm).expect("divides"), &one);
    let b = g.mul_term(&gm.quotient_of(&lcm).expect("divides"), &one);
    &a - &b
}

struct Builder {
    polys: Vec<Polynomial>,
    lms: Vec<Monomial>,
    active: Vec<bool>,
    /// (lcm degree, i, j) with i < j
    pairs: BTreeSet<(u32, usize, usize)>,
    budget: Budget,
}

impl Builder {
    fn active_polys(&self) -> impl Iterator<Item = &Polynomial> + Clone {
        self.polys.iter().zip(self.active.iter()).filter(|(_, &a)| a).map(|(p, _)| p)
    }

    fn insert(&mut self, h: Polynomial) -> Result<()> {
        self.budget.check(self.polys.len() + 1, h.total_degree())?;
        let h_idx = self.polys.len();
        let h_lm = h.leading_monomial().expect("nonzero").clone();
        self.polys.push(h);
        self.lms.push(h_lm.clone());
        self.active.push(false);

        let cands: Vec<usize> = (0..h_idx).filter(|&g| self.active[g]).collect();
        let lcm_with_h: Vec<Monomial> = cands.iter().map(|&g| h_lm.lcm(&self.lms[g])).collect();
        let mut kept: Vec<usize> = Vec::new();
        for k in 0..cands.len() {
            let g = cands[k];
            let coprime = h_lm.is_coprime(&self.lms[g]);
            let dominated = lcm_with_h[k + 1..].iter().any(|l| l.divides(&lcm_with_h[k]))
                || kept.iter().any(|&kk| lcm_with_h[kk].divides(&lcm_with_h[k]));
            if coprime || !dominated {
                kept.push(k);
            }
        }
        let new_pairs: Vec<usize> = kept
            .into_iter()
            .filter(|&k| !h_lm.is_coprime(&self.lms[cands[k]]))
            .map(|k| cands[k])
            .collect();

        let lms = &self.lms;
        self.pairs.retain(|&(_, i, j)| {
            let l = lms[i].lcm(&lms[j]);
            !(h_lm.divides(&l) && lms[i].lcm(&h_lm) != l && h_lm.lcm(&lms[j]) != l)
        });
        for g in new_pairs {
            let deg = self.lms[g].lcm(&h_lm).degree();
            self.pairs.insert((deg, g, h_idx));
        }
        for g in 0..h_idx {
            if self.active[g] && h_lm.divides(&self.lms[g]) {
                self.active[g] = false;
            }
        }
        self.active[h_idx] = true;
        Ok(())
    }
}

/// Reduced Groebner basis of the ideal generated by `gens` in `ring`'s order.
pub fn buchberger(ring: &Ring, gens: &[Polynomial], budget: Budget) -> Result<GroebnerBasis> {
    let mut b = Builder { polys: Vec::new(), lms: Vec::new(), active: Vec::new(), pairs: BTreeSet::new(), budget };
    for g in gens {
        let g = g.reorder(ring);
        let h = reduce_full(&g, b.active_polys());
        if !h.is_zero() {
            if h.is_constant() {
                return Ok(GroebnerBasis { ring: ring.clone(), polys: vec![ring.one()] });
            }
            b.insert(h.monic())?;
        }
    }
    while let Some((_, i, j)) = b.pairs.pop_first() {
        let s = s_polynomial(&b.polys[i], &b.polys[j]);
        let h = reduce_full(&s, b.active_polys());
        if !h.is_zero() {
            if h.is_constant() {
                return Ok(GroebnerBasis { ring: ring.clone(), polys: vec![ring.one()] });
            }
            b.insert(h.monic())?;
        }
    }
    let minimal: Vec<Polynomial> = b.active_polys().cloned().collect();
    let mut reduced: Vec<Polynomial> = minimal
        .iter()
        .enumerate()
        .map(|(k, g)| {
            let others = minimal.iter().enumerate().filter(move |(kk, _)| *kk != k).map(|(_, p)| p);
            reduce_full(g, others).monic()
        })
        .collect();
    let order = ring.order();
    reduced.sort_by(|a, b| {
        order.compare(a.leading_monomial().expect("nonzero"), b.leading_monomial().expect("nonzero"))
    });
    Ok(GroebnerBasis { ring: ring.clone(), polys: reduced })
}

/// Every S-polynomial of the basis reduces to zero (Buchberger's criterion).
pub fn satisfies_buchberger_criterion(gb: &GroebnerBasis) -> bool {
    let polys = gb.polys();
    for i in 0..polys.len() {
        for j in i + 1..polys.len() {
            let s = s_polynomial(&polys[i], &polys[j]);
            if !reduce_full(&s, polys.iter()).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Leading coefficients one; no term of a member divisible by another member's leading monomial.
pub fn is_reduced(gb: &GroebnerBasis) -> bool {
    let lms = gb.leading_monomials();
    gb.polys().iter().enumerate().all(|(i, g)| {
        g.leading_coefficient().is_some_and(|c| c.is_one())
            && g.terms().iter().all(|(m, _)| {
                lms.iter().enumerate().all(|(j, lm)| j == i || !lm.divides(m))
            })
    })
}
