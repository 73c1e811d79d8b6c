//! Ideals of polynomial rings and the operations every closure computation
//! reduces to: membership, sums, products, intersections, colons,
//! saturations, kernels of ring maps and Krull dimension.

pub mod groebner;
pub mod monomial;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

pub use groebner::{buchberger, is_reduced, satisfies_buchberger_criterion, GroebnerBasis};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::polyring::{Monomial, MonomialOrder, PolyRing, Polynomial, Ring, RingExt, RingMap};

type Slot = Arc<Mutex<Option<Arc<GroebnerBasis>>>>;

#[derive(Default)]
struct GbCache {
    slots: Mutex<HashMap<MonomialOrder, Slot>>,
}

/// Generators of an ideal plus a lazily filled Groebner basis per order.
///
/// Concurrent requests for the same order compute the basis once; the
/// cached value is immutable afterwards.
#[derive(Clone)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
    cache: Arc<GbCache>,
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{self}")
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl Ideal {
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Result<Ideal> {
        if gens.iter().any(|g| !PolyRing::same(g.ring(), ring)) {
            return Err(Error::RingMismatch);
        }
        Ok(Ideal { ring: ring.clone(), gens, cache: Arc::default() })
    }

    pub(crate) fn from_gens(ring: &Ring, gens: Vec<Polynomial>) -> Ideal {
        Ideal { ring: ring.clone(), gens, cache: Arc::default() }
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Self::from_gens(ring, Vec::new())
    }

    pub fn unit(ring: &Ring) -> Ideal {
        Self::from_gens(ring, vec![ring.one()])
    }

    /// The ideal generated by all ring variables.
    pub fn variables(ring: &Ring) -> Ideal {
        Self::from_gens(ring, (0..ring.nvars()).map(|i| ring.var(i)).collect())
    }

    pub fn parse(ring: &Ring, gens: &[&str]) -> Result<Ideal> {
        let gens = gens.iter().map(|s| ring.parse(s)).collect::<Result<Vec<_>>>()?;
        Ok(Self::from_gens(ring, gens))
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    fn check_ring(&self, other: &Ideal) -> Result<()> {
        if PolyRing::same(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// Reduced basis in the ring's own order.
    pub fn groebner_basis(&self) -> Result<Arc<GroebnerBasis>> {
        self.groebner_basis_in(self.ring.order())
    }

    pub fn groebner_basis_in(&self, order: MonomialOrder) -> Result<Arc<GroebnerBasis>> {
        let slot = {
            let mut slots = self.cache.slots.lock().expect("cache poisoned");
            slots.entry(order).or_default().clone()
        };
        let mut guard = slot.lock().expect("cache slot poisoned");
        if let Some(gb) = guard.as_ref() {
            return Ok(gb.clone());
        }
        let ring = if order == self.ring.order() { self.ring.clone() } else { self.ring.with_order(order) };
        let gb = Arc::new(buchberger(&ring, &self.gens, Budget::global())?);
        *guard = Some(gb.clone());
        Ok(gb)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        if !PolyRing::same(f.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        if f.is_zero() {
            return Ok(true);
        }
        Ok(self.groebner_basis()?.contains(f))
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        Ok(self.groebner_basis()?.normal_form(f))
    }

    pub fn is_subset_of(&self, other: &Ideal) -> Result<bool> {
        self.check_ring(other)?;
        for g in &self.gens {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality via reduced bases in the ring's order.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        self.check_ring(other)?;
        Ok(self.groebner_basis()?.polys() == other.groebner_basis()?.polys())
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.groebner_basis()?.is_unit())
    }

    pub fn is_zero(&self) -> bool {
        self.gens.iter().all(Polynomial::is_zero)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(Self::from_gens(&self.ring, gens))
    }

    pub fn with_extra(&self, extra: &[Polynomial]) -> Ideal {
        let mut gens = self.gens.clone();
        gens.extend(extra.iter().cloned());
        Self::from_gens(&self.ring, gens)
    }

    /// All pairwise products of generators.
    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for f in &self.gens {
            for g in &other.gens {
                let h = f * g;
                if !h.is_zero() {
                    gens.push(h);
                }
            }
        }
        Ok(Self::from_gens(&self.ring, gens))
    }

    pub fn power(&self, n: u32) -> Ideal {
        let mut acc = Ideal::unit(&self.ring);
        for _ in 0..n {
            acc = acc.product(self).expect("same ring");
        }
        acc
    }

    /// Ideal generated by the `p^e`-th powers of the generators.
    pub fn frobenius_power(&self, e: u32) -> Result<Ideal> {
        let gens = self.gens.iter().map(|g| g.frobenius_power(e)).collect::<Result<Vec<_>>>()?;
        Ok(Self::from_gens(&self.ring, gens))
    }

    /// Generators of the reduced basis as a fresh ideal.
    pub fn minimalized(&self) -> Result<Ideal> {
        let gb = self.groebner_basis()?;
        Ok(Self::from_gens(&self.ring, gb.polys().to_vec()))
    }

    /// `I ∩ J` by eliminating `t` from `t·I + (1 - t)·J`.
    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        let n = self.ring.nvars();
        let mut names = vec![fresh_name(&self.ring, "t")];
        names.extend(self.ring.vars().iter().cloned());
        let big = PolyRing::new(self.ring.field().clone(), names, MonomialOrder::Elimination(1))?;
        let shift: Vec<usize> = (1..=n).collect();
        let t = big.var(0);
        let one_minus_t = &big.one() - &t;
        let mut gens = Vec::new();
        for f in &self.gens {
            gens.push(&t * &f.embed(&big, &shift));
        }
        for g in &other.gens {
            gens.push(&one_minus_t * &g.embed(&big, &shift));
        }
        let eliminated = eliminate(&big, gens, 1)?;
        let back: Vec<usize> = std::iter::once(usize::MAX).chain(0..n).collect();
        Ok(Self::from_gens(&self.ring, eliminated.iter().map(|f| project(f, &self.ring, &back)).collect()))
    }

    /// `(I : g)` for a single element, as `(I ∩ (g)) / g`.
    pub fn colon_element(&self, g: &Polynomial) -> Result<Ideal> {
        if g.is_zero() {
            return Ok(Ideal::unit(&self.ring));
        }
        let principal = Self::from_gens(&self.ring, vec![g.clone()]);
        let meet = self.intersection(&principal)?;
        let gens = meet
            .gens
            .iter()
            .map(|h| h.exact_div(g).expect("elements of (g) are divisible by g"))
            .collect();
        Ok(Self::from_gens(&self.ring, gens))
    }

    /// `(I : J) = ⋂_g (I : g)` over the generators of `J`.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let mut acc = Ideal::unit(&self.ring);
        for g in other.gens.iter().filter(|g| !g.is_zero()) {
            let c = self.colon_element(g)?;
            acc = if acc.gens.len() == 1 && acc.gens[0].is_one() { c } else { acc.intersection(&c)?.minimalized()? };
        }
        Ok(acc)
    }

    /// Stable value of the chain `I : J^k`, detected by one-step stability.
    pub fn saturation(&self, other: &Ideal) -> Result<Ideal> {
        let mut cur = self.minimalized()?;
        loop {
            let next = cur.colon(other)?.minimalized()?;
            if next.equals(&cur)? {
                return Ok(next);
            }
            cur = next;
        }
    }

    /// Dimension of `ring / I` from a maximal set of variables independent
    /// modulo the leading-term ideal.
    pub fn krull_dimension(&self) -> Result<usize> {
        let gb = self.groebner_basis()?;
        if gb.is_unit() {
            return Err(Error::EmptyRing);
        }
        Ok(monomial::dimension_of_monomial_quotient(self.ring.nvars(), &gb.leading_monomials()))
    }

    /// True when `I + J` is primary to the ideal of all variables; false for the unit ideal.
    pub fn is_m_primary(&self, relations: &Ideal) -> Result<bool> {
        let total = self.sum(relations)?;
        match total.krull_dimension() {
            Ok(d) => Ok(d == 0),
            Err(Error::EmptyRing) => Ok(false),
            Err(e) => Err(e),
        }
    }

    /// Every generator is a single term.
    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(|g| g.is_zero() || g.is_monomial())
    }
}

pub(crate) fn fresh_name(ring: &Ring, base: &str) -> String {
    let taken = |s: &str| ring.vars().iter().any(|v| v == s) || ring.field().params().iter().any(|v| v == s);
    let mut name = format!("_{base}");
    let mut k = 0;
    while taken(&name) {
        k += 1;
        name = format!("_{base}{k}");
    }
    name
}

/// Reduced basis elements free of the first `k` variables, for a ring whose
/// order eliminates them.
pub(crate) fn eliminate(big: &Ring, gens: Vec<Polynomial>, k: usize) -> Result<Vec<Polynomial>> {
    let gb = buchberger(big, &gens, Budget::global())?;
    Ok(gb
        .polys()
        .iter()
        .filter(|g| g.terms().iter().all(|(m, _)| m.exps()[..k].iter().all(|&e| e == 0)))
        .cloned()
        .collect())
}

/// Maps a polynomial whose support avoids the dropped variables into `target`;
/// `back[i]` is the target index of variable `i` (or `usize::MAX` for dropped ones).
pub(crate) fn project(f: &Polynomial, target: &Ring, back: &[usize]) -> Polynomial {
    let n = target.nvars();
    let terms = f
        .terms()
        .iter()
        .map(|(m, c)| {
            let mut e = vec![0; n];
            for (i, &k) in m.exps().iter().enumerate() {
                if k > 0 {
                    e[back[i]] += k;
                }
            }
            (Monomial::new(e), c.clone())
        })
        .collect();
    Polynomial::from_terms(target, terms)
}

/// Kernel of `map` composed with the quotient by `target_relations`, via the
/// graph ideal and elimination of the target variables.
pub fn ring_map_kernel(map: &RingMap, target_relations: &Ideal) -> Result<Ideal> {
    use crate::polyring::CoefficientAction;
    let source = map.source();
    let target = map.target();
    if map.action() != CoefficientAction::Identity && !target.field().is_prime_field() {
        return Err(Error::NonPerfectCoefficients);
    }
    if !PolyRing::same(target_relations.ring(), target) {
        return Err(Error::RingMismatch);
    }
    let (m, n) = (target.nvars(), source.nvars());
    let mut names: Vec<String> = target.vars().iter().map(|v| format!("{v}'")).collect();
    names.extend(source.vars().iter().cloned());
    let big = PolyRing::new(target.field().clone(), names, MonomialOrder::Elimination(m))?;
    let target_idx: Vec<usize> = (0..m).collect();
    let source_idx: Vec<usize> = (m..m + n).collect();
    let mut gens: Vec<Polynomial> = target_relations.gens().iter().map(|g| g.embed(&big, &target_idx)).collect();
    for (i, img) in map.images().iter().enumerate() {
        gens.push(&big.var(source_idx[i]) - &img.embed(&big, &target_idx));
    }
    let kept = eliminate(&big, gens, m)?;
    let back: Vec<usize> = (0..m).map(|_| usize::MAX).chain(0..n).collect();
    let source_ring = source.clone();
    Ok(Ideal::from_gens(&source_ring, kept.iter().map(|f| project(f, &source_ring, &back)).collect()))
}
