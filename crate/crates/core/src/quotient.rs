//! Quotient rings `R = S/J`, ideals of `R` handled through their lifts to
//! `S`, parameter-theoretic predicates and presentations of subrings.
//!
//! Local rings are modeled by graded or affine quotients with maximal ideal
//! generated by the variables.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ideal::{GroebnerBasis, Ideal};
use crate::polyring::{monomials_of_degree, Monomial, MonomialOrder, PolyRing, Polynomial, Ring, RingExt, RingMap};

#[derive(Debug)]
pub struct RingPresentation {
    ambient: Ring,
    relations: Ideal,
    dim: usize,
}

pub type QuotientRing = Arc<RingPresentation>;

impl RingPresentation {
    /// `S / J`; rejects the unit ideal.
    pub fn new(ambient: &Ring, relations: Vec<Polynomial>) -> Result<QuotientRing> {
        let relations = Ideal::new(ambient, relations)?;
        let dim = match relations.krull_dimension() {
            Ok(d) => d,
            Err(Error::EmptyRing) => return Err(Error::UnitRelation),
            Err(e) => return Err(e),
        };
        Ok(Arc::new(RingPresentation { ambient: ambient.clone(), relations, dim }))
    }

    pub fn polynomial(ambient: &Ring) -> QuotientRing {
        Arc::new(RingPresentation {
            ambient: ambient.clone(),
            relations: Ideal::zero(ambient),
            dim: ambient.nvars(),
        })
    }

    pub fn parse(ambient: &Ring, relations: &[&str]) -> Result<QuotientRing> {
        let rels = relations.iter().map(|s| ambient.parse(s)).collect::<Result<Vec<_>>>()?;
        Self::new(ambient, rels)
    }

    pub fn ambient(&self) -> &Ring {
        &self.ambient
    }

    pub fn relations(&self) -> &Ideal {
        &self.relations
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_polynomial_ring(&self) -> bool {
        self.relations.is_zero()
    }

    /// The single nonzero relation, when `J` is principal as given.
    pub fn principal_relation(&self) -> Option<&Polynomial> {
        let nonzero: Vec<&Polynomial> = self.relations.gens().iter().filter(|g| !g.is_zero()).collect();
        match nonzero.as_slice() {
            [f] => Some(f),
            _ => None,
        }
    }

    /// Canonical representative modulo `J`.
    pub fn reduce(&self, f: &Polynomial) -> Result<Polynomial> {
        if self.is_polynomial_ring() {
            return Ok(f.clone());
        }
        self.relations.normal_form(f)
    }

    pub fn is_zero(&self, f: &Polynomial) -> Result<bool> {
        self.relations.contains(f)
    }

    pub fn element(&self, text: &str) -> Result<Polynomial> {
        self.ambient.parse(text)
    }
}

pub trait QuotientRingExt {
    fn ideal(&self, gens: Vec<Polynomial>) -> Result<QuotientIdeal>;
    fn ideal_str(&self, gens: &[&str]) -> Result<QuotientIdeal>;
    fn maximal_ideal(&self) -> QuotientIdeal;
    fn zero_ideal(&self) -> QuotientIdeal;
}

impl QuotientRingExt for QuotientRing {
    fn ideal(&self, gens: Vec<Polynomial>) -> Result<QuotientIdeal> {
        QuotientIdeal::new(self, gens)
    }

    fn ideal_str(&self, gens: &[&str]) -> Result<QuotientIdeal> {
        let gens = gens.iter().map(|s| self.ambient.parse(s)).collect::<Result<Vec<_>>>()?;
        QuotientIdeal::new(self, gens)
    }

    fn maximal_ideal(&self) -> QuotientIdeal {
        let gens = (0..self.ambient.nvars()).map(|i| self.ambient.var(i)).collect();
        QuotientIdeal::new(self, gens).expect("variables live in the ambient ring")
    }

    fn zero_ideal(&self) -> QuotientIdeal {
        QuotientIdeal::new(self, Vec::new()).expect("empty generating set")
    }
}

/// An ideal of `S/J`, stored as its generators in `S`; the lift adds `J`.
#[derive(Debug, Clone)]
pub struct QuotientIdeal {
    ring: QuotientRing,
    gens: Vec<Polynomial>,
    lift: Ideal,
}

impl QuotientIdeal {
    pub fn new(ring: &QuotientRing, gens: Vec<Polynomial>) -> Result<QuotientIdeal> {
        let lift = Ideal::new(&ring.ambient, gens.clone())?.sum(&ring.relations)?;
        Ok(QuotientIdeal { ring: ring.clone(), gens, lift })
    }

    /// Wraps a lift that already contains `J`; generators are taken from it.
    pub fn from_lift(ring: &QuotientRing, lift: Ideal) -> Result<QuotientIdeal> {
        if !PolyRing::same(lift.ring(), &ring.ambient) {
            return Err(Error::RingMismatch);
        }
        let lift = lift.sum(&ring.relations)?.minimalized()?;
        let mut gens = Vec::new();
        for g in lift.gens() {
            let r = ring.reduce(g)?;
            if !r.is_zero() {
                gens.push(r);
            }
        }
        Self::new(ring, gens)
    }

    pub fn ring(&self) -> &QuotientRing {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn lift(&self) -> &Ideal {
        &self.lift
    }

    fn check_ring(&self, other: &QuotientIdeal) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring)
            || (PolyRing::same(&self.ring.ambient, &other.ring.ambient)
                && self.ring.relations.equals(&other.ring.relations)?)
        {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        self.lift.contains(f)
    }

    pub fn equals(&self, other: &QuotientIdeal) -> Result<bool> {
        self.check_ring(other)?;
        self.lift.equals(&other.lift)
    }

    pub fn is_subset_of(&self, other: &QuotientIdeal) -> Result<bool> {
        self.check_ring(other)?;
        self.lift.is_subset_of(&other.lift)
    }

    pub fn is_proper(&self) -> Result<bool> {
        Ok(!self.lift.is_unit()?)
    }

    pub fn sum(&self, other: &QuotientIdeal) -> Result<QuotientIdeal> {
        self.check_ring(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Self::new(&self.ring, gens)
    }

    pub fn product(&self, other: &QuotientIdeal) -> Result<QuotientIdeal> {
        self.check_ring(other)?;
        let mut gens = Vec::new();
        for f in &self.gens {
            for g in &other.gens {
                let h = self.ring.reduce(&(f * g))?;
                if !h.is_zero() {
                    gens.push(h);
                }
            }
        }
        Self::new(&self.ring, gens)
    }

    pub fn power(&self, n: u32) -> Result<QuotientIdeal> {
        let mut acc = Self::new(&self.ring, vec![self.ring.ambient.one()])?;
        for _ in 0..n {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `(I : J)` in `R`, computed as `(I + J_R) : J` upstairs.
    pub fn colon(&self, other: &QuotientIdeal) -> Result<QuotientIdeal> {
        self.check_ring(other)?;
        let upstairs = self.lift.colon(&Ideal::new(&self.ring.ambient, other.gens.clone())?)?;
        Self::from_lift(&self.ring, upstairs)
    }

    pub fn colon_element(&self, g: &Polynomial) -> Result<QuotientIdeal> {
        Self::from_lift(&self.ring, self.lift.colon_element(g)?)
    }

    /// `(I : m^∞)` for the ideal of variables.
    pub fn saturation_by_maximal(&self) -> Result<QuotientIdeal> {
        let m = Ideal::variables(&self.ring.ambient);
        Self::from_lift(&self.ring, self.lift.saturation(&m)?)
    }

    /// Krull dimension of `R / I`.
    pub fn quotient_dimension(&self) -> Result<usize> {
        self.lift.krull_dimension()
    }

    pub fn is_m_primary(&self) -> Result<bool> {
        self.lift.is_m_primary(&Ideal::zero(&self.ring.ambient))
    }

    /// Ideal generated by the `p^e`-th powers of the generators.
    pub fn bracket_power(&self, e: u32) -> Result<QuotientIdeal> {
        let gens = self.gens.iter().map(|g| g.frobenius_power(e)).collect::<Result<Vec<_>>>()?;
        Self::new(&self.ring, gens)
    }

    /// Whether every generator is a monomial (after dropping zeros).
    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(|g| g.is_zero() || g.is_monomial())
    }
}

/// `((x_1..x_i) : x_{i+1}) = (x_1..x_i)` for every i, and the whole sequence generates a proper ideal.
pub fn is_regular_sequence(xs: &[Polynomial], ring: &QuotientRing) -> Result<bool> {
    let all = QuotientIdeal::new(ring, xs.to_vec())?;
    if !all.is_proper()? {
        return Ok(false);
    }
    for i in 0..xs.len() {
        let prefix = QuotientIdeal::new(ring, xs[..i].to_vec())?;
        if ring.is_zero(&xs[i])? {
            return Ok(false);
        }
        let colon = prefix.colon_element(&xs[i])?;
        if !colon.equals(&prefix)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Each colon `((x_1..x_i) : x_{i+1})` is contained in the saturation of
/// `(x_1..x_i)` by the maximal ideal, i.e. the colon module has finite length.
pub fn is_filter_regular_sequence(xs: &[Polynomial], ring: &QuotientRing) -> Result<bool> {
    for i in 0..xs.len() {
        let prefix = QuotientIdeal::new(ring, xs[..i].to_vec())?;
        let colon = prefix.colon_element(&xs[i])?;
        let sat = prefix.saturation_by_maximal()?;
        if !colon.is_subset_of(&sat)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `dim R/(x_1..x_i) = dim R - i` for each prefix of the given sequence.
pub fn is_system_of_parameters(xs: &[Polynomial], ring: &QuotientRing) -> Result<bool> {
    let d = ring.dim();
    if xs.len() > d {
        return Err(Error::TooManyElements { given: xs.len(), dim: d });
    }
    for i in 1..=xs.len() {
        let prefix = QuotientIdeal::new(ring, xs[..i].to_vec())?;
        match prefix.quotient_dimension() {
            Ok(k) if k == d - i => {}
            Ok(_) | Err(Error::EmptyRing) => return Ok(false),
            Err(e) => return Err(e),
        }
    }
    Ok(true)
}

/// A polynomial ring `T` mapping onto the subring generated by chosen
/// elements of `R`, with kernel `K`, so that `T/K` presents that subring.
#[derive(Debug)]
pub struct SubringPresentation {
    target: QuotientRing,
    generators: Vec<Polynomial>,
    presented: QuotientRing,
    map: RingMap,
    graph_ring: Ring,
    graph: Ideal,
}

impl SubringPresentation {
    pub fn target(&self) -> &QuotientRing {
        &self.target
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// `T/K`.
    pub fn presented(&self) -> &QuotientRing {
        &self.presented
    }

    pub fn kernel(&self) -> &Ideal {
        self.presented.relations()
    }

    pub fn map(&self) -> &RingMap {
        &self.map
    }

    /// Image in `R` of an element of `T`.
    pub fn image(&self, f: &Polynomial) -> Result<Polynomial> {
        self.target.reduce(&self.map.apply(f)?)
    }

    /// An element of `T` mapping to `f`, or `None` when `f` is outside the subring.
    pub fn preimage(&self, f: &Polynomial) -> Result<Option<Polynomial>> {
        let n = self.target.ambient().nvars();
        let t = self.presented.ambient().nvars();
        let idx: Vec<usize> = (0..n).collect();
        let nf = self.graph.groebner_basis()?.normal_form(&f.embed(&self.graph_ring, &idx));
        if nf.support_vars().iter().any(|&i| i < n) {
            return Ok(None);
        }
        let back: Vec<usize> = (0..n).map(|_| usize::MAX).chain(0..t).collect();
        Ok(Some(crate::ideal::project(&nf, self.presented.ambient(), &back)))
    }

    /// Basis of the graph ideal under the elimination order.
    pub fn graph_basis(&self) -> Result<Arc<GroebnerBasis>> {
        self.graph.groebner_basis()
    }
}

/// Presents the subring of `R` generated by `gens`; variables of `T` are
/// named by `names` (defaults `t0, t1, ...`).
pub fn subring_presentation(
    target: &QuotientRing,
    gens: Vec<Polynomial>,
    names: Option<Vec<String>>,
) -> Result<SubringPresentation> {
    let s = target.ambient();
    let k = gens.len();
    let names = match names {
        Some(ns) if ns.len() == k => ns,
        Some(ns) => return Err(Error::LengthMismatch(ns.len(), k)),
        None => (0..k).map(|i| format!("t{i}")).collect(),
    };
    let t_ring = PolyRing::new(s.field().clone(), names.clone(), MonomialOrder::GrevLex)?;
    let map = RingMap::new(&t_ring, s, gens.clone())?;

    let n = s.nvars();
    let mut big_names: Vec<String> = s.vars().to_vec();
    for name in &names {
        if big_names.contains(name) {
            return Err(Error::NameClash(name.clone()));
        }
        big_names.push(name.clone());
    }
    let graph_ring = PolyRing::new(s.field().clone(), big_names, MonomialOrder::Elimination(n))?;
    let s_idx: Vec<usize> = (0..n).collect();
    let mut graph_gens: Vec<Polynomial> =
        target.relations().gens().iter().map(|g| g.embed(&graph_ring, &s_idx)).collect();
    for (i, g) in gens.iter().enumerate() {
        graph_gens.push(&graph_ring.var(n + i) - &g.embed(&graph_ring, &s_idx));
    }
    let graph = Ideal::new(&graph_ring, graph_gens)?;
    let gb = graph.groebner_basis()?;
    let back: Vec<usize> = (0..n).map(|_| usize::MAX).chain(0..k).collect();
    let kernel: Vec<Polynomial> = gb
        .polys()
        .iter()
        .filter(|g| g.support_vars().iter().all(|&i| i >= n))
        .map(|g| crate::ideal::project(g, &t_ring, &back))
        .collect();
    let presented = RingPresentation::new(&t_ring, kernel)?;
    Ok(SubringPresentation { target: target.clone(), generators: gens, presented, map, graph_ring, graph })
}

/// Monomials of degree `d` that are standard modulo the relations.
pub fn standard_monomials_of_degree(ring: &QuotientRing, d: u32) -> Result<Vec<Monomial>> {
    let s = ring.ambient();
    let lms = if ring.is_polynomial_ring() {
        Vec::new()
    } else {
        ring.relations().groebner_basis()?.leading_monomials()
    };
    Ok(monomials_of_degree(s.nvars(), d).into_iter().filter(|m| !lms.iter().any(|lm| lm.divides(m))).collect())
}

/// The `d`-th Veronese subring, generated by the standard monomials of degree `d`.
pub fn veronese(ring: &QuotientRing, d: u32, names: Option<Vec<String>>) -> Result<SubringPresentation> {
    let s = ring.ambient();
    let one = s.field().one();
    let gens = standard_monomials_of_degree(ring, d)?.into_iter().map(|m| s.monomial(m, one.clone())).collect();
    subring_presentation(ring, gens, names)
}
