//! Bracket powers, Frobenius preimages, closure chains and the
//! Frobenius-side conditions on parameter ideals.

use crate::error::{Error, Result};
use crate::ideal::{ring_map_kernel, Ideal};
use crate::polyring::{Monomial, Polynomial, RingExt, RingMap};
use crate::quotient::{standard_monomials_of_degree, QuotientIdeal, QuotientRingExt, RingPresentation};
use crate::verdict::{Certificate, Membership, Status, Verdict};

pub const DEFAULT_EMAX: u32 = 4;
pub const DEFAULT_WINDOW: usize = 2;

pub fn bracket_power(ideal: &QuotientIdeal, e: u32) -> Result<QuotientIdeal> {
    ideal.bracket_power(e)
}

/// Lift of `I^[p^e]` together with the relations of the ring.
fn bracket_lift(ideal: &QuotientIdeal, e: u32) -> Result<Ideal> {
    Ok(ideal.bracket_power(e)?.lift().clone())
}

fn q_of(ideal: &QuotientIdeal, e: u32) -> u64 {
    ideal.ring().ambient().field().characteristic().pow(e)
}

/// `{x : x^(p^e) ∈ K}` over a prime field.
pub fn frobenius_preimage(k: &Ideal, e: u32) -> Result<Ideal> {
    let ring = k.ring();
    if !ring.field().is_prime_field() {
        return Err(Error::NonPerfectCoefficients);
    }
    if e == 0 {
        return Ok(k.clone());
    }
    if k.is_unit()? {
        return Ok(Ideal::unit(ring));
    }
    if k.is_monomial() {
        // f^q = Σ c m^q over F_p, so membership in a monomial ideal is termwise
        let q = ring.field().characteristic().pow(e);
        let q = u32::try_from(q).map_err(|_| Error::ExponentOverflow)?;
        let one = ring.field().one();
        let gens = k
            .gens()
            .iter()
            .filter(|g| !g.is_zero())
            .map(|g| {
                let m = g.leading_monomial().expect("nonzero");
                let exps: Vec<u32> = m.exps().iter().map(|&a| a.div_ceil(q)).collect();
                ring.monomial(Monomial::new(exps), one.clone())
            })
            .collect();
        return Ideal::new(ring, gens)?.minimalized();
    }
    let map = RingMap::frobenius(ring, e)?;
    ring_map_kernel(&map, k)?.minimalized()
}

/// `x^(p^e) ∈ I^[p^e]` upstairs, as a replayable claim.
pub fn frobenius_claim(x: &Polynomial, ideal: &QuotientIdeal, e: u32) -> Result<Membership> {
    Membership::check(&x.frobenius_power(e)?, &bracket_lift(ideal, e)?)
}

/// IN at the smallest `e ≤ emax` with `x^(p^e) ∈ I^[p^e]`; UNKNOWN otherwise.
pub fn frobenius_membership(x: &Polynomial, ideal: &QuotientIdeal, emax: u32) -> Result<Verdict> {
    let mut tried = Vec::new();
    for e in 0..=emax {
        let claim = frobenius_claim(x, ideal, e)?;
        if claim.member {
            let narrative = format!("x^{} lies in the bracket power at e={e}", q_of(ideal, e));
            return Ok(Verdict::new(Status::In, Certificate::Frobenius { e, claim }, narrative));
        }
        tried.push((e, claim));
    }
    Ok(Verdict::new(
        Status::Unknown,
        Certificate::Evidence { emax, claims: tried },
        format!("no Frobenius certificate for e <= {emax}"),
    ))
}

/// `C_e = {x : x^(p^e) ∈ I^[p^e]}` for `e = 0, 1, ...`.
#[derive(Debug, Clone)]
pub struct ClosureChain {
    pub base: QuotientIdeal,
    pub entries: Vec<(u32, QuotientIdeal)>,
    pub stable: bool,
    pub window: usize,
}

impl ClosureChain {
    /// The last computed entry.
    pub fn candidate(&self) -> &QuotientIdeal {
        &self.entries.last().expect("chain has an entry for e = 0").1
    }

    pub fn is_ascending(&self) -> Result<bool> {
        for pair in self.entries.windows(2) {
            if !pair[0].1.is_subset_of(&pair[1].1)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn label(&self) -> &'static str {
        if self.stable {
            "stable (window-certified)"
        } else {
            "not stable within emax"
        }
    }
}

/// One entry of the closure chain, `F^{-e}(I^[q] + J)` read modulo `J`.
pub fn closure_entry(ideal: &QuotientIdeal, e: u32) -> Result<QuotientIdeal> {
    let pre = frobenius_preimage(&bracket_lift(ideal, e)?, e)?;
    QuotientIdeal::from_lift(ideal.ring(), pre)
}

pub fn frobenius_closure(ideal: &QuotientIdeal, emax: u32, window: usize) -> Result<ClosureChain> {
    if !ideal.ring().ambient().field().is_prime_field() {
        return Err(Error::NonPerfectCoefficients);
    }
    let mut entries: Vec<(u32, QuotientIdeal)> = Vec::new();
    let mut run = 0usize;
    let mut stable = false;
    for e in 0..=emax {
        let c = if e == 0 { QuotientIdeal::from_lift(ideal.ring(), ideal.lift().clone())? } else { closure_entry(ideal, e)? };
        if let Some((_, prev)) = entries.last() {
            run = if prev.equals(&c)? { run + 1 } else { 0 };
        }
        entries.push((e, c));
        if run >= window {
            stable = true;
            break;
        }
    }
    Ok(ClosureChain { base: ideal.clone(), entries, stable, window })
}

fn witness_verdict(x: &Polynomial, ideal: &QuotientIdeal, e: u32, method: &str) -> Result<Verdict> {
    let outside = Membership::check(x, ideal.lift())?;
    let inside = frobenius_claim(x, ideal, e)?;
    let narrative = format!("{method}: {x} is outside the ideal but its {}-th power lies in the bracket power", q_of(ideal, e));
    Ok(Verdict::new(Status::Out, Certificate::Witness { element: x.clone(), e, outside, inside }, narrative))
}

/// Candidate witnesses for the membership route: user probes, standard
/// monomials up to the largest generator degree, and products `m_i * g_j`.
fn probe_candidates(ideal: &QuotientIdeal, probes: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let ring = ideal.ring();
    let s = ring.ambient();
    let mut out: Vec<Polynomial> = probes.to_vec();
    let bound = ideal.gens().iter().map(|g| g.total_degree()).max().unwrap_or(0);
    let modulo = RingPresentation::new(s, ideal.lift().gens().to_vec());
    if let Ok(quot) = modulo {
        let one = s.field().one();
        for d in 1..=bound {
            for m in standard_monomials_of_degree(&quot, d)? {
                out.push(s.monomial(m, one.clone()));
            }
        }
    }
    for i in 0..s.nvars() {
        for g in ideal.gens() {
            out.push(&s.var(i) * g);
        }
    }
    let mut seen = Vec::new();
    for f in out {
        let f = ring.reduce(&f)?;
        if !f.is_zero() && !seen.contains(&f) {
            seen.push(f);
        }
    }
    Ok(seen)
}

/// OUT with a witness `(x, e)` when some `x ∉ I` has `x^(p^e) ∈ I^[p^e]`.
///
/// Over a prime field the closure chain is computed; otherwise probes are tested.
pub fn is_frobenius_closed(ideal: &QuotientIdeal, emax: u32, window: usize, probes: &[Polynomial]) -> Result<Verdict> {
    if ideal.ring().ambient().field().is_prime_field() {
        closed_by_chain(ideal, emax, window)
    } else {
        closed_by_probes(ideal, emax, probes)
    }
}

fn closed_by_chain(ideal: &QuotientIdeal, emax: u32, window: usize) -> Result<Verdict> {
    let mut entries = vec![QuotientIdeal::from_lift(ideal.ring(), ideal.lift().clone())?];
    let mut run = 0usize;
    for e in 1..=emax {
        if run >= window {
            break;
        }
        let c = closure_entry(ideal, e)?;
        for g in c.gens() {
            if !ideal.contains(g)? {
                return witness_verdict(g, ideal, e, "closure chain");
            }
        }
        run += 1;
        entries.push(c);
    }
    let claims = entries
        .last()
        .expect("nonempty")
        .gens()
        .iter()
        .map(|g| Membership::check(g, ideal.lift()))
        .collect::<Result<Vec<_>>>()?;
    if run >= window {
        let narrative = format!("closure chain equals the ideal for e = 0..{run}; stable (window-certified)");
        Ok(Verdict::new(Status::In, Certificate::IdealEquality { claims }, narrative))
    } else {
        let narrative = format!("closure chain equals the ideal up to e = {emax} but the window of {window} was not filled");
        Ok(Verdict::new(Status::Unknown, Certificate::IdealEquality { claims }, narrative))
    }
}

fn closed_by_probes(ideal: &QuotientIdeal, emax: u32, probes: &[Polynomial]) -> Result<Verdict> {
    let candidates: Vec<Polynomial> = probe_candidates(ideal, probes)?
        .into_iter()
        .map(|f| Ok((ideal.contains(&f)?, f)))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter_map(|(inside, f)| (!inside).then_some(f))
        .collect();
    let mut claims = Vec::new();
    for e in 1..=emax {
        let target = bracket_lift(ideal, e)?;
        for x in &candidates {
            let claim = Membership::check(&x.frobenius_power(e)?, &target)?;
            if claim.member {
                return witness_verdict(x, ideal, e, "probe search");
            }
            claims.push((e, claim));
        }
    }
    let narrative = format!("no witness among {} probes for e <= {emax}; evidence only", candidates.len());
    Ok(Verdict::new(Status::In, Certificate::Evidence { emax, claims }, narrative))
}

/// Comparison of `(q^F)^[p]` with `(q^[p])^F`.
#[derive(Debug, Clone)]
pub struct CommuteCheck {
    pub verdict: Verdict,
    pub closure_then_bracket: QuotientIdeal,
    pub bracket_then_closure: QuotientIdeal,
    pub lhs_chain: ClosureChain,
    pub rhs_chain: ClosureChain,
}

impl CommuteCheck {
    pub fn passed(&self) -> bool {
        self.verdict.status == Status::In
    }
}

fn containment_claims(a: &QuotientIdeal, b: &QuotientIdeal) -> Result<Vec<Membership>> {
    a.gens().iter().map(|g| Membership::check(g, b.lift())).collect()
}

pub fn bracket_commute_check(q: &QuotientIdeal, emax: u32, window: usize) -> Result<CommuteCheck> {
    let lhs_chain = frobenius_closure(q, emax, window)?;
    let lhs = lhs_chain.candidate().bracket_power(1)?;
    let rhs_chain = frobenius_closure(&q.bracket_power(1)?, emax, window)?;
    let rhs = rhs_chain.candidate().clone();
    let mut claims = containment_claims(&lhs, &rhs)?;
    claims.extend(containment_claims(&rhs, &lhs)?);
    let equal = claims.iter().all(|c| c.member);
    let status = match (equal, lhs_chain.stable && rhs_chain.stable) {
        (_, false) => Status::Unknown,
        (true, true) => Status::In,
        (false, true) => Status::Out,
    };
    let narrative = format!(
        "(q^F)^[p] = ({}) and (q^[p])^F = ({}); chains {} / {}",
        join(lhs.gens()),
        join(rhs.gens()),
        lhs_chain.label(),
        rhs_chain.label()
    );
    Ok(CommuteCheck {
        verdict: Verdict::new(status, Certificate::IdealEquality { claims }, narrative),
        closure_then_bracket: lhs,
        bracket_then_closure: rhs,
        lhs_chain,
        rhs_chain,
    })
}

pub(crate) fn join(gens: &[Polynomial]) -> String {
    gens.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(", ")
}

/// `x ∈ I^F` evidenced by `x^N ∈ I` for some `N ≤ bound`.
pub fn radical_member(x: &Polynomial, ideal: &QuotientIdeal, bound: u32) -> Result<bool> {
    let mut acc = x.clone();
    for _ in 1..=bound {
        if ideal.contains(&acc)? {
            return Ok(true);
        }
        acc = ideal.ring().reduce(&(&acc * x))?;
    }
    Ok(false)
}

/// The maximal ideal of the ring an ideal lives in.
pub fn maximal_of(ideal: &QuotientIdeal) -> QuotientIdeal {
    ideal.ring().maximal_ideal()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{MonomialOrder, PolyRing, Ring};
    use crate::quotient::{QuotientRing, RingPresentation};
    use crate::scalar::Field;

    fn ring(p: u64, params: &[&str], vars: &[&str]) -> Ring {
        PolyRing::new(Field::with_params(p, params.to_vec()).unwrap(), vars.to_vec(), MonomialOrder::GrevLex).unwrap()
    }

    fn hypersurface() -> QuotientRing {
        RingPresentation::parse(&ring(2, &[], &["x", "y", "z"]), &["x^2+y^3+z^5"]).unwrap()
    }

    #[test]
    fn bracket_powers() {
        let r = hypersurface();
        let q = r.ideal_str(&["y", "z"]).unwrap();
        assert!(bracket_power(&q, 1).unwrap().equals(&r.ideal_str(&["y^2", "z^2"]).unwrap()).unwrap());
        assert!(bracket_power(&q, 0).unwrap().equals(&q).unwrap());
        let m = r.maximal_ideal();
        assert!(bracket_power(&m, 1).unwrap().equals(&bracket_power(&q, 1).unwrap()).unwrap());

        let s = RingPresentation::polynomial(&ring(2, &["u"], &["x", "y"]));
        let i = s.ideal_str(&["x+u*y"]).unwrap();
        assert_eq!(bracket_power(&i, 1).unwrap().gens()[0], s.element("x^2+u^2*y^2").unwrap());
    }

    #[test]
    fn preimages() {
        let s = ring(2, &[], &["x"]);
        let pre = frobenius_preimage(&Ideal::parse(&s, &["x^2"]).unwrap(), 1).unwrap();
        assert!(pre.equals(&Ideal::parse(&s, &["x"]).unwrap()).unwrap());
        let pre = frobenius_preimage(&Ideal::parse(&s, &["x^3"]).unwrap(), 1).unwrap();
        assert!(pre.equals(&Ideal::parse(&s, &["x^2"]).unwrap()).unwrap());
        assert!(frobenius_preimage(&Ideal::unit(&s), 1).unwrap().is_unit().unwrap());
        let k = Ideal::parse(&s, &["x^3+x^2"]).unwrap();
        let pre = frobenius_preimage(&k, 1).unwrap();
        assert!(pre.equals(&Ideal::parse(&s, &["x^2+x"]).unwrap()).unwrap());

        let su = ring(2, &["u"], &["x"]);
        assert_eq!(frobenius_preimage(&Ideal::parse(&su, &["x^2+u"]).unwrap(), 1).unwrap_err(), Error::NonPerfectCoefficients);
    }

    #[test]
    fn memberships() {
        let r = hypersurface();
        let q = r.ideal_str(&["y", "z"]).unwrap();
        let v = frobenius_membership(&r.element("x").unwrap(), &q, 1).unwrap();
        assert_eq!(v.status, Status::In);
        assert!(matches!(v.certificate, Certificate::Frobenius { e: 1, .. }));
        assert!(v.verify().unwrap());
        let v = frobenius_membership(&r.element("y").unwrap(), &q, 3).unwrap();
        assert!(matches!(v.certificate, Certificate::Frobenius { e: 0, .. }));

        let s = RingPresentation::polynomial(&ring(2, &[], &["x", "y", "z"]));
        let v = frobenius_membership(&s.element("x").unwrap(), &s.ideal_str(&["y", "z"]).unwrap(), 4).unwrap();
        assert_eq!(v.status, Status::Unknown);
        assert!(v.verify().unwrap());
    }

    #[test]
    fn chains() {
        let r = hypersurface();
        let chain = frobenius_closure(&r.ideal_str(&["y", "z"]).unwrap(), 3, 1).unwrap();
        assert!(chain.stable);
        assert!(chain.is_ascending().unwrap());
        assert!(chain.candidate().equals(&r.maximal_ideal()).unwrap());

        let s = RingPresentation::polynomial(&ring(2, &[], &["x", "y"]));
        let chain = frobenius_closure(&s.ideal_str(&["x"]).unwrap(), 4, 2).unwrap();
        assert!(chain.stable);
        assert_eq!(chain.entries.len(), 3);
        assert!(chain.candidate().equals(&s.ideal_str(&["x"]).unwrap()).unwrap());

        let n = RingPresentation::parse(&ring(2, &[], &["x", "y"]), &["x^2"]).unwrap();
        let chain = frobenius_closure(&n.zero_ideal(), 4, 2).unwrap();
        assert!(chain.candidate().equals(&n.ideal_str(&["x"]).unwrap()).unwrap());
    }

    #[test]
    fn closedness() {
        let r = hypersurface();
        let v = is_frobenius_closed(&r.ideal_str(&["y", "z"]).unwrap(), 4, 2, &[]).unwrap();
        assert_eq!(v.status, Status::Out);
        match &v.certificate {
            Certificate::Witness { element, e, .. } => {
                assert_eq!(element, &r.element("x").unwrap());
                assert_eq!(*e, 1);
            }
            other => panic!("unexpected certificate {other:?}"),
        }
        assert!(v.verify().unwrap());

        let s = RingPresentation::polynomial(&ring(2, &[], &["x", "y", "z"]));
        let v = is_frobenius_closed(&s.ideal_str(&["x^2", "x*y", "z^3"]).unwrap(), 4, 2, &[]).unwrap();
        assert_eq!(v.status, Status::In);
        assert!(v.verify().unwrap());
    }

    #[test]
    fn commute_checks() {
        let s = RingPresentation::polynomial(&ring(2, &[], &["x", "y", "z"]));
        let c = bracket_commute_check(&s.ideal_str(&["y", "z"]).unwrap(), 3, 2).unwrap();
        assert!(c.passed());
        assert!(c.closure_then_bracket.equals(&s.ideal_str(&["y^2", "z^2"]).unwrap()).unwrap());
        assert!(c.verdict.verify().unwrap());
    }

    #[test]
    fn certified_members_are_in_the_radical() {
        let r = hypersurface();
        let q = r.ideal_str(&["y", "z"]).unwrap();
        assert!(radical_member(&r.element("x").unwrap(), &q, 4).unwrap());
    }
}
