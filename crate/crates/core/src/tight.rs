//! Tight-closure verdicts, multipliers and test elements, special tight
//! closure, and the product and Briançon–Skoda style checks.

use crate::error::{Error, Result};
use crate::frobenius::{frobenius_closure, frobenius_membership, is_frobenius_closed, join};
use crate::ideal::monomial::monomial_irreducible_decomposition;
use crate::ideal::Ideal;
use crate::polyring::{Polynomial, RingExt};
use crate::quotient::{
    is_system_of_parameters, standard_monomials_of_degree, QuotientIdeal, QuotientRing, QuotientRingExt,
    RingPresentation,
};
use crate::scalar::FpPoly;
use crate::verdict::{Certificate, Membership, Status, Verdict};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Admissibility {
    /// No common factor with the single relation.
    Coprime { relation: Polynomial },
    /// Nonzero in a polynomial ring.
    DomainNonzero,
    UserAsserted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TestElementStatus {
    Asserted,
    JacobianDerived,
    None,
}

impl TestElementStatus {
    pub fn is_test_element(self) -> bool {
        self != TestElementStatus::None
    }
}

/// A multiplier `c ∈ R°` with the evidence for it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplierCertificate {
    pub element: Polynomial,
    pub admissibility: Admissibility,
    pub test_status: TestElementStatus,
}

impl MultiplierCertificate {
    pub fn new(ring: &QuotientRing, c: Polynomial, test_status: TestElementStatus) -> Result<Self> {
        let c = ring.reduce(&c)?;
        if c.is_zero() {
            return Err(Error::NotAdmissible);
        }
        let admissibility = if ring.is_polynomial_ring() {
            Admissibility::DomainNonzero
        } else if let Some(f) = ring.principal_relation() {
            if !coprime(&c, f) {
                return Err(Error::NotAdmissible);
            }
            Admissibility::Coprime { relation: f.clone() }
        } else {
            Admissibility::UserAsserted
        };
        Ok(MultiplierCertificate { element: c, admissibility, test_status })
    }

    pub fn describe(&self) -> String {
        let adm = match &self.admissibility {
            Admissibility::Coprime { relation } => format!("coprime to the relation {relation}"),
            Admissibility::DomainNonzero => "nonzero in a domain".to_string(),
            Admissibility::UserAsserted => "admissibility asserted by the user".to_string(),
        };
        let status = match self.test_status {
            TestElementStatus::Asserted => "asserted test element",
            TestElementStatus::JacobianDerived => "Jacobian-derived test element (reduced, equidimensional affine model)",
            TestElementStatus::None => "not a test element",
        };
        format!("c = {}; {adm}; {status}", self.element)
    }
}

/// Clears denominators, giving a polynomial over F_p in parameters then variables.
fn to_fp_poly(f: &Polynomial) -> FpPoly {
    let field = f.field();
    let p = field.characteristic();
    let k = field.params().len();
    let n = f.ring().nvars();
    let parts: Vec<(FpPoly, FpPoly)> = f.terms().iter().map(|(_, c)| c.parts(field)).collect();
    let mut den = FpPoly::one(k);
    for (_, d) in &parts {
        let g = den.gcd(d, p);
        den = den.mul(&d.exact_div(&g, p).expect("gcd divides"), p);
    }
    let mut terms = Vec::new();
    for ((m, _), (num, d)) in f.terms().iter().zip(&parts) {
        let coeff = num.mul(&den.exact_div(d, p).expect("denominator divides lcm"), p);
        for (pe, c) in coeff.terms() {
            let mut exps = pe.clone();
            exps.extend_from_slice(m.exps());
            terms.push((exps, *c));
        }
    }
    debug_assert!(terms.iter().all(|(e, _)| e.len() == k + n));
    FpPoly::from_terms(k + n, terms, p)
}

/// No common factor of positive degree in the ring variables.
fn coprime(a: &Polynomial, b: &Polynomial) -> bool {
    let k = a.field().params().len();
    let g = to_fp_poly(a).gcd(&to_fp_poly(b), a.field().characteristic());
    (k..k + a.ring().nvars()).all(|v| g.degree_in(v) == 0)
}

/// Nonzero partial derivatives of the relations, as test-element candidates.
///
/// A polynomial ring yields `c = 1`. When no single partial is admissible
/// their sum is tried.
pub fn jacobian_test_element_candidates(ring: &QuotientRing) -> Result<Vec<MultiplierCertificate>> {
    let s = ring.ambient();
    if ring.is_polynomial_ring() {
        return Ok(vec![MultiplierCertificate::new(ring, s.one(), TestElementStatus::JacobianDerived)?]);
    }
    let mut partials: Vec<Polynomial> = Vec::new();
    for g in ring.relations().gens() {
        for i in 0..s.nvars() {
            let d = ring.reduce(&g.derivative(i))?;
            if !d.is_zero() && !partials.contains(&d) {
                partials.push(d);
            }
        }
    }
    if partials.is_empty() {
        return Err(Error::EmptyJacobian);
    }
    let mut out: Vec<MultiplierCertificate> = partials
        .iter()
        .filter_map(|d| MultiplierCertificate::new(ring, d.clone(), TestElementStatus::JacobianDerived).ok())
        .collect();
    if out.is_empty() {
        let sum = partials.iter().fold(s.zero(), |acc, d| &acc + d);
        out.extend(MultiplierCertificate::new(ring, sum, TestElementStatus::JacobianDerived).ok());
    }
    if out.is_empty() {
        return Err(Error::NotAdmissible);
    }
    Ok(out)
}

/// IN through a Frobenius certificate; OUT when a test element refutes at
/// some `e ≤ emax` (reported at the largest such `e`); UNKNOWN otherwise.
pub fn tight_membership(x: &Polynomial, ideal: &QuotientIdeal, c: &MultiplierCertificate, emax: u32) -> Result<Verdict> {
    let frob = frobenius_membership(x, ideal, emax)?;
    if frob.status == Status::In {
        let narrative = format!("{}; Frobenius closure lies in the tight closure", frob.narrative);
        return Ok(Verdict::new(Status::In, frob.certificate, narrative));
    }
    let mut claims = Vec::new();
    for e in 0..=emax {
        let target = ideal.bracket_power(e)?;
        let cx = &c.element * &x.frobenius_power(e)?;
        claims.push((e, Membership::check(&cx, target.lift())?));
    }
    let failing: Vec<u32> = claims.iter().filter(|(_, m)| !m.member).map(|(e, _)| *e).collect();
    if c.test_status.is_test_element() {
        if let Some(&e) = failing.last() {
            let claim = claims.into_iter().find(|(ee, _)| *ee == e).expect("present").1;
            let narrative = format!("test element c = {} gives c*x^q outside the bracket power at e={e}", c.element);
            return Ok(Verdict::new(Status::Out, Certificate::Refutation { multiplier: c.element.clone(), e, claim }, narrative));
        }
    }
    let narrative = format!(
        "c*x^q in the bracket power for {} of {} exponents e <= {emax}; evidence only",
        claims.len() - failing.len(),
        claims.len()
    );
    Ok(Verdict::new(Status::Unknown, Certificate::Evidence { emax, claims }, narrative))
}

/// IN when `x^(q1) ∈ (m I^[q1])^F` is certified for some `e1 ≤ emax`; never OUT.
pub fn special_part_membership(x: &Polynomial, ideal: &QuotientIdeal, emax: u32) -> Result<Verdict> {
    let ring = ideal.ring();
    let m = ring.maximal_ideal();
    let mut tried = Vec::new();
    for e1 in 0..=emax {
        let target = m.product(&ideal.bracket_power(e1)?)?;
        let y = ring.reduce(&x.frobenius_power(e1)?)?;
        let v = frobenius_membership(&y, &target, emax)?;
        if let (Status::In, Certificate::Frobenius { e, claim }) = (v.status, &v.certificate) {
            let narrative = format!("x^(p^{e1}) lies in the Frobenius closure of m*I^[p^{e1}] at e={e}");
            return Ok(Verdict::new(Status::In, Certificate::Frobenius { e: e1 + e, claim: claim.clone() }, narrative));
        }
        if let Certificate::Evidence { claims, .. } = v.certificate {
            tried.extend(claims.into_iter().map(|(e, c)| (e1 + e, c)));
        }
    }
    Ok(Verdict::new(
        Status::Unknown,
        Certificate::Evidence { emax, claims: tried },
        format!("no certificate for e1 <= {emax}; special tight closure is not refuted"),
    ))
}

/// Frobenius-closedness verdicts together with the method used.
#[derive(Debug, Clone)]
pub struct FrobeniusLayer {
    pub product_closed: Verdict,
    pub q1_closed: Verdict,
    pub q2_closed: Verdict,
    /// `(q1 q2)^F = q1^F q2^F`.
    pub identity: Status,
    pub method: String,
}

#[derive(Debug, Clone)]
pub struct DecompositionRoute {
    pub components: Vec<Ideal>,
    pub reintersects: bool,
    pub components_closed: bool,
}

#[derive(Debug, Clone)]
pub struct ProductReport {
    pub frobenius: FrobeniusLayer,
    pub decomposition: Option<DecompositionRoute>,
    pub tight: Vec<(Polynomial, Verdict)>,
    pub q1_in_q2: bool,
    pub q1_parameter: bool,
    pub q2_parameter: bool,
}

impl ProductReport {
    pub fn frobenius_layer_passes(&self) -> bool {
        let f = &self.frobenius;
        f.identity == Status::In
            && [&f.product_closed, &f.q1_closed, &f.q2_closed].iter().all(|v| v.status == Status::In)
            && self.decomposition.as_ref().is_none_or(|d| d.reintersects && d.components_closed)
    }

    pub fn hypothesis_violated(&self) -> bool {
        !self.q1_in_q2
    }
}

/// Whether the ideal is generated by a full system of parameters.
pub fn is_parameter_ideal(q: &QuotientIdeal) -> Result<bool> {
    let gens: Vec<Polynomial> = q.gens().iter().filter(|g| !g.is_zero()).cloned().collect();
    if gens.len() != q.ring().dim() {
        return Ok(false);
    }
    match is_system_of_parameters(&gens, q.ring()) {
        Ok(b) => Ok(b),
        Err(Error::TooManyElements { .. }) => Ok(false),
        Err(e) => Err(e),
    }
}

pub fn product_identity_check(
    q1: &QuotientIdeal,
    q2: &QuotientIdeal,
    emax: u32,
    window: usize,
    probes: &[Polynomial],
    multiplier: Option<&MultiplierCertificate>,
) -> Result<ProductReport> {
    let ring = q1.ring();
    let prod = q1.product(q2)?;
    let product_closed = is_frobenius_closed(&prod, emax, window, probes)?;
    let q1_closed = is_frobenius_closed(q1, emax, window, &[])?;
    let q2_closed = is_frobenius_closed(q2, emax, window, &[])?;

    let (identity, method) = if ring.ambient().field().is_prime_field() {
        let cp = frobenius_closure(&prod, emax, window)?;
        let c1 = frobenius_closure(q1, emax, window)?;
        let c2 = frobenius_closure(q2, emax, window)?;
        let rhs = c1.candidate().product(c2.candidate())?;
        let equal = cp.candidate().equals(&rhs)?;
        let status = match (equal, cp.stable && c1.stable && c2.stable) {
            (_, false) => Status::Unknown,
            (true, true) => Status::In,
            (false, true) => Status::Out,
        };
        (status, format!("closure chains ({})", cp.label()))
    } else {
        let status = match (product_closed.status, q1_closed.status, q2_closed.status) {
            (Status::Out, Status::In, Status::In) => Status::Out,
            _ => Status::Unknown,
        };
        (status, "probe search over a parameter field; closedness of q1, q2 is evidence only".to_string())
    };

    let decomposition = if ring.is_polynomial_ring() && prod.is_monomial() {
        let lift = prod.lift().clone();
        let components = monomial_irreducible_decomposition(&lift)?;
        let mut meet = Ideal::unit(ring.ambient());
        let mut components_closed = true;
        for c in &components {
            meet = meet.intersection(c)?;
            let cq = QuotientIdeal::new(ring, c.gens().to_vec())?;
            components_closed &= is_frobenius_closed(&cq, emax, window, &[])?.status == Status::In;
        }
        Some(DecompositionRoute { reintersects: meet.equals(&lift)?, components, components_closed })
    } else {
        None
    };

    let mut tight = Vec::new();
    if let Some(c) = multiplier {
        let mut xs: Vec<Polynomial> = probes.to_vec();
        if let Certificate::Witness { element, .. } = &product_closed.certificate {
            if !xs.contains(element) {
                xs.push(element.clone());
            }
        }
        for x in xs {
            let v = tight_membership(&x, &prod, c, emax)?;
            tight.push((x, v));
        }
    }

    Ok(ProductReport {
        frobenius: FrobeniusLayer { product_closed, q1_closed, q2_closed, identity, method },
        decomposition,
        tight,
        q1_in_q2: q1.is_subset_of(q2)?,
        q1_parameter: is_parameter_ideal(q1)?,
        q2_parameter: is_parameter_ideal(q2)?,
    })
}

#[derive(Debug, Clone)]
pub struct BrianconSkodaReport {
    pub parameter_ideal: bool,
    /// `(q^2)^F ⊆ q`.
    pub surrogate: Verdict,
    pub evidence: Vec<(Polynomial, Verdict, bool)>,
}

impl BrianconSkodaReport {
    pub fn passes(&self) -> bool {
        self.surrogate.status == Status::In && !self.evidence.iter().any(|(_, v, in_q)| v.status == Status::In && !in_q)
    }
}

pub fn briancon_skoda_check(
    q: &QuotientIdeal,
    c: &MultiplierCertificate,
    emax: u32,
    window: usize,
    probes: &[Polynomial],
) -> Result<BrianconSkodaReport> {
    let ring = q.ring();
    let q2 = q.product(q)?;
    let surrogate = if ring.ambient().field().is_prime_field() {
        let chain = frobenius_closure(&q2, emax, window)?;
        let claims = chain.candidate().gens().iter().map(|g| Membership::check(g, q.lift())).collect::<Result<Vec<_>>>()?;
        let inside = claims.iter().all(|m| m.member);
        let status = match (inside, chain.stable) {
            (false, _) => Status::Out,
            (true, true) => Status::In,
            (true, false) => Status::Unknown,
        };
        let narrative = format!("(q^2)^F = ({}), {}", join(chain.candidate().gens()), chain.label());
        Verdict::new(status, Certificate::IdealEquality { claims }, narrative)
    } else {
        let mut found = None;
        let candidates = low_degree_probes(&q2, probes)?;
        'outer: for e in 1..=emax {
            for x in &candidates {
                if q.contains(x)? {
                    continue;
                }
                let v = frobenius_membership(x, &q2, e)?;
                if v.status == Status::In {
                    found = Some(v);
                    break 'outer;
                }
            }
        }
        match found {
            Some(v) => Verdict::new(Status::Out, v.certificate, format!("an element outside q is in (q^2)^F: {}", v.narrative)),
            None => Verdict::new(
                Status::In,
                Certificate::Evidence { emax, claims: Vec::new() },
                format!("no element of (q^2)^F outside q among {} probes; evidence only", candidates.len()),
            ),
        }
    };
    let mut evidence = Vec::new();
    for g in low_degree_probes(&q2, probes)? {
        let v = tight_membership(&g, &q2, c, emax)?;
        let in_q = q.contains(&g)?;
        evidence.push((g, v, in_q));
    }
    Ok(BrianconSkodaReport { parameter_ideal: is_parameter_ideal(q)?, surrogate, evidence })
}

/// User probes followed by standard monomials modulo `I` up to its largest generator degree.
fn low_degree_probes(ideal: &QuotientIdeal, probes: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let s = ideal.ring().ambient();
    let mut out: Vec<Polynomial> = probes.to_vec();
    let bound = ideal.gens().iter().map(|g| g.total_degree()).max().unwrap_or(0);
    if let Ok(quot) = RingPresentation::new(s, ideal.lift().gens().to_vec()) {
        let one = s.field().one();
        for d in 1..=bound {
            for m in standard_monomials_of_degree(&quot, d)? {
                let f = s.monomial(m, one.clone());
                if !out.contains(&f) {
                    out.push(f);
                }
            }
        }
    }
    Ok(out)
}

/// `q : m`, a lower bound for `q^*` in Gorenstein rings that are not F-rational.
pub fn colon_socle_bound(q: &QuotientIdeal) -> Result<QuotientIdeal> {
    if !q.is_m_primary()? {
        return Err(Error::NotMPrimary);
    }
    q.colon(&q.ring().maximal_ideal())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{MonomialOrder, PolyRing, Ring};
    use crate::scalar::Field;

    fn ring(p: u64, params: &[&str], vars: &[&str]) -> Ring {
        PolyRing::new(Field::with_params(p, params.to_vec()).unwrap(), vars.to_vec(), MonomialOrder::GrevLex).unwrap()
    }

    fn hypersurface() -> QuotientRing {
        RingPresentation::parse(&ring(2, &[], &["x", "y", "z"]), &["x^2+y^3+z^5"]).unwrap()
    }

    #[test]
    fn admissibility() {
        let r = RingPresentation::parse(&ring(2, &["u"], &["x", "y"]), &["x*y"]).unwrap();
        let c = MultiplierCertificate::new(&r, r.element("x+y").unwrap(), TestElementStatus::Asserted).unwrap();
        assert!(matches!(c.admissibility, Admissibility::Coprime { .. }));
        assert_eq!(MultiplierCertificate::new(&r, r.element("u*x").unwrap(), TestElementStatus::None), Err(Error::NotAdmissible));
        assert_eq!(MultiplierCertificate::new(&r, r.element("x*y").unwrap(), TestElementStatus::None), Err(Error::NotAdmissible));
        assert!(MultiplierCertificate::new(&r, r.element("u+x^2+y").unwrap(), TestElementStatus::None).is_ok());
    }

    #[test]
    fn jacobian_candidates() {
        let r = RingPresentation::parse(&ring(5, &[], &["x", "y"]), &["x^2-y^3"]).unwrap();
        let cs: Vec<Polynomial> = jacobian_test_element_candidates(&r).unwrap().into_iter().map(|c| c.element).collect();
        assert_eq!(cs, vec![r.element("2*x").unwrap(), r.element("-3*y^2").unwrap()]);

        let h = hypersurface();
        let cs: Vec<Polynomial> = jacobian_test_element_candidates(&h).unwrap().into_iter().map(|c| c.element).collect();
        assert_eq!(cs, vec![h.element("y^2").unwrap(), h.element("z^4").unwrap()]);

        let n = RingPresentation::parse(&ring(2, &[], &["x", "y"]), &["x^2"]).unwrap();
        assert_eq!(jacobian_test_element_candidates(&n).unwrap_err(), Error::EmptyJacobian);

        let node = RingPresentation::parse(&ring(2, &[], &["x", "y"]), &["x*y"]).unwrap();
        let cs = jacobian_test_element_candidates(&node).unwrap();
        assert_eq!(cs[0].element, node.element("x+y").unwrap());
    }

    #[test]
    fn tight_examples() {
        let s = RingPresentation::polynomial(&ring(2, &[], &["x", "y", "z"]));
        let one = MultiplierCertificate::new(&s, s.element("1").unwrap(), TestElementStatus::Asserted).unwrap();
        let i = s.ideal_str(&["y", "z"]).unwrap();
        let v = tight_membership(&s.element("x").unwrap(), &i, &one, 1).unwrap();
        assert_eq!(v.status, Status::Out);
        assert!(matches!(&v.certificate, Certificate::Refutation { multiplier, e: 1, .. } if multiplier.is_one()));
        assert!(v.verify().unwrap());
        let v = tight_membership(&s.element("y*x").unwrap(), &i, &one, 1).unwrap();
        assert_eq!(v.status, Status::In);

        let r = RingPresentation::parse(&ring(2, &["u"], &["x", "y"]), &["x*y"]).unwrap();
        let c = MultiplierCertificate::new(&r, r.element("x+y").unwrap(), TestElementStatus::None).unwrap();
        let i = r.ideal_str(&["(x+u*y)*(x^2+u^2*y^2)"]).unwrap();
        let v = tight_membership(&r.element("x^3").unwrap(), &i, &c, 4).unwrap();
        assert_eq!(v.status, Status::Unknown);
        match &v.certificate {
            Certificate::Evidence { claims, .. } => {
                assert_eq!(claims.len(), 5);
                assert!(claims.iter().all(|(_, m)| m.member));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(v.verify().unwrap());
    }

    #[test]
    fn special_part() {
        let s = RingPresentation::polynomial(&ring(2, &[], &["x", "y", "z"]));
        let i = s.ideal_str(&["y", "z"]).unwrap();
        assert_eq!(special_part_membership(&s.zero_ideal().ring().ambient().zero(), &i, 2).unwrap().status, Status::In);
        assert_eq!(special_part_membership(&s.element("x*y").unwrap(), &i, 2).unwrap().status, Status::In);
        assert_eq!(special_part_membership(&s.element("x").unwrap(), &i, 3).unwrap().status, Status::Unknown);
    }

    #[test]
    fn socle_bounds() {
        let h = hypersurface();
        let b = colon_socle_bound(&h.ideal_str(&["y", "z"]).unwrap()).unwrap();
        assert!(b.equals(&h.maximal_ideal()).unwrap());
        let s = RingPresentation::polynomial(&ring(2, &[], &["x", "y"]));
        assert!(!colon_socle_bound(&s.maximal_ideal()).unwrap().is_proper().unwrap());
        let b = colon_socle_bound(&s.ideal_str(&["x^2", "y"]).unwrap()).unwrap();
        assert!(b.equals(&s.ideal_str(&["x", "y"]).unwrap()).unwrap());
        assert_eq!(colon_socle_bound(&s.ideal_str(&["x"]).unwrap()).unwrap_err(), Error::NotMPrimary);
    }

    #[test]
    fn products_in_regular_rings() {
        let s = RingPresentation::polynomial(&ring(2, &[], &["x", "y"]));
        let q = s.ideal_str(&["x", "y"]).unwrap();
        let rep = product_identity_check(&q, &q, 4, 2, &[], None).unwrap();
        assert!(rep.frobenius_layer_passes());
        assert!(!rep.hypothesis_violated());

        let s3 = RingPresentation::polynomial(&ring(2, &[], &["x", "y", "z"]));
        let q = s3.ideal_str(&["x", "y", "z"]).unwrap();
        let rep = product_identity_check(&q, &q.bracket_power(1).unwrap(), 3, 2, &[], None).unwrap();
        let d = rep.decomposition.as_ref().unwrap();
        assert!(d.reintersects && d.components_closed);
        assert!(rep.frobenius_layer_passes());

        let a = s.ideal_str(&["x"]).unwrap();
        let b = s.ideal_str(&["y"]).unwrap();
        assert!(product_identity_check(&a, &b, 2, 1, &[], None).unwrap().hypothesis_violated());
    }

    #[test]
    fn briancon_skoda_regular() {
        let s = RingPresentation::polynomial(&ring(2, &[], &["x", "y"]));
        let q = s.ideal_str(&["x", "y"]).unwrap();
        let c = jacobian_test_element_candidates(&s).unwrap().remove(0);
        let rep = briancon_skoda_check(&q, &c, 2, 2, &[]).unwrap();
        assert!(rep.parameter_ideal);
        assert!(rep.passes());
    }
}
