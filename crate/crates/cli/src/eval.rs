//! Declaration environment and check execution.

use std::collections::HashMap;
use std::sync::Arc;

use charp_core::frobenius::{bracket_commute_check, frobenius_closure, frobenius_membership, is_frobenius_closed};
use charp_core::quotient::{
    is_filter_regular_sequence, is_regular_sequence, is_system_of_parameters, subring_presentation, veronese,
    SubringPresentation,
};
use charp_core::tight::{
    briancon_skoda_check, colon_socle_bound, jacobian_test_element_candidates, product_identity_check,
    special_part_membership, tight_membership, MultiplierCertificate, TestElementStatus,
};
use charp_core::{
    Certificate, Error, Field, Membership, MonomialOrder, PolyRing, Polynomial, QuotientIdeal, QuotientRing,
    QuotientRingExt, RingExt, RingPresentation, Status, Verdict,
};
use serde_json::{json, Value};

use crate::ast::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    pub emax: u32,
    pub window: usize,
    pub order: MonomialOrder,
    pub seed: u64,
    pub parallel: bool,
}

impl Default for Config {
    fn default() -> Self {
        Config { emax: 4, window: 2, order: MonomialOrder::GrevLex, seed: 0, parallel: false }
    }
}

#[derive(Debug, Clone)]
pub enum RingVal {
    Plain(QuotientRing),
    Sub(Arc<SubringPresentation>),
}

impl RingVal {
    pub fn ring(&self) -> &QuotientRing {
        match self {
            RingVal::Plain(r) => r,
            RingVal::Sub(s) => s.presented(),
        }
    }

    /// Parses in the ring itself, or for a subring in its target followed by a preimage.
    pub fn parse(&self, text: &str) -> Result<Polynomial, Error> {
        match self {
            RingVal::Plain(r) => r.ambient().parse(text),
            RingVal::Sub(s) => match s.presented().ambient().parse(text) {
                Err(Error::UnknownIdentifier(_)) => {
                    let f = s.target().ambient().parse(text)?;
                    s.preimage(&f)?.ok_or_else(|| Error::Parse { col: 0, msg: format!("{text} is not in the subring") })
                }
                other => other,
            },
        }
    }

    /// Image in the target ring, for subrings.
    pub fn image(&self, f: &Polynomial) -> Option<String> {
        match self {
            RingVal::Plain(_) => None,
            RingVal::Sub(s) => s.image(f).ok().map(|g| g.to_string()),
        }
    }
}

#[derive(Debug, Default)]
pub struct Env {
    pub rings: HashMap<String, RingVal>,
    pub ideals: HashMap<String, QuotientIdeal>,
    pub elems: HashMap<String, Polynomial>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetupError {
    pub stmt: usize,
    pub resource: bool,
    pub msg: String,
}

fn setup_err(stmt: usize, e: Error) -> SetupError {
    SetupError { stmt, resource: matches!(e, Error::ResourceLimit(_)), msg: e.to_string() }
}

impl Env {
    pub fn build(session: &Session, config: &Config) -> Result<Env, SetupError> {
        let mut env = Env::default();
        for (k, stmt) in session.stmts.iter().enumerate() {
            let res: Result<(), Error> = (|| {
                match stmt {
                    Stmt::Ring { name, def, .. } => {
                        let r = env.ring_def(def, config)?;
                        env.rings.insert(name.clone(), RingVal::Plain(r));
                    }
                    Stmt::Subring { name, def, vars, .. } => {
                        let sub = match def {
                            SubringDef::Veronese { ring, degree } => veronese(env.rings[ring].ring(), *degree, vars.clone())?,
                            SubringDef::Generators { ring, gens } => {
                                let rv = &env.rings[ring];
                                let gens = gens.iter().map(|g| rv.parse(&g.text)).collect::<Result<Vec<_>, _>>()?;
                                subring_presentation(rv.ring(), gens, vars.clone())?
                            }
                        };
                        env.rings.insert(name.clone(), RingVal::Sub(Arc::new(sub)));
                    }
                    Stmt::Ideal { name, expr, .. } => {
                        let ring = session_ring_of(session, k);
                        let i = env.ideal(&ring, expr)?;
                        env.ideals.insert(name.clone(), i);
                    }
                    Stmt::Elem { name, expr, .. } => {
                        let ring = session_ring_of(session, k);
                        let f = env.elem(&ring, expr)?;
                        env.elems.insert(name.clone(), f);
                    }
                    Stmt::Check(_) => {}
                }
                Ok(())
            })();
            res.map_err(|e| setup_err(k, e))?;
        }
        Ok(env)
    }

    fn ring_def(&self, def: &RingDef, config: &Config) -> Result<QuotientRing, Error> {
        match def {
            RingDef::Poly { p, params, vars } => {
                let field = Field::with_params(*p, params.clone())?;
                Ok(RingPresentation::polynomial(&PolyRing::new(field, vars.clone(), config.order)?))
            }
            RingDef::Name(n) => Ok(self.rings[n].ring().clone()),
            RingDef::Quotient { base, relations } => {
                let base = self.ring_def(base, config)?;
                let s = base.ambient();
                let mut rels = base.relations().gens().to_vec();
                for r in relations {
                    rels.push(s.parse(&r.text)?);
                }
                RingPresentation::new(s, rels)
            }
        }
    }

    pub fn elem(&self, ring: &str, e: &Expr) -> Result<Polynomial, Error> {
        match self.elems.get(&e.text) {
            Some(f) => Ok(f.clone()),
            None => self.rings[ring].parse(&e.text),
        }
    }

    pub fn ideal(&self, ring: &str, e: &IdealExpr) -> Result<QuotientIdeal, Error> {
        let rv = &self.rings[ring];
        match e {
            IdealExpr::Gens(gens) => {
                let gens = gens.iter().map(|g| self.elem(ring, g)).collect::<Result<Vec<_>, _>>()?;
                rv.ring().ideal(gens)
            }
            IdealExpr::Name(n, _) => Ok(self.ideals[n].clone()),
            IdealExpr::Maximal => Ok(rv.ring().maximal_ideal()),
            IdealExpr::Sum(a, b) => self.ideal(ring, a)?.sum(&self.ideal(ring, b)?),
            IdealExpr::Product(a, b) => self.ideal(ring, a)?.product(&self.ideal(ring, b)?),
            IdealExpr::Bracket(a, k) => self.ideal(ring, a)?.bracket_power(*k),
            IdealExpr::Colon(a, b) => self.ideal(ring, a)?.colon(&self.ideal(ring, b)?),
        }
    }
}

/// The ring in scope at statement `k`.
pub fn session_ring_of(session: &Session, k: usize) -> String {
    session.stmts[..k]
        .iter()
        .rev()
        .find_map(|s| match s {
            Stmt::Ring { name, .. } | Stmt::Subring { name, .. } => Some(name.clone()),
            _ => None,
        })
        .expect("parser guarantees a ring in scope")
}

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub status: String,
    pub value: Option<Value>,
    pub certificate: Option<Value>,
    pub verified: Option<bool>,
    pub narrative: String,
}

impl Outcome {
    fn plain(status: &str, value: Option<Value>, narrative: impl Into<String>) -> Outcome {
        Outcome { status: status.into(), value, certificate: None, verified: None, narrative: narrative.into() }
    }
}

fn gens_json(gens: &[Polynomial]) -> Value {
    Value::Array(gens.iter().filter(|g| !g.is_zero()).map(|g| Value::String(g.to_string())).collect())
}

pub fn membership_json(m: &Membership) -> Value {
    json!({
        "element": m.element.to_string(),
        "generators": gens_json(&m.generators),
        "member": m.member,
    })
}

pub fn certificate_json(c: &Certificate) -> Value {
    match c {
        Certificate::Frobenius { e, claim } => json!({"kind": c.kind(), "e": e, "claims": [membership_json(claim)]}),
        Certificate::Refutation { multiplier, e, claim } => json!({
            "kind": c.kind(), "multiplier": multiplier.to_string(), "e": e, "claims": [membership_json(claim)]
        }),
        Certificate::Witness { element, e, outside, inside } => json!({
            "kind": c.kind(), "element": element.to_string(), "e": e,
            "claims": [membership_json(outside), membership_json(inside)]
        }),
        Certificate::Evidence { emax, claims } => json!({
            "kind": c.kind(), "emax": emax,
            "claims": claims.iter().map(|(e, m)| { let mut v = membership_json(m); v["e"] = json!(e); v }).collect::<Vec<_>>()
        }),
        Certificate::IdealEquality { claims } => json!({
            "kind": c.kind(), "claims": claims.iter().map(membership_json).collect::<Vec<_>>()
        }),
    }
}

fn pass_fail(b: bool) -> &'static str {
    if b {
        "PASS"
    } else {
        "FAIL"
    }
}

fn verdict_outcome(v: &Verdict, status: Option<&str>, value: Option<Value>) -> Result<Outcome, Error> {
    let verified = v.verify()?;
    let status = if verified { status.map_or_else(|| v.status.to_string(), str::to_string) } else { "ERROR".to_string() };
    let narrative = if verified { v.narrative.clone() } else { format!("certificate failed to re-verify: {}", v.narrative) };
    Ok(Outcome { status, value, certificate: Some(certificate_json(&v.certificate)), verified: Some(verified), narrative })
}

fn status_word(s: Status, yes: &'static str, no: &'static str) -> &'static str {
    match s {
        Status::In => yes,
        Status::Out => no,
        Status::Unknown => "UNKNOWN",
    }
}

struct Ctx<'a> {
    env: &'a Env,
    check: &'a Check,
    rv: &'a RingVal,
}

impl Ctx<'_> {
    fn ideal(&self, k: usize) -> Result<QuotientIdeal, Error> {
        match &self.check.args[k] {
            Arg::Ideal(e) => self.env.ideal(&self.ring_name(), e),
            _ => unreachable!("parser enforces signatures"),
        }
    }

    fn ring_name(&self) -> String {
        for a in &self.check.args {
            if let Arg::Ideal(e) = a {
                if let Some(n) = first_ideal_name(e) {
                    return ring_of_ideal(self.env, n).unwrap_or_else(|| self.check.ring.clone());
                }
            }
        }
        self.check.ring.clone()
    }

    fn elem(&self, k: usize) -> Result<Polynomial, Error> {
        match &self.check.args[k] {
            Arg::Elem(e) => self.env.elem(&self.ring_name(), e),
            _ => unreachable!("parser enforces signatures"),
        }
    }

    fn probes(&self) -> Result<Vec<Polynomial>, Error> {
        self.check.probes.iter().flatten().map(|p| self.env.elem(&self.ring_name(), p)).collect()
    }

    fn multiplier(&self, required: bool) -> Result<Option<MultiplierCertificate>, Error> {
        let ring = self.rv.ring();
        match self.check.bindings.first() {
            None if !required => Ok(None),
            None | Some((_, Binding::Auto)) => Ok(Some(jacobian_test_element_candidates(ring)?.remove(0))),
            Some((key, Binding::Expr(e))) => {
                let c = self.env.elem(&self.ring_name(), e)?;
                let status = if key == "test" { TestElementStatus::Asserted } else { TestElementStatus::None };
                Ok(Some(MultiplierCertificate::new(ring, c, status)?))
            }
        }
    }
}

fn first_ideal_name(e: &IdealExpr) -> Option<&str> {
    match e {
        IdealExpr::Name(n, _) => Some(n),
        IdealExpr::Sum(a, b) | IdealExpr::Product(a, b) | IdealExpr::Colon(a, b) => {
            first_ideal_name(a).or_else(|| first_ideal_name(b))
        }
        IdealExpr::Bracket(a, _) => first_ideal_name(a),
        IdealExpr::Gens(_) | IdealExpr::Maximal => None,
    }
}

fn ring_of_ideal(env: &Env, name: &str) -> Option<String> {
    let i = env.ideals.get(name)?;
    env.rings.iter().find(|(_, rv)| Arc::ptr_eq(rv.ring(), i.ring())).map(|(n, _)| n.clone())
}

/// Runs one directive; engine errors become ERROR or RESOURCE_LIMIT outcomes.
pub fn run_check(env: &Env, check: &Check, config: &Config) -> Outcome {
    match run_check_inner(env, check, config) {
        Ok(o) => o,
        Err(Error::ResourceLimit(msg)) => Outcome::plain("RESOURCE_LIMIT", None, format!("resource limit: {msg}")),
        Err(e) => Outcome::plain("ERROR", None, e.to_string()),
    }
}

fn run_check_inner(env: &Env, check: &Check, config: &Config) -> Result<Outcome, Error> {
    let emax = check.emax.unwrap_or(config.emax);
    let window = check.window.unwrap_or(config.window);
    let ring_name = {
        let probe = Ctx { env, check, rv: &env.rings[&check.ring] };
        probe.ring_name()
    };
    let rv = &env.rings[&ring_name];
    let cx = Ctx { env, check, rv };
    let ring = rv.ring();
    Ok(match check.name.as_str() {
        "member" => {
            let (f, i) = (cx.elem(0)?, cx.ideal(1)?);
            let m = Membership::check(&f, i.lift())?;
            let verified = m.verify()?;
            Outcome {
                status: if !verified { "ERROR" } else if m.member { "IN" } else { "OUT" }.into(),
                value: None,
                certificate: Some(json!({"kind": "membership", "claims": [membership_json(&m)]})),
                verified: Some(verified),
                narrative: "ideal membership via reduced Groebner basis".into(),
            }
        }
        "congruent" => {
            let (f, g) = (cx.elem(0)?, cx.elem(1)?);
            let (rf, rg) = (ring.reduce(&f)?, ring.reduce(&g)?);
            Outcome::plain(pass_fail(rf == rg), Some(json!({"lhs": rf.to_string(), "rhs": rg.to_string()})), "normal forms modulo the relations")
        }
        "ideal_equal" => {
            let (a, b) = (cx.ideal(0)?, cx.ideal(1)?);
            let mut claims: Vec<Membership> = a.gens().iter().map(|g| Membership::check(g, b.lift())).collect::<Result<_, _>>()?;
            for g in b.gens() {
                claims.push(Membership::check(g, a.lift())?);
            }
            let equal = claims.iter().all(|c| c.member);
            let v = Verdict::new(if equal { Status::In } else { Status::Out }, Certificate::IdealEquality { claims }, "mutual containment of generators");
            verdict_outcome(&v, Some(pass_fail(equal)), None)?
        }
        "dim" => {
            let Arg::Ring(r) = &check.args[0] else { unreachable!() };
            let d = env.rings[r].ring().dim();
            Outcome::plain("PASS", Some(json!(d)), "Krull dimension from a maximal independent set of the leading ideal")
        }
        "is_sop" | "is_regular" | "is_filter_regular" => {
            let i = cx.ideal(0)?;
            let xs: Vec<Polynomial> = i.gens().to_vec();
            let ok = match check.name.as_str() {
                "is_sop" => is_system_of_parameters(&xs, ring)?,
                "is_regular" => is_regular_sequence(&xs, ring)?,
                _ => is_filter_regular_sequence(&xs, ring)?,
            };
            Outcome::plain(pass_fail(ok), Some(json!({"sequence": gens_json(&xs)})), format!("{} on the given generators", check.name))
        }
        "is_m_primary" => Outcome::plain(pass_fail(cx.ideal(0)?.is_m_primary()?), None, "dimension of R/I is zero"),
        "frobenius_member" => {
            let v = frobenius_membership(&cx.elem(0)?, &cx.ideal(1)?, emax)?;
            verdict_outcome(&v, None, None)?
        }
        "frobenius_closure" => {
            let chain = frobenius_closure(&cx.ideal(0)?, emax, window)?;
            let ascending = chain.is_ascending()?;
            let entries: Vec<Value> = chain.entries.iter().map(|(e, c)| json!({"e": e, "generators": gens_json(c.gens())})).collect();
            let status = if !ascending { "ERROR" } else if chain.stable { "PASS" } else { "UNKNOWN" };
            Outcome::plain(
                status,
                Some(json!({"entries": entries, "stable": chain.stable, "window": window, "candidate": gens_json(chain.candidate().gens())})),
                chain.label(),
            )
        }
        "frobenius_closed" => {
            let v = is_frobenius_closed(&cx.ideal(0)?, emax, window, &cx.probes()?)?;
            let value = match &v.certificate {
                Certificate::Witness { element, e, .. } => Some(json!({
                    "witness": element.to_string(), "e": e, "witness_image": rv.image(element)
                })),
                _ => None,
            };
            verdict_outcome(&v, None, value)?
        }
        "bracket_commute" => {
            let c = bracket_commute_check(&cx.ideal(0)?, emax, window)?;
            let value = json!({
                "closure_then_bracket": gens_json(c.closure_then_bracket.gens()),
                "bracket_then_closure": gens_json(c.bracket_then_closure.gens()),
                "chains": [c.lhs_chain.label(), c.rhs_chain.label()],
            });
            verdict_outcome(&c.verdict, Some(status_word(c.verdict.status, "PASS", "FAIL")), Some(value))?
        }
        "tight_member" => {
            let c = cx.multiplier(true)?.expect("required");
            let v = tight_membership(&cx.elem(0)?, &cx.ideal(1)?, &c, emax)?;
            let value = match &v.certificate {
                Certificate::Evidence { claims, .. } => {
                    let pos = claims.iter().filter(|(_, m)| m.member).count();
                    Some(json!({"multiplier": c.describe(), "positive": pos, "negative": claims.len() - pos}))
                }
                _ => Some(json!({"multiplier": c.describe()})),
            };
            verdict_outcome(&v, None, value)?
        }
        "special_member" => verdict_outcome(&special_part_membership(&cx.elem(0)?, &cx.ideal(1)?, emax)?, None, None)?,
        "product_identity" => {
            let (q1, q2) = (cx.ideal(0)?, cx.ideal(1)?);
            let c = cx.multiplier(false)?;
            let rep = product_identity_check(&q1, &q2, emax, window, &cx.probes()?, c.as_ref())?;
            let f = &rep.frobenius;
            let mut verified = true;
            for v in [&f.product_closed, &f.q1_closed, &f.q2_closed] {
                verified &= v.verify()?;
            }
            let status = if !verified {
                "ERROR"
            } else if rep.frobenius_layer_passes() {
                "PASS"
            } else if f.identity == Status::Out || f.product_closed.status == Status::Out {
                "FAIL"
            } else {
                "UNKNOWN"
            };
            let witness = match &f.product_closed.certificate {
                Certificate::Witness { element, e, .. } => json!({"element": element.to_string(), "e": e, "image": rv.image(element)}),
                _ => Value::Null,
            };
            let value = json!({
                "frobenius_layer": {
                    "product_closed": f.product_closed.status.to_string(),
                    "q1_closed": f.q1_closed.status.to_string(),
                    "q2_closed": f.q2_closed.status.to_string(),
                    "identity": f.identity.to_string(),
                    "method": f.method,
                    "witness": witness,
                },
                "decomposition": rep.decomposition.as_ref().map(|d| json!({
                    "components": d.components.iter().map(|c| gens_json(c.gens())).collect::<Vec<_>>(),
                    "reintersects": d.reintersects,
                    "components_closed": d.components_closed,
                })),
                "tight_layer": rep.tight.iter().map(|(x, v)| json!({"element": x.to_string(), "status": v.status.to_string()})).collect::<Vec<_>>(),
                "q1_in_q2": rep.q1_in_q2,
                "hypothesis_violated": rep.hypothesis_violated(),
                "q1_parameter_ideal": rep.q1_parameter,
                "q2_parameter_ideal": rep.q2_parameter,
            });
            Outcome {
                status: status.into(),
                value: Some(value),
                certificate: Some(certificate_json(&f.product_closed.certificate)),
                verified: Some(verified),
                narrative: f.method.clone(),
            }
        }
        "briancon_skoda" => {
            let c = cx.multiplier(true)?.expect("required");
            let rep = briancon_skoda_check(&cx.ideal(0)?, &c, emax, window, &cx.probes()?)?;
            let verified = rep.surrogate.verify()?;
            let violation = rep.evidence.iter().any(|(_, v, in_q)| v.status == Status::In && !in_q);
            let status = if !verified {
                "ERROR"
            } else if rep.passes() {
                "PASS"
            } else if rep.surrogate.status == Status::Out || violation {
                "FAIL"
            } else {
                "UNKNOWN"
            };
            let value = json!({
                "parameter_ideal": rep.parameter_ideal,
                "surrogate": rep.surrogate.status.to_string(),
                "multiplier": c.describe(),
                "evidence": rep.evidence.iter().map(|(g, v, in_q)| json!({"element": g.to_string(), "tight": v.status.to_string(), "in_q": in_q})).collect::<Vec<_>>(),
            });
            Outcome {
                status: status.into(),
                value: Some(value),
                certificate: Some(certificate_json(&rep.surrogate.certificate)),
                verified: Some(verified),
                narrative: rep.surrogate.narrative.clone(),
            }
        }
        "colon_socle" => {
            let b = colon_socle_bound(&cx.ideal(0)?)?;
            Outcome::plain(
                "PASS",
                Some(json!({"colon": gens_json(b.gens()), "proper": b.is_proper()?})),
                "q : m, a lower bound for q^* valid under Gorenstein and non-F-rational hypotheses",
            )
        }
        "jacobian" => {
            let Arg::Ring(r) = &check.args[0] else { unreachable!() };
            let cs = jacobian_test_element_candidates(env.rings[r].ring())?;
            Outcome::plain(
                "PASS",
                Some(Value::Array(cs.iter().map(|c| Value::String(c.element.to_string())).collect())),
                "partial derivatives of the relations; valid for reduced, equidimensional affine models",
            )
        }
        other => return Err(Error::Parse { col: 0, msg: format!("unknown check {other}") }),
    })
}
