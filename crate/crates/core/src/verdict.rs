//! Three-valued results with replayable certificates.

use std::fmt;

use crate::error::Result;
use crate::ideal::Ideal;
use crate::polyring::Polynomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    In,
    Out,
    Unknown,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::In => "IN",
            Status::Out => "OUT",
            Status::Unknown => "UNKNOWN",
        })
    }
}

/// The claim `element ∈ (generators)` has truth value `member`.
///
/// Generators are the full lifted generating set (relations included), so
/// a claim can be replayed in the ambient polynomial ring with no other context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Membership {
    pub element: Polynomial,
    pub generators: Vec<Polynomial>,
    pub member: bool,
}

impl Membership {
    pub fn check(element: &Polynomial, ideal: &Ideal) -> Result<Membership> {
        Ok(Membership {
            element: element.clone(),
            generators: ideal.gens().to_vec(),
            member: ideal.contains(element)?,
        })
    }

    /// Recomputes the claim from scratch with a fresh basis.
    pub fn verify(&self) -> Result<bool> {
        let ideal = Ideal::new(self.element.ring(), self.generators.clone())?;
        Ok(ideal.contains(&self.element)? == self.member)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// `x^(p^e) ∈ I^[p^e]`.
    Frobenius { e: u32, claim: Membership },
    /// `c · x^(p^e) ∉ I^[p^e]` for a declared test element `c`.
    Refutation { multiplier: Polynomial, e: u32, claim: Membership },
    /// An element outside the ideal whose Frobenius power lands in the bracket power.
    Witness { element: Polynomial, e: u32, outside: Membership, inside: Membership },
    /// Exponents explored without a decisive outcome, or probes that found no witness.
    Evidence { emax: u32, claims: Vec<(u32, Membership)> },
    /// Memberships establishing an equality or containment of ideals.
    IdealEquality { claims: Vec<Membership> },
}

impl Certificate {
    pub fn claims(&self) -> Vec<&Membership> {
        match self {
            Certificate::Frobenius { claim, .. } | Certificate::Refutation { claim, .. } => vec![claim],
            Certificate::Witness { outside, inside, .. } => vec![outside, inside],
            Certificate::Evidence { claims, .. } => claims.iter().map(|(_, c)| c).collect(),
            Certificate::IdealEquality { claims } => claims.iter().collect(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::Frobenius { .. } => "frobenius",
            Certificate::Refutation { .. } => "test-element-refutation",
            Certificate::Witness { .. } => "witness",
            Certificate::Evidence { .. } => "evidence-range",
            Certificate::IdealEquality { .. } => "ideal-equality",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub status: Status,
    pub certificate: Certificate,
    pub narrative: String,
}

impl Verdict {
    pub fn new(status: Status, certificate: Certificate, narrative: impl Into<String>) -> Verdict {
        Verdict { status, certificate, narrative: narrative.into() }
    }

    /// Replays every membership in the certificate.
    pub fn verify(&self) -> Result<bool> {
        for claim in self.certificate.claims() {
            if !claim.verify()? {
                return Ok(false);
            }
        }
        let shape_ok = match (&self.status, &self.certificate) {
            (Status::Out, Certificate::Refutation { claim, .. }) => !claim.member,
            (_, Certificate::Frobenius { claim, .. }) => claim.member,
            (_, Certificate::Witness { outside, inside, .. }) => !outside.member && inside.member,
            _ => true,
        };
        Ok(shape_ok)
    }
}
