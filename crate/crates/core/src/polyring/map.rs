use super::poly::{PolyRing, Polynomial, Ring, RingExt};
use crate::error::{Error, Result};

/// How a ring map acts on coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoefficientAction {
    Identity,
    /// Coefficients are raised to the `p^e`-th power.
    Frobenius(u32),
}

/// A ring homomorphism given by the images of the source variables.
#[derive(Debug, Clone)]
pub struct RingMap {
    source: Ring,
    target: Ring,
    images: Vec<Polynomial>,
    action: CoefficientAction,
}

impl RingMap {
    pub fn new(source: &Ring, target: &Ring, images: Vec<Polynomial>) -> Result<RingMap> {
        Self::with_action(source, target, images, CoefficientAction::Identity)
    }

    pub fn with_action(
        source: &Ring,
        target: &Ring,
        images: Vec<Polynomial>,
        action: CoefficientAction,
    ) -> Result<RingMap> {
        if images.len() != source.nvars() {
            return Err(Error::LengthMismatch(images.len(), source.nvars()));
        }
        if source.field() != target.field() {
            return Err(Error::RingMismatch);
        }
        if images.iter().any(|g| !PolyRing::same(g.ring(), target)) {
            return Err(Error::RingMismatch);
        }
        Ok(RingMap { source: source.clone(), target: target.clone(), images, action })
    }

    /// The e-th Frobenius endomorphism `x_i -> x_i^(p^e)` of a ring.
    pub fn frobenius(ring: &Ring, e: u32) -> Result<RingMap> {
        let images = (0..ring.nvars())
            .map(|i| ring.var(i).frobenius_power(e))
            .collect::<Result<Vec<_>>>()?;
        Self::with_action(ring, ring, images, CoefficientAction::Frobenius(e))
    }

    pub fn source(&self) -> &Ring {
        &self.source
    }

    pub fn target(&self) -> &Ring {
        &self.target
    }

    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    pub fn action(&self) -> CoefficientAction {
        self.action
    }

    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        if !PolyRing::same(f.ring(), &self.source) {
            return Err(Error::RingMismatch);
        }
        let field = self.target.field();
        // powers[i][k] = images[i]^k, grown lazily
        let mut powers: Vec<Vec<Polynomial>> =
            self.images.iter().map(|_| vec![self.target.one()]).collect();
        let mut acc = self.target.zero();
        for (m, c) in f.terms() {
            let c = match self.action {
                CoefficientAction::Identity => c.clone(),
                CoefficientAction::Frobenius(e) => field.frobenius(c, e),
            };
            let mut term = self.target.constant(c);
            for (i, &k) in m.exps().iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while powers[i].len() <= k as usize {
                    let next = powers[i].last().expect("nonempty") * &self.images[i];
                    powers[i].push(next);
                }
                term = &term * &powers[i][k as usize];
            }
            acc = &acc + &term;
        }
        Ok(acc)
    }
}
