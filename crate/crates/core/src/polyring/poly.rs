use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::monomial::{Monomial, MonomialOrder};
use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

/// A polynomial ring over a coefficient field with a fixed monomial order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyRing {
    field: Field,
    vars: Vec<String>,
    order: MonomialOrder,
}

pub type Ring = Arc<PolyRing>;

impl PolyRing {
    pub fn new<S: Into<String>>(
        field: Field,
        vars: impl IntoIterator<Item = S>,
        order: MonomialOrder,
    ) -> Result<Ring> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) || field.params().contains(v) {
                return Err(Error::NameClash(v.clone()));
            }
        }
        Ok(Arc::new(PolyRing { field, vars, order }))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Same variables and field under a different order.
    pub fn with_order(&self, order: MonomialOrder) -> Ring {
        Arc::new(PolyRing { field: self.field.clone(), vars: self.vars.clone(), order })
    }

    pub fn same(a: &Ring, b: &Ring) -> bool {
        Arc::ptr_eq(a, b) || **a == **b
    }
}

pub trait RingExt {
    fn zero(&self) -> Polynomial;
    fn one(&self) -> Polynomial;
    fn var(&self, i: usize) -> Polynomial;
    fn constant(&self, c: Scalar) -> Polynomial;
    fn int(&self, n: i64) -> Polynomial;
    fn monomial(&self, m: Monomial, c: Scalar) -> Polynomial;
    fn parse(&self, text: &str) -> Result<Polynomial>;
}

impl RingExt for Ring {
    fn zero(&self) -> Polynomial {
        Polynomial { ring: self.clone(), terms: Vec::new() }
    }

    fn one(&self) -> Polynomial {
        self.constant(self.field.one())
    }

    fn var(&self, i: usize) -> Polynomial {
        self.monomial(Monomial::var(i, self.nvars()), self.field.one())
    }

    fn constant(&self, c: Scalar) -> Polynomial {
        self.monomial(Monomial::one(self.nvars()), c)
    }

    fn int(&self, n: i64) -> Polynomial {
        self.constant(self.field.from_int(n))
    }

    fn monomial(&self, m: Monomial, c: Scalar) -> Polynomial {
        assert_eq!(m.nvars(), self.nvars(), "monomial arity");
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Polynomial { ring: self.clone(), terms }
    }

    fn parse(&self, text: &str) -> Result<Polynomial> {
        super::parse::parse_polynomial(self, text)
    }
}

/// Terms strictly descending under the ring's order, no zero coefficients.
#[derive(Clone)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(Monomial, Scalar)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        PolyRing::same(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl Polynomial {
    /// Builds a polynomial from unsorted terms, combining duplicates.
    pub fn from_terms(ring: &Ring, mut terms: Vec<(Monomial, Scalar)>) -> Polynomial {
        let order = ring.order;
        let field = &ring.field;
        terms.sort_by(|a, b| order.compare(&b.0, &a.0));
        let mut out: Vec<(Monomial, Scalar)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = field.add(&last.1, &c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|t| !t.1.is_zero());
        Polynomial { ring: ring.clone(), terms: out }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn field(&self) -> &Field {
        &self.ring.field
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        matches!(self.terms.as_slice(), [(m, c)] if m.is_one() && c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn constant_value(&self) -> Option<Scalar> {
        match self.terms.as_slice() {
            [] => Some(self.field().zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading_term(&self) -> Option<&(Monomial, Scalar)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coefficient(&self) -> Option<&Scalar> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].0.degree() == w[1].0.degree())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Variables that occur in some term.
    pub fn support_vars(&self) -> Vec<usize> {
        let mut seen = vec![false; self.ring.nvars()];
        for (m, _) in &self.terms {
            for i in m.support() {
                seen[i] = true;
            }
        }
        seen.iter().enumerate().filter(|(_, &s)| s).map(|(i, _)| i).collect()
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if PolyRing::same(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let field = &self.ring.field;
        let order = self.ring.order;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let sign = |c: &Scalar| if negate { field.neg(c) } else { c.clone() };
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match order.compare(&a.0, &b.0) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b.0.clone(), sign(&b.1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { field.sub(&a.1, &b.1) } else { field.add(&a.1, &b.1) };
                    if !c.is_zero() {
                        out.push((a.0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(|(m, c)| (m.clone(), sign(c))));
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(self.ring.zero());
        }
        let (small, large) =
            if self.terms.len() <= other.terms.len() { (self, other) } else { (other, self) };
        if small.terms.len() == 1 {
            let (m, c) = &small.terms[0];
            return Ok(large.mul_term(m, c));
        }
        let field = &self.ring.field;
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &small.terms {
            for (mb, cb) in &large.terms {
                terms.push((ma.mul(mb), field.mul(ca, cb)));
            }
        }
        Ok(Polynomial::from_terms(&self.ring, terms))
    }

    pub fn neg(&self) -> Polynomial {
        let field = &self.ring.field;
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), field.neg(c))).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return self.ring.zero();
        }
        let field = &self.ring.field;
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), field.mul(a, c))).collect(),
        }
    }

    /// Product with the term `c * m`; order is preserved since orders are multiplicative.
    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return self.ring.zero();
        }
        let field = &self.ring.field;
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(a, x)| (a.mul(m), field.mul(x, c))).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut acc = self.ring.one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Leading coefficient scaled to 1.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&self.field().inv(c).expect("nonzero leading coefficient")),
        }
    }

    /// `f^(p^e)` computed term-wise: `(c, a) -> (c^(p^e), p^e * a)`.
    pub fn frobenius_power(&self, e: u32) -> Result<Polynomial> {
        let field = &self.ring.field;
        let q = (field.characteristic() as u32).checked_pow(e).ok_or(Error::ExponentOverflow)?;
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| Ok((m.checked_pow(q)?, field.frobenius(c, e))))
            .collect::<Result<Vec<_>>>()?;
        // term order is preserved by scaling all exponent vectors by q
        Ok(Polynomial { ring: self.ring.clone(), terms })
    }

    /// Exact quotient by `divisor`, or `None` if the division is not exact.
    pub fn exact_div(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let (dm, dc) = divisor.leading_term()?;
        let field = &self.ring.field;
        let dinv = field.inv(dc).ok()?;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((rm, rc)) = rem.terms.first() {
            let m = dm.quotient_of(rm)?;
            let c = field.mul(rc, &dinv);
            rem = rem.merge(&divisor.mul_term(&m, &c), true);
            quot.push((m, c));
        }
        Some(Polynomial { ring: self.ring.clone(), terms: quot })
    }

    /// Formal partial derivative with respect to the i-th variable.
    pub fn derivative(&self, i: usize) -> Polynomial {
        let field = &self.ring.field;
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exps()[i] > 0)
            .map(|(m, c)| {
                let mut e = m.exps().to_vec();
                let k = e[i];
                e[i] -= 1;
                (Monomial::new(e), field.mul(c, &field.from_int(k as i64)))
            })
            .collect();
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Re-expresses the polynomial in `target`, sending variable `i` to
    /// variable `index_map[i]`. Target must share the coefficient field.
    pub fn embed(&self, target: &Ring, index_map: &[usize]) -> Polynomial {
        debug_assert_eq!(self.ring.field, target.field);
        let n = target.nvars();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0; n];
                for (i, &k) in m.exps().iter().enumerate() {
                    e[index_map[i]] += k;
                }
                (Monomial::new(e), c.clone())
            })
            .collect();
        Polynomial::from_terms(target, terms)
    }

    /// Same variables, different ring object (typically another order).
    pub fn reorder(&self, target: &Ring) -> Polynomial {
        assert_eq!(self.ring.nvars(), target.nvars());
        if PolyRing::same(&self.ring, target) {
            return self.clone();
        }
        Polynomial::from_terms(target, self.terms.clone())
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $impl:ident) => {
        impl $trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$impl(rhs).expect("polynomials from different rings")
            }
        }
        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$impl(&rhs).expect("polynomials from different rings")
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = &self.ring.field;
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let vars: Vec<String> = m
                .exps()
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(j, &k)| {
                    if k == 1 {
                        self.ring.vars[j].clone()
                    } else {
                        format!("{}^{}", self.ring.vars[j], k)
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{}", field.display(c))?;
            } else if c.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{}*{}", field.display(c), vars.join("*"))?;
            }
        }
        Ok(())
    }
}
