//! Coefficient fields: the prime field F_p and rational function fields
//! F_p(u_1, ..., u_m).
//!
//! Scalars are immutable, canonically normalized values; arithmetic goes
//! through the owning [`Field`], which carries the characteristic and the
//! parameter names.

pub(crate) mod fpoly;

use std::fmt;
use std::sync::Arc;

pub use fpoly::FpPoly;
use fpoly::{add_mod, inv_mod, mul_mod, pow_mod, sub_mod};

use crate::error::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Characteristic plus an ordered list of transcendental parameters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Field {
    p: u64,
    params: Arc<[String]>,
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        Self::with_params(p, Vec::<String>::new())
    }

    pub fn with_params<S: Into<String>>(p: u64, params: impl IntoIterator<Item = S>) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p >= 1 << 31 {
            return Err(Error::CharacteristicTooLarge(p));
        }
        let params: Vec<String> = params.into_iter().map(Into::into).collect();
        for (i, a) in params.iter().enumerate() {
            if params[..i].contains(a) {
                return Err(Error::NameClash(a.clone()));
            }
        }
        Ok(Field { p, params: params.into() })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    /// True for F_p itself; parameter fields are not perfect.
    pub fn is_prime_field(&self) -> bool {
        self.params.is_empty()
    }

    pub fn zero(&self) -> Scalar {
        Scalar::Const(0)
    }

    pub fn one(&self) -> Scalar {
        Scalar::Const(1 % self.p)
    }

    pub fn from_int(&self, n: i64) -> Scalar {
        Scalar::Const(n.rem_euclid(self.p as i64) as u64)
    }

    /// The i-th parameter as a scalar.
    pub fn param(&self, i: usize) -> Scalar {
        let m = self.params.len();
        Scalar::Frac(Arc::new(RatFunc { num: FpPoly::var(i, m), den: FpPoly::one(m) }))
    }

    pub fn param_by_name(&self, name: &str) -> Option<Scalar> {
        self.params.iter().position(|s| s == name).map(|i| self.param(i))
    }

    fn to_frac(&self, a: &Scalar) -> (FpPoly, FpPoly) {
        let m = self.params.len();
        match a {
            Scalar::Const(c) => (FpPoly::constant(*c, m, self.p), FpPoly::one(m)),
            Scalar::Frac(r) => (r.num.clone(), r.den.clone()),
        }
    }

    /// Reduces `num / den` to lowest terms with a monic denominator.
    pub fn normalize(&self, num: FpPoly, den: FpPoly) -> Result<Scalar> {
        let p = self.p;
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Scalar::Const(0));
        }
        let g = num.gcd(&den, p);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g, p).expect("gcd divides"), den.exact_div(&g, p).expect("gcd divides"))
        };
        let lc = den.leading_coefficient();
        if lc != 1 {
            let inv = inv_mod(lc, p).expect("nonzero");
            num = num.scale(inv, p);
            den = den.scale(inv, p);
        }
        if den.is_one() {
            if let Some(c) = num.as_constant() {
                return Ok(Scalar::Const(c));
            }
        }
        Ok(Scalar::Frac(Arc::new(RatFunc { num, den })))
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        let p = self.p;
        match (a, b) {
            (Scalar::Const(x), Scalar::Const(y)) => Scalar::Const(add_mod(*x, *y, p)),
            _ => {
                let (an, ad) = self.to_frac(a);
                let (bn, bd) = self.to_frac(b);
                if ad == bd {
                    self.normalize(an.add(&bn, p), ad).expect("nonzero denominator")
                } else {
                    let num = an.mul(&bd, p).add(&bn.mul(&ad, p), p);
                    self.normalize(num, ad.mul(&bd, p)).expect("nonzero denominator")
                }
            }
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match a {
            Scalar::Const(x) => Scalar::Const(sub_mod(0, *x, self.p)),
            Scalar::Frac(r) => {
                Scalar::Frac(Arc::new(RatFunc { num: r.num.neg(self.p), den: r.den.clone() }))
            }
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Const(x), Scalar::Const(y)) => Scalar::Const(sub_mod(*x, *y, self.p)),
            _ => self.add(a, &self.neg(b)),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        let p = self.p;
        match (a, b) {
            (Scalar::Const(x), Scalar::Const(y)) => Scalar::Const(mul_mod(*x, *y, p)),
            (Scalar::Const(0), _) | (_, Scalar::Const(0)) => Scalar::Const(0),
            (Scalar::Const(1), x) | (x, Scalar::Const(1)) => x.clone(),
            (Scalar::Const(c), Scalar::Frac(r)) | (Scalar::Frac(r), Scalar::Const(c)) => {
                Scalar::Frac(Arc::new(RatFunc { num: r.num.scale(*c, p), den: r.den.clone() }))
            }
            _ => {
                let (an, ad) = self.to_frac(a);
                let (bn, bd) = self.to_frac(b);
                self.normalize(an.mul(&bn, p), ad.mul(&bd, p)).expect("nonzero denominator")
            }
        }
    }

    pub fn inv(&self, a: &Scalar) -> Result<Scalar> {
        match a {
            Scalar::Const(0) => Err(Error::ZeroInverse),
            Scalar::Const(x) => Ok(Scalar::Const(inv_mod(*x, self.p).expect("nonzero"))),
            Scalar::Frac(r) => self.normalize(r.den.clone(), r.num.clone()),
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        Ok(self.mul(a, &self.inv(b).map_err(|_| Error::DivisionByZero)?))
    }

    pub fn pow(&self, a: &Scalar, n: u64) -> Scalar {
        match a {
            Scalar::Const(x) => Scalar::Const(pow_mod(*x, n, self.p)),
            Scalar::Frac(r) => Scalar::Frac(Arc::new(RatFunc {
                num: r.num.pow(n, self.p),
                den: r.den.pow(n, self.p),
            })),
        }
    }

    /// `a^(p^e)`. Additive, and the identity on F_p.
    pub fn frobenius(&self, a: &Scalar, e: u32) -> Scalar {
        match a {
            Scalar::Const(_) => a.clone(),
            Scalar::Frac(r) => {
                let q = (self.p as u32).pow(e);
                // gcd(f^q, g^q) = gcd(f, g)^q and a monic denominator stays monic.
                Scalar::Frac(Arc::new(RatFunc { num: r.num.frobenius(q), den: r.den.frobenius(q) }))
            }
        }
    }

    pub fn display<'a>(&'a self, a: &'a Scalar) -> ScalarDisplay<'a> {
        ScalarDisplay { field: self, scalar: a }
    }

    pub(crate) fn fmt_fp_poly(&self, f: &FpPoly, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if f.is_zero() {
            return write!(out, "0");
        }
        for (i, (e, c)) in f.terms().iter().enumerate() {
            if i > 0 {
                write!(out, " + ")?;
            }
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(j, &k)| {
                    if k == 1 {
                        self.params[j].clone()
                    } else {
                        format!("{}^{}", self.params[j], k)
                    }
                })
                .collect();
            match (vars.is_empty(), *c) {
                (true, c) => write!(out, "{c}")?,
                (false, 1) => write!(out, "{}", vars.join("*"))?,
                (false, c) => write!(out, "{c}*{}", vars.join("*"))?,
            }
        }
        Ok(())
    }
}

/// A normalized fraction of parameter polynomials; never a constant.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: FpPoly,
    den: FpPoly,
}

impl RatFunc {
    pub fn numerator(&self) -> &FpPoly {
        &self.num
    }

    pub fn denominator(&self) -> &FpPoly {
        &self.den
    }
}

/// An element of a coefficient field. `Const` holds residues in `[0, p)`;
/// `Frac` is used only for values that are not constants.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Const(u64),
    Frac(Arc<RatFunc>),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Const(0))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Const(1))
    }

    pub fn as_const(&self) -> Option<u64> {
        match self {
            Scalar::Const(c) => Some(*c),
            Scalar::Frac(_) => None,
        }
    }

    /// Numerator and denominator over F_p in the field's parameters.
    pub fn parts(&self, field: &Field) -> (FpPoly, FpPoly) {
        field.to_frac(self)
    }
}

pub struct ScalarDisplay<'a> {
    field: &'a Field,
    scalar: &'a Scalar,
}

impl fmt::Display for ScalarDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.scalar {
            Scalar::Const(c) => write!(f, "{c}"),
            Scalar::Frac(r) => {
                let wrap_num = r.num.terms().len() > 1;
                if wrap_num {
                    write!(f, "(")?;
                }
                self.field.fmt_fp_poly(&r.num, f)?;
                if wrap_num {
                    write!(f, ")")?;
                }
                if !r.den.is_one() {
                    write!(f, "/")?;
                    let single = r.den.terms().len() == 1;
                    let bare = single && r.den.terms()[0].1 == 1 && {
                        let e = &r.den.terms()[0].0;
                        e.iter().filter(|&&k| k > 0).count() == 1
                    };
                    if !bare {
                        write!(f, "(")?;
                    }
                    self.field.fmt_fp_poly(&r.den, f)?;
                    if !bare {
                        write!(f, ")")?;
                    }
                }
                Ok(())
            }
        }
    }
}

/// Inverse of a nonzero constant in F_p.
pub fn fp_inverse(a: &Scalar, field: &Field) -> Result<Scalar> {
    match a {
        Scalar::Const(_) => field.inv(a),
        Scalar::Frac(_) => Err(Error::RingMismatch),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2uv() -> Field {
        Field::with_params(2, ["u", "v"]).unwrap()
    }

    #[test]
    fn construction_checks() {
        assert_eq!(Field::prime(4), Err(Error::NotPrime(4)));
        assert_eq!(Field::prime(1), Err(Error::NotPrime(1)));
        assert!(matches!(Field::with_params(3, ["u", "u"]), Err(Error::NameClash(_))));
        assert!(Field::prime(7).unwrap().is_prime_field());
        assert!(!f2uv().is_prime_field());
    }

    #[test]
    fn fp_inverse_examples() {
        let f2 = Field::prime(2).unwrap();
        assert_eq!(fp_inverse(&Scalar::Const(1), &f2).unwrap(), Scalar::Const(1));
        let f5 = Field::prime(5).unwrap();
        assert_eq!(fp_inverse(&Scalar::Const(2), &f5).unwrap(), Scalar::Const(3));
        let f7 = Field::prime(7).unwrap();
        // exhaustive search over residues
        let expected = (1..7).find(|b| 4 * b % 7 == 1).unwrap();
        assert_eq!(expected, 2);
        assert_eq!(fp_inverse(&Scalar::Const(4), &f7).unwrap(), Scalar::Const(expected));
        assert_eq!(fp_inverse(&Scalar::Const(0), &f7), Err(Error::ZeroInverse));
    }

    #[test]
    fn normalize_examples() {
        let k = f2uv();
        let (u, v) = (FpPoly::var(0, 2), FpPoly::var(1, 2));
        let uv = u.mul(&v, 2);
        assert_eq!(k.normalize(uv, v.clone()).unwrap(), k.param(0));

        let num = u.mul(&u, 2).add(&v.mul(&v, 2), 2);
        let den = u.add(&v, 2);
        let s = k.normalize(num, den.clone()).unwrap();
        assert_eq!(s, k.normalize(den, FpPoly::one(2)).unwrap());
        assert_eq!(k.display(&s).to_string(), "(u + v)");

        let v3 = v.pow(3, 2);
        let s = k.normalize(FpPoly::one(2), v3.clone()).unwrap();
        assert_eq!(s.parts(&k), (FpPoly::one(2), v3));
        assert_eq!(k.display(&s).to_string(), "1/v^3");

        assert_eq!(k.normalize(FpPoly::one(2), FpPoly::zero(2)), Err(Error::DivisionByZero));
    }

    #[test]
    fn normalize_monic_denominator() {
        let k = Field::with_params(5, ["t"]).unwrap();
        let t = FpPoly::var(0, 1);
        // (2t) / (3t + 3) -> (4t) / (t + 1) since 3^{-1} = 2
        let s = k.normalize(t.scale(2, 5), t.scale(3, 5).add(&FpPoly::constant(3, 1, 5), 5)).unwrap();
        let (n, d) = s.parts(&k);
        assert_eq!(d.leading_coefficient(), 1);
        assert_eq!(n, t.scale(4, 5));
    }

    #[test]
    fn frobenius_examples() {
        let k = f2uv();
        for c in 0..2 {
            assert_eq!(k.frobenius(&Scalar::Const(c), 3), Scalar::Const(c));
        }
        let f7 = Field::prime(7).unwrap();
        for c in 0..7 {
            assert_eq!(f7.frobenius(&Scalar::Const(c), 2), f7.pow(&Scalar::Const(c), 49));
        }
        let u = k.param(0);
        assert_eq!(k.frobenius(&u, 1), k.mul(&u, &u));
        let u_over_v = k.div(&u, &k.param(1)).unwrap();
        let expanded = k.pow(&u_over_v, 4);
        assert_eq!(k.frobenius(&u_over_v, 2), expanded);
        assert_eq!(k.display(&expanded).to_string(), "u^4/v^4");
    }
}
