use std::cmp::Ordering;

use crate::error::{Error, Result};

/// Exponent vector of a monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Box<[u32]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars].into_boxed_slice())
    }

    pub fn new(exps: impl Into<Box<[u32]>>) -> Self {
        Monomial(exps.into())
    }

    pub fn var(i: usize, nvars: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e.into())
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Panics on exponent overflow rather than wrapping.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        )
    }

    pub fn checked_pow(&self, k: u32) -> Result<Monomial> {
        self.0
            .iter()
            .map(|a| a.checked_mul(k).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()
            .map(|v| Monomial(v.into()))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| b.checked_sub(*a))
            .collect::<Option<Vec<_>>>()
            .map(|v| Monomial(v.into()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Support variables.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    /// `Some(i)` when the monomial is a positive power of the single variable `x_i`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut it = self.support();
        match (it.next(), it.next()) {
            (Some(i), None) => Some(i),
            _ => None,
        }
    }
}

/// Total orders on exponent vectors. The first ring variable is the largest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    Lex,
    #[default]
    GrevLex,
    /// Block order: graded reverse lexicographic on the first `k` variables,
    /// ties broken by graded reverse lexicographic on the rest.
    Elimination(usize),
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b.iter()).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (a, b) = (a.exps(), b.exps());
        match *self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::GrevLex => grevlex(a, b),
            MonomialOrder::Elimination(k) => {
                let k = k.min(a.len());
                grevlex(&a[..k], &b[..k]).then_with(|| grevlex(&a[k..], &b[k..]))
            }
        }
    }

    /// Fallible comparison of raw exponent vectors.
    pub fn compare_exps(&self, a: &[u32], b: &[u32]) -> Result<Ordering> {
        if a.len() != b.len() {
            return Err(Error::LengthMismatch(a.len(), b.len()));
        }
        Ok(self.compare(&Monomial::new(a.to_vec()), &Monomial::new(b.to_vec())))
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::GrevLex => "grevlex".into(),
            MonomialOrder::Elimination(k) => format!("elim({k})"),
        }
    }
}

/// Every exponent vector in `nvars` variables of total degree exactly `d`,
/// in descending lexicographic order.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(Monomial::new(cur.clone()));
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    if nvars == 0 {
        return if d == 0 { vec![Monomial::one(0)] } else { vec![] };
    }
    let mut out = Vec::new();
    rec(0, d, &mut vec![0; nvars], &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn compare_examples() {
        // x > y
        assert_eq!(MonomialOrder::GrevLex.compare(&m(&[2, 1]), &m(&[1, 2])), Ordering::Greater);
        assert_eq!(MonomialOrder::Lex.compare(&m(&[0, 5]), &m(&[1, 0])), Ordering::Less);
        // {x} | {y, z}: any power of x beats anything free of x
        assert_eq!(
            MonomialOrder::Elimination(1).compare(&m(&[0, 9, 0]), &m(&[1, 0, 0])),
            Ordering::Less
        );
        assert_eq!(
            MonomialOrder::GrevLex.compare_exps(&[1, 0], &[1, 0, 0]),
            Err(Error::LengthMismatch(2, 3))
        );
    }

    #[test]
    fn grevlex_breaks_ties_on_last_variable() {
        // x z^2 vs y^3 ... same degree 3; last variable exponent: 2 vs 0, so y^3 is larger
        assert_eq!(MonomialOrder::GrevLex.compare(&m(&[1, 0, 2]), &m(&[0, 3, 0])), Ordering::Less);
    }

    #[test]
    fn degree_slices() {
        assert_eq!(monomials_of_degree(3, 3).len(), 10);
        assert_eq!(monomials_of_degree(3, 8).len(), 45);
        assert_eq!(monomials_of_degree(2, 0), vec![m(&[0, 0])]);
    }

    fn exps(n: usize) -> impl Strategy<Value = Vec<u32>> {
        proptest::collection::vec(0u32..5, n)
    }

    proptest! {
        #[test]
        fn orders_are_multiplicative_and_well_founded(a in exps(4), b in exps(4), c in exps(4), k in 0usize..4) {
            for order in [MonomialOrder::Lex, MonomialOrder::GrevLex, MonomialOrder::Elimination(k)] {
                let (a, b, c) = (m(&a), m(&b), m(&c));
                let ab = order.compare(&a, &b);
                prop_assert_eq!(order.compare(&a.mul(&c), &b.mul(&c)), ab);
                prop_assert_ne!(order.compare(&Monomial::one(4), &a), Ordering::Greater);
                prop_assert_eq!(order.compare(&b, &a), ab.reverse());
                if ab == Ordering::Equal { prop_assert_eq!(&a, &b); }
            }
        }
    }
}
