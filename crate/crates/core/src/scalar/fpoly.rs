//! Sparse multivariate polynomials over F_p, used for the numerators and
//! denominators of rational-function coefficients and for factor tests.
//!
//! Terms are kept strictly descending in lexicographic order (first variable
//! largest) with coefficients in `[1, p)`.

use std::cmp::Ordering;

pub(crate) fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

pub(crate) fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    a * b % p
}

pub(crate) fn pow_mod(mut a: u64, mut n: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while n > 0 {
        if n & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        n >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue via the extended Euclidean algorithm.
pub(crate) fn inv_mod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return None;
    }
    let (mut r0, mut r1) = (p as i64, a as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1);
    Some(t0.rem_euclid(p as i64) as u64)
}

fn lex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    a.cmp(b)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FpPoly {
    nvars: usize,
    terms: Vec<(Vec<u32>, u64)>,
}

impl FpPoly {
    pub fn zero(nvars: usize) -> Self {
        FpPoly { nvars, terms: Vec::new() }
    }

    pub fn constant(c: u64, nvars: usize, p: u64) -> Self {
        let c = c % p;
        if c == 0 {
            Self::zero(nvars)
        } else {
            FpPoly { nvars, terms: vec![(vec![0; nvars], c)] }
        }
    }

    pub fn one(nvars: usize) -> Self {
        FpPoly { nvars, terms: vec![(vec![0; nvars], 1)] }
    }

    pub fn var(i: usize, nvars: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        FpPoly { nvars, terms: vec![(e, 1)] }
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(nvars: usize, mut terms: Vec<(Vec<u32>, u64)>, p: u64) -> Self {
        terms.sort_by(|a, b| lex_cmp(&b.0, &a.0));
        let mut out: Vec<(Vec<u32>, u64)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            let c = c % p;
            match out.last_mut() {
                Some(last) if last.0 == e => last.1 = add_mod(last.1, c, p),
                _ => out.push((e, c)),
            }
        }
        out.retain(|t| t.1 != 0);
        FpPoly { nvars, terms: out }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Vec<u32>, u64)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant() == Some(1)
    }

    /// The value of a constant polynomial (zero included).
    pub fn as_constant(&self) -> Option<u64> {
        match self.terms.as_slice() {
            [] => Some(0),
            [(e, c)] if e.iter().all(|&x| x == 0) => Some(*c),
            _ => None,
        }
    }

    pub fn leading_coefficient(&self) -> u64 {
        self.terms.first().map_or(0, |t| t.1)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(e, _)| e.iter().sum::<u32>()).max().unwrap_or(0)
    }

    fn merge(&self, other: &Self, negate_other: bool, p: u64) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let sign = |c: u64| if negate_other { sub_mod(0, c, p) } else { c };
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match lex_cmp(&a.0, &b.0) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b.0.clone(), sign(b.1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = add_mod(a.1, sign(b.1), p);
                    if c != 0 {
                        out.push((a.0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(|(e, c)| (e.clone(), sign(*c))));
        FpPoly { nvars: self.nvars, terms: out }
    }

    pub fn add(&self, other: &Self, p: u64) -> Self {
        self.merge(other, false, p)
    }

    pub fn sub(&self, other: &Self, p: u64) -> Self {
        self.merge(other, true, p)
    }

    pub fn neg(&self, p: u64) -> Self {
        FpPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), p - c)).collect(),
        }
    }

    pub fn scale(&self, c: u64, p: u64) -> Self {
        let c = c % p;
        if c == 0 {
            return Self::zero(self.nvars);
        }
        FpPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, a)| (e.clone(), mul_mod(*a, c, p))).collect(),
        }
    }

    pub fn mul(&self, other: &Self, p: u64) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.nvars);
        }
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                terms.push((e, mul_mod(*ca, *cb, p)));
            }
        }
        Self::from_terms(self.nvars, terms, p)
    }

    fn mul_term(&self, exps: &[u32], c: u64, p: u64) -> Self {
        FpPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, a)| (e.iter().zip(exps).map(|(x, y)| x + y).collect(), mul_mod(*a, c, p)))
                .collect(),
        }
    }

    pub fn pow(&self, n: u64, p: u64) -> Self {
        let mut acc = Self::one(self.nvars);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base, p);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base, p);
            }
        }
        acc
    }

    /// `f^(p^e)` computed term-wise; F_p coefficients are fixed by Frobenius.
    pub fn frobenius(&self, q: u32) -> Self {
        FpPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().map(|x| x * q).collect(), *c))
                .collect(),
        }
    }

    pub fn monic(&self, p: u64) -> Self {
        match self.terms.first() {
            None => self.clone(),
            Some((_, 1)) => self.clone(),
            Some((_, c)) => self.scale(inv_mod(*c, p).expect("nonzero"), p),
        }
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a remainder.
    pub fn exact_div(&self, divisor: &Self, p: u64) -> Option<Self> {
        let (dm, dc) = divisor.terms.first()?;
        let dinv = inv_mod(*dc, p)?;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((rm, rc)) = rem.terms.first() {
            if rm.iter().zip(dm).any(|(a, b)| a < b) {
                return None;
            }
            let e: Vec<u32> = rm.iter().zip(dm).map(|(a, b)| a - b).collect();
            let c = mul_mod(*rc, dinv, p);
            rem = rem.sub(&divisor.mul_term(&e, c, p), p);
            quot.push((e, c));
        }
        Some(FpPoly { nvars: self.nvars, terms: quot })
    }

    pub fn degree_in(&self, v: usize) -> u32 {
        self.terms.iter().map(|(e, _)| e[v]).max().unwrap_or(0)
    }

    /// Coefficient of `x_v^k`, as a polynomial free of `x_v`.
    fn coeff_in(&self, v: usize, k: u32) -> Self {
        FpPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e[v] == k)
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e[v] = 0;
                    (e, *c)
                })
                .collect(),
        }
    }

    fn shift(&self, v: usize, k: u32) -> Self {
        FpPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e[v] += k;
                    (e, *c)
                })
                .collect(),
        }
    }

    /// Content with respect to `x_v`: monic gcd of the coefficients of the powers of `x_v`.
    fn content_in(&self, v: usize, p: u64) -> Self {
        let mut acc = Self::zero(self.nvars);
        for k in 0..=self.degree_in(v) {
            let c = self.coeff_in(v, k);
            if !c.is_zero() {
                acc = gcd_from(&acc, &c, v + 1, p);
                if acc.is_one() {
                    break;
                }
            }
        }
        acc.monic(p)
    }

    fn primitive_part_in(&self, v: usize, p: u64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let c = self.content_in(v, p);
        self.exact_div(&c, p).expect("content divides")
    }

    fn pseudo_rem(&self, g: &Self, v: usize, p: u64) -> Self {
        let dg = g.degree_in(v);
        let lg = g.coeff_in(v, dg);
        let mut r = self.clone();
        while !r.is_zero() && r.degree_in(v) >= dg {
            let dr = r.degree_in(v);
            let lr = r.coeff_in(v, dr);
            r = lg.mul(&r, p).sub(&lr.mul(&g.shift(v, dr - dg), p), p);
        }
        r
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self, p: u64) -> Self {
        gcd_from(self, other, 0, p).monic(p)
    }
}

/// gcd of polynomials in which the variables `x_0..x_{v-1}` do not occur,
/// by recursive content/primitive-part reduction along `x_v`.
fn gcd_from(a: &FpPoly, b: &FpPoly, v: usize, p: u64) -> FpPoly {
    if a.is_zero() {
        return b.monic(p);
    }
    if b.is_zero() {
        return a.monic(p);
    }
    let n = a.nvars;
    if v >= n || (a.as_constant().is_some() || b.as_constant().is_some()) {
        return FpPoly::one(n);
    }
    if a.degree_in(v) == 0 && b.degree_in(v) == 0 {
        return gcd_from(a, b, v + 1, p);
    }
    let ca = a.content_in(v, p);
    let cb = b.content_in(v, p);
    let content = gcd_from(&ca, &cb, v + 1, p);
    let mut f = a.exact_div(&ca, p).expect("content divides");
    let mut g = b.exact_div(&cb, p).expect("content divides");
    if f.degree_in(v) < g.degree_in(v) {
        std::mem::swap(&mut f, &mut g);
    }
    while !g.is_zero() && g.degree_in(v) > 0 {
        let r = f.pseudo_rem(&g, v, p);
        f = g;
        g = r.primitive_part_in(v, p);
    }
    // A nonzero remainder free of x_v is primitive, hence a unit.
    let prim = if g.is_zero() { f.primitive_part_in(v, p) } else { FpPoly::one(n) };
    content.mul(&prim, p).monic(p)
}
