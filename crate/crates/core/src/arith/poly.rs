use alloc::collections::BTreeMap;
use core::ops::{Add, Mul, Neg, Sub};

use super::{Monomial, PrimeField, MAX_VARS};

/// Sparse multivariate polynomial over `F_p` in `nvars <= 4` variables.
///
/// Zero coefficients are never stored; terms are kept in graded-lex order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    field: PrimeField,
    nvars: usize,
    terms: BTreeMap<Monomial, u32>,
}

impl MultiPoly {
    pub fn zero(field: PrimeField, nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables");
        MultiPoly { field, nvars, terms: BTreeMap::new() }
    }

    pub fn constant(field: PrimeField, nvars: usize, c: i64) -> Self {
        let mut p = Self::zero(field, nvars);
        let c = field.reduce(c);
        if c != 0 {
            p.terms.insert(Monomial::ONE, c);
        }
        p
    }

    pub fn one(field: PrimeField, nvars: usize) -> Self {
        Self::constant(field, nvars, 1)
    }

    /// The variable `t_{i+1}` (0-based `i`).
    pub fn var(field: PrimeField, nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        Self::monomial(field, nvars, Monomial::var(i), 1)
    }

    pub fn monomial(field: PrimeField, nvars: usize, m: Monomial, c: u32) -> Self {
        let mut p = Self::zero(field, nvars);
        p.add_term(m, c);
        p
    }

    pub fn from_terms(
        field: PrimeField,
        nvars: usize,
        terms: impl IntoIterator<Item = (Monomial, u32)>,
    ) -> Self {
        let mut p = Self::zero(field, nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &u32)> + '_ {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> u32 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::ONE) == Some(&1)
    }

    /// The constant value if the polynomial has degree `<= 0`.
    pub fn as_constant(&self) -> Option<u32> {
        match self.terms.len() {
            0 => Some(0),
            1 => self.terms.get(&Monomial::ONE).copied(),
            _ => None,
        }
    }

    pub fn leading_term(&self) -> Option<(Monomial, u32)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, *c))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.leading_term().map(|(m, _)| m.degree())
    }

    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.exp(i)).max()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: u32) {
        let c = c % self.field.p();
        if c == 0 {
            return;
        }
        let f = self.field;
        let entry = self.terms.entry(m).or_insert(0);
        *entry = f.add(*entry, c);
        if *entry == 0 {
            self.terms.remove(&m);
        }
    }

    fn check(&self, other: &Self) {
        assert!(
            self.field == other.field && self.nvars == other.nvars,
            "polynomials over different rings"
        );
    }

    pub fn scale(&self, c: u32) -> Self {
        let c = c % self.field.p();
        if c == 0 {
            return Self::zero(self.field, self.nvars);
        }
        let f = self.field;
        MultiPoly {
            field: f,
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (*m, f.mul(*a, c))).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: u32) -> Self {
        let mut out = Self::zero(self.field, self.nvars);
        let f = self.field;
        for (e, a) in &self.terms {
            out.add_term(e.mul(m), f.mul(*a, c));
        }
        out
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.field, self.nvars);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Makes the leading coefficient 1; returns the polynomial and the
    /// removed factor.
    pub fn monic(&self) -> (Self, u32) {
        match self.leading_term() {
            None => (self.clone(), 1),
            Some((_, lc)) => {
                let inv = self.field.inv(lc).expect("nonzero leading coefficient");
                (self.scale(inv), lc)
            }
        }
    }

    /// `f^p`, computed exponentwise since coefficients are fixed by Frobenius.
    pub fn frobenius(&self) -> Self {
        let p = self.field.p();
        MultiPoly {
            field: self.field,
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.pow(p), *c)).collect(),
        }
    }

    /// `g` with `g^p = self`, if every exponent is divisible by `p`.
    pub fn pth_root(&self) -> Option<Self> {
        let p = self.field.p();
        let mut out = Self::zero(self.field, self.nvars);
        for (m, c) in &self.terms {
            if m.0.iter().any(|e| e % p != 0) {
                return None;
            }
            let mut e = m.0;
            for x in e.iter_mut() {
                *x /= p;
            }
            out.terms.insert(Monomial(e), *c);
        }
        Some(out)
    }

    /// Euler derivative `t_i * d/dt_i`: multiplies each term by its exponent.
    pub fn euler(&self, i: usize) -> Self {
        let f = self.field;
        let mut out = Self::zero(f, self.nvars);
        for (m, c) in &self.terms {
            out.add_term(*m, f.mul(*c, m.exp(i) % f.p()));
        }
        out
    }

    /// Ordinary partial derivative `d/dt_i`.
    pub fn derivative(&self, i: usize) -> Self {
        let f = self.field;
        let mut out = Self::zero(f, self.nvars);
        for (m, c) in &self.terms {
            let e = m.exp(i);
            if e == 0 {
                continue;
            }
            let mut n = m.0;
            n[i] -= 1;
            out.add_term(Monomial(n), f.mul(*c, e % f.p()));
        }
        out
    }

    /// Gcd of all monomials in the support.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        match it.next() {
            None => Monomial::ONE,
            Some(first) => it.fold(*first, |g, m| g.gcd(m)),
        }
    }

    pub fn div_monomial(&self, d: &Monomial) -> Self {
        MultiPoly {
            field: self.field,
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (d.quotient_of(m), *c)).collect(),
        }
    }

    /// Exact division; `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        self.check(d);
        let (lm, lc) = d.leading_term()?;
        let inv = self.field.inv(lc)?;
        if let Some(c) = d.as_constant() {
            return Some(self.scale(self.field.inv(c)?));
        }
        let f = self.field;
        let mut rem = self.clone();
        let mut q = Self::zero(f, self.nvars);
        while let Some((rm, rc)) = rem.leading_term() {
            if !lm.divides(&rm) {
                return None;
            }
            let qm = lm.quotient_of(&rm);
            let qc = f.mul(rc, inv);
            q.add_term(qm, qc);
            for (m, c) in &d.terms {
                rem.add_term(m.mul(&qm), f.neg(f.mul(*c, qc)));
            }
        }
        Some(q)
    }

    /// Maps every term through `g`, summing the results.
    pub fn map_terms(&self, mut g: impl FnMut(&Monomial, u32) -> (Monomial, u32)) -> Self {
        let mut out = Self::zero(self.field, self.nvars);
        for (m, c) in &self.terms {
            let (m2, c2) = g(m, *c);
            out.add_term(m2, c2);
        }
        out
    }

    /// Keeps only the terms accepted by `keep`.
    pub fn filter_terms(&self, mut keep: impl FnMut(&Monomial) -> bool) -> Self {
        MultiPoly {
            field: self.field,
            nvars: self.nvars,
            terms: self.terms.iter().filter(|(m, _)| keep(m)).map(|(m, c)| (*m, *c)).collect(),
        }
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.check(rhs);
        let (mut big, small) = if self.terms.len() >= rhs.terms.len() {
            (self.clone(), rhs)
        } else {
            (rhs.clone(), self)
        };
        for (m, c) in &small.terms {
            big.add_term(*m, *c);
        }
        big
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.check(rhs);
        let mut out = self.clone();
        let f = self.field;
        for (m, c) in &rhs.terms {
            out.add_term(*m, f.neg(*c));
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(self.field.p() - 1)
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.check(rhs);
        let f = self.field;
        let mut acc: BTreeMap<Monomial, u32> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let e = acc.entry(m1.mul(m2)).or_insert(0);
                *e = f.add(*e, f.mul(*c1, *c2));
            }
        }
        acc.retain(|_, c| *c != 0);
        MultiPoly { field: f, nvars: self.nvars, terms: acc }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
