use alloc::vec;
use alloc::vec::Vec;

use super::{Monomial, MultiPoly, PrimeField};

/// Dense univariate polynomial over `F_p`, coefficients from degree 0 up.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly {
    field: PrimeField,
    coeffs: Vec<u32>,
}

impl UniPoly {
    pub fn new(field: PrimeField, coeffs: Vec<u32>) -> Self {
        let mut p = UniPoly {
            field,
            coeffs: coeffs.into_iter().map(|c| c % field.p()).collect(),
        };
        p.trim();
        p
    }

    pub fn zero(field: PrimeField) -> Self {
        UniPoly { field, coeffs: Vec::new() }
    }

    pub fn one(field: PrimeField) -> Self {
        Self::new(field, vec![1])
    }

    pub fn x(field: PrimeField) -> Self {
        Self::new(field, vec![0, 1])
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// Degree; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn monic(&self) -> Self {
        match self.field.inv(self.leading_coeff()) {
            Some(inv) => self.scale(inv),
            None => self.clone(),
        }
    }

    pub fn scale(&self, c: u32) -> Self {
        let f = self.field;
        Self::new(f, self.coeffs.iter().map(|a| f.mul(*a, c)).collect())
    }

    pub fn add(&self, o: &Self) -> Self {
        let f = self.field;
        let n = self.coeffs.len().max(o.coeffs.len());
        let c = (0..n)
            .map(|i| {
                f.add(
                    self.coeffs.get(i).copied().unwrap_or(0),
                    o.coeffs.get(i).copied().unwrap_or(0),
                )
            })
            .collect();
        Self::new(f, c)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(self.field.p() - 1))
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(self.field);
        }
        let f = self.field;
        let mut c = vec![0u32; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] = f.add(c[i + j], f.mul(*a, *b));
            }
        }
        Self::new(f, c)
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let f = self.field;
        let dd = d.degree().expect("division by zero polynomial");
        let inv = f.inv(d.leading_coeff()).unwrap();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::zero(f), self.clone());
        }
        let mut q = vec![0u32; r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = f.mul(r[k + dd], inv);
            q[k] = c;
            if c == 0 {
                continue;
            }
            for (j, b) in d.coeffs.iter().enumerate() {
                r[k + j] = f.sub(r[k + j], f.mul(c, *b));
            }
        }
        r.truncate(dd);
        (Self::new(f, q), Self::new(f, r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(&self, o: &Self) -> Self {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: `(g, s, t)` with `s*self + t*o = g`, `g` monic.
    pub fn ext_gcd(&self, o: &Self) -> (Self, Self, Self) {
        let f = self.field;
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (Self::one(f), Self::zero(f));
        let (mut t0, mut t1) = (Self::zero(f), Self::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = core::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = core::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = core::mem::replace(&mut t1, t);
        }
        let inv = f.inv(r0.leading_coeff()).unwrap_or(1);
        (r0.scale(inv), s0.scale(inv), t0.scale(inv))
    }

    pub fn derivative(&self) -> Self {
        let f = self.field;
        Self::new(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| f.mul(*c, (i as u32) % f.p()))
                .collect(),
        )
    }

    pub fn mul_mod(&self, o: &Self, m: &Self) -> Self {
        self.mul(o).rem(m)
    }

    /// `self^(p^k) mod m` by repeated `p`-th powers.
    pub fn frobenius_pow_mod(&self, k: usize, m: &Self) -> Self {
        let mut a = self.rem(m);
        for _ in 0..k {
            a = a.pow_mod(self.field.p() as u64, m);
        }
        a
    }

    pub fn pow_mod(&self, mut e: u64, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = Self::one(self.field).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mod(&base, m);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_mod(&base, m);
            }
        }
        acc
    }

    /// `g` with `g^p = self` if only exponents divisible by `p` occur.
    pub fn pth_root(&self) -> Option<Self> {
        let p = self.field.p() as usize;
        if self.coeffs.iter().enumerate().any(|(i, c)| i % p != 0 && *c != 0) {
            return None;
        }
        Some(Self::new(self.field, self.coeffs.iter().step_by(p).copied().collect()))
    }

    pub fn to_multi(&self, nvars: usize, var: usize) -> MultiPoly {
        MultiPoly::from_terms(
            self.field,
            nvars,
            self.coeffs.iter().enumerate().map(|(i, c)| {
                let mut m = Monomial::ONE;
                m.0[var] = i as u32;
                (m, *c)
            }),
        )
    }

    /// Reads a polynomial in variable `var` only; `None` if other variables occur.
    pub fn from_multi(p: &MultiPoly, var: usize) -> Option<Self> {
        let deg = p.degree_in(var).unwrap_or(0) as usize;
        let mut c = vec![0u32; deg + 1];
        for (m, a) in p.terms() {
            if (0..p.nvars()).any(|j| j != var && m.exp(j) != 0) {
                return None;
            }
            c[m.exp(var) as usize] = *a;
        }
        Some(Self::new(p.field(), c))
    }
}
