use alloc::vec;
use alloc::vec::Vec;

use super::gfq::FiniteField;
use super::poly::{IntPoly, WittPolynomials};
use crate::{Error, Result};

/// Witt vector `(a_0, ..., a_{i-1})` with components in `F_q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WittVector {
    pub q: u32,
    pub components: Vec<u32>,
}

impl WittVector {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }
}

/// The ring `W_i(F_q)`.
#[derive(Clone, Debug)]
pub struct WittRing {
    field: FiniteField,
    polys: WittPolynomials,
    // universal polynomials with coefficients reduced mod p
    sum: Vec<Vec<(Vec<u32>, u32)>>,
    prod: Vec<Vec<(Vec<u32>, u32)>>,
}

impl WittRing {
    pub fn new(q: u32, len: usize) -> Result<Self> {
        if len == 0 {
            return Err(Error::MismatchedParameters("Witt length must be at least 1"));
        }
        let field = FiniteField::new(q)?;
        let polys = WittPolynomials::new(field.p(), len)?;
        let reduce = |ps: &[IntPoly]| -> Vec<Vec<(Vec<u32>, u32)>> {
            ps.iter()
                .map(|s| {
                    s.terms()
                        .map(|(e, c)| (e.clone(), field.from_int(*c)))
                        .filter(|(_, c)| *c != 0)
                        .collect()
                })
                .collect()
        };
        let (sum, prod) = (reduce(&polys.sum), reduce(&polys.prod));
        Ok(WittRing { field, polys, sum, prod })
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn polynomials(&self) -> &WittPolynomials {
        &self.polys
    }

    pub fn p(&self) -> u32 {
        self.field.p()
    }

    pub fn q(&self) -> u32 {
        self.field.q()
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of elements, `q^i`.
    pub fn size(&self) -> usize {
        (self.q() as usize).pow(self.len() as u32)
    }

    pub fn vector(&self, components: Vec<u32>) -> Result<WittVector> {
        if components.len() != self.len() || components.iter().any(|c| *c >= self.q()) {
            return Err(Error::MismatchedParameters("components do not fit the Witt ring"));
        }
        Ok(WittVector { q: self.q(), components })
    }

    pub fn zero(&self) -> WittVector {
        WittVector { q: self.q(), components: vec![0; self.len()] }
    }

    pub fn one(&self) -> WittVector {
        self.teichmuller(1)
    }

    /// `(a, 0, ..., 0)`.
    pub fn teichmuller(&self, a: u32) -> WittVector {
        self.single(0, a)
    }

    /// `(0, ..., 0, a, 0, ..., 0)` with `a` in slot `pos`.
    pub fn single(&self, pos: usize, a: u32) -> WittVector {
        let mut v = self.zero();
        v.components[pos] = a;
        v
    }

    /// Element number `index` in a fixed enumeration (component 0 fastest).
    pub fn element(&self, mut index: usize) -> WittVector {
        let q = self.q() as usize;
        let components = (0..self.len())
            .map(|_| {
                let c = (index % q) as u32;
                index /= q;
                c
            })
            .collect();
        WittVector { q: self.q(), components }
    }

    pub fn index_of(&self, a: &WittVector) -> usize {
        a.components.iter().rev().fold(0, |acc, c| acc * self.q() as usize + *c as usize)
    }

    fn check(&self, a: &WittVector) -> Result<()> {
        if a.q != self.q() || a.len() != self.len() {
            return Err(Error::MismatchedParameters("Witt vectors over different rings"));
        }
        Ok(())
    }

    fn eval(&self, poly: &[(Vec<u32>, u32)], a: &[u32], b: &[u32]) -> u32 {
        let f = &self.field;
        let vals: Vec<u32> = a.iter().chain(b).copied().collect();
        poly.iter().fold(0, |acc, (e, c)| {
            let t = e.iter().zip(&vals).fold(*c, |t, (k, v)| if *k == 0 { t } else { f.mul(t, f.pow(*v, *k as u64)) });
            f.add(acc, t)
        })
    }

    pub fn add(&self, a: &WittVector, b: &WittVector) -> Result<WittVector> {
        self.check(a)?;
        self.check(b)?;
        let components = self.sum.iter().map(|s| self.eval(s, &a.components, &b.components)).collect();
        Ok(WittVector { q: self.q(), components })
    }

    pub fn mul(&self, a: &WittVector, b: &WittVector) -> Result<WittVector> {
        self.check(a)?;
        self.check(b)?;
        let components = self.prod.iter().map(|s| self.eval(s, &a.components, &b.components)).collect();
        Ok(WittVector { q: self.q(), components })
    }

    /// Additive inverse, solved slot by slot since `S_n = X_n + Y_n + (lower terms)`.
    pub fn neg(&self, a: &WittVector) -> Result<WittVector> {
        self.check(a)?;
        let mut b = self.zero();
        for n in 0..self.len() {
            let s = self.eval(&self.sum[n], &a.components, &b.components);
            b.components[n] = self.field.neg(s);
        }
        Ok(b)
    }

    pub fn sub(&self, a: &WittVector, b: &WittVector) -> Result<WittVector> {
        self.add(a, &self.neg(b)?)
    }

    /// `k * a` for `k >= 0`.
    pub fn mul_int(&self, a: &WittVector, mut k: u64) -> Result<WittVector> {
        let mut acc = self.zero();
        let mut base = a.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(&acc, &base)?;
            }
            base = self.add(&base, &base)?;
            k >>= 1;
        }
        Ok(acc)
    }

    /// Componentwise `p`-th power.
    pub fn frobenius(&self, a: &WittVector) -> Result<WittVector> {
        self.check(a)?;
        let components = a.components.iter().map(|c| self.field.pow(*c, self.p() as u64)).collect();
        Ok(WittVector { q: self.q(), components })
    }

    /// `(a_0, ..., a_{i-2}) -> (0, a_0, ..., a_{i-2})`.
    pub fn verschiebung(&self, a: &WittVector) -> Result<WittVector> {
        self.check(a)?;
        let mut components = vec![0];
        components.extend_from_slice(&a.components[..self.len() - 1]);
        Ok(WittVector { q: self.q(), components })
    }

    /// Additive order of `a`.
    pub fn additive_order(&self, a: &WittVector) -> Result<u64> {
        let mut acc = a.clone();
        let mut k = 1;
        while acc != self.zero() {
            acc = self.add(&acc, a)?;
            k += 1;
        }
        Ok(k)
    }
}
