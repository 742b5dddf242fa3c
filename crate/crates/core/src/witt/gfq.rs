use alloc::format;

use crate::arith::PrimeField;
use crate::{Error, Result};

/// `F_q` for `q = p` or `q = p^2`. Elements are codes `a0 + a1*p` standing
/// for `a0 + a1*z`, where `z` is a root of the smallest monic irreducible
/// quadratic `z^2 + c1 z + c0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FiniteField {
    fp: PrimeField,
    e: u32,
    c0: u32,
    c1: u32,
}

impl FiniteField {
    pub fn new(q: u32) -> Result<Self> {
        let (p, e) = prime_power(q).ok_or_else(|| Error::OutOfSupportedRange(format!("q = {q} is not p or p^2")))?;
        let fp = PrimeField::new(p)?;
        let (mut c0, mut c1) = (0, 0);
        if e == 2 {
            (c1, c0) = (0..p)
                .flat_map(|c1| (0..p).map(move |c0| (c1, c0)))
                .find(|(c1, c0)| fp.elements().all(|x| fp.add(fp.add(fp.mul(x, x), fp.mul(*c1, x)), *c0) != 0))
                .expect("irreducible quadratics exist");
        }
        Ok(FiniteField { fp, e, c0, c1 })
    }

    pub fn p(&self) -> u32 {
        self.fp.p()
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    pub fn q(&self) -> u32 {
        self.p().pow(self.e)
    }

    fn split(&self, a: u32) -> (u32, u32) {
        (a % self.p(), a / self.p())
    }

    fn join(&self, a0: u32, a1: u32) -> u32 {
        a0 + a1 * self.p()
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        let ((a0, a1), (b0, b1)) = (self.split(a), self.split(b));
        self.join(self.fp.add(a0, b0), self.fp.add(a1, b1))
    }

    pub fn neg(&self, a: u32) -> u32 {
        let (a0, a1) = self.split(a);
        self.join(self.fp.neg(a0), self.fp.neg(a1))
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        let f = self.fp;
        let ((a0, a1), (b0, b1)) = (self.split(a), self.split(b));
        // z^2 = -c1 z - c0
        let hi = f.mul(a1, b1);
        let lo = f.sub(f.mul(a0, b0), f.mul(hi, self.c0));
        let mid = f.sub(f.add(f.mul(a0, b1), f.mul(a1, b0)), f.mul(hi, self.c1));
        self.join(lo, mid)
    }

    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        let (mut base, mut acc) = (a, 1);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.pow(a, self.q() as u64 - 2))
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.q()
    }

    /// The element `n * 1`.
    pub fn from_int(&self, n: i128) -> u32 {
        n.rem_euclid(self.p() as i128) as u32
    }
}

fn prime_power(q: u32) -> Option<(u32, u32)> {
    let p = (2..=q).find(|d| q % d == 0)?;
    match q / p {
        1 => Some((p, 1)),
        r if r == p => Some((p, 2)),
        _ => None,
    }
}
