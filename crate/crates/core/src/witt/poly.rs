use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// Integer polynomial in `2 * len` variables `X_0..X_{len-1}, Y_0..Y_{len-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct IntPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, i128>,
}

impl IntPoly {
    fn zero(nvars: usize) -> Self {
        IntPoly { nvars, terms: BTreeMap::new() }
    }

    fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.terms.insert(e, 1);
        p
    }

    fn add_term(&mut self, e: Vec<u32>, c: i128) -> Result<()> {
        let slot = self.terms.entry(e).or_insert(0);
        *slot = slot.checked_add(c).ok_or(Error::Overflow)?;
        self.terms.retain(|_, c| *c != 0);
        Ok(())
    }

    fn add(&self, other: &IntPoly, sign: i128) -> Result<IntPoly> {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c * sign)?;
        }
        Ok(out)
    }

    fn scale(&self, c: i128) -> Result<IntPoly> {
        let mut out = Self::zero(self.nvars);
        for (e, x) in &self.terms {
            out.terms.insert(e.clone(), x.checked_mul(c).ok_or(Error::Overflow)?);
        }
        out.terms.retain(|_, c| *c != 0);
        Ok(out)
    }

    fn mul(&self, other: &IntPoly) -> Result<IntPoly> {
        let mut acc: BTreeMap<Vec<u32>, i128> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                let c = c1.checked_mul(*c2).ok_or(Error::Overflow)?;
                let slot = acc.entry(e).or_insert(0);
                *slot = slot.checked_add(c).ok_or(Error::Overflow)?;
            }
        }
        acc.retain(|_, c| *c != 0);
        Ok(IntPoly { nvars: self.nvars, terms: acc })
    }

    fn pow(&self, k: u32) -> Result<IntPoly> {
        let mut acc = Self::zero(self.nvars);
        acc.terms.insert(vec![0; self.nvars], 1);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    fn div_exact(&self, d: i128) -> Result<IntPoly> {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if c % d != 0 {
                return Err(Error::InternalAssertionFailed(format!("Witt polynomial not divisible by {d}")));
            }
            out.terms.insert(e.clone(), c / d);
        }
        Ok(out)
    }

    /// Iterates `(exponents, coefficient)`.
    pub(crate) fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &i128)> {
        self.terms.iter()
    }

    pub(crate) fn eval_int(&self, values: &[i128]) -> Result<i128> {
        let mut acc: i128 = 0;
        for (e, c) in &self.terms {
            let mut t = *c;
            for (v, k) in values.iter().zip(e) {
                t = t.checked_mul(v.checked_pow(*k).ok_or(Error::Overflow)?).ok_or(Error::Overflow)?;
            }
            acc = acc.checked_add(t).ok_or(Error::Overflow)?;
        }
        Ok(acc)
    }
}

/// Universal addition and multiplication polynomials `S_n`, `P_n` for
/// Witt vectors of length `len`, characterized by
/// `w_n(S) = w_n(X) + w_n(Y)` and `w_n(P) = w_n(X) w_n(Y)` for the ghost
/// components `w_n = sum_{j<=n} p^j X_j^(p^(n-j))`.
#[derive(Clone, Debug)]
pub struct WittPolynomials {
    p: u32,
    len: usize,
    pub(crate) sum: Vec<IntPoly>,
    pub(crate) prod: Vec<IntPoly>,
}

impl WittPolynomials {
    pub fn new(p: u32, len: usize) -> Result<Self> {
        let nv = 2 * len;
        let xs: Vec<IntPoly> = (0..len).map(|j| IntPoly::var(nv, j)).collect();
        let ys: Vec<IntPoly> = (0..len).map(|j| IntPoly::var(nv, len + j)).collect();
        let ghost_x: Vec<IntPoly> = (0..len).map(|n| ghost_poly(p, &xs, n)).collect::<Result<_>>()?;
        let ghost_y: Vec<IntPoly> = (0..len).map(|n| ghost_poly(p, &ys, n)).collect::<Result<_>>()?;
        let mut sum: Vec<IntPoly> = Vec::new();
        let mut prod: Vec<IntPoly> = Vec::new();
        for n in 0..len {
            let pn = (p as i128).pow(n as u32);
            let target_s = ghost_x[n].add(&ghost_y[n], 1)?;
            let target_p = ghost_x[n].mul(&ghost_y[n])?;
            let mut rest_s = target_s;
            let mut rest_p = target_p;
            for j in 0..n {
                let k = p.pow((n - j) as u32);
                let pj = (p as i128).pow(j as u32);
                rest_s = rest_s.add(&sum[j].pow(k)?.scale(pj)?, -1)?;
                rest_p = rest_p.add(&prod[j].pow(k)?.scale(pj)?, -1)?;
            }
            sum.push(rest_s.div_exact(pn)?);
            prod.push(rest_p.div_exact(pn)?);
        }
        Ok(WittPolynomials { p, len, sum, prod })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Ghost components of an integer vector.
    pub fn ghost(&self, x: &[i128]) -> Result<Vec<i128>> {
        (0..self.len)
            .map(|n| {
                (0..=n).try_fold(0i128, |acc, j| {
                    let t = x[j].checked_pow(self.p.pow((n - j) as u32)).ok_or(Error::Overflow)?;
                    acc.checked_add(t.checked_mul((self.p as i128).pow(j as u32)).ok_or(Error::Overflow)?)
                        .ok_or(Error::Overflow)
                })
            })
            .collect()
    }

    /// `S(x, y)` over the integers.
    pub fn sum_int(&self, x: &[i128], y: &[i128]) -> Result<Vec<i128>> {
        let v: Vec<i128> = x.iter().chain(y).copied().collect();
        self.sum.iter().map(|s| s.eval_int(&v)).collect()
    }

    /// `P(x, y)` over the integers.
    pub fn prod_int(&self, x: &[i128], y: &[i128]) -> Result<Vec<i128>> {
        let v: Vec<i128> = x.iter().chain(y).copied().collect();
        self.prod.iter().map(|s| s.eval_int(&v)).collect()
    }
}

fn ghost_poly(p: u32, xs: &[IntPoly], n: usize) -> Result<IntPoly> {
    let mut acc = IntPoly::zero(xs[0].nvars);
    for (j, x) in xs.iter().enumerate().take(n + 1) {
        acc = acc.add(&x.pow(p.pow((n - j) as u32))?.scale((p as i128).pow(j as u32))?, 1)?;
    }
    Ok(acc)
}
