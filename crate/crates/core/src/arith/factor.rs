//! Univariate factorization over `F_p`: square-free split, distinct-degree
//! and equal-degree (Cantor-Zassenhaus with a deterministic probe sequence).

use alloc::vec::Vec;

use super::{MultiPoly, PrimeField, UniPoly};
use crate::{Error, Result};

/// Factors a univariate polynomial (`nvars == 1`) into monic irreducibles
/// with multiplicities, sorted by degree then coefficients.
///
/// The leading coefficient is dropped; multiply it back to recover `f`.
pub fn factor_univariate(f: &MultiPoly) -> Result<Vec<(MultiPoly, u32)>> {
    if f.nvars() != 1 {
        return Err(Error::UnsupportedVariables(f.nvars()));
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let u = UniPoly::from_multi(f, 0).expect("single variable");
    Ok(factor_uni(&u)
        .into_iter()
        .map(|(g, e)| (g.to_multi(1, 0), e))
        .collect())
}

pub(crate) fn factor_uni(f: &UniPoly) -> Vec<(UniPoly, u32)> {
    let mut out: Vec<(UniPoly, u32)> = Vec::new();
    for (part, mult) in squarefree(&f.monic()) {
        for (g, d) in distinct_degree(&part) {
            for h in equal_degree(&g, d) {
                match out.iter_mut().find(|(q, _)| *q == h) {
                    Some(entry) => entry.1 += mult,
                    None => out.push((h, mult)),
                }
            }
        }
    }
    out.sort_by(|a, b| {
        a.0.degree()
            .cmp(&b.0.degree())
            .then_with(|| a.0.coeffs().iter().rev().cmp(b.0.coeffs().iter().rev()))
    });
    out
}

/// Square-free decomposition of a monic polynomial.
fn squarefree(f: &UniPoly) -> Vec<(UniPoly, u32)> {
    let p = f.field().p();
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let mut c = f.gcd(&f.derivative());
    let mut w = f.div_rem(&c).0;
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c);
        let fac = w.div_rem(&y).0;
        if fac.degree().unwrap_or(0) > 0 {
            out.push((fac.monic(), i));
        }
        w = y;
        c = c.div_rem(&w).0;
        i += 1;
    }
    if c.degree().unwrap_or(0) > 0 {
        let root = c.pth_root().expect("remaining part is a p-th power");
        for (g, m) in squarefree(&root.monic()) {
            out.push((g, m * p));
        }
    }
    out
}

/// Splits a square-free monic polynomial into products of irreducibles of
/// equal degree `d`.
fn distinct_degree(f: &UniPoly) -> Vec<(UniPoly, usize)> {
    let field = f.field();
    let mut out = Vec::new();
    let mut rest = f.clone();
    let x = UniPoly::x(field);
    let mut h = x.clone();
    let mut d = 1;
    while rest.degree().unwrap_or(0) >= 2 * d {
        h = h.pow_mod(field.p() as u64, &rest);
        let g = rest.gcd(&h.sub(&x));
        if !g.is_one() {
            rest = rest.div_rem(&g).0;
            h = h.rem(&rest);
            out.push((g, d));
        }
        d += 1;
    }
    if rest.degree().unwrap_or(0) > 0 {
        let deg = rest.degree().unwrap();
        out.push((rest.monic(), deg));
    }
    out
}

/// Probe polynomial number `k`: base-`p` digits of `k` as coefficients.
fn probe(field: PrimeField, mut k: u64) -> UniPoly {
    let p = field.p() as u64;
    let mut c = Vec::new();
    while k > 0 {
        c.push((k % p) as u32);
        k /= p;
    }
    UniPoly::new(field, c)
}

fn equal_degree(f: &UniPoly, d: usize) -> Vec<UniPoly> {
    let n = f.degree().unwrap_or(0);
    if n == d {
        return alloc::vec![f.monic()];
    }
    let field = f.field();
    let p = field.p();
    let mut k = p as u64;
    loop {
        let a = probe(field, k);
        k += 1;
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = if p == 2 {
            // absolute trace to F_2: a + a^2 + ... + a^(2^(d-1))
            let mut acc = UniPoly::zero(field);
            let mut term = a.rem(f);
            for _ in 0..d {
                acc = acc.add(&term);
                term = term.mul_mod(&term, f);
            }
            acc
        } else {
            // a^((p^d - 1)/2) = (a^(1 + p + ... + p^(d-1)))^((p-1)/2)
            let mut norm = UniPoly::one(field);
            let mut term = a.rem(f);
            for _ in 0..d {
                norm = norm.mul_mod(&term, f);
                term = term.pow_mod(p as u64, f);
            }
            norm.pow_mod(((p - 1) / 2) as u64, f).sub(&UniPoly::one(field))
        };
        let g = f.gcd(&b);
        let gd = g.degree().unwrap_or(0);
        if gd > 0 && gd < n {
            let h = f.div_rem(&g).0.monic();
            let mut out = equal_degree(&g, d);
            out.extend(equal_degree(&h, d));
            return out;
        }
    }
}

/// All monic irreducible polynomials of degree `1..=max_degree` in one
/// variable, ordered by degree then coefficients.
pub fn monic_irreducibles(field: PrimeField, max_degree: usize) -> Vec<MultiPoly> {
    let p = field.p() as u64;
    let mut out = Vec::new();
    for d in 1..=max_degree {
        let count = p.pow(d as u32);
        for k in 0..count {
            let mut c = Vec::with_capacity(d + 1);
            let mut r = k;
            for _ in 0..d {
                c.push((r % p) as u32);
                r /= p;
            }
            c.push(1);
            let u = UniPoly::new(field, c);
            let fac = factor_uni(&u);
            if fac.len() == 1 && fac[0].1 == 1 {
                out.push(u.to_multi(1, 0));
            }
        }
    }
    out
}
