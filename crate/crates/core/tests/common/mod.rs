#![allow(dead_code)]

use logdiff_core::arith::{MultiPoly, Monomial, PrimeField, RatFunc};
use logdiff_core::forms::{DiffForm, IndexTuple, PBaseField};
use rand::Rng;

pub fn poly(rng: &mut impl Rng, field: PrimeField, m: usize, deg: u32, terms: usize) -> MultiPoly {
    let mut acc = MultiPoly::zero(field, m);
    for _ in 0..terms {
        let mut e = Monomial::ONE;
        let mut left = deg;
        for i in 0..m {
            let x = rng.gen_range(0..=left);
            e.0[i] = x;
            left -= x;
        }
        let c = rng.gen_range(1..field.p());
        acc = &acc + &MultiPoly::monomial(field, m, e, c);
    }
    acc
}

pub fn nonzero_poly(rng: &mut impl Rng, field: PrimeField, m: usize, deg: u32) -> MultiPoly {
    loop {
        let terms = rng.gen_range(1..=3);
        let p = poly(rng, field, m, deg, terms);
        if !p.is_zero() {
            return p;
        }
    }
}

/// Random element of `k`; a fraction about a third of the time.
pub fn ratfunc(rng: &mut impl Rng, k: &PBaseField, deg: u32) -> RatFunc {
    let terms = rng.gen_range(0..=3);
    let num = poly(rng, k.field(), k.m(), deg, terms);
    if rng.gen_bool(0.35) {
        let den = nonzero_poly(rng, k.field(), k.m(), deg.clamp(1, 2));
        RatFunc::new(num, den).unwrap()
    } else {
        RatFunc::from_poly(num)
    }
}

pub fn nonzero_ratfunc(rng: &mut impl Rng, k: &PBaseField, deg: u32) -> RatFunc {
    loop {
        let x = ratfunc(rng, k, deg);
        if !x.is_zero() {
            return x;
        }
    }
}

pub fn form(rng: &mut impl Rng, k: &PBaseField, n: usize, deg: u32) -> DiffForm {
    let tuples = IndexTuple::all(k.m(), n);
    let coeffs: Vec<_> = tuples.into_iter().map(|s| (s, ratfunc(rng, k, deg))).collect();
    DiffForm::from_coeffs(k, n, coeffs).unwrap()
}

pub fn field(rng: &mut impl Rng, primes: &[u32], max_m: usize) -> PBaseField {
    let p = primes[rng.gen_range(0..primes.len())];
    PBaseField::new(p, rng.gen_range(1..=max_m)).unwrap()
}
