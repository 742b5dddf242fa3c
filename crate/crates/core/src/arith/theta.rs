use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::{Monomial, MultiPoly, RatFunc};

/// Exponent vector `theta` with entries in `[0, p)`, indexing the monomial
/// `b_theta = prod t_i^theta(i)` of the p-base.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ThetaIndex(pub Vec<u32>);

impl ThetaIndex {
    pub fn zero(m: usize) -> Self {
        ThetaIndex(vec![0; m])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|e| *e == 0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The monomial `b_theta`.
    pub fn monomial(&self) -> Monomial {
        let mut m = Monomial::ONE;
        for (i, e) in self.0.iter().enumerate() {
            m.0[i] = *e;
        }
        m
    }

    /// All theta vectors for `m` variables in characteristic `p`.
    pub fn all(p: u32, m: usize) -> Vec<ThetaIndex> {
        let mut out = vec![ThetaIndex::zero(m)];
        for i in 0..m {
            let mut next = Vec::with_capacity(out.len() * p as usize);
            for th in &out {
                for e in 0..p {
                    let mut t = th.clone();
                    t.0[i] = e;
                    next.push(t);
                }
            }
            out = next;
        }
        out.sort();
        out
    }
}

/// Writes `a = sum_theta x_theta^p * b_theta`, returning `{theta -> x_theta}`
/// without zero entries. The decomposition is unique since the `b_theta` form
/// a basis of `k` over `k^p`.
pub fn theta_decompose(a: &RatFunc) -> BTreeMap<ThetaIndex, RatFunc> {
    let field = a.field();
    let nvars = a.nvars();
    let p = field.p();
    let mut out = BTreeMap::new();
    if a.is_zero() {
        return out;
    }
    // a = N / h^p
    let (numer, root) = match a.den().pth_root() {
        Some(h) => (a.num().clone(), h),
        None => (a.num() * &a.den().pow(p - 1), a.den().clone()),
    };
    let mut parts: BTreeMap<ThetaIndex, MultiPoly> = BTreeMap::new();
    for (m, c) in numer.terms() {
        let mut theta = vec![0u32; nvars];
        let mut rest = Monomial::ONE;
        for i in 0..nvars {
            theta[i] = m.exp(i) % p;
            rest.0[i] = m.exp(i) / p;
        }
        parts
            .entry(ThetaIndex(theta))
            .or_insert_with(|| MultiPoly::zero(field, nvars))
            .add_term(rest, *c);
    }
    for (theta, y) in parts {
        if !y.is_zero() {
            out.insert(theta, RatFunc::new(y, root.clone()).expect("nonzero denominator"));
        }
    }
    out
}

/// Splits `a` into its components `x_theta^p * b_theta`, keyed by `theta`.
pub fn theta_components(a: &RatFunc) -> BTreeMap<ThetaIndex, RatFunc> {
    let field = a.field();
    let nvars = a.nvars();
    let p = field.p();
    let mut out = BTreeMap::new();
    if a.is_zero() {
        return out;
    }
    let (numer, den) = match a.den().pth_root() {
        Some(_) => (a.num().clone(), a.den().clone()),
        None => (a.num() * &a.den().pow(p - 1), a.den().pow(p)),
    };
    let mut parts: BTreeMap<ThetaIndex, MultiPoly> = BTreeMap::new();
    for (m, c) in numer.terms() {
        let theta = (0..nvars).map(|i| m.exp(i) % p).collect();
        parts
            .entry(ThetaIndex(theta))
            .or_insert_with(|| MultiPoly::zero(field, nvars))
            .add_term(*m, *c);
    }
    for (theta, y) in parts {
        if !y.is_zero() {
            out.insert(theta, RatFunc::new(y, den.clone()).expect("nonzero denominator"));
        }
    }
    out
}

/// `Some(x)` with `x^p = a` iff `a` lies in `k^p`.
pub fn pth_root(a: &RatFunc) -> Option<RatFunc> {
    if a.is_zero() {
        return Some(a.clone());
    }
    let parts = theta_decompose(a);
    if parts.len() == 1 {
        let (theta, x) = parts.into_iter().next().unwrap();
        if theta.is_zero() {
            return Some(x);
        }
    }
    None
}

/// Recombines a theta decomposition: `sum x_theta^p b_theta`.
pub fn theta_recombine(
    parts: &BTreeMap<ThetaIndex, RatFunc>,
    like: &RatFunc,
) -> RatFunc {
    let mut acc = RatFunc::zero(like.field(), like.nvars());
    for (theta, x) in parts {
        let b = MultiPoly::monomial(like.field(), like.nvars(), theta.monomial(), 1);
        acc = &acc + &x.frobenius().mul_poly(&b);
    }
    acc
}
