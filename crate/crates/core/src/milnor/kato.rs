use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use super::symbol::{d_k, MilnorSymbolSum};
use crate::arith::{theta_components, theta_decompose, MultiPoly, RatFunc, ThetaIndex};
use crate::forms::{dlog, normal_form_mod_exact, nu_membership, DiffForm, IndexTuple, PBaseField};
use crate::{Error, Result};

/// Result of [`lemma_c_pick`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CPick {
    pub c: RatFunc,
    /// Set when `f` vanishes identically; `c` is then `b`.
    pub zero_map: bool,
}

/// Picks a nonzero `c = c_0 + c_1 b` in `l = k_0(b)` with `f(c) = 0`, where
/// `f` is `k_0`-linear and given by `f(1)` and `f(b)`; `b = t_{j+1}` and
/// `k_0` is generated over `k^2` by the earlier variables. Only `p = 2` is supported.
///
/// Prefers `c_1 = 1`, so `c = f(b)/f(1) + b` scaled by an element of `k_0`
/// to clear its denominator; falls back to `c = 1` when `f(1) = 0`.
pub fn lemma_c_pick(k: &PBaseField, j: usize, f_one: &RatFunc, f_b: &RatFunc) -> Result<CPick> {
    if k.p() != 2 {
        return Err(Error::UnsupportedPrime(k.p()));
    }
    let b = k.var(j);
    if f_one.is_zero() {
        let zero_map = f_b.is_zero();
        return Ok(CPick { c: if zero_map { b } else { k.one() }, zero_map });
    }
    let c0 = f_b.checked_div(f_one)?;
    let den = c0.den().clone();
    let scale = if in_subfield(&RatFunc::from_poly(den.clone()), j) { den } else { den.pow(k.p()) };
    let c = &(&c0 + &b) * &RatFunc::from_poly(scale);
    Ok(CPick { c, zero_map: false })
}

/// Whether `x` lies in `k^p(t_{i+1} : i < j)`.
fn in_subfield(x: &RatFunc, j: usize) -> bool {
    theta_components(x).keys().all(|th| th.0[j..].iter().all(|e| *e == 0))
}

/// Sum of the theta components of `x` with `theta(i) = 0` for `lo <= i <= hi`.
fn project(x: &RatFunc, lo: usize, hi: usize) -> RatFunc {
    theta_components(x)
        .into_iter()
        .filter(|(th, _)| th.0[lo..=hi].iter().all(|e| *e == 0))
        .fold(RatFunc::zero(x.field(), x.nvars()), |acc, (_, y)| &acc + &y)
}

/// One level of the recursion, recorded for inspection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepTrace {
    pub s: IndexTuple,
    pub a: RatFunc,
    pub c: RatFunc,
    /// `a / (coefficient of dlog t_{s(1)} in dlog c)`, passed to the next level.
    pub a_next: RatFunc,
}

/// Output of [`proposition_step`]: `a omega_s = v + dlog x_1 ^ ... ^ dlog x_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropositionOutput {
    pub v: DiffForm,
    pub xs: Vec<RatFunc>,
    pub trace: Vec<StepTrace>,
}

/// For `a != 0` with `(a^2 - a) omega_s` in `Omega^n(<s) + d Omega^(n-1)`
/// (`p = 2`), finds `x_i` in `k^2(t_j : j <= s(i))` such that
/// `a omega_s - dlog x_1 ^ ... ^ dlog x_n` lies in `Omega^n(<s)`.
pub fn proposition_step(k: &PBaseField, a: &RatFunc, s: IndexTuple) -> Result<PropositionOutput> {
    if k.p() != 2 {
        return Err(Error::UnsupportedPrime(k.p()));
    }
    k.check(a)?;
    if a.is_zero() || s.is_empty() {
        return Err(Error::PreconditionFailed("need a nonzero coefficient and a nonempty tuple".into()));
    }
    if !precondition_holds(k, a, s)? {
        return Err(Error::PreconditionFailed(format!("(a^2 - a) omega_{s} is not in Omega(<{s}) + d Omega")));
    }
    let mut xs = Vec::new();
    let mut trace = Vec::new();
    let idx: Vec<usize> = s.indices().collect();
    let mut a_cur = a.clone();
    for (level, &s1) in idx.iter().enumerate() {
        let sn = *idx.last().unwrap();
        if theta_components(&a_cur).keys().any(|th| th.0[sn + 1..].iter().any(|e| *e != 0)) {
            return Err(Error::InternalAssertionFailed(format!("coefficient not in k_2 at level {level}")));
        }
        let b = k.var(s1);
        let f_one = project(&a_cur, s1, sn);
        let f_b = project(&(&b * &a_cur), s1, sn);
        let pick = lemma_c_pick(k, s1, &f_one, &f_b)?;
        if pick.zero_map || in_subfield(&pick.c, s1) {
            return Err(Error::InternalAssertionFailed(format!("picked c lies in k_0 at level {level}")));
        }
        let gamma = dlog(&pick.c)?.coeff(IndexTuple::single(s1));
        let a_next = a_cur.checked_div(&gamma)?;
        trace.push(StepTrace {
            s: IndexTuple::from_indices(&idx[level..]),
            a: a_cur.clone(),
            c: pick.c.clone(),
            a_next: a_next.clone(),
        });
        xs.push(pick.c);
        a_cur = a_next;
    }
    if !a_cur.is_one() {
        return Err(Error::InternalAssertionFailed("base case did not close".into()));
    }
    let wedge = d_k(k, &MilnorSymbolSum::single(xs.clone()))?;
    let v = &DiffForm::term(a.clone(), s) - &wedge;
    let ok = v.support().all(|t| t.precedes(s))
        && xs.iter().zip(&idx).all(|(x, si)| in_subfield(x, *si + 1));
    if !ok {
        return Err(Error::InternalAssertionFailed("step output equation fails".into()));
    }
    Ok(PropositionOutput { v, xs, trace })
}

/// `nf((a^2 - a) omega_s)` lies in the `k^2`-span of `nf(b_theta omega_t)`
/// for `t < s`. In `k^p`-coordinates this is a `k`-linear membership test.
fn precondition_holds(k: &PBaseField, a: &RatFunc, s: IndexTuple) -> Result<bool> {
    let x = DiffForm::term(&a.frobenius() - a, s);
    let target = coordinates(&normal_form_mod_exact(&x)?);
    if target.is_empty() {
        return Ok(true);
    }
    let mut ech = RatEchelon::default();
    for t in IndexTuple::all(k.m(), s.len()).into_iter().filter(|t| t.precedes(s)) {
        for theta in ThetaIndex::all(k.p(), k.m()) {
            let b = MultiPoly::monomial(k.field(), k.m(), theta.monomial(), 1);
            let y = normal_form_mod_exact(&DiffForm::term(RatFunc::from_poly(b), t))?;
            ech.insert(coordinates(&y))?;
        }
    }
    ech.reduces_to_zero(target)
}

type Coords = BTreeMap<(IndexTuple, ThetaIndex), RatFunc>;

fn coordinates(w: &DiffForm) -> Coords {
    let mut out = Coords::new();
    for (t, x) in w.coeffs() {
        for (theta, r) in theta_decompose(x) {
            out.insert((*t, theta), r);
        }
    }
    out
}

#[derive(Default)]
struct RatEchelon {
    rows: BTreeMap<(IndexTuple, ThetaIndex), Coords>,
}

impl RatEchelon {
    fn reduce(&self, mut v: Coords) -> Result<Coords> {
        loop {
            let Some((key, row)) = v.iter().find_map(|(key, _)| self.rows.get(key).map(|r| (key.clone(), r))) else {
                return Ok(v);
            };
            let c = v[&key].clone();
            for (k2, y) in row {
                let new = &v.get(k2).cloned().unwrap_or_else(|| RatFunc::zero(c.field(), c.nvars())) - &(&c * y);
                if new.is_zero() {
                    v.remove(k2);
                } else {
                    v.insert(k2.clone(), new);
                }
            }
        }
    }

    fn insert(&mut self, v: Coords) -> Result<()> {
        let v = self.reduce(v)?;
        if let Some((key, lead)) = v.iter().next().map(|(k, x)| (k.clone(), x.clone())) {
            let inv = lead.inv()?;
            let row = v.into_iter().map(|(k2, x)| (k2, &x * &inv)).collect();
            self.rows.insert(key, row);
        }
        Ok(())
    }

    fn reduces_to_zero(&self, v: Coords) -> Result<bool> {
        Ok(self.reduce(v)?.is_empty())
    }
}

/// One peeled coefficient of [`kato_decompose`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionStep {
    pub s: IndexTuple,
    pub coefficient: RatFunc,
    pub xs: Vec<RatFunc>,
    pub levels: Vec<StepTrace>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionResult {
    pub symbols: MilnorSymbolSum,
    pub residual: DiffForm,
    pub trace: Vec<DecompositionStep>,
}

/// Writes `w` in `nu_n` (`p = 2`, `m <= 2`, `n <= 2`) as `d_k` of a sum of
/// symbols, peeling the largest `omega_s` coefficient at each step.
pub fn kato_decompose(k: &PBaseField, w: &DiffForm) -> Result<DecompositionResult> {
    if k.p() != 2 {
        return Err(Error::UnsupportedPrime(k.p()));
    }
    if k.m() > 2 || w.degree() > 2 || w.degree() == 0 {
        return Err(Error::UnsupportedInstance(format!("m = {}, n = {}", k.m(), w.degree())));
    }
    if w.field() != k.field() || w.m() != k.m() {
        return Err(Error::MismatchedParameters("form over a different field"));
    }
    if !nu_membership(w)? {
        return Err(Error::NotInNu);
    }
    let mut rest = w.clone();
    let mut symbols = MilnorSymbolSum::new(w.degree());
    let mut trace = Vec::new();
    while let Some((s, a)) = rest.coeffs().iter().next_back().map(|(s, a)| (*s, a.clone())) {
        let out = proposition_step(k, &a, s)?;
        let piece = d_k(k, &MilnorSymbolSum::single(out.xs.clone()))?;
        let next = &rest - &piece;
        if next.support().any(|t| t >= s) {
            return Err(Error::InternalAssertionFailed(format!("peeling omega_{s} did not lower the support")));
        }
        rest = next;
        symbols.push(1, out.xs.clone())?;
        trace.push(DecompositionStep { s, coefficient: a, xs: out.xs, levels: out.trace });
    }
    if d_k(k, &symbols)? != *w {
        return Err(Error::InternalAssertionFailed("symbols do not reproduce the input".into()));
    }
    Ok(DecompositionResult { symbols, residual: rest, trace })
}
