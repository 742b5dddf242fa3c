use crate::arith::{factor_univariate, MultiPoly, RatFunc, UniPoly};
use crate::forms::{dlog, nu_membership, DiffForm, IndexTuple};
use crate::{Error, Result};

/// For `w` in `nu_1` over `F_p(t)`, the `x = prod q^e` (monic irreducible
/// `q`, `0 <= e < p`) with `dlog x = w`.
///
/// The coefficient of `dt` is `sum e_q q'/q`; each `e_q` is read off as the
/// residue `N / (q' * D/q) mod q`, which must be a constant.
pub fn dlog_inverse_n1(w: &DiffForm) -> Result<RatFunc> {
    if w.m() != 1 || w.degree() != 1 {
        return Err(Error::UnsupportedInstance("dlog inverse needs a 1-form in one variable".into()));
    }
    if !nu_membership(w)? {
        return Err(Error::NotInNu);
    }
    let field = w.field();
    let t = RatFunc::var(field, 1, 0);
    let one = RatFunc::one(field, 1);
    if w.is_zero() {
        return Ok(one);
    }
    // coefficient of dt
    let g = w.coeff(IndexTuple::single(0)).checked_div(&t)?;
    let to_uni = |p: &MultiPoly| UniPoly::from_multi(p, 0).expect("one variable");
    let (num, den) = (to_uni(g.num()), to_uni(g.den()));
    if num.degree() >= den.degree() {
        return Err(Error::NotInNu);
    }
    let mut x = one;
    for (q, mult) in factor_univariate(g.den())? {
        if mult != 1 {
            return Err(Error::NotInNu);
        }
        let qu = to_uni(&q);
        let cofactor = den.div_rem(&qu).0;
        let denom = qu.derivative().mul(&cofactor).rem(&qu);
        let (gcd, inv, _) = denom.ext_gcd(&qu);
        if !gcd.is_one() {
            return Err(Error::NotInNu);
        }
        let e = num.mul(&inv).rem(&qu);
        let e = match e.degree() {
            None => 0,
            Some(0) => e.coeffs()[0],
            Some(_) => return Err(Error::NotInNu),
        };
        if e != 0 {
            x = &x * &RatFunc::from_poly(q.pow(e));
        }
    }
    if dlog(&x)? != *w {
        return Err(Error::InternalAssertionFailed("dlog of the reconstructed element differs".into()));
    }
    Ok(x)
}
