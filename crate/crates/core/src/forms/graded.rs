use alloc::collections::BTreeMap;

use super::form::DiffForm;
use super::tuple::IndexTuple;
use crate::arith::{theta_components, RatFunc, ThetaIndex};
use crate::{Error, Result};

/// The part of a form whose coefficients lie in `k^p * b_theta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaComponent {
    pub theta: ThetaIndex,
    pub form: DiffForm,
}

/// Splits `a` into its theta components; `a` is their sum.
pub fn theta_split(a: &DiffForm) -> BTreeMap<ThetaIndex, ThetaComponent> {
    let mut out: BTreeMap<ThetaIndex, ThetaComponent> = BTreeMap::new();
    for (s, x) in a.coeffs() {
        for (theta, part) in theta_components(x) {
            out.entry(theta.clone())
                .or_insert_with(|| ThetaComponent { theta, form: a.zero_like(a.degree()) })
                .form
                .add_term(*s, part);
        }
    }
    out
}

/// `lambda_theta = sum_i theta(i) dlog t_i`; on the theta component `d` is
/// `lambda_theta ^ -`.
pub fn lambda_theta(theta: &ThetaIndex, like: &DiffForm) -> DiffForm {
    let mut out = like.zero_like(1);
    for (i, c) in theta.0.iter().enumerate() {
        out.add_term(IndexTuple::single(i), RatFunc::constant(like.field(), like.m(), *c as i64));
    }
    out
}

/// True iff every tuple in the support of `a` is `< s` componentwise.
pub fn lt_s_membership(a: &DiffForm, s: IndexTuple) -> bool {
    a.support().all(|t| t.precedes(s))
}

/// `h = theta(j)^-1 * iota_j` with `j` the first index where `theta` is
/// nonzero mod p. `lambda_theta ^ h + h(lambda_theta ^ -)` is the identity.
pub fn contracting_homotopy(c: &ThetaComponent) -> Result<DiffForm> {
    let p = c.form.field().p();
    let j = c.theta.0.iter().position(|x| x % p != 0).ok_or(Error::ZeroTheta)?;
    if c.form.degree() == 0 {
        return Err(Error::DegreeOverflow { degree: 0, max: c.form.m() });
    }
    let inv = c.form.field().inv(c.theta.0[j] % p).unwrap();
    Ok(c.form.contract(j).scale_fp(inv))
}

/// Normal form modulo exact forms together with `xi` such that
/// `a - nf(a) = d xi`.
pub fn normal_form_with_witness(a: &DiffForm) -> Result<(DiffForm, DiffForm)> {
    if a.degree() == 0 {
        return Err(Error::MismatchedParameters("normal form needs degree at least 1"));
    }
    let mut nf = a.zero_like(a.degree());
    let mut xi = a.zero_like(a.degree() - 1);
    let top = a.degree() == a.m();
    for (theta, comp) in theta_split(a) {
        if theta.is_zero() {
            nf = &nf + &comp.form;
            continue;
        }
        xi = &xi + &contracting_homotopy(&comp)?;
        if !top {
            let form = comp.form.wedge_lambda(&theta);
            nf = &nf + &contracting_homotopy(&ThetaComponent { theta, form })?;
        }
    }
    Ok((nf, xi))
}

/// Canonical representative of `a` in `Omega^n / d Omega^(n-1)`.
pub fn normal_form_mod_exact(a: &DiffForm) -> Result<DiffForm> {
    Ok(normal_form_with_witness(a)?.0)
}

/// `wp(a) = nf(F(a) - a)`.
pub fn artin_schreier_class(a: &DiffForm) -> Result<DiffForm> {
    // F(a) lies in the theta = 0 part, which nf fixes
    Ok(&a.inverse_cartier() - &normal_form_mod_exact(a)?)
}

/// Whether the class of `a` lies in `nu_n = ker wp`.
pub fn nu_membership(a: &DiffForm) -> Result<bool> {
    Ok(artin_schreier_class(a)?.is_zero())
}

impl DiffForm {
    /// `lambda_theta ^ self`, equal to `d(self)` when every coefficient lies
    /// in the theta component.
    pub(crate) fn wedge_lambda(&self, theta: &ThetaIndex) -> DiffForm {
        lambda_theta(theta, self).wedge(self).expect("degree below m")
    }
}
