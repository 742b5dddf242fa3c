use alloc::format;
use alloc::vec::Vec;

use super::form::{dlog, DiffForm};
use crate::arith::RatFunc;
use crate::{Error, Result};

/// Applies the field automorphism `t_i -> images[i]`.
///
/// Accepted images are `c*t_j + e` and `c / t_j` (`c != 0`) where the
/// `j` form a permutation; anything else is rejected as not an automorphism.
/// Coefficients are substituted and each `dlog t_i` becomes
/// `dlog(images[i])` expanded in the standard basis.
pub fn apply_endomorphism(a: &DiffForm, images: &[RatFunc]) -> Result<DiffForm> {
    check_automorphism(a, images)?;
    let mut out = a.zero_like(a.degree());
    let logs: Vec<DiffForm> = images.iter().map(dlog).collect::<Result<_>>()?;
    for (s, x) in a.coeffs() {
        let mut acc = DiffForm::function(x.substitute(images)?);
        for i in s.indices() {
            acc = acc.wedge(&logs[i])?;
        }
        out = &out + &acc;
    }
    Ok(out)
}

fn check_automorphism(a: &DiffForm, images: &[RatFunc]) -> Result<()> {
    let m = a.m();
    if images.len() != m {
        return Err(Error::NotAutomorphism(format!("expected {m} images, got {}", images.len())));
    }
    let mut seen = alloc::vec![false; m];
    for (i, img) in images.iter().enumerate() {
        if img.field() != a.field() || img.nvars() != m {
            return Err(Error::NotAutomorphism(format!("image of t{} lives in another field", i + 1)));
        }
        let j = affine_or_inverse_var(img)
            .ok_or_else(|| Error::NotAutomorphism(format!("image of t{} is not c*t+e or c/t", i + 1)))?;
        if core::mem::replace(&mut seen[j], true) {
            return Err(Error::NotAutomorphism(format!("variable t{} used twice", j + 1)));
        }
    }
    Ok(())
}

/// The variable `j` if `x` is `c*t_j + e` or `c/t_j`.
fn affine_or_inverse_var(x: &RatFunc) -> Option<usize> {
    let (num, den) = (x.num(), x.den());
    let single_var = |p: &crate::arith::MultiPoly| -> Option<usize> {
        if p.total_degree()? != 1 {
            return None;
        }
        let (lead, _) = p.leading_term()?;
        let j = (0..p.nvars()).find(|i| lead.exp(*i) == 1)?;
        (p.num_terms() <= 2 && p.terms().all(|(mono, _)| mono.degree() == 0 || mono.exp(j) == 1)).then_some(j)
    };
    if den.is_one() {
        single_var(num)
    } else if num.as_constant().is_some() && den.num_terms() == 1 {
        single_var(den)
    } else {
        None
    }
}
