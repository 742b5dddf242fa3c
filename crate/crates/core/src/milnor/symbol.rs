use alloc::vec::Vec;

use crate::arith::RatFunc;
use crate::forms::{dlog, nu_membership, DiffForm, PBaseField};
use crate::{Error, Result};

/// Formal sum `sum c_j {a_1j, ..., a_nj}` in `K_n(k)/p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MilnorSymbolSum {
    pub degree: usize,
    pub terms: Vec<(u32, Vec<RatFunc>)>,
}

impl MilnorSymbolSum {
    pub fn new(degree: usize) -> Self {
        MilnorSymbolSum { degree, terms: Vec::new() }
    }

    pub fn single(entries: Vec<RatFunc>) -> Self {
        MilnorSymbolSum { degree: entries.len(), terms: alloc::vec![(1, entries)] }
    }

    pub fn push(&mut self, coeff: u32, entries: Vec<RatFunc>) -> Result<()> {
        if entries.len() != self.degree {
            return Err(Error::MismatchedParameters("symbol of the wrong degree"));
        }
        if entries.iter().any(|x| x.is_zero()) {
            return Err(Error::ZeroEntry);
        }
        self.terms.push((coeff, entries));
        Ok(())
    }

    pub fn extend(&mut self, other: MilnorSymbolSum) -> Result<()> {
        for (c, e) in other.terms {
            self.push(c, e)?;
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// The differential symbol `{a_1, ..., a_n} -> dlog a_1 ^ ... ^ dlog a_n`.
pub fn d_k(k: &PBaseField, sigma: &MilnorSymbolSum) -> Result<DiffForm> {
    if sigma.degree > k.m() {
        return Err(Error::DegreeOverflow { degree: sigma.degree, max: k.m() });
    }
    let mut out = DiffForm::zero(k, sigma.degree);
    for (c, entries) in &sigma.terms {
        let mut acc = DiffForm::function(k.one());
        for x in entries {
            k.check(x)?;
            if x.is_zero() {
                return Err(Error::ZeroEntry);
            }
            acc = acc.wedge(&dlog(x)?)?;
        }
        out = &out + &acc.scale_fp(k.field().reduce(*c as i64));
    }
    Ok(out)
}

/// Whether `d_k(sigma)` lies in `nu_n`; always true for a correct
/// implementation.
pub fn verify_in_nu(k: &PBaseField, sigma: &MilnorSymbolSum) -> Result<bool> {
    let w = d_k(k, sigma)?;
    if w.degree() == 0 {
        return Ok(true);
    }
    nu_membership(&w)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let k = PBaseField::new(2, 1).unwrap();
        let t = k.var(0);
        assert_eq!(d_k(&k, &MilnorSymbolSum::single(alloc::vec![t.clone()])).unwrap(), DiffForm::dlog_var(&k, 0));
        let k2 = PBaseField::new(2, 2).unwrap();
        let (t2, u2) = (k2.var(0), k2.var(1));
        let steinberg = MilnorSymbolSum::single(alloc::vec![t2.clone(), &k2.one() - &t2]);
        assert!(d_k(&k2, &steinberg).unwrap().is_zero());
        let s = MilnorSymbolSum::single(alloc::vec![&t2 + &k2.one(), u2]);
        assert!(verify_in_nu(&k2, &s).unwrap());

        let k3 = PBaseField::new(3, 2).unwrap();
        let (t, u) = (k3.var(0), k3.var(1));
        let lhs = MilnorSymbolSum::single(alloc::vec![&t.pow(2).unwrap() * &u]);
        let mut rhs = MilnorSymbolSum::new(1);
        rhs.push(2, alloc::vec![t]).unwrap();
        rhs.push(1, alloc::vec![u]).unwrap();
        assert_eq!(d_k(&k3, &lhs).unwrap(), d_k(&k3, &rhs).unwrap());
        assert!(matches!(rhs.push(1, alloc::vec![k3.zero()]), Err(Error::ZeroEntry)));
    }
}
