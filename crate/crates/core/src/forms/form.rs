use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::ops::{Add, Neg, Sub};

use super::tuple::IndexTuple;
use super::PBaseField;
use crate::arith::{PrimeField, RatFunc};
use crate::{Error, Result};

/// Differential `n`-form over `F_p(t_1..t_m)` in the basis
/// `omega_s = dlog t_{s(1)} ^ ... ^ dlog t_{s(n)}`.
///
/// Zero coefficients are never stored, so structural equality is equality
/// of forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffForm {
    field: PrimeField,
    m: usize,
    degree: usize,
    coeffs: BTreeMap<IndexTuple, RatFunc>,
}

impl DiffForm {
    pub fn zero(k: &PBaseField, degree: usize) -> Self {
        Self::zero_raw(k.field(), k.m(), degree)
    }

    pub(crate) fn zero_raw(field: PrimeField, m: usize, degree: usize) -> Self {
        DiffForm { field, m, degree, coeffs: BTreeMap::new() }
    }

    pub(crate) fn zero_like(&self, degree: usize) -> Self {
        Self::zero_raw(self.field, self.m, degree)
    }

    /// The 0-form `x`.
    pub fn function(x: RatFunc) -> Self {
        let mut f = Self::zero_raw(x.field(), x.nvars(), 0);
        f.add_term(IndexTuple::EMPTY, x);
        f
    }

    /// `x * omega_s`.
    pub fn term(x: RatFunc, s: IndexTuple) -> Self {
        let mut f = Self::zero_raw(x.field(), x.nvars(), s.len());
        f.add_term(s, x);
        f
    }

    /// `dlog t_{i+1}`.
    pub fn dlog_var(k: &PBaseField, i: usize) -> Self {
        Self::term(k.one(), IndexTuple::single(i))
    }

    pub fn from_coeffs(k: &PBaseField, degree: usize, coeffs: impl IntoIterator<Item = (IndexTuple, RatFunc)>) -> Result<Self> {
        if degree > k.m() {
            return Err(Error::DegreeOverflow { degree, max: k.m() });
        }
        let mut f = Self::zero(k, degree);
        for (s, x) in coeffs {
            k.check(&x)?;
            if s.len() != degree || s.indices().any(|i| i >= k.m()) {
                return Err(Error::MismatchedParameters("index tuple does not fit the form"));
            }
            f.add_term(s, x);
        }
        Ok(f)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &BTreeMap<IndexTuple, RatFunc> {
        &self.coeffs
    }

    pub fn coeff(&self, s: IndexTuple) -> RatFunc {
        self.coeffs.get(&s).cloned().unwrap_or_else(|| RatFunc::zero(self.field, self.m))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = IndexTuple> + '_ {
        self.coeffs.keys().copied()
    }

    /// The value of a 0-form.
    pub fn as_function(&self) -> Option<RatFunc> {
        (self.degree == 0).then(|| self.coeff(IndexTuple::EMPTY))
    }

    pub(crate) fn add_term(&mut self, s: IndexTuple, x: RatFunc) {
        debug_assert_eq!(s.len(), self.degree);
        if x.is_zero() {
            return;
        }
        match self.coeffs.remove(&s) {
            Some(y) => {
                let sum = &y + &x;
                if !sum.is_zero() {
                    self.coeffs.insert(s, sum);
                }
            }
            None => {
                self.coeffs.insert(s, x);
            }
        }
    }

    pub(crate) fn same_space(&self, other: &DiffForm) {
        assert!(
            self.field == other.field && self.m == other.m && self.degree == other.degree,
            "forms in different spaces"
        );
    }

    /// Multiplies every coefficient by `x`.
    pub fn scale(&self, x: &RatFunc) -> DiffForm {
        let mut out = self.zero_like(self.degree);
        for (s, c) in &self.coeffs {
            out.add_term(*s, c * x);
        }
        out
    }

    pub fn scale_fp(&self, c: u32) -> DiffForm {
        let mut out = self.zero_like(self.degree);
        for (s, x) in &self.coeffs {
            out.add_term(*s, x.scale(c));
        }
        out
    }

    pub fn map_coeffs(&self, mut g: impl FnMut(IndexTuple, &RatFunc) -> RatFunc) -> DiffForm {
        let mut out = self.zero_like(self.degree);
        for (s, x) in &self.coeffs {
            out.add_term(*s, g(*s, x));
        }
        out
    }

    /// Exterior product.
    pub fn wedge(&self, other: &DiffForm) -> Result<DiffForm> {
        assert!(self.field == other.field && self.m == other.m, "forms over different fields");
        let degree = self.degree + other.degree;
        if degree > self.m {
            return Err(Error::DegreeOverflow { degree, max: self.m });
        }
        let mut out = self.zero_like(degree);
        for (s, x) in &self.coeffs {
            for (t, y) in &other.coeffs {
                if let Some(neg) = s.wedge_sign(*t) {
                    let c = x * y;
                    out.add_term(IndexTuple::from_bits(s.bits() | t.bits()), if neg { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    /// Exterior derivative: `d(x omega_s) = sum_i E_i(x) dlog t_i ^ omega_s`
    /// with `E_i = t_i d/dt_i`.
    pub fn ext_d(&self) -> Result<DiffForm> {
        if self.degree >= self.m {
            return Err(Error::DegreeOverflow { degree: self.degree + 1, max: self.m });
        }
        let mut out = self.zero_like(self.degree + 1);
        for (s, x) in &self.coeffs {
            for i in (0..self.m).filter(|i| !s.contains(*i)) {
                let e = x.euler(i);
                if e.is_zero() {
                    continue;
                }
                let neg = IndexTuple::single(i).wedge_sign(*s).unwrap();
                out.add_term(s.insert(i), if neg { -e } else { e });
            }
        }
        Ok(out)
    }

    /// Inverse Cartier operator: `a_s -> a_s^p` in the dlog basis.
    pub fn inverse_cartier(&self) -> DiffForm {
        self.map_coeffs(|_, x| x.frobenius())
    }

    /// Interior product with the dual of `dlog t_{j+1}`:
    /// `omega_s -> (-1)^(pos-1) omega_{s - j}` when `j` sits at position `pos`.
    pub fn contract(&self, j: usize) -> DiffForm {
        assert!(self.degree > 0, "contraction of a 0-form");
        let mut out = self.zero_like(self.degree - 1);
        for (s, x) in &self.coeffs {
            if s.contains(j) {
                let c = if s.rank_of(j) % 2 == 1 { -x } else { x.clone() };
                out.add_term(s.remove(j), c);
            }
        }
        out
    }

    /// Renders with the given variable names, e.g. `t*dlog(t)^dlog(u)`.
    pub fn to_string_with(&self, names: &[String]) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (s, x) in &self.coeffs {
            let mut term = x.to_string_with(names);
            if !s.is_empty() {
                let has_sum = term.contains('+') || term.contains('-');
                if has_sum && !(term.starts_with('(') && term.ends_with(')')) {
                    term = alloc::format!("({term})");
                }
                for (k, i) in s.indices().enumerate() {
                    term.push_str(if k == 0 { "*" } else { "^" });
                    term.push_str(&alloc::format!("dlog({})", names[i]));
                }
            }
            parts.push(term);
        }
        parts.join(" + ")
    }
}

impl core::fmt::Display for DiffForm {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&self.to_string_with(&crate::arith::default_names(self.m)))
    }
}

/// `dlog x = dx / x`; `sum_i (E_i(x) / x) dlog t_i`.
pub fn dlog(x: &RatFunc) -> Result<DiffForm> {
    if x.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let (num, den) = (x.num(), x.den());
    let shared = num * den;
    let mut out = DiffForm::zero_raw(x.field(), x.nvars(), 1);
    for i in 0..x.nvars() {
        let top = &(&num.euler(i) * den) - &(num * &den.euler(i));
        out.add_term(IndexTuple::single(i), RatFunc::new(top, shared.clone())?);
    }
    Ok(out)
}

impl Add for &DiffForm {
    type Output = DiffForm;
    fn add(self, rhs: &DiffForm) -> DiffForm {
        self.same_space(rhs);
        let mut out = self.clone();
        for (s, x) in &rhs.coeffs {
            out.add_term(*s, x.clone());
        }
        out
    }
}

impl Neg for &DiffForm {
    type Output = DiffForm;
    fn neg(self) -> DiffForm {
        self.map_coeffs(|_, x| -x)
    }
}

impl Sub for &DiffForm {
    type Output = DiffForm;
    fn sub(self, rhs: &DiffForm) -> DiffForm {
        self + &(-rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2(m: usize) -> PBaseField {
        PBaseField::new(2, m).unwrap()
    }

    #[test]
    fn dlog_examples() {
        let k = f2(1);
        let t = k.var(0);
        assert_eq!(dlog(&t).unwrap(), DiffForm::dlog_var(&k, 0));
        let k3 = PBaseField::new(3, 1).unwrap();
        let t3 = k3.var(0);
        assert_eq!(dlog(&t3.pow(2).unwrap()).unwrap(), DiffForm::dlog_var(&k3, 0).scale_fp(2));
        let t1 = &t + &k.one();
        let want = DiffForm::term(t.checked_div(&t1).unwrap(), IndexTuple::single(0));
        assert_eq!(dlog(&t1).unwrap(), want);
        assert!(dlog(&k.zero()).is_err());
    }

    #[test]
    fn wedge_examples() {
        let k = PBaseField::new(3, 2).unwrap();
        let (dt, du) = (DiffForm::dlog_var(&k, 0), DiffForm::dlog_var(&k, 1));
        assert!(dt.wedge(&dt).unwrap().is_zero());
        let w = IndexTuple::new(&[1, 2]).unwrap();
        assert_eq!(dt.wedge(&du).unwrap(), DiffForm::term(k.one(), w));
        assert_eq!(du.wedge(&dt).unwrap(), DiffForm::term(k.constant(2), w));
        assert!(dt.wedge(&du).unwrap().wedge(&dt).is_err());
    }

    #[test]
    fn ext_d_examples() {
        let k = f2(1);
        let t = k.var(0);
        assert!(DiffForm::term(t.clone(), IndexTuple::single(0)).ext_d().is_err());
        assert!(DiffForm::function(t.pow(2).unwrap()).ext_d().unwrap().is_zero());
        let k = f2(2);
        let u = k.var(1);
        let got = DiffForm::term(u.clone(), IndexTuple::single(0)).ext_d().unwrap();
        assert_eq!(got, DiffForm::term(u, IndexTuple::new(&[1, 2]).unwrap()));
    }

    #[test]
    fn cartier_examples() {
        let k = f2(1);
        let t = k.var(0);
        let a = DiffForm::term(t.clone(), IndexTuple::single(0));
        assert_eq!(a.inverse_cartier(), DiffForm::term(t.pow(2).unwrap(), IndexTuple::single(0)));
        let w = DiffForm::dlog_var(&k, 0);
        assert_eq!(w.inverse_cartier(), w);
    }
}
