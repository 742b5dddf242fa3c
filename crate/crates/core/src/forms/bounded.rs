use alloc::vec;
use alloc::vec::Vec;

use super::form::DiffForm;
use super::graded::artin_schreier_class;
use super::linalg::{independent_subset, kernel, Columns, Echelon, SparseVec};
use super::tuple::IndexTuple;
use super::PBaseField;
use crate::arith::{monic_irreducibles, Monomial, MultiPoly, RatFunc};
use crate::{Error, Result};

/// A finite-dimensional space of coefficients for the bounded solvers:
/// monomials of degree at most `degree` divided by products of distinct
/// `factors`, at most `max_factors` of them at a time.
///
/// With one variable and no factor limit the space is spanned by the
/// polynomials of degree at most `degree` and the fractions `t^i / q` with
/// `i < deg q`, which is the same space in partial-fraction form.
#[derive(Clone, Debug)]
pub struct TruncationSpec {
    pub degree: u32,
    pub factors: Vec<MultiPoly>,
    pub max_factors: Option<usize>,
}

impl TruncationSpec {
    /// One variable: all monic irreducibles of degree at most `degree`.
    /// Several variables: all monic linear polynomials, two at a time.
    pub fn standard(k: &PBaseField, degree: u32) -> Self {
        if k.m() == 1 {
            let factors = monic_irreducibles(k.field(), degree as usize);
            TruncationSpec { degree, factors, max_factors: None }
        } else {
            TruncationSpec { degree, factors: linear_polys(k), max_factors: Some(2) }
        }
    }

    fn check(&self, k: &PBaseField) -> Result<()> {
        for q in &self.factors {
            if q.field() != k.field() || q.nvars() != k.m() || q.total_degree().unwrap_or(0) == 0 {
                return Err(Error::MismatchedParameters("truncation factors must be nonconstant polynomials over k"));
            }
        }
        Ok(())
    }

    /// Product of all factors; every element of the space times it is a polynomial.
    fn common_denominator(&self, k: &PBaseField) -> MultiPoly {
        self.factors.iter().fold(MultiPoly::one(k.field(), k.m()), |acc, q| &acc * q)
    }

    /// A spanning set of the coefficient space (possibly dependent).
    fn spanning_set(&self, k: &PBaseField) -> Vec<RatFunc> {
        let (field, m) = (k.field(), k.m());
        let monos = monomials_up_to(m, self.degree);
        let mono_poly = |e: &Monomial| MultiPoly::monomial(field, m, *e, 1);
        let mut out: Vec<RatFunc> = monos.iter().map(|e| RatFunc::from_poly(mono_poly(e))).collect();
        match self.max_factors {
            None if m == 1 => {
                for q in &self.factors {
                    let dq = q.total_degree().unwrap();
                    for e in monos.iter().filter(|e| e.degree() < dq) {
                        out.push(RatFunc::new(mono_poly(e), q.clone()).unwrap());
                    }
                }
            }
            limit => {
                let limit = limit.unwrap_or(self.factors.len());
                for subset in subsets_up_to(self.factors.len(), limit) {
                    let den = subset.iter().fold(MultiPoly::one(field, m), |acc, i| &acc * &self.factors[*i]);
                    for e in &monos {
                        out.push(RatFunc::new(mono_poly(e), den.clone()).unwrap());
                    }
                }
            }
        }
        out
    }

    /// An F_p-basis of the coefficient space.
    pub fn basis(&self, k: &PBaseField) -> Result<Vec<RatFunc>> {
        self.check(k)?;
        let span = self.spanning_set(k);
        let l = self.common_denominator(k);
        let mut cols = Columns::new();
        let vecs: Vec<SparseVec> = span
            .iter()
            .map(|x| vectorize(x, &l, &mut cols, IndexTuple::EMPTY).expect("element of the truncation"))
            .collect();
        Ok(independent_subset(k.field(), &vecs).into_iter().map(|i| span[i].clone()).collect())
    }
}

fn linear_polys(k: &PBaseField) -> Vec<MultiPoly> {
    let (field, m, p) = (k.field(), k.m(), k.p());
    let mut out = Vec::new();
    let total = (p as usize).pow(m as u32 + 1);
    for code in 0..total {
        let mut c = code;
        let mut q = MultiPoly::zero(field, m);
        for i in 0..=m {
            let a = (c % p as usize) as u32;
            c /= p as usize;
            if a != 0 {
                let mono = if i < m { Monomial::var(i) } else { Monomial::ONE };
                q = &q + &MultiPoly::monomial(field, m, mono, a);
            }
        }
        if q.total_degree() == Some(1) && q.leading_term().unwrap().1 == 1 {
            out.push(q);
        }
    }
    out.sort_by(|a, b| a.terms().rev().cmp(b.terms().rev()));
    out
}

fn monomials_up_to(m: usize, d: u32) -> Vec<Monomial> {
    let mut out = vec![Monomial::ONE];
    for i in 0..m {
        let mut next = Vec::new();
        for base in &out {
            for e in 0..=d - base.degree() {
                let mut x = *base;
                x.0[i] = e;
                next.push(x);
            }
        }
        out = next;
    }
    out.sort();
    out
}

fn subsets_up_to(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..k {
        let mut next = Vec::new();
        for s in &frontier {
            let start = s.last().map_or(0, |x: &usize| x + 1);
            for i in start..n {
                let mut t: Vec<usize> = s.clone();
                t.push(i);
                next.push(t);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Coordinates of `x * mult` (which must be a polynomial) in the monomial
/// basis, columns keyed by `(s, monomial)`.
fn vectorize(
    x: &RatFunc,
    mult: &MultiPoly,
    cols: &mut Columns<(IndexTuple, Monomial)>,
    s: IndexTuple,
) -> Option<SparseVec> {
    let poly = (x.num() * mult).div_exact(x.den())?;
    Some(poly.terms().map(|(e, c)| (cols.col((s, *e)), *c)).collect())
}

fn vectorize_form(
    a: &DiffForm,
    mult: &MultiPoly,
    cols: &mut Columns<(IndexTuple, Monomial)>,
) -> Option<SparseVec> {
    let mut out = SparseVec::new();
    for (s, x) in a.coeffs() {
        out.extend(vectorize(x, mult, cols, *s)?);
    }
    Some(out)
}

/// Some `a` in the truncation with `a^p - a = g`, or `None` if there is
/// none inside the truncation.
pub fn solve_artin_schreier_bounded(k: &PBaseField, g: &RatFunc, spec: &TruncationSpec) -> Result<Option<RatFunc>> {
    k.check(g)?;
    if g.is_zero() {
        return Ok(Some(k.zero()));
    }
    let basis = spec.basis(k)?;
    let mult = spec.common_denominator(k).pow(k.p());
    let mut cols = Columns::new();
    let mut ech = Echelon::new(k.field());
    for (i, f) in basis.iter().enumerate() {
        let image = &f.frobenius() - f;
        let v = vectorize(&image, &mult, &mut cols, IndexTuple::EMPTY)
            .ok_or_else(|| Error::InternalAssertionFailed("image left the truncation".into()))?;
        ech.insert(v, i);
    }
    let Some(target) = vectorize(g, &mult, &mut cols, IndexTuple::EMPTY) else {
        return Ok(None);
    };
    Ok(ech.solve(&target).map(|combo| {
        combo.iter().fold(k.zero(), |acc, (i, c)| &acc + &basis[*i].scale(*c))
    }))
}

/// An F_p-basis of the forms of degree `n` with coefficients in the
/// truncation whose class lies in `nu_n`.
pub fn nu_basis_bounded(k: &PBaseField, n: usize, spec: &TruncationSpec) -> Result<Vec<DiffForm>> {
    if n == 0 || n > k.m() {
        return Err(Error::DegreeOverflow { degree: n, max: k.m() });
    }
    let basis = spec.basis(k)?;
    let mult = spec.common_denominator(k).pow(k.p());
    let mut elements = Vec::new();
    for s in IndexTuple::all(k.m(), n) {
        for f in &basis {
            elements.push(DiffForm::term(f.clone(), s));
        }
    }
    let mut cols = Columns::new();
    let mut images = Vec::with_capacity(elements.len());
    for e in &elements {
        let image = artin_schreier_class(e)?;
        images.push(
            vectorize_form(&image, &mult, &mut cols)
                .ok_or_else(|| Error::InternalAssertionFailed("wp image left the truncation".into()))?,
        );
    }
    Ok(kernel(k.field(), &images)
        .into_iter()
        .map(|combo| {
            combo.iter().fold(DiffForm::zero(k, n), |acc, (i, c)| &acc + &elements[*i].scale_fp(*c))
        })
        .collect())
}
