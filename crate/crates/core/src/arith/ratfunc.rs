use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use super::{MultiPoly, PrimeField, UniPoly};
use crate::{Error, Result};

/// Element of `F_p(t_1..t_m)` stored as a fraction of polynomials.
///
/// The denominator is nonzero and monic. In one variable the fraction is
/// fully reduced; in several variables only cheap cancellations are done
/// (monomial content, exact divisibility), and equality is decided by
/// cross-multiplication.
#[derive(Clone, Debug)]
pub struct RatFunc {
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFunc {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        assert!(
            num.field() == den.field() && num.nvars() == den.nvars(),
            "numerator and denominator over different rings"
        );
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: MultiPoly, den: MultiPoly) -> Self {
        let field = num.field();
        let nvars = num.nvars();
        if num.is_zero() {
            return RatFunc { num, den: MultiPoly::one(field, nvars) };
        }
        if den.is_one() {
            return RatFunc { num, den };
        }
        let (num, den) = if nvars == 1 {
            let n = UniPoly::from_multi(&num, 0).unwrap();
            let d = UniPoly::from_multi(&den, 0).unwrap();
            let g = n.gcd(&d);
            if g.is_one() {
                (num, den)
            } else {
                (n.div_rem(&g).0.to_multi(1, 0), d.div_rem(&g).0.to_multi(1, 0))
            }
        } else {
            let content = num.monomial_content().gcd(&den.monomial_content());
            let (num, den) = if content.degree() > 0 {
                (num.div_monomial(&content), den.div_monomial(&content))
            } else {
                (num, den)
            };
            if den.as_constant().is_some() {
                (num, den)
            } else if let Some(q) = num.div_exact(&den) {
                (q, MultiPoly::one(field, nvars))
            } else if let Some(q) = den.div_exact(&num) {
                (MultiPoly::one(field, nvars), q)
            } else {
                (num, den)
            }
        };
        let (den, lc) = den.monic();
        let num = num.scale(field.inv(lc).unwrap());
        RatFunc { num, den }
    }

    pub fn zero(field: PrimeField, nvars: usize) -> Self {
        Self::from_poly(MultiPoly::zero(field, nvars))
    }

    pub fn one(field: PrimeField, nvars: usize) -> Self {
        Self::from_poly(MultiPoly::one(field, nvars))
    }

    pub fn constant(field: PrimeField, nvars: usize, c: i64) -> Self {
        Self::from_poly(MultiPoly::constant(field, nvars, c))
    }

    pub fn var(field: PrimeField, nvars: usize, i: usize) -> Self {
        Self::from_poly(MultiPoly::var(field, nvars, i))
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        let den = MultiPoly::one(p.field(), p.nvars());
        RatFunc { num: p, den }
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn into_parts(self) -> (MultiPoly, MultiPoly) {
        (self.num, self.den)
    }

    pub fn field(&self) -> PrimeField {
        self.num.field()
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The value in `F_p` if this is a constant.
    pub fn as_constant(&self) -> Option<u32> {
        if self.num.is_zero() {
            return Some(0);
        }
        let (_, ln) = self.num.leading_term()?;
        let (_, ld) = self.den.leading_term()?;
        let f = self.field();
        let c = f.mul(ln, f.inv(ld)?);
        if self.num == self.den.scale(c) {
            Some(c)
        } else {
            None
        }
    }

    pub fn is_one(&self) -> bool {
        self.as_constant() == Some(1)
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<RatFunc> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.den == rhs.den {
            return RatFunc::new(self.num.clone(), rhs.num.clone());
        }
        RatFunc::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn inv(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn scale(&self, c: u32) -> RatFunc {
        RatFunc::normalized(self.num.scale(c), self.den.clone())
    }

    pub fn mul_poly(&self, q: &MultiPoly) -> RatFunc {
        RatFunc::normalized(&self.num * q, self.den.clone())
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Result<RatFunc> {
        let k = e.unsigned_abs() as u32;
        let r = RatFunc { num: self.num.pow(k), den: self.den.pow(k) };
        if e < 0 {
            r.inv()
        } else {
            Ok(r)
        }
    }

    /// `a^p`.
    pub fn frobenius(&self) -> RatFunc {
        RatFunc { num: self.num.frobenius(), den: self.den.frobenius() }
    }

    /// Euler derivative `t_i * d/dt_i` (0-based `i`), the coefficient of
    /// `dlog t_i` in `d(self)`.
    pub fn euler(&self, i: usize) -> RatFunc {
        let en = self.num.euler(i);
        let ed = self.den.euler(i);
        if ed.is_zero() {
            return RatFunc::normalized(en, self.den.clone());
        }
        let top = &(&en * &self.den) - &(&self.num * &ed);
        RatFunc::normalized(top, &self.den * &self.den)
    }

    /// Evaluates at `images[i]` for `t_{i+1}`; fails if a denominator vanishes.
    pub fn substitute(&self, images: &[RatFunc]) -> Result<RatFunc> {
        let n = eval_poly(&self.num, images)?;
        let d = eval_poly(&self.den, images)?;
        n.checked_div(&d)
    }
}

fn eval_poly(p: &MultiPoly, images: &[RatFunc]) -> Result<RatFunc> {
    let first = images.first().ok_or(Error::MismatchedParameters("no images"))?;
    let field = first.field();
    let nvars = first.nvars();
    let mut acc = RatFunc::zero(field, nvars);
    let mut powers: Vec<Vec<RatFunc>> = images.iter().map(|x| alloc::vec![x.one_like()]).collect();
    for (m, c) in p.terms() {
        let mut term = RatFunc::constant(field, nvars, *c as i64);
        for (i, img) in images.iter().enumerate().take(p.nvars()) {
            let e = m.exp(i) as usize;
            while powers[i].len() <= e {
                let next = &powers[i][powers[i].len() - 1] * img;
                powers[i].push(next);
            }
            term = &term * &powers[i][e];
        }
        acc = &acc + &term;
    }
    Ok(acc)
}

impl RatFunc {
    fn one_like(&self) -> RatFunc {
        RatFunc::one(self.field(), self.nvars())
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RatFunc {}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        if self.den == rhs.den {
            return RatFunc::normalized(&self.num + &rhs.num, self.den.clone());
        }
        if self.nvars() > 1 {
            if let Some(q) = rhs.den.div_exact(&self.den) {
                return RatFunc::normalized(&(&self.num * &q) + &rhs.num, rhs.den.clone());
            }
            if let Some(q) = self.den.div_exact(&rhs.den) {
                return RatFunc::normalized(&(&rhs.num * &q) + &self.num, self.den.clone());
            }
        }
        RatFunc::normalized(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero(self.field(), self.nvars());
        }
        if self.den == rhs.num && !self.den.is_one() {
            return RatFunc::normalized(self.num.clone(), rhs.den.clone());
        }
        if rhs.den == self.num && !rhs.den.is_one() {
            return RatFunc::normalized(rhs.num.clone(), self.den.clone());
        }
        RatFunc::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2t() -> (RatFunc, RatFunc) {
        let f = PrimeField::new(2).unwrap();
        (RatFunc::var(f, 1, 0), RatFunc::one(f, 1))
    }

    #[test]
    fn char_two_cancellation() {
        let (t, _) = f2t();
        assert!((&t + &t).is_zero());
    }

    #[test]
    fn inverse_and_division() {
        let (t, one) = f2t();
        let inv_t = t.inv().unwrap();
        assert_eq!(&inv_t * &t, one);
        let q = (&t + &one).checked_div(&t).unwrap();
        assert_eq!(q.num(), (&t + &one).num());
        assert_eq!(q.den(), t.num());
        assert_eq!(t.checked_div(&RatFunc::zero(t.field(), 1)), Err(Error::DivisionByZero));
    }

    #[test]
    fn univariate_is_reduced() {
        let (t, one) = f2t();
        let a = &t * &(&t + &one);
        let r = a.checked_div(&(&t + &one)).unwrap();
        assert!(r.is_polynomial());
        assert_eq!(r, t);
    }

    #[test]
    fn frobenius_examples() {
        let (t, one) = f2t();
        assert_eq!(t.frobenius(), &t * &t);
        assert_eq!((&t + &one).frobenius(), &(&t * &t) + &one);
        let f3 = PrimeField::new(3).unwrap();
        for c in 0..3 {
            let x = RatFunc::constant(f3, 2, c);
            assert_eq!(x.frobenius(), x);
        }
    }

    #[test]
    fn multivariate_equality_by_cross_multiplication() {
        let f = PrimeField::new(3).unwrap();
        let t = RatFunc::var(f, 2, 0);
        let u = RatFunc::var(f, 2, 1);
        let a = (&t + &u).checked_div(&(&t - &u)).unwrap();
        let b = (&(&t + &u) * &(&t * &u + RatFunc::one(f, 2)))
            .checked_div(&(&(&t - &u) * &(&t * &u + RatFunc::one(f, 2))))
            .unwrap();
        assert_eq!(a, b);
    }
}
