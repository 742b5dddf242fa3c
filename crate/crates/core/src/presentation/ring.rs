use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::PrimeField;
use crate::{Error, Result};

/// Largest ring handled by the table representation.
const MAX_RING_SIZE: usize = 1024;

/// The built-in families of finite local rings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingFamily {
    /// `F_p[t]/(t^n)`
    Truncated,
    /// `Z/p^n`
    ModPk,
    /// `F_p[x,y]/(x,y)^n`
    SquareZeroTwoVars,
}

/// Finite commutative local ring given by addition and multiplication tables.
#[derive(Clone, Debug)]
pub struct FiniteLocalRing {
    pub name: String,
    pub labels: Vec<String>,
    add: Vec<u16>,
    mul: Vec<u16>,
    zero: usize,
    one: usize,
    units: Vec<usize>,
    maximal_ideal: Vec<usize>,
    unit_pos: Vec<Option<usize>>,
    characteristic: u64,
}

impl FiniteLocalRing {
    /// Builds a ring from tables and checks that it is commutative and local,
    /// and that every element is a sum of at most two units.
    pub fn from_tables(
        name: String,
        labels: Vec<String>,
        add: Vec<u16>,
        mul: Vec<u16>,
        zero: usize,
        one: usize,
    ) -> Result<Self> {
        let n = labels.len();
        if n == 0 || n > MAX_RING_SIZE || add.len() != n * n || mul.len() != n * n {
            return Err(Error::OutOfSupportedRange(format!("ring tables of size {n}")));
        }
        let at = |t: &Vec<u16>, a: usize, b: usize| t[a * n + b] as usize;
        for a in 0..n {
            for b in 0..n {
                if at(&add, a, b) != at(&add, b, a) || at(&mul, a, b) != at(&mul, b, a) {
                    return Err(Error::NotLocal(format!("not commutative at ({a}, {b})")));
                }
            }
            if at(&add, a, zero) != a || at(&mul, a, one) != a {
                return Err(Error::NotLocal("bad zero or one".into()));
            }
        }
        let mut units = Vec::new();
        let mut maximal_ideal = Vec::new();
        for a in 0..n {
            if (0..n).any(|b| at(&mul, a, b) == one) {
                units.push(a);
            } else {
                maximal_ideal.push(a);
            }
        }
        let mut is_unit = vec![false; n];
        for u in &units {
            is_unit[*u] = true;
        }
        for &x in &maximal_ideal {
            for &y in &maximal_ideal {
                if is_unit[at(&add, x, y)] {
                    return Err(Error::NotLocal("non-units are not closed under addition".into()));
                }
            }
            for z in 0..n {
                if is_unit[at(&mul, x, z)] {
                    return Err(Error::NotLocal("non-units do not form an ideal".into()));
                }
            }
        }
        let mut two_units = vec![false; n];
        for &u in &units {
            two_units[u] = true;
            for &v in &units {
                two_units[at(&add, u, v)] = true;
            }
        }
        if let Some(x) = two_units.iter().position(|ok| !ok) {
            return Err(Error::NotLocal(format!("{} is not a sum of two units", labels[x])));
        }
        let mut unit_pos = vec![None; n];
        for (i, u) in units.iter().enumerate() {
            unit_pos[*u] = Some(i);
        }
        let mut characteristic = 1u64;
        let mut acc = one;
        while acc != zero {
            acc = at(&add, acc, one);
            characteristic += 1;
        }
        Ok(FiniteLocalRing {
            name,
            labels,
            add,
            mul,
            zero,
            one,
            units,
            maximal_ideal,
            unit_pos,
            characteristic,
        })
    }

    pub fn from_family(family: RingFamily, p: u32, n: u32) -> Result<Self> {
        match family {
            RingFamily::Truncated => Self::truncated(p, n),
            RingFamily::ModPk => Self::modpk(p, n),
            RingFamily::SquareZeroTwoVars => Self::square_zero_2vars(p, n),
        }
    }

    /// `Z/p^k`.
    pub fn modpk(p: u32, k: u32) -> Result<Self> {
        PrimeField::new(p)?;
        let size = (p as usize).checked_pow(k).filter(|s| *s <= MAX_RING_SIZE && k >= 1);
        let n = size.ok_or_else(|| Error::OutOfSupportedRange(format!("Z/{p}^{k}")))?;
        let labels = (0..n).map(|i| format!("{i}")).collect();
        let mut add = vec![0u16; n * n];
        let mut mul = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                add[a * n + b] = ((a + b) % n) as u16;
                mul[a * n + b] = ((a * b) % n) as u16;
            }
        }
        Self::from_tables(format!("Z/{n}"), labels, add, mul, 0, 1 % n)
    }

    /// `F_p[t]/(t^n)`.
    pub fn truncated(p: u32, n: u32) -> Result<Self> {
        let basis: Vec<(u32, u32)> = (0..n).map(|i| (i, 0)).collect();
        Self::monomial_algebra(format!("F_{p}[t]/(t^{n})"), p, basis, &["t", ""])
    }

    /// `F_p[x,y]/(x,y)^n`.
    pub fn square_zero_2vars(p: u32, n: u32) -> Result<Self> {
        let mut basis = Vec::new();
        for d in 0..n {
            for a in (0..=d).rev() {
                basis.push((a, d - a));
            }
        }
        Self::monomial_algebra(format!("F_{p}[x,y]/(x,y)^{n}"), p, basis, &["x", "y"])
    }

    /// `F_p[x,y]` modulo all monomials outside `basis` (which must be closed
    /// under division and contain 1).
    fn monomial_algebra(name: String, p: u32, basis: Vec<(u32, u32)>, vars: &[&str; 2]) -> Result<Self> {
        let f = PrimeField::new(p)?;
        let dim = basis.len() as u32;
        let size = (p as usize).checked_pow(dim).filter(|s| *s <= MAX_RING_SIZE && dim >= 1);
        let n = size.ok_or_else(|| Error::OutOfSupportedRange(name.clone()))?;
        let pu = p as usize;
        let decode = |mut x: usize| -> Vec<u32> {
            (0..basis.len())
                .map(|_| {
                    let c = (x % pu) as u32;
                    x /= pu;
                    c
                })
                .collect()
        };
        let encode = |c: &[u32]| -> usize { c.iter().rev().fold(0, |acc, x| acc * pu + *x as usize) };
        let prod_index: Vec<Vec<Option<usize>>> = basis
            .iter()
            .map(|(a1, b1)| {
                basis.iter().map(|(a2, b2)| basis.iter().position(|m| *m == (a1 + a2, b1 + b2))).collect()
            })
            .collect();
        let coords: Vec<Vec<u32>> = (0..n).map(decode).collect();
        let mut add = vec![0u16; n * n];
        let mut mul = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                let s: Vec<u32> = coords[a].iter().zip(&coords[b]).map(|(x, y)| f.add(*x, *y)).collect();
                add[a * n + b] = encode(&s) as u16;
                let mut m = vec![0u32; basis.len()];
                for (i, x) in coords[a].iter().enumerate() {
                    if *x == 0 {
                        continue;
                    }
                    for (j, y) in coords[b].iter().enumerate() {
                        if let Some(k) = prod_index[i][j] {
                            m[k] = f.add(m[k], f.mul(*x, *y));
                        }
                    }
                }
                mul[a * n + b] = encode(&m) as u16;
            }
        }
        let labels = coords
            .iter()
            .map(|c| {
                let mut terms = Vec::new();
                for (k, x) in c.iter().enumerate() {
                    if *x == 0 {
                        continue;
                    }
                    let (ea, eb) = basis[k];
                    let mut mono = String::new();
                    for (v, e) in [(vars[0], ea), (vars[1], eb)] {
                        if e > 0 {
                            mono.push_str(v);
                            if e > 1 {
                                mono.push_str(&format!("^{e}"));
                            }
                        }
                    }
                    terms.push(match (mono.is_empty(), *x) {
                        (true, x) => format!("{x}"),
                        (false, 1) => mono,
                        (false, x) => format!("{x}{mono}"),
                    });
                }
                if terms.is_empty() {
                    "0".into()
                } else {
                    terms.join("+")
                }
            })
            .collect();
        let one = encode(&{
            let mut c = vec![0u32; basis.len()];
            c[0] = 1;
            c
        });
        Self::from_tables(name, labels, add, mul, 0, one)
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size() + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size() + b] as usize
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn units(&self) -> &[usize] {
        &self.units
    }

    pub fn maximal_ideal(&self) -> &[usize] {
        &self.maximal_ideal
    }

    /// Position of `a` in [`Self::units`].
    pub fn unit_index(&self, a: usize) -> Option<usize> {
        self.unit_pos[a]
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }
}
