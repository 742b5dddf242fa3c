use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::vector::WittRing;
use crate::presentation::{group_from_presentation, FinAbGroup, GroupPresentation};
use crate::{Error, Result};

/// Largest presentation built by [`hsym_group`].
const MAX_GENERATORS: usize = 4096;

/// The group generated by symbols `[a, b_1, ..., b_{n-1}]` with `a` in
/// `W_i(F_q)` and `b_j` in `F_q^*`, modulo additivity in `a`,
/// multiplicativity in each `b_j`, `[(0,..,b,..,0), b, b_2, ...] = 0`,
/// `[F(a) - a, b_1, ...] = 0` and vanishing on repeated `b`'s.
pub fn hsym_group(q: u32, i: usize, n: usize) -> Result<FinAbGroup> {
    group_from_presentation(&hsym_presentation(q, i, n)?)
}

pub fn hsym_presentation(q: u32, i: usize, n: usize) -> Result<GroupPresentation> {
    if i == 0 || i > 3 || n == 0 || n > 2 {
        return Err(Error::OutOfSupportedRange(format!("hsym with i = {i}, n = {n}")));
    }
    let ring = WittRing::new(q, i)?;
    let f = *ring.field();
    let nw = ring.size();
    let units: Vec<u32> = (1..q).collect();
    let nu = units.len();
    let tails = nu.pow(n as u32 - 1);
    if nw * tails > MAX_GENERATORS {
        return Err(Error::OutOfSupportedRange(format!("{} generators", nw * tails)));
    }
    let decode = |mut t: usize| -> Vec<usize> {
        let mut bs = vec![0; n - 1];
        for slot in (0..n - 1).rev() {
            bs[slot] = t % nu;
            t /= nu;
        }
        bs
    };
    let gen = |a: usize, bs: &[usize]| a * tails + bs.iter().fold(0, |acc, b| acc * nu + b);
    let labels = (0..nw * tails)
        .map(|g| {
            let a = ring.element(g / tails);
            let mut s = format!("[{:?}", a.components);
            for b in decode(g % tails) {
                s.push_str(&format!(", {}", units[b]));
            }
            s.push(']');
            s
        })
        .collect();
    let mut pres = GroupPresentation::new(labels);
    let unit_index = |x: u32| (x - 1) as usize;

    // additivity: against the generating set of single-slot vectors
    let singles: BTreeSet<usize> =
        (0..i).flat_map(|pos| f.elements().map(move |x| (pos, x))).map(|(pos, x)| ring.index_of(&ring.single(pos, x))).collect();
    for a in 0..nw {
        let av = ring.element(a);
        for &s in &singles {
            let sum = ring.index_of(&ring.add(&av, &ring.element(s))?);
            for t in 0..tails {
                let bs = decode(t);
                pres.relate(&[(gen(sum, &bs), 1), (gen(a, &bs), -1), (gen(s, &bs), -1)]);
            }
        }
    }
    for a in 0..nw {
        let av = ring.element(a);
        let wp = ring.index_of(&ring.sub(&ring.frobenius(&av)?, &av)?);
        for t in 0..tails {
            let bs = decode(t);
            pres.relate(&[(gen(wp, &bs), 1)]);
            for slot in 0..n - 1 {
                for c in 0..nu {
                    let mut merged = bs.clone();
                    merged[slot] = unit_index(f.mul(units[bs[slot]], units[c]));
                    let mut other = bs.clone();
                    other[slot] = c;
                    pres.relate(&[(gen(a, &merged), 1), (gen(a, &bs), -1), (gen(a, &other), -1)]);
                }
            }
            if (0..n - 1).any(|j| (j + 1..n - 1).any(|k| bs[j] == bs[k])) {
                pres.relate(&[(gen(a, &bs), 1)]);
            }
        }
    }
    if n >= 2 {
        for t in 0..tails {
            let bs = decode(t);
            let b = units[bs[0]];
            for pos in 0..i {
                pres.relate(&[(gen(ring.index_of(&ring.single(pos, b)), &bs), 1)]);
            }
        }
    }
    Ok(pres)
}

/// Order and exponent of `W_i(F_q) / (F - 1) W_i(F_q)`, by enumeration.
pub fn artin_schreier_witt_cokernel(q: u32, i: usize) -> Result<(u64, u64)> {
    let ring = WittRing::new(q, i)?;
    let image: BTreeSet<usize> = (0..ring.size())
        .map(|a| {
            let av = ring.element(a);
            Ok(ring.index_of(&ring.sub(&ring.frobenius(&av)?, &av)?))
        })
        .collect::<Result<_>>()?;
    let order = (ring.size() / image.len()) as u64;
    let mut exponent = 1;
    for a in 0..ring.size() {
        let av = ring.element(a);
        let mut k = 1;
        let mut acc = av.clone();
        while !image.contains(&ring.index_of(&acc)) {
            acc = ring.add(&acc, &av)?;
            k += 1;
        }
        exponent = num_integer::lcm(exponent, k);
    }
    Ok((order, exponent))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finite_field_values() {
        assert_eq!(hsym_group(2, 1, 1).unwrap(), FinAbGroup::cyclic(2));
        assert_eq!(hsym_group(4, 1, 1).unwrap(), FinAbGroup::cyclic(2));
        assert_eq!(hsym_group(4, 2, 1).unwrap(), FinAbGroup::cyclic(4));
        assert!(hsym_group(2, 1, 2).unwrap().is_trivial());
        assert!(hsym_group(4, 1, 2).unwrap().is_trivial());
    }

    #[test]
    fn oracle_agrees() {
        for (q, i) in [(2, 1), (4, 1), (4, 2), (3, 2), (9, 1)] {
            let g = hsym_group(q, i, 1).unwrap();
            let (order, exponent) = artin_schreier_witt_cokernel(q, i).unwrap();
            assert_eq!(g.order(), Some(order as u128));
            assert_eq!(g.exponent(), exponent);
        }
    }

    #[test]
    fn range_checks() {
        assert!(matches!(hsym_group(8, 1, 1), Err(Error::OutOfSupportedRange(_))));
        assert!(matches!(hsym_group(2, 4, 1), Err(Error::OutOfSupportedRange(_))));
        assert!(matches!(hsym_group(2, 1, 3), Err(Error::OutOfSupportedRange(_))));
    }
}
