use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::group::{group_from_presentation, FinAbGroup, GroupPresentation};
use super::ring::FiniteLocalRing;
use crate::{Error, Result};

/// Default bound on the length of unit tuples in J-relations.
pub const DEFAULT_K_MAX: usize = 3;

/// Standard presentation of `Omega^1_A`: generators `[x|b]` standing for
/// `x db`, additive in both slots, with the Leibniz rule
/// `[x|ab] = [xa|b] + [xb|a]`.
pub fn omega1_standard_presentation(ring: &FiniteLocalRing) -> GroupPresentation {
    let n = ring.size();
    let gen = |x: usize, b: usize| x * n + b;
    let labels = (0..n * n)
        .map(|g| format!("{}*d({})", ring.labels[g / n], ring.labels[g % n]))
        .collect();
    let mut pres = GroupPresentation::new(labels);
    for x in 0..n {
        for y in x..n {
            let s = ring.add(x, y);
            for b in 0..n {
                pres.relate(&[(gen(s, b), 1), (gen(x, b), -1), (gen(y, b), -1)]);
                pres.relate(&[(gen(b, s), 1), (gen(b, x), -1), (gen(b, y), -1)]);
            }
        }
    }
    for x in 0..n {
        for a in 0..n {
            for b in a..n {
                let ab = ring.mul(a, b);
                pres.relate(&[(gen(x, ab), 1), (gen(ring.mul(x, a), b), -1), (gen(ring.mul(x, b), a), -1)]);
            }
        }
    }
    pres
}

/// `Omega^1_A` from the standard presentation.
pub fn omega1_standard(ring: &FiniteLocalRing) -> Result<FinAbGroup> {
    group_from_presentation(&omega1_standard_presentation(ring))
}

/// `Omega^1_A` from the symbol presentation `A (x) A^*` modulo J-relations of
/// length at most `k_max`.
pub fn omega1_symbolic(ring: &FiniteLocalRing, k_max: usize) -> Result<FinAbGroup> {
    omega_n_symbolic(ring, 1, k_max)
}

/// `Omega^n_A` from generators `a (x) b_1 (x) ... (x) b_n`.
pub fn omega_n_symbolic(ring: &FiniteLocalRing, n: usize, k_max: usize) -> Result<FinAbGroup> {
    group_from_presentation(&omega_n_symbolic_presentation(ring, n, k_max)?)
}

pub fn omega_n_symbolic_presentation(ring: &FiniteLocalRing, n: usize, k_max: usize) -> Result<GroupPresentation> {
    if n == 0 {
        return Err(Error::MismatchedParameters("degree must be at least 1"));
    }
    if k_max < 2 {
        return Err(Error::MismatchedParameters("K_max must be at least 2"));
    }
    let units = ring.units();
    let nu = units.len();
    let tails = nu.checked_pow(n as u32 - 1).filter(|t| ring.size() * t * nu <= 1 << 22);
    let tails = tails.ok_or_else(|| Error::OutOfSupportedRange(format!("Omega^{n} of {}", ring.name)))?;
    let per_a = nu * tails;
    // unit tuple (u_1, ..., u_n) as indices into `units`, u_1 most significant
    let gen = |a: usize, us: &[usize]| a * per_a + us.iter().fold(0, |acc, u| acc * nu + u);
    let decode = |mut t: usize, len: usize| -> Vec<usize> {
        let mut us = vec![0; len];
        for slot in (0..len).rev() {
            us[slot] = t % nu;
            t /= nu;
        }
        us
    };
    let labels = (0..ring.size() * per_a)
        .map(|g| {
            let mut s = String::from(ring.labels[g / per_a].as_str());
            for u in decode(g % per_a, n) {
                s.push_str(" (x) ");
                s.push_str(&ring.labels[units[u]]);
            }
            s
        })
        .collect();
    let mut pres = GroupPresentation::new(labels);

    for t in 0..per_a {
        let us = decode(t, n);
        for x in 0..ring.size() {
            for y in x..ring.size() {
                pres.relate(&[(gen(ring.add(x, y), &us), 1), (gen(x, &us), -1), (gen(y, &us), -1)]);
            }
        }
    }
    for a in 0..ring.size() {
        for t in 0..per_a {
            let us = decode(t, n);
            for slot in 0..n {
                for c in us[slot]..nu {
                    let prod = ring.mul(units[us[slot]], units[c]);
                    let mut merged = us.clone();
                    merged[slot] = ring.unit_index(prod).expect("product of units");
                    let mut other = us.clone();
                    other[slot] = c;
                    pres.relate(&[(gen(a, &merged), 1), (gen(a, &us), -1), (gen(a, &other), -1)]);
                }
            }
            if (0..n).any(|i| (i + 1..n).any(|j| us[i] == us[j])) {
                pres.relate(&[(gen(a, &us), 1)]);
            }
        }
    }
    let classes = unit_multisets_by_sum(ring, k_max);
    for t in 0..tails {
        let tail = decode(t, n - 1);
        let symbol = |u: usize| {
            let mut us = Vec::with_capacity(n);
            us.push(u);
            us.extend_from_slice(&tail);
            gen(units[u], &us)
        };
        for reps in classes.values() {
            let (first, rest) = reps.split_first().expect("nonempty class");
            for other in rest {
                let mut rel: Vec<(usize, i64)> = first.iter().map(|u| (symbol(*u), 1)).collect();
                rel.extend(other.iter().map(|u| (symbol(*u), -1)));
                pres.relate(&rel);
            }
        }
    }
    Ok(pres)
}

/// Multisets of units of size `0..=k_max`, keyed by their sum.
fn unit_multisets_by_sum(ring: &FiniteLocalRing, k_max: usize) -> BTreeMap<usize, Vec<Vec<usize>>> {
    let mut classes: BTreeMap<usize, Vec<Vec<usize>>> = BTreeMap::new();
    let mut stack: Vec<(Vec<usize>, usize)> = vec![(Vec::new(), ring.zero())];
    while let Some((ms, sum)) = stack.pop() {
        if ms.len() < k_max {
            let start = ms.last().copied().unwrap_or(0);
            for u in start..ring.units().len() {
                let mut next = ms.clone();
                next.push(u);
                stack.push((next, ring.add(sum, ring.units()[u])));
            }
        }
        classes.entry(sum).or_default().push(ms);
    }
    classes
}
