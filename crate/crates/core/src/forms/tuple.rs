use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::arith::MAX_VARS;
use crate::{Error, Result};

/// Strictly increasing tuple `s` of p-base indices, stored as a bit set
/// (bit `i` for the 0-based index `i`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct IndexTuple(u8);

impl IndexTuple {
    pub const EMPTY: IndexTuple = IndexTuple(0);

    /// From 1-based, strictly increasing indices.
    pub fn new(indices: &[usize]) -> Result<Self> {
        let mut bits = 0u8;
        let mut prev = 0;
        for &i in indices {
            if i <= prev || i > MAX_VARS {
                return Err(Error::MismatchedParameters("index tuple must be strictly increasing in 1..=4"));
            }
            bits |= 1 << (i - 1);
            prev = i;
        }
        Ok(IndexTuple(bits))
    }

    /// From 0-based indices in any order.
    pub fn from_indices(indices: &[usize]) -> Self {
        IndexTuple(indices.iter().fold(0, |acc, i| acc | (1 << i)))
    }

    pub(crate) fn from_bits(bits: u8) -> Self {
        IndexTuple(bits)
    }

    pub(crate) fn bits(self) -> u8 {
        self.0
    }

    /// `(i)` for a 0-based index.
    pub fn single(i: usize) -> Self {
        IndexTuple(1 << i)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }

    /// 0-based indices in increasing order.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        (0..8).filter(move |i| self.0 & (1 << i) != 0)
    }

    /// 1-based indices `s(1) < ... < s(n)`.
    pub fn one_based(self) -> Vec<usize> {
        self.indices().map(|i| i + 1).collect()
    }

    pub fn insert(self, i: usize) -> Self {
        IndexTuple(self.0 | (1 << i))
    }

    pub fn remove(self, i: usize) -> Self {
        IndexTuple(self.0 & !(1 << i))
    }

    /// Number of entries smaller than `i`.
    pub fn rank_of(self, i: usize) -> usize {
        (self.0 & ((1u8 << i) - 1)).count_ones() as usize
    }

    /// Sign of `omega_self ^ omega_other` relative to `omega_{self + other}`,
    /// or `None` if the tuples share an index.
    pub fn wedge_sign(self, other: IndexTuple) -> Option<bool> {
        if self.0 & other.0 != 0 {
            return None;
        }
        let inversions: u32 = other.indices().map(|j| (self.0 >> (j + 1)).count_ones()).sum();
        Some(inversions % 2 == 1)
    }

    /// The componentwise partial order: `self(i) <= other(i)` for all `i`,
    /// with equality somewhere failing.
    pub fn precedes(self, other: IndexTuple) -> bool {
        self.len() == other.len() && self != other && self.indices().zip(other.indices()).all(|(a, b)| a <= b)
    }

    /// All tuples of length `n` over `m` indices, in increasing order.
    pub fn all(m: usize, n: usize) -> Vec<IndexTuple> {
        let mut out: Vec<IndexTuple> =
            (0u16..(1 << m)).map(|b| IndexTuple(b as u8)).filter(|s| s.len() == n).collect();
        out.sort();
        out
    }
}

impl Ord for IndexTuple {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.indices().cmp(other.indices()))
    }
}

impl PartialOrd for IndexTuple {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for IndexTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for IndexTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, i) in self.indices().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(ix: &[usize]) -> IndexTuple {
        IndexTuple::new(ix).unwrap()
    }

    #[test]
    fn partial_order() {
        assert!(t(&[1, 2]).precedes(t(&[1, 3])));
        assert!(!t(&[1, 3]).precedes(t(&[1, 3])));
        assert!(!t(&[2, 3]).precedes(t(&[1, 3])));
        assert!(!t(&[1, 4]).precedes(t(&[2, 3])));
    }

    #[test]
    fn signs() {
        assert_eq!(t(&[1]).wedge_sign(t(&[2])), Some(false));
        assert_eq!(t(&[2]).wedge_sign(t(&[1])), Some(true));
        assert_eq!(t(&[2, 3]).wedge_sign(t(&[1])), Some(false));
        assert_eq!(t(&[1, 3]).wedge_sign(t(&[2])), Some(true));
        assert_eq!(t(&[1]).wedge_sign(t(&[1])), None);
    }

    #[test]
    fn lex_order_and_validation() {
        assert!(t(&[1, 3]) < t(&[2, 3]));
        assert!(t(&[1, 4]) < t(&[2, 3]));
        assert_eq!(IndexTuple::all(3, 2), [t(&[1, 2]), t(&[1, 3]), t(&[2, 3])]);
        assert!(IndexTuple::new(&[2, 1]).is_err());
        assert_eq!(alloc::format!("{}", t(&[1, 3])), "(1,3)");
    }
}
