//! Sparse linear algebra over `F_p`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::arith::PrimeField;

pub(crate) type SparseVec = BTreeMap<usize, u32>;

/// Assigns consecutive column numbers to keys.
pub(crate) struct Columns<K: Ord> {
    index: BTreeMap<K, usize>,
}

impl<K: Ord> Columns<K> {
    pub(crate) fn new() -> Self {
        Columns { index: BTreeMap::new() }
    }

    pub(crate) fn col(&mut self, key: K) -> usize {
        let next = self.index.len();
        *self.index.entry(key).or_insert(next)
    }
}

fn axpy(field: PrimeField, y: &mut SparseVec, a: u32, x: &SparseVec) {
    for (k, v) in x {
        let e = y.entry(*k).or_insert(0);
        *e = field.add(*e, field.mul(a, *v));
        if *e == 0 {
            y.remove(k);
        }
    }
}

/// Incremental row echelon form that remembers how each row was built from
/// the inserted vectors.
pub(crate) struct Echelon {
    field: PrimeField,
    rows: BTreeMap<usize, (SparseVec, SparseVec)>,
}

impl Echelon {
    pub(crate) fn new(field: PrimeField) -> Self {
        Echelon { field, rows: BTreeMap::new() }
    }

    #[cfg(test)]
    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `(v, combo)` against the stored rows.
    fn reduce(&self, v: &mut SparseVec, combo: &mut SparseVec) {
        let f = self.field;
        let mut cursor = 0;
        while let Some((&k, &c)) = v.range(cursor..).next() {
            if let Some((row, rc)) = self.rows.get(&k) {
                let a = f.neg(c);
                axpy(f, v, a, row);
                axpy(f, combo, a, rc);
            }
            cursor = k + 1;
        }
    }

    /// Inserts `v` tagged as input number `tag`. Returns `None` if `v` was
    /// independent, or the combination of earlier inputs that `v` equals
    /// (as `v - sum = 0`, including `tag` itself with coefficient 1).
    pub(crate) fn insert(&mut self, mut v: SparseVec, tag: usize) -> Option<SparseVec> {
        let mut combo = SparseVec::new();
        combo.insert(tag, 1);
        self.reduce(&mut v, &mut combo);
        match v.iter().next() {
            None => Some(combo),
            Some((&k, &c)) => {
                let inv = self.field.inv(c).unwrap();
                for x in v.values_mut().chain(combo.values_mut()) {
                    *x = self.field.mul(*x, inv);
                }
                self.rows.insert(k, (v, combo));
                None
            }
        }
    }

    /// Some combination `c` of the inputs with `sum c_i input_i = target`.
    pub(crate) fn solve(&self, target: &SparseVec) -> Option<SparseVec> {
        let mut v = target.clone();
        let mut combo = SparseVec::new();
        self.reduce(&mut v, &mut combo);
        if !v.is_empty() {
            return None;
        }
        let f = self.field;
        Some(combo.into_iter().map(|(k, c)| (k, f.neg(c))).filter(|(_, c)| *c != 0).collect())
    }
}

/// Indices of a maximal independent subset of `vectors`, in order.
pub(crate) fn independent_subset(field: PrimeField, vectors: &[SparseVec]) -> Vec<usize> {
    let mut ech = Echelon::new(field);
    let mut keep = Vec::new();
    for (i, v) in vectors.iter().enumerate() {
        if ech.insert(v.clone(), i).is_none() {
            keep.push(i);
        }
    }
    keep
}

/// Basis of `{c : sum c_i images_i = 0}`.
pub(crate) fn kernel(field: PrimeField, images: &[SparseVec]) -> Vec<SparseVec> {
    let mut ech = Echelon::new(field);
    images.iter().enumerate().filter_map(|(i, v)| ech.insert(v.clone(), i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(entries: &[(usize, u32)]) -> SparseVec {
        entries.iter().copied().collect()
    }

    #[test]
    fn kernel_and_solve() {
        let f = PrimeField::new(3).unwrap();
        let images = [sv(&[(0, 1), (1, 2)]), sv(&[(0, 2), (1, 1)]), sv(&[(1, 1)])];
        let ker = kernel(f, &images);
        assert_eq!(ker, [sv(&[(0, 1), (1, 1)])]);
        let mut ech = Echelon::new(f);
        for (i, v) in images.iter().enumerate() {
            ech.insert(v.clone(), i);
        }
        assert_eq!(ech.rank(), 2);
        let c = ech.solve(&sv(&[(0, 1)])).unwrap();
        let mut acc = SparseVec::new();
        for (i, a) in &c {
            axpy(f, &mut acc, *a, &images[*i]);
        }
        assert_eq!(acc, sv(&[(0, 1)]));
        assert!(Echelon::new(f).solve(&sv(&[(2, 1)])).is_none());
    }
}
