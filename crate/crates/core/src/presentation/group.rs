use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::snf::invariant_diagonal;
use crate::{Error, Result};

/// Abelian group given by generators and integer relations.
///
/// Relations are stored sparsely as `(generator, coefficient)` lists; a
/// relation `sum c_g * g = 0`.
#[derive(Clone, Debug, Default)]
pub struct GroupPresentation {
    pub labels: Vec<String>,
    pub relations: Vec<Vec<(usize, i64)>>,
}

impl GroupPresentation {
    pub fn new(labels: Vec<String>) -> Self {
        GroupPresentation { labels, relations: Vec::new() }
    }

    pub fn with_generators(n: usize) -> Self {
        GroupPresentation { labels: (0..n).map(|i| alloc::format!("g{i}")).collect(), relations: Vec::new() }
    }

    pub fn num_generators(&self) -> usize {
        self.labels.len()
    }

    /// Adds a relation, merging repeated generators and dropping zeros.
    pub fn relate(&mut self, terms: &[(usize, i64)]) {
        let mut merged: BTreeMap<usize, i64> = BTreeMap::new();
        for (g, c) in terms {
            assert!(*g < self.labels.len(), "relation references unknown generator {g}");
            *merged.entry(*g).or_insert(0) += c;
        }
        let row: Vec<(usize, i64)> = merged.into_iter().filter(|(_, c)| *c != 0).collect();
        if !row.is_empty() {
            self.relations.push(row);
        }
    }

    /// Dense relation matrix (rows = relations, columns = generators).
    pub fn relation_matrix(&self) -> Vec<Vec<i64>> {
        self.relations
            .iter()
            .map(|r| {
                let mut row = vec![0; self.labels.len()];
                for (g, c) in r {
                    row[*g] = *c;
                }
                row
            })
            .collect()
    }
}

/// Finitely generated abelian group `Z^free_rank + sum Z/d_i` with
/// `d_1 | d_2 | ...`, every `d_i > 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FinAbGroup {
    pub invariant_factors: Vec<u64>,
    pub free_rank: usize,
}

impl FinAbGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn cyclic(n: u64) -> Self {
        if n == 1 {
            Self::trivial()
        } else {
            FinAbGroup { invariant_factors: vec![n], free_rank: 0 }
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty() && self.free_rank == 0
    }

    /// Group order, `None` if infinite or too large.
    pub fn order(&self) -> Option<u128> {
        if self.free_rank > 0 {
            return None;
        }
        self.invariant_factors.iter().try_fold(1u128, |acc, d| acc.checked_mul(*d as u128))
    }

    /// Exponent of the torsion part.
    pub fn exponent(&self) -> u64 {
        self.invariant_factors.last().copied().unwrap_or(1)
    }
}

type Row = BTreeMap<usize, BigInt>;

/// Tietze elimination state: generators solved for by a relation with a
/// `+-1` coefficient are replaced by their expression in the others.
struct Eliminator {
    solved: Vec<Option<Row>>,
}

impl Eliminator {
    fn is_clean(&self, g: usize) -> bool {
        self.solved[g]
            .as_ref()
            .map_or(true, |e| e.keys().all(|h| self.solved[*h].is_none()))
    }

    /// Rewrites the stored expression of `g` in live generators only.
    fn settle(&mut self, g: usize) {
        let mut stack = vec![g];
        while let Some(&x) = stack.last() {
            let pending: Vec<usize> = self.solved[x]
                .as_ref()
                .unwrap()
                .keys()
                .copied()
                .filter(|h| self.solved[*h].is_some() && !self.is_clean(*h))
                .collect();
            if pending.is_empty() {
                let expr = self.solved[x].take().unwrap();
                let clean = self.substitute(&expr);
                self.solved[x] = Some(clean);
                stack.pop();
            } else {
                stack.extend(pending);
            }
        }
    }

    /// One-level substitution; callers guarantee referenced expressions are clean.
    fn substitute(&self, row: &Row) -> Row {
        let mut out = Row::new();
        for (g, c) in row {
            match &self.solved[*g] {
                None => add_into(&mut out, *g, c.clone()),
                Some(expr) => {
                    for (h, d) in expr {
                        add_into(&mut out, *h, c * d);
                    }
                }
            }
        }
        out
    }

    fn resolve(&mut self, row: &Row) -> Row {
        let dirty: Vec<usize> =
            row.keys().copied().filter(|g| self.solved[*g].is_some() && !self.is_clean(*g)).collect();
        for g in dirty {
            self.settle(g);
        }
        self.substitute(row)
    }

    /// Solves `row = 0` for a generator with unit coefficient, if any.
    fn try_eliminate(&mut self, row: &Row) -> bool {
        let Some((&g, c)) = row.iter().rev().find(|(_, c)| c.abs().is_one()) else {
            return false;
        };
        // g = -c * sum_{h != g} c_h h, since c = +-1
        let sign = -c.clone();
        let expr: Row = row
            .iter()
            .filter(|(h, _)| **h != g)
            .map(|(h, d)| (*h, &sign * d))
            .collect();
        self.solved[g] = Some(expr);
        true
    }
}

fn add_into(row: &mut Row, g: usize, c: BigInt) {
    if c.is_zero() {
        return;
    }
    let e = row.entry(g).or_insert_with(BigInt::zero);
    *e += c;
    if e.is_zero() {
        row.remove(&g);
    }
}

/// Cokernel of the relation matrix as invariant factors and free rank.
pub fn group_from_presentation(p: &GroupPresentation) -> Result<FinAbGroup> {
    let n = p.num_generators();
    let mut elim = Eliminator { solved: vec![None; n] };
    let mut hard: Vec<Row> = Vec::new();
    for rel in &p.relations {
        let row: Row = rel.iter().map(|(g, c)| (*g, BigInt::from(*c))).collect();
        let row = elim.resolve(&row);
        if row.is_empty() {
            continue;
        }
        if !elim.try_eliminate(&row) {
            hard.push(row);
        }
    }
    loop {
        let mut progress = false;
        let mut next = Vec::with_capacity(hard.len());
        for row in core::mem::take(&mut hard) {
            let row = elim.resolve(&row);
            if row.is_empty() {
                continue;
            }
            if elim.try_eliminate(&row) {
                progress = true;
            } else {
                next.push(row);
            }
        }
        hard = next;
        if !progress {
            break;
        }
    }
    let live: Vec<usize> = (0..n).filter(|g| elim.solved[*g].is_none()).collect();
    let mut col = vec![usize::MAX; n];
    for (k, g) in live.iter().enumerate() {
        col[*g] = k;
    }
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for row in &hard {
        let row = elim.resolve(row);
        if row.is_empty() {
            continue;
        }
        let mut dense = vec![BigInt::zero(); live.len()];
        for (g, c) in row {
            dense[col[g]] = c;
        }
        if !rows.contains(&dense) {
            rows.push(dense);
        }
    }
    if rows.is_empty() {
        return Ok(FinAbGroup { invariant_factors: Vec::new(), free_rank: live.len() });
    }
    let diag = invariant_diagonal(&rows);
    let rank = diag.iter().filter(|d| !d.is_zero()).count();
    let mut factors = Vec::new();
    for d in diag.iter().filter(|d| !d.is_zero() && !d.is_one()) {
        factors.push(d.to_u64().ok_or(Error::Overflow)?);
    }
    Ok(FinAbGroup { invariant_factors: factors, free_rank: live.len() - rank })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_examples() {
        let mut p = GroupPresentation::with_generators(1);
        p.relate(&[(0, 2)]);
        assert_eq!(group_from_presentation(&p).unwrap(), FinAbGroup::cyclic(2));

        let p = GroupPresentation::with_generators(2);
        assert_eq!(
            group_from_presentation(&p).unwrap(),
            FinAbGroup { invariant_factors: vec![], free_rank: 2 }
        );

        let mut p = GroupPresentation::with_generators(2);
        p.relate(&[(0, 1), (1, 1)]);
        p.relate(&[(0, 3)]);
        assert_eq!(group_from_presentation(&p).unwrap(), FinAbGroup::cyclic(3));
    }

    #[test]
    fn chained_eliminations() {
        // g0 = g1, g1 = g2, g2 = g3, 6 g0 = 0, 4 g3 = 0  ->  Z/2
        let mut p = GroupPresentation::with_generators(4);
        p.relate(&[(0, 1), (1, -1)]);
        p.relate(&[(1, 1), (2, -1)]);
        p.relate(&[(2, 1), (3, -1)]);
        p.relate(&[(0, 6)]);
        p.relate(&[(3, 4)]);
        assert_eq!(group_from_presentation(&p).unwrap(), FinAbGroup::cyclic(2));
    }

    #[test]
    fn free_and_torsion_mix() {
        // Z^3 / <(2, 4, 0), (0, 6, 0)> = Z/2 + Z/6 + Z
        let mut p = GroupPresentation::with_generators(3);
        p.relate(&[(0, 2), (1, 4)]);
        p.relate(&[(1, 6)]);
        assert_eq!(
            group_from_presentation(&p).unwrap(),
            FinAbGroup { invariant_factors: vec![2, 6], free_rank: 1 }
        );
    }
}
