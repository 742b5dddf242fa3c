use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense integer matrix, row-major.
pub type IntMatrix = Vec<Vec<BigInt>>;

/// `U * M * V = D` with `U`, `V` unimodular and `D` diagonal with
/// `d_1 | d_2 | ...` (nonnegative).
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub diagonal: Vec<BigInt>,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

pub(crate) fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

fn dims(m: &IntMatrix) -> (usize, usize) {
    (m.len(), m.first().map_or(0, |r| r.len()))
}

/// Full Smith normal form with transforms.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (r, c) = dims(m);
    let mut a = m.clone();
    let mut u = identity(r);
    let mut v = identity(c);
    let diagonal = reduce(&mut a, Some(&mut u), Some(&mut v));
    SmithForm { diagonal, u, v }
}

/// Diagonal of the Smith normal form only (no transforms).
pub fn invariant_diagonal(m: &IntMatrix) -> Vec<BigInt> {
    let mut a = m.clone();
    reduce(&mut a, None, None)
}

fn row_axpy(m: &mut IntMatrix, dst: usize, src: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    let (d, s) = if dst < src {
        let (lo, hi) = m.split_at_mut(src);
        (&mut lo[dst], &hi[0])
    } else {
        let (lo, hi) = m.split_at_mut(dst);
        (&mut hi[0], &lo[src])
    };
    for (x, y) in d.iter_mut().zip(s.iter()) {
        if !y.is_zero() {
            *x -= q * y;
        }
    }
}

fn col_axpy(m: &mut IntMatrix, dst: usize, src: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    for row in m.iter_mut() {
        if !row[src].is_zero() {
            let y = row[src].clone();
            row[dst] -= q * y;
        }
    }
}

fn swap_cols(m: &mut IntMatrix, i: usize, j: usize) {
    if i != j {
        for row in m.iter_mut() {
            row.swap(i, j);
        }
    }
}

/// Diagonalizes `a` in place, pivoting on the smallest nonzero entry.
/// Row operations are mirrored into `u`, column operations into `v`.
fn reduce(a: &mut IntMatrix, mut u: Option<&mut IntMatrix>, mut v: Option<&mut IntMatrix>) -> Vec<BigInt> {
    let (r, c) = dims(a);
    let n = r.min(c);
    let mut diag = Vec::with_capacity(n);
    for t in 0..n {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..r {
                for j in t..c {
                    let x = &a[i][j];
                    if x.is_zero() {
                        continue;
                    }
                    if best.map_or(true, |(bi, bj)| x.abs() < a[bi][bj].abs()) {
                        best = Some((i, j));
                        if x.abs().is_one() {
                            break;
                        }
                    }
                }
                if best.map_or(false, |(bi, bj)| a[bi][bj].abs().is_one()) {
                    break;
                }
            }
            let Some((pi, pj)) = best else {
                diag.extend(core::iter::repeat(BigInt::zero()).take(n - t));
                return diag;
            };
            a.swap(t, pi);
            if let Some(u) = u.as_deref_mut() {
                u.swap(t, pi);
            }
            swap_cols(a, t, pj);
            if let Some(v) = v.as_deref_mut() {
                swap_cols(v, t, pj);
            }
            let mut clean = true;
            for i in t + 1..r {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                row_axpy(a, i, t, &q);
                if let Some(u) = u.as_deref_mut() {
                    row_axpy(u, i, t, &q);
                }
                if !a[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..c {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                col_axpy(a, j, t, &q);
                if let Some(v) = v.as_deref_mut() {
                    col_axpy(v, j, t, &q);
                }
                if !a[t][j].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // pivot must divide the rest of the block
            let pivot = a[t][t].clone();
            let bad = (t + 1..r).find(|&i| (t + 1..c).any(|j| !a[i][j].is_multiple_of(&pivot)));
            match bad {
                Some(i) => {
                    let m1 = -BigInt::one();
                    row_axpy(a, t, i, &m1);
                    if let Some(u) = u.as_deref_mut() {
                        row_axpy(u, t, i, &m1);
                    }
                }
                None => break,
            }
        }
        if a[t][t].is_negative() {
            for x in a[t].iter_mut() {
                *x = -core::mem::take(x);
            }
            if let Some(u) = u.as_deref_mut() {
                for x in u[t].iter_mut() {
                    *x = -core::mem::take(x);
                }
            }
        }
        diag.push(a[t][t].clone());
    }
    diag
}
