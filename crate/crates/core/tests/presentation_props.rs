use logdiff_core::presentation::{
    group_from_presentation, omega1_standard, omega1_symbolic, omega_n_symbolic, smith_normal_form, FiniteLocalRing,
    GroupPresentation, IntMatrix,
};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn matmul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let inner = b.len();
    let cols = if inner == 0 { 0 } else { b[0].len() };
    a.iter()
        .map(|row| (0..cols).map(|j| (0..inner).map(|k| &row[k] * &b[k][j]).sum()).collect())
        .collect()
}

/// Bareiss fraction-free determinant.
fn det(m: &IntMatrix) -> BigInt {
    let n = m.len();
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|r| !a[*r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

#[test]
fn smith_form_postconditions_random() {
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    for _ in 0..100 {
        let rows = rng.gen_range(1..=12);
        let cols = rng.gen_range(1..=12);
        let m: IntMatrix = (0..rows).map(|_| (0..cols).map(|_| BigInt::from(rng.gen_range(-9..=9))).collect()).collect();
        let snf = smith_normal_form(&m);
        let d = matmul(&matmul(&snf.u, &m), &snf.v);
        let diag = &snf.diagonal;
        for i in 0..rows {
            for j in 0..cols {
                let want = if i == j && i < diag.len() { diag[i].clone() } else { BigInt::zero() };
                assert_eq!(d[i][j], want);
            }
        }
        for w in diag.windows(2) {
            assert!(!w[0].is_negative() && !w[1].is_negative());
            if w[0].is_zero() {
                assert!(w[1].is_zero());
            } else {
                assert!((&w[1] % &w[0]).is_zero());
            }
        }
        assert_eq!(det(&snf.u).abs(), BigInt::one());
        assert_eq!(det(&snf.v).abs(), BigInt::one());
    }
}

#[test]
fn presentation_examples() {
    let mut p = GroupPresentation::with_generators(2);
    p.relate(&[(0, 1), (1, 1)]);
    p.relate(&[(0, 3)]);
    let g = group_from_presentation(&p).unwrap();
    assert_eq!((g.invariant_factors.as_slice(), g.free_rank), (&[3u64][..], 0));
    let free = group_from_presentation(&GroupPresentation::with_generators(2)).unwrap();
    assert_eq!(free.free_rank, 2);
}

fn test_rings() -> Vec<FiniteLocalRing> {
    vec![
        FiniteLocalRing::modpk(2, 2).unwrap(),
        FiniteLocalRing::modpk(3, 2).unwrap(),
        FiniteLocalRing::truncated(2, 2).unwrap(),
        FiniteLocalRing::truncated(2, 3).unwrap(),
        FiniteLocalRing::truncated(3, 2).unwrap(),
        FiniteLocalRing::square_zero_2vars(2, 2).unwrap(),
    ]
}

#[test]
fn symbolic_equals_standard_and_stable() {
    for ring in test_rings() {
        let std = omega1_standard(&ring).unwrap();
        let k3 = omega1_symbolic(&ring, 3).unwrap();
        let k4 = omega1_symbolic(&ring, 4).unwrap();
        assert_eq!(k3, std, "{}", ring.name);
        assert_eq!(k4, k3, "{}", ring.name);
        assert_eq!(omega_n_symbolic(&ring, 1, 3).unwrap(), k3, "{}", ring.name);
    }
}

#[test]
fn truncated_polynomial_orders() {
    // |Omega^1| = p^n when p | n, else p^(n-1)
    for (p, n) in [(2u32, 1u32), (2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2)] {
        let ring = FiniteLocalRing::truncated(p, n).unwrap();
        let order = omega1_standard(&ring).unwrap().order().unwrap();
        let want = if n % p == 0 { (p as u128).pow(n) } else { (p as u128).pow(n - 1) };
        assert_eq!(order, want, "p = {p}, n = {n}");
    }
}

#[test]
fn square_zero_two_variables() {
    // A dx + A dy modulo d(xy) = x dy + y dx; d(x^2) = d(y^2) = 0 in characteristic 2
    let ring = FiniteLocalRing::square_zero_2vars(2, 2).unwrap();
    assert_eq!(omega1_standard(&ring).unwrap().invariant_factors, [2, 2, 2, 2, 2]);
}
