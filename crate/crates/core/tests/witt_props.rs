use logdiff_core::witt::{artin_schreier_witt_cokernel, hsym_group, WittRing, WittVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn ghost_components_are_homomorphic() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for p in [2u32, 3] {
        for len in 1..=3 {
            let ring = WittRing::new(p, len).unwrap();
            let w = ring.polynomials();
            for _ in 0..100 {
                let a = ring.element(rng.gen_range(0..ring.size()));
                let b = ring.element(rng.gen_range(0..ring.size()));
                let lift = |v: &[u32]| v.iter().map(|x| *x as i128).collect::<Vec<_>>();
                let (la, lb) = (lift(&a.components), lift(&b.components));
                let (ga, gb) = (w.ghost(&la).unwrap(), w.ghost(&lb).unwrap());
                let gs = w.ghost(&lift(&ring.add(&a, &b).unwrap().components)).unwrap();
                let gp = w.ghost(&lift(&ring.mul(&a, &b).unwrap().components)).unwrap();
                for n in 0..len {
                    let modulus = (p as i128).pow(n as u32 + 1);
                    assert_eq!((gs[n] - ga[n] - gb[n]).rem_euclid(modulus), 0);
                    assert_eq!((gp[n] - ga[n] * gb[n]).rem_euclid(modulus), 0);
                }
            }
        }
    }
}

#[test]
fn witt_vectors_of_prime_field_are_cyclic() {
    for p in [2u32, 3] {
        for len in 1..=3 {
            let ring = WittRing::new(p, len).unwrap();
            let order = (p as u64).pow(len as u32);
            assert_eq!(ring.additive_order(&ring.one()).unwrap(), order);
            let mut seen = std::collections::BTreeSet::new();
            let mut acc = ring.zero();
            for _ in 0..order {
                seen.insert(acc.clone());
                acc = ring.add(&acc, &ring.one()).unwrap();
            }
            assert_eq!(seen.len() as u64, order);
            assert_eq!(seen.len(), ring.size());
        }
    }
}

#[test]
fn frobenius_and_verschiebung() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for (q, len) in [(2, 3), (3, 2), (4, 2), (9, 2)] {
        let ring = WittRing::new(q, len).unwrap();
        let p = ring.p() as u64;
        for _ in 0..100 {
            let a = ring.element(rng.gen_range(0..ring.size()));
            let b = ring.element(rng.gen_range(0..ring.size()));
            let fv = ring.frobenius(&ring.verschiebung(&a).unwrap()).unwrap();
            assert_eq!(fv, ring.mul_int(&a, p).unwrap());
            let f = |x: &WittVector| ring.frobenius(x).unwrap();
            assert_eq!(f(&ring.mul(&a, &b).unwrap()), ring.mul(&f(&a), &f(&b)).unwrap());
            assert_eq!(f(&ring.add(&a, &b).unwrap()), ring.add(&f(&a), &f(&b)).unwrap());
            let v = |x: &WittVector| ring.verschiebung(x).unwrap();
            assert_eq!(v(&ring.add(&a, &b).unwrap()), ring.add(&v(&a), &v(&b)).unwrap());
        }
    }
}

#[test]
fn ring_axioms_spot_check() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let ring = WittRing::new(4, 2).unwrap();
    for _ in 0..200 {
        let [a, b, c] = [0; 3].map(|_| ring.element(rng.gen_range(0..ring.size())));
        let add = |x: &WittVector, y: &WittVector| ring.add(x, y).unwrap();
        let mul = |x: &WittVector, y: &WittVector| ring.mul(x, y).unwrap();
        assert_eq!(add(&add(&a, &b), &c), add(&a, &add(&b, &c)));
        assert_eq!(mul(&mul(&a, &b), &c), mul(&a, &mul(&b, &c)));
        assert_eq!(mul(&a, &add(&b, &c)), add(&mul(&a, &b), &mul(&a, &c)));
        assert_eq!(mul(&a, &ring.one()), a);
    }
}

#[test]
fn hsym_degree_one_matches_cokernel() {
    for (q, i) in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (4, 1), (4, 2), (9, 1)] {
        let g = hsym_group(q, i, 1).unwrap();
        let (order, exponent) = artin_schreier_witt_cokernel(q, i).unwrap();
        assert_eq!(g.order(), Some(order as u128), "q = {q}, i = {i}");
        assert_eq!(g.exponent(), exponent, "q = {q}, i = {i}");
    }
}
