mod common;

use logdiff_core::arith::{
    factor_univariate, parse_ratfunc, pth_root, theta_decompose, theta_recombine, MultiPoly, PrimeField, RatFunc,
};
use logdiff_core::forms::PBaseField;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn sample(seed: u64, p: u32, m: usize) -> (PBaseField, RatFunc, RatFunc, RatFunc) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = PBaseField::new(p, m).unwrap();
    let a = common::ratfunc(&mut rng, &k, 3);
    let b = common::ratfunc(&mut rng, &k, 3);
    let c = common::ratfunc(&mut rng, &k, 2);
    (k, a, b, c)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(seed in any::<u64>(), p in prop::sample::select(vec![2u32, 3, 5]), m in 1usize..=3) {
        let (_, a, b, c) = sample(seed, p, m);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, RatFunc::zero(a.field(), m));
        if !b.is_zero() {
            prop_assert_eq!(&a.checked_div(&b).unwrap() * &b, a.clone());
        }
    }

    #[test]
    fn frobenius_is_additive(seed in any::<u64>(), p in prop::sample::select(vec![2u32, 3]), m in 1usize..=3) {
        let (_, a, b, _) = sample(seed, p, m);
        prop_assert_eq!((&a + &b).frobenius(), &a.frobenius() + &b.frobenius());
        prop_assert_eq!(pth_root(&a.frobenius()), Some(a.clone()));
    }

    #[test]
    fn theta_roundtrip(seed in any::<u64>(), p in prop::sample::select(vec![2u32, 3]), m in 1usize..=3) {
        let (_, a, _, _) = sample(seed, p, m);
        prop_assert_eq!(theta_recombine(&theta_decompose(&a), &a), a);
    }

    #[test]
    fn euler_is_a_derivation(seed in any::<u64>(), p in prop::sample::select(vec![2u32, 3]), m in 1usize..=3) {
        let (_, a, b, _) = sample(seed, p, m);
        for i in 0..m {
            prop_assert_eq!((&a * &b).euler(i), &(&a.euler(i) * &b) + &(&a * &b.euler(i)));
        }
    }

    #[test]
    fn display_parse_roundtrip(seed in any::<u64>(), p in prop::sample::select(vec![2u32, 3, 7]), m in 1usize..=3) {
        let (k, a, _, _) = sample(seed, p, m);
        let names: Vec<&str> = k.names().iter().map(|s| s.as_str()).collect();
        prop_assert_eq!(parse_ratfunc(&k.format(&a), k.field(), &names).unwrap(), a);
    }

    #[test]
    fn factorization_multiplies_back(seed in any::<u64>(), p in prop::sample::select(vec![2u32, 3, 5])) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = PrimeField::new(p).unwrap();
        let x = common::nonzero_poly(&mut rng, f, 1, 8);
        let (monic, _) = x.monic();
        let factors = factor_univariate(&x).unwrap();
        let back = factors.iter().fold(MultiPoly::one(f, 1), |acc, (q, e)| &acc * &q.pow(*e));
        prop_assert_eq!(back, monic);
        for (q, _) in &factors {
            let sub = factor_univariate(q).unwrap();
            prop_assert_eq!(sub.len(), 1);
            prop_assert_eq!(sub[0].1, 1);
        }
    }
}
