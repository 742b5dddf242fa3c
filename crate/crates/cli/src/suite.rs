//! Randomized self-check: d o d = 0, symbols land in nu, and (p = 2) the
//! Kato decomposition round trip. Case `i` is seeded by `seed + i`, so the
//! result does not depend on the number of jobs.

use logdiff_core::arith::RatFunc;
use logdiff_core::forms::{DiffForm, IndexTuple, PBaseField};
use logdiff_core::milnor::{d_k, kato_decompose, verify_in_nu, MilnorSymbolSum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::CliError;

fn poly(rng: &mut ChaCha8Rng, k: &PBaseField, deg: u32) -> RatFunc {
    let mut acc = k.zero();
    for _ in 0..rng.gen_range(1..=3) {
        let mut term = k.constant(rng.gen_range(1..k.p() as i64));
        for i in 0..k.m() {
            term = &term * &k.var(i).pow(rng.gen_range(0..=deg as i64)).expect("nonzero base");
        }
        acc = &acc + &term;
    }
    acc
}

fn nonzero(rng: &mut ChaCha8Rng, k: &PBaseField) -> RatFunc {
    loop {
        let num = poly(rng, k, 2);
        let den = poly(rng, k, 1);
        if let Some(x) = num.checked_div(&den).ok().filter(|x| !x.is_zero()) {
            return x;
        }
    }
}

fn case(seed: u64) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = [2, 3][rng.gen_range(0..2)];
    let m = rng.gen_range(1..=3);
    let k = PBaseField::new(p, m).map_err(|e| e.to_string())?;
    if m >= 2 {
        let n = rng.gen_range(0..=m - 2);
        let coeffs: Vec<_> = IndexTuple::all(m, n).into_iter().map(|s| (s, poly(&mut rng, &k, 2))).collect();
        let a = DiffForm::from_coeffs(&k, n, coeffs).map_err(|e| e.to_string())?;
        let dd = a.ext_d().and_then(|x| x.ext_d()).map_err(|e| e.to_string())?;
        if !dd.is_zero() {
            return Err(format!("d(d(a)) != 0 for a = {}", a.to_string_with(k.names())));
        }
    }
    let n = rng.gen_range(1..=m.min(2));
    let mut sigma = MilnorSymbolSum::new(n);
    for _ in 0..rng.gen_range(1..=2) {
        let entries = (0..n).map(|_| nonzero(&mut rng, &k)).collect();
        sigma.push(rng.gen_range(1..p), entries).map_err(|e| e.to_string())?;
    }
    if !verify_in_nu(&k, &sigma).map_err(|e| e.to_string())? {
        return Err(format!("symbol sum not in nu: {sigma:?}"));
    }
    if p == 2 && m <= 2 {
        let w = d_k(&k, &sigma).map_err(|e| e.to_string())?;
        let r = kato_decompose(&k, &w).map_err(|e| e.to_string())?;
        if !r.residual.is_zero() || d_k(&k, &r.symbols).map_err(|e| e.to_string())? != w {
            return Err(format!("decomposition round trip fails for {sigma:?}"));
        }
    }
    Ok(())
}

pub fn run(seed: u64, count: u64, jobs: usize) -> Result<Value, CliError> {
    let jobs = jobs.max(1) as u64;
    let mut failures: Vec<(u64, String)> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..jobs)
            .map(|j| {
                scope.spawn(move || {
                    (j..count)
                        .step_by(jobs as usize)
                        .filter_map(|i| case(seed.wrapping_add(i)).err().map(|e| (i, e)))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("suite worker panicked")).collect()
    });
    failures.sort();
    let payload = json!({
        "seed": seed,
        "count": count,
        "passed": count - failures.len() as u64,
        "failed": failures.len(),
        "failures": failures.iter().map(|(i, e)| json!({ "case": i, "message": e })).collect::<Vec<_>>(),
    });
    if failures.is_empty() {
        Ok(payload)
    } else {
        Err(CliError::domain(format!("{} of {count} cases failed", failures.len())).with_payload(payload))
    }
}
