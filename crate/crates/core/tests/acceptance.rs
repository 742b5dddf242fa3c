//! Acceptance suite: one PASS/FAIL line per criterion, each under a time limit.

mod common;

use std::fmt::Debug;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use logdiff_core::arith::{monic_irreducibles, RatFunc};
use logdiff_core::forms::*;
use logdiff_core::milnor::{d_k, dlog_inverse_n1, kato_decompose, verify_in_nu, MilnorSymbolSum};
use logdiff_core::presentation::{omega1_standard, omega1_symbolic, FiniteLocalRing};
use logdiff_core::witt::{artin_schreier_witt_cokernel, hsym_group, WittRing};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

macro_rules! check {
    ($cond:expr, $($msg:tt)*) => {
        if !$cond {
            return Err(format!($($msg)*));
        }
    };
}

trait OrFail<T> {
    fn or_fail(self, what: &str) -> Result<T, String>;
}

impl<T, E: Debug> OrFail<T> for Result<T, E> {
    fn or_fail(self, what: &str) -> Result<T, String> {
        self.map_err(|e| format!("{what}: {e:?}"))
    }
}

fn presentation_equivalence() -> Outcome {
    let rings = [
        FiniteLocalRing::modpk(2, 2),
        FiniteLocalRing::modpk(3, 2),
        FiniteLocalRing::truncated(2, 2),
        FiniteLocalRing::truncated(2, 3),
        FiniteLocalRing::truncated(3, 2),
        FiniteLocalRing::square_zero_2vars(2, 2),
    ];
    let mut summary = Vec::new();
    for ring in rings {
        let ring = ring.or_fail("ring")?;
        let std = omega1_standard(&ring).or_fail("standard")?;
        let sym = omega1_symbolic(&ring, 3).or_fail("symbolic")?;
        check!(std == sym, "{}: standard {:?} vs symbolic {:?}", ring.name, std, sym);
        summary.push(format!("{}={:?}", ring.name, std.invariant_factors));
    }
    for (p, n) in [(2u32, 2u32), (2, 3), (3, 2), (3, 3)] {
        let ring = FiniteLocalRing::truncated(p, n).or_fail("ring")?;
        let order = omega1_standard(&ring).or_fail("standard")?.order();
        let want = (p as u128).pow(if n % p == 0 { n } else { n - 1 });
        check!(order == Some(want), "F_{p}[t]/t^{n}: order {order:?}, want {want}");
    }
    Ok(summary.join(" "))
}

fn d_squared() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    for _ in 0..100 {
        let k = PBaseField::new([2, 3][rng.gen_range(0..2)], rng.gen_range(2..=3)).or_fail("field")?;
        let n = rng.gen_range(0..=k.m() - 2);
        let a = common::form(&mut rng, &k, n, 4);
        let dd = a.ext_d().or_fail("d")?.ext_d().or_fail("d")?;
        check!(dd.is_zero(), "d(d({a})) = {dd}");
    }
    Ok("100 forms".into())
}

fn theta_machinery() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(102);
    let mut pieces = 0;
    for _ in 0..100 {
        let k = common::field(&mut rng, &[2, 3], 3);
        let n = rng.gen_range(1..=k.m());
        let a = common::form(&mut rng, &k, n, 3);
        for (theta, comp) in theta_split(&a) {
            if theta.is_zero() {
                continue;
            }
            let lam = lambda_theta(&theta, &comp.form);
            let mut lhs = lam.wedge(&contracting_homotopy(&comp).or_fail("h")?).or_fail("wedge")?;
            if n < k.m() {
                let up = ThetaComponent { theta: theta.clone(), form: lam.wedge(&comp.form).or_fail("wedge")? };
                lhs = &lhs + &contracting_homotopy(&up).or_fail("h")?;
            }
            check!(lhs == comp.form, "homotopy identity fails on {}", comp.form);
            pieces += 1;
        }
        let (nf, xi) = normal_form_with_witness(&a).or_fail("nf")?;
        check!(&a - &nf == xi.ext_d().or_fail("d")?, "witness does not certify nf of {a}");
        check!(normal_form_mod_exact(&nf).or_fail("nf")? == nf, "nf not idempotent on {a}");
        let b = common::form(&mut rng, &k, n - 1, 3);
        check!(normal_form_mod_exact(&b.ext_d().or_fail("d")?).or_fail("nf")?.is_zero(), "nf(d({b})) != 0");
    }
    Ok(format!("100 instances, {pieces} theta pieces"))
}

fn symbols_in_nu() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(103);
    for round in 0..200 {
        let n = 1 + round % 3;
        let p = [2, 3][rng.gen_range(0..2)];
        let k = PBaseField::new(p, rng.gen_range(n..=3)).or_fail("field")?;
        let mut sigma = MilnorSymbolSum::new(n);
        for _ in 0..rng.gen_range(1..=3) {
            let entries = (0..n).map(|_| common::nonzero_ratfunc(&mut rng, &k, 2)).collect();
            sigma.push(rng.gen_range(1..p), entries).or_fail("symbol")?;
        }
        check!(verify_in_nu(&k, &sigma).or_fail("nu")?, "symbol sum {sigma:?} not in nu");
    }
    let mut steinberg = 0;
    while steinberg < 100 {
        let k = PBaseField::new([2, 3][rng.gen_range(0..2)], 2).or_fail("field")?;
        let a = common::nonzero_ratfunc(&mut rng, &k, 3);
        let b = &k.one() - &a;
        if b.is_zero() {
            continue;
        }
        let w = d_k(&k, &MilnorSymbolSum::single(vec![a.clone(), b])).or_fail("d_k")?;
        check!(w.is_zero(), "d_k{{a, 1-a}} = {w} for a = {a}");
        steinberg += 1;
    }
    Ok("200 sums, 100 Steinberg".into())
}

fn cartier_roundtrip() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(104);
    for p in [2, 3] {
        let k = PBaseField::new(p, 1).or_fail("field")?;
        let irr = monic_irreducibles(k.field(), 3);
        for _ in 0..100 {
            let mut x = k.constant(rng.gen_range(1..p as i64));
            for _ in 0..rng.gen_range(1..=4) {
                let q = RatFunc::from_poly(irr[rng.gen_range(0..irr.len())].clone());
                let e = rng.gen_range(1..p as i64) * if rng.gen_bool(0.3) { -1 } else { 1 };
                x = &x * &q.pow(e).or_fail("pow")?;
            }
            let w = dlog(&x).or_fail("dlog")?;
            let y = dlog_inverse_n1(&w).or_fail("inverse")?;
            check!(dlog(&y).or_fail("dlog")? == w, "dlog(dlog^-1({w})) differs");
        }
    }
    Ok("100 over F_2(t), 100 over F_3(t)".into())
}

/// Every product of distinct small irreducibles whose dlog is `w`.
fn dlog_search(k: &PBaseField, w: &DiffForm, irr: &[RatFunc]) -> Result<Vec<RatFunc>, String> {
    let mut hits = Vec::new();
    for mask in 0u32..1 << irr.len() {
        let x = (0..irr.len()).filter(|i| mask >> i & 1 == 1).fold(k.one(), |acc, i| &acc * &irr[i]);
        if dlog(&x).or_fail("dlog")? == *w {
            hits.push(x);
        }
    }
    Ok(hits)
}

fn kato() -> Outcome {
    let mut summary = Vec::new();
    for (m, n, d) in [(1, 1, 3), (2, 1, 2), (2, 2, 2)] {
        let k = PBaseField::new(2, m).or_fail("field")?;
        let basis = nu_basis_bounded(&k, n, &TruncationSpec::standard(&k, d)).or_fail("nu basis")?;
        let irr: Vec<RatFunc> = monic_irreducibles(k.field(), d as usize).into_iter().map(RatFunc::from_poly).collect();
        for w in &basis {
            let r = kato_decompose(&k, w).or_fail("decompose")?;
            check!(r.residual.is_zero(), "nonzero residual for {w}");
            check!(d_k(&k, &r.symbols).or_fail("d_k")? == *w, "d_k image differs for {w}");
            if m == 1 {
                let hits = dlog_search(&k, w, &irr)?;
                check!(hits.len() == 1, "search oracle found {} preimages of {w}", hits.len());
                let one = MilnorSymbolSum::single(vec![hits[0].clone()]);
                check!(d_k(&k, &one).or_fail("d_k")? == d_k(&k, &r.symbols).or_fail("d_k")?, "oracle disagrees on {w}");
            }
        }
        summary.push(format!("({m},{n},{d}):{}", basis.len()));
    }
    Ok(summary.join(" "))
}

fn witt() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(107);
    for p in [2u32, 3] {
        for len in 1..=3 {
            let ring = WittRing::new(p, len).or_fail("ring")?;
            let w = ring.polynomials();
            let lift = |v: &[u32]| v.iter().map(|x| *x as i128).collect::<Vec<_>>();
            for _ in 0..100 {
                let a = ring.element(rng.gen_range(0..ring.size()));
                let b = ring.element(rng.gen_range(0..ring.size()));
                let ga = w.ghost(&lift(&a.components)).or_fail("ghost")?;
                let gb = w.ghost(&lift(&b.components)).or_fail("ghost")?;
                let gs = w.ghost(&lift(&ring.add(&a, &b).or_fail("add")?.components)).or_fail("ghost")?;
                let gp = w.ghost(&lift(&ring.mul(&a, &b).or_fail("mul")?.components)).or_fail("ghost")?;
                for n in 0..len {
                    let modulus = (p as i128).pow(n as u32 + 1);
                    check!((gs[n] - ga[n] - gb[n]).rem_euclid(modulus) == 0, "ghost sum p={p} len={len} {a:?} {b:?}");
                    check!((gp[n] - ga[n] * gb[n]).rem_euclid(modulus) == 0, "ghost product p={p} len={len} {a:?} {b:?}");
                }
                let fv = ring.frobenius(&ring.verschiebung(&a).or_fail("V")?).or_fail("F")?;
                check!(fv == ring.mul_int(&a, p as u64).or_fail("mul")?, "FV != p on {a:?}");
            }
            let order = ring.additive_order(&ring.one()).or_fail("order")?;
            check!(order == (p as u64).pow(len as u32), "order of 1 in W_{len}(F_{p}) is {order}");
        }
    }
    Ok("p in {2,3}, length <= 3".into())
}

fn hsym() -> Outcome {
    for (q, i, want) in [(2, 1, vec![2]), (4, 1, vec![2]), (4, 2, vec![4])] {
        let g = hsym_group(q, i, 1).or_fail("hsym")?;
        check!(g.invariant_factors == want && g.free_rank == 0, "hsym({q},{i},1) = {g:?}");
        let (order, exponent) = artin_schreier_witt_cokernel(q, i).or_fail("cokernel")?;
        check!(g.order() == Some(order as u128) && g.exponent() == exponent, "cokernel oracle disagrees for ({q},{i})");
    }
    let g = hsym_group(2, 1, 2).or_fail("hsym")?;
    check!(g.is_trivial(), "hsym(2,1,2) = {g:?}");
    let first = hsym_group(4, 1, 2).or_fail("hsym")?;
    let second = hsym_group(4, 1, 2).or_fail("hsym")?;
    check!(first == second, "hsym(4,1,2) unstable: {first:?} vs {second:?}");
    check!(first.is_trivial(), "hsym(4,1,2) = {first:?}, recorded value is trivial");
    Ok(format!("hsym(4,1,2) = {:?}", first.invariant_factors))
}

/// A random element of the bounded coefficient space.
fn bounded_element(rng: &mut ChaCha8Rng, basis: &[RatFunc]) -> RatFunc {
    basis.iter().filter(|_| rng.gen_bool(0.3)).fold(RatFunc::zero(basis[0].num().field(), 1), |acc, b| &acc + b)
}

fn zero_in_quotient(form: &DiffForm) -> Result<bool, String> {
    let (nf, xi) = normal_form_with_witness(form).or_fail("nf")?;
    Ok(nf.is_zero() && xi.ext_d().or_fail("d")? == *form)
}

fn cokernel_probe() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(109);
    let k = PBaseField::new(2, 1).or_fail("field")?;
    let spec = TruncationSpec::standard(&k, 3);
    let basis = spec.basis(&k).or_fail("basis")?;
    let nonzero = |rng: &mut ChaCha8Rng| loop {
        let x = bounded_element(rng, &basis);
        if !x.is_zero() {
            return x;
        }
    };
    let mut counts = [0; 4];
    for round in 0..50 {
        let kind = round % 4;
        counts[kind] += 1;
        let a = bounded_element(&mut rng, &basis);
        let sym = |x: &RatFunc, b: &RatFunc| -> Result<DiffForm, String> { Ok(dlog(b).or_fail("dlog")?.scale(x)) };
        match kind {
            0 => {
                // [a^p - a] in degree zero
                let g = &a.pow(2).or_fail("pow")? - &a;
                let x = solve_artin_schreier_bounded(&k, &g, &spec).or_fail("solve")?;
                let Some(x) = x else { return Err(format!("no bounded solution for {g}")) };
                check!(&x.pow(2).or_fail("pow")? - &x == g, "claimed solution {x} of x^2 - x = {g} is wrong");
            }
            1 => {
                // [a^p - a, b]: a^p dlog b - F(a dlog b) is exact
                let b = nonzero(&mut rng);
                let g = &a.pow(2).or_fail("pow")? - &a;
                let y = sym(&a, &b)?;
                let rel = &sym(&g, &b)? - &(&y.inverse_cartier() - &y);
                check!(zero_in_quotient(&rel)?, "AS relation survives for a = {a}, b = {b}");
            }
            2 => {
                // [a, b b'] - [a, b] - [a, b'] and [a + a', b] - [a, b] - [a', b]
                let (b, c, a2) = (nonzero(&mut rng), nonzero(&mut rng), bounded_element(&mut rng, &basis));
                let rel = &(&sym(&a, &(&b * &c))? - &sym(&a, &b)?) - &sym(&a, &c)?;
                check!(zero_in_quotient(&rel)?, "multiplicativity survives");
                let rel = &(&sym(&(&a + &a2), &b)? - &sym(&a, &b)?) - &sym(&a2, &b)?;
                check!(zero_in_quotient(&rel)?, "additivity survives");
            }
            _ => {
                // [a, a] with a in the Teichmuller slot
                let a = nonzero(&mut rng);
                check!(zero_in_quotient(&sym(&a, &a)?)?, "[a, a] survives for a = {a}");
            }
        }
    }
    Ok(format!("AS n=1: {}, AS n=2: {}, additive: {}, teichmuller: {}", counts[0], counts[1], counts[2], counts[3]))
}

fn automorphism_invariance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(110);
    let mut members = 0;
    for _ in 0..50 {
        let k = common::field(&mut rng, &[2, 3], 2);
        let n = rng.gen_range(1..=k.m());
        let a = if rng.gen_bool(0.5) {
            let entries = (0..n).map(|_| common::nonzero_ratfunc(&mut rng, &k, 2)).collect();
            d_k(&k, &MilnorSymbolSum::single(entries)).or_fail("d_k")?
        } else {
            common::form(&mut rng, &k, n, 2)
        };
        let ident: Vec<RatFunc> = (0..k.m()).map(|i| k.var(i)).collect();
        let mut maps = vec![ident.clone(), ident.clone()];
        maps[0][0] = &k.var(0) + &k.one();
        maps[1][0] = k.var(0).inv().or_fail("inv")?;
        if k.m() == 2 {
            maps.push(vec![k.var(1), k.var(0)]);
        }
        let before = nu_membership(&a).or_fail("nu")?;
        members += before as usize;
        for sigma in &maps {
            let after = nu_membership(&apply_endomorphism(&a, sigma).or_fail("apply")?).or_fail("nu")?;
            check!(after == before, "membership of {a} changes under {sigma:?}");
        }
    }
    Ok(format!("50 forms, {members} in nu"))
}

fn main() -> ExitCode {
    let criteria: [(&str, u64, fn() -> Outcome); 10] = [
        ("presentation equivalence", 10, presentation_equivalence),
        ("d o d = 0", 5, d_squared),
        ("theta homotopy and normal form", 10, theta_machinery),
        ("symbols land in nu, Steinberg", 10, symbols_in_nu),
        ("dlog inverse round trip", 10, cartier_roundtrip),
        ("Kato decomposition", 60, kato),
        ("Witt vectors", 10, witt),
        ("symbol groups over finite fields", 30, hsym),
        ("bounded cokernel probe", 20, cokernel_probe),
        ("automorphism invariance of nu", 10, automorphism_invariance),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let verdict = match &outcome {
            Ok(_) if took > Duration::from_secs(limit) => Err(format!("exceeded {limit}s")),
            Ok(info) => Ok(info.clone()),
            Err(e) => Err(e.clone()),
        };
        match verdict {
            Ok(info) => println!("PASS {:>2} {name} ({:.2}s): {info}", i + 1, took.as_secs_f64()),
            Err(e) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({:.2}s): {e}", i + 1, took.as_secs_f64());
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
