//! One PASS/FAIL line per acceptance criterion.

use std::time::Instant;

use rand::Rng;
use sturmian_lab::cf::{min_spectrum, CFExpansion, MinSpectrum, QuadraticNumber};
use sturmian_lab::chain::{chain_of, rep_exact_periodic_golden, required_len, synthesize, Case, Chain, GoldenChain};
use sturmian_lab::lab::{
    self, estimate_chain, estimate_golden, gap_scan, golden_depth, min_spectrum_check, mu4_family, mu4_family_chain,
    random_chain, random_golden_chain, random_slope, subject_rng, verify_lambda, GapScanConfig,
};
use sturmian_lab::rep::{r_oracle_profile, r_profile, DEFAULT_TAIL};
use sturmian_lab::words::{FiniteWord, Rounding, StandardWordTable, WordStream};

const SEED: u64 = 20_240_601;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn random_rho(rng: &mut impl Rng) -> QuadraticNumber {
    let den: i64 = rng.gen_range(2..50);
    QuadraticNumber::from_ratio(&num_rational::BigRational::new(
        rng.gen_range(0..den).into(),
        den.into(),
    ))
}

/// Slopes with quotients ≤ 4 and q_levels ≤ budget.
fn mixed_subject(i: u64, rng: &mut impl Rng, letters: usize, levels: usize, budget: u64) -> WordStream {
    let cf = random_slope(rng, 4, levels, budget).expect("slope");
    match i % 3 {
        0 => WordStream::mechanical(cf.value().unwrap(), random_rho(rng), Rounding::Floor).unwrap(),
        1 => WordStream::characteristic(cf),
        _ => {
            let mut levels = 4;
            loop {
                let chain = random_chain(&cf, levels, rng).unwrap();
                if synthesize(&cf, &chain, letters).is_ok() {
                    return WordStream::from_chain(cf, chain);
                }
                levels += 1;
            }
        }
    }
}

fn c1() -> Outcome {
    let n = 2000;
    let mut bad = 0;
    for i in 0..50u64 {
        let mut rng = subject_rng(SEED, i);
        let mut s = mixed_subject(i, &mut rng, 2 * n + 2, 15, 500_000);
        let prof = r_profile(&mut s, n).unwrap();
        let oracle = r_oracle_profile(s.prefix(2 * n + 2).unwrap(), n);
        bad += (1..=n).filter(|&k| oracle[k] != Some(prof.r[k])).count();
    }
    outcome(bad == 0, format!("50 subjects, n <= 2000, {bad} disagreements"))
}

fn c2() -> Outcome {
    let n = 5000;
    let mut worst_eq = usize::MAX;
    let mut over = 0;
    for i in 0..20u64 {
        let mut rng = subject_rng(SEED + 2, i);
        // at least 12 levels below the horizon
        let mut s = mixed_subject(i, &mut rng, 2 * n + 2, 12, n as u64);
        let prof = r_profile(&mut s, n).unwrap();
        over += (1..=n).filter(|&k| prof.r[k] > 2 * k + 1).count();
        worst_eq = worst_eq.min(prof.lambda.len());
    }
    let mut periodic_bad = 0;
    for i in 0..5u64 {
        let mut rng = subject_rng(SEED + 3, i);
        let head: Vec<u8> = (0..rng.gen_range(0..20)).map(|_| rng.gen_range(0..2)).collect();
        let period: Vec<u8> = (0..rng.gen_range(1..12)).map(|_| rng.gen_range(0..2)).collect();
        let mut s =
            WordStream::eventually_periodic(FiniteWord::new(head).unwrap(), FiniteWord::new(period).unwrap()).unwrap();
        let prof = r_profile(&mut s, n).unwrap();
        periodic_bad += (100..=n).filter(|&k| prof.r[k] > 2 * k).count();
    }
    outcome(
        over == 0 && worst_eq >= 10 && periodic_bad == 0,
        format!(
            "20 Sturmian: {over} n with r(n) > 2n+1, min #equalities {worst_eq}; 5 periodic: {periodic_bad} n >= 100 with r(n) > 2n"
        ),
    )
}

fn c3() -> Outcome {
    let golden = CFExpansion::golden();
    let mut mism = 0;
    let mut errors = Vec::new();
    for i in 0..100u64 {
        let mut rng = subject_rng(SEED + 4, i);
        let lead = rng.gen_bool(0.25);
        let g = random_golden_chain(&mut rng, 24, lead);
        let mut s = WordStream::from_chain(golden.clone(), g.chain(24).unwrap());
        match verify_lambda(&mut s, &golden, 16) {
            Ok(d) => mism += d.mismatches(),
            Err(e) => errors.push(format!("{g}: {e}")),
        }
    }
    for i in 0..50u64 {
        let mut rng = subject_rng(SEED + 5, i);
        let cf = random_slope(&mut rng, 4, 15, 500_000).unwrap();
        let mut s = if i % 2 == 0 {
            WordStream::mechanical(cf.value().unwrap(), random_rho(&mut rng), Rounding::Floor).unwrap()
        } else {
            WordStream::from_chain(cf.clone(), random_chain(&cf, 17, &mut rng).unwrap())
        };
        match verify_lambda(&mut s, &cf, 14) {
            Ok(d) => mism += d.mismatches(),
            Err(e) => errors.push(format!("{cf}: {e}")),
        }
    }
    outcome(
        mism == 0 && errors.is_empty(),
        format!(
            "100 golden (K=16) + 50 general (K=14): {mism} mismatches, {} errors {:?}",
            errors.len(),
            errors.first()
        ),
    )
}

fn c4() -> Outcome {
    let cases = [("(b)", lab::mu_max()), ("(ab)", lab::mu2()), ("(b2a2)", lab::mu3())];
    let mut ok = true;
    let mut parts = Vec::new();
    for (lit, want) in cases {
        let g: GoldenChain = lit.parse().unwrap();
        let exact = rep_exact_periodic_golden(&g).unwrap().value;
        let (est, _) = estimate_golden(&g, golden_depth(&g, 40), DEFAULT_TAIL).unwrap();
        let err = (est.to_f64() - want.to_f64()).abs();
        ok &= exact == want && err < 1e-4;
        parts.push(format!(
            "{lit}: exact {} est {} (err {err:.1e})",
            exact.to_decimal(6),
            est.decimal
        ));
    }
    outcome(ok, parts.join("; "))
}

fn c5() -> Outcome {
    let mu4 = lab::mu4().to_f64();
    let mut ok = true;
    let mut prev_gap = f64::INFINITY;
    let mut parts = Vec::new();
    let mut last = 0.0;
    for d in 1..=6 {
        let g = mu4_family_chain(d);
        let closed = mu4_family(d);
        let exact = rep_exact_periodic_golden(&g).unwrap().value;
        let (est, _) = estimate_golden(&g, golden_depth(&g, 40), DEFAULT_TAIL).unwrap();
        let num_err = (est.to_f64() - closed.to_f64()).abs();
        let gap = (closed.to_f64() - mu4).abs();
        ok &= (exact.to_f64() - closed.to_f64()).abs() < 1e-6 && num_err < 1e-4 && gap < prev_gap;
        prev_gap = gap;
        last = closed.to_f64();
        parts.push(format!("d={d} {:.10} (est err {num_err:.1e})", closed.to_f64()));
    }
    ok &= (last - 1.434706).abs() < 2e-3;
    outcome(
        ok,
        format!("distance to mu_4 strictly decreasing; {}", parts.join(", ")),
    )
}

fn c6() -> Outcome {
    let cfg = GapScanConfig {
        seed: SEED,
        count: 500,
        depth: 40,
        ..Default::default()
    };
    let rep = gap_scan(&cfg);
    let lo = rep
        .records
        .iter()
        .filter_map(|r| r.estimate_f64())
        .fold(f64::INFINITY, f64::min);
    let hi = rep.records.iter().filter_map(|r| r.estimate_f64()).fold(0.0, f64::max);
    outcome(
        rep.violations.is_empty() && rep.failures.is_empty() && rep.records.len() == 500,
        format!(
            "500 chains at depth 40: {} violations, {} failures, estimates in [{lo:.6}, {hi:.6}]",
            rep.violations.len(),
            rep.failures.len()
        ),
    )
}

fn c7() -> Outcome {
    let phi = QuadraticNumber::phi();
    let golden = min_spectrum(&CFExpansion::golden()).unwrap();
    let g_ok = golden
        == MinSpectrum::Exact {
            value: QuadraticNumber::one() + &phi * &phi,
        };
    let silver: CFExpansion = "[0;(2)]".parse().unwrap();
    let want = QuadraticNumber::one()
        + (QuadraticNumber::from(2) + QuadraticNumber::sqrt(2).unwrap())
            .recip()
            .unwrap();
    let s_ok = min_spectrum(&silver).unwrap() == MinSpectrum::Exact { value: want.clone() };
    let numeric = (30..=60)
        .map(|k| sturmian_lab::rational_to_f64(&silver.mirror_value(k).unwrap()))
        .fold(f64::INFINITY, f64::min);
    let n_err = (numeric - want.to_f64()).abs();
    let rep = min_spectrum_check(&CFExpansion::golden(), 0, 40, SEED, DEFAULT_TAIL, 1e-6).unwrap();
    let c_err = rep.construction_error();
    outcome(
        g_ok && s_ok && n_err < 1e-9 && c_err < 5e-3,
        format!(
            "phi -> {}, [0;(2)] -> {} (mirror liminf err {n_err:.1e}), construction chain {:.6} (err {c_err:.1e})",
            golden.to_f64(),
            want.to_decimal(6),
            rep.construction_estimate
        ),
    )
}

fn c8() -> Outcome {
    let cf: CFExpansion = "[0;(2,1,1)]".parse().unwrap();
    let target = lab::r_max().to_f64();
    let all_ii = Chain::new(vec![Case::II; 40]);
    let (est, _) = estimate_chain(&cf, &all_ii, DEFAULT_TAIL).unwrap();
    let err = (est.to_f64() - target).abs();
    let table = StandardWordTable::build(&cf, 14).unwrap();
    let mut s = WordStream::characteristic(cf.clone());
    let x = s.prefix(required_len(&table, 14)).unwrap().to_vec();
    let (c_chain, _) = chain_of(&x, &table, 14).unwrap();
    let c_est = estimate_chain(
        &cf,
        &sturmian_lab::chain::characteristic_chain(&cf, 40).unwrap(),
        DEFAULT_TAIL,
    )
    .unwrap()
    .0;
    outcome(
        err < 1e-4,
        format!(
            "attained by the word whose chain is (ii) throughout: {} at depth 40 (err {err:.1e}); \
             NOT by the characteristic word (chain {}...), which gives {}",
            est.decimal,
            &c_chain.to_string()[..24],
            c_est.decimal
        ),
    )
}

fn c9() -> Outcome {
    let golden = CFExpansion::golden();
    let table = StandardWordTable::build(&golden, 20).unwrap();
    let need = required_len(&table, 20);
    let mut bad = 0;
    for i in 0..200u64 {
        let mut rng = subject_rng(SEED + 9, i);
        let lead = rng.gen_bool(0.25);
        let g = random_golden_chain(&mut rng, 26, lead);
        let chain = g.chain(26).unwrap();
        let x = synthesize(&golden, &chain, need).unwrap();
        match chain_of(&x, &table, 20) {
            Ok((back, _)) if back == chain.truncated(20) => {}
            _ => bad += 1,
        }
    }
    outcome(bad == 0, format!("200 chains through level 20: {bad} failures"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("oracle equivalence", c1),
        ("Sturmian bounds", c2),
        ("Lambda prediction", c3),
        ("mu endpoints", c4),
        ("mu_4 family", c5),
        ("gap emptiness", c6),
        ("min spectrum", c7),
        ("r_max attainment", c8),
        ("round trip", c9),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let id = (i + 1).to_string();
        if !filter.is_empty() && !filter.contains(&id) {
            continue;
        }
        let t = Instant::now();
        let o = f();
        let verdict = if o.pass { "PASS" } else { "FAIL" };
        failed += !o.pass as usize;
        println!(
            "criterion {id} ({name}): {verdict} [{:.1}s] {}",
            t.elapsed().as_secs_f64(),
            o.detail
        );
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
