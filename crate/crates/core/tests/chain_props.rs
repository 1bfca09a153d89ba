use proptest::prelude::*;
use rand::Rng;
use sturmian_lab::cf::{CFExpansion, QuadraticNumber};
use sturmian_lab::chain::{
    chain_of, level_candidates, rep_exact_periodic_golden, required_len, states_from_chain, synthesize,
    synthesize_level, Case, GoldenChain, Letter,
};
use sturmian_lab::lab::{estimate_golden, random_chain, random_slope, subject_rng, verify_lambda};
use sturmian_lab::rep::DEFAULT_TAIL;
use sturmian_lab::words::{Rounding, StandardWordTable, WordStream};

fn golden_letters(max: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec(prop_oneof![Just(Letter::A), Just(Letter::B)], 1..max)
}

fn budget_slope(seed: u64) -> CFExpansion {
    random_slope(&mut subject_rng(seed, 0), 4, 14, 200_000).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn golden_round_trip(prefix in golden_letters(14), lead in any::<bool>()) {
        let cf = CFExpansion::golden();
        let table = StandardWordTable::build(&cf, 40).unwrap();
        let g = GoldenChain { leading_iii: lead, prefix, period: Vec::new() };
        let levels = g.preperiod_levels();
        let chain = g.chain(levels).unwrap();
        let len = synthesize_level(&cf, &chain, levels).unwrap().letters().len();
        let w = synthesize(&cf, &chain, len).unwrap();
        let k = (1..=levels).rev().find(|&k| required_len(&table, k) <= len);
        prop_assume!(k.is_some());
        let k = k.unwrap();
        let (back, _) = chain_of(w.letters(), &table, k).unwrap();
        prop_assert_eq!(&back.cases[..], &chain.cases[..k]);
        let again = synthesize_level(&cf, &back, k).unwrap();
        prop_assert_eq!(again.letters(), &w.letters()[..again.letters().len()]);
    }

    #[test]
    fn classification_is_unique(seed in any::<u64>(), rho_num in 0i64..97) {
        let cf = budget_slope(seed);
        let rho = QuadraticNumber::from_ratio(&num_rational::BigRational::new(rho_num.into(), 97.into()));
        let mut s = WordStream::mechanical(cf.value().unwrap(), rho, Rounding::Floor).unwrap();
        let table = StandardWordTable::build(&cf, 10).unwrap();
        let x = s.prefix(required_len(&table, 8)).unwrap().to_vec();
        for k in 1..=8 {
            let c = level_candidates(&x, &table, k).unwrap();
            prop_assert_eq!(c.len(), 1, "level {}: {:?}", k, c);
        }
    }

    #[test]
    fn transitions_are_sound(seed in any::<u64>()) {
        let cf = budget_slope(seed);
        let mut rng = subject_rng(seed, 1);
        let chain = random_chain(&cf, 12, &mut rng).unwrap();
        let states = states_from_chain(&cf, &chain).unwrap();
        let q = cf.denominators(14).unwrap();
        for w in states.windows(2) {
            let (s, t) = (&w[0], &w[1]);
            prop_assert_eq!(&t.q_km1, &s.q_k);
            prop_assert!(t.w_len >= 1u32.into());
            match (s.case, t.case) {
                (Case::I, Case::III) | (Case::III, Case::I) | (Case::III, Case::II) => {}
                (Case::I, _) => prop_assert!(s.t.is_some()),
                (Case::II, Case::III) | (Case::III, Case::III) => {
                    return Err(TestCaseError::fail(format!("forbidden step at level {}", s.k)));
                }
                _ => {}
            }
            prop_assert!(t.w_len <= q[t.k].clone() + &q[t.k - 1]);
        }
        let w = synthesize(&cf, &chain, 50).or_else(|_| synthesize(&cf, &chain, 10));
        prop_assert!(w.is_ok());
    }

    #[test]
    fn lambda_agrees_on_general_slopes(seed in any::<u64>(), levels in 2usize..12, mech in any::<bool>()) {
        let cf = budget_slope(seed);
        let mut rng = subject_rng(seed, 2);
        let mut s = if mech {
            let rho = QuadraticNumber::from_ratio(&num_rational::BigRational::new(rng.gen_range(0..61).into(), 61.into()));
            WordStream::mechanical(cf.value().unwrap(), rho, Rounding::Floor).unwrap()
        } else {
            WordStream::from_chain(cf.clone(), random_chain(&cf, levels + 3, &mut rng).unwrap())
        };
        let d = verify_lambda(&mut s, &cf, levels).unwrap();
        prop_assert_eq!(d.mismatches(), 0, "{:?}", d);
    }

    #[test]
    fn lambda_agrees_on_golden_chains(prefix in golden_letters(18), period in golden_letters(5), lead in any::<bool>()) {
        let g = GoldenChain { leading_iii: lead, prefix, period };
        let cf = CFExpansion::golden();
        let mut s = WordStream::from_chain(cf.clone(), g.chain(20).unwrap());
        let d = verify_lambda(&mut s, &cf, 18).unwrap();
        prop_assert_eq!(d.mismatches(), 0, "{:?}", d);
    }
}

#[test]
fn exact_minus_estimate_shrinks_with_depth() {
    for lit in ["(ab)", "(b2a2)", "b(aab)", "((b2a2)2ba)"] {
        let g: GoldenChain = lit.parse().unwrap();
        let exact = rep_exact_periodic_golden(&g).unwrap().to_f64();
        let err = |depth| (estimate_golden(&g, depth, DEFAULT_TAIL).unwrap().0.to_f64() - exact).abs();
        let base = g.preperiod_levels() + 4 * g.period_levels();
        let (e1, e2, e3) = (err(base), err(base + 20), err(base + 40));
        assert!(e1 >= e2 && e2 >= e3, "{lit}: {e1} {e2} {e3}");
        assert!(e3 < 1e-5, "{lit}: {e3}");
    }
}

#[test]
fn growing_a_blocks_approach_the_minimum() {
    // b a b a² b a³ …: estimates decrease toward 1 + φ²
    let min = 1.381966;
    let mut last = f64::INFINITY;
    for blocks in [4usize, 6, 8] {
        let mut prefix = Vec::new();
        for j in 1..=blocks {
            prefix.push(Letter::B);
            prefix.extend(std::iter::repeat_n(Letter::A, j));
        }
        let g = GoldenChain {
            leading_iii: false,
            prefix,
            period: Vec::new(),
        };
        let depth = g.preperiod_levels();
        let e = estimate_golden(&g, depth, DEFAULT_TAIL).unwrap().0.to_f64();
        assert!(e >= min - 1e-6, "{e}");
        assert!(e < last, "{e} after {last}");
        last = e;
    }
    assert!(last - min < 0.02, "{last}");
}
