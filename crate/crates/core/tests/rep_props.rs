use proptest::prelude::*;
use sturmian_lab::cf::{CFExpansion, QuadraticNumber};
use sturmian_lab::chain::{Case, Chain};
use sturmian_lab::rep::{
    longest_repeated_suffix, r_naive, r_oracle_profile, r_profile, r_profile_word, rep_estimate, PROFILE_TAIL,
};
use sturmian_lab::words::{FiniteWord, Rounding, WordStream};

fn periodic_cf() -> impl Strategy<Value = CFExpansion> {
    (
        prop::collection::vec(1u64..=4, 0..3),
        prop::collection::vec(1u64..=4, 1..4),
    )
        .prop_map(|(pre, period)| CFExpansion::periodic(0, pre, period).unwrap())
}

fn sturmian_stream() -> impl Strategy<Value = (CFExpansion, WordStream)> {
    (periodic_cf(), 0i64..30, 1i64..30, any::<bool>()).prop_map(|(cf, a, c, ceil)| {
        let rho = QuadraticNumber::from_ratio(&num_rational::BigRational::new((a % c).into(), c.into()));
        let rounding = if ceil { Rounding::Ceil } else { Rounding::Floor };
        let s = WordStream::mechanical(cf.value().unwrap(), rho, rounding).unwrap();
        (cf, s)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn profile_matches_oracle((_cf, mut s) in sturmian_stream(), n in 1usize..120) {
        let p = r_profile(&mut s, n).unwrap();
        let w = s.prefix(p.prefix_len).unwrap().to_vec();
        let oracle = r_oracle_profile(&w, n);
        for m in 1..=n {
            prop_assert_eq!(Some(p.r[m]), oracle[m]);
            prop_assert_eq!(p.r[m], r_naive(&w, m).unwrap());
        }
    }

    #[test]
    fn word_profile_matches_oracle(w in prop::collection::vec(0u8..2, 1..200), n in 1usize..40) {
        prop_assert_eq!(r_profile_word(&w, n), r_oracle_profile(&w, n));
    }

    #[test]
    fn sturmian_bound_and_equality((cf, mut s) in sturmian_stream()) {
        let n = 400;
        let p = r_profile(&mut s, n).unwrap();
        for m in 1..=n {
            prop_assert!(p.r[m] <= 2 * m + 1);
            if m < n {
                prop_assert!(p.r[m + 1] > p.r[m]);
            }
        }
        let q: Vec<usize> = cf.denominators(20).unwrap().iter().map(|x| usize::try_from(x).unwrap()).collect();
        for k in 0..q.len() - 2 {
            if q[k + 2] > n {
                break;
            }
            prop_assert!((q[k]..=q[k + 2]).any(|m| p.r[m] == 2 * m + 1), "no equality in [{}, {}]", q[k], q[k + 2]);
        }
    }

    #[test]
    fn repeated_suffix_grows_by_at_most_one(w in prop::collection::vec(0u8..2, 1..300)) {
        let l = longest_repeated_suffix(&w);
        for m in 1..l.len() {
            prop_assert!(l[m] <= l[m - 1] + 1);
        }
    }

    #[test]
    fn prepending_does_not_change_rep(c in prop::collection::vec(0u8..2, 1..6)) {
        let est = |head: Vec<u8>, n: usize| {
            let tail = sturmian_lab::words::characteristic_prefix(&CFExpansion::golden(), 6 * n).unwrap();
            let w = FiniteWord::new([head, tail.into_letters()].concat()).unwrap();
            let mut s = WordStream::literal(w);
            rep_estimate(&r_profile(&mut s, n).unwrap(), PROFILE_TAIL).unwrap().to_f64()
        };
        let near = (est(c.clone(), 20_000) - est(Vec::new(), 20_000)).abs();
        let far = (est(c, 300) - est(Vec::new(), 300)).abs();
        prop_assert!(near < 2e-3, "{near}");
        prop_assert!(near <= far + 1e-3);
    }
}

#[test]
fn periodic_words_stay_below_two() {
    let mut s = WordStream::eventually_periodic(FiniteWord::new(vec![]).unwrap(), "01".parse().unwrap()).unwrap();
    let p = r_profile(&mut s, 100).unwrap();
    assert!((10..=100).all(|n| p.r[n] <= 2 * n));
    assert!(p.lambda.len() < 5);
}

#[test]
fn spectrum_values_from_profiles() {
    let check = |mut s: WordStream, expect: f64| {
        let e = rep_estimate(&r_profile(&mut s, 10_000).unwrap(), PROFILE_TAIL).unwrap();
        assert!((e.to_f64() - expect).abs() < 1e-3, "{} vs {expect}", e.decimal);
    };
    check(WordStream::characteristic(CFExpansion::golden()), 1.618034);
    let ab = "(ab)"
        .parse::<sturmian_lab::chain::GoldenChain>()
        .unwrap()
        .chain(26)
        .unwrap();
    check(WordStream::from_chain(CFExpansion::golden(), ab), 1.472136);
    let cf: CFExpansion = "[0;(2,1,1)]".parse().unwrap();
    let all_ii = Chain::new(vec![Case::II; 24]);
    check(WordStream::from_chain(cf, all_ii), 1.662278);
}
