use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use sturmian_lab::cf::{min_spectrum, quadratic_to_cf, CFExpansion, MinSpectrum, QuadraticNumber};

fn periodic_cf() -> impl Strategy<Value = CFExpansion> {
    (
        prop::collection::vec(1u64..=4, 0..3),
        prop::collection::vec(1u64..=4, 1..4),
    )
        .prop_map(|(pre, period)| CFExpansion::periodic(0, pre, period).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn convergent_recurrence(cf in periodic_cf()) {
        let c = cf.convergents(40).unwrap();
        for k in 1..=40usize {
            let a = BigInt::from(cf.quotient(k).unwrap());
            prop_assert_eq!(&c[k + 1].q, &(&a * &c[k].q + &c[k - 1].q));
            prop_assert_eq!(&c[k + 1].p, &(&a * &c[k].p + &c[k - 1].p));
        }
        let q = cf.denominators(40).unwrap();
        for k in 0..=40usize {
            prop_assert_eq!(BigInt::from(q[k].clone()), c[k + 1].q.clone());
        }
    }

    #[test]
    fn bracket_contains_value(cf in periodic_cf(), k in 1usize..30) {
        let x = cf.value().unwrap();
        let (lo, hi) = cf.eval_bracket(k).unwrap();
        prop_assert!(QuadraticNumber::from_ratio(&lo) < x);
        prop_assert!(x < QuadraticNumber::from_ratio(&hi));
    }

    #[test]
    fn quadratic_round_trip(cf in periodic_cf()) {
        let x = cf.value().unwrap();
        let back = quadratic_to_cf(&x).unwrap();
        prop_assert_eq!(back.quotient_vec(30).unwrap(), cf.quotient_vec(30).unwrap());
        prop_assert_eq!(back.value().unwrap(), x);
    }

    #[test]
    fn literal_round_trip(cf in periodic_cf()) {
        let s = cf.to_string();
        let back: CFExpansion = s.parse().unwrap();
        prop_assert_eq!(back.to_string(), s);
        prop_assert_eq!(back.quotient_vec(20).unwrap(), cf.quotient_vec(20).unwrap());
    }

    #[test]
    fn mirror_value_is_reversed_convergent_ratio(cf in periodic_cf(), k in 1usize..25) {
        // 1 + 1/[a_k + 1; a_{k-1}, ..., a_1] from the convergent recurrences of the reversed word
        let a = cf.quotient_vec(k).unwrap();
        let mut rev: Vec<u64> = a[1..=k].iter().rev().copied().collect();
        rev[0] += 1;
        let (mut p0, mut p1) = (BigInt::from(1), BigInt::from(rev[0]));
        let (mut q0, mut q1) = (BigInt::from(0), BigInt::from(1));
        for &ai in &rev[1..] {
            let np = BigInt::from(ai) * &p1 + &p0;
            let nq = BigInt::from(ai) * &q1 + &q0;
            (p0, p1, q0, q1) = (p1, np, q1, nq);
        }
        let expect = BigRational::from_integer(1.into()) + BigRational::new(q1, p1);
        prop_assert_eq!(cf.mirror_value(k).unwrap(), expect);
    }

    #[test]
    fn min_spectrum_is_limit_of_mirror_values(cf in periodic_cf()) {
        let MinSpectrum::Exact { value } = min_spectrum(&cf).unwrap() else {
            return Err(TestCaseError::fail("periodic input must give an exact value"));
        };
        let exact = value.to_f64();
        let m = (60..90).map(|k| sturmian_lab::rational_to_f64(&cf.mirror_value(k).unwrap()))
            .fold(f64::INFINITY, f64::min);
        prop_assert!((m - exact).abs() < 1e-9, "{m} vs {exact}");
    }
}

#[test]
fn rationals_are_rejected() {
    let half = QuadraticNumber::from_ratio(&BigRational::new(1.into(), 2.into()));
    assert!(quadratic_to_cf(&half).is_err());
}

#[test]
fn min_spectrum_known_values() {
    let v = |s: &str| min_spectrum(&s.parse().unwrap()).unwrap().to_f64();
    assert!((v("[0;(1)]") - 1.381966).abs() < 1e-6);
    assert!((v("[0;(2)]") - 1.292893).abs() < 1e-6);
}
