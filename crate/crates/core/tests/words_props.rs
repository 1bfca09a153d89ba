use proptest::prelude::*;
use sturmian_lab::cf::{CFExpansion, QuadraticNumber};
use sturmian_lab::words::{
    characteristic_prefix, mechanical_prefix, subword_complexity, Rounding, StandardWordTable, WordStream,
};

fn periodic_cf() -> impl Strategy<Value = CFExpansion> {
    (
        prop::collection::vec(1u64..=4, 0..3),
        prop::collection::vec(1u64..=4, 1..4),
    )
        .prop_map(|(pre, period)| CFExpansion::periodic(0, pre, period).unwrap())
}

fn rho() -> impl Strategy<Value = QuadraticNumber> {
    (0i64..40, 1i64..40)
        .prop_map(|(a, c)| QuadraticNumber::from_ratio(&num_rational::BigRational::new((a % c).into(), c.into())))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn standard_lengths_are_denominators(cf in periodic_cf()) {
        let t = StandardWordTable::build(&cf, 12).unwrap();
        let q = cf.denominators(12).unwrap();
        for k in 0..=12 {
            prop_assert_eq!(num_bigint::BigUint::from(t.m(k).len()), q[k].clone());
        }
    }

    #[test]
    fn near_commutation(cf in periodic_cf()) {
        let t = StandardWordTable::build(&cf, 10).unwrap();
        for k in 1..=10 {
            let a = [t.m(k), t.m(k - 1)].concat();
            let b = [t.m(k - 1), t.m(k)].concat();
            let n = a.len();
            prop_assert_eq!(&a[..n - 2], &b[..n - 2]);
            let mut tails = [a[n - 2..].to_vec(), b[n - 2..].to_vec()];
            tails.sort();
            prop_assert_eq!(tails, [vec![0, 1], vec![1, 0]]);
        }
    }

    #[test]
    fn two_constructions_of_characteristic(cf in periodic_cf(), len in 1usize..400) {
        let theta = cf.value().unwrap();
        let m = mechanical_prefix(&theta, &QuadraticNumber::zero(), Rounding::Floor, len).unwrap();
        let c = characteristic_prefix(&cf, len).unwrap();
        prop_assert_eq!(m.letters(), c.letters());
    }

    #[test]
    fn complexity_is_n_plus_one(cf in periodic_cf(), r in rho(), ceil in any::<bool>(), n in 1usize..40) {
        let rounding = if ceil { Rounding::Ceil } else { Rounding::Floor };
        let mut s = WordStream::mechanical(cf.value().unwrap(), r, rounding).unwrap();
        // 4n letters do not always expose every factor for large quotients
        let q8 = usize::try_from(&cf.denominators(8).unwrap()[8]).unwrap();
        let len = 4 * n + 8 * q8.min(200);
        prop_assert_eq!(subword_complexity(s.prefix(len).unwrap(), n).unwrap(), n + 1);
    }

    #[test]
    fn floor_and_ceil_agree_off_integers(cf in periodic_cf(), len in 1usize..200) {
        // with an irrational slope and rational ρ ≠ 0 the two roundings agree
        let theta = cf.value().unwrap();
        let rho = QuadraticNumber::from_ratio(&num_rational::BigRational::new(1.into(), 3.into()));
        let f = mechanical_prefix(&theta, &rho, Rounding::Floor, len).unwrap();
        let c = mechanical_prefix(&theta, &rho, Rounding::Ceil, len).unwrap();
        prop_assert_eq!(f.letters(), c.letters());
    }
}

#[test]
fn fibonacci_word() {
    let c = characteristic_prefix(&CFExpansion::golden(), 13).unwrap();
    assert_eq!(c.to_ascii(), "1011010110110");
    let complexity = subword_complexity(
        characteristic_prefix(&CFExpansion::golden(), 400).unwrap().letters(),
        100,
    )
    .unwrap();
    assert_eq!(complexity, 101);
}
