use std::collections::BTreeMap;

use serde::Serialize;

use super::{lambda_forms, Case, GoldenChain, LambdaTag};
use crate::cf::QuadraticNumber;
use crate::error::{Error, Result};

/// Exact repetition exponent of an eventually periodic slope-φ chain.
#[derive(Clone, Debug, Serialize)]
pub struct RepExact {
    pub value: QuadraticNumber,
    /// Tags of the consecutive Λ elements realising the minimum.
    pub attained_at: (LambdaTag, LambdaTag),
}

impl RepExact {
    pub fn to_f64(&self) -> f64 {
        self.value.to_f64()
    }
}

/// `rep(x) = 1 + liminf λ_i / λ_{i+1}` over consecutive elements of Λ(x).
///
/// Along the period, `|W_k| / q_k` converges to a periodic orbit of the maps
/// `λ ↦ φλ` and `λ ↦ φ(λ + φ)`, and every Λ element is asymptotically
/// `q_k` times an element of Q(√5). The liminf is then a minimum over one
/// scale period, evaluated exactly.
pub fn rep_exact_periodic_golden(chain: &GoldenChain) -> Result<RepExact> {
    if !chain.is_periodic() {
        return Err(Error::NonPeriodic);
    }
    let phi = QuadraticNumber::phi();
    let big_phi = phi.recip()?;
    let s = chain.preperiod_levels() + 1;
    let p = chain.period_levels();
    let spans = 6;
    let levels = s - 1 + spans * p + 3;
    let cases = chain.cases(levels)?;

    // fixed point of the affine map over one period
    let step = |case: Case, a: &QuadraticNumber, b: &QuadraticNumber| {
        let bump = if case == Case::II {
            phi.clone()
        } else {
            QuadraticNumber::zero()
        };
        (&phi * a, &phi * &(b + &bump))
    };
    let (mut a, mut b) = (QuadraticNumber::one(), QuadraticNumber::zero());
    for k in s..s + p {
        (a, b) = step(cases[k - 1], &a, &b);
    }
    let mut lambda = vec![QuadraticNumber::zero(); levels + 2];
    lambda[s] = b.checked_div(&(QuadraticNumber::one() - a))?;
    for k in s..=levels {
        let bump = if cases[k - 1] == Case::II {
            phi.clone()
        } else {
            QuadraticNumber::zero()
        };
        lambda[k + 1] = &phi * &(&lambda[k] + &bump);
    }

    let plan = lambda_forms(&cases, &BTreeMap::new(), |_| 1, s)?;
    let mut scaled: Vec<(QuadraticNumber, LambdaTag)> = plan
        .elements
        .iter()
        .map(|e| {
            let mut v = QuadraticNumber::zero();
            for &(off, c) in &e.form.terms {
                let g = if off >= 0 {
                    big_phi.pow(off as u32)
                } else {
                    phi.pow((-off) as u32)
                };
                v = v + g * QuadraticNumber::from(c as i64);
            }
            if e.form.with_w {
                v = v + lambda[e.form.level].clone();
            }
            (v * big_phi.pow((e.form.level - s) as u32), e.tag)
        })
        .collect();
    scaled.sort_by(|x, y| x.0.cmp(&y.0));
    scaled.dedup_by(|later, earlier| later.0 == earlier.0);

    let lo = big_phi.pow(2 * p as u32);
    let hi = big_phi.pow(3 * p as u32);
    let mut best: Option<RepExact> = None;
    for pair in scaled.windows(2) {
        if pair[0].0 < lo || pair[0].0 >= hi {
            continue;
        }
        let r = QuadraticNumber::one() + pair[0].0.checked_div(&pair[1].0)?;
        if best.as_ref().is_none_or(|b| r < b.value) {
            best = Some(RepExact {
                value: r,
                attained_at: (pair[0].1, pair[1].1),
            });
        }
    }
    best.ok_or_else(|| Error::InsufficientData("no Λ elements in the scale window".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rep(lit: &str) -> QuadraticNumber {
        rep_exact_periodic_golden(&lit.parse().unwrap()).unwrap().value
    }

    #[test]
    fn extremes() {
        let mu_max = QuadraticNumber::one() + QuadraticNumber::phi();
        assert_eq!(rep("(b)"), mu_max);
        assert_eq!(rep("(a)"), mu_max);
        assert_eq!(rep("abba(b)"), mu_max);
    }

    #[test]
    fn second_and_third() {
        let phi = QuadraticNumber::phi();
        let one = QuadraticNumber::one();
        assert_eq!(rep("(ab)"), &one + &(phi.pow(3) * QuadraticNumber::from(2)));
        let mu3 =
            &one + &(phi.pow(2) * (phi.pow(4) + phi.pow(2) + one.clone()) / (phi.pow(5) + phi.pow(3) + one.clone()));
        assert_eq!(rep("(b2a2)"), mu3);
        assert_eq!(rep("(a2b2)"), mu3);
        assert_eq!(mu3.to_decimal(6), "1.440036");
    }

    #[test]
    fn rejects_finite() {
        assert!(matches!(
            rep_exact_periodic_golden(&"ab".parse().unwrap()),
            Err(Error::NonPeriodic)
        ));
    }
}
