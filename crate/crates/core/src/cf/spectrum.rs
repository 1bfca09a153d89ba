use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::{CFExpansion, QuadraticNumber, Quotients};
use crate::error::{Error, Result};

/// Default level window for streamed expansions.
pub const DEFAULT_WINDOW: (usize, usize) = (10, 60);

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MinSpectrum {
    Exact {
        value: QuadraticNumber,
    },
    Estimate {
        #[serde(serialize_with = "crate::serde_util::rational_str")]
        value: BigRational,
        window: (usize, usize),
    },
}

impl MinSpectrum {
    pub fn to_f64(&self) -> f64 {
        match self {
            MinSpectrum::Exact { value } => value.to_f64(),
            MinSpectrum::Estimate { value, .. } => crate::numeric::rational_to_f64(value),
        }
    }
}

/// Value of the purely periodic continued fraction `[b₀; b₁, …, b_{p−1}, b₀, …]`.
pub fn purely_periodic_value(block: &[u64]) -> QuadraticNumber {
    assert!(!block.is_empty());
    // convergents h/k of the block
    let (mut h0, mut h1) = (BigInt::zero(), BigInt::one());
    let (mut k0, mut k1) = (BigInt::one(), BigInt::zero());
    for &b in block {
        let b = BigInt::from(b);
        let h2 = &b * &h1 + &h0;
        let k2 = &b * &k1 + &k0;
        h0 = std::mem::replace(&mut h1, h2);
        k0 = std::mem::replace(&mut k1, k2);
    }
    // y = (h1 y + h0)/(k1 y + k0)  ⇒  k1 y² + (k0 − h1) y − h0 = 0
    let disc = (&k0 - &h1) * (&k0 - &h1) + BigInt::from(4) * &k1 * &h0;
    let d: u64 = disc.try_into().expect("discriminant fits in 64 bits");
    QuadraticNumber::new(&h1 - &k0, 1, BigInt::from(2) * &k1, d).expect("valid quadratic")
}

/// Liminf over k of `[1; 1+a_k, a_{k−1}, …, a₁]`.
pub fn min_spectrum(cf: &CFExpansion) -> Result<MinSpectrum> {
    min_spectrum_windowed(cf, DEFAULT_WINDOW)
}

pub fn min_spectrum_windowed(cf: &CFExpansion, window: (usize, usize)) -> Result<MinSpectrum> {
    match cf.source() {
        Quotients::Periodic { pre, period } => {
            let s = pre.len();
            let p = period.len();
            let mut best: Option<QuadraticNumber> = None;
            for j in 1..=p {
                let k = s + p + j;
                // reversed tail a_{k−1}, a_{k−2}, … cycles through the period
                let block: Vec<u64> = (1..=p).map(|i| cf.quotient(k - i).expect("periodic")).collect();
                let y = purely_periodic_value(&block);
                let ak = QuadraticNumber::from_integer(cf.quotient(k)?);
                let inner = ak + QuadraticNumber::one() + y.recip()?;
                let val = QuadraticNumber::one() + inner.recip()?;
                best = Some(match best {
                    Some(b) if b <= val => b,
                    _ => val,
                });
            }
            Ok(MinSpectrum::Exact {
                value: best.expect("non-empty period"),
            })
        }
        Quotients::Bounded { .. } => {
            let (lo, hi) = window;
            if lo < 1 || hi < lo {
                return Err(Error::Domain(format!("bad window {lo}..{hi}")));
            }
            let mut best: Option<BigRational> = None;
            for k in lo..=hi {
                let v = cf.mirror_value(k)?;
                if best.as_ref().is_none_or(|b| v < *b) {
                    best = Some(v);
                }
            }
            Ok(MinSpectrum::Estimate {
                value: best.expect("non-empty window"),
                window,
            })
        }
        Quotients::Finite(_) => Err(Error::Unsupported(
            "finite expansions are rational slopes; the spectrum is undefined".into(),
        )),
    }
}
