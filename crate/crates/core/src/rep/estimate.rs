use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use super::RepProfile;
use crate::error::{Error, Result};
use crate::numeric::{rational_decimal, rational_to_f64};

/// Tail-window minimum of `1 + n_i/n_{i+1}`.
#[derive(Clone, Debug, Serialize)]
pub struct RepEstimate {
    #[serde(serialize_with = "crate::serde_util::rational_str")]
    pub value: BigRational,
    pub decimal: String,
    /// Spread (max − min) of the last five tail ratios.
    pub error_bar: f64,
    /// Index range `[from, to)` of the ratios inside the window.
    pub window: (usize, usize),
    /// Last few `1 + n_i/n_{i+1}` values, for trend inspection.
    pub last_ratios: Vec<f64>,
}

impl RepEstimate {
    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.value)
    }
}

/// Discarded fraction of Λ ratios for chain-derived Λ (depth 40 and up).
pub const DEFAULT_TAIL: f64 = 0.5;
/// Discarded fraction for Λ read off an r(n) profile, which holds far fewer
/// elements and more small-n bias.
pub const PROFILE_TAIL: f64 = 0.75;

/// Estimate from an increasing list of Λ elements, discarding the first
/// `discard` fraction of the consecutive ratios.
pub fn estimate_from_lambda(lambda: &[BigUint], discard: f64) -> Result<RepEstimate> {
    if !(0.0..1.0).contains(&discard) {
        return Err(Error::Domain(format!("tail discard fraction {discard} outside [0, 1)")));
    }
    let ratios: Vec<BigRational> = lambda
        .windows(2)
        .map(|p| BigRational::new(BigInt::from(p[0].clone()), BigInt::from(p[1].clone())))
        .collect();
    estimate_from_ratios(&ratios, discard)
}

fn estimate_from_ratios(ratios: &[BigRational], discard: f64) -> Result<RepEstimate> {
    let from = (ratios.len() as f64 * discard) as usize;
    if ratios.len() < from + 2 {
        return Err(Error::InsufficientData(format!(
            "{} Λ ratios, tail window too small",
            ratios.len()
        )));
    }
    let one = BigRational::one();
    let tail: Vec<BigRational> = ratios[from..].iter().map(|r| &one + r).collect();
    let best = tail.iter().min().expect("non-empty tail").clone();
    let last: Vec<f64> = tail[tail.len().saturating_sub(5)..]
        .iter()
        .map(rational_to_f64)
        .collect();
    let error_bar = last.iter().copied().fold(f64::MIN, f64::max) - last.iter().copied().fold(f64::MAX, f64::min);
    let last_ratios = tail[tail.len().saturating_sub(6)..]
        .iter()
        .map(rational_to_f64)
        .collect();
    Ok(RepEstimate {
        decimal: rational_decimal(&best, 6),
        value: best,
        error_bar,
        window: (from, ratios.len()),
        last_ratios,
    })
}

/// rep estimate for a computed profile.
pub fn rep_estimate(profile: &RepProfile, discard: f64) -> Result<RepEstimate> {
    if !(0.0..1.0).contains(&discard) {
        return Err(Error::Domain(format!("tail discard fraction {discard} outside [0, 1)")));
    }
    estimate_from_ratios(&profile.ratios, discard)
}
