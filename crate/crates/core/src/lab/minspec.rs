use rayon::prelude::*;
use serde::Serialize;

use super::estimate::estimate_chain;
use super::sample::{random_chain, subject_rng};
use crate::cf::{min_spectrum, CFExpansion, MinSpectrum, Quotients};
use crate::chain::min_construction_chain;
use crate::error::Result;

#[derive(Clone, Debug, Serialize)]
pub struct MinSpecReport {
    pub slope: String,
    pub exact: MinSpectrum,
    pub exact_decimal: String,
    /// Best construction-chain estimate and the offset that produced it.
    pub construction_offset: usize,
    pub construction_estimate: f64,
    pub samples: usize,
    pub sampled_min: Option<f64>,
    /// Sampled estimates below `exact − tolerance`.
    pub below_exact: usize,
}

impl MinSpecReport {
    pub fn construction_error(&self) -> f64 {
        (self.construction_estimate - self.exact.to_f64()).abs()
    }
}

/// Compare the exact bottom of the spectrum with the construction chain and
/// with `samples` random chains of the same slope.
pub fn min_spectrum_check(
    cf: &CFExpansion,
    samples: usize,
    depth: usize,
    seed: u64,
    discard: f64,
    tolerance: f64,
) -> Result<MinSpecReport> {
    let exact = min_spectrum(cf)?;
    let x = exact.to_f64();
    let period = match cf.source() {
        Quotients::Periodic { period, .. } => period.len(),
        _ => 1,
    };
    let mut best: Option<(usize, f64)> = None;
    for offset in 0..2 * period {
        let chain = min_construction_chain(cf, depth, offset)?;
        let v = estimate_chain(cf, &chain, discard)?.0.to_f64();
        if best.is_none_or(|(_, b)| v < b) {
            best = Some((offset, v));
        }
    }
    let (construction_offset, construction_estimate) = best.expect("at least one offset");
    let sampled: Vec<f64> = (0..samples)
        .into_par_iter()
        .map(|i| {
            let mut rng = subject_rng(seed, i as u64);
            let chain = random_chain(cf, depth, &mut rng)?;
            Ok(estimate_chain(cf, &chain, discard)?.0.to_f64())
        })
        .collect::<Result<_>>()?;
    let sampled_min = sampled.iter().copied().reduce(f64::min);
    let below_exact = sampled.iter().filter(|&&v| v < x - tolerance).count();
    let exact_decimal = match &exact {
        MinSpectrum::Exact { value } => value.to_decimal(6),
        MinSpectrum::Estimate { value, .. } => crate::rational_decimal(value, 6),
    };
    Ok(MinSpecReport {
        slope: cf.to_string(),
        exact,
        exact_decimal,
        construction_offset,
        construction_estimate,
        samples,
        sampled_min,
        below_exact,
    })
}
