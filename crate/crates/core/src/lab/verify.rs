use num_traits::ToPrimitive;
use serde::Serialize;

use crate::cf::CFExpansion;
use crate::chain::{chain_of_stream, predict_lambda, LambdaTag};
use crate::error::{Error, Result};
use crate::rep::r_profile;
use crate::words::WordStream;

/// Brute-force Λ against the Λ predicted from the locating chain.
#[derive(Clone, Debug, Serialize)]
pub struct LambdaDiff {
    pub levels: usize,
    pub chain: String,
    pub lo: u64,
    pub hi: u64,
    pub brute: Vec<u64>,
    pub predicted: Vec<(u64, LambdaTag)>,
    /// In brute Λ only.
    pub missing: Vec<u64>,
    /// Predicted but not in brute Λ.
    pub extra: Vec<u64>,
}

impl LambdaDiff {
    pub fn mismatches(&self) -> usize {
        self.missing.len() + self.extra.len()
    }
}

/// Classify `stream` through level K, predict Λ on the covered interval and
/// compare with Λ read off the computed r-profile.
pub fn verify_lambda(stream: &mut WordStream, cf: &CFExpansion, levels: usize) -> Result<LambdaDiff> {
    let (chain, states) = chain_of_stream(stream, cf, levels)?;
    let pred = predict_lambda(&states, cf)?;
    let to_u64 = |n: &num_bigint::BigUint| {
        n.to_u64()
            .ok_or_else(|| Error::Unsupported("Λ interval exceeds 64 bits".into()))
    };
    let lo = to_u64(&pred.lo)?;
    let hi = to_u64(&pred.hi)?;
    let predicted: Vec<(u64, LambdaTag)> = pred
        .elements
        .iter()
        .map(|e| Ok((to_u64(&e.n)?, e.tag)))
        .collect::<Result<_>>()?;
    let brute: Vec<u64> = if hi >= 1 {
        let prof = r_profile(stream, hi as usize)?;
        prof.lambda.iter().map(|&n| n as u64).filter(|&n| n >= lo).collect()
    } else {
        Vec::new()
    };
    let pset: Vec<u64> = predicted.iter().map(|p| p.0).collect();
    let missing = brute
        .iter()
        .copied()
        .filter(|n| pset.binary_search(n).is_err())
        .collect();
    let extra = pset
        .iter()
        .copied()
        .filter(|n| brute.binary_search(n).is_err())
        .collect();
    Ok(LambdaDiff {
        levels,
        chain: chain.to_string(),
        lo,
        hi,
        brute,
        predicted,
        missing,
        extra,
    })
}
