use crate::cf::CFExpansion;
use crate::chain::{predict_lambda, states_from_chain, Chain, GoldenChain, PredictedLambda};
use crate::error::Result;
use crate::rep::{estimate_from_lambda, RepEstimate};

/// Default chain depth (levels) for rep estimates.
pub const DEFAULT_DEPTH: usize = 40;

/// rep estimate for an annotated chain, from its symbolic Λ.
pub fn estimate_chain(cf: &CFExpansion, chain: &Chain, discard: f64) -> Result<(RepEstimate, PredictedLambda)> {
    let states = states_from_chain(cf, chain)?;
    let lambda = predict_lambda(&states, cf)?;
    let est = estimate_from_lambda(&lambda.values(), discard)?;
    Ok((est, lambda))
}

/// Depth that keeps a few full periods inside the tail window.
pub fn golden_depth(chain: &GoldenChain, base: usize) -> usize {
    base.max(chain.preperiod_levels() + base.max(4 * chain.period_levels()))
}

pub fn estimate_golden(chain: &GoldenChain, depth: usize, discard: f64) -> Result<(RepEstimate, PredictedLambda)> {
    let cf = CFExpansion::golden();
    estimate_chain(&cf, &chain.chain(depth)?, discard)
}

/// First few Λ values, rendered as strings.
pub fn lambda_head(lambda: &PredictedLambda, n: usize) -> Vec<String> {
    lambda.elements.iter().take(n).map(|e| e.n.to_string()).collect()
}
