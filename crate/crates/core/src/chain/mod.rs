//! Locating chains: classification, synthesis and Λ prediction.

mod classify;
mod construct;
mod exact;
mod predict;
mod stats;
mod synth;
mod types;

pub use classify::{
    chain_of, chain_of_stream, characteristic_chain, check_state_bounds, classify_level, level_candidates,
    required_len, states_from_chain,
};
pub use construct::min_construction_chain;
pub use exact::{rep_exact_periodic_golden, RepExact};
pub use predict::{
    lambda_forms, predict_lambda, Form, FormElement, FormPlan, LambdaTag, PredictedElement, PredictedLambda,
};
pub use stats::{chain_stats, GoldenChainStats};
pub use synth::{synthesize, synthesize_level};
pub use types::{Case, Chain, GoldenChain, Letter, LevelState};
