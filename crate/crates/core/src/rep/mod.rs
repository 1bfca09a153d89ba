//! The repetition function r(n), Λ, and rep estimates.

mod estimate;
mod naive;
mod profile;
mod sam;

pub use estimate::{estimate_from_lambda, rep_estimate, RepEstimate, DEFAULT_TAIL, PROFILE_TAIL};
pub use naive::{r_naive, r_oracle_profile};
pub use profile::{lambda_set, r_profile, r_profile_word, RepProfile};
pub use sam::{longest_repeated_suffix, SuffixAutomaton};
