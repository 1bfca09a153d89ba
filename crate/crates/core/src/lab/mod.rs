//! Experiments: constants, Λ verification, gap scans, min-spectrum checks.

mod estimate;
mod minspec;
mod mu;
mod record;
mod sample;
mod scan;
mod verify;

pub use estimate::{estimate_chain, estimate_golden, golden_depth, lambda_head, DEFAULT_DEPTH};
pub use minspec::{min_spectrum_check, MinSpecReport};
pub use mu::{
    irrationality_exponent, mu2, mu3, mu4, mu4_family, mu_max, mu_min, mu_table, r_max, r_one, MuEntry, MuTable,
};
pub use record::{read_jsonl, run_id, write_jsonl, write_summary_csv, RunRecord};
pub use sample::{random_chain, random_golden_chain, random_slope, subject_rng};
pub use scan::{
    gap_scan, golden_gaps, histogram, mu4_family_chain, Gap, GapScanConfig, HistBin, Sampler, ScanReport, Violation,
};
pub use verify::{verify_lambda, LambdaDiff};
