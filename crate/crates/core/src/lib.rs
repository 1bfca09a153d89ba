//! Exact machinery for the repetition exponent of Sturmian words.

pub mod cf;
pub mod chain;
pub mod cli;
pub mod error;
pub mod lab;
pub(crate) mod numeric;
pub mod rep;
pub(crate) mod serde_util;
pub mod words;

pub use error::{Error, Result};
pub use numeric::{rational_decimal, rational_to_f64};
