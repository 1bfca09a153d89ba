//! Continued fractions and exact quadratic-irrational arithmetic.

mod expansion;
mod quadratic;
mod spectrum;

pub use expansion::{quadratic_to_cf, CFExpansion, Convergent, QuotientFn, Quotients};
pub use quadratic::QuadraticNumber;
pub use spectrum::{min_spectrum, min_spectrum_windowed, purely_periodic_value, MinSpectrum, DEFAULT_WINDOW};
