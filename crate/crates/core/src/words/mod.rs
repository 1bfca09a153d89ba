//! Sturmian word construction: standard, characteristic and mechanical words.

mod complexity;
mod finite;
mod mechanical;
mod standard;
mod stream;

pub use complexity::subword_complexity;
pub use finite::{ascii, FiniteWord};
pub use mechanical::{mechanical_prefix, Mechanical, Rounding};
pub use standard::{StandardEntry, StandardWordTable, MAX_STANDARD_LEN};
pub use stream::{characteristic_prefix, sturmian_number, SourceDescriptor, StreamRecord, StreamSource, WordStream};
