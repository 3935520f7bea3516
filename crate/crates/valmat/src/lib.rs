//! Files, command line and exporters for `valmat-core`.

pub mod caps;
pub mod cli;
pub mod dot;
pub mod format;
pub mod points;

pub use format::{emit_instance, parse_instance, Instance, ParseError};
