//! File formats and command implementations for the `bineg` binary.
//!
//! The algorithms live in `bineg-core`; this crate adds the JSON state-file
//! format, the sweep CSV writer, and the text reports printed by each command.

pub mod commands;
pub mod format;
pub mod state_file;
pub mod sweep;
