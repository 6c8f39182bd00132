//! The `sboxforge` command-line tool: argument definitions, file formats and
//! command implementations. `main.rs` only wires these to the process.

pub mod args;
pub mod commands;
pub mod report;
pub mod sbox_file;

pub use commands::{run, Exit, Failure};

/// Environment variable capping the worker pool size.
pub const THREADS_ENV: &str = "SBOXFORGE_THREADS";
