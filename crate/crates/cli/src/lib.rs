//! Command-line front end for the `hedgehog` crate.
//!
//! Subcommands: `describe`, `check`, `render` and `fuzz`. Exit codes are 0 on
//! success, 1 for input or usage errors, 2 when an invariant is violated and 3 for
//! numerical failures.

pub mod app;
pub mod check;
pub mod describe;
mod error;
pub mod format;
pub mod fuzz;
pub mod render;
pub mod spec;

pub use error::{CliError, Result};
