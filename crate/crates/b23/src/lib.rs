//! File formats, IO and the command-line front end for [`b23_core`].

pub mod cli;
pub mod dist;
pub mod error;
pub mod format;
pub mod parallel;

pub use error::{CliError, ExitStatus};
