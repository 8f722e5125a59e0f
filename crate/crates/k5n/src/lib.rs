//! JSON file formats and the command-line front end for [`k5n_core`].

pub mod cli;
pub mod format;

pub use cli::run;
