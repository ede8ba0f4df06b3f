//! Command-line front end: lexicon loading and the `parse`, `compose`,
//! `entail` and `disc` commands.

pub mod app;
pub mod commands;
pub mod error;
pub mod lexicon;

pub use error::{CliError, Result};
pub use lexicon::{load_lexicon, Lexicon};
