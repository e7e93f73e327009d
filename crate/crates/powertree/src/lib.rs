//! Benchmark tooling around `powertree_core`: OR-Library point files,
//! command-line configuration, repeated seeded runs, text/CSV reports and SVG
//! drawings of the resulting trees.

pub mod bench;
pub mod config;
mod error;
pub mod ingest;
pub mod report;
pub mod svg;

pub use error::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;
