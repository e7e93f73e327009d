use std::io;
use std::path::PathBuf;

use crate::ingest::ParseError;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("cannot generate an instance of {0} points, need at least 2")]
    TooFewPoints(usize),
    #[error(transparent)]
    Cli(#[from] clap::Error),
    #[error("--{flag} {value}: expected {expected}")]
    OutOfRange {
        flag: &'static str,
        value: String,
        expected: &'static str,
    },
    #[error("no instance source, pass --file or --gen")]
    NoSource,
    #[error("instance nr {nr} does not exist, the file holds {len}")]
    NoSuchInstance { nr: usize, len: usize },
    #[error("instance nr {nr}: {source}")]
    Instance {
        nr: usize,
        source: powertree_core::Error,
    },
    #[error(transparent)]
    Solver(#[from] powertree_core::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
