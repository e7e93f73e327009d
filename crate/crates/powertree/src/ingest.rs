//! OR-Library Euclidean Steiner point files and random instances.
//!
//! The format is a flat stream of whitespace-separated numbers: the number of
//! instances, then for each instance its point count followed by that many
//! `x y` pairs. Line breaks carry no meaning.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use powertree_core::{Point, SolverRng};
use rand::{Rng, SeedableRng};

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("input ends while reading {expected}")]
    Truncated { expected: &'static str },
    #[error("token {index} ({token:?}) is not a number")]
    NonNumeric { index: usize, token: String },
    #[error("token {index} ({token:?}) is not a valid count")]
    BadCount { index: usize, token: String },
    #[error("{declared} instances declared but {extra} tokens follow the last one")]
    CountMismatch { declared: usize, extra: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub struct InstanceFile {
    pub path: Option<PathBuf>,
    /// Point lists in file order; instance `nr` sits at index `nr - 1`.
    pub instances: Vec<Vec<Point>>,
    /// Coordinates found outside `[0, 1]`. Kept, only reported.
    pub outside_unit_square: usize,
}

impl InstanceFile {
    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let mut file = parse_orlib(&text)?;
        file.path = Some(path.to_path_buf());
        Ok(file)
    }

    /// Wraps generated point lists.
    pub fn from_instances(instances: Vec<Vec<Point>>) -> Self {
        let outside_unit_square = count_outside(&instances);
        Self {
            path: None,
            instances,
            outside_unit_square,
        }
    }

    pub fn len(&self) -> usize {
        self.instances.len()
    }

    pub fn is_empty(&self) -> bool {
        self.instances.is_empty()
    }

    /// Points of instance `nr`, counted from 1.
    pub fn instance(&self, nr: usize) -> Result<&[Point]> {
        nr.checked_sub(1)
            .and_then(|i| self.instances.get(i))
            .map(Vec::as_slice)
            .ok_or(Error::NoSuchInstance {
                nr,
                len: self.len(),
            })
    }

    /// Same layout as the OR-Library files, one point per line.
    pub fn to_orlib_string(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{}", self.instances.len()).unwrap();
        for points in &self.instances {
            writeln!(out, "{}", points.len()).unwrap();
            for p in points {
                writeln!(out, "{} {}", p.x, p.y).unwrap();
            }
        }
        out
    }
}

pub fn parse_orlib(text: &str) -> Result<InstanceFile, ParseError> {
    let mut tokens = text.split_whitespace().enumerate();
    let declared = count(tokens.next(), "the instance count")?;
    let mut instances = Vec::with_capacity(declared.min(1024));
    for _ in 0..declared {
        let m = count(tokens.next(), "a point count")?;
        let mut points = Vec::with_capacity(m.min(1 << 16));
        for _ in 0..m {
            let x = number(tokens.next())?;
            let y = number(tokens.next())?;
            points.push(Point::new(x, y));
        }
        instances.push(points);
    }
    let extra = tokens.count();
    if extra > 0 {
        return Err(ParseError::CountMismatch { declared, extra });
    }
    Ok(InstanceFile::from_instances(instances))
}

fn count(token: Option<(usize, &str)>, expected: &'static str) -> Result<usize, ParseError> {
    let (index, token) = token.ok_or(ParseError::Truncated { expected })?;
    token.parse().map_err(|_| ParseError::BadCount {
        index,
        token: token.to_string(),
    })
}

fn number(token: Option<(usize, &str)>) -> Result<f64, ParseError> {
    let (index, token) = token.ok_or(ParseError::Truncated {
        expected: "a coordinate",
    })?;
    match token.parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        _ => Err(ParseError::NonNumeric {
            index,
            token: token.to_string(),
        }),
    }
}

fn count_outside(instances: &[Vec<Point>]) -> usize {
    let inside = |c: f64| (0.0..=1.0).contains(&c);
    instances
        .iter()
        .flatten()
        .filter(|p| !inside(p.x) || !inside(p.y))
        .count()
}

/// `n` points drawn uniformly from the unit square.
pub fn generate_uniform(n: usize, seed: u64) -> Result<Vec<Point>> {
    if n < 2 {
        return Err(Error::TooFewPoints(n));
    }
    let mut rng = SolverRng::seed_from_u64(seed);
    Ok((0..n).map(|_| Point::new(rng.gen(), rng.gen())).collect())
}

/// `count` uniform instances of `n` points; instance `i` uses `seed + i`.
pub fn generate_file(count: usize, n: usize, seed: u64) -> Result<InstanceFile> {
    let instances = (0..count as u64)
        .map(|i| generate_uniform(n, seed.wrapping_add(i)))
        .collect::<Result<_>>()?;
    Ok(InstanceFile::from_instances(instances))
}
