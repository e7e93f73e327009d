use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("an instance needs at least 2 points, got {0}")]
    TooFewPoints(usize),
    #[error("hop bound must be at least 1, got {0}")]
    InvalidHopBound(usize),
    #[error("coordinate of point {0} is not finite")]
    NonFiniteCoordinate(usize),
    #[error("no spanning tree on {n} points has hop diameter <= {hop_bound}")]
    NoFeasibleTree { n: usize, hop_bound: usize },
    #[error("vertex count mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("parent links do not form an arborescence: {0}")]
    MalformedTree(&'static str),
    #[error("malformed level array: {0}")]
    MalformedLevels(&'static str),
    #[error("vertex {0} is a center")]
    CenterVertex(usize),
    #[error("tree violates the hop bound")]
    InfeasibleTree,
    #[error("instance too large for exhaustive search: n = {n}, limit {limit}")]
    TooLargeForOracle { n: usize, limit: usize },
    #[error("population needs at least 2 members, got {0}")]
    PopulationTooSmall(usize),
    #[error("no seed trees were provided")]
    NoSeeds,
}
