//! Solver library for the min-power bounded-hops symmetric connectivity problem.
//!
//! Given points in the plane and a hop bound `D`, find a spanning tree whose
//! hop diameter is at most `D` and whose total node power is minimal. The
//! power of a node is the largest squared distance to any of its tree
//! neighbours.
//!
//! Every feasible tree is handled as an arborescence rooted at its center
//! (or at one of its two centers when `D` is odd), so the hop constraint is
//! equivalent to "no vertex deeper than `D / 2`".
//!
//! The crate is `no_std` and only needs `alloc`. All randomness is drawn from
//! caller-provided generators; [`SolverRng`] is the generator used throughout
//! the companion tooling.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod constructive;
mod error;
mod instance;
pub mod levels;
pub mod metaheuristics;
pub mod neighborhoods;
pub mod oracle;
mod tree;

pub use error::Error;
pub use instance::{Instance, Point};
pub use levels::{decode_levels, encode_levels, LevelArray};
pub use tree::BoundedTree;

/// Seedable generator shared by every stochastic routine in the workspace.
pub type SolverRng = rand_chacha::ChaCha8Rng;

pub type Result<T, E = Error> = core::result::Result<T, E>;
