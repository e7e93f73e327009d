//! Top-level solvers: variable neighborhood search, genetic local search and
//! ant colony optimization.
//!
//! All three run until the best objective has failed to improve for
//! `patience` consecutive iterations, as tracked by [`StopTracker`], and all
//! three are elitist: the returned tree is never worse than the starting one.

mod aco;
mod gls;
mod vns;

use alloc::vec::Vec;

use rand::Rng;

use crate::BoundedTree;

pub use aco::{aco, aco_construct_path, aco_update, AcoParams, PheromoneMatrix};
pub use gls::{
    gls, gls_crossover, gls_mutation_k, gls_select_pairs, GlsParams, Member, Population,
};
pub use vns::{vns, VnsParams, DEFAULT_K_MAX};

/// Stop rule shared by the solvers: stop once the best objective has not
/// strictly improved for `patience` checks in a row.
#[derive(Debug, Clone, PartialEq)]
pub struct StopTracker {
    best: f64,
    stale: usize,
    patience: usize,
    checks: usize,
    limit: Option<usize>,
}

impl StopTracker {
    pub const DEFAULT_PATIENCE: usize = 3;

    pub fn new(patience: usize) -> Self {
        Self {
            best: f64::INFINITY,
            stale: 0,
            patience,
            checks: 0,
            limit: None,
        }
    }

    /// Also stop after `limit` checks regardless of progress.
    pub fn with_iteration_limit(mut self, limit: usize) -> Self {
        self.limit = Some(limit);
        self
    }

    /// Sets the reference objective and clears the counters.
    pub fn start(&mut self, initial_best: f64) {
        self.best = initial_best;
        self.stale = 0;
        self.checks = 0;
    }

    /// Records one iteration's best objective; returns `true` to stop.
    pub fn check(&mut self, current_best: f64) -> bool {
        self.checks += 1;
        if current_best < self.best {
            self.best = current_best;
            self.stale = 0;
        } else {
            self.stale += 1;
        }
        self.stale >= self.patience || self.limit.is_some_and(|l| self.checks >= l)
    }

    pub fn best(&self) -> f64 {
        self.best
    }

    pub fn stale_iterations(&self) -> usize {
        self.stale
    }

    pub fn patience(&self) -> usize {
        self.patience
    }
}

impl Default for StopTracker {
    fn default() -> Self {
        Self::new(Self::DEFAULT_PATIENCE)
    }
}

/// Result of a solver run.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub best: BoundedTree,
    /// Best objective after each iteration.
    pub trace: Vec<f64>,
}

impl Outcome {
    pub fn objective(&self) -> f64 {
        self.best.objective()
    }

    pub fn iterations(&self) -> usize {
        self.trace.len()
    }
}

/// Draws an index with probability proportional to `weights[i]`.
pub(crate) fn roulette<R: Rng + ?Sized>(weights: &[f64], rng: &mut R) -> usize {
    let total: f64 = weights.iter().sum();
    let mut target = rng.gen::<f64>() * total;
    for (i, &w) in weights.iter().enumerate() {
        target -= w;
        if target < 0.0 {
            return i;
        }
    }
    // Rounding left a sliver past the end; fall back to the last positive weight.
    weights.iter().rposition(|&w| w > 0.0).unwrap_or(weights.len() - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_objective_stops_after_patience() {
        let mut t = StopTracker::new(3);
        t.start(1.0);
        assert!(!t.check(1.0));
        assert!(!t.check(1.0));
        assert!(t.check(1.0));
    }

    #[test]
    fn steady_improvement_never_stops() {
        let mut t = StopTracker::new(3);
        t.start(1000.0);
        for i in 0..100 {
            assert!(!t.check(999.0 - i as f64));
        }
    }

    #[test]
    fn alternating_never_stops() {
        let mut t = StopTracker::new(3);
        t.start(100.0);
        let mut w = 100.0;
        for i in 0..100 {
            if i % 2 == 0 {
                w -= 1.0;
            }
            assert!(!t.check(w));
        }
    }

    #[test]
    fn ties_count_as_stale() {
        let mut t = StopTracker::new(2);
        t.start(5.0);
        assert!(!t.check(4.0));
        assert_eq!(t.stale_iterations(), 0);
        assert!(!t.check(4.0));
        assert!(t.check(4.0));
    }

    #[test]
    fn iteration_limit() {
        let mut t = StopTracker::new(10).with_iteration_limit(2);
        t.start(10.0);
        assert!(!t.check(9.0));
        assert!(t.check(8.0));
    }
}
