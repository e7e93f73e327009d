use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use super::{roulette, Outcome, StopTracker};
use crate::neighborhoods::vnd;
use crate::{decode_levels, BoundedTree, Error, Instance, LevelArray, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AcoParams {
    /// Ants per iteration.
    pub colony_size: usize,
    /// Pheromone decay coefficient, in `(0, 1)`.
    pub rho: f64,
}

impl Default for AcoParams {
    fn default() -> Self {
        Self {
            colony_size: 50,
            rho: 0.2,
        }
    }
}

/// Trail intensities per (vertex, level), levels `0..=floor(D/2)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PheromoneMatrix {
    n: usize,
    levels: usize,
    tau: Vec<f64>,
}

impl PheromoneMatrix {
    /// Every cell set to `value`.
    pub fn filled(n: usize, max_level: usize, value: f64) -> Self {
        let levels = max_level + 1;
        Self {
            n,
            levels,
            tau: vec![value; n * levels],
        }
    }

    /// Uniform start `1 / (n * W(initial))`.
    pub fn for_initial(inst: &Instance, initial: &BoundedTree) -> Self {
        let n = inst.n();
        Self::filled(n, inst.max_level(), 1.0 / (n as f64 * initial.objective()))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of level columns, `floor(D/2) + 1`.
    pub fn columns(&self) -> usize {
        self.levels
    }

    #[inline]
    pub fn get(&self, vertex: usize, level: usize) -> f64 {
        self.tau[vertex * self.levels + level]
    }

    pub fn set(&mut self, vertex: usize, level: usize, value: f64) {
        self.tau[vertex * self.levels + level] = value;
    }

    pub fn row(&self, vertex: usize) -> &[f64] {
        &self.tau[vertex * self.levels..(vertex + 1) * self.levels]
    }

    pub fn min_value(&self) -> f64 {
        self.tau.iter().copied().fold(f64::INFINITY, f64::min)
    }
}

/// Samples one ant path.
///
/// Centers (one for even `hop_bound`, two distinct ones for odd) are drawn
/// with probability proportional to the level-0 column. Every other vertex
/// then draws its level from columns `1..=floor(D/2)` of its own row.
pub fn aco_construct_path<R: Rng + ?Sized>(
    tau: &PheromoneMatrix,
    hop_bound: usize,
    rng: &mut R,
) -> LevelArray {
    debug_assert_eq!(tau.columns(), hop_bound / 2 + 1);
    let n = tau.n();
    let mut column: Vec<f64> = (0..n).map(|i| tau.get(i, 0)).collect();
    let mut levels = vec![usize::MAX; n];
    let centers = if hop_bound % 2 == 1 { 2 } else { 1 };
    for _ in 0..centers {
        let c = roulette(&column, rng);
        levels[c] = 0;
        column[c] = 0.0;
    }
    for (i, slot) in levels.iter_mut().enumerate() {
        if *slot == usize::MAX {
            *slot = roulette(&tau.row(i)[1..], rng) + 1;
        }
    }
    LevelArray::from_raw(levels)
}

/// Reinforces the levels of `best` by `rho / W(best)` and decays every other
/// cell by the factor `1 - rho`.
pub fn aco_update(tau: &mut PheromoneMatrix, best: &BoundedTree, rho: f64) {
    let reward = rho / best.objective();
    for i in 0..tau.n() {
        let chosen = best.level(i);
        for l in 0..tau.columns() {
            let cell = &mut tau.tau[i * tau.levels + l];
            if l == chosen {
                *cell += reward;
            } else {
                *cell *= 1.0 - rho;
            }
        }
    }
}

/// Ant colony optimization over level arrays.
///
/// Each iteration builds `colony_size` paths, decodes and descends each one
/// with [`vnd`], updates the best tree found so far (seeded with `initial`)
/// and reinforces the pheromone matrix with it.
pub fn aco<R: Rng + ?Sized>(
    inst: &Instance,
    initial: BoundedTree,
    params: &AcoParams,
    rng: &mut R,
    tracker: &mut StopTracker,
) -> Result<Outcome> {
    if !initial.is_feasible(inst) {
        return Err(Error::InfeasibleTree);
    }
    let mut tau = PheromoneMatrix::for_initial(inst, &initial);
    let mut best = initial;
    let mut trace = Vec::new();
    tracker.start(best.objective());
    loop {
        for _ in 0..params.colony_size {
            let path = aco_construct_path(&tau, inst.hop_bound(), rng);
            let mut tree = decode_levels(&path, inst)?;
            vnd(&mut tree, inst);
            if tree.objective() < best.objective() {
                best = tree;
            }
        }
        aco_update(&mut tau, &best, params.rho);
        trace.push(best.objective());
        if tracker.check(best.objective()) {
            break;
        }
    }
    Ok(Outcome { best, trace })
}
