//! Repeated seeded solver runs and their statistics.

use std::time::Instant;

use powertree_core::constructive::best_initial;
use powertree_core::metaheuristics::{aco, gls, vns, Outcome, StopTracker};
use powertree_core::{BoundedTree, Instance, SolverRng};
use rand::SeedableRng;

use crate::config::{Algorithm, SolverConfig};
use crate::ingest::InstanceFile;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct RunRecord {
    pub seed: u64,
    pub objective: f64,
    pub seconds: f64,
}

/// Aggregate over the runs of one algorithm on one instance.
#[derive(Debug, Clone, PartialEq)]
pub struct RunReport {
    pub hop_bound: usize,
    pub n: usize,
    pub nr: usize,
    pub algorithm: Algorithm,
    /// Objective of the shared starting tree.
    pub initial_objective: f64,
    pub best: f64,
    pub average: f64,
    /// Population standard deviation of the run objectives.
    pub sd: f64,
    pub average_seconds: f64,
    pub runs: Vec<RunRecord>,
    /// Lowest-objective tree over all runs; the first one on ties.
    pub best_tree: BoundedTree,
}

/// Mean and population standard deviation.
pub fn mean_sd(values: &[f64]) -> (f64, f64) {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / n;
    (mean, var.sqrt())
}

impl RunReport {
    fn new(
        inst: &Instance,
        nr: usize,
        algorithm: Algorithm,
        initial_objective: f64,
        runs: Vec<RunRecord>,
        best_tree: BoundedTree,
    ) -> Self {
        let objectives: Vec<f64> = runs.iter().map(|r| r.objective).collect();
        let (average, sd) = mean_sd(&objectives);
        let seconds: Vec<f64> = runs.iter().map(|r| r.seconds).collect();
        Self {
            hop_bound: inst.hop_bound(),
            n: inst.n(),
            nr,
            algorithm,
            initial_objective,
            best: objectives.iter().copied().fold(f64::INFINITY, f64::min),
            average,
            sd,
            average_seconds: mean_sd(&seconds).0,
            runs,
            best_tree,
        }
    }
}

/// One run of `algorithm` from `initial`.
pub fn solve(
    algorithm: Algorithm,
    inst: &Instance,
    initial: BoundedTree,
    config: &SolverConfig,
    rng: &mut SolverRng,
) -> Result<Outcome> {
    let mut tracker = StopTracker::new(config.patience);
    if let Some(limit) = config.max_iterations {
        tracker = tracker.with_iteration_limit(limit);
    }
    let outcome = match algorithm {
        Algorithm::Vns => vns(inst, initial, &config.vns, rng, &mut tracker),
        Algorithm::Gls => gls(inst, vec![initial], &config.gls, rng, &mut tracker),
        Algorithm::Aco => aco(inst, initial, &config.aco, rng, &mut tracker),
    }?;
    Ok(outcome)
}

/// Runs every selected algorithm `config.runs` times on every selected
/// instance of `file`.
///
/// All runs on an instance start from the same tree, built with
/// `best_initial` from the master seed. Run `i` draws from a generator seeded
/// with `seed + i`, so reports depend only on the file, the configuration
/// and the seed (apart from timings).
pub fn run_benchmark(config: &SolverConfig, file: &InstanceFile) -> Result<Vec<RunReport>> {
    if config.runs == 0 {
        return Err(Error::OutOfRange {
            flag: "runs",
            value: "0".into(),
            expected: "a value of at least 1",
        });
    }
    let nrs: Vec<usize> = match config.nr {
        Some(nr) => vec![nr],
        None => (1..=file.len()).collect(),
    };
    let mut reports = Vec::new();
    for nr in nrs {
        let points = file.instance(nr)?.to_vec();
        let inst = Instance::new(points, config.hop_bound)
            .map_err(|source| Error::Instance { nr, source })?;
        let mut init_rng = SolverRng::seed_from_u64(config.seed);
        let initial = best_initial(&inst, config.init_attempts, &mut init_rng);
        for &algorithm in config.algorithms() {
            let mut runs = Vec::with_capacity(config.runs);
            let mut best_tree: Option<BoundedTree> = None;
            for i in 0..config.runs as u64 {
                let seed = config.seed.wrapping_add(i);
                let mut rng = SolverRng::seed_from_u64(seed);
                let start = Instant::now();
                let outcome = solve(algorithm, &inst, initial.clone(), config, &mut rng)?;
                let seconds = start.elapsed().as_secs_f64();
                let objective = outcome.objective();
                if best_tree.as_ref().is_none_or(|t| objective < t.objective()) {
                    best_tree = Some(outcome.best);
                }
                runs.push(RunRecord {
                    seed,
                    objective,
                    seconds,
                });
            }
            let best_tree = best_tree.expect("at least one run");
            reports.push(RunReport::new(
                &inst,
                nr,
                algorithm,
                initial.objective(),
                runs,
                best_tree,
            ));
        }
    }
    Ok(reports)
}
