//! Command-line configuration.

use std::ffi::OsString;
use std::fmt;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use powertree_core::metaheuristics::{AcoParams, GlsParams, StopTracker, VnsParams};

use crate::{Error, Result};

/// Hop bound used when `--d` is not given.
pub const DEFAULT_HOP_BOUND: usize = 10;
pub const DEFAULT_RUNS: usize = 10;
pub const DEFAULT_INIT_ATTEMPTS: usize = 50;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    Aco,
    Gls,
    Vns,
}

impl Algorithm {
    /// Column order of the reports.
    pub const ALL: [Algorithm; 3] = [Algorithm::Aco, Algorithm::Gls, Algorithm::Vns];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Aco => "ACO",
            Algorithm::Gls => "GLS",
            Algorithm::Vns => "VNS",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|a| a.name().eq_ignore_ascii_case(name))
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlgoTag {
    Vns,
    Gls,
    Aco,
    All,
}

impl AlgoTag {
    pub fn algorithms(self) -> &'static [Algorithm] {
        match self {
            AlgoTag::Vns => &[Algorithm::Vns],
            AlgoTag::Gls => &[Algorithm::Gls],
            AlgoTag::Aco => &[Algorithm::Aco],
            AlgoTag::All => &Algorithm::ALL,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Source {
    File(PathBuf),
    /// `count` uniform instances of `n` points, the i-th seeded with `seed + i`.
    Generated { n: usize, count: usize, seed: u64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolverConfig {
    pub algo: AlgoTag,
    pub source: Option<Source>,
    /// Instance to run, counted from 1; `None` runs every instance.
    pub nr: Option<usize>,
    pub hop_bound: usize,
    pub runs: usize,
    pub seed: u64,
    pub vns: VnsParams,
    pub gls: GlsParams,
    pub aco: AcoParams,
    pub patience: usize,
    /// Upper bound on solver iterations per run, on top of `patience`.
    pub max_iterations: Option<usize>,
    /// Constructions tried for the shared initial tree.
    pub init_attempts: usize,
    pub out: Option<PathBuf>,
    pub svg: Option<PathBuf>,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            algo: AlgoTag::All,
            source: None,
            nr: None,
            hop_bound: DEFAULT_HOP_BOUND,
            runs: DEFAULT_RUNS,
            seed: 0,
            vns: VnsParams::default(),
            gls: GlsParams::default(),
            aco: AcoParams::default(),
            patience: StopTracker::DEFAULT_PATIENCE,
            max_iterations: None,
            init_attempts: DEFAULT_INIT_ATTEMPTS,
            out: None,
            svg: None,
        }
    }
}

impl SolverConfig {
    pub fn algorithms(&self) -> &'static [Algorithm] {
        self.algo.algorithms()
    }
}

/// Min-power bounded-hops spanning trees: run VNS, GLS and ACO on OR-Library
/// point files or generated instances.
#[derive(Debug, Parser)]
#[command(name = "powertree", version)]
struct Args {
    /// OR-Library point file.
    #[arg(long, conflicts_with = "gen")]
    file: Option<PathBuf>,
    /// Instance number within the file, from 1 [default: all].
    #[arg(long)]
    nr: Option<usize>,
    /// Hop-diameter bound D.
    #[arg(long = "d", value_name = "D", default_value_t = DEFAULT_HOP_BOUND)]
    hop_bound: usize,
    #[arg(long, value_enum, default_value_t = AlgoTag::All)]
    algo: AlgoTag,
    #[arg(long, default_value_t = DEFAULT_RUNS)]
    runs: usize,
    /// Master seed; run i uses seed + i.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// VNS: largest shaking strength.
    #[arg(long, default_value_t = VnsParams::default().k_max)]
    kmax: usize,
    /// GLS: population size.
    #[arg(long, default_value_t = GlsParams::default().pop_size)]
    pop: usize,
    /// GLS: offspring per generation.
    #[arg(long, default_value_t = GlsParams::default().offspring_size)]
    offsp: usize,
    /// GLS: mutation probability.
    #[arg(long, default_value_t = GlsParams::default().mutation_prob)]
    pm: f64,
    /// GLS: local search probability.
    #[arg(long, default_value_t = GlsParams::default().local_search_prob)]
    pls: f64,
    /// ACO: ants per iteration.
    #[arg(long, default_value_t = AcoParams::default().colony_size)]
    colsize: usize,
    /// ACO: pheromone decay.
    #[arg(long, default_value_t = AcoParams::default().rho)]
    rho: f64,
    /// Stop after this many iterations without improvement.
    #[arg(long, default_value_t = StopTracker::DEFAULT_PATIENCE)]
    patience: usize,
    /// Hard cap on iterations per run.
    #[arg(long)]
    max_iterations: Option<usize>,
    /// Constructions tried for the initial tree.
    #[arg(long, default_value_t = DEFAULT_INIT_ATTEMPTS)]
    init_attempts: usize,
    /// Generate uniform instances with this many points instead of reading a file.
    #[arg(long, value_name = "N")]
    gen: Option<usize>,
    /// Number of generated instances.
    #[arg(long, default_value_t = 1, requires = "gen")]
    gen_count: usize,
    /// Seed of the first generated instance.
    #[arg(long, default_value_t = 0, requires = "gen")]
    gen_seed: u64,
    /// CSV output path.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Directory for SVG drawings of the best trees.
    #[arg(long)]
    svg: Option<PathBuf>,
}

/// Parses `args`, the first element being the program name.
pub fn load_config<I, T>(args: I) -> Result<SolverConfig>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let a = Args::try_parse_from(args)?;
    at_least("d", a.hop_bound, 1)?;
    at_least("runs", a.runs, 1)?;
    at_least("kmax", a.kmax, 1)?;
    at_least("pop", a.pop, 2)?;
    at_least("offsp", a.offsp, 1)?;
    at_least("colsize", a.colsize, 1)?;
    at_least("patience", a.patience, 1)?;
    at_least("init-attempts", a.init_attempts, 1)?;
    if let Some(nr) = a.nr {
        at_least("nr", nr, 1)?;
    }
    if let Some(limit) = a.max_iterations {
        at_least("max-iterations", limit, 1)?;
    }
    if let Some(n) = a.gen {
        at_least("gen", n, 2)?;
        at_least("gen-count", a.gen_count, 1)?;
    }
    probability("pm", a.pm)?;
    probability("pls", a.pls)?;
    if !(a.rho > 0.0 && a.rho < 1.0) {
        return Err(out_of_range("rho", a.rho, "a value strictly between 0 and 1"));
    }
    let source = match (a.file, a.gen) {
        (Some(path), _) => Some(Source::File(path)),
        (None, Some(n)) => Some(Source::Generated {
            n,
            count: a.gen_count,
            seed: a.gen_seed,
        }),
        (None, None) => None,
    };
    Ok(SolverConfig {
        algo: a.algo,
        source,
        nr: a.nr,
        hop_bound: a.hop_bound,
        runs: a.runs,
        seed: a.seed,
        vns: VnsParams { k_max: a.kmax },
        gls: GlsParams {
            pop_size: a.pop,
            offspring_size: a.offsp,
            mutation_prob: a.pm,
            local_search_prob: a.pls,
        },
        aco: AcoParams {
            colony_size: a.colsize,
            rho: a.rho,
        },
        patience: a.patience,
        max_iterations: a.max_iterations,
        init_attempts: a.init_attempts,
        out: a.out,
        svg: a.svg,
    })
}

fn at_least(flag: &'static str, value: usize, min: usize) -> Result<()> {
    if value < min {
        let expected = match min {
            1 => "a value of at least 1",
            _ => "a value of at least 2",
        };
        return Err(out_of_range(flag, value, expected));
    }
    Ok(())
}

fn probability(flag: &'static str, p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(out_of_range(flag, p, "a probability in [0, 1]"));
    }
    Ok(())
}

fn out_of_range(flag: &'static str, value: impl ToString, expected: &'static str) -> Error {
    Error::OutOfRange {
        flag,
        value: value.to_string(),
        expected,
    }
}
