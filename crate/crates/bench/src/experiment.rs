//! The benchmark matrix: for every `(n, divisor)` cell, generate a batch of
//! instances with alphabet size `n / divisor`, compute each optimum, and
//! run every heuristic on the same instances.

use std::time::Instant;

use num_traits::ToPrimitive;
use rayon::prelude::*;

use lfcs_core::exact::solve_enumeration;
use lfcs_core::generator::{batch_seed, generate_instance, GenConfig};
use lfcs_core::heuristics::{local_search_sk, random_sampling_solver, LocalSearchConfig, SamplerConfig};
use lfcs_core::rng::derive_seed;
use lfcs_core::{search_space_size, Instance, LfcsError};

use crate::algorithm::Algorithm;
use crate::external::{LpSolver, SolverError};
use crate::records::ExperimentRecord;

pub const DEFAULT_SPACE_LIMIT: u64 = 10_000_000;
pub const DEFAULT_NS: [usize; 5] = [16, 32, 48, 64, 80];
pub const DEFAULT_DIVISORS: [usize; 3] = [8, 4, 2];

/// Stream id of the sampler's seed within an instance's seed.
const RAND_STREAM: u64 = 1;

#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    pub ns: Vec<usize>,
    pub divisors: Vec<usize>,
    /// Instances per cell.
    pub count: usize,
    pub master_seed: u64,
    /// Heuristics to run; optimum sources are added automatically.
    pub algorithms: Vec<Algorithm>,
    pub sample_count: usize,
    /// Largest search space solved by enumeration.
    pub space_limit: u64,
    /// Solver for instances whose space exceeds `space_limit`.
    pub lp_solver: Option<LpSolver>,
    /// Fill `wall_time_ms`; off by default so reruns are byte-identical.
    pub record_timings: bool,
}

impl ExperimentConfig {
    pub fn new(ns: Vec<usize>, divisors: Vec<usize>, count: usize, master_seed: u64) -> Self {
        ExperimentConfig {
            ns,
            divisors,
            count,
            master_seed,
            algorithms: vec![Algorithm::Rand, Algorithm::Sk(1), Algorithm::Sk(2), Algorithm::Sk(4)],
            sample_count: lfcs_core::heuristics::DEFAULT_SAMPLE_COUNT,
            space_limit: DEFAULT_SPACE_LIMIT,
            lp_solver: None,
            record_timings: false,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum ExperimentError {
    #[error("algorithm {0} cannot be run as a heuristic")]
    NotAHeuristic(Algorithm),
    #[error(transparent)]
    Core(#[from] LfcsError),
    #[error("external solver on n={n}, divisor={divisor}, instance {instance_id}: {source}")]
    Solver {
        n: usize,
        divisor: usize,
        instance_id: usize,
        source: SolverError,
    },
}

/// A cell that was not run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellWarning {
    pub n: usize,
    pub divisor: usize,
    pub reason: String,
}

#[derive(Debug, Clone, Default)]
pub struct ExperimentRun {
    /// Sorted by `(n, divisor, instance_id, algorithm)`.
    pub records: Vec<ExperimentRecord>,
    pub warnings: Vec<CellWarning>,
}

/// Seed of the batch for one cell.
pub fn cell_seed(master: u64, n: usize, divisor: usize) -> u64 {
    derive_seed(master, ((n as u64) << 32) | divisor as u64)
}

/// Generator settings of a cell.
pub fn cell_config(n: usize, divisor: usize, seed: u64) -> Result<GenConfig, String> {
    if divisor == 0 || n == 0 || !n.is_multiple_of(divisor) {
        return Err(format!("n = {n} is not a positive multiple of divisor {divisor}"));
    }
    Ok(GenConfig::new(n, n / divisor, seed))
}

/// Rebuilds the instance a record was produced from.
pub fn regenerate(record: &ExperimentRecord) -> Result<Instance, LfcsError> {
    let cfg = cell_config(record.n, record.alphabet_divisor, record.seed).map_err(LfcsError::InvalidConfig)?;
    generate_instance(&cfg)
}

pub fn run_experiment(cfg: &ExperimentConfig) -> Result<ExperimentRun, ExperimentError> {
    let mut sk_configs = Vec::new();
    for &alg in &cfg.algorithms {
        match alg {
            Algorithm::Sk(k) => sk_configs.push((alg, LocalSearchConfig::new(k)?)),
            Algorithm::Rand => {}
            other => return Err(ExperimentError::NotAHeuristic(other)),
        }
    }
    SamplerConfig::new(cfg.sample_count, 0)?;

    let mut run = ExperimentRun::default();
    for &n in &cfg.ns {
        for &divisor in &cfg.divisors {
            let master = cell_seed(cfg.master_seed, n, divisor);
            let gen = match cell_config(n, divisor, master) {
                Ok(g) => g,
                Err(reason) => {
                    run.warnings.push(CellWarning { n, divisor, reason });
                    continue;
                }
            };
            let cell: Vec<Vec<ExperimentRecord>> = (0..cfg.count)
                .into_par_iter()
                .map(|id| {
                    let seed = batch_seed(master, id);
                    let instance = generate_instance(&gen.with_seed(seed))?;
                    run_instance(cfg, &sk_configs, &instance, n, divisor, id, seed)
                })
                .collect::<Result<_, ExperimentError>>()?;
            run.records.extend(cell.into_iter().flatten());
        }
    }
    run.records.sort_by_key(|r| r.sort_key());
    Ok(run)
}

fn run_instance(
    cfg: &ExperimentConfig,
    sk_configs: &[(Algorithm, LocalSearchConfig)],
    instance: &Instance,
    n: usize,
    divisor: usize,
    instance_id: usize,
    seed: u64,
) -> Result<Vec<ExperimentRecord>, ExperimentError> {
    let record = |algorithm, value, optimum, started: Instant| ExperimentRecord {
        n,
        alphabet_divisor: divisor,
        instance_id,
        seed,
        algorithm,
        value,
        optimum,
        wall_time_ms: cfg
            .record_timings
            .then(|| (started.elapsed().as_secs_f64() * 1e6).round() / 1e3),
    };

    let mut records = Vec::with_capacity(cfg.algorithms.len() + 1);
    let started = Instant::now();
    let within_limit = search_space_size(instance)
        .to_u64()
        .is_some_and(|s| s <= cfg.space_limit);
    let (source, optimum) = if within_limit {
        let best = solve_enumeration(instance, cfg.space_limit)?;
        (Algorithm::Enumeration, Some(best.value()))
    } else if let Some(solver) = &cfg.lp_solver {
        let value = solver.optimum(instance).map_err(|source| ExperimentError::Solver {
            n,
            divisor,
            instance_id,
            source,
        })?;
        (Algorithm::Ilp, Some(value))
    } else {
        (Algorithm::Enumeration, None)
    };
    records.push(record(source, optimum, optimum, started));

    for &alg in &cfg.algorithms {
        let started = Instant::now();
        let value = match alg {
            Algorithm::Rand => {
                let sampler = SamplerConfig::new(cfg.sample_count, derive_seed(seed, RAND_STREAM))?;
                random_sampling_solver(instance, &sampler).value()
            }
            Algorithm::Sk(_) => {
                let (_, ls) = sk_configs.iter().find(|(a, _)| *a == alg).expect("validated above");
                local_search_sk(instance, ls).value()
            }
            other => return Err(ExperimentError::NotAHeuristic(other)),
        };
        records.push(record(alg, Some(value), optimum, started));
    }
    Ok(records)
}
