use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use serde::Serialize;

use lfcs_bench::experiment::{cell_config, DEFAULT_SPACE_LIMIT};
use lfcs_bench::{
    read_csv, run_experiment, summarize, write_csv, Algorithm, ExperimentConfig, ExperimentRecord, LpSolver,
};
use lfcs_core::exact::{build_ilp, export_lp, solve_brute_force_reference, solve_enumeration};
use lfcs_core::generator::{batch_seed, generate_batch};
use lfcs_core::heuristics::{
    local_search_sk, random_sampling_solver, LocalSearchConfig, SamplerConfig, DEFAULT_SAMPLE_COUNT,
};
use lfcs_core::{bounds, evaluate_solution, search_space_size, Instance};

#[derive(Parser)]
#[command(
    name = "lfcs",
    version,
    about = "Solvers and experiments for the longest filled common subsequence problem"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a batch of random instances into a directory.
    Generate {
        #[arg(long)]
        n: usize,
        /// Alphabet size is n / divisor.
        #[arg(long, default_value_t = 8)]
        divisor: usize,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, env = "LFCS_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Solve one instance and print its value, deleted positions and alignment.
    Solve {
        #[arg(long)]
        instance: PathBuf,
        /// enumeration, brute, rand or S<k>.
        #[arg(long, default_value = "enumeration")]
        alg: String,
        #[arg(long, default_value_t = DEFAULT_SAMPLE_COUNT)]
        samples: usize,
        #[arg(long, env = "LFCS_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_SPACE_LIMIT)]
        space_limit: u64,
    },
    /// Print the LCS lower bound and the capacity upper bound.
    Bounds {
        #[arg(long)]
        instance: PathBuf,
    },
    /// Print the number of maximal deletion sets.
    Space {
        #[arg(long)]
        instance: PathBuf,
    },
    /// Write the integer program of an instance in CPLEX LP format.
    ExportIlp {
        #[arg(long)]
        instance: PathBuf,
        /// Defaults to the instance path with an `.lp` extension.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run every algorithm over an (n, divisor) grid and write one record per
    /// instance and algorithm.
    Experiment {
        #[arg(long, value_delimiter = ',', default_values_t = [16usize, 32, 48, 64, 80])]
        n: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_values_t = [8usize, 4, 2])]
        divisors: Vec<usize>,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, env = "LFCS_SEED", default_value_t = 0)]
        seed: u64,
        /// Heuristics to run; the optimum is always computed.
        #[arg(long, value_delimiter = ',', default_value = "rand,S1,S2,S4")]
        algs: Vec<Algorithm>,
        #[arg(long, default_value_t = DEFAULT_SAMPLE_COUNT)]
        samples: usize,
        /// Largest search space solved by enumeration.
        #[arg(long, default_value_t = DEFAULT_SPACE_LIMIT)]
        space_limit: u64,
        /// Command that solves an LP file and prints its optimum, used beyond
        /// the space limit (e.g. "python3 scripts/solve_lp.py"). Without it
        /// such optima are left empty.
        #[arg(long)]
        lp_solver: Option<String>,
        /// Fill the wall_time_ms column (makes output non-reproducible).
        #[arg(long)]
        record_timings: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Aggregate a records CSV into per-cell optimum hits and normalized
    /// averages. The average is Σ value / Σ optimum over the cell (a ratio of
    /// sums), not the mean of per-instance ratios.
    Summarize {
        #[arg(long)]
        records: PathBuf,
        /// Defaults to standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Serialize)]
struct ManifestRow {
    instance_id: usize,
    seed: u64,
    n: usize,
    alphabet_size: usize,
    b_len: usize,
    m_len: usize,
}

fn load(path: &Path) -> Result<Instance> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Instance::parse(&text).with_context(|| format!("parsing {}", path.display()))
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn run(cli: Cli) -> Result<()> {
    let mut stdout = io::stdout().lock();
    match cli.command {
        Command::Generate {
            n,
            divisor,
            count,
            seed,
            out,
        } => {
            let cfg = cell_config(n, divisor, seed).map_err(anyhow::Error::msg)?;
            let batch = generate_batch(&cfg, count)?;
            fs::create_dir_all(&out).with_context(|| format!("creating {}", out.display()))?;
            let mut manifest = Vec::with_capacity(count);
            for (id, inst) in batch.iter().enumerate() {
                fs::write(out.join(format!("instance_{id:04}.txt")), inst.to_text())?;
                manifest.push(ManifestRow {
                    instance_id: id,
                    seed: batch_seed(seed, id),
                    n: inst.a().len(),
                    alphabet_size: inst.alphabet_size(),
                    b_len: inst.b().len(),
                    m_len: inst.multiset().len(),
                });
            }
            write_csv(&manifest, File::create(out.join("manifest.csv"))?)?;
        }
        Command::Solve {
            instance,
            alg,
            samples,
            seed,
            space_limit,
        } => {
            let inst = load(&instance)?;
            let scored = match alg.as_str() {
                "brute" => {
                    writeln!(stdout, "{}", solve_brute_force_reference(&inst))?;
                    return Ok(());
                }
                _ => match alg.parse::<Algorithm>()? {
                    Algorithm::Enumeration => solve_enumeration(&inst, space_limit)?,
                    Algorithm::Rand => random_sampling_solver(&inst, &SamplerConfig::new(samples, seed)?),
                    Algorithm::Sk(k) => local_search_sk(&inst, &LocalSearchConfig::new(k)?),
                    Algorithm::Ilp => bail!("use export-ilp and an external solver for the integer program"),
                },
            };
            let scored = match scored.alignment() {
                Some(_) => scored,
                None => evaluate_solution(&inst, scored.solution())?,
            };
            writeln!(stdout, "{}", scored.value())?;
            writeln!(stdout, "deleted: {}", join(scored.solution().deleted()))?;
            let pairs = scored.alignment().unwrap_or_default();
            writeln!(
                stdout,
                "alignment: {}",
                join(pairs.iter().map(|(i, j)| format!("{i}:{j}")))
            )?;
        }
        Command::Bounds { instance } => {
            let b = bounds(&load(&instance)?);
            writeln!(stdout, "lower {}\nupper {}", b.lower, b.upper)?;
        }
        Command::Space { instance } => {
            writeln!(stdout, "{}", search_space_size(&load(&instance)?))?;
        }
        Command::ExportIlp { instance, out } => {
            let inst = load(&instance)?;
            let out = out.unwrap_or_else(|| instance.with_extension("lp"));
            let mut sink = BufWriter::new(File::create(&out).with_context(|| format!("creating {}", out.display()))?);
            export_lp(&build_ilp(&inst), &mut sink)?;
            sink.flush()?;
        }
        Command::Experiment {
            n,
            divisors,
            count,
            seed,
            algs,
            samples,
            space_limit,
            lp_solver,
            record_timings,
            out,
        } => {
            let mut cfg = ExperimentConfig::new(n, divisors, count, seed);
            cfg.algorithms = algs;
            cfg.sample_count = samples;
            cfg.space_limit = space_limit;
            cfg.lp_solver = lp_solver.as_deref().map(LpSolver::from_command_line).transpose()?;
            cfg.record_timings = record_timings;
            let run = run_experiment(&cfg)?;
            for w in &run.warnings {
                eprintln!("warning: skipped cell n={} divisor={}: {}", w.n, w.divisor, w.reason);
            }
            let unknown = run
                .records
                .iter()
                .filter(|r| r.optimum.is_none() && r.algorithm.is_optimum_source())
                .count();
            if unknown > 0 {
                eprintln!("warning: {unknown} instance(s) exceed the space limit; their optimum is unknown");
            }
            write_csv(
                &run.records,
                BufWriter::new(File::create(&out).with_context(|| format!("creating {}", out.display()))?),
            )?;
        }
        Command::Summarize { records, out } => {
            let file = File::open(&records).with_context(|| format!("opening {}", records.display()))?;
            let recs: Vec<ExperimentRecord> = read_csv(file)?;
            let rows = summarize(&recs);
            match out {
                Some(path) => write_csv(&rows, BufWriter::new(File::create(path)?))?,
                None => write_csv(&rows, &mut stdout)?,
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
