//! Experiment harness for the LFCS solvers: runs the heuristics against
//! exact optima over a grid of generated instances and aggregates the
//! results into CSV tables.

pub mod algorithm;
pub mod experiment;
pub mod external;
pub mod records;
pub mod summary;

pub use algorithm::Algorithm;
pub use experiment::{run_experiment, ExperimentConfig, ExperimentError, ExperimentRun};
pub use external::{LpSolver, SolverError};
pub use records::{read_csv, write_csv, ExperimentRecord, SummaryRow};
pub use summary::summarize;
