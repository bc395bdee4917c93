//! Optimum values from an out-of-process MILP solver.
//!
//! The solver is any command that takes the path of an LP-format file as
//! its last argument and prints the optimal objective value on the last
//! non-empty line of its standard output.

use std::io::Write;
use std::process::Command;

use lfcs_core::exact::{build_ilp, export_lp};
use lfcs_core::Instance;

#[derive(Debug, thiserror::Error)]
pub enum SolverError {
    #[error("empty solver command")]
    EmptyCommand,
    #[error("i/o while running the solver: {0}")]
    Io(#[from] std::io::Error),
    #[error("solver exited with {status}: {stderr}")]
    Failed {
        status: std::process::ExitStatus,
        stderr: String,
    },
    #[error("could not read an objective value from solver output {0:?}")]
    BadOutput(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpSolver {
    program: String,
    args: Vec<String>,
}

impl LpSolver {
    /// Parses a whitespace-separated command line such as
    /// `python3 scripts/solve_lp.py`.
    pub fn from_command_line(cmd: &str) -> Result<Self, SolverError> {
        let mut parts = cmd.split_whitespace().map(str::to_string);
        let program = parts.next().ok_or(SolverError::EmptyCommand)?;
        Ok(LpSolver {
            program,
            args: parts.collect(),
        })
    }

    /// Exports the instance's model to a temporary `.lp` file and returns
    /// the solver's optimal objective.
    pub fn optimum(&self, instance: &Instance) -> Result<usize, SolverError> {
        let mut file = tempfile::Builder::new().prefix("lfcs-").suffix(".lp").tempfile()?;
        export_lp(&build_ilp(instance), &mut file)?;
        file.flush()?;
        self.solve_file(file.path())
    }

    pub fn solve_file(&self, path: &std::path::Path) -> Result<usize, SolverError> {
        let output = Command::new(&self.program).args(&self.args).arg(path).output()?;
        if !output.status.success() {
            return Err(SolverError::Failed {
                status: output.status,
                stderr: String::from_utf8_lossy(&output.stderr).trim().to_string(),
            });
        }
        let stdout = String::from_utf8_lossy(&output.stdout);
        let last = stdout.lines().rev().find(|l| !l.trim().is_empty()).unwrap_or("").trim();
        let value: f64 = last.parse().map_err(|_| SolverError::BadOutput(last.to_string()))?;
        let rounded = value.round();
        if !(rounded >= 0.0 && (value - rounded).abs() < 1e-6) {
            return Err(SolverError::BadOutput(last.to_string()));
        }
        Ok(rounded as usize)
    }
}
