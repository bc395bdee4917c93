//! Heuristic solvers: best-of uniform sampling over maximally matched
//! deletion sets, and sliding-window local search.

mod local_search;
mod sampling;

pub use local_search::{
    local_search_sk, local_search_sk_traced, IterationStats, LocalSearchConfig, LocalSearchRun, MAX_WINDOW,
};
pub use sampling::{
    random_sampling_solver, sample_random_solution, SamplerConfig, UniformSampler, DEFAULT_SAMPLE_COUNT,
};
