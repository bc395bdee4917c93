use rand::seq::index;
use rand::Rng;

use crate::analysis::match_capacity;
use crate::error::{LfcsError, Result};
use crate::lcs::LcsKernel;
use crate::rng::rng_from_seed;
use crate::sequence::Instance;
use crate::solution::{evaluate_solution, DeletionSolution, ScoredSolution};

pub const DEFAULT_SAMPLE_COUNT: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SamplerConfig {
    sample_count: usize,
    seed: u64,
}

impl SamplerConfig {
    pub fn new(sample_count: usize, seed: u64) -> Result<Self> {
        if sample_count == 0 {
            return Err(LfcsError::InvalidConfig("sample count must be at least 1".into()));
        }
        Ok(SamplerConfig { sample_count, seed })
    }

    pub fn with_seed(seed: u64) -> Self {
        SamplerConfig {
            sample_count: DEFAULT_SAMPLE_COUNT,
            seed,
        }
    }

    pub fn sample_count(&self) -> usize {
        self.sample_count
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }
}

impl Default for SamplerConfig {
    fn default() -> Self {
        SamplerConfig::with_seed(0)
    }
}

/// Draws maximally matched deletion sets uniformly at random: for every
/// symbol, a uniform `m(σ)`-subset of its positions in `A`.
#[derive(Debug, Clone)]
pub struct UniformSampler<'a> {
    instance: &'a Instance,
    /// `(positions of σ in A, m(σ))` for every symbol with `m(σ) > 0`.
    groups: Vec<(Vec<usize>, usize)>,
    matched: usize,
    kernel: LcsKernel,
    mask: Vec<bool>,
}

impl<'a> UniformSampler<'a> {
    pub fn new(instance: &'a Instance) -> Self {
        let a = instance.a();
        let capacity = match_capacity(instance);
        let groups = capacity
            .active()
            .map(|(symbol, _, m)| {
                let positions = a
                    .iter()
                    .enumerate()
                    .filter(|(_, s)| **s == symbol)
                    .map(|(i, _)| i)
                    .collect();
                (positions, m)
            })
            .collect();
        UniformSampler {
            instance,
            groups,
            matched: capacity.total(),
            kernel: LcsKernel::new(),
            mask: vec![false; a.len()],
        }
    }

    /// Fills the internal mask with a fresh draw and returns its value.
    fn draw_value<R: Rng + ?Sized>(&mut self, rng: &mut R) -> usize {
        self.mask.iter_mut().for_each(|d| *d = false);
        for (positions, m) in &self.groups {
            for k in index::sample(rng, positions.len(), *m) {
                self.mask[positions[k]] = true;
            }
        }
        let lcs = self.kernel.length(
            self.instance
                .a()
                .iter()
                .zip(&self.mask)
                .filter(|(_, &d)| !d)
                .map(|(s, _)| s),
            self.instance.b(),
        );
        self.matched + lcs
    }

    /// One uniformly drawn maximally matched solution. No alignment witness
    /// is attached.
    pub fn sample<R: Rng + ?Sized>(&mut self, rng: &mut R) -> ScoredSolution {
        let value = self.draw_value(rng);
        ScoredSolution::new(DeletionSolution::from_mask(&self.mask), value, None)
    }
}

pub fn sample_random_solution<R: Rng + ?Sized>(instance: &Instance, rng: &mut R) -> ScoredSolution {
    UniformSampler::new(instance).sample(rng)
}

/// Best of `sample_count` independent uniform draws; the earliest draw wins ties.
pub fn random_sampling_solver(instance: &Instance, cfg: &SamplerConfig) -> ScoredSolution {
    let mut rng = rng_from_seed(cfg.seed);
    let mut sampler = UniformSampler::new(instance);
    let mut best: Option<(usize, Vec<bool>)> = None;
    for _ in 0..cfg.sample_count {
        let value = sampler.draw_value(&mut rng);
        if best.as_ref().is_none_or(|(v, _)| value > *v) {
            best = Some((value, sampler.mask.clone()));
        }
        if value == sampler.matched + instance.b().len().min(instance.a().len() - sampler.matched) {
            // Nothing can beat a remainder fully aligned with B.
            break;
        }
    }
    let (value, mask) = best.expect("sample count is at least 1");
    let scored = evaluate_solution(instance, &DeletionSolution::from_mask(&mask)).expect("draws respect capacity");
    debug_assert_eq!(scored.value(), value);
    scored
}
