//! Procedural benchmark instances.
//!
//! `A` is uniform over the alphabet. A copy of `A` is mutated position by
//! position (duplication, deletion or substitution), cut into short
//! segments, and a fraction of the segments is moved into `M`; the rest,
//! in order, form `B`.

use std::ops::Range;

use rand::seq::index;
use rand::Rng;

use crate::error::{LfcsError, Result};
use crate::rng::{derive_seed, rng_from_seed};
use crate::sequence::{Instance, Sequence, Symbol, SymbolMultiset, MAX_ALPHABET};

pub const DEFAULT_MUTATION_PROB: f64 = 0.5;
pub const DEFAULT_DISCARD_FRACTION: f64 = 0.35;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenConfig {
    pub n: usize,
    pub alphabet_size: usize,
    pub mutation_prob: f64,
    pub max_segment_len: usize,
    pub discard_fraction: f64,
    pub seed: u64,
}

impl GenConfig {
    /// Default settings: mutation probability 0.5, segments of at most
    /// `max(1, n / 8)` symbols, 35% of segments discarded.
    pub fn new(n: usize, alphabet_size: usize, seed: u64) -> Self {
        GenConfig {
            n,
            alphabet_size,
            mutation_prob: DEFAULT_MUTATION_PROB,
            max_segment_len: (n / 8).max(1),
            discard_fraction: DEFAULT_DISCARD_FRACTION,
            seed,
        }
    }

    pub fn with_seed(self, seed: u64) -> Self {
        GenConfig { seed, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(LfcsError::InvalidConfig(msg));
        if self.n == 0 {
            return fail("n must be positive".into());
        }
        if self.alphabet_size == 0 || self.alphabet_size > MAX_ALPHABET {
            return fail(format!(
                "alphabet size must be in 1..={MAX_ALPHABET}, got {}",
                self.alphabet_size
            ));
        }
        if !(0.0..=1.0).contains(&self.mutation_prob) {
            return fail(format!("mutation probability {} is not in [0, 1]", self.mutation_prob));
        }
        if self.max_segment_len == 0 {
            return fail("maximum segment length must be positive".into());
        }
        if !(self.discard_fraction > 0.0 && self.discard_fraction <= 1.0) {
            return fail(format!("discard fraction {} is not in (0, 1]", self.discard_fraction));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct MutationCounts {
    pub duplication: usize,
    pub deletion: usize,
    pub substitution: usize,
}

impl MutationCounts {
    pub fn total(&self) -> usize {
        self.duplication + self.deletion + self.substitution
    }
}

/// A generated instance together with the intermediate string and the cut.
#[derive(Debug, Clone)]
pub struct Generated {
    pub instance: Instance,
    /// The mutated copy of `A` before segments were removed.
    pub mutated: Vec<Symbol>,
    /// Consecutive segments of `mutated`, each flagged when discarded into `M`.
    pub segments: Vec<(Range<usize>, bool)>,
    pub mutations: MutationCounts,
}

pub fn generate_instance(cfg: &GenConfig) -> Result<Instance> {
    generate_detailed(cfg).map(|g| g.instance)
}

pub fn generate_detailed(cfg: &GenConfig) -> Result<Generated> {
    cfg.validate()?;
    let mut rng = rng_from_seed(cfg.seed);
    let sigma = cfg.alphabet_size;

    let a: Vec<Symbol> = (0..cfg.n).map(|_| Symbol(rng.gen_range(0..sigma) as u16)).collect();

    let mut mutated = Vec::with_capacity(cfg.n * 3 / 2);
    let mut mutations = MutationCounts::default();
    for &s in &a {
        if !rng.gen_bool(cfg.mutation_prob) {
            mutated.push(s);
            continue;
        }
        // A single-symbol alphabet has no substitute; redraw the kind.
        let kind = loop {
            let k = rng.gen_range(0..3);
            if k != 2 || sigma > 1 {
                break k;
            }
        };
        match kind {
            0 => {
                mutations.duplication += 1;
                mutated.extend([s, s]);
            }
            1 => mutations.deletion += 1,
            _ => {
                mutations.substitution += 1;
                let r = rng.gen_range(0..sigma - 1) as u16;
                mutated.push(Symbol(if r >= s.0 { r + 1 } else { r }));
            }
        }
    }

    let mut segments = Vec::new();
    let mut start = 0;
    while start < mutated.len() {
        let len = rng.gen_range(1..=cfg.max_segment_len);
        let end = (start + len).min(mutated.len());
        segments.push((start..end, false));
        start = end;
    }
    let discard = ((cfg.discard_fraction * segments.len() as f64).ceil() as usize).min(segments.len());
    for k in index::sample(&mut rng, segments.len(), discard) {
        segments[k].1 = true;
    }

    let mut b = Vec::with_capacity(mutated.len());
    let mut m = SymbolMultiset::new();
    for (range, discarded) in &segments {
        let part = &mutated[range.clone()];
        if *discarded {
            part.iter().for_each(|&s| m.insert(s));
        } else {
            b.extend_from_slice(part);
        }
    }

    let instance = Instance::new(Sequence::new(a), Sequence::new(b), m, sigma)?;
    Ok(Generated {
        instance,
        mutated,
        segments,
        mutations,
    })
}

/// Seed of the `index`-th instance of a batch.
pub fn batch_seed(master: u64, index: usize) -> u64 {
    derive_seed(master, index as u64)
}

/// `count` instances whose seeds are derived from `cfg.seed`.
pub fn generate_batch(cfg: &GenConfig, count: usize) -> Result<Vec<Instance>> {
    if count == 0 {
        return Err(LfcsError::InvalidConfig("batch count must be at least 1".into()));
    }
    (0..count)
        .map(|k| generate_instance(&cfg.with_seed(batch_seed(cfg.seed, k))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_invalid_configs() {
        assert!(generate_instance(&GenConfig::new(0, 2, 1)).is_err());
        assert!(generate_instance(&GenConfig::new(8, 0, 1)).is_err());
        let mut c = GenConfig::new(8, 2, 1);
        c.discard_fraction = 0.0;
        assert!(c.validate().is_err());
        c.discard_fraction = 0.35;
        c.mutation_prob = 1.5;
        assert!(c.validate().is_err());
        c.mutation_prob = 0.5;
        c.max_segment_len = 0;
        assert!(c.validate().is_err());
    }

    #[test]
    fn default_segment_cap() {
        assert_eq!(GenConfig::new(80, 10, 0).max_segment_len, 10);
        assert_eq!(GenConfig::new(5, 2, 0).max_segment_len, 1);
    }

    #[test]
    fn deterministic_for_seed() {
        let cfg = GenConfig::new(16, 2, 1234);
        assert_eq!(generate_instance(&cfg).unwrap(), generate_instance(&cfg).unwrap());
        assert_ne!(
            generate_instance(&cfg).unwrap(),
            generate_instance(&cfg.with_seed(1235)).unwrap()
        );
    }

    #[test]
    fn single_symbol_alphabet_never_substitutes() {
        let mut cfg = GenConfig::new(64, 1, 5);
        cfg.mutation_prob = 1.0;
        let g = generate_detailed(&cfg).unwrap();
        assert_eq!(g.mutations.substitution, 0);
        assert_eq!(g.mutations.total(), 64);
    }

    #[test]
    fn segments_tile_the_mutated_string() {
        for seed in 0..200 {
            let g = generate_detailed(&GenConfig::new(32, 4, seed)).unwrap();
            let mut next = 0;
            for (r, _) in &g.segments {
                assert_eq!(r.start, next);
                assert!(!r.is_empty() && r.len() <= 4);
                next = r.end;
            }
            assert_eq!(next, g.mutated.len());

            let discarded = g.segments.iter().filter(|(_, d)| *d).count();
            assert_eq!(discarded, (0.35 * g.segments.len() as f64).ceil() as usize);

            let mut total: SymbolMultiset = g.instance.b().iter().collect();
            for (s, c) in g.instance.multiset().iter() {
                total.insert_many(s, c);
            }
            let pre: SymbolMultiset = g.mutated.iter().collect();
            assert_eq!(total, pre);
        }
    }

    #[test]
    fn batch_uses_derived_seeds() {
        let cfg = GenConfig::new(16, 2, 77);
        let batch = generate_batch(&cfg, 3).unwrap();
        assert_eq!(batch.len(), 3);
        assert_eq!(batch[0], generate_instance(&cfg.with_seed(batch_seed(77, 0))).unwrap());
        assert!(generate_batch(&cfg, 0).is_err());
    }
}
