use crate::error::{LfcsError, Result};
use crate::lcs::{lcs_length, LcsKernel};
use crate::sequence::{Instance, Symbol};
use crate::solution::{evaluate_solution, masked_value, DeletionSolution, ScoredSolution};

/// Windows wider than this would need more than 2^24 subsets each.
pub const MAX_WINDOW: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LocalSearchConfig {
    window: usize,
}

impl LocalSearchConfig {
    pub fn new(window: usize) -> Result<Self> {
        if window == 0 || window > MAX_WINDOW {
            return Err(LfcsError::InvalidConfig(format!(
                "window length must be in 1..={MAX_WINDOW}, got {window}"
            )));
        }
        Ok(LocalSearchConfig { window })
    }

    pub fn window(&self) -> usize {
        self.window
    }
}

/// A finished local-search run with its per-iteration history.
#[derive(Debug, Clone)]
pub struct LocalSearchRun {
    pub best: ScoredSolution,
    /// Incumbent value before the first iteration and after every committed one.
    pub values: Vec<usize>,
    /// One entry per iteration, including the final one that found no improvement.
    pub iterations: Vec<IterationStats>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IterationStats {
    /// Symbols of `A` still present when the iteration started.
    pub string_len: usize,
    /// Candidates evaluated (one LCS computation each).
    pub evaluations: usize,
}

impl LocalSearchRun {
    pub fn committed_iterations(&self) -> usize {
        self.values.len() - 1
    }
}

/// Sliding-window hill climbing.
pub fn local_search_sk(instance: &Instance, cfg: &LocalSearchConfig) -> ScoredSolution {
    local_search_sk_traced(instance, cfg).best
}

/// Starts from the empty deletion set. Each iteration slides a window of
/// `k` consecutive positions over the symbols of `A` still present, tries
/// every non-empty subset of the window that the remaining supply of `M`
/// can cover, and commits the best candidate if it strictly raises the
/// value. Leftmost window, then smallest subset bitmask, wins ties.
/// Deletions are never undone.
pub fn local_search_sk_traced(instance: &Instance, cfg: &LocalSearchConfig) -> LocalSearchRun {
    let a = instance.a();
    let mut remaining: Vec<usize> = (0..instance.alphabet_size())
        .map(|id| instance.multiset().count(Symbol(id as u16)))
        .collect();
    let mut current: Vec<usize> = (0..a.len()).collect();
    let mut deleted = vec![false; a.len()];
    let mut value = lcs_length(a, instance.b());

    let mut kernel = LcsKernel::new();
    let mut used = vec![0usize; instance.alphabet_size()];
    let mut values = vec![value];
    let mut iterations = Vec::new();

    loop {
        let w = cfg.window.min(current.len());
        let mut best: Option<(usize, usize, u32)> = None;
        let mut evaluated = 0;
        if w > 0 {
            for start in 0..=current.len() - w {
                let window = &current[start..start + w];
                for subset in 1u32..1 << w {
                    let picks = || (0..w).filter(move |b| subset >> b & 1 == 1).map(|b| window[b]);
                    let fits = picks().all(|i| {
                        let s = a[i].id();
                        used[s] += 1;
                        used[s] <= remaining[s]
                    });
                    picks().for_each(|i| used[a[i].id()] = 0);
                    if !fits {
                        continue;
                    }

                    picks().for_each(|i| deleted[i] = true);
                    let candidate = masked_value(instance, &deleted, &mut kernel);
                    picks().for_each(|i| deleted[i] = false);
                    evaluated += 1;

                    if candidate > best.map_or(value, |(v, _, _)| v) {
                        best = Some((candidate, start, subset));
                    }
                }
            }
        }
        iterations.push(IterationStats {
            string_len: current.len(),
            evaluations: evaluated,
        });

        let Some((new_value, start, subset)) = best else {
            break;
        };
        let picks: Vec<usize> = (0..w)
            .filter(|b| subset >> b & 1 == 1)
            .map(|b| current[start + b])
            .collect();
        for &i in &picks {
            deleted[i] = true;
            remaining[a[i].id()] -= 1;
        }
        current.retain(|&i| !deleted[i]);
        value = new_value;
        values.push(value);
    }

    let best = evaluate_solution(instance, &DeletionSolution::from_mask(&deleted)).expect("deletions respect capacity");
    debug_assert_eq!(best.value(), value);
    LocalSearchRun {
        best,
        values,
        iterations,
    }
}
