use num_traits::ToPrimitive;

use crate::analysis::{match_capacity, search_space_size};
use crate::error::{LfcsError, Result};
use crate::lcs::LcsKernel;
use crate::sequence::Instance;
use crate::solution::{evaluate_solution, masked_value, DeletionSolution, ScoredSolution};

/// Outcome of an exhaustive enumeration.
#[derive(Debug, Clone)]
pub struct EnumerationResult {
    pub best: ScoredSolution,
    /// Number of candidate deletion sets evaluated.
    pub visited: u64,
}

/// Optimum over all maximally matched deletion sets.
///
/// Fails with [`LfcsError::SpaceLimitExceeded`] when the search space holds
/// more than `space_limit` candidates. Among equal values the first set in
/// enumeration order wins.
pub fn solve_enumeration(instance: &Instance, space_limit: u64) -> Result<ScoredSolution> {
    solve_enumeration_counted(instance, space_limit).map(|r| r.best)
}

pub fn solve_enumeration_counted(instance: &Instance, space_limit: u64) -> Result<EnumerationResult> {
    let mut kernel = LcsKernel::new();
    let mut best: Option<(usize, Vec<bool>)> = None;
    let visited = for_each_maximal_set(instance, space_limit, |mask| {
        let value = masked_value(instance, mask, &mut kernel);
        if best.as_ref().is_none_or(|(v, _)| value > *v) {
            best = Some((value, mask.to_vec()));
        }
    })?;
    let (_, mask) = best.expect("the search space always holds at least one set");
    let best = evaluate_solution(instance, &DeletionSolution::from_mask(&mask))?;
    Ok(EnumerationResult { best, visited })
}

/// Calls `visit` with the deletion mask of every maximally matched set and
/// returns how many were visited.
///
/// Sets are produced by a mixed-radix counter: one digit per symbol with
/// `m(σ) > 0`, each digit running through the `m(σ)`-subsets of that
/// symbol's positions in lexicographic order, the last symbol varying fastest.
pub fn for_each_maximal_set<F>(instance: &Instance, space_limit: u64, mut visit: F) -> Result<u64>
where
    F: FnMut(&[bool]),
{
    let size = search_space_size(instance);
    if size.to_u64().is_none_or(|s| s > space_limit) {
        return Err(LfcsError::SpaceLimitExceeded {
            size,
            limit: space_limit,
        });
    }

    let capacity = match_capacity(instance);
    let a = instance.a();
    let mut digits: Vec<Digit> = capacity
        .active()
        .map(|(symbol, _, m)| Digit {
            positions: a
                .iter()
                .enumerate()
                .filter(|(_, s)| **s == symbol)
                .map(|(i, _)| i)
                .collect(),
            choice: (0..m).collect(),
        })
        .collect();

    let mut mask = vec![false; a.len()];
    for d in &digits {
        d.apply(&mut mask, true);
    }

    let mut visited = 0u64;
    loop {
        visit(&mask);
        visited += 1;

        // Odometer step: advance the rightmost digit that can move, reset the rest.
        let Some(k) = (0..digits.len()).rev().find(|&k| digits[k].can_advance()) else {
            break;
        };
        for d in &mut digits[k..] {
            d.apply(&mut mask, false);
        }
        digits[k].advance();
        for d in &mut digits[k + 1..] {
            d.reset();
        }
        for d in &digits[k..] {
            d.apply(&mut mask, true);
        }
    }
    Ok(visited)
}

struct Digit {
    positions: Vec<usize>,
    /// Indices into `positions`, strictly increasing.
    choice: Vec<usize>,
}

impl Digit {
    fn can_advance(&self) -> bool {
        let n = self.positions.len();
        let k = self.choice.len();
        self.choice.iter().enumerate().any(|(t, &c)| c < n - k + t)
    }

    fn advance(&mut self) {
        let n = self.positions.len();
        let k = self.choice.len();
        let t = (0..k)
            .rev()
            .find(|&t| self.choice[t] < n - k + t)
            .expect("checked by can_advance");
        self.choice[t] += 1;
        for u in t + 1..k {
            self.choice[u] = self.choice[u - 1] + 1;
        }
    }

    fn reset(&mut self) {
        for (t, c) in self.choice.iter_mut().enumerate() {
            *c = t;
        }
    }

    fn apply(&self, mask: &mut [bool], on: bool) {
        for &c in &self.choice {
            mask[self.positions[c]] = on;
        }
    }
}

/// Optimum over *every* capacity-respecting deletion set, maximal or not.
///
/// Exponential in `|A|`; intended as an independent check of
/// [`solve_enumeration`] on small instances.
pub fn solve_brute_force_reference(instance: &Instance) -> usize {
    let a = instance.a();
    let n = a.len();
    assert!(n < 32, "brute force is limited to |A| < 32");
    let capacity: Vec<usize> = (0..instance.alphabet_size())
        .map(|id| instance.multiset().count(crate::sequence::Symbol(id as u16)))
        .collect();
    let mut kernel = LcsKernel::new();
    let mut used = vec![0usize; instance.alphabet_size()];
    let mut mask = vec![false; n];
    let mut best = 0;
    for bits in 0u32..1 << n {
        used.iter_mut().for_each(|u| *u = 0);
        let mut ok = true;
        for (i, flag) in mask.iter_mut().enumerate() {
            *flag = bits >> i & 1 == 1;
            if *flag {
                let s = a[i].id();
                used[s] += 1;
                ok &= used[s] <= capacity[s];
            }
        }
        if ok {
            best = best.max(masked_value(instance, &mask, &mut kernel));
        }
    }
    best
}
