//! Candidate solutions in the deletion formulation and their evaluation.
//!
//! A solution names the positions of `A` that are matched with symbols of
//! `M`. Its value is the number of such positions plus the LCS of the
//! remaining symbols of `A` with `B`.

use crate::error::{LfcsError, Result};
use crate::lcs::{LcsKernel, LcsTable};
use crate::sequence::{Instance, Symbol};

/// Positions of `A` matched with `M`, strictly increasing.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DeletionSolution {
    deleted: Vec<usize>,
}

impl DeletionSolution {
    pub fn new(deleted: Vec<usize>) -> Result<Self> {
        if let Some(w) = deleted.windows(2).find(|w| w[0] >= w[1]) {
            return Err(LfcsError::UnsortedDeletion(w[1]));
        }
        Ok(DeletionSolution { deleted })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a solution from a per-position flag vector.
    pub fn from_mask(mask: &[bool]) -> Self {
        DeletionSolution {
            deleted: mask.iter().enumerate().filter(|(_, &d)| d).map(|(i, _)| i).collect(),
        }
    }

    pub fn deleted(&self) -> &[usize] {
        &self.deleted
    }

    pub fn len(&self) -> usize {
        self.deleted.len()
    }

    pub fn is_empty(&self) -> bool {
        self.deleted.is_empty()
    }

    pub fn contains(&self, index: usize) -> bool {
        self.deleted.binary_search(&index).is_ok()
    }

    pub fn to_mask(&self, len: usize) -> Vec<bool> {
        let mut mask = vec![false; len];
        for &i in &self.deleted {
            mask[i] = true;
        }
        mask
    }

    /// Checks index range and per-symbol capacity against `instance`.
    pub fn validate(&self, instance: &Instance) -> Result<()> {
        let a = instance.a();
        let mut used = vec![0usize; instance.alphabet_size()];
        for &i in &self.deleted {
            let symbol = *a
                .get(i)
                .ok_or(LfcsError::DeletionOutOfRange { index: i, len: a.len() })?;
            used[symbol.id()] += 1;
        }
        for (id, &deleted) in used.iter().enumerate() {
            let available = instance.multiset().count(Symbol(id as u16));
            if deleted > available {
                return Err(LfcsError::CapacityExceeded {
                    symbol: id as u16,
                    deleted,
                    available,
                });
            }
        }
        Ok(())
    }

    /// The symbols of `A` left after removing the deleted positions.
    pub fn remainder(&self, instance: &Instance) -> Vec<Symbol> {
        self.kept_positions(instance.a().len())
            .map(|i| instance.a()[i])
            .collect()
    }

    fn kept_positions(&self, len: usize) -> impl Iterator<Item = usize> + '_ {
        let mut next = self.deleted.iter().peekable();
        (0..len).filter(move |&i| {
            if next.peek() == Some(&&i) {
                next.next();
                false
            } else {
                true
            }
        })
    }
}

/// An evaluated solution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScoredSolution {
    solution: DeletionSolution,
    value: usize,
    alignment: Option<Vec<(usize, usize)>>,
}

impl ScoredSolution {
    pub(crate) fn new(solution: DeletionSolution, value: usize, alignment: Option<Vec<(usize, usize)>>) -> Self {
        ScoredSolution {
            solution,
            value,
            alignment,
        }
    }

    pub fn solution(&self) -> &DeletionSolution {
        &self.solution
    }

    pub fn value(&self) -> usize {
        self.value
    }

    /// LCS witness as `(index into A, index into B)` pairs, when computed.
    pub fn alignment(&self) -> Option<&[(usize, usize)]> {
        self.alignment.as_deref()
    }

    pub fn into_solution(self) -> DeletionSolution {
        self.solution
    }
}

/// Scores `sol` and attaches an LCS witness.
pub fn evaluate_solution(instance: &Instance, sol: &DeletionSolution) -> Result<ScoredSolution> {
    sol.validate(instance)?;
    let kept: Vec<usize> = sol.kept_positions(instance.a().len()).collect();
    let remainder: Vec<Symbol> = kept.iter().map(|&i| instance.a()[i]).collect();
    let b = instance.b();
    let pairs = LcsTable::new(&remainder, b).traceback(&remainder, b);
    let alignment: Vec<(usize, usize)> = pairs.into_iter().map(|(i, j)| (kept[i], j)).collect();
    Ok(ScoredSolution::new(
        sol.clone(),
        sol.len() + alignment.len(),
        Some(alignment),
    ))
}

/// Value of the solution given by a deletion mask, without validation or
/// witness. Used in the solvers' inner loops.
pub(crate) fn masked_value(instance: &Instance, deleted: &[bool], kernel: &mut LcsKernel) -> usize {
    let a = instance.a();
    let removed = deleted.iter().filter(|&&d| d).count();
    let lcs = kernel.length(a.iter().zip(deleted).filter(|(_, &d)| !d).map(|(s, _)| s), instance.b());
    removed + lcs
}
