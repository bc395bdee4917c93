//! Search-space accounting and solution bounds.
//!
//! Some optimum always deletes as many symbols as `M` allows, so the search
//! can be restricted to *maximally matched* deletion sets: for every symbol
//! `σ`, exactly `m(σ) = min(|M|_σ, |A|_σ)` of its `a(σ) = |A|_σ` occurrences
//! are deleted. Their number is `Π_σ C(a(σ), m(σ))`.

use num_bigint::BigUint;
use num_integer::Integer;

use crate::lcs::lcs_length;
use crate::sequence::{Instance, Symbol};
use crate::solution::{evaluate_solution, DeletionSolution, ScoredSolution};

/// Per-symbol occurrence counts `a(σ)` and matchable counts `m(σ)`,
/// indexed by symbol id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchCapacity {
    occurrences: Vec<usize>,
    matchable: Vec<usize>,
}

impl MatchCapacity {
    pub fn occurrences(&self, symbol: Symbol) -> usize {
        self.occurrences[symbol.id()]
    }

    pub fn matchable(&self, symbol: Symbol) -> usize {
        self.matchable[symbol.id()]
    }

    /// `Σ_σ m(σ)`, which equals `|A ∩ M|`.
    pub fn total(&self) -> usize {
        self.matchable.iter().sum()
    }

    /// `(σ, a(σ), m(σ))` for every symbol with `m(σ) > 0`.
    pub fn active(&self) -> impl Iterator<Item = (Symbol, usize, usize)> + '_ {
        self.matchable
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(id, &m)| (Symbol(id as u16), self.occurrences[id], m))
    }
}

pub fn match_capacity(instance: &Instance) -> MatchCapacity {
    let occurrences = instance.a_counts();
    let matchable = occurrences
        .iter()
        .enumerate()
        .map(|(id, &a)| a.min(instance.multiset().count(Symbol(id as u16))))
        .collect();
    MatchCapacity { occurrences, matchable }
}

/// `C(n, k)` by the multiplicative formula; every intermediate quotient is exact.
pub fn binomial<T>(n: u64, k: u64) -> T
where
    T: Integer + Clone + From<u64>,
{
    if k > n {
        return T::zero();
    }
    let k = k.min(n - k);
    let mut acc = T::one();
    for i in 0..k {
        acc = acc * T::from(n - i) / T::from(i + 1);
    }
    acc
}

/// Number of maximally matched deletion sets, computed exactly.
pub fn search_space_size(instance: &Instance) -> BigUint {
    match_capacity(instance)
        .active()
        .map(|(_, a, m)| binomial::<BigUint>(a as u64, m as u64))
        .product()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub lower: usize,
    pub upper: usize,
}

/// `LCS(A, B) ≤ optimum ≤ LCS(A, B) + |A ∩ M|`.
pub fn bounds(instance: &Instance) -> Bounds {
    let lcs = lcs_length(instance.a(), instance.b());
    Bounds {
        lower: lcs,
        upper: lcs + match_capacity(instance).total(),
    }
}

/// Extends `scored` to a maximally matched solution without lowering its value.
///
/// Missing deletions of each symbol are taken left to right, first from
/// occurrences outside the LCS witness (each adds one to the value), then
/// from aligned ones (each trades one LCS match for one deletion).
pub fn normalize_to_maximal(instance: &Instance, scored: &ScoredSolution) -> ScoredSolution {
    let a = instance.a();
    let capacity = match_capacity(instance);
    let sol = scored.solution();

    let witness;
    let alignment = match scored.alignment() {
        Some(al) => al,
        None => {
            witness = evaluate_solution(instance, sol).expect("scored solution is valid");
            witness.alignment().unwrap_or_default()
        }
    };
    let mut aligned = vec![false; a.len()];
    for &(i, _) in alignment {
        aligned[i] = true;
    }

    let mut deleted = sol.to_mask(a.len());
    let mut missing: Vec<usize> = capacity.matchable.clone();
    for &i in sol.deleted() {
        missing[a[i].id()] -= 1;
    }
    for prefer_aligned in [false, true] {
        for (i, s) in a.iter().enumerate() {
            if !deleted[i] && aligned[i] == prefer_aligned && missing[s.id()] > 0 {
                deleted[i] = true;
                missing[s.id()] -= 1;
            }
        }
    }

    let promoted = DeletionSolution::from_mask(&deleted);
    if promoted == *sol && scored.alignment().is_some() {
        return scored.clone();
    }
    evaluate_solution(instance, &promoted).expect("promotion respects capacity")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;
    use proptest::prelude::*;

    fn inst(a: &str, b: &str, m: &str) -> Instance {
        Instance::from_glyphs(a, b, m).unwrap()
    }

    /// Counts maximally matched deletion sets by checking every subset of positions.
    fn count_maximal_sets(instance: &Instance) -> u64 {
        let n = instance.a().len();
        let cap = match_capacity(instance);
        (0u32..1 << n)
            .filter(|mask| {
                let mut used = vec![0usize; instance.alphabet_size()];
                for i in (0..n).filter(|i| mask >> i & 1 == 1) {
                    used[instance.a()[i].id()] += 1;
                }
                used.iter()
                    .enumerate()
                    .all(|(id, &u)| u == cap.matchable(Symbol(id as u16)))
            })
            .count() as u64
    }

    #[test]
    fn capacity_examples() {
        let empty = match_capacity(&inst("abc", "a", ""));
        assert_eq!(empty.total(), 0);

        let fig = match_capacity(&inst("abcbcdda", "cabbdda", "abd"));
        for g in ['a', 'b', 'd'] {
            let s = Symbol::from_glyph(g).unwrap();
            assert_eq!((fig.occurrences(s), fig.matchable(s)), (2, 1));
        }
        assert_eq!(fig.total(), 3);

        let c = match_capacity(&inst("aaab", "", "aac"));
        assert_eq!(c.matchable(Symbol(0)), 2);
        assert_eq!(c.matchable(Symbol(2)), 0);
        assert_eq!(c.total(), 2);
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial::<u64>(5, 2), 10);
        assert_eq!(binomial::<u64>(6, 0), 1);
        assert_eq!(binomial::<u64>(6, 6), 1);
        assert_eq!(binomial::<u64>(3, 4), 0);
        assert_eq!(
            binomial::<BigUint>(100, 49).to_string(),
            "98913082887808032681188722800"
        );
    }

    #[test]
    fn space_examples() {
        assert_eq!(
            search_space_size(&inst("abcbcdda", "cabbdda", "abd")),
            BigUint::from(8u32)
        );
        assert_eq!(search_space_size(&inst("abc", "abc", "")), BigUint::from(1u32));
        let i = inst("aaab", "", "aa");
        assert_eq!(count_maximal_sets(&i), 3);
        assert_eq!(search_space_size(&i), BigUint::from(3u32));
    }

    #[test]
    fn space_exceeds_u64_with_exact_arithmetic() {
        // 80 copies of one symbol with 40 of them in M: C(80, 40) > 2^64.
        let a = "a".repeat(80);
        let m = "a".repeat(40);
        let s = search_space_size(&inst(&a, "", &m));
        assert!(s.to_u64().is_none());
        assert_eq!(s.to_string(), "107507208733336176461620");
    }

    #[test]
    fn bounds_examples() {
        assert_eq!(bounds(&inst("abab", "ba", "")), Bounds { lower: 2, upper: 2 });
        assert_eq!(bounds(&inst("ab", "b", "a")), Bounds { lower: 1, upper: 2 });
        assert_eq!(bounds(&inst("aa", "", "aa")), Bounds { lower: 0, upper: 2 });
    }

    #[test]
    fn normalize_examples() {
        let i = inst("ab", "b", "a");
        let start = evaluate_solution(&i, &DeletionSolution::empty()).unwrap();
        assert_eq!(start.value(), 1);
        let n = normalize_to_maximal(&i, &start);
        assert_eq!(n.solution().deleted(), &[0]);
        assert_eq!(n.value(), 2);

        // Fixed point.
        assert_eq!(normalize_to_maximal(&i, &n), n);

        // Only aligned occurrences remain: the trade keeps the value.
        let j = inst("bb", "b", "b");
        let start = evaluate_solution(&j, &DeletionSolution::empty()).unwrap();
        let n = normalize_to_maximal(&j, &start);
        assert_eq!(n.solution().len(), 1);
        assert_eq!(n.value(), 2);
    }

    fn small_instance() -> impl Strategy<Value = Instance> {
        (1usize..=3, 0usize..=9, 0usize..=8, 0usize..=5).prop_flat_map(|(sigma, n, m, k)| {
            let sym = 0..sigma as u16;
            (
                prop::collection::vec(sym.clone(), n),
                prop::collection::vec(sym.clone(), m),
                prop::collection::vec(sym, k),
            )
                .prop_map(move |(a, b, mm)| {
                    Instance::new(
                        crate::sequence::Sequence::from_ids(a),
                        crate::sequence::Sequence::from_ids(b),
                        mm.into_iter().map(Symbol).collect(),
                        sigma,
                    )
                    .unwrap()
                })
        })
    }

    proptest! {
        #[test]
        fn space_matches_subset_count(i in small_instance()) {
            prop_assert_eq!(search_space_size(&i).to_u64().unwrap(), count_maximal_sets(&i));
        }

        #[test]
        fn capacity_total_is_multiset_intersection(i in small_instance()) {
            let a: crate::sequence::SymbolMultiset = i.a().iter().collect();
            let cap = match_capacity(&i);
            prop_assert_eq!(cap.total(), a.intersection_size(i.multiset()));
            prop_assert!(cap.total() <= i.a().len().min(i.multiset().len()));
        }

        #[test]
        fn normalize_is_maximal_and_never_worse(i in small_instance(), picks in prop::collection::vec(any::<bool>(), 9)) {
            // Build an arbitrary capacity-respecting start by greedily keeping picked positions.
            let mut left: Vec<usize> = (0..i.alphabet_size()).map(|id| i.multiset().count(Symbol(id as u16))).collect();
            let mut mask = vec![false; i.a().len()];
            for (k, s) in i.a().iter().enumerate() {
                if picks[k] && left[s.id()] > 0 {
                    left[s.id()] -= 1;
                    mask[k] = true;
                }
            }
            let start = evaluate_solution(&i, &DeletionSolution::from_mask(&mask)).unwrap();
            let n = normalize_to_maximal(&i, &start);
            prop_assert!(n.value() >= start.value());
            prop_assert_eq!(n.solution().len(), match_capacity(&i).total());
            prop_assert!(n.value() <= bounds(&i).upper);
            n.solution().validate(&i).unwrap();
        }
    }
}
