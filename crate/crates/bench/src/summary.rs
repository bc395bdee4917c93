//! Per-cell aggregates over experiment records.

use std::collections::BTreeMap;

use crate::algorithm::Algorithm;
use crate::records::{ExperimentRecord, SummaryRow};

#[derive(Default)]
struct Cell {
    count: usize,
    hits: usize,
    value_sum: usize,
    optimum_sum: usize,
    unknown: bool,
}

/// Folds heuristic records into one row per `(n, divisor, algorithm)`.
///
/// The normalized average is a ratio of sums, `Σ value / Σ optimum`, not a
/// mean of per-instance ratios. Cells with any unknown optimum or value
/// report neither hits nor average. Optimum-source records are skipped.
pub fn summarize(records: &[ExperimentRecord]) -> Vec<SummaryRow> {
    let mut cells: BTreeMap<(usize, usize, Algorithm), Cell> = BTreeMap::new();
    for r in records.iter().filter(|r| !r.algorithm.is_optimum_source()) {
        let cell = cells.entry((r.n, r.alphabet_divisor, r.algorithm)).or_default();
        cell.count += 1;
        match (r.value, r.optimum) {
            (Some(v), Some(o)) => {
                cell.hits += usize::from(v == o);
                cell.value_sum += v;
                cell.optimum_sum += o;
            }
            _ => cell.unknown = true,
        }
    }
    cells
        .into_iter()
        .map(|((n, alphabet_divisor, algorithm), c)| {
            let known = !c.unknown;
            let average = if c.optimum_sum == 0 {
                1.0
            } else {
                c.value_sum as f64 / c.optimum_sum as f64
            };
            SummaryRow {
                n,
                alphabet_divisor,
                algorithm,
                optimum_hits: known.then_some(c.hits),
                instance_count: c.count,
                normalized_average: known.then_some(average),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rec(id: usize, algorithm: Algorithm, value: Option<usize>, optimum: Option<usize>) -> ExperimentRecord {
        ExperimentRecord {
            n: 16,
            alphabet_divisor: 8,
            instance_id: id,
            seed: id as u64,
            algorithm,
            value,
            optimum,
            wall_time_ms: None,
        }
    }

    #[test]
    fn ratio_of_sums() {
        let rows = summarize(&[
            rec(0, Algorithm::Rand, Some(3), Some(4)),
            rec(1, Algorithm::Rand, Some(5), Some(6)),
        ]);
        assert_eq!(rows.len(), 1);
        assert!((rows[0].normalized_average.unwrap() - 0.8).abs() < 1e-12);
        assert_eq!(rows[0].optimum_hits, Some(0));
        assert_eq!(rows[0].instance_count, 2);
    }

    #[test]
    fn all_optimal() {
        let recs: Vec<_> = (0..5)
            .flat_map(|i| {
                [
                    rec(i, Algorithm::Enumeration, Some(i + 2), Some(i + 2)),
                    rec(i, Algorithm::Sk(1), Some(i + 2), Some(i + 2)),
                ]
            })
            .collect();
        let rows = summarize(&recs);
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].algorithm, Algorithm::Sk(1));
        assert_eq!(rows[0].optimum_hits, Some(5));
        assert_eq!(rows[0].normalized_average, Some(1.0));
    }

    #[test]
    fn unknown_optimum_marks_cell_unavailable() {
        let rows = summarize(&[
            rec(0, Algorithm::Rand, Some(3), Some(3)),
            rec(1, Algorithm::Rand, Some(5), None),
        ]);
        assert_eq!(rows[0].optimum_hits, None);
        assert_eq!(rows[0].normalized_average, None);
        assert_eq!(rows[0].instance_count, 2);
    }

    #[test]
    fn order_independent() {
        let mut recs = Vec::new();
        for i in 0..6 {
            for (k, alg) in [Algorithm::Rand, Algorithm::Sk(2), Algorithm::Sk(1)]
                .into_iter()
                .enumerate()
            {
                let mut r = rec(i, alg, Some(i + k), Some(i + 2));
                r.n = 16 * (1 + i % 2);
                recs.push(r);
            }
        }
        let forward = summarize(&recs);
        recs.reverse();
        recs.swap(1, 7);
        assert_eq!(summarize(&recs), forward);
        assert_eq!(forward.len(), 6);
    }
}
