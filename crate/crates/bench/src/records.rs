//! CSV schemas for experiment records and summaries.
//!
//! Comma-separated, one header row, `\n` line endings. Unknown values are
//! empty fields.

use std::io::{Read, Write};

use serde::{Deserialize, Serialize, Serializer};

use crate::algorithm::Algorithm;

/// One `(instance, algorithm)` outcome.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentRecord {
    pub n: usize,
    pub alphabet_divisor: usize,
    pub instance_id: usize,
    pub seed: u64,
    pub algorithm: Algorithm,
    pub value: Option<usize>,
    pub optimum: Option<usize>,
    pub wall_time_ms: Option<f64>,
}

impl ExperimentRecord {
    pub fn sort_key(&self) -> (usize, usize, usize, Algorithm) {
        (self.n, self.alphabet_divisor, self.instance_id, self.algorithm)
    }
}

/// Aggregate of one `(n, divisor, algorithm)` cell.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryRow {
    pub n: usize,
    pub alphabet_divisor: usize,
    pub algorithm: Algorithm,
    /// Instances on which the algorithm returned the optimum.
    pub optimum_hits: Option<usize>,
    pub instance_count: usize,
    /// `Σ value / Σ optimum` over the cell.
    #[serde(serialize_with = "fixed_six")]
    pub normalized_average: Option<f64>,
}

fn fixed_six<S: Serializer>(v: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(x) => s.serialize_str(&format!("{x:.6}")),
        None => s.serialize_none(),
    }
}

fn writer<W: Write>(sink: W) -> csv::Writer<W> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(sink)
}

pub fn write_csv<W: Write, T: Serialize>(rows: &[T], sink: W) -> csv::Result<()> {
    let mut w = writer(sink);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_csv<R: Read, T: for<'de> Deserialize<'de>>(source: R) -> csv::Result<Vec<T>> {
    csv::Reader::from_reader(source).deserialize().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn record_csv_layout() {
        let rows = vec![
            ExperimentRecord {
                n: 16,
                alphabet_divisor: 8,
                instance_id: 0,
                seed: 99,
                algorithm: Algorithm::Enumeration,
                value: Some(12),
                optimum: Some(12),
                wall_time_ms: None,
            },
            ExperimentRecord {
                n: 16,
                alphabet_divisor: 8,
                instance_id: 0,
                seed: 99,
                algorithm: Algorithm::Sk(2),
                value: Some(11),
                optimum: None,
                wall_time_ms: Some(1.5),
            },
        ];
        let mut out = Vec::new();
        write_csv(&rows, &mut out).unwrap();
        let text = String::from_utf8(out).unwrap();
        assert_eq!(
            text,
            "n,alphabet_divisor,instance_id,seed,algorithm,value,optimum,wall_time_ms\n\
             16,8,0,99,enumeration,12,12,\n\
             16,8,0,99,S2,11,,1.5\n"
        );
        let back: Vec<ExperimentRecord> = read_csv(text.as_bytes()).unwrap();
        assert_eq!(back, rows);
    }

    #[test]
    fn summary_csv_layout() {
        let rows = vec![
            SummaryRow {
                n: 32,
                alphabet_divisor: 4,
                algorithm: Algorithm::Rand,
                optimum_hits: Some(7),
                instance_count: 10,
                normalized_average: Some(0.98765432),
            },
            SummaryRow {
                n: 32,
                alphabet_divisor: 4,
                algorithm: Algorithm::Sk(1),
                optimum_hits: None,
                instance_count: 10,
                normalized_average: None,
            },
        ];
        let mut out = Vec::new();
        write_csv(&rows, &mut out).unwrap();
        assert_eq!(
            String::from_utf8(out).unwrap(),
            "n,alphabet_divisor,algorithm,optimum_hits,instance_count,normalized_average\n\
             32,4,rand,7,10,0.987654\n\
             32,4,S1,,10,\n"
        );
    }
}
