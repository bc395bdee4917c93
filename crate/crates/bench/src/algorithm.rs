use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Algorithms that can appear in a record. `Enumeration` and `Ilp` are the
/// two optimum sources; the others are the heuristics under test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum Algorithm {
    Enumeration,
    Ilp,
    Rand,
    /// Sliding-window local search with the given window length.
    Sk(usize),
}

impl Algorithm {
    pub fn is_optimum_source(self) -> bool {
        matches!(self, Algorithm::Enumeration | Algorithm::Ilp)
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Algorithm::Enumeration => f.write_str("enumeration"),
            Algorithm::Ilp => f.write_str("ilp"),
            Algorithm::Rand => f.write_str("rand"),
            Algorithm::Sk(k) => write!(f, "S{k}"),
        }
    }
}

#[derive(Debug, thiserror::Error)]
#[error("unknown algorithm {0:?} (expected enumeration, ilp, rand or S<k>)")]
pub struct UnknownAlgorithm(String);

impl FromStr for Algorithm {
    type Err = UnknownAlgorithm;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "enumeration" | "enum" => Ok(Algorithm::Enumeration),
            "ilp" => Ok(Algorithm::Ilp),
            "rand" => Ok(Algorithm::Rand),
            _ => s
                .strip_prefix(['S', 's'])
                .and_then(|k| k.parse().ok())
                .filter(|&k| k > 0)
                .map(Algorithm::Sk)
                .ok_or_else(|| UnknownAlgorithm(s.to_string())),
        }
    }
}

impl From<Algorithm> for String {
    fn from(a: Algorithm) -> String {
        a.to_string()
    }
}

impl TryFrom<String> for Algorithm {
    type Error = UnknownAlgorithm;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for a in [
            Algorithm::Enumeration,
            Algorithm::Ilp,
            Algorithm::Rand,
            Algorithm::Sk(1),
            Algorithm::Sk(12),
        ] {
            assert_eq!(a.to_string().parse::<Algorithm>().unwrap(), a);
        }
        assert_eq!("s4".parse::<Algorithm>().unwrap(), Algorithm::Sk(4));
        assert!("S0".parse::<Algorithm>().is_err());
        assert!("apx".parse::<Algorithm>().is_err());
    }

    #[test]
    fn order_puts_optimum_sources_first() {
        let mut v = vec![
            Algorithm::Sk(2),
            Algorithm::Rand,
            Algorithm::Sk(1),
            Algorithm::Enumeration,
        ];
        v.sort();
        assert_eq!(
            v,
            vec![
                Algorithm::Enumeration,
                Algorithm::Rand,
                Algorithm::Sk(1),
                Algorithm::Sk(2)
            ]
        );
    }
}
