//! Symbols, sequences, multisets and the problem instance `(A, B, M)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Deref;

use crate::error::{LfcsError, Result};

/// Largest alphabet for which every symbol has a letter glyph (`a-z` then `A-Z`).
pub const GLYPH_ALPHABET: usize = 52;

/// Largest representable alphabet (symbol ids are 16-bit).
pub const MAX_ALPHABET: usize = 1 << 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(pub u16);

impl Symbol {
    pub fn id(self) -> usize {
        self.0 as usize
    }

    /// Letter for this symbol: ids 0..26 map to `a..z`, 26..52 to `A..Z`.
    pub fn glyph(self) -> Option<char> {
        match self.0 {
            0..=25 => Some((b'a' + self.0 as u8) as char),
            26..=51 => Some((b'A' + (self.0 - 26) as u8) as char),
            _ => None,
        }
    }

    pub fn from_glyph(c: char) -> Option<Symbol> {
        match c {
            'a'..='z' => Some(Symbol(c as u16 - 'a' as u16)),
            'A'..='Z' => Some(Symbol(c as u16 - 'A' as u16 + 26)),
            _ => None,
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Sequence(Vec<Symbol>);

impl Sequence {
    pub fn new(symbols: Vec<Symbol>) -> Self {
        Sequence(symbols)
    }

    pub fn from_ids<I: IntoIterator<Item = u16>>(ids: I) -> Self {
        Sequence(ids.into_iter().map(Symbol).collect())
    }

    /// Parses a string of ASCII letters; whitespace is ignored.
    pub fn from_glyphs(text: &str) -> Result<Self> {
        text.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| {
                Symbol::from_glyph(c).ok_or_else(|| LfcsError::Parse {
                    line: 0,
                    reason: format!("{c:?} is not an ASCII letter"),
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(Sequence)
    }

    /// Letter rendering, if every symbol has a glyph.
    pub fn to_glyphs(&self) -> Option<String> {
        self.0.iter().map(|s| s.glyph()).collect()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<Symbol> {
        self.0
    }
}

impl Deref for Sequence {
    type Target = [Symbol];

    fn deref(&self) -> &[Symbol] {
        &self.0
    }
}

impl FromIterator<Symbol> for Sequence {
    fn from_iter<I: IntoIterator<Item = Symbol>>(iter: I) -> Self {
        Sequence(iter.into_iter().collect())
    }
}

/// A multiset of symbols. Zero counts are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct SymbolMultiset {
    counts: BTreeMap<Symbol, usize>,
}

impl SymbolMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, symbol: Symbol) {
        self.insert_many(symbol, 1);
    }

    pub fn insert_many(&mut self, symbol: Symbol, count: usize) {
        if count > 0 {
            *self.counts.entry(symbol).or_insert(0) += count;
        }
    }

    pub fn count(&self, symbol: Symbol) -> usize {
        self.counts.get(&symbol).copied().unwrap_or(0)
    }

    /// Total number of elements, counting multiplicity.
    pub fn len(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Distinct symbols with their (positive) counts, in ascending symbol order.
    pub fn iter(&self) -> impl Iterator<Item = (Symbol, usize)> + '_ {
        self.counts.iter().map(|(&s, &c)| (s, c))
    }

    /// All elements in ascending order, repeated by multiplicity.
    pub fn elements(&self) -> impl Iterator<Item = Symbol> + '_ {
        self.iter().flat_map(|(s, c)| std::iter::repeat_n(s, c))
    }

    /// Size of the multiset intersection `|self ∩ other|`.
    pub fn intersection_size(&self, other: &SymbolMultiset) -> usize {
        self.iter().map(|(s, c)| c.min(other.count(s))).sum()
    }
}

impl FromIterator<Symbol> for SymbolMultiset {
    fn from_iter<I: IntoIterator<Item = Symbol>>(iter: I) -> Self {
        let mut m = SymbolMultiset::new();
        for s in iter {
            m.insert(s);
        }
        m
    }
}

impl<'a> FromIterator<&'a Symbol> for SymbolMultiset {
    fn from_iter<I: IntoIterator<Item = &'a Symbol>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

/// An LFCS input: strings `A` and `B` and the filling multiset `M`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Instance {
    a: Sequence,
    b: Sequence,
    m: SymbolMultiset,
    alphabet_size: usize,
}

impl Instance {
    pub fn new(a: Sequence, b: Sequence, m: SymbolMultiset, alphabet_size: usize) -> Result<Self> {
        if alphabet_size == 0 || alphabet_size > MAX_ALPHABET {
            return Err(LfcsError::InvalidAlphabetSize(alphabet_size));
        }
        let used = a.iter().chain(b.iter()).copied().chain(m.iter().map(|(s, _)| s));
        for s in used {
            if s.id() >= alphabet_size {
                return Err(LfcsError::SymbolOutOfAlphabet { id: s.0, alphabet_size });
            }
        }
        Ok(Instance { a, b, m, alphabet_size })
    }

    /// Builds an instance from letter strings. The alphabet is the smallest
    /// one covering every letter used (at least one symbol).
    pub fn from_glyphs(a: &str, b: &str, m: &str) -> Result<Self> {
        Instance::from_glyph_sequences(
            Sequence::from_glyphs(a)?,
            Sequence::from_glyphs(b)?,
            Sequence::from_glyphs(m)?,
        )
    }

    pub fn a(&self) -> &Sequence {
        &self.a
    }

    pub fn b(&self) -> &Sequence {
        &self.b
    }

    pub fn multiset(&self) -> &SymbolMultiset {
        &self.m
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    /// Occurrence count of every symbol in `A`, indexed by symbol id.
    pub fn a_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.alphabet_size];
        for s in self.a.iter() {
            counts[s.id()] += 1;
        }
        counts
    }

    /// Serializes to the four-line numeric text format.
    pub fn to_text(&self) -> String {
        fn join<I: Iterator<Item = Symbol>>(it: I) -> String {
            it.map(|s| s.0.to_string()).collect::<Vec<_>>().join(" ")
        }
        format!(
            "{}\n{}\n{}\n{}\n",
            join(self.a.iter().copied()),
            join(self.b.iter().copied()),
            join(self.m.elements()),
            self.alphabet_size
        )
    }

    /// Parses either the four-line numeric form (A, B, M as space-separated
    /// ids, then the alphabet size) or the three-line letter form (A, B, M).
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines: Vec<&str> = text.split('\n').map(|l| l.trim_end_matches('\r')).collect();
        if lines.last() == Some(&"") {
            lines.pop();
        }
        match lines.len() {
            4 => {
                let a = parse_ids(lines[0], 1)?;
                let b = parse_ids(lines[1], 2)?;
                let m = parse_ids(lines[2], 3)?;
                let alphabet_size = lines[3].trim().parse::<usize>().map_err(|e| LfcsError::Parse {
                    line: 4,
                    reason: format!("alphabet size: {e}"),
                })?;
                Instance::new(a, b, m.iter().collect(), alphabet_size)
            }
            3 => {
                let glyphs = |i: usize| {
                    Sequence::from_glyphs(lines[i]).map_err(|e| match e {
                        LfcsError::Parse { reason, .. } => LfcsError::Parse { line: i + 1, reason },
                        other => other,
                    })
                };
                let (a, b, m) = (glyphs(0)?, glyphs(1)?, glyphs(2)?);
                Instance::from_glyph_sequences(a, b, m)
            }
            n => Err(LfcsError::Parse {
                line: n,
                reason: format!("expected 4 lines (numeric) or 3 lines (letters), found {n}"),
            }),
        }
    }

    fn from_glyph_sequences(a: Sequence, b: Sequence, m: Sequence) -> Result<Self> {
        let alphabet_size = a
            .iter()
            .chain(b.iter())
            .chain(m.iter())
            .map(|s| s.id() + 1)
            .max()
            .unwrap_or(1);
        Instance::new(a, b, m.iter().collect(), alphabet_size)
    }
}

fn parse_ids(line: &str, line_no: usize) -> Result<Sequence> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<u16>().map(Symbol).map_err(|e| LfcsError::Parse {
                line: line_no,
                reason: format!("{tok:?}: {e}"),
            })
        })
        .collect::<Result<Vec<_>>>()
        .map(Sequence::new)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn glyphs_round_trip() {
        for id in 0..GLYPH_ALPHABET as u16 {
            let s = Symbol(id);
            assert_eq!(Symbol::from_glyph(s.glyph().unwrap()), Some(s));
        }
        assert_eq!(Symbol(52).glyph(), None);
        assert_eq!(Symbol::from_glyph('1'), None);
    }

    #[test]
    fn multiset_drops_zero_counts() {
        let mut m = SymbolMultiset::new();
        m.insert_many(Symbol(3), 0);
        assert!(m.is_empty());
        m.insert(Symbol(3));
        m.insert(Symbol(3));
        m.insert(Symbol(1));
        assert_eq!(m.len(), 3);
        assert_eq!(m.count(Symbol(3)), 2);
        assert_eq!(m.elements().collect::<Vec<_>>(), vec![Symbol(1), Symbol(3), Symbol(3)]);
    }

    #[test]
    fn intersection_counts_multiplicity() {
        let a: SymbolMultiset = Sequence::from_glyphs("aaab").unwrap().iter().collect();
        let m: SymbolMultiset = Sequence::from_glyphs("aac").unwrap().iter().collect();
        assert_eq!(a.intersection_size(&m), 2);
    }

    #[test]
    fn rejects_symbols_outside_alphabet() {
        let err = Instance::new(
            Sequence::from_ids([0, 4]),
            Sequence::default(),
            SymbolMultiset::new(),
            4,
        );
        assert!(matches!(err, Err(LfcsError::SymbolOutOfAlphabet { id: 4, .. })));
        assert!(Instance::new(Sequence::default(), Sequence::default(), SymbolMultiset::new(), 0).is_err());
    }

    #[test]
    fn numeric_text_round_trip() {
        let inst = Instance::new(
            Sequence::from_ids([0, 1, 2, 1]),
            Sequence::default(),
            [Symbol(2), Symbol(0), Symbol(2)].iter().collect(),
            5,
        )
        .unwrap();
        let text = inst.to_text();
        assert_eq!(text, "0 1 2 1\n\n0 2 2\n5\n");
        assert_eq!(Instance::parse(&text).unwrap(), inst);
    }

    #[test]
    fn letter_form() {
        let inst = Instance::parse("ab\nb\na\n").unwrap();
        assert_eq!(inst.a().to_glyphs().as_deref(), Some("ab"));
        assert_eq!(inst.multiset().count(Symbol(0)), 1);
        assert_eq!(inst.alphabet_size(), 2);

        let empty_m = Instance::parse("ab\nba\n\n").unwrap();
        assert!(empty_m.multiset().is_empty());
    }

    #[test]
    fn parse_errors_name_the_line() {
        assert!(matches!(
            Instance::parse("0 1\nx\n\n3\n"),
            Err(LfcsError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            Instance::parse("ab\nb1\n\n"),
            Err(LfcsError::Parse { line: 2, .. })
        ));
        assert!(matches!(Instance::parse("ab\n"), Err(LfcsError::Parse { .. })));
    }
}
