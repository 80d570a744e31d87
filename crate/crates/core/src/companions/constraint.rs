use std::fmt;

use crate::partition::OverPartition;

/// `f_{i+offset}` or, when over-lined, `f_{\overline{i+offset}}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FrequencyTerm {
    pub offset: i64,
    pub overlined: bool,
}

impl FrequencyTerm {
    pub const fn plain(offset: i64) -> Self {
        Self {
            offset,
            overlined: false,
        }
    }

    pub const fn over(offset: i64) -> Self {
        Self {
            offset,
            overlined: true,
        }
    }

    /// Parses `i`, `i+3`, `i-1~` (a trailing `~` marks an over-lined term).
    pub fn parse(token: &str) -> Option<Self> {
        let (body, overlined) = match token.strip_suffix('~') {
            Some(b) => (b, true),
            None => (token, false),
        };
        let rest = body.strip_prefix('i')?;
        let offset = match rest.as_bytes().first() {
            None => 0,
            Some(b'+') => rest[1..].parse().ok()?,
            Some(b'-') => -rest[1..].parse::<i64>().ok()?,
            Some(_) => return None,
        };
        Some(Self { offset, overlined })
    }
}

impl fmt::Display for FrequencyTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.offset {
            0 => f.write_str("i")?,
            o if o > 0 => write!(f, "i+{o}")?,
            o => write!(f, "i{o}")?,
        }
        if self.overlined {
            f.write_str("~")?;
        }
        Ok(())
    }
}

/// Which base indices `i` a family ranges over.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IndexFilter {
    pub modulus: u64,
    pub residues: Vec<u64>,
    pub min_index: u64,
    pub max_index: Option<u64>,
}

impl IndexFilter {
    /// `i ≥ min` with `i mod modulus` in `residues`.
    pub fn congruent(modulus: u64, residues: &[u64], min_index: u64) -> Self {
        Self {
            modulus,
            residues: residues.to_vec(),
            min_index,
            max_index: None,
        }
    }

    pub fn all_from(min_index: u64) -> Self {
        Self::congruent(1, &[0], min_index)
    }

    pub fn range(min_index: u64, max_index: u64) -> Self {
        Self {
            max_index: Some(max_index),
            ..Self::all_from(min_index)
        }
    }

    pub fn admits(&self, i: u64) -> bool {
        i >= self.min_index
            && self.max_index.is_none_or(|m| i <= m)
            && self.residues.contains(&(i % self.modulus))
    }
}

/// Read access to plain and over-lined frequencies. Indices below 1 read as 0.
pub trait Frequencies {
    fn plain_at(&self, index: i64) -> u64;
    fn over_at(&self, index: i64) -> u64;

    fn term(&self, base: u64, t: FrequencyTerm) -> u64 {
        let idx = base as i64 + t.offset;
        if idx < 1 {
            return 0;
        }
        if t.overlined {
            self.over_at(idx)
        } else {
            self.plain_at(idx)
        }
    }
}

impl Frequencies for OverPartition {
    fn plain_at(&self, index: i64) -> u64 {
        u64::try_from(index).map_or(0, |i| self.plain_multiplicity(i))
    }

    fn over_at(&self, index: i64) -> u64 {
        u64::try_from(index).map_or(0, |i| self.overlined_multiplicity(i))
    }
}

/// `Σ terms ≤ bound` for every admissible base index `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConstraintFamily {
    pub terms: Vec<FrequencyTerm>,
    pub bound: u64,
    pub filter: IndexFilter,
}

impl ConstraintFamily {
    /// Builds a family from whitespace-separated term tokens, e.g.
    /// `"i i~ i+1"`. Panics on a malformed token; the theorem tables are
    /// static data checked by tests.
    pub fn new(terms: &str, bound: u64, filter: IndexFilter) -> Self {
        let terms = terms
            .split_whitespace()
            .map(|t| FrequencyTerm::parse(t).unwrap_or_else(|| panic!("bad term `{t}`")))
            .collect();
        Self {
            terms,
            bound,
            filter,
        }
    }

    pub fn sum_at<F: Frequencies + ?Sized>(&self, freq: &F, base: u64) -> u64 {
        self.terms.iter().map(|&t| freq.term(base, t)).sum()
    }

    fn min_offset(&self) -> i64 {
        self.terms.iter().map(|t| t.offset).min().unwrap_or(0)
    }

    /// First admissible base index at which the family fails, looking at
    /// parts up to `largest_part` (everything above reads as 0).
    pub fn violation<F: Frequencies + ?Sized>(&self, freq: &F, largest_part: u64) -> Option<u64> {
        let top = (largest_part as i64 - self.min_offset()).max(0) as u64;
        let top = self.filter.max_index.map_or(top, |m| m.min(top));
        (self.filter.min_index.max(1)..=top)
            .filter(|&i| self.filter.admits(i))
            .find(|&i| self.sum_at(freq, i) > self.bound)
    }

    pub fn holds(&self, op: &OverPartition) -> bool {
        self.violation(op, op.largest_part().unwrap_or(0)).is_none()
    }
}

impl fmt::Display for ConstraintFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.terms.iter().map(ToString::to_string).collect();
        write!(f, "{} <= {} for i", terms.join(" + "), self.bound)?;
        let flt = &self.filter;
        if flt.modulus > 1 {
            write!(f, " = {:?} mod {}", flt.residues, flt.modulus)?;
        }
        write!(f, ", i >= {}", flt.min_index)?;
        if let Some(m) = flt.max_index {
            write!(f, ", i <= {m}")?;
        }
        Ok(())
    }
}

/// A conjunction of families, plus whether over-lined parts exist at all.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintSystem {
    pub name: &'static str,
    pub overlines_allowed: bool,
    pub families: Vec<ConstraintFamily>,
}

impl ConstraintSystem {
    /// First failing `(family index, base index)`, if any.
    pub fn violation(&self, op: &OverPartition) -> Option<(usize, u64)> {
        if !self.overlines_allowed && !op.overlined().is_empty() {
            return Some((usize::MAX, *op.overlined().iter().next().unwrap()));
        }
        let top = op.largest_part().unwrap_or(0);
        self.families
            .iter()
            .enumerate()
            .find_map(|(idx, fam)| fam.violation(op, top).map(|i| (idx, i)))
    }

    pub fn holds(&self, op: &OverPartition) -> bool {
        self.violation(op).is_none()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn term_parsing() {
        assert_eq!(FrequencyTerm::parse("i"), Some(FrequencyTerm::plain(0)));
        assert_eq!(FrequencyTerm::parse("i+4~"), Some(FrequencyTerm::over(4)));
        assert_eq!(FrequencyTerm::parse("i-1~"), Some(FrequencyTerm::over(-1)));
        assert_eq!(FrequencyTerm::parse("j+1"), None);
        assert_eq!(FrequencyTerm::parse("i*2"), None);
        for t in ["i", "i+3", "i-1~", "i+12~"] {
            assert_eq!(FrequencyTerm::parse(t).unwrap().to_string(), t);
        }
    }

    #[test]
    fn filters() {
        let f = IndexFilter::congruent(5, &[1, 4], 1);
        assert!(f.admits(1) && f.admits(4) && f.admits(6));
        assert!(!f.admits(0) && !f.admits(5));
        let r = IndexFilter::range(1, 2);
        assert!(r.admits(1) && r.admits(2) && !r.admits(3));
    }

    #[test]
    fn indices_below_one_read_zero() {
        let fam = ConstraintFamily::new("i-1~ i", 0, IndexFilter::all_from(1));
        let op: OverPartition = "2".parse().unwrap();
        assert_eq!(fam.sum_at(&op, 1), 0);
        assert_eq!(fam.violation(&op, 2), Some(2));
    }

    #[test]
    fn window_family() {
        let fam = ConstraintFamily::new("i i+1 i+2", 1, IndexFilter::all_from(1));
        assert!(fam.holds(&"1 4 7".parse().unwrap()));
        assert!(!fam.holds(&"1 3".parse().unwrap()));
        assert_eq!(fam.to_string(), "i + i+1 + i+2 <= 1 for i, i >= 1");
    }
}
