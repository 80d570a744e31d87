//! Partitions and over-partitions stored as frequency tables.
//!
//! A [`Partition`] maps each part to its (positive) multiplicity. Zero
//! multiplicities are never stored, so structural equality is partition
//! equality. An [`OverPartition`] adds a set of over-lined parts, each
//! occurring at most once.
//!
//! Text form: whitespace separated `part^mult` tokens in any order, with the
//! multiplicity omitted when it is 1 (`1^2 3^5 5^3`). Over-lined parts carry a
//! trailing `~` (`3 5~`). The empty partition prints as `∅`; the parser also
//! accepts an empty string.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub const EMPTY_SYMBOL: &str = "∅";

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Partition {
    freq: BTreeMap<u64, u64>,
}

impl Partition {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a partition from `(part, multiplicity)` pairs. Repeated parts
    /// accumulate and zero multiplicities are dropped.
    pub fn from_frequencies<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u64, u64)>,
    {
        let mut p = Self::new();
        for (part, mult) in pairs {
            if part == 0 {
                return Err(Error::NonPositivePart(part));
            }
            p.add(part, mult);
        }
        Ok(p)
    }

    /// Builds a partition from a list of parts (in any order).
    pub fn from_parts(parts: &[u64]) -> Result<Self> {
        Self::from_frequencies(parts.iter().map(|&x| (x, 1)))
    }

    pub(crate) fn add(&mut self, part: u64, mult: u64) {
        debug_assert!(part > 0);
        if mult > 0 {
            *self.freq.entry(part).or_insert(0) += mult;
        }
    }

    pub fn multiplicity(&self, part: u64) -> u64 {
        self.freq.get(&part).copied().unwrap_or(0)
    }

    /// `(part, multiplicity)` pairs in ascending part order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (u64, u64)> + '_ {
        self.freq.iter().map(|(&p, &m)| (p, m))
    }

    pub fn is_empty(&self) -> bool {
        self.freq.is_empty()
    }

    /// Number of distinct part sizes.
    pub fn support_len(&self) -> usize {
        self.freq.len()
    }

    /// Number of parts counted with multiplicity.
    pub fn num_parts(&self) -> u64 {
        self.freq.values().sum()
    }

    pub fn weight(&self) -> u64 {
        self.freq.iter().map(|(p, m)| p * m).sum()
    }

    pub fn largest_part(&self) -> Option<u64> {
        self.freq.keys().next_back().copied()
    }

    pub fn max_multiplicity(&self) -> u64 {
        self.freq.values().copied().max().unwrap_or(0)
    }

    /// Parts in non-increasing order, repeated by multiplicity.
    pub fn parts_desc(&self) -> Vec<u64> {
        self.iter()
            .rev()
            .flat_map(|(p, m)| std::iter::repeat_n(p, m as usize))
            .collect()
    }

    /// No part divisible by `k`.
    pub fn is_k_regular(&self, k: u64) -> bool {
        k != 0 && self.freq.keys().all(|&p| p % k != 0)
    }

    /// Every multiplicity strictly below `l`.
    pub fn multiplicities_below(&self, l: u64) -> bool {
        self.freq.values().all(|&m| m < l)
    }

    /// No part divisible by `k` and every multiplicity below `l`.
    ///
    /// With `k = 1` or `l = 1` only the empty partition qualifies.
    pub fn is_kl_regular(&self, k: u64, l: u64) -> bool {
        self.is_k_regular(k) && self.multiplicities_below(l)
    }

    /// Multiplies every part by `factor`.
    pub fn scaled(&self, factor: u64) -> Result<Self> {
        assert!(factor > 0, "scale factor must be positive");
        let mut out = Self::new();
        for (p, m) in self.iter() {
            let q = p.checked_mul(factor).ok_or(Error::Overflow("scaled part"))?;
            out.add(q, m);
        }
        Ok(out)
    }

    /// Divides every part by `factor`. Returns `None` if some part is not a
    /// multiple of it.
    pub fn descaled(&self, factor: u64) -> Option<Self> {
        let mut out = Self::new();
        for (p, m) in self.iter() {
            if p % factor != 0 {
                return None;
            }
            out.add(p / factor, m);
        }
        Some(out)
    }

    /// Multiset union: multiplicities add up.
    pub fn union(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, m) in other.iter() {
            out.add(p, m);
        }
        out
    }

    pub(crate) fn check_k_regular(&self, k: u64) -> Result<()> {
        match self.freq.keys().find(|&&p| p % k == 0) {
            Some(&part) => Err(Error::NotRegular {
                partition: self.to_string(),
                k,
                part,
            }),
            None => Ok(()),
        }
    }

    pub(crate) fn check_multiplicities_below(&self, bound: u64) -> Result<()> {
        match self.iter().find(|&(_, m)| m >= bound) {
            Some((part, mult)) => Err(Error::MultiplicityTooLarge {
                partition: self.to_string(),
                part,
                mult,
                bound,
            }),
            None => Ok(()),
        }
    }

    pub(crate) fn check_kl_regular(&self, k: u64, l: u64) -> Result<()> {
        self.check_k_regular(k)?;
        self.check_multiplicities_below(l)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

fn write_token(f: &mut fmt::Formatter<'_>, first: &mut bool, token: fmt::Arguments) -> fmt::Result {
    if !*first {
        f.write_str(" ")?;
    }
    *first = false;
    f.write_fmt(token)
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str(EMPTY_SYMBOL);
        }
        let mut first = true;
        for (p, m) in self.iter() {
            if m == 1 {
                write_token(f, &mut first, format_args!("{p}"))?;
            } else {
                write_token(f, &mut first, format_args!("{p}^{m}"))?;
            }
        }
        Ok(())
    }
}

fn parse_number(s: &str, token: &str) -> Result<u64> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("bad token `{token}`")));
    }
    s.parse()
        .map_err(|_| Error::Parse(format!("number out of range in `{token}`")))
}

/// Parses one `part`, `part^mult` or `part~` token.
fn parse_token(token: &str) -> Result<(u64, u64, bool)> {
    let (body, overlined) = match token.strip_suffix('~') {
        Some(b) => (b, true),
        None => (token, false),
    };
    let (part, mult) = match body.split_once('^') {
        Some((p, m)) => {
            if overlined {
                return Err(Error::Parse(format!(
                    "over-lined part cannot carry a multiplicity: `{token}`"
                )));
            }
            (parse_number(p, token)?, parse_number(m, token)?)
        }
        None => (parse_number(body, token)?, 1),
    };
    if part == 0 {
        return Err(Error::NonPositivePart(0));
    }
    if mult == 0 {
        return Err(Error::Parse(format!("zero multiplicity in `{token}`")));
    }
    Ok((part, mult, overlined))
}

fn tokens(s: &str) -> impl Iterator<Item = &str> {
    s.split_whitespace().filter(|t| *t != EMPTY_SYMBOL)
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Partition::new();
        for token in tokens(s) {
            let (part, mult, overlined) = parse_token(token)?;
            if overlined {
                return Err(Error::Parse(format!(
                    "over-lined part `{token}` in a plain partition"
                )));
            }
            p.add(part, mult);
        }
        Ok(p)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A partition in which each integer may additionally appear once over-lined.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct OverPartition {
    plain: Partition,
    overlined: BTreeSet<u64>,
}

impl OverPartition {
    pub fn new(plain: Partition, overlined: BTreeSet<u64>) -> Result<Self> {
        if overlined.contains(&0) {
            return Err(Error::NonPositivePart(0));
        }
        Ok(Self { plain, overlined })
    }

    /// Builds from a plain frequency table and over-lined parts; an over-lined
    /// part listed twice is rejected.
    pub fn from_parts(plain: &[u64], overlined: &[u64]) -> Result<Self> {
        let mut set = BTreeSet::new();
        for &o in overlined {
            if o == 0 {
                return Err(Error::NonPositivePart(0));
            }
            if !set.insert(o) {
                return Err(Error::Parse(format!("over-lined part {o} repeated")));
            }
        }
        Ok(Self {
            plain: Partition::from_parts(plain)?,
            overlined: set,
        })
    }

    pub fn plain(&self) -> &Partition {
        &self.plain
    }

    pub fn overlined(&self) -> &BTreeSet<u64> {
        &self.overlined
    }

    /// `f_i`, the plain frequency of `i`.
    pub fn plain_multiplicity(&self, part: u64) -> u64 {
        self.plain.multiplicity(part)
    }

    /// `f_ī ∈ {0, 1}`.
    pub fn overlined_multiplicity(&self, part: u64) -> u64 {
        u64::from(self.overlined.contains(&part))
    }

    pub fn is_empty(&self) -> bool {
        self.plain.is_empty() && self.overlined.is_empty()
    }

    /// Plain and over-lined parts counted with multiplicity.
    pub fn num_parts(&self) -> u64 {
        self.plain.num_parts() + self.overlined.len() as u64
    }

    pub fn weight(&self) -> u64 {
        self.plain.weight() + self.overlined.iter().sum::<u64>()
    }

    pub fn largest_part(&self) -> Option<u64> {
        let a = self.plain.largest_part();
        let b = self.overlined.iter().next_back().copied();
        a.max(b)
    }

    /// Descending part list where `ī` ranks just above `i`. Sorting keys in
    /// reverse gives the enumeration order of [`enumerate_overpartitions`].
    pub fn order_key(&self) -> Vec<(u64, bool)> {
        let mut key = Vec::new();
        let top = self.largest_part().unwrap_or(0);
        for part in (1..=top).rev() {
            if self.overlined.contains(&part) {
                key.push((part, true));
            }
            for _ in 0..self.plain.multiplicity(part) {
                key.push((part, false));
            }
        }
        key
    }
}

impl From<Partition> for OverPartition {
    fn from(plain: Partition) -> Self {
        Self {
            plain,
            overlined: BTreeSet::new(),
        }
    }
}

impl fmt::Debug for OverPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OverPartition({self})")
    }
}

impl fmt::Display for OverPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str(EMPTY_SYMBOL);
        }
        let mut first = true;
        let top = self.largest_part().unwrap_or(0);
        for part in self
            .plain
            .iter()
            .map(|(p, _)| p)
            .chain(self.overlined.iter().copied())
            .collect::<BTreeSet<_>>()
        {
            debug_assert!(part <= top);
            match self.plain.multiplicity(part) {
                0 => {}
                1 => write_token(f, &mut first, format_args!("{part}"))?,
                m => write_token(f, &mut first, format_args!("{part}^{m}"))?,
            }
            if self.overlined.contains(&part) {
                write_token(f, &mut first, format_args!("{part}~"))?;
            }
        }
        Ok(())
    }
}

impl FromStr for OverPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut plain = Partition::new();
        let mut overlined = BTreeSet::new();
        for token in tokens(s) {
            let (part, mult, over) = parse_token(token)?;
            if over {
                if !overlined.insert(part) {
                    return Err(Error::Parse(format!("over-lined part {part} repeated")));
                }
            } else {
                plain.add(part, mult);
            }
        }
        Ok(Self { plain, overlined })
    }
}

/// All partitions of `n` accepted by `filter`, in descending lexicographic
/// order of their non-increasing part lists.
pub fn enumerate_partitions<F>(n: u64, filter: F) -> Vec<Partition>
where
    F: Fn(&Partition) -> bool,
{
    let mut out = Vec::new();
    let mut stack = Vec::new();
    gen_partitions(n, n, &mut stack, &mut |parts| {
        let p = Partition::from_frequencies(parts.iter().copied()).expect("positive parts");
        if filter(&p) {
            out.push(p);
        }
    });
    out
}

/// Walks partitions of `rem` with parts at most `max_part`, as `(part, mult)`
/// runs in descending part order.
fn gen_partitions<F>(rem: u64, max_part: u64, stack: &mut Vec<(u64, u64)>, emit: &mut F)
where
    F: FnMut(&[(u64, u64)]),
{
    if rem == 0 {
        emit(stack);
        return;
    }
    for part in (1..=max_part.min(rem)).rev() {
        for mult in (1..=rem / part).rev() {
            stack.push((part, mult));
            gen_partitions(rem - part * mult, part - 1, stack, emit);
            stack.pop();
        }
    }
}

/// The `k,l`-regular partitions of `n` (no part divisible by `k`, every
/// multiplicity below `l`), generated with pruning. Same order as
/// [`enumerate_partitions`].
pub fn regular_partitions(n: u64, k: u64, l: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    if k == 0 {
        return out;
    }
    let mut stack = Vec::new();
    gen_regular(n, n, k, l, &mut stack, &mut out);
    out
}

fn gen_regular(
    rem: u64,
    max_part: u64,
    k: u64,
    l: u64,
    stack: &mut Vec<(u64, u64)>,
    out: &mut Vec<Partition>,
) {
    if rem == 0 {
        out.push(Partition::from_frequencies(stack.iter().copied()).expect("positive parts"));
        return;
    }
    for part in (1..=max_part.min(rem)).rev() {
        if part % k == 0 {
            continue;
        }
        let top = (rem / part).min(l.saturating_sub(1));
        for mult in (1..=top).rev() {
            stack.push((part, mult));
            gen_regular(rem - part * mult, part - 1, k, l, stack, out);
            stack.pop();
        }
    }
}

/// All over-partitions of `n` accepted by `filter`. Order: descending
/// lexicographic on part lists where an over-lined `ī` ranks just above `i`.
pub fn enumerate_overpartitions<F>(n: u64, filter: F) -> Vec<OverPartition>
where
    F: Fn(&OverPartition) -> bool,
{
    let mut out = Vec::new();
    let mut stack = Vec::new();
    gen_overpartitions(n, n, &mut stack, &mut |runs| {
        let mut plain = Partition::new();
        let mut overlined = BTreeSet::new();
        for &(part, mult, over) in runs {
            plain.add(part, mult);
            if over {
                overlined.insert(part);
            }
        }
        let op = OverPartition { plain, overlined };
        if filter(&op) {
            out.push(op);
        }
    });
    out
}

fn gen_overpartitions<F>(rem: u64, max_part: u64, stack: &mut Vec<(u64, u64, bool)>, emit: &mut F)
where
    F: FnMut(&[(u64, u64, bool)]),
{
    if rem == 0 {
        emit(stack);
        return;
    }
    for part in (1..=max_part.min(rem)).rev() {
        for over in [true, false] {
            let base = if over { part } else { 0 };
            if base > rem {
                continue;
            }
            for mult in (0..=(rem - base) / part).rev() {
                if !over && mult == 0 {
                    continue;
                }
                stack.push((part, mult, over));
                gen_overpartitions(rem - base - part * mult, part - 1, stack, emit);
                stack.pop();
            }
        }
    }
}
