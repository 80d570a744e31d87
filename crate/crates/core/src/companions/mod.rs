//! Schur-type companion theorems as executable constraint systems, plus
//! harnesses comparing them with `k,2`-regular partition counts.

mod constraint;
mod search;
mod theorems;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, regular_partitions, OverPartition, Partition};

pub use constraint::{
    ConstraintFamily, ConstraintSystem, FrequencyTerm, Frequencies, IndexFilter,
};
pub use search::constrained_by_weight;
pub use theorems::{aab_system, alladi_system, companion_system, schur_system};

pub fn schur_check(p: &Partition) -> bool {
    schur_system().holds(&OverPartition::from(p.clone()))
}

pub fn alladi_check(op: &OverPartition) -> bool {
    alladi_system().holds(op)
}

pub fn companion_check(op: &OverPartition) -> bool {
    companion_system().holds(op)
}

/// An object on the pair side of the mod-5 theorem: `mu` carries the window
/// conditions, `nu` has parts divisible by 5 above a bound set by `mu`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AabPair {
    pub mu: OverPartition,
    pub nu: Partition,
}

impl AabPair {
    /// `20 + 10·(number of parts of mu) − [1 is a plain part of mu]`.
    pub fn nu_bound(mu: &OverPartition) -> u64 {
        20 + 10 * mu.num_parts() - u64::from(mu.plain_multiplicity(1) > 0)
    }

    pub fn weight(&self) -> u64 {
        self.mu.weight() + self.nu.weight()
    }

    pub fn nu_admissible(&self) -> bool {
        let bound = Self::nu_bound(&self.mu);
        self.nu.iter().all(|(part, _)| part % 5 == 0 && part >= bound)
    }
}

impl fmt::Display for AabPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} | {})", self.mu, self.nu)
    }
}

pub fn aab_pair_check(pair: &AabPair) -> bool {
    aab_system().holds(&pair.mu) && pair.nu_admissible()
}

/// Partitions of `m` into multiples of 5 that are all at least `bound`.
fn nu_partitions(m: u64, bound: u64) -> Vec<Partition> {
    if !m.is_multiple_of(5) {
        return Vec::new();
    }
    let min_unit = bound.div_ceil(5);
    enumerate_partitions(m / 5, |p| p.iter().all(|(part, _)| part >= min_unit))
        .into_iter()
        .map(|p| p.scaled(5).expect("weight fits"))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    Schur,
    Alladi,
    AabPair,
    Companion,
}

impl Variant {
    pub const ALL: [Variant; 4] = [Self::Schur, Self::Alladi, Self::AabPair, Self::Companion];

    /// The `k` of the `R_{k,2}` class this variant is paired with.
    pub fn k(self) -> u64 {
        match self {
            Self::Schur => 3,
            Self::Alladi => 4,
            Self::AabPair | Self::Companion => 5,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Schur => "schur",
            Self::Alladi => "alladi",
            Self::AabPair => "aab-pair",
            Self::Companion => "companion",
        }
    }

    /// Constraint system on the over-partition (or `mu`) side.
    pub fn system(self) -> ConstraintSystem {
        match self {
            Self::Schur => schur_system(),
            Self::Alladi => alladi_system(),
            Self::AabPair => aab_system(),
            Self::Companion => companion_system(),
        }
    }

    /// Whether a count mismatch is a hard failure rather than a reported
    /// discrepancy.
    pub fn strict(self) -> bool {
        matches!(self, Self::Schur | Self::Alladi)
    }

    /// Variants matching a given `k`.
    pub fn for_k(k: u64) -> Vec<Variant> {
        Self::ALL.into_iter().filter(|v| v.k() == k).collect()
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown variant `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CompanionObject {
    Plain(Partition),
    Over(OverPartition),
    Pair(AabPair),
}

impl fmt::Display for CompanionObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Plain(p) => p.fmt(f),
            Self::Over(op) => op.fmt(f),
            Self::Pair(pair) => pair.fmt(f),
        }
    }
}

/// Companion-side objects of every weight `0..=n_max`, indexed by weight.
pub fn companion_objects(variant: Variant, n_max: u64) -> Vec<Vec<CompanionObject>> {
    let found = constrained_by_weight(&variant.system(), n_max);
    match variant {
        Variant::Schur => found
            .into_iter()
            .map(|g| g.into_iter().map(|op| CompanionObject::Plain(op.plain().clone())).collect())
            .collect(),
        Variant::Alladi | Variant::Companion => found
            .into_iter()
            .map(|g| g.into_iter().map(CompanionObject::Over).collect())
            .collect(),
        Variant::AabPair => {
            let mut out = vec![Vec::new(); n_max as usize + 1];
            for (w, group) in found.iter().enumerate() {
                for mu in group {
                    let bound = AabPair::nu_bound(mu);
                    for n in w as u64..=n_max {
                        for nu in nu_partitions(n - w as u64, bound) {
                            out[n as usize].push(CompanionObject::Pair(AabPair {
                                mu: mu.clone(),
                                nu,
                            }));
                        }
                    }
                }
            }
            out
        }
    }
}

/// Number of companion-side objects of weight exactly `n`.
pub fn count_constrained(n: u64, variant: Variant) -> usize {
    companion_objects(variant, n)[n as usize].len()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EquinumerosityRow {
    pub n: u64,
    pub regular: usize,
    pub companion: usize,
}

/// Both object lists at the smallest weight where the counts differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Discrepancy {
    pub weight: u64,
    pub regular_objects: Vec<Partition>,
    pub companion_objects: Vec<CompanionObject>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquinumerosityReport {
    pub variant: Variant,
    pub n_max: u64,
    pub rows: Vec<EquinumerosityRow>,
    pub discrepancy: Option<Discrepancy>,
}

impl EquinumerosityReport {
    pub fn passed(&self) -> bool {
        self.discrepancy.is_none()
    }

    /// `PASS`, or `FAIL`/`DISCREPANCY` (see [`Variant::strict`]) with the
    /// first mismatching weight.
    pub fn verdict(&self) -> String {
        match &self.discrepancy {
            None => format!("PASS {} k={} n<={}", self.variant, self.variant.k(), self.n_max),
            Some(d) => format!(
                "{} {} k={} first at n={}: {} regular vs {} companion",
                if self.variant.strict() { "FAIL" } else { "DISCREPANCY" },
                self.variant,
                self.variant.k(),
                d.weight,
                d.regular_objects.len(),
                d.companion_objects.len()
            ),
        }
    }

    /// Tab-separated table, then the object lists of a discrepancy (if any),
    /// then the verdict line.
    pub fn render_tsv(&self) -> String {
        let k = self.variant.k();
        let mut out = format!("n\tR_{{{k},2}}(n)\t{}\tmatch\n", self.variant);
        for r in &self.rows {
            let ok = if r.regular == r.companion { "yes" } else { "no" };
            out += &format!("{}\t{}\t{}\t{}\n", r.n, r.regular, r.companion, ok);
        }
        if let Some(d) = &self.discrepancy {
            out += &format!("# regular objects at n={}\n", d.weight);
            for p in &d.regular_objects {
                out += &format!("#\t{p}\n");
            }
            out += &format!("# {} objects at n={}\n", self.variant, d.weight);
            for o in &d.companion_objects {
                out += &format!("#\t{o}\n");
            }
        }
        out += &self.verdict();
        out.push('\n');
        out
    }
}

/// Compares `|R_{k,2}(n)|` with the companion-side count for `n ≤ n_max`.
pub fn equinumerosity_report(n_max: u64, variant: Variant) -> EquinumerosityReport {
    let k = variant.k();
    let objects = companion_objects(variant, n_max);
    let mut rows = Vec::new();
    let mut discrepancy = None;
    for (n, objs) in (0..=n_max).zip(objects) {
        let regular = regular_partitions(n, k, 2);
        rows.push(EquinumerosityRow {
            n,
            regular: regular.len(),
            companion: objs.len(),
        });
        if discrepancy.is_none() && regular.len() != objs.len() {
            discrepancy = Some(Discrepancy {
                weight: n,
                regular_objects: regular,
                companion_objects: objs,
            });
        }
    }
    EquinumerosityReport {
        variant,
        n_max,
        rows,
        discrepancy,
    }
}
