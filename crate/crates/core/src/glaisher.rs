//! Glaisher's bijection between partitions with no part divisible by `k` and
//! partitions whose multiplicities are all below `k`.
//!
//! Two forms are provided. The iterative one repeatedly merges `k` copies of
//! a part `j` into a single part `jk`, in an order chosen by an
//! [`OrderPolicy`], and records a [`MergeTrace`]. The direct one writes each
//! multiplicity `f_i` in base `k` and places digit `h` on the part `i·k^h`.
//! Both produce the same partition whatever the merge order.

use std::collections::BTreeMap;

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Chooses which mergeable part to merge next.
pub trait OrderPolicy {
    /// `mergeable` is non-empty and sorted ascending; returns an index into it.
    fn choose(&mut self, mergeable: &[u64]) -> usize;
}

/// Merge the smallest mergeable part first. The default policy.
#[derive(Debug, Clone, Copy, Default)]
pub struct SmallestFirst;

impl OrderPolicy for SmallestFirst {
    fn choose(&mut self, _mergeable: &[u64]) -> usize {
        0
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct LargestFirst;

impl OrderPolicy for LargestFirst {
    fn choose(&mut self, mergeable: &[u64]) -> usize {
        mergeable.len() - 1
    }
}

/// Picks uniformly at random among the mergeable parts.
#[derive(Debug, Clone)]
pub struct RandomOrder<R>(pub R);

impl<R: Rng> OrderPolicy for RandomOrder<R> {
    fn choose(&mut self, mergeable: &[u64]) -> usize {
        self.0.gen_range(0..mergeable.len())
    }
}

/// One merge: `k` copies of `part` became one copy of `merged_into`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MergeStep {
    pub step: usize,
    pub part: u64,
    pub merged_into: u64,
    pub part_before: u64,
    pub part_after: u64,
    pub merged_before: u64,
    pub merged_after: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct MergeTrace {
    pub k: u64,
    pub steps: Vec<MergeStep>,
}

impl MergeTrace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Replays the trace from `start`, returning the partition after every
    /// step (the first entry is `start` itself). Fails if a step does not
    /// match the frequencies it claims to change.
    pub fn replay(&self, start: &Partition) -> Result<Vec<Partition>> {
        let mut freq: BTreeMap<u64, u64> = start.iter().collect();
        let mut states = vec![start.clone()];
        for s in &self.steps {
            let before = freq.get(&s.part).copied().unwrap_or(0);
            let merged = freq.get(&s.merged_into).copied().unwrap_or(0);
            let consistent = s.merged_into == s.part * self.k
                && before == s.part_before
                && merged == s.merged_before
                && s.part_after + self.k == s.part_before
                && s.merged_after == s.merged_before + 1;
            if !consistent {
                return Err(Error::Parse(format!("inconsistent merge step {}", s.step)));
            }
            set_freq(&mut freq, s.part, s.part_after);
            set_freq(&mut freq, s.merged_into, s.merged_after);
            states.push(Partition::from_frequencies(freq.iter().map(|(&p, &m)| (p, m)))?);
        }
        Ok(states)
    }
}

fn set_freq(freq: &mut BTreeMap<u64, u64>, part: u64, mult: u64) {
    if mult == 0 {
        freq.remove(&part);
    } else {
        freq.insert(part, mult);
    }
}

fn check_k(k: u64) -> Result<()> {
    if k < 2 {
        return Err(Error::ParameterTooSmall {
            name: "k",
            min: 2,
            value: k,
        });
    }
    Ok(())
}

/// Splits `j` as `i·k^h` with `k ∤ i`; returns `(i, h, k^h)`.
pub fn strip_power(mut j: u64, k: u64) -> (u64, u32, u64) {
    debug_assert!(j > 0 && k >= 2);
    let mut h = 0;
    let mut pow = 1;
    while j.is_multiple_of(k) {
        j /= k;
        h += 1;
        pow *= k;
    }
    (j, h, pow)
}

/// `S_i = Σ_h f_{i·k^h}·k^h` for every `i` not divisible by `k` with a
/// non-zero value. Every Glaisher merge leaves these sums unchanged.
pub fn dissection_sums(p: &Partition, k: u64) -> Result<BTreeMap<u64, u64>> {
    check_k(k)?;
    let mut sums = BTreeMap::new();
    for (part, mult) in p.iter() {
        let (base, _, pow) = strip_power(part, k);
        let add = mult
            .checked_mul(pow)
            .ok_or(Error::Overflow("dissection sum"))?;
        let e = sums.entry(base).or_insert(0u64);
        *e = e.checked_add(add).ok_or(Error::Overflow("dissection sum"))?;
    }
    Ok(sums)
}

/// Applies Glaisher's merges one at a time until every multiplicity is
/// below `k`.
pub fn phi_forward_iterative<P: OrderPolicy + ?Sized>(
    p: &Partition,
    k: u64,
    policy: &mut P,
) -> Result<(Partition, MergeTrace)> {
    check_k(k)?;
    p.check_k_regular(k)?;
    let mut freq: BTreeMap<u64, u64> = p.iter().collect();
    let mut trace = MergeTrace { k, steps: Vec::new() };
    let mut mergeable = Vec::new();
    loop {
        mergeable.clear();
        mergeable.extend(freq.iter().filter(|(_, &m)| m >= k).map(|(&p, _)| p));
        if mergeable.is_empty() {
            break;
        }
        let idx = policy.choose(&mergeable);
        let part = mergeable[idx];
        let merged_into = part
            .checked_mul(k)
            .ok_or(Error::Overflow("merged part"))?;
        let part_before = freq[&part];
        let merged_before = freq.get(&merged_into).copied().unwrap_or(0);
        let step = MergeStep {
            step: trace.steps.len() + 1,
            part,
            merged_into,
            part_before,
            part_after: part_before - k,
            merged_before,
            merged_after: merged_before + 1,
        };
        set_freq(&mut freq, part, step.part_after);
        set_freq(&mut freq, merged_into, step.merged_after);
        trace.steps.push(step);
    }
    let out = Partition::from_frequencies(freq)?;
    Ok((out, trace))
}

/// Glaisher's map in closed form: the multiplicity of `i·k^h` in the image is
/// base-`k` digit `h` of the multiplicity of `i`.
pub fn phi_forward_direct(p: &Partition, k: u64) -> Result<Partition> {
    check_k(k)?;
    p.check_k_regular(k)?;
    let mut out = Partition::new();
    for (part, mut mult) in p.iter() {
        let mut scaled = part;
        while mult > 0 {
            let digit = mult % k;
            mult /= k;
            out.add(scaled, digit);
            if mult > 0 {
                scaled = scaled
                    .checked_mul(k)
                    .ok_or(Error::Overflow("base-k digit part"))?;
            }
        }
    }
    Ok(out)
}

/// Inverse of Glaisher's map: every part `i·k^h` (with `k ∤ i`) of
/// multiplicity `g` contributes `g·k^h` copies of `i`.
pub fn phi_inverse(p: &Partition, k: u64) -> Result<Partition> {
    check_k(k)?;
    p.check_multiplicities_below(k)?;
    let sums = dissection_sums(p, k)?;
    Partition::from_frequencies(sums)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn forward_examples() {
        let (out, trace) = phi_forward_iterative(&p("1^3 3"), 2, &mut SmallestFirst).unwrap();
        assert_eq!(out, p("1 2 3"));
        assert_eq!(trace.len(), 1);

        let (out, trace) = phi_forward_iterative(&p("5"), 3, &mut SmallestFirst).unwrap();
        assert_eq!(out, p("5"));
        assert!(trace.is_empty());

        // 1^6 -> 1^4 2 -> 1^2 2^2 -> 2^3 -> 2 4
        let (out, trace) = phi_forward_iterative(&p("1^6"), 2, &mut SmallestFirst).unwrap();
        assert_eq!(out, p("2 4"));
        assert_eq!(trace.len(), 4);
        let states = trace.replay(&p("1^6")).unwrap();
        let expected = ["1^6", "1^4 2", "1^2 2^2", "2^3", "2 4"];
        assert_eq!(states, expected.iter().map(|s| p(s)).collect::<Vec<_>>());
    }

    #[test]
    fn direct_examples() {
        assert_eq!(phi_forward_direct(&p("1^3 3"), 2).unwrap(), p("1 2 3"));
        assert_eq!(phi_forward_direct(&Partition::new(), 7).unwrap(), Partition::new());
        assert_eq!(phi_forward_direct(&p("1^7 5"), 2).unwrap(), p("1 2 4 5"));
        assert_eq!(phi_forward_direct(&p("1^6"), 2).unwrap(), p("2 4"));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(phi_inverse(&p("1 2 3"), 2).unwrap(), p("1^3 3"));
        assert_eq!(phi_inverse(&p("1 3^2 5"), 3).unwrap(), p("1^7 5"));
        assert_eq!(phi_inverse(&Partition::new(), 5).unwrap(), Partition::new());
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(matches!(
            phi_forward_direct(&p("1"), 1),
            Err(Error::ParameterTooSmall { .. })
        ));
        assert!(matches!(
            phi_forward_iterative(&p("2"), 2, &mut SmallestFirst),
            Err(Error::NotRegular { .. })
        ));
        assert!(matches!(phi_forward_direct(&p("6 1"), 3), Err(Error::NotRegular { .. })));
        assert!(matches!(
            phi_inverse(&p("1^2"), 2),
            Err(Error::MultiplicityTooLarge { .. })
        ));
        assert!(phi_inverse(&p("1"), 0).is_err());
    }

    #[test]
    fn large_multiplicity_needs_no_bound() {
        let big = Partition::from_frequencies([(1, 1_000_000)]).unwrap();
        let out = phi_forward_direct(&big, 2).unwrap();
        assert_eq!(out.weight(), 1_000_000);
        assert_eq!(out.max_multiplicity(), 1);
        assert_eq!(phi_inverse(&out, 2).unwrap(), big);
    }

    #[test]
    fn policies_agree() {
        let lam = p("1^9 5^4 7^11");
        let direct = phi_forward_direct(&lam, 3).unwrap();
        let (a, _) = phi_forward_iterative(&lam, 3, &mut LargestFirst).unwrap();
        let mut rng = RandomOrder(rand::rngs::StdRng::seed_from_u64(7));
        let (b, _) = phi_forward_iterative(&lam, 3, &mut rng).unwrap();
        assert_eq!(a, direct);
        assert_eq!(b, direct);
    }

    #[test]
    fn strip_power_splits() {
        assert_eq!(strip_power(24, 2), (3, 3, 8));
        assert_eq!(strip_power(7, 3), (7, 0, 1));
        assert_eq!(strip_power(18, 3), (2, 2, 9));
    }
}
