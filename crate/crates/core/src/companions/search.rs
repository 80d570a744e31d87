use std::collections::BTreeSet;

use super::constraint::{ConstraintSystem, Frequencies};
use crate::partition::{OverPartition, Partition};

/// Frequencies being assigned index by index, from 1 upward.
struct State {
    plain: Vec<u64>,
    over: Vec<u64>,
}

impl Frequencies for State {
    fn plain_at(&self, index: i64) -> u64 {
        usize::try_from(index)
            .ok()
            .and_then(|i| self.plain.get(i).copied())
            .unwrap_or(0)
    }

    fn over_at(&self, index: i64) -> u64 {
        usize::try_from(index)
            .ok()
            .and_then(|i| self.over.get(i).copied())
            .unwrap_or(0)
    }
}

struct Search<'a> {
    system: &'a ConstraintSystem,
    n_max: u64,
    state: State,
    found: Vec<Vec<OverPartition>>,
}

impl Search<'_> {
    /// Every family instance touching `index` still within its bound.
    /// Unassigned indices read as 0 and terms are non-negative, so a partial
    /// sum above the bound can never recover.
    fn consistent_at(&self, index: u64) -> bool {
        self.system.families.iter().all(|fam| {
            fam.terms.iter().all(|t| {
                let base = index as i64 - t.offset;
                if base < 1 || !fam.filter.admits(base as u64) {
                    return true;
                }
                fam.sum_at(&self.state, base as u64) <= fam.bound
            })
        })
    }

    fn record(&mut self, weight: u64) {
        let mut plain = Partition::new();
        let mut over = BTreeSet::new();
        for (i, (&m, &b)) in self.state.plain.iter().zip(&self.state.over).enumerate() {
            if m > 0 {
                plain.add(i as u64, m);
            }
            if b > 0 {
                over.insert(i as u64);
            }
        }
        let op = OverPartition::new(plain, over).expect("positive parts");
        debug_assert!(self.system.holds(&op), "{op} escaped pruning");
        self.found[weight as usize].push(op);
    }

    fn dfs(&mut self, index: u64, used: u64) {
        let rem = self.n_max - used;
        if index > rem {
            self.record(used);
            return;
        }
        let i = index as usize;
        let over_choices: &[u64] = if self.system.overlines_allowed { &[0, 1] } else { &[0] };
        for &b in over_choices {
            let base = b * index;
            if base > rem {
                continue;
            }
            for m in 0..=(rem - base) / index {
                self.state.plain[i] = m;
                self.state.over[i] = b;
                let ok = (m == 0 && b == 0) || self.consistent_at(index);
                if ok {
                    self.dfs(index + 1, used + base + m * index);
                }
                self.state.plain[i] = 0;
                self.state.over[i] = 0;
                if !ok {
                    // a larger multiplicity only adds to the same sums
                    break;
                }
            }
        }
    }
}

/// All over-partitions of weight at most `n_max` satisfying `system`,
/// grouped by weight; each group follows the enumeration order of
/// [`crate::partition::enumerate_overpartitions`].
pub fn constrained_by_weight(system: &ConstraintSystem, n_max: u64) -> Vec<Vec<OverPartition>> {
    let size = n_max as usize + 1;
    let mut search = Search {
        system,
        n_max,
        state: State {
            plain: vec![0; size + 1],
            over: vec![0; size + 1],
        },
        found: vec![Vec::new(); size],
    };
    search.dfs(1, 0);
    for group in &mut search.found {
        group.sort_by_cached_key(|op| std::cmp::Reverse(op.order_key()));
    }
    search.found
}
