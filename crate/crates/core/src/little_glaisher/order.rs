use itertools::Itertools;

use crate::error::Result;
use crate::little_glaisher::{little_glaisher_map, validate_factorization, Strategy};
use crate::mixed_radix::FactorList;
use crate::partition::{regular_partitions, Partition};

use super::factorization::prime_exponents;

/// One input whose image changed when the prime factors were reordered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderMismatch {
    pub lambda: Partition,
    pub k_factors: Vec<u64>,
    pub l_factors: Vec<u64>,
    pub baseline: Partition,
    pub image: Partition,
}

/// Outcome of running the main bijection under every ordering of the prime
/// factor lists. Purely empirical: nothing is asserted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderReport {
    pub k: u64,
    pub l: u64,
    pub n_max: u64,
    pub k_orderings: usize,
    pub l_orderings: usize,
    pub partitions_checked: usize,
    pub mismatch_count: usize,
    /// The first few mismatches, in enumeration order.
    pub examples: Vec<OrderMismatch>,
}

impl OrderReport {
    pub fn images_coincide(&self) -> bool {
        self.mismatch_count == 0
    }
}

const MAX_EXAMPLES: usize = 10;

fn distinct_orderings(factors: &[u64]) -> Vec<Vec<u64>> {
    let n = factors.len();
    factors.iter().copied().permutations(n).unique().collect()
}

fn primes_with_multiplicity(n: u64) -> Vec<u64> {
    prime_exponents(n)
        .into_iter()
        .flat_map(|(p, e)| std::iter::repeat_n(p, e as usize))
        .collect()
}

/// Compares the images under every reordering of the prime factorizations of
/// `k` and `l` against the ascending order, for all `k,l`-regular partitions
/// of weight at most `n_max`.
pub fn order_dependence_report(k: u64, l: u64, n_max: u64) -> Result<OrderReport> {
    let k_orders = distinct_orderings(&primes_with_multiplicity(k));
    let l_orders = distinct_orderings(&primes_with_multiplicity(l));
    let mut strategies = Vec::new();
    for kf in &k_orders {
        for lf in &l_orders {
            let cf = validate_factorization(
                FactorList::new(kf.clone())?,
                FactorList::new(lf.clone())?,
                k,
                l,
            )?;
            strategies.push((kf.clone(), lf.clone(), Strategy::Explicit(cf)));
        }
    }

    let mut report = OrderReport {
        k,
        l,
        n_max,
        k_orderings: k_orders.len(),
        l_orderings: l_orders.len(),
        partitions_checked: 0,
        mismatch_count: 0,
        examples: Vec::new(),
    };
    for n in 0..=n_max {
        for lambda in regular_partitions(n, k, l) {
            report.partitions_checked += 1;
            let baseline = little_glaisher_map(&lambda, k, l, &Strategy::Prime)?;
            for (kf, lf, strategy) in &strategies {
                let image = little_glaisher_map(&lambda, k, l, strategy)?;
                if image != baseline {
                    report.mismatch_count += 1;
                    if report.examples.len() < MAX_EXAMPLES {
                        report.examples.push(OrderMismatch {
                            lambda: lambda.clone(),
                            k_factors: kf.clone(),
                            l_factors: lf.clone(),
                            baseline: baseline.clone(),
                            image,
                        });
                    }
                }
            }
        }
    }
    Ok(report)
}
