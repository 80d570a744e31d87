//! Exhaustive invariant sweeps behind the CLI's `verify` command.

use std::collections::HashSet;

use itertools::Itertools;
use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::SeedableRng;

use crate::glaisher::{
    dissection_sums, phi_forward_direct, phi_forward_iterative, phi_inverse, RandomOrder,
    SmallestFirst,
};
use crate::little_glaisher::{little_glaisher_inverse, little_glaisher_map, Strategy};
use crate::mixed_radix::{
    compose_digits, decompose_digits, factor_form, unfactor_form, FactorList,
};
use crate::partition::{enumerate_partitions, regular_partitions};
use crate::qseries::{eta_quotient_side, glaisher_series, regular_product_side};

const MAX_FAILURES: usize = 20;

/// Tally of one sweep; keeps the first few failure descriptions.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SweepOutcome {
    pub name: String,
    pub checks: u64,
    pub failure_count: u64,
    pub failures: Vec<String>,
}

impl SweepOutcome {
    fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            ..Self::default()
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failure_count += 1;
            if self.failures.len() < MAX_FAILURES {
                self.failures.push(describe());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    pub fn summary(&self) -> String {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        format!(
            "{verdict} {}: {} checks, {} failures",
            self.name, self.checks, self.failure_count
        )
    }
}

/// For each `(k, l)` and `n ≤ n_max`: the map lands in `R_{l,k}(n)`, is
/// injective, hits every element, and the inverse undoes it.
pub fn verify_bijection(ks: &[u64], ls: &[u64], n_max: u64, strategies: &[Strategy]) -> SweepOutcome {
    let mut out = SweepOutcome::new("bijection");
    for &k in ks {
        for &l in ls {
            for strategy in strategies {
                for n in 0..=n_max {
                    bijection_at(&mut out, k, l, n, strategy);
                }
            }
        }
    }
    out
}

fn bijection_at(out: &mut SweepOutcome, k: u64, l: u64, n: u64, strategy: &Strategy) {
    let domain = regular_partitions(n, k, l);
    let codomain: HashSet<_> = regular_partitions(n, l, k).into_iter().collect();
    out.check(domain.len() == codomain.len(), || {
        format!("k={k} l={l} n={n}: |R_kl|={} |R_lk|={}", domain.len(), codomain.len())
    });
    let mut seen = HashSet::new();
    for lambda in &domain {
        let mu = match little_glaisher_map(lambda, k, l, strategy) {
            Ok(mu) => mu,
            Err(e) => {
                out.check(false, || format!("k={k} l={l} {lambda}: {e}"));
                continue;
            }
        };
        out.check(codomain.contains(&mu), || {
            format!("k={k} l={l} {lambda} -> {mu} not {l},{k}-regular of weight {n}")
        });
        out.check(seen.insert(mu.clone()), || {
            format!("k={k} l={l} {lambda} -> {mu} collides")
        });
        let back = little_glaisher_inverse(&mu, k, l, strategy);
        out.check(back.as_ref() == Ok(lambda), || {
            format!("k={k} l={l} {lambda} -> {mu} -> {back:?}")
        });
    }
}

/// The product, swapped-product and eta-quotient forms agree for every
/// `k, l ≤ kl_max`, and the three Glaisher forms agree for every `k ≤ kl_max`.
pub fn verify_series(kl_max: usize, order: usize) -> SweepOutcome {
    let mut out = SweepOutcome::new("series");
    for k in 1..=kl_max {
        for l in 1..=kl_max {
            let a = regular_product_side::<BigInt>(k, l, order);
            let b = regular_product_side::<BigInt>(l, k, order);
            let c = eta_quotient_side::<BigInt>(k, l, order);
            out.check(a == b && b == c, || format!("k={k} l={l}: product forms differ"));
        }
        let forms = glaisher_series::<BigInt>(k, order);
        out.check(forms.agree(), || format!("k={k}: Glaisher forms differ"));
    }
    out
}

/// Coefficient `n` of the product side equals `|R_{k,l}(n)|`.
pub fn verify_series_counts(ks: &[u64], ls: &[u64], n_max: u64) -> SweepOutcome {
    let mut out = SweepOutcome::new("series-counts");
    for &k in ks {
        for &l in ls {
            let s = regular_product_side::<BigInt>(k as usize, l as usize, n_max as usize);
            for n in 0..=n_max {
                let count = regular_partitions(n, k, l).len();
                out.check(*s.coeff(n as usize) == BigInt::from(count), || {
                    format!("k={k} l={l} n={n}: coefficient {} vs {count}", s.coeff(n as usize))
                });
            }
        }
    }
    out
}

/// Glaisher's map on every `k`-regular partition of weight `≤ n_max`:
/// iterative and direct forms agree under `policies` random merge orders,
/// traces replay, dissection sums are conserved, the step count respects
/// `⌊Σf_i/(k−1)⌋`, and the inverse round-trips.
pub fn verify_glaisher(ks: &[u64], n_max: u64, policies: usize, seed: u64) -> SweepOutcome {
    let mut out = SweepOutcome::new("glaisher");
    let mut rng = StdRng::seed_from_u64(seed);
    for &k in ks {
        for n in 0..=n_max {
            for p in enumerate_partitions(n, |p| p.is_k_regular(k)) {
                let direct = phi_forward_direct(&p, k).expect("k-regular input");
                let sums = dissection_sums(&p, k).expect("k-regular input");
                let bound = p.num_parts() / (k - 1);
                let (first, _) = phi_forward_iterative(&p, k, &mut SmallestFirst).expect("k-regular input");
                out.check(first == direct, || format!("k={k} {p}: iterative {first} vs direct {direct}"));
                for _ in 0..policies {
                    let (img, trace) =
                        phi_forward_iterative(&p, k, &mut RandomOrder(&mut rng)).expect("k-regular input");
                    out.check(img == direct, || format!("k={k} {p}: order-dependent image {img}"));
                    out.check(trace.len() as u64 <= bound, || {
                        format!("k={k} {p}: {} steps exceeds {bound}", trace.len())
                    });
                    let conserved = trace.replay(&p).is_ok_and(|states| {
                        states
                            .iter()
                            .all(|s| dissection_sums(s, k).is_ok_and(|x| x == sums))
                    });
                    out.check(conserved, || format!("k={k} {p}: dissection sums drift"));
                }
                let back = phi_inverse(&direct, k);
                out.check(back.as_ref() == Ok(&p), || format!("k={k} {p}: inverse gave {back:?}"));
            }
        }
    }
    out
}

/// Every factor list with at most `max_len` entries from `pool` and product
/// at most `max_product`: digits compose/decompose bijectively onto
/// `0..d`, and factor form classifies `1..=2d` minus multiples of `d`
/// uniquely (classes repeat with period `d`).
pub fn verify_mixed_radix(pool: &[u64], max_len: usize, max_product: u64) -> SweepOutcome {
    let mut out = SweepOutcome::new("mixed-radix");
    let mut lists: Vec<Vec<u64>> = vec![Vec::new()];
    let mut frontier = lists.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for base in &frontier {
            let prod: u64 = base.iter().product();
            for &d in pool {
                if prod * d <= max_product {
                    let mut v = base.clone();
                    v.push(d);
                    next.push(v);
                }
            }
        }
        lists.extend(next.iter().cloned());
        frontier = next;
    }
    for factors in lists {
        let f = FactorList::new(factors).expect("positive factors");
        mixed_radix_for(&mut out, &f);
    }
    out
}

fn mixed_radix_for(out: &mut SweepOutcome, f: &FactorList) {
    let d = f.product();
    let mut hit = vec![false; d as usize];
    let tuples = f.factors().iter().map(|&m| 0..m).multi_cartesian_product();
    for digits in tuples {
        let r = compose_digits(&digits, f);
        let fresh = r.as_ref().is_ok_and(|&r| r < d && !std::mem::replace(&mut hit[r as usize], true));
        out.check(fresh, || format!("{f}: {digits:?} composes to {r:?}"));
        if let Ok(r) = r {
            let back = decompose_digits(r, f);
            out.check(back.as_ref() == Ok(&digits), || format!("{f}: {r} decomposes to {back:?}"));
        }
    }
    out.check(hit.iter().all(|&h| h), || format!("{f}: digit map not onto"));
    if d == 1 {
        return;
    }
    for i in 1..=2 * d {
        let form = factor_form(i, f);
        if i % d == 0 {
            out.check(form.is_err(), || format!("{f}: {i} is divisible but classified"));
            continue;
        }
        let ok = form.is_ok_and(|ff| {
            ff.cofactor % f.factor(ff.index) != 0 && unfactor_form(ff.index, ff.cofactor, f) == Ok(i)
        });
        out.check(ok, || format!("{f}: factor form of {i} is wrong"));
    }
}
