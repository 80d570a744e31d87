//! Slow, obviously-correct oracles shared by the integration tests. They work
//! on plain part lists so they share no code with the library.

#![allow(dead_code)]

use std::collections::BTreeMap;

use lglaisher::Partition;
use rand::Rng;

/// Every partition of `n` as a non-increasing part list.
pub fn all_part_lists(n: u64) -> Vec<Vec<u64>> {
    fn go(rem: u64, max: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=max.min(rem)).rev() {
            cur.push(part);
            go(rem - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn counts(parts: &[u64]) -> BTreeMap<u64, u64> {
    let mut m = BTreeMap::new();
    for &p in parts {
        *m.entry(p).or_insert(0) += 1;
    }
    m
}

/// No part divisible by `k` and no part repeated `l` or more times.
pub fn is_kl_regular(parts: &[u64], k: u64, l: u64) -> bool {
    parts.iter().all(|p| p % k != 0) && counts(parts).values().all(|&m| m < l)
}

pub fn to_partition(parts: &[u64]) -> Partition {
    Partition::from_parts(parts).unwrap()
}

pub fn to_parts(p: &Partition) -> Vec<u64> {
    p.parts_desc()
}

/// `k,l`-regular partitions of `n` by brute-force filtering.
pub fn regular_by_filter(n: u64, k: u64, l: u64) -> Vec<Vec<u64>> {
    all_part_lists(n)
        .into_iter()
        .filter(|p| is_kl_regular(p, k, l))
        .collect()
}

/// Glaisher's merge rule applied in a random order until no value occurs
/// `k` times.
pub fn merge_until_stable(parts: &[u64], k: u64, rng: &mut impl Rng) -> Vec<u64> {
    let mut c = counts(parts);
    loop {
        let mergeable: Vec<u64> = c.iter().filter(|(_, &m)| m >= k).map(|(&p, _)| p).collect();
        if mergeable.is_empty() {
            break;
        }
        let j = mergeable[rng.gen_range(0..mergeable.len())];
        *c.get_mut(&j).unwrap() -= k;
        if c[&j] == 0 {
            c.remove(&j);
        }
        *c.entry(j * k).or_insert(0) += 1;
    }
    let mut out: Vec<u64> = c.iter().flat_map(|(&p, &m)| std::iter::repeat_n(p, m as usize)).collect();
    out.reverse();
    out
}

/// Splits every part divisible by `k` into `k` equal pieces until none is.
pub fn split_until_regular(parts: &[u64], k: u64) -> Vec<u64> {
    let mut stack = parts.to_vec();
    let mut out = Vec::new();
    while let Some(p) = stack.pop() {
        if p % k == 0 {
            stack.extend(std::iter::repeat_n(p / k, k as usize));
        } else {
            out.push(p);
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Partition numbers `p(0..=n)` from Euler's pentagonal recurrence.
pub fn partition_numbers(n: usize) -> Vec<u64> {
    let mut p = vec![0i64; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut acc = 0i64;
        for j in 1.. {
            let g1 = j * (3 * j - 1) / 2;
            if g1 > m {
                break;
            }
            let sign = if j % 2 == 1 { 1 } else { -1 };
            acc += sign * p[m - g1];
            let g2 = j * (3 * j + 1) / 2;
            if g2 <= m {
                acc += sign * p[m - g2];
            }
        }
        p[m] = acc;
    }
    p.into_iter().map(|x| x as u64).collect()
}
