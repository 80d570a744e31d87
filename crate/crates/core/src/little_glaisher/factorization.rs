use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::mixed_radix::FactorList;

/// Factorizations `k = k_1⋯k_r`, `l = l_1⋯l_s` in which every pair
/// `(k_u, l_v)` is either equal or coprime.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CompatibleFactorization {
    k: FactorList,
    l: FactorList,
}

impl CompatibleFactorization {
    pub fn k_factors(&self) -> &FactorList {
        &self.k
    }

    pub fn l_factors(&self) -> &FactorList {
        &self.l
    }

    pub fn k(&self) -> u64 {
        self.k.product()
    }

    pub fn l(&self) -> u64 {
        self.l.product()
    }

    /// The same factorization read from the `(l, k)` side.
    pub fn swapped(&self) -> Self {
        Self {
            k: self.l.clone(),
            l: self.k.clone(),
        }
    }
}

impl fmt::Debug for CompatibleFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CompatibleFactorization({self})")
    }
}

impl fmt::Display for CompatibleFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.k, self.l)
    }
}

/// Checks products and the equal-or-coprime condition.
pub fn validate_factorization(
    kf: FactorList,
    lf: FactorList,
    k: u64,
    l: u64,
) -> Result<CompatibleFactorization> {
    for (list, target) in [(&kf, k), (&lf, l)] {
        if list.product() != target {
            return Err(Error::ProductMismatch {
                product: list.product(),
                target,
            });
        }
    }
    for &a in kf.factors() {
        for &b in lf.factors() {
            if a != b && a.gcd(&b) != 1 {
                return Err(Error::IncompatibleFactors {
                    k_factor: a,
                    l_factor: b,
                });
            }
        }
    }
    Ok(CompatibleFactorization { k: kf, l: lf })
}

/// Prime factorization as `prime -> exponent`, by trial division.
pub fn prime_exponents(mut n: u64) -> BTreeMap<u64, u32> {
    let mut out = BTreeMap::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        while n.is_multiple_of(p) {
            *out.entry(p).or_insert(0) += 1;
            n /= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        *out.entry(n).or_insert(0) += 1;
    }
    out
}

fn prime_list(n: u64) -> Vec<u64> {
    prime_exponents(n)
        .into_iter()
        .flat_map(|(p, e)| std::iter::repeat_n(p, e as usize))
        .collect()
}

fn check_positive(k: u64, l: u64) -> Result<()> {
    for (name, value) in [("k", k), ("l", l)] {
        if value == 0 {
            return Err(Error::ParameterTooSmall { name, min: 1, value });
        }
    }
    Ok(())
}

/// Both sides split into primes, ascending, with multiplicity.
pub fn prime_factorization(k: u64, l: u64) -> Result<CompatibleFactorization> {
    check_positive(k, l)?;
    validate_factorization(
        FactorList::new(prime_list(k))?,
        FactorList::new(prime_list(l))?,
        k,
        l,
    )
}

/// For each prime `p` dividing both sides with exponents `a` and `b`, the
/// block `p^gcd(a,b)` repeated `a/gcd` times on the `k` side and `b/gcd`
/// times on the `l` side (shared primes ascending). The primes of `k` absent
/// from `l` are gathered into one trailing factor, and symmetrically for `l`;
/// a trailing factor equal to 1 is omitted.
pub fn optimal_factorization(k: u64, l: u64) -> Result<CompatibleFactorization> {
    check_positive(k, l)?;
    let ek = prime_exponents(k);
    let el = prime_exponents(l);
    let mut kf = Vec::new();
    let mut lf = Vec::new();
    let mut k_rest = 1u64;
    let mut l_rest = 1u64;
    let primes: std::collections::BTreeSet<u64> = ek.keys().chain(el.keys()).copied().collect();
    for p in primes {
        let a = ek.get(&p).copied().unwrap_or(0);
        let b = el.get(&p).copied().unwrap_or(0);
        match (a, b) {
            (0, b) => l_rest *= p.pow(b),
            (a, 0) => k_rest *= p.pow(a),
            (a, b) => {
                let g = a.gcd(&b);
                let block = p.pow(g);
                kf.extend(std::iter::repeat_n(block, (a / g) as usize));
                lf.extend(std::iter::repeat_n(block, (b / g) as usize));
            }
        }
    }
    if k_rest > 1 {
        kf.push(k_rest);
    }
    if l_rest > 1 {
        lf.push(l_rest);
    }
    validate_factorization(FactorList::new(kf)?, FactorList::new(lf)?, k, l)
}

/// How the factorization driving the main bijection is chosen.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum Strategy {
    Prime,
    #[default]
    Optimal,
    Explicit(CompatibleFactorization),
}

impl Strategy {
    pub fn resolve(&self, k: u64, l: u64) -> Result<CompatibleFactorization> {
        match self {
            Strategy::Prime => prime_factorization(k, l),
            Strategy::Optimal => optimal_factorization(k, l),
            Strategy::Explicit(cf) => validate_factorization(
                cf.k_factors().clone(),
                cf.l_factors().clone(),
                k,
                l,
            ),
        }
    }
}
