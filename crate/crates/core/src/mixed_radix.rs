//! Mixed-radix numeration over an ordered factorization `d = d_1⋯d_t`.
//!
//! Two facts are used throughout the crate:
//!
//! * every `r` in `0..d` is uniquely `Σ β_j·P_j` with `0 ≤ β_j < d_j`, where
//!   `P_j = d_1⋯d_{j-1}` is the prefix product ([`compose_digits`] /
//!   [`decompose_digits`]);
//! * every integer not divisible by `d` is uniquely `γ·P_j` with `d_j ∤ γ`
//!   ([`factor_form`] / [`unfactor_form`]).
//!
//! Indices in this API are 0-based: factor `j` has prefix product
//! `prefix_product(j) = d_0⋯d_{j-1}`.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FactorList {
    factors: Vec<u64>,
    // prefix[j] = product of factors[..j]; len = factors.len() + 1
    prefix: Vec<u64>,
}

impl FactorList {
    pub fn new(factors: Vec<u64>) -> Result<Self> {
        let mut prefix = Vec::with_capacity(factors.len() + 1);
        prefix.push(1u64);
        for &f in &factors {
            if f == 0 {
                return Err(Error::ZeroFactor);
            }
            let last = *prefix.last().unwrap();
            prefix.push(last.checked_mul(f).ok_or(Error::Overflow("factor product"))?);
        }
        Ok(Self { factors, prefix })
    }

    pub fn empty() -> Self {
        Self {
            factors: Vec::new(),
            prefix: vec![1],
        }
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factor(&self, j: usize) -> u64 {
        self.factors[j]
    }

    /// Product of all factors (1 for the empty list).
    pub fn product(&self) -> u64 {
        *self.prefix.last().unwrap()
    }

    /// Product of the factors strictly before index `j`, for `j` in `0..=len`.
    pub fn prefix_product(&self, j: usize) -> u64 {
        self.prefix[j]
    }
}

impl fmt::Debug for FactorList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FactorList{:?}", self.factors)
    }
}

impl fmt::Display for FactorList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(u64::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// `Σ β_j·P_j`. Each digit must satisfy `β_j < d_j`.
pub fn compose_digits(digits: &[u64], f: &FactorList) -> Result<u64> {
    if digits.len() != f.len() {
        return Err(Error::DigitCount {
            expected: f.len(),
            got: digits.len(),
        });
    }
    let mut r = 0u64;
    for (j, (&beta, &radix)) in digits.iter().zip(f.factors()).enumerate() {
        if beta >= radix {
            return Err(Error::DigitOutOfRange {
                position: j,
                digit: beta,
                radix,
            });
        }
        // Cannot overflow: the total stays below the product, which fits.
        r += beta * f.prefix_product(j);
    }
    Ok(r)
}

/// The unique digit vector (length `t`) whose composition is `r`.
pub fn decompose_digits(r: u64, f: &FactorList) -> Result<Vec<u64>> {
    if r >= f.product() {
        return Err(Error::ValueOutOfRange {
            value: r,
            product: f.product(),
        });
    }
    let mut rest = r;
    let digits = f
        .factors()
        .iter()
        .map(|&radix| {
            let beta = rest % radix;
            rest /= radix;
            beta
        })
        .collect();
    debug_assert_eq!(rest, 0);
    Ok(digits)
}

/// Factor-form classification of an integer not divisible by `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FactorForm {
    /// 0-based factor index `j`.
    pub index: usize,
    /// `γ = i / P_j`, not divisible by `d_j`.
    pub cofactor: u64,
}

/// Writes `i` as `γ·P_j` with `d_j ∤ γ`. The index is the first `j` with
/// `P_{j+1} ∤ i`; factors equal to 1 are never selected.
pub fn factor_form(i: u64, f: &FactorList) -> Result<FactorForm> {
    if i == 0 {
        return Err(Error::NonPositivePart(0));
    }
    if f.product() == 1 {
        return Err(Error::TrivialProduct);
    }
    if i.is_multiple_of(f.product()) {
        return Err(Error::Divisible {
            value: i,
            divisor: f.product(),
        });
    }
    let index = (0..f.len())
        .find(|&j| !i.is_multiple_of(f.prefix_product(j + 1)))
        .expect("d does not divide i");
    let cofactor = i / f.prefix_product(index);
    debug_assert!(!cofactor.is_multiple_of(f.factor(index)));
    Ok(FactorForm { index, cofactor })
}

/// `γ·P_j`, the inverse of [`factor_form`].
pub fn unfactor_form(index: usize, cofactor: u64, f: &FactorList) -> Result<u64> {
    if index >= f.len() {
        return Err(Error::FactorIndex {
            index,
            len: f.len(),
        });
    }
    if cofactor == 0 {
        return Err(Error::NonPositivePart(0));
    }
    let radix = f.factor(index);
    if cofactor.is_multiple_of(radix) {
        return Err(Error::Divisible {
            value: cofactor,
            divisor: radix,
        });
    }
    cofactor
        .checked_mul(f.prefix_product(index))
        .ok_or(Error::Overflow("unfactor_form"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fl(v: &[u64]) -> FactorList {
        FactorList::new(v.to_vec()).unwrap()
    }

    #[test]
    fn prefix_products() {
        let f = fl(&[2, 3, 5]);
        assert_eq!(f.product(), 30);
        assert_eq!(
            (0..=3).map(|j| f.prefix_product(j)).collect::<Vec<_>>(),
            vec![1, 2, 6, 30]
        );
        assert_eq!(FactorList::empty().product(), 1);
        assert!(FactorList::new(vec![2, 0]).is_err());
        assert!(FactorList::new(vec![u64::MAX, 2]).is_err());
    }

    #[test]
    fn compose_examples() {
        let f = fl(&[2, 3]);
        assert_eq!(compose_digits(&[0, 1], &f).unwrap(), 2);
        assert_eq!(compose_digits(&[1, 2], &f).unwrap(), 5);
        assert_eq!(compose_digits(&[0, 0, 0], &fl(&[4, 5, 7])).unwrap(), 0);
        assert!(matches!(
            compose_digits(&[2, 0], &f),
            Err(Error::DigitOutOfRange { position: 0, .. })
        ));
        assert!(matches!(compose_digits(&[1], &f), Err(Error::DigitCount { .. })));
    }

    #[test]
    fn decompose_examples() {
        let f = fl(&[2, 3]);
        assert_eq!(decompose_digits(5, &f).unwrap(), vec![1, 2]);
        assert_eq!(decompose_digits(3, &f).unwrap(), vec![1, 1]);
        assert_eq!(decompose_digits(0, &fl(&[4, 5, 7])).unwrap(), vec![0, 0, 0]);
        assert!(decompose_digits(6, &f).is_err());
        // empty list: only 0 is representable
        assert_eq!(decompose_digits(0, &FactorList::empty()).unwrap(), Vec::<u64>::new());
    }

    #[test]
    fn unit_factors_force_zero_digits() {
        let f = fl(&[1, 3, 1]);
        for r in 0..3 {
            let d = decompose_digits(r, &f).unwrap();
            assert_eq!(d, vec![0, r, 0]);
        }
        assert!(compose_digits(&[1, 0, 0], &f).is_err());
    }

    #[test]
    fn factor_form_examples() {
        let f = fl(&[2, 3]);
        assert_eq!(factor_form(10, &f).unwrap(), FactorForm { index: 1, cofactor: 5 });
        assert_eq!(factor_form(3, &f).unwrap(), FactorForm { index: 0, cofactor: 3 });
        assert_eq!(factor_form(1, &fl(&[5])).unwrap(), FactorForm { index: 0, cofactor: 1 });
        assert!(matches!(factor_form(12, &f), Err(Error::Divisible { .. })));
        assert!(matches!(factor_form(5, &fl(&[1, 1])), Err(Error::TrivialProduct)));
        assert!(matches!(factor_form(5, &FactorList::empty()), Err(Error::TrivialProduct)));
    }

    #[test]
    fn factor_form_skips_unit_factors() {
        let f = fl(&[1, 2, 1, 3]);
        assert_eq!(factor_form(7, &f).unwrap(), FactorForm { index: 1, cofactor: 7 });
        assert_eq!(factor_form(4, &f).unwrap(), FactorForm { index: 3, cofactor: 2 });
    }

    #[test]
    fn unfactor_examples() {
        let f = fl(&[2, 3]);
        assert_eq!(unfactor_form(1, 5, &f).unwrap(), 10);
        assert_eq!(unfactor_form(0, 3, &f).unwrap(), 3);
        assert_eq!(unfactor_form(0, 1, &fl(&[2])).unwrap(), 1);
        assert!(matches!(unfactor_form(1, 6, &f), Err(Error::Divisible { .. })));
        assert!(matches!(unfactor_form(2, 1, &f), Err(Error::FactorIndex { .. })));
        // a unit factor has an empty class
        assert!(unfactor_form(0, 5, &fl(&[1, 2])).is_err());
    }
}
