//! Truncated power series in `q` and the product identities they verify.
//!
//! [`TruncatedSeries`] is generic over its coefficient ring. Everything in the
//! crate's identity checks runs on [`crate::Series`] (big integers); `i64`
//! and rational coefficients are available for callers that want them.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A commutative ring usable as series coefficients.
pub trait Coefficient:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
{
    /// Multiplicative inverse when it exists in the ring.
    fn unit_inverse(&self) -> Option<Self>;

    fn from_i64(v: i64) -> Self;
}

macro_rules! impl_int_coefficient {
    ($($t:ty),*) => {$(
        impl Coefficient for $t {
            fn unit_inverse(&self) -> Option<Self> {
                match *self {
                    1 => Some(1),
                    -1 => Some(-1),
                    _ => None,
                }
            }

            fn from_i64(v: i64) -> Self {
                v as $t
            }
        }
    )*};
}

impl_int_coefficient!(i64, i128);

impl Coefficient for BigInt {
    fn unit_inverse(&self) -> Option<Self> {
        (self.is_one() || (-self).is_one()).then(|| self.clone())
    }

    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
}

impl Coefficient for BigRational {
    fn unit_inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }

    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(BigInt::from(v))
    }
}

/// Coefficients of `q^0 … q^N`; all arithmetic is exact modulo `q^{N+1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries<T> {
    coeffs: Vec<T>,
}

impl<T: Coefficient> TruncatedSeries<T> {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![T::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = T::one();
        s
    }

    /// Takes coefficients from `q^0` upward; missing ones are zero and extra
    /// ones are dropped.
    pub fn from_coeffs(order: usize, coeffs: impl IntoIterator<Item = T>) -> Self {
        let mut s = Self::zero(order);
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c;
        }
        s
    }

    /// Truncation order `N`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &T {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch(self.order(), other.order()));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *a -= b;
        }
        Ok(out)
    }

    /// Schoolbook product, `O(N²)`.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order();
        let mut out = Self::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out.coeffs[i + j] += &(a.clone() * b.clone());
            }
        }
        Ok(out)
    }

    /// Multiplicative inverse; needs an invertible constant term.
    pub fn reciprocal(&self) -> Result<Self> {
        let c0_inv = self.coeffs[0].unit_inverse().ok_or(Error::NotInvertible)?;
        let n = self.order();
        let mut out = Self::zero(n);
        out.coeffs[0] = c0_inv.clone();
        for m in 1..=n {
            let mut acc = T::zero();
            for j in 1..=m {
                if self.coeffs[j].is_zero() {
                    continue;
                }
                acc += &(self.coeffs[j].clone() * out.coeffs[m - j].clone());
            }
            out.coeffs[m] = -(c0_inv.clone() * acc);
        }
        Ok(out)
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.checked_mul(&other.reciprocal()?)
    }

    /// In-place multiplication by `1 − q^m`.
    pub fn mul_one_minus_pow(&mut self, m: usize) {
        assert!(m > 0);
        for n in (m..=self.order()).rev() {
            let shifted = self.coeffs[n - m].clone();
            self.coeffs[n] -= &shifted;
        }
    }

    /// In-place multiplication by `1 + q^m + q^{2m} + … + q^{(terms−1)m}`.
    pub fn mul_geometric(&mut self, m: usize, terms: usize) {
        assert!(m > 0);
        if terms == 0 {
            self.coeffs.iter_mut().for_each(|c| *c = T::zero());
            return;
        }
        let src = self.coeffs.clone();
        for n in 0..=self.order() {
            for t in 1..terms {
                let Some(shift) = t.checked_mul(m).filter(|&s| s <= n) else {
                    break;
                };
                self.coeffs[n] += &src[n - shift];
            }
        }
    }
}

impl<T: Coefficient> Add for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;

    /// Panics when the truncation orders differ.
    fn add(self, rhs: Self) -> TruncatedSeries<T> {
        self.checked_add(rhs).expect("series orders must match")
    }
}

impl<T: Coefficient> Sub for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;

    fn sub(self, rhs: Self) -> TruncatedSeries<T> {
        self.checked_sub(rhs).expect("series orders must match")
    }
}

impl<T: Coefficient> Mul for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;

    fn mul(self, rhs: Self) -> TruncatedSeries<T> {
        self.checked_mul(rhs).expect("series orders must match")
    }
}

impl<T: Coefficient> fmt::Debug for TruncatedSeries<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedSeries(N={}, {:?})", self.order(), self.coeffs)
    }
}

impl<T: Coefficient> fmt::Display for TruncatedSeries<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                f.write_str(" + ")?;
            }
            match n {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})q")?,
                _ => write!(f, "({c})q^{n}")?,
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

/// `(q^a; q^a)_∞ = ∏_{i≥1} (1 − q^{a·i})`, truncated at `q^N`.
pub fn pochhammer<T: Coefficient>(a: usize, order: usize) -> TruncatedSeries<T> {
    assert!(a > 0, "pochhammer step must be positive");
    let mut s = TruncatedSeries::one(order);
    let mut m = a;
    while m <= order {
        s.mul_one_minus_pow(m);
        m += a;
    }
    s
}

/// `∏_{k∤i} (1 + q^i + … + q^{(l−1)i})`: coefficient `n` counts the
/// `k,l`-regular partitions of `n`.
pub fn regular_product_side<T: Coefficient>(k: usize, l: usize, order: usize) -> TruncatedSeries<T> {
    assert!(k > 0, "k must be positive");
    let mut s = TruncatedSeries::one(order);
    for i in (1..=order).filter(|i| i % k != 0) {
        s.mul_geometric(i, l);
    }
    s
}

/// `(q^k;q^k)_∞ (q^l;q^l)_∞ / ((q;q)_∞ (q^{kl};q^{kl})_∞)`.
pub fn eta_quotient_side<T: Coefficient>(k: usize, l: usize, order: usize) -> TruncatedSeries<T> {
    let num = &pochhammer::<T>(k, order) * &pochhammer(l, order);
    let den = &pochhammer::<T>(1, order) * &pochhammer(k * l, order);
    num.checked_div(&den).expect("constant term is 1")
}

/// The three forms of Glaisher's generating function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlaisherForms<T: Coefficient> {
    /// `∏_{k∤i} 1/(1 − q^i)`.
    pub regular_parts: TruncatedSeries<T>,
    /// `(q^k;q^k)_∞ / (q;q)_∞`.
    pub eta_quotient: TruncatedSeries<T>,
    /// `∏_{i≥1} (1 + q^i + … + q^{(k−1)i})`.
    pub bounded_multiplicity: TruncatedSeries<T>,
}

impl<T: Coefficient> GlaisherForms<T> {
    pub fn agree(&self) -> bool {
        self.regular_parts == self.eta_quotient && self.eta_quotient == self.bounded_multiplicity
    }
}

pub fn glaisher_series<T: Coefficient>(k: usize, order: usize) -> GlaisherForms<T> {
    assert!(k > 0, "k must be positive");
    let mut den = TruncatedSeries::<T>::one(order);
    for i in (1..=order).filter(|i| i % k != 0) {
        den.mul_one_minus_pow(i);
    }
    let regular_parts = den.reciprocal().expect("constant term is 1");
    let eta_quotient = pochhammer::<T>(k, order)
        .checked_div(&pochhammer(1, order))
        .expect("constant term is 1");
    let mut bounded_multiplicity = TruncatedSeries::one(order);
    for i in 1..=order {
        bounded_multiplicity.mul_geometric(i, k);
    }
    GlaisherForms {
        regular_parts,
        eta_quotient,
        bounded_multiplicity,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Series;

    fn ints(s: &Series) -> Vec<i64> {
        s.coeffs()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    /// Expands `∏ (1 − q^m)` by summing over all subsets of the factors.
    fn brute_product(exps: &[usize], order: usize) -> Vec<i64> {
        let mut out = vec![0i64; order + 1];
        for mask in 0u32..(1 << exps.len()) {
            let (deg, sign) = exps.iter().enumerate().fold((0, 1), |(d, s), (i, &m)| {
                if mask & (1 << i) != 0 {
                    (d + m, -s)
                } else {
                    (d, s)
                }
            });
            if deg <= order {
                out[deg] += sign;
            }
        }
        out
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(ints(&pochhammer(1, 5)), vec![1, -1, -1, 0, 0, 1]);
        assert_eq!(ints(&pochhammer(7, 5)), vec![1, 0, 0, 0, 0, 0]);
        // (1 − q²)(1 − q⁴)(1 − q⁶): the two q⁶ contributions cancel
        assert_eq!(ints(&pochhammer(2, 6)), vec![1, 0, -1, 0, -1, 0, 0]);
        assert_eq!(ints(&pochhammer(2, 6)), brute_product(&[2, 4, 6], 6));
    }

    #[test]
    fn regular_product_examples() {
        let s: Series = regular_product_side(2, 6, 10);
        assert_eq!(ints(&s)[10], 8);
        assert_eq!(ints(&regular_product_side(3, 1, 12)), ints(&Series::one(12)));
        assert_eq!(ints(&regular_product_side(1, 4, 12)), ints(&Series::one(12)));
    }

    #[test]
    fn eta_quotient_examples() {
        let e: Series = eta_quotient_side(2, 6, 10);
        assert_eq!(ints(&e)[10], 8);
        assert_eq!(ints(&eta_quotient_side(1, 5, 15)), ints(&Series::one(15)));
    }

    #[test]
    fn glaisher_k2_counts_odd_part_partitions() {
        let g = glaisher_series::<BigInt>(2, 10);
        assert!(g.agree());
        assert_eq!(ints(&g.regular_parts), vec![1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10]);
        let g1 = glaisher_series::<BigInt>(1, 8);
        assert_eq!(ints(&g1.eta_quotient), ints(&Series::one(8)));
    }

    #[test]
    fn reciprocal_round_trip() {
        let s: Series = pochhammer(1, 30);
        let r = s.reciprocal().unwrap();
        assert_eq!(&s * &r, Series::one(30));
        // 1/(q;q) gives partition numbers
        assert_eq!(ints(&r)[..8], [1, 1, 2, 3, 5, 7, 11, 15]);
    }

    #[test]
    fn reciprocal_needs_unit() {
        let s = Series::from_coeffs(3, [2, 1].map(BigInt::from));
        assert_eq!(s.reciprocal(), Err(Error::NotInvertible));
        let r = TruncatedSeries::<BigRational>::from_coeffs(3, [2, 1].map(BigRational::from_i64));
        let inv = r.reciprocal().unwrap();
        assert_eq!(&r * &inv, TruncatedSeries::one(3));
    }

    #[test]
    fn order_mismatch_is_an_error() {
        let a = Series::one(3);
        let b = Series::one(4);
        assert_eq!(a.checked_mul(&b), Err(Error::OrderMismatch(3, 4)));
    }

    #[test]
    fn fixed_width_and_big_agree() {
        let a: TruncatedSeries<i64> = eta_quotient_side(4, 6, 60);
        let b: Series = eta_quotient_side(4, 6, 60);
        assert_eq!(
            a.coeffs().to_vec(),
            b.coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect::<Vec<_>>()
        );
    }

    #[test]
    fn geometric_factor() {
        let mut s = Series::one(7);
        s.mul_geometric(2, 3);
        assert_eq!(ints(&s), vec![1, 0, 1, 0, 1, 0, 0, 0]);
        let mut z = Series::one(3);
        z.mul_geometric(1, 0);
        assert_eq!(ints(&z), vec![0, 0, 0, 0]);
    }

    #[test]
    fn display() {
        let s: Series = pochhammer(1, 2);
        assert_eq!(s.to_string(), "1 + (-1)q + (-1)q^2 + O(q^3)");
    }
}
