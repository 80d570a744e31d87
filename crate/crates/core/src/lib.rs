//! Partitions, Glaisher's bijection and its refinement between
//! `k,l`-regular and `l,k`-regular partitions, the matching q-series
//! identities, and Schur-type companion theorems for `l = 2`.
//!
//! ```
//! use lglaisher::{little_glaisher_map, Partition, Strategy};
//!
//! let lambda: Partition = "1^2 3^5 5^3".parse().unwrap();
//! let mu = little_glaisher_map(&lambda, 2, 6, &Strategy::Optimal).unwrap();
//! assert_eq!(mu.to_string(), "2 3 4 5 8 10");
//! ```

pub mod companions;
pub mod error;
pub mod glaisher;
pub mod little_glaisher;
pub mod mixed_radix;
pub mod partition;
pub mod qseries;
pub mod table;
pub mod verify;

pub use error::{Error, Result};
pub use glaisher::{phi_forward_direct, phi_forward_iterative, phi_inverse, OrderPolicy};
pub use little_glaisher::{
    little_glaisher_inverse, little_glaisher_map, CompatibleFactorization, Strategy,
};
pub use mixed_radix::FactorList;
pub use partition::{OverPartition, Partition};
pub use qseries::{Coefficient, TruncatedSeries};

/// Series with arbitrary-precision integer coefficients.
pub type Series = TruncatedSeries<num_bigint::BigInt>;
/// Series with machine-word coefficients; overflows for large orders.
pub type Series64 = TruncatedSeries<i64>;
/// Series over the rationals.
pub type RationalSeries = TruncatedSeries<num_rational::BigRational>;
