//! The bijection between `k,l`-regular and `l,k`-regular partitions.
//!
//! `k` and `l` are factored as `k_1⋯k_r`, `l_1⋯l_s` with every pair of
//! factors equal or coprime. [`psi_forward`] splits a `k,l`-regular partition
//! into an `r × s` grid of `k_u,l_v`-regular pieces; each piece is moved to
//! the `l_v,k_u` side by the identity (equal factors) or [`coprime_map`]; the
//! grid is transposed and reassembled with [`psi_inverse`].

mod factorization;
mod grid;
mod k2;
mod map;
mod order;

pub use factorization::{
    optimal_factorization, prime_exponents, prime_factorization, validate_factorization,
    CompatibleFactorization, Strategy,
};
pub use grid::{psi_forward, psi_inverse, PartitionGrid};
pub use k2::{k2_special_detailed, k2_special_inverse, k2_special_map, split_two_power, K2Detail};
pub use map::{
    coprime_map, little_glaisher_detailed, little_glaisher_inverse, little_glaisher_map, MapDetail,
};
pub use order::{order_dependence_report, OrderMismatch, OrderReport};
