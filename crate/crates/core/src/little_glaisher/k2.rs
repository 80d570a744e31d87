//! The `k = 2` construction: odd parts occurring fewer than `l` times versus
//! distinct parts not divisible by `l`, with `l = 2^p·o`, `o` odd.
//!
//! 1. Split: the multiplicity `f` of an odd part `i` is `Σ_{j<p} b_j·2^j +
//!    ⌊f/2^p⌋·2^p`. Piece `j < p` holds `i·2^j` once when `b_j = 1`; piece
//!    `p` holds `i·2^p` with multiplicity `⌊f/2^p⌋ < o`.
//! 2. Piece `p` is divided by `2^p`, sent through `Φ_2 ∘ Φ_o⁻¹` and scaled
//!    back. Pieces `j < p` are kept.
//! 3. The image is the union of all pieces.
//!
//! Pieces are stored in the scaled convention (parts already multiplied by
//! `2^j`).

use crate::error::{Error, Result};
use crate::glaisher::{phi_forward_direct, phi_inverse};
use crate::partition::Partition;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct K2Detail {
    pub p: u32,
    pub o: u64,
    /// `λ_{1,1}, …, λ_{1,p+1}`.
    pub lambda_pieces: Vec<Partition>,
    /// `μ_{1,1}, …, μ_{1,p+1}`.
    pub mu_pieces: Vec<Partition>,
    pub result: Partition,
}

/// `l = 2^p·o` with `o` odd.
pub fn split_two_power(l: u64) -> (u32, u64) {
    let p = l.trailing_zeros();
    (p, l >> p)
}

fn check_l(l: u64) -> Result<()> {
    if l == 0 {
        return Err(Error::ParameterTooSmall {
            name: "l",
            min: 1,
            value: 0,
        });
    }
    Ok(())
}

/// `Φ_2 ∘ Φ_o⁻¹`, the identity when `o = 1` (only the empty partition can
/// occur then).
fn odd_to_distinct(nu: &Partition, o: u64) -> Result<Partition> {
    if o == 1 {
        debug_assert!(nu.is_empty());
        return Ok(nu.clone());
    }
    phi_forward_direct(&phi_inverse(nu, o)?, 2)
}

fn distinct_to_odd(nu: &Partition, o: u64) -> Result<Partition> {
    if o == 1 {
        debug_assert!(nu.is_empty());
        return Ok(nu.clone());
    }
    phi_forward_direct(&phi_inverse(nu, 2)?, o)
}

pub fn k2_special_detailed(lambda: &Partition, l: u64) -> Result<K2Detail> {
    check_l(l)?;
    lambda.check_kl_regular(2, l)?;
    let (p, o) = split_two_power(l);
    let top = 1u64 << p;
    let mut lambda_pieces = vec![Partition::new(); p as usize + 1];
    for (part, mult) in lambda.iter() {
        for (j, piece) in lambda_pieces.iter_mut().enumerate().take(p as usize) {
            piece.add(part << j, (mult >> j) & 1);
        }
        lambda_pieces[p as usize].add(part * top, mult / top);
    }

    let nu = lambda_pieces[p as usize].descaled(top).expect("multiples of 2^p");
    let mut mu_pieces = lambda_pieces.clone();
    mu_pieces[p as usize] = odd_to_distinct(&nu, o)?.scaled(top)?;

    let result = mu_pieces
        .iter()
        .fold(Partition::new(), |acc, piece| acc.union(piece));
    debug_assert_eq!(result.weight(), lambda.weight());
    debug_assert!(result.is_kl_regular(l, 2));
    Ok(K2Detail {
        p,
        o,
        lambda_pieces,
        mu_pieces,
        result,
    })
}

/// Odd parts occurring fewer than `l` times to distinct parts not divisible
/// by `l`.
pub fn k2_special_map(lambda: &Partition, l: u64) -> Result<Partition> {
    k2_special_detailed(lambda, l).map(|d| d.result)
}

/// Inverse of [`k2_special_map`]: parts are gathered by their 2-adic
/// valuation, capped at `p`.
pub fn k2_special_inverse(mu: &Partition, l: u64) -> Result<Partition> {
    check_l(l)?;
    mu.check_kl_regular(l, 2)?;
    let (p, o) = split_two_power(l);
    let top = 1u64 << p;
    let mut low = Partition::new();
    let mut high = Partition::new();
    for (part, mult) in mu.iter() {
        if part.trailing_zeros() < p {
            low.add(part, mult);
        } else {
            high.add(part / top, mult);
        }
    }
    let odd = distinct_to_odd(&high, o)?;
    let mut out = Partition::new();
    for (part, mult) in low.iter() {
        let j = part.trailing_zeros();
        out.add(part >> j, mult << j);
    }
    for (part, mult) in odd.iter() {
        out.add(part, mult * top);
    }
    Ok(out)
}
