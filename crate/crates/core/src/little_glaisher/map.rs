use num_integer::Integer;

use crate::error::{Error, Result};
use crate::glaisher::{phi_forward_direct, phi_inverse};
use crate::little_glaisher::{
    psi_forward, psi_inverse, validate_factorization, CompatibleFactorization, PartitionGrid,
    Strategy,
};
use crate::mixed_radix::FactorList;
use crate::partition::Partition;

/// `Φ_k ∘ Φ_l⁻¹` for coprime `k` and `l`: a weight-preserving bijection from
/// `k,l`-regular to `l,k`-regular partitions.
pub fn coprime_map(p: &Partition, k: u64, l: u64) -> Result<Partition> {
    if k == 0 || l == 0 {
        return Err(Error::ParameterTooSmall {
            name: if k == 0 { "k" } else { "l" },
            min: 1,
            value: 0,
        });
    }
    let gcd = k.gcd(&l);
    if gcd != 1 {
        return Err(Error::NotCoprime { k, l, gcd });
    }
    p.check_kl_regular(k, l)?;
    // k = 1 or l = 1 leaves only the empty partition.
    if p.is_empty() {
        return Ok(Partition::new());
    }
    phi_forward_direct(&phi_inverse(p, l)?, k)
}

/// Every stage of the main bijection for one input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapDetail {
    pub factorization: CompatibleFactorization,
    /// `Ψ_{k,l}(λ)`: rows are the `k` factors.
    pub source_grid: PartitionGrid,
    /// After the middle step, transposed: rows are the `l` factors.
    pub image_grid: PartitionGrid,
    pub result: Partition,
}

/// When `k = l` every strategy collapses to the one-factor decomposition, for
/// which the construction is the identity.
fn effective_factorization(k: u64, l: u64, strategy: &Strategy) -> Result<CompatibleFactorization> {
    let cf = strategy.resolve(k, l)?;
    if k != l {
        return Ok(cf);
    }
    let single = if k == 1 { vec![] } else { vec![k] };
    validate_factorization(FactorList::new(single.clone())?, FactorList::new(single)?, k, l)
}

/// Applies the per-cell maps and transposes to the `(l, k)` orientation.
fn middle_step(grid: &PartitionGrid) -> Result<PartitionGrid> {
    let (r, s) = grid.shape();
    let mut rows = vec![vec![Partition::new(); r]; s];
    for (u, v, entry) in grid.iter() {
        let (ku, lv) = (grid.rows().factor(u), grid.cols().factor(v));
        rows[v][u] = if ku == lv {
            entry.clone()
        } else {
            coprime_map(entry, ku, lv)?
        };
    }
    PartitionGrid::new(grid.cols().clone(), grid.rows().clone(), rows)
}

fn map_with(lambda: &Partition, cf: CompatibleFactorization) -> Result<MapDetail> {
    let source_grid = psi_forward(lambda, &cf)?;
    let image_grid = middle_step(&source_grid)?;
    let result = psi_inverse(&image_grid)?;
    debug_assert_eq!(result.weight(), lambda.weight());
    debug_assert!(result.is_kl_regular(cf.l(), cf.k()));
    Ok(MapDetail {
        factorization: cf,
        source_grid,
        image_grid,
        result,
    })
}

/// `Ψ_{l,k}⁻¹ ∘ (∏ Φ_{k_u} ∘ Φ_{l_v}⁻¹) ∘ Ψ_{k,l}` with all intermediate
/// grids.
pub fn little_glaisher_detailed(
    lambda: &Partition,
    k: u64,
    l: u64,
    strategy: &Strategy,
) -> Result<MapDetail> {
    let cf = effective_factorization(k, l, strategy)?;
    map_with(lambda, cf)
}

/// Weight-preserving bijection from `k,l`-regular to `l,k`-regular
/// partitions.
pub fn little_glaisher_map(lambda: &Partition, k: u64, l: u64, strategy: &Strategy) -> Result<Partition> {
    little_glaisher_detailed(lambda, k, l, strategy).map(|d| d.result)
}

/// Inverse of [`little_glaisher_map`] for the same `k`, `l` and strategy:
/// takes an `l,k`-regular partition back to a `k,l`-regular one.
pub fn little_glaisher_inverse(mu: &Partition, k: u64, l: u64, strategy: &Strategy) -> Result<Partition> {
    let cf = effective_factorization(k, l, strategy)?;
    map_with(mu, cf.swapped()).map(|d| d.result)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn coprime_examples() {
        assert_eq!(coprime_map(&p("1^2 3"), 2, 3).unwrap(), p("1 4"));
        assert_eq!(coprime_map(&Partition::new(), 5, 7).unwrap(), Partition::new());
        for (k, l) in [(2, 3), (3, 5), (7, 4), (9, 10)] {
            assert_eq!(coprime_map(&p("1"), k, l).unwrap(), p("1"));
        }
        assert_eq!(coprime_map(&Partition::new(), 1, 1).unwrap(), Partition::new());
    }

    #[test]
    fn coprime_rejects() {
        assert!(matches!(coprime_map(&p("1"), 2, 4), Err(Error::NotCoprime { gcd: 2, .. })));
        assert!(matches!(coprime_map(&p("2"), 2, 3), Err(Error::NotRegular { .. })));
        assert!(matches!(
            coprime_map(&p("1^3"), 2, 3),
            Err(Error::MultiplicityTooLarge { .. })
        ));
        assert!(coprime_map(&p("1"), 1, 3).is_err());
    }

    #[test]
    fn worked_example() {
        let d = little_glaisher_detailed(&p("1^2 3^5 5^3"), 2, 6, &Strategy::Optimal).unwrap();
        assert_eq!(d.result, p("2 3 4 5 8 10"));
        assert_eq!(d.source_grid.scaled_entry(0, 1).unwrap(), p("2 6^2 10"));
        // image grid is in (l, k) orientation
        assert_eq!(d.image_grid.scaled_entry(0, 0).unwrap(), p("3 5"));
        assert_eq!(d.image_grid.scaled_entry(1, 0).unwrap(), p("2 4 8 10"));
    }

    #[test]
    fn table_rows() {
        let s = Strategy::Optimal;
        assert_eq!(little_glaisher_map(&p("1^2 3 5"), 2, 6, &s).unwrap(), p("2 3 5"));
        assert_eq!(little_glaisher_map(&p("1^4 3^2"), 2, 6, &s).unwrap(), p("2 8"));
        assert_eq!(little_glaisher_inverse(&p("2 8"), 2, 6, &s).unwrap(), p("1^4 3^2"));
        assert_eq!(little_glaisher_inverse(&p("2 3 4 5 8 10"), 2, 6, &s).unwrap(), p("1^2 3^5 5^3"));
    }

    #[test]
    fn equal_parameters_are_identity() {
        for s in [Strategy::Prime, Strategy::Optimal] {
            assert_eq!(little_glaisher_map(&p("1^2 3"), 5, 5, &s).unwrap(), p("1^2 3"));
            assert_eq!(little_glaisher_map(&p("2 3^3"), 4, 4, &s).unwrap(), p("2 3^3"));
        }
    }

    #[test]
    fn rejects_irregular_inputs() {
        assert!(little_glaisher_map(&p("2"), 2, 6, &Strategy::Optimal).is_err());
        assert!(little_glaisher_map(&p("1^6"), 2, 6, &Strategy::Optimal).is_err());
        assert!(little_glaisher_inverse(&p("1^2"), 2, 6, &Strategy::Optimal).is_err());
        assert!(little_glaisher_inverse(&p("6"), 2, 6, &Strategy::Prime).is_err());
    }

    #[test]
    fn explicit_strategy_is_validated() {
        let cf = validate_factorization(
            FactorList::new(vec![2]).unwrap(),
            FactorList::new(vec![2, 3]).unwrap(),
            2,
            6,
        )
        .unwrap();
        let s = Strategy::Explicit(cf);
        assert_eq!(little_glaisher_map(&p("1^5 5"), 2, 6, &s).unwrap(), p("1 4 5"));
        assert!(matches!(
            little_glaisher_map(&p("1"), 2, 12, &s),
            Err(Error::ProductMismatch { .. })
        ));
    }
}
