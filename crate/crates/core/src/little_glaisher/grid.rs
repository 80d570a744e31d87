use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::little_glaisher::CompatibleFactorization;
use crate::mixed_radix::{decompose_digits, factor_form, unfactor_form, FactorList};
use crate::partition::Partition;

/// An `r × s` array of partitions indexed by a row factor list and a column
/// factor list. Entry `(u, v)` is `rows[u], cols[v]`-regular.
///
/// The grid produced from the `(k, l)` side has the `k` factors as rows. After
/// the middle step of the main bijection the grid is transposed, so the `l`
/// factors become the rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PartitionGrid {
    rows: FactorList,
    cols: FactorList,
    entries: Vec<Partition>,
}

impl PartitionGrid {
    pub fn new(rows: FactorList, cols: FactorList, entries: Vec<Vec<Partition>>) -> Result<Self> {
        let got_rows = entries.len();
        let got_cols = entries.first().map_or(cols.len(), Vec::len);
        if got_rows != rows.len() || entries.iter().any(|r| r.len() != cols.len()) {
            return Err(Error::GridShape {
                rows: rows.len(),
                cols: cols.len(),
                got_rows,
                got_cols,
            });
        }
        let grid = Self {
            rows,
            cols,
            entries: entries.into_iter().flatten().collect(),
        };
        grid.validate()?;
        Ok(grid)
    }

    pub(crate) fn empty(rows: FactorList, cols: FactorList) -> Self {
        let n = rows.len() * cols.len();
        Self {
            rows,
            cols,
            entries: vec![Partition::new(); n],
        }
    }

    pub fn rows(&self) -> &FactorList {
        &self.rows
    }

    pub fn cols(&self) -> &FactorList {
        &self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows.len(), self.cols.len())
    }

    pub fn get(&self, u: usize, v: usize) -> &Partition {
        &self.entries[u * self.cols.len() + v]
    }

    pub(crate) fn get_mut(&mut self, u: usize, v: usize) -> &mut Partition {
        let s = self.cols.len();
        &mut self.entries[u * s + v]
    }

    /// The weight multiplier `K_u·L_v` of entry `(u, v)`.
    pub fn scale(&self, u: usize, v: usize) -> u64 {
        self.rows.prefix_product(u) * self.cols.prefix_product(v)
    }

    /// Entry `(u, v)` with every part multiplied by `K_u·L_v`.
    pub fn scaled_entry(&self, u: usize, v: usize) -> Result<Partition> {
        self.get(u, v).scaled(self.scale(u, v))
    }

    /// `Σ K_u·L_v·|entry(u, v)|`, which equals the weight of the partition the
    /// grid encodes.
    pub fn weighted_weight(&self) -> u64 {
        let (r, s) = self.shape();
        (0..r)
            .flat_map(|u| (0..s).map(move |v| (u, v)))
            .map(|(u, v)| self.scale(u, v) * self.get(u, v).weight())
            .sum()
    }

    pub fn transposed(&self) -> Self {
        let (r, s) = self.shape();
        let mut entries = Vec::with_capacity(r * s);
        for v in 0..s {
            for u in 0..r {
                entries.push(self.get(u, v).clone());
            }
        }
        Self {
            rows: self.cols.clone(),
            cols: self.rows.clone(),
            entries,
        }
    }

    /// Every entry `(u, v)` is `rows[u], cols[v]`-regular.
    pub fn validate(&self) -> Result<()> {
        let (r, s) = self.shape();
        for u in 0..r {
            for v in 0..s {
                let (ku, lv) = (self.rows.factor(u), self.cols.factor(v));
                if !self.get(u, v).is_kl_regular(ku, lv) {
                    return Err(Error::GridEntry {
                        row: u,
                        col: v,
                        row_factor: ku,
                        col_factor: lv,
                    });
                }
            }
        }
        Ok(())
    }

    /// Iterates `(u, v, entry)` in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &Partition)> {
        let s = self.cols.len().max(1);
        self.entries
            .iter()
            .enumerate()
            .map(move |(idx, p)| (idx / s, idx % s, p))
    }
}

impl fmt::Debug for PartitionGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PartitionGrid({}x{} ", self.rows, self.cols)?;
        let (r, s) = self.shape();
        for u in 0..r {
            let row: Vec<String> = (0..s).map(|v| self.get(u, v).to_string()).collect();
            write!(f, "[{}]", row.join(", "))?;
        }
        f.write_str(")")
    }
}

/// Splits a `k,l`-regular partition into a grid of `k_u,l_v`-regular ones.
///
/// Each part `i` is written `γ·K_u` with `k_u ∤ γ` and its multiplicity as
/// `Σ_v β_v·L_v`; entry `(u, v)` then holds `γ` with multiplicity `β_v`.
pub fn psi_forward(lambda: &Partition, cf: &CompatibleFactorization) -> Result<PartitionGrid> {
    lambda.check_kl_regular(cf.k(), cf.l())?;
    let mut grid = PartitionGrid::empty(cf.k_factors().clone(), cf.l_factors().clone());
    for (part, mult) in lambda.iter() {
        let form = factor_form(part, cf.k_factors())?;
        let digits = decompose_digits(mult, cf.l_factors())?;
        for (v, beta) in digits.into_iter().enumerate() {
            grid.get_mut(form.index, v).add(form.cofactor, beta);
        }
    }
    debug_assert_eq!(grid.weighted_weight(), lambda.weight());
    debug_assert!(grid.validate().is_ok());
    Ok(grid)
}

/// Reassembles the partition encoded by a grid: the part `γ·K_u` gets
/// multiplicity `Σ_v η_γ^{u,v}·L_v`.
pub fn psi_inverse(grid: &PartitionGrid) -> Result<Partition> {
    grid.validate()?;
    let mut freq: BTreeMap<u64, u64> = BTreeMap::new();
    for (u, v, entry) in grid.iter() {
        let weight = grid.cols().prefix_product(v);
        for (gamma, eta) in entry.iter() {
            let part = unfactor_form(u, gamma, grid.rows())?;
            *freq.entry(part).or_insert(0) += eta * weight;
        }
    }
    let out = Partition::from_frequencies(freq)?;
    debug_assert_eq!(grid.weighted_weight(), out.weight());
    Ok(out)
}
