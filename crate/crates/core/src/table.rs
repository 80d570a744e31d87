//! The bijection laid out row by row with its intermediate grids.

use serde::Serialize;

use crate::error::Result;
use crate::little_glaisher::{little_glaisher_detailed, Strategy};
use crate::partition::{regular_partitions, Partition};

/// One input with both grids in the `(u, v)` orientation of the source
/// factorization, each entry scaled by `K_u·L_v`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BijectionRow {
    pub lambda: Partition,
    pub lambda_grid: Vec<Vec<Partition>>,
    pub mu_grid: Vec<Vec<Partition>>,
    pub mu: Partition,
}

impl BijectionRow {
    /// Maps `lambda` and collects both grids.
    pub fn new(lambda: Partition, k: u64, l: u64, strategy: &Strategy) -> Result<Self> {
        let d = little_glaisher_detailed(&lambda, k, l, strategy)?;
        let (r, s) = d.source_grid.shape();
        let mut lambda_grid = Vec::with_capacity(r);
        let mut mu_grid = Vec::with_capacity(r);
        for u in 0..r {
            let mut lrow = Vec::with_capacity(s);
            let mut mrow = Vec::with_capacity(s);
            for v in 0..s {
                lrow.push(d.source_grid.scaled_entry(u, v)?);
                mrow.push(d.image_grid.scaled_entry(v, u)?);
            }
            lambda_grid.push(lrow);
            mu_grid.push(mrow);
        }
        Ok(Self {
            lambda,
            lambda_grid,
            mu_grid,
            mu: d.result,
        })
    }
}

/// Rows for every `k,l`-regular partition of `n`, in enumeration order.
pub fn bijection_table(k: u64, l: u64, n: u64, strategy: &Strategy) -> Result<Vec<BijectionRow>> {
    regular_partitions(n, k, l)
        .into_iter()
        .map(|lambda| BijectionRow::new(lambda, k, l, strategy))
        .collect()
}

/// `(a, b)` for a single row, `((a, b), (c, d))` otherwise.
pub fn render_grid(grid: &[Vec<Partition>]) -> String {
    let row = |r: &Vec<Partition>| {
        let cells: Vec<String> = r.iter().map(ToString::to_string).collect();
        format!("({})", cells.join(", "))
    };
    match grid {
        [single] => row(single),
        _ => {
            let rows: Vec<String> = grid.iter().map(row).collect();
            format!("({})", rows.join(", "))
        }
    }
}

const HEADER: [&str; 4] = ["lambda", "lambda grid", "mu grid", "mu"];

fn cells(row: &BijectionRow) -> [String; 4] {
    [
        row.lambda.to_string(),
        render_grid(&row.lambda_grid),
        render_grid(&row.mu_grid),
        row.mu.to_string(),
    ]
}

/// Space-aligned columns under a header line.
pub fn render_human(rows: &[BijectionRow]) -> String {
    let body: Vec<[String; 4]> = rows.iter().map(cells).collect();
    let mut width = HEADER.map(|h| h.chars().count());
    for r in &body {
        for (w, c) in width.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |fields: [&str; 4]| {
        let mut s = String::new();
        for (i, (f, w)) in fields.iter().zip(width).enumerate() {
            s.push_str(f);
            if i < 3 {
                s.extend(std::iter::repeat_n(' ', w - f.chars().count() + 2));
            }
        }
        s.push('\n');
        s
    };
    let mut out = line(HEADER);
    for r in &body {
        out += &line([&r[0], &r[1], &r[2], &r[3]]);
    }
    out
}

pub fn render_tsv(rows: &[BijectionRow]) -> String {
    let mut out = HEADER.join("\t");
    out.push('\n');
    for r in rows {
        out += &cells(r).join("\t");
        out.push('\n');
    }
    out
}
