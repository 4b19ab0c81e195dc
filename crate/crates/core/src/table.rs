//! Per-dimension bound tables.
//!
//! Columns, in order:
//!
//! | column | meaning |
//! |---|---|
//! | `n` | dimension |
//! | `method`, `N`, `j`, `k` | the connected construction with the smallest bound |
//! | `ds_size` | doubled Hamming dominating set of Q_n |
//! | `greedy_ds_size` | greedy dominating set of Q_n (explicit rows only) |
//! | `cds_size` | built backbone, or the bound on formula rows |
//! | `bound_value` | formula bound of the chosen construction |
//! | `leaf_count` | leaves of the emitted spanning tree (explicit rows only) |
//! | `gamma_lower`, `gamma_c_lower` | counting lower bounds |
//! | `ratio_gamma` | ds_size / (2^n / (n + 1)) |
//! | `ratio_gamma_n` | ds_size / (2^n / n) |
//! | `ratio_gamma_c` | cds_size / (2^n / n) |
//! | `mode` | `explicit` or `formula` |

use rayon::prelude::*;
use serde::Serialize;

use crate::constructions::{auto_construct, doubled_hamming, ratio_to_n, Method};
use crate::domination::greedy_dominating;
use crate::error::{CubeError, Result};

pub const COLUMNS: [&str; 16] = [
    "n",
    "method",
    "N",
    "j",
    "k",
    "ds_size",
    "greedy_ds_size",
    "cds_size",
    "bound_value",
    "leaf_count",
    "gamma_lower",
    "gamma_c_lower",
    "ratio_gamma",
    "ratio_gamma_n",
    "ratio_gamma_c",
    "mode",
];

#[derive(Debug, Clone, Serialize)]
pub struct TableRow {
    pub n: u32,
    pub method: Method,
    pub base_dim: u32,
    pub j: u32,
    pub k: Option<u32>,
    pub ds_size: u128,
    pub greedy_ds_size: Option<u64>,
    pub cds_size: u128,
    pub bound_value: u128,
    pub leaf_count: Option<u64>,
    pub gamma_lower: u128,
    pub gamma_c_lower: u128,
    pub ratio_gamma: f64,
    pub ratio_gamma_n: f64,
    pub ratio_gamma_c: f64,
    pub explicit: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Tsv,
    Markdown,
}

/// Formats with six significant digits in positional notation.
pub fn sig6(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x:.5}");
    }
    // the exponent of the rounded scientific form accounts for carries
    let sci = format!("{x:.5e}");
    let exponent: i32 = sci.split('e').nth(1).and_then(|e| e.parse().ok()).unwrap_or(0);
    let decimals = (5 - exponent).max(0) as usize;
    format!("{x:.decimals$}")
}

pub fn table_row(n: u32, n_max: u32) -> Result<TableRow> {
    let con = auto_construct(n, n_max)?;
    let r = &con.report;
    let gamma = doubled_hamming(n)?;
    let greedy = if r.explicit {
        Some(greedy_dominating(n)?.len() as u64)
    } else {
        None
    };
    let cds = r.value();
    Ok(TableRow {
        n,
        method: r.method,
        base_dim: r.base_dim,
        j: r.j,
        k: r.k,
        ds_size: gamma.size,
        greedy_ds_size: greedy,
        cds_size: cds,
        bound_value: r.bound_value,
        leaf_count: r.leaf_count,
        gamma_lower: r.gamma_lower,
        gamma_c_lower: r.gamma_c_lower.expect("n >= 2"),
        ratio_gamma: gamma.size as f64 * (n as f64 + 1.0) / (2f64).powi(n as i32),
        ratio_gamma_n: ratio_to_n(gamma.size, n),
        ratio_gamma_c: ratio_to_n(cds, n),
        explicit: r.explicit,
    })
}

/// Rows for `min_n..=max_n`, computed in parallel and returned in n order.
/// Dimensions above `n_max` are refused unless `formula_above_cap` is set.
pub fn build_table(min_n: u32, max_n: u32, n_max: u32, formula_above_cap: bool) -> Result<Vec<TableRow>> {
    if min_n < 2 || min_n > max_n {
        return Err(CubeError::Parameter(format!("need 2 <= min_n <= max_n, got {min_n}..{max_n}")));
    }
    if max_n > n_max && !formula_above_cap {
        return Err(CubeError::TooLarge { n: max_n, n_max });
    }
    (min_n..=max_n).into_par_iter().map(|n| table_row(n, n_max)).collect()
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

impl TableRow {
    pub fn cells(&self) -> Vec<String> {
        vec![
            self.n.to_string(),
            self.method.to_string(),
            self.base_dim.to_string(),
            self.j.to_string(),
            opt(self.k),
            self.ds_size.to_string(),
            opt(self.greedy_ds_size),
            self.cds_size.to_string(),
            self.bound_value.to_string(),
            opt(self.leaf_count),
            self.gamma_lower.to_string(),
            self.gamma_c_lower.to_string(),
            sig6(self.ratio_gamma),
            sig6(self.ratio_gamma_n),
            sig6(self.ratio_gamma_c),
            if self.explicit { "explicit" } else { "formula" }.to_string(),
        ]
    }
}

pub fn render(rows: &[TableRow], format: TableFormat) -> String {
    let mut out = String::new();
    let mut line = |cells: Vec<String>| match format {
        TableFormat::Csv => {
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        TableFormat::Tsv => {
            out.push_str(&cells.join("\t"));
            out.push('\n');
        }
        TableFormat::Markdown => {
            out.push_str("| ");
            out.push_str(&cells.join(" | "));
            out.push_str(" |\n");
        }
    };
    line(COLUMNS.iter().map(|c| c.to_string()).collect());
    if format == TableFormat::Markdown {
        line(COLUMNS.iter().map(|_| "---".to_string()).collect());
    }
    for row in rows {
        line(row.cells());
    }
    out
}
