//! Zeta functions of quasi-unipotent self-maps of `S^m × S^n` (`m ≠ n`),
//! one table per parity of `(m, n)`.
//!
//! The maps act by `a` on `H_m`, `b` on `H_n` and `d = ab` on the top
//! class. The first row of the both-even table is labelled `a=b=c=1` in
//! some sources; `c` stands for `d` there.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::Result;
use crate::expr::parse_zeta_expression;
use crate::homology::product_model;
use crate::lefschetz::zeta_from_homology;
use crate::mperl::{default_bound, minimal_lefschetz_periods};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TableRow {
    /// Sign pattern as usually written, e.g. `a=b=-1, d=1`.
    pub label: &'static str,
    /// The zeta function as usually written, in the expression grammar.
    pub zeta: &'static str,
    /// Every `(a, b)` the row covers.
    pub signs: &'static [(i64, i64)],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ProductTable {
    pub m_even: bool,
    pub n_even: bool,
    pub rows: &'static [TableRow],
}

impl ProductTable {
    pub fn title(&self) -> String {
        let parity = |even: bool| if even { "even" } else { "odd" };
        if self.m_even == self.n_even {
            format!("m, n {}", parity(self.m_even))
        } else {
            format!("m {}, n {}", parity(self.m_even), parity(self.n_even))
        }
    }

    /// Smallest distinct dimensions with this parity.
    pub fn representative_dims(&self) -> (u32, u32) {
        match (self.m_even, self.n_even) {
            (true, true) => (2, 4),
            (false, false) => (1, 3),
            (true, false) => (2, 1),
            (false, true) => (1, 2),
        }
    }

    /// Whether `(m, n)` has this table's parity.
    pub fn applies_to(&self, m: u32, n: u32) -> bool {
        (m % 2 == 0) == self.m_even && (n % 2 == 0) == self.n_even
    }
}

pub const PRODUCT_TABLES: [ProductTable; 4] = [
    ProductTable {
        m_even: true,
        n_even: true,
        rows: &[
            TableRow {
                label: "a=b=d=1",
                zeta: "1/(1-t)^4",
                signs: &[(1, 1)],
            },
            TableRow {
                label: "{a, b, d} = {-1, 1} with ab=d",
                zeta: "1/(1-t^2)^2",
                signs: &[(1, -1), (-1, 1), (-1, -1)],
            },
        ],
    },
    ProductTable {
        m_even: false,
        n_even: false,
        rows: &[
            TableRow {
                label: "a=b=d=1",
                zeta: "1",
                signs: &[(1, 1)],
            },
            TableRow {
                label: "a=b=-1, d=1",
                zeta: "(1+t)^2/(1-t)^2",
                signs: &[(-1, -1)],
            },
            TableRow {
                label: "{a, b} = {-1, 1}, d=-1",
                zeta: "1",
                signs: &[(1, -1), (-1, 1)],
            },
        ],
    },
    ProductTable {
        m_even: true,
        n_even: false,
        rows: &[
            TableRow {
                label: "a=b=d=1",
                zeta: "1",
                signs: &[(1, 1)],
            },
            TableRow {
                label: "b=d=-1, a=1",
                zeta: "(1+t)^2/(1-t)^2",
                signs: &[(1, -1)],
            },
            TableRow {
                label: "{b, d} = {-1, 1}, a=-1",
                zeta: "1",
                signs: &[(-1, 1), (-1, -1)],
            },
        ],
    },
    ProductTable {
        m_even: false,
        n_even: true,
        rows: &[
            TableRow {
                label: "a=b=d=1",
                zeta: "1",
                signs: &[(1, 1)],
            },
            TableRow {
                label: "a=d=-1, b=1",
                zeta: "(1+t)^2/(1-t)^2",
                signs: &[(-1, 1)],
            },
            TableRow {
                label: "{a, d} = {-1, 1}, b=-1",
                zeta: "1",
                signs: &[(1, -1), (-1, -1)],
            },
        ],
    },
];

fn format_set(set: &std::collections::BTreeSet<u64>) -> String {
    let items: Vec<String> = set.iter().map(u64::to_string).collect();
    format!("{{{}}}", items.join(", "))
}

/// One computed row: the transcribed zeta string with the minimal period
/// set of the representative product.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RenderedRow {
    pub table: String,
    pub label: &'static str,
    pub zeta: &'static str,
    pub mper: Vec<u64>,
}

pub fn rendered_rows() -> Result<Vec<RenderedRow>> {
    let mut out = Vec::new();
    for table in &PRODUCT_TABLES {
        let (m, n) = table.representative_dims();
        for row in table.rows {
            let (a, b) = row.signs[0];
            let zeta = zeta_from_homology(&product_model(m, n, a, b)?)?;
            debug_assert_eq!(parse_zeta_expression(row.zeta).ok(), Some(zeta.clone()));
            let r = minimal_lefschetz_periods(&zeta, default_bound(&zeta))?;
            out.push(RenderedRow {
                table: table.title(),
                label: row.label,
                zeta: row.zeta,
                mper: r.periods.into_iter().collect(),
            });
        }
    }
    Ok(out)
}

/// The four tables as markdown, in a fixed order.
pub fn render_markdown() -> Result<String> {
    let rows = rendered_rows()?;
    let mut out = String::new();
    for (i, table) in PRODUCT_TABLES.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        let title = table.title();
        writeln!(out, "### S^m x S^n, {title}").unwrap();
        out.push('\n');
        out.push_str("| Values for a, b, d | Zeta | MPer_L |\n");
        out.push_str("|---|---|---|\n");
        for row in rows.iter().filter(|r| r.table == title) {
            let mper = format_set(&row.mper.iter().copied().collect());
            writeln!(out, "| {} | {} | {} |", row.label, row.zeta, mper).unwrap();
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_sign_pair_appears_once_per_table() {
        for table in &PRODUCT_TABLES {
            let mut signs: Vec<_> = table.rows.iter().flat_map(|r| r.signs.iter().copied()).collect();
            signs.sort_unstable();
            assert_eq!(signs, vec![(-1, -1), (-1, 1), (1, -1), (1, 1)], "{}", table.title());
            let (m, n) = table.representative_dims();
            assert!(table.applies_to(m, n) && m != n);
        }
    }

    #[test]
    fn markdown_is_stable() {
        let a = render_markdown().unwrap();
        assert_eq!(a, render_markdown().unwrap());
        assert!(a.contains("| a=b=d=1 | 1/(1-t)^4 | {1} |"));
        assert!(a.contains("| a=b=-1, d=1 | (1+t)^2/(1-t)^2 | {1} |"));
        assert!(a.contains("| {a, b, d} = {-1, 1} with ab=d | 1/(1-t^2)^2 | {} |"));
    }
}
