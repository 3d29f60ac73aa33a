//! Coefficient tables rendered as CSV rows.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

use crate::contfrac::{jfraction_series, named_cf, NamedCf};
use crate::gamma::gamma_decompose;
use crate::polyring::{Assignment, MPoly, Var};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("unknown table {0:?}")]
    Unknown(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Table {
    /// `C_n(1, q, 1)` by powers of `q`.
    BarC,
    /// `C_n(q, 1, 1)` by powers of `q`.
    TildeC,
    /// Gamma form of `B_n(p, q, t)`.
    BExpansion,
}

impl FromStr for Table {
    type Err = TableError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "barc" => Ok(Table::BarC),
            "tildec" => Ok(Table::TildeC),
            "bexpansion" => Ok(Table::BExpansion),
            _ => Err(TableError::Unknown(s.to_string())),
        }
    }
}

impl fmt::Display for Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Table::BarC => "barc",
            Table::TildeC => "tildec",
            Table::BExpansion => "bexpansion",
        })
    }
}

/// One table row: `n` and its cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub n: usize,
    pub cells: Vec<String>,
}

impl Row {
    pub fn to_csv(&self) -> String {
        std::iter::once(self.n.to_string())
            .chain(self.cells.iter().cloned())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Coefficients of `q^0, q^1, ...` of a polynomial in `q` alone.
fn q_coefficients(f: &MPoly) -> Vec<BigInt> {
    f.univariate_coeffs(Var::Q, &Assignment::ones())
}

/// Rows `n = 1..=nmax`.
pub fn table(which: Table, nmax: usize) -> Vec<Row> {
    let type_a = |n| jfraction_series(&named_cf(NamedCf::TypeA), n).expect("small exponents");
    match which {
        Table::BarC | Table::TildeC => {
            let ones = [(Var::T, 1), (Var::U, 1), (Var::W, 1)];
            let series = type_a(nmax);
            (1..=nmax)
                .map(|n| {
                    let c = series.coeff(n).specialize(&ones);
                    let c = if which == Table::BarC {
                        c.specialize(&[(Var::P, 1)])
                    } else {
                        c.specialize(&[(Var::Q, 1)]).substitute(Var::P, &MPoly::var(Var::Q))
                    };
                    Row {
                        n,
                        cells: q_coefficients(&c).iter().map(BigInt::to_string).collect(),
                    }
                })
                .collect()
        }
        Table::BExpansion => {
            let series = jfraction_series(&named_cf(NamedCf::TypeB), nmax).expect("small exponents");
            (1..=nmax)
                .map(|n| {
                    let b = series.coeff(n).specialize(&[(Var::U, 1), (Var::V, 1), (Var::W, 1)]);
                    let g = gamma_decompose(&b).expect("type B polynomials are palindromic");
                    Row {
                        n,
                        cells: vec![g.to_string()],
                    }
                })
                .collect()
        }
    }
}

pub fn render_csv(rows: &[Row]) -> String {
    rows.iter().map(|r| r.to_csv() + "\n").collect()
}
