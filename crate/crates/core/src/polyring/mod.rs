//! Exact sparse polynomials in the fixed alphabet `{p, q, t, u, v, w}` and
//! truncated power series in `z` over them.

mod json;
mod mpoly;
mod series;

pub use mpoly::{Assignment, MPoly, Monomial, Var, DEFAULT_EXPONENT_CAP, NVARS};
pub use series::Series;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("exponent exceeds cap {cap}")]
    ExponentOverflow { cap: u16 },
    #[error("series orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("series constant term is not 1")]
    NonUnitConstant,
    #[error("series of order {order} needs {} coefficients, got {len}", order + 1)]
    SeriesLength { order: usize, len: usize },
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
}
