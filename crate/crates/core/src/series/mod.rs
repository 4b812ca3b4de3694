//! Exact arithmetic in `Z[t, t^-1]((q))`, truncated above a chosen `q`-order.
//!
//! [`QSeries`] is the workhorse: a dense array of [`TLaurent`] coefficients
//! over a window `[lo, order)` of `q`-exponents. Products follow the window
//! rule `[lo1, N1) x [lo2, N2) -> [lo1 + lo2, min(lo1 + N2, lo2 + N1))`, so a
//! caller that needs a result to order `N` over-allocates its intermediates.
//! No rational numbers ever appear: division is only by series whose lowest
//! term is a unit monomial, plus exactness-checked polynomial division inside
//! [`qbinomial`].

mod laurent;
mod monomial;
mod pochhammer;
mod qseries;
mod sums;
mod zpoly;

pub use laurent::TLaurent;
pub use monomial::{term_string, Monomial};
pub use pochhammer::{
    pochhammer_finite, pochhammer_infinite, pochhammer_multi_finite, pochhammer_multi_infinite,
    qbinomial,
};
pub use qseries::{is_one, qs, Discrepancy, QSeries};
pub use sums::{sum_over, with_headroom};
pub use zpoly::ZPoly;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("empty window [{lo}, {order})")]
    EmptyWindow { lo: i64, order: i64 },
    #[error("series known only below q^{available}, needed q^{needed}")]
    WindowOverflow { needed: i64, available: i64 },
    #[error("nonzero coefficient at q^{q_exp} below requested lower bound {lo}")]
    NonzeroBelow { q_exp: i64, lo: i64 },
    #[error("lowest term is not a unit monomial (at q^{q_exp:?})")]
    NotUnit { q_exp: Option<i64> },
    #[error("negative Pochhammer length {0}")]
    NegativeLength(i64),
    #[error("modulus must be positive, got {0}")]
    BadModulus(i64),
    #[error("factor exponents q^({q_exp} + {modulus} j) do not grow")]
    NonTerminating { q_exp: i64, modulus: i64 },
    #[error("q-binomial [{n}, {m}] needs 0 <= m <= n")]
    InvalidBinomial { n: i64, m: i64 },
    #[error("inexact polynomial division")]
    InexactDivision,
    #[error("argument {0} must be a unit monomial")]
    NonUnitArgument(Monomial),
    #[error("sum over {0} does not converge in the q-adic topology")]
    Divergent(String),
}
