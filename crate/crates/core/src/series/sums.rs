//! Summation helpers for q-hypergeometric sums.

use super::{Monomial, QSeries, SeriesError};

/// Sum of `m_n / d_n` over `n = 0, 1, ...`, stopping once the monomial
/// exponents have passed their minimum and reached `order`. Every `d_n` must
/// have constant term 1.
pub fn sum_over<M, D>(order: i64, mut mono: M, mut denom: D) -> Result<QSeries, SeriesError>
where
    M: FnMut(i64) -> Monomial,
    D: FnMut(i64, i64) -> Result<QSeries, SeriesError>,
{
    let mut acc: Option<QSeries> = None;
    let mut prev = i64::MIN;
    for n in 0.. {
        let m = mono(n);
        let e = m.q_exp;
        if e >= order && e > prev {
            break;
        }
        prev = e;
        if e >= order || m.is_zero() {
            continue;
        }
        if n > 100_000 {
            return Err(SeriesError::Divergent("term exponents".into()));
        }
        let work = order - e.min(0);
        let term = QSeries::from_monomial(&m, order).checked_mul(&denom(n, work)?.inv()?)?;
        acc = Some(match acc {
            None => term,
            Some(a) => a.checked_add(&term)?,
        });
    }
    Ok(acc.unwrap_or_else(|| QSeries::zero(order)))
}

/// Retries `f` with growing headroom until its result reaches `order`.
pub fn with_headroom<F>(order: i64, mut f: F) -> Result<QSeries, SeriesError>
where
    F: FnMut(i64) -> Result<QSeries, SeriesError>,
{
    let mut pad = 0;
    loop {
        match f(order + pad).and_then(|s| s.require_order(order)) {
            Ok(s) => return Ok(s.trim_lo()),
            Err(SeriesError::WindowOverflow { .. }) | Err(SeriesError::EmptyWindow { .. })
                if pad < 4 * order + 256 =>
            {
                pad = if pad == 0 { 8 } else { pad * 2 };
            }
            Err(e) => return Err(e),
        }
    }
}
