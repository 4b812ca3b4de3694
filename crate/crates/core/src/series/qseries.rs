//! Truncated Laurent series in `q` over `Z[t, t^-1]`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use serde::{Deserialize, Serialize};

use super::laurent::TLaurent;
use super::monomial::Monomial;
use super::SeriesError;

static ZERO: TLaurent = TLaurent::ZERO;

/// A truncated series `sum_{n >= lo} a_n(t) q^n + O(q^order)`.
///
/// Coefficients below `lo` are zero; coefficients in `[lo, order)` are known
/// exactly; nothing is known at or above `order`. `lo` may be negative.
#[derive(Clone)]
pub struct QSeries {
    lo: i64,
    order: i64,
    coeffs: Vec<TLaurent>,
}

/// The first coefficient at which two series differ, ordered by `q`-exponent
/// then `t`-exponent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub q_exp: i64,
    pub t_exp: i64,
    #[serde(with = "crate::bigint_string")]
    pub lhs_coeff: BigInt,
    #[serde(with = "crate::bigint_string")]
    pub rhs_coeff: BigInt,
}

impl QSeries {
    /// The zero series on the window `[lo, order)`.
    ///
    /// # Panics
    /// If `order <= lo`.
    pub fn zero_window(lo: i64, order: i64) -> Self {
        assert!(order > lo, "empty window [{lo}, {order})");
        Self {
            lo,
            order,
            coeffs: vec![TLaurent::zero(); (order - lo) as usize],
        }
    }

    /// The zero series on `[0, order)`.
    pub fn zero(order: i64) -> Self {
        Self::zero_window(0, order)
    }

    pub fn one(order: i64) -> Self {
        Self::constant(TLaurent::one(), order)
    }

    pub fn constant(c: TLaurent, order: i64) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The integer constant `c`.
    pub fn int(c: i64, order: i64) -> Self {
        Self::constant(TLaurent::constant(c), order)
    }

    /// A single monomial, on the window `[min(0, q_exp), order)`.
    pub fn from_monomial(m: &Monomial, order: i64) -> Self {
        let lo = m.q_exp.min(0);
        let mut s = Self::zero_window(lo, order.max(lo + 1));
        if m.q_exp < s.order {
            s.add_term(m.q_exp, m.t_exp, &m.coeff);
        }
        s
    }

    /// Builds a series from `(q_exp, t_exp, coeff)` triples; terms at or above
    /// `order` are dropped.
    pub fn from_terms<I>(lo: i64, order: i64, terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, i64, BigInt)>,
    {
        let mut s = Self::zero_window(lo, order);
        for (q, t, c) in terms {
            if q < order {
                s.add_term(q, t, &c);
            }
        }
        s
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    /// The coefficient of `q^n`, or `None` when `n` is beyond the truncation.
    pub fn get(&self, n: i64) -> Option<&TLaurent> {
        if n >= self.order {
            None
        } else if n < self.lo {
            Some(&ZERO)
        } else {
            Some(&self.coeffs[(n - self.lo) as usize])
        }
    }

    /// Coefficient of `q^n`; zero outside the window.
    pub fn coeff(&self, n: i64) -> &TLaurent {
        self.get(n).unwrap_or(&ZERO)
    }

    /// The coefficient of `t^t_exp q^q_exp`.
    pub fn coeff_at(&self, q_exp: i64, t_exp: i64) -> BigInt {
        self.coeff(q_exp).coeff(t_exp)
    }

    /// Adds `c t^t_exp q^q_exp` in place.
    ///
    /// # Panics
    /// If `q_exp` lies outside `[lo, order)`.
    pub fn add_term(&mut self, q_exp: i64, t_exp: i64, c: &BigInt) {
        assert!(
            q_exp >= self.lo && q_exp < self.order,
            "q^{q_exp} outside window [{}, {})",
            self.lo,
            self.order
        );
        self.coeffs[(q_exp - self.lo) as usize].add_term(t_exp, c);
    }

    /// Nonzero terms as `(q_exp, t_exp, coeff)`, ascending in `q` then `t`.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64, &BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .flat_map(move |(i, c)| c.iter().map(move |(t, v)| (self.lo + i as i64, t, v)))
    }

    /// Exponent of the lowest nonzero coefficient inside the window.
    pub fn valuation(&self) -> Option<i64> {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .map(|i| self.lo + i as i64)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(TLaurent::is_zero)
    }

    /// Lowers the truncation order. Requests above the current order are
    /// clamped.
    pub fn truncate(&self, order: i64) -> Self {
        let order = order.min(self.order);
        if order <= self.lo {
            return Self::zero_window(order - 1, order);
        }
        Self {
            lo: self.lo,
            order,
            coeffs: self.coeffs[..(order - self.lo) as usize].to_vec(),
        }
    }

    /// Truncates to exactly `order`, failing if the series is not known that
    /// far.
    pub fn require_order(&self, order: i64) -> Result<Self, SeriesError> {
        if order > self.order {
            return Err(SeriesError::WindowOverflow {
                needed: order,
                available: self.order,
            });
        }
        Ok(self.truncate(order))
    }

    /// Moves the lower bound of the window. Lowering pads with zeros; raising
    /// fails if a nonzero coefficient would be discarded.
    pub fn with_lo(&self, lo: i64) -> Result<Self, SeriesError> {
        if lo >= self.order {
            return Err(SeriesError::EmptyWindow { lo, order: self.order });
        }
        if lo <= self.lo {
            let mut coeffs = vec![TLaurent::zero(); (self.lo - lo) as usize];
            coeffs.extend(self.coeffs.iter().cloned());
            return Ok(Self { lo, order: self.order, coeffs });
        }
        if let Some(v) = self.valuation() {
            if v < lo {
                return Err(SeriesError::NonzeroBelow { q_exp: v, lo });
            }
        }
        Ok(Self {
            lo,
            order: self.order,
            coeffs: self.coeffs[(lo - self.lo) as usize..].to_vec(),
        })
    }

    /// Raises a negative `lo` as far as `min(0, valuation)`.
    pub fn trim_lo(&self) -> Self {
        if self.lo >= 0 {
            return self.clone();
        }
        let target = self.valuation().unwrap_or(0).min(0).min(self.order - 1);
        self.with_lo(target).expect("no nonzero terms below the valuation")
    }

    /// Coefficientwise sum on `[min(lo), min(order))`.
    pub fn checked_add(&self, other: &Self) -> Result<Self, SeriesError> {
        let lo = self.lo.min(other.lo);
        let order = self.order.min(other.order);
        if order <= lo {
            return Err(SeriesError::EmptyWindow { lo, order });
        }
        let mut out = Self::zero_window(lo, order);
        for src in [self, other] {
            for n in src.lo..order.min(src.order) {
                out.coeffs[(n - lo) as usize] += &src.coeffs[(n - src.lo) as usize];
            }
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.checked_add(&-other)
    }

    /// Cauchy product. The window `[lo1, N1) x [lo2, N2)` yields
    /// `[lo1 + lo2, min(lo1 + N2, lo2 + N1))`.
    pub fn checked_mul(&self, other: &Self) -> Result<Self, SeriesError> {
        let lo = self.lo + other.lo;
        let order = (self.lo + other.order).min(other.lo + self.order);
        if order <= lo {
            return Err(SeriesError::EmptyWindow { lo, order });
        }
        let mut out = Self::zero_window(lo, order);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let qa = self.lo + i as i64;
            for (j, b) in other.coeffs.iter().enumerate() {
                let q = qa + other.lo + j as i64;
                if q >= order {
                    break;
                }
                if b.is_zero() {
                    continue;
                }
                out.coeffs[(q - lo) as usize].add_product(a, b);
            }
        }
        Ok(out)
    }

    /// Multiplicative inverse. The lowest nonzero coefficient must be a unit
    /// monomial `±t^e q^v`; the result lives on `[-v, order - 2v)`.
    pub fn inv(&self) -> Result<Self, SeriesError> {
        let v = self.valuation().ok_or(SeriesError::NotUnit { q_exp: None })?;
        let (sign, e) = self
            .coeff(v)
            .as_unit()
            .ok_or(SeriesError::NotUnit { q_exp: Some(v) })?;
        let len = (self.order - v) as usize;
        // Dividing through by the leading unit `sign t^e q^v` leaves 1 + (higher terms).
        let sign = BigInt::from(sign);
        let norm: Vec<TLaurent> = (0..len)
            .map(|k| self.coeff(v + k as i64).shift(-e).scale(&sign))
            .collect();
        let mut inv: Vec<TLaurent> = Vec::with_capacity(len);
        inv.push(TLaurent::one());
        for k in 1..len {
            let mut acc = TLaurent::zero();
            for j in 1..=k {
                if !norm[j].is_zero() && !inv[k - j].is_zero() {
                    acc.add_product(&norm[j], &inv[k - j]);
                }
            }
            inv.push(-&acc);
        }
        Ok(Self {
            lo: -v,
            order: self.order - 2 * v,
            coeffs: inv.iter().map(|c| c.shift(-e).scale(&sign)).collect(),
        })
    }

    /// `self / other`, via the inverse of `other`.
    pub fn checked_div(&self, other: &Self) -> Result<Self, SeriesError> {
        self.checked_mul(&other.inv()?)
    }

    /// The substitution `q -> q^k` for `k >= 1`; the window becomes
    /// `[k lo, k order)`.
    pub fn substitute_q(&self, k: i64) -> Result<Self, SeriesError> {
        if k < 1 {
            return Err(SeriesError::BadModulus(k));
        }
        let mut out = Self::zero_window(k * self.lo, k * self.order);
        for (i, c) in self.coeffs.iter().enumerate() {
            out.coeffs[i * k as usize] = c.clone();
        }
        Ok(out)
    }

    /// Multiplies by a monomial, shifting the window by its `q`-exponent.
    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        if m.is_zero() {
            return Self::zero_window(self.lo, self.order);
        }
        Self {
            lo: self.lo + m.q_exp,
            order: self.order + m.q_exp,
            coeffs: self.coeffs.iter().map(|c| c.shift(m.t_exp).scale(&m.coeff)).collect(),
        }
    }

    /// Multiplies by `q^e`.
    pub fn shift_q(&self, e: i64) -> Self {
        Self {
            lo: self.lo + e,
            order: self.order + e,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        Self {
            lo: self.lo,
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c.scale(s)).collect(),
        }
    }

    /// Multiplies by the binomial `1 - m`, exactly.
    ///
    /// For `m` with negative `q`-exponent `-d`, the window moves down to
    /// `[lo - d, order - d)`.
    pub fn mul_one_minus(&self, m: &Monomial) -> Self {
        let e = m.q_exp;
        let (lo, order) = if e < 0 {
            (self.lo + e, self.order + e)
        } else {
            (self.lo, self.order)
        };
        let mut out = Self::zero_window(lo, order.max(lo + 1));
        if order <= lo {
            return out;
        }
        let neg = -&m.coeff;
        for n in lo..order {
            let slot = &mut out.coeffs[(n - lo) as usize];
            *slot += self.coeff(n);
            let src = self.coeff(n - e);
            if !src.is_zero() {
                slot.add_scaled(src, &neg, m.t_exp);
            }
        }
        out
    }

    /// The value at `t = 1`, as a series with only `t^0` coefficients.
    pub fn eval_t_one(&self) -> Self {
        Self {
            lo: self.lo,
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .map(|c| TLaurent::constant(c.eval_one()))
                .collect(),
        }
    }

    /// The minimal `(q, t)` position in `[min(lo), min(order))` where the two
    /// series differ, if any.
    pub fn first_discrepancy(&self, other: &Self) -> Option<Discrepancy> {
        let lo = self.lo.min(other.lo);
        let order = self.order.min(other.order);
        for n in lo..order {
            let a = self.coeff(n);
            let b = other.coeff(n);
            if a == b {
                continue;
            }
            let t_exp = a
                .iter()
                .map(|(e, _)| e)
                .chain(b.iter().map(|(e, _)| e))
                .filter(|&e| a.coeff(e) != b.coeff(e))
                .min()
                .expect("unequal coefficients differ somewhere");
            return Some(Discrepancy {
                q_exp: n,
                t_exp,
                lhs_coeff: a.coeff(t_exp),
                rhs_coeff: b.coeff(t_exp),
            });
        }
        None
    }

    /// Equality on the overlap of the two windows.
    pub fn agrees_with(&self, other: &Self) -> bool {
        self.first_discrepancy(other).is_none()
    }
}

impl PartialEq for QSeries {
    /// Equal orders and equal coefficients; `lo` only matters through the
    /// coefficients it admits.
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.agrees_with(other)
    }
}

impl Eq for QSeries {}

impl fmt::Debug for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[lo={}] {self}", self.lo)
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::monomial::write_sum(f, self.terms().map(|(q, t, c)| (t, q, c)))?;
        write!(f, " + O(q^{})", self.order)
    }
}

impl Add for &QSeries {
    type Output = QSeries;
    fn add(self, rhs: &QSeries) -> QSeries {
        self.checked_add(rhs).expect("series addition")
    }
}

impl Sub for &QSeries {
    type Output = QSeries;
    fn sub(self, rhs: &QSeries) -> QSeries {
        self.checked_sub(rhs).expect("series subtraction")
    }
}

impl Mul for &QSeries {
    type Output = QSeries;
    /// # Panics
    /// If the product window is empty; use [`QSeries::checked_mul`] to handle
    /// that case.
    fn mul(self, rhs: &QSeries) -> QSeries {
        self.checked_mul(rhs).expect("series product window")
    }
}

impl Neg for &QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        QSeries {
            lo: self.lo,
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Add for QSeries {
    type Output = QSeries;
    fn add(self, rhs: QSeries) -> QSeries {
        &self + &rhs
    }
}

impl Sub for QSeries {
    type Output = QSeries;
    fn sub(self, rhs: QSeries) -> QSeries {
        &self - &rhs
    }
}

impl Mul for QSeries {
    type Output = QSeries;
    fn mul(self, rhs: QSeries) -> QSeries {
        &self * &rhs
    }
}

impl Neg for QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        -&self
    }
}

/// Shorthand for building small series in tests and docs:
/// `qs(order, &[(q, t, c), ...])`.
pub fn qs(order: i64, terms: &[(i64, i64, i64)]) -> QSeries {
    let lo = terms.iter().map(|&(q, _, _)| q).min().unwrap_or(0).min(0);
    QSeries::from_terms(
        lo,
        order,
        terms.iter().map(|&(q, t, c)| (q, t, BigInt::from(c))),
    )
}

/// True if `s` is the constant `1` on its window.
pub fn is_one(s: &QSeries) -> bool {
    s.terms().count() == 1 && s.coeff(0).is_one()
}
