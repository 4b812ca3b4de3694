use std::fmt;

use super::{QSeries, SeriesError};

/// A polynomial in an auxiliary variable `z` with [`QSeries`] coefficients,
/// truncated at a fixed `z`-degree.
///
/// All coefficients share one `(lo, order)` window.
#[derive(Clone, PartialEq, Eq)]
pub struct ZPoly {
    zcoeffs: Vec<QSeries>,
}

impl ZPoly {
    /// Builds a polynomial from its `z`-coefficients, moving them onto the
    /// common window `[min lo, min order)`.
    pub fn new(zcoeffs: Vec<QSeries>) -> Result<Self, SeriesError> {
        assert!(!zcoeffs.is_empty(), "a ZPoly needs at least the z^0 coefficient");
        let lo = zcoeffs.iter().map(QSeries::lo).min().unwrap_or(0);
        let order = zcoeffs.iter().map(QSeries::order).min().unwrap_or(1);
        if order <= lo {
            return Err(SeriesError::EmptyWindow { lo, order });
        }
        let zcoeffs = zcoeffs
            .iter()
            .map(|c| c.truncate(order).with_lo(lo))
            .collect::<Result<_, _>>()?;
        Ok(Self { zcoeffs })
    }

    pub fn zero(degree: usize, order: i64) -> Self {
        Self {
            zcoeffs: vec![QSeries::zero(order); degree + 1],
        }
    }

    /// Highest tracked `z`-degree.
    pub fn degree(&self) -> usize {
        self.zcoeffs.len() - 1
    }

    pub fn lo(&self) -> i64 {
        self.zcoeffs[0].lo()
    }

    pub fn order(&self) -> i64 {
        self.zcoeffs[0].order()
    }

    /// The coefficient of `z^n`.
    pub fn coeff(&self, n: usize) -> &QSeries {
        &self.zcoeffs[n]
    }

    pub fn coeffs(&self) -> &[QSeries] {
        &self.zcoeffs
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        let d = self.degree().min(other.degree());
        Self::new(
            (0..=d)
                .map(|n| self.zcoeffs[n].checked_add(&other.zcoeffs[n]))
                .collect::<Result<_, _>>()?,
        )
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        let d = self.degree().min(other.degree());
        Self::new(
            (0..=d)
                .map(|n| self.zcoeffs[n].checked_sub(&other.zcoeffs[n]))
                .collect::<Result<_, _>>()?,
        )
    }

    /// Product truncated at the smaller of the two `z`-degrees.
    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        let d = self.degree().min(other.degree());
        let mut out = Vec::with_capacity(d + 1);
        for n in 0..=d {
            let mut acc: Option<QSeries> = None;
            for i in 0..=n {
                let term = self.zcoeffs[i].checked_mul(&other.zcoeffs[n - i])?;
                acc = Some(match acc {
                    None => term,
                    Some(a) => a.checked_add(&term)?,
                });
            }
            out.push(acc.expect("n >= 0 gives at least one term"));
        }
        Self::new(out)
    }

    /// Multiplies every coefficient by a series in `q`.
    pub fn mul_series(&self, s: &QSeries) -> Result<Self, SeriesError> {
        Self::new(
            self.zcoeffs
                .iter()
                .map(|c| c.checked_mul(s))
                .collect::<Result<_, _>>()?,
        )
    }

    /// Multiplies by `z^k`, dropping terms above the tracked degree.
    pub fn shift_z(&self, k: usize) -> Self {
        let d = self.degree();
        let blank = QSeries::zero_window(self.lo(), self.order());
        Self {
            zcoeffs: (0..=d)
                .map(|n| if n < k { blank.clone() } else { self.zcoeffs[n - k].clone() })
                .collect(),
        }
    }

    /// The substitution `z -> z q^m`: the `z^n` coefficient is multiplied by
    /// `q^{m n}`.
    ///
    /// For `m >= 0` the window is unchanged. For `m < 0` the common order
    /// drops by `|m| * degree`.
    pub fn scale_z(&self, m: i64) -> Result<Self, SeriesError> {
        let shifted: Vec<QSeries> = self
            .zcoeffs
            .iter()
            .enumerate()
            .map(|(n, c)| c.shift_q(m * n as i64))
            .collect();
        if m >= 0 {
            let (lo, order) = (self.lo(), self.order());
            return Ok(Self {
                zcoeffs: shifted
                    .iter()
                    .map(|c| c.truncate(order).with_lo(lo))
                    .collect::<Result<_, _>>()?,
            });
        }
        let order = shifted.iter().map(QSeries::order).min().unwrap_or(1);
        let lo = shifted.iter().map(QSeries::lo).min().unwrap_or(0);
        if order <= lo {
            return Err(SeriesError::WindowOverflow {
                needed: self.order(),
                available: order,
            });
        }
        Self::new(shifted)
    }

    /// The lowest `z`-degree whose coefficient is nonzero.
    pub fn lowest_nonzero_degree(&self) -> Option<usize> {
        self.zcoeffs.iter().position(|c| !c.is_zero())
    }
}

impl fmt::Debug for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, c) in self.zcoeffs.iter().enumerate() {
            writeln!(f, "z^{n}: {c:?}")?;
        }
        Ok(())
    }
}
