//! Laurent polynomials in the refinement variable `t`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// A Laurent polynomial in `t` with big-integer coefficients.
///
/// Stored sparsely: a map from `t`-exponent to a nonzero coefficient. The zero
/// polynomial is the empty map.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct TLaurent {
    terms: BTreeMap<i64, BigInt>,
}

impl TLaurent {
    pub const ZERO: TLaurent = TLaurent {
        terms: BTreeMap::new(),
    };

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * t^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Coefficient of `t^e` (zero when absent).
    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    /// Nonzero terms in ascending `t`-exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// If this is a single term `±t^e`, returns `(sign, e)`.
    pub fn as_unit(&self) -> Option<(i8, i64)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (&e, c) = self.terms.iter().next()?;
        if c.is_one() {
            Some((1, e))
        } else if (-c).is_one() {
            Some((-1, e))
        } else {
            None
        }
    }

    /// Adds `c * t^e` in place.
    pub fn add_term(&mut self, e: i64, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Adds `scale * t^shift * other` in place.
    pub fn add_scaled(&mut self, other: &TLaurent, scale: &BigInt, shift: i64) {
        if scale.is_zero() {
            return;
        }
        for (&e, c) in &other.terms {
            self.add_term(e + shift, &(c * scale));
        }
    }

    /// Adds `a * b` in place.
    pub fn add_product(&mut self, a: &TLaurent, b: &TLaurent) {
        for (&ea, ca) in &a.terms {
            for (&eb, cb) in &b.terms {
                self.add_term(ea + eb, &(ca * cb));
            }
        }
    }

    /// Multiplies by `t^shift`.
    pub fn shift(&self, shift: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e + shift, c.clone())).collect(),
        }
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e, c * s)).collect(),
        }
    }

    /// Value at `t = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.terms.values().sum()
    }
}

impl fmt::Debug for TLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for TLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::monomial::write_sum(f, self.terms.iter().map(|(&e, c)| (e, 0, c)))
    }
}

impl From<i64> for TLaurent {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl AddAssign<&TLaurent> for TLaurent {
    fn add_assign(&mut self, rhs: &TLaurent) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl SubAssign<&TLaurent> for TLaurent {
    fn sub_assign(&mut self, rhs: &TLaurent) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, &-c);
        }
    }
}

impl Add for &TLaurent {
    type Output = TLaurent;
    fn add(self, rhs: &TLaurent) -> TLaurent {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &TLaurent {
    type Output = TLaurent;
    fn sub(self, rhs: &TLaurent) -> TLaurent {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &TLaurent {
    type Output = TLaurent;
    fn mul(self, rhs: &TLaurent) -> TLaurent {
        let mut out = TLaurent::zero();
        out.add_product(self, rhs);
        out
    }
}

impl Neg for &TLaurent {
    type Output = TLaurent;
    fn neg(self) -> TLaurent {
        TLaurent {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}
