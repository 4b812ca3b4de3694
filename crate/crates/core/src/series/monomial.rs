use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A single term `coeff * t^t_exp * q^q_exp`.
///
/// Used for the arguments of Pochhammer symbols and theta functions, e.g.
/// `-t^-1 q^2` or `t q^4`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub coeff: BigInt,
    pub t_exp: i64,
    pub q_exp: i64,
}

impl Monomial {
    /// Builds `coeff * t^t_exp * q^q_exp`. A zero coefficient yields the
    /// canonical zero with both exponents cleared.
    pub fn new(coeff: impl Into<BigInt>, t_exp: i64, q_exp: i64) -> Self {
        let coeff = coeff.into();
        if coeff.is_zero() {
            return Self::zero();
        }
        Self { coeff, t_exp, q_exp }
    }

    pub fn zero() -> Self {
        Self {
            coeff: BigInt::zero(),
            t_exp: 0,
            q_exp: 0,
        }
    }

    pub fn one() -> Self {
        Self::new(1, 0, 0)
    }

    /// `q^e`.
    pub fn q(e: i64) -> Self {
        Self::new(1, 0, e)
    }

    /// `t^a q^b`.
    pub fn tq(a: i64, b: i64) -> Self {
        Self::new(1, a, b)
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    /// True when the coefficient is `±1`, i.e. the monomial is invertible.
    pub fn is_unit(&self) -> bool {
        self.coeff.abs().is_one()
    }

    pub fn neg(&self) -> Self {
        Self::new(-&self.coeff, self.t_exp, self.q_exp)
    }

    pub fn mul(&self, other: &Monomial) -> Self {
        Self::new(
            &self.coeff * &other.coeff,
            self.t_exp + other.t_exp,
            self.q_exp + other.q_exp,
        )
    }

    /// Multiplies by `q^e`.
    pub fn shift_q(&self, e: i64) -> Self {
        Self::new(self.coeff.clone(), self.t_exp, self.q_exp + e)
    }

    /// The inverse, defined only for unit coefficients.
    pub fn inv(&self) -> Option<Self> {
        self.is_unit()
            .then(|| Self::new(self.coeff.clone(), -self.t_exp, -self.q_exp))
    }

    /// `self^k` for `k ≥ 0`; negative powers require a unit.
    pub fn pow(&self, k: i64) -> Option<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let k_abs = k.unsigned_abs();
        let coeff = num_traits::pow::pow(base.coeff.clone(), k_abs as usize);
        Some(Self::new(coeff, base.t_exp * k_abs as i64, base.q_exp * k_abs as i64))
    }
}

/// `c t^a q^b` with unit coefficients and zero exponents elided, e.g.
/// `-t q`, `3 t^-1 q^2`, `1`.
pub fn term_string(coeff: &BigInt, t_exp: i64, q_exp: i64) -> String {
    let power = |v: &str, e: i64| match e {
        0 => None,
        1 => Some(v.to_string()),
        _ => Some(format!("{v}^{e}")),
    };
    let vars: Vec<String> = [power("t", t_exp), power("q", q_exp)].into_iter().flatten().collect();
    if vars.is_empty() {
        return coeff.to_string();
    }
    let prefix = match coeff.to_string().as_str() {
        "1" => String::new(),
        "-1" => "-".to_string(),
        c => format!("{c} "),
    };
    format!("{prefix}{}", vars.join(" "))
}

/// Writes `terms` as a signed sum: `1 - t q + 2 q^3`.
pub(crate) fn write_sum<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (i64, i64, &'a BigInt)>,
) -> fmt::Result {
    let mut first = true;
    for (t, q, c) in terms {
        let text = term_string(c, t, q);
        match (first, text.strip_prefix('-')) {
            (true, _) => write!(f, "{text}")?,
            (false, Some(rest)) => write!(f, " - {rest}")?,
            (false, None) => write!(f, " + {text}")?,
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&term_string(&self.coeff, self.t_exp, self.q_exp))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_is_canonical() {
        assert_eq!(Monomial::new(0, 5, -3), Monomial::zero());
    }

    #[test]
    fn powers() {
        let y = Monomial::new(-1, -1, -4);
        assert_eq!(y.pow(2).unwrap(), Monomial::new(1, -2, -8));
        assert_eq!(y.pow(3).unwrap(), Monomial::new(-1, -3, -12));
        assert_eq!(y.pow(-1).unwrap(), Monomial::new(-1, 1, 4));
        assert_eq!(Monomial::new(2, 0, 1).pow(-1), None);
        assert_eq!(Monomial::new(2, 1, 1).pow(0).unwrap(), Monomial::one());
    }
}
