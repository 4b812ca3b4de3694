//! q-Pochhammer symbols and Gaussian binomial coefficients.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Monomial, QSeries, SeriesError};

/// `(a; q^modulus)_n = prod_{j<n} (1 - a q^{modulus j})`, exact up to `order`.
///
/// Factors with negative `q`-exponent are allowed; the result then starts
/// below `q^0`.
pub fn pochhammer_finite(
    a: &Monomial,
    modulus: i64,
    n: i64,
    order: i64,
) -> Result<QSeries, SeriesError> {
    if n < 0 {
        return Err(SeriesError::NegativeLength(n));
    }
    if modulus < 1 {
        return Err(SeriesError::BadModulus(modulus));
    }
    let factors: Vec<Monomial> = (0..n).map(|j| a.shift_q(modulus * j)).collect();
    product_of_binomials(&factors, order)
}

/// `(a; q^modulus)_inf`, multiplying factors until they are `1` within the
/// window.
pub fn pochhammer_infinite(a: &Monomial, modulus: i64, order: i64) -> Result<QSeries, SeriesError> {
    if modulus < 1 {
        return Err(SeriesError::NonTerminating { q_exp: a.q_exp, modulus });
    }
    // A factor at q-exponent e can only matter below `order` if e < order + (total
    // downward shift from the negative-exponent factors).
    let neg_total: i64 = (0..)
        .map(|j| a.q_exp + modulus * j)
        .take_while(|&e| e < 0)
        .map(|e| -e)
        .sum();
    let cutoff = order + neg_total;
    let factors: Vec<Monomial> = (0..)
        .map(|j| a.shift_q(modulus * j))
        .take_while(|m| m.q_exp < cutoff)
        .collect();
    product_of_binomials(&factors, order)
}

/// `(a_1, ..., a_r; q^modulus)_n`.
pub fn pochhammer_multi_finite(
    args: &[Monomial],
    modulus: i64,
    n: i64,
    order: i64,
) -> Result<QSeries, SeriesError> {
    if n < 0 {
        return Err(SeriesError::NegativeLength(n));
    }
    if modulus < 1 {
        return Err(SeriesError::BadModulus(modulus));
    }
    let factors: Vec<Monomial> = args
        .iter()
        .flat_map(|a| (0..n).map(move |j| a.shift_q(modulus * j)))
        .collect();
    product_of_binomials(&factors, order)
}

/// `(a_1, ..., a_r; q^modulus)_inf`.
pub fn pochhammer_multi_infinite(
    args: &[Monomial],
    modulus: i64,
    order: i64,
) -> Result<QSeries, SeriesError> {
    let mut acc: Option<QSeries> = None;
    for a in args {
        let p = pochhammer_infinite(a, modulus, order + pad_for(args, modulus))?;
        acc = Some(match acc {
            None => p,
            Some(prev) => prev.checked_mul(&p)?,
        });
    }
    match acc {
        None => Ok(QSeries::one(order)),
        Some(s) => s.require_order(order),
    }
}

fn pad_for(args: &[Monomial], modulus: i64) -> i64 {
    args.iter()
        .map(|a| {
            (0..)
                .map(|j| a.q_exp + modulus * j)
                .take_while(|&e| e < 0)
                .map(|e| -e)
                .sum::<i64>()
        })
        .sum()
}

/// Multiplies `prod (1 - m)` over the given factors, starting from enough
/// headroom that the final window reaches `order`.
fn product_of_binomials(factors: &[Monomial], order: i64) -> Result<QSeries, SeriesError> {
    if order < 1 {
        return Err(SeriesError::EmptyWindow { lo: 0, order });
    }
    let headroom: i64 = factors.iter().map(|m| (-m.q_exp).max(0)).sum();
    let mut acc = QSeries::one(order + headroom);
    // Negative-exponent factors shrink the window, so they go last.
    let mut sorted: Vec<&Monomial> = factors.iter().collect();
    sorted.sort_by_key(|m| std::cmp::Reverse(m.q_exp));
    for m in sorted {
        if m.is_zero() || m.q_exp >= acc.order() {
            continue;
        }
        acc = acc.mul_one_minus(m);
    }
    acc.require_order(order)
}

/// The Gaussian binomial `[n, m]` in the base `q^modulus`, truncated to
/// `order`. The quotient is computed by exact polynomial division.
pub fn qbinomial(n: i64, m: i64, modulus: i64, order: i64) -> Result<QSeries, SeriesError> {
    if n < 0 || m < 0 || m > n {
        return Err(SeriesError::InvalidBinomial { n, m });
    }
    if modulus < 1 {
        return Err(SeriesError::BadModulus(modulus));
    }
    let m = m.min(n - m);
    // [n, m] = prod_{i=1..m} (1 - q^{n-m+i}) / (1 - q^i)
    let mut num = vec![BigInt::one()];
    for i in 1..=m {
        num = poly_mul_one_minus_qk(&num, (n - m + i) as usize);
    }
    for i in 1..=m {
        num = poly_div_one_minus_qk(&num, i as usize).ok_or(SeriesError::InexactDivision)?;
    }
    let mut out = QSeries::zero(order);
    for (k, c) in num.iter().enumerate() {
        let e = modulus * k as i64;
        if e >= order {
            break;
        }
        out.add_term(e, 0, c);
    }
    Ok(out)
}

fn poly_mul_one_minus_qk(p: &[BigInt], k: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); p.len() + k];
    for (i, c) in p.iter().enumerate() {
        out[i] += c;
        out[i + k] -= c;
    }
    out
}

/// Exact division by `1 - q^k`; `None` when the remainder is nonzero.
fn poly_div_one_minus_qk(p: &[BigInt], k: usize) -> Option<Vec<BigInt>> {
    if p.len() <= k {
        return p.iter().all(Zero::is_zero).then(Vec::new);
    }
    let qlen = p.len() - k;
    let mut quot = vec![BigInt::zero(); qlen];
    for i in 0..qlen {
        quot[i] = if i >= k { &p[i] + &quot[i - k] } else { p[i].clone() };
    }
    // Remainder check: the top k coefficients of quot * (1 - q^k) must match.
    for (i, c) in p.iter().enumerate().skip(qlen) {
        let expected = if i >= k { -&quot[i - k] } else { BigInt::zero() };
        if *c != expected {
            return None;
        }
    }
    Some(quot)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::qs;

    #[test]
    fn empty_product() {
        let a = Monomial::new(-1, 2, 3);
        assert_eq!(pochhammer_finite(&a, 1, 0, 10).unwrap(), QSeries::one(10));
    }

    #[test]
    fn minus_q_two_factors() {
        // (-q; q)_2 = (1 + q)(1 + q^2)
        let p = pochhammer_finite(&Monomial::new(-1, 0, 1), 1, 2, 10).unwrap();
        assert_eq!(p, qs(10, &[(0, 0, 1), (1, 0, 1), (2, 0, 1), (3, 0, 1)]));
    }

    #[test]
    fn single_factor_with_t() {
        let p = pochhammer_finite(&Monomial::new(-1, -1, 2), 6, 1, 10).unwrap();
        assert_eq!(p, qs(10, &[(0, 0, 1), (2, -1, 1)]));
    }

    #[test]
    fn negative_length_rejected() {
        assert!(matches!(
            pochhammer_finite(&Monomial::q(1), 1, -1, 5),
            Err(SeriesError::NegativeLength(-1))
        ));
    }

    #[test]
    fn infinite_beyond_window_is_one() {
        let p = pochhammer_infinite(&Monomial::q(9), 1, 9).unwrap();
        assert_eq!(p, QSeries::one(9));
    }

    #[test]
    fn minus_q_cubed_infinite() {
        // (-q^3; q^3)_inf to order 7: (1 + q^3)(1 + q^6) = 1 + q^3 + q^6 + ...
        let p = pochhammer_infinite(&Monomial::new(-1, 0, 3), 3, 7).unwrap();
        assert_eq!(p, qs(7, &[(0, 0, 1), (3, 0, 1), (6, 0, 1)]));
    }

    #[test]
    fn negative_exponent_factor() {
        // (-t^-1 q^-4; q^6)_inf = (1 + t^-1 q^-4)(1 + t^-1 q^2)(1 + t^-1 q^8)...
        let p = pochhammer_infinite(&Monomial::new(-1, -1, -4), 6, 6).unwrap();
        assert_eq!(p.lo(), -4);
        // q^-4 t^-1, q^-2 t^-2, q^2 t^-1, q^4 t^-2 (from q^-4 * q^8)
        assert_eq!(p.coeff_at(-4, -1), BigInt::from(1));
        assert_eq!(p.coeff_at(-2, -2), BigInt::from(1));
        assert_eq!(p.coeff_at(0, 0), BigInt::from(1));
        assert_eq!(p.coeff_at(2, -1), BigInt::from(1));
        assert_eq!(p.coeff_at(4, -2), BigInt::from(1));
    }

    #[test]
    fn bad_modulus() {
        assert!(pochhammer_infinite(&Monomial::q(1), 0, 5).is_err());
    }

    #[test]
    fn small_binomials() {
        assert_eq!(qbinomial(5, 0, 1, 20).unwrap(), QSeries::one(20));
        assert_eq!(qbinomial(2, 1, 1, 20).unwrap(), qs(20, &[(0, 0, 1), (1, 0, 1)]));
        // [4, 2] = 1 + q + 2q^2 + q^3 + q^4
        assert_eq!(
            qbinomial(4, 2, 1, 20).unwrap(),
            qs(20, &[(0, 0, 1), (1, 0, 1), (2, 0, 2), (3, 0, 1), (4, 0, 1)])
        );
        assert_eq!(qbinomial(2, 1, 3, 20).unwrap(), qs(20, &[(0, 0, 1), (3, 0, 1)]));
    }

    #[test]
    fn binomial_errors() {
        assert!(matches!(qbinomial(2, 3, 1, 5), Err(SeriesError::InvalidBinomial { .. })));
        assert!(poly_div_one_minus_qk(&[BigInt::one(), BigInt::one()], 1).is_none());
    }
}
