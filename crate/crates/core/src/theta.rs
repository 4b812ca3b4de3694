//! Jacobi theta functions, the two false theta functions, and the classical
//! identities used to evaluate the limiting generating functions.
//!
//! Each identity is exposed as a function returning its sides separately, so
//! callers compare them rather than trust either one.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::series::{
    pochhammer_finite, pochhammer_infinite, pochhammer_multi_infinite, sum_over, with_headroom,
    Monomial, QSeries, SeriesError,
};

/// The argument of `theta(z; q^modulus)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaSpec {
    pub z: Monomial,
    pub modulus: i64,
}

impl ThetaSpec {
    pub fn new(z: Monomial, modulus: i64) -> Self {
        Self { z, modulus }
    }

    /// `q`-exponent of the `k`-th term `z^k q^{modulus k(k-1)/2}`.
    fn exponent(&self, k: i64) -> i64 {
        self.z.q_exp * k + self.modulus * k * (k - 1) / 2
    }

    /// The contiguous range of `k` whose term lies below `order`.
    fn k_range(&self, order: i64) -> Result<Option<(i64, i64)>, SeriesError> {
        if self.modulus < 1 {
            return Err(SeriesError::Divergent(format!(
                "theta with modulus {}",
                self.modulus
            )));
        }
        // The exponent is a convex quadratic in k with its minimum near
        // 1/2 - b/modulus.
        let m = self.modulus;
        let centre = (m - 2 * self.z.q_exp).div_euclid(2 * m);
        let kmin = (centre - 1..=centre + 1)
            .min_by_key(|&k| self.exponent(k))
            .expect("nonempty");
        if self.exponent(kmin) >= order {
            return Ok(None);
        }
        let mut hi = kmin;
        while self.exponent(hi + 1) < order {
            hi += 1;
        }
        let mut lo = kmin;
        while self.exponent(lo - 1) < order {
            lo -= 1;
        }
        Ok(Some((lo, hi)))
    }
}

/// `theta(z; q^M) = sum_{k in Z} z^k q^{M k(k-1)/2}`, summed over the exact
/// range of `k` contributing below `order`.
pub fn theta_sum(spec: &ThetaSpec, order: i64) -> Result<QSeries, SeriesError> {
    if !spec.z.is_unit() {
        return Err(SeriesError::NonUnitArgument(spec.z.clone()));
    }
    let range = spec.k_range(order)?;
    let lo = range
        .map(|(a, b)| (a..=b).map(|k| spec.exponent(k)).min().unwrap_or(0))
        .unwrap_or(0)
        .min(0);
    let mut out = QSeries::zero_window(lo, order.max(lo + 1));
    if let Some((a, b)) = range {
        for k in a..=b {
            let zk = spec.z.pow(k).expect("unit argument");
            out.add_term(spec.exponent(k), zk.t_exp, &zk.coeff);
        }
    }
    Ok(out)
}

/// `theta(z; q^M) = (-z, -z^{-1} q^M, q^M; q^M)_inf`.
pub fn theta_product(spec: &ThetaSpec, order: i64) -> Result<QSeries, SeriesError> {
    let zinv = spec
        .z
        .inv()
        .ok_or_else(|| SeriesError::NonUnitArgument(spec.z.clone()))?;
    let m = spec.modulus;
    pochhammer_multi_infinite(
        &[spec.z.neg(), zinv.neg().shift_q(m), Monomial::q(m)],
        m,
        order,
    )
}

/// The shifted character `((m+1)/3)`: 1, -1, 0 for `m ≡ 0, 1, 2 (mod 3)`.
pub fn chi3(m: i64) -> i64 {
    match m.rem_euclid(3) {
        0 => 1,
        1 => -1,
        _ => 0,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FalseTheta {
    /// `sum_{k>=0} chi3(k) t^{-k} q^{k(k+1)}`
    One,
    /// `sum_{k>=0} chi3(k) t^k q^{k^2}`
    Two,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FalseThetaForm {
    /// Weighted by `chi3(k)` over all `k >= 0`.
    Character,
    /// Only the residues `k ≡ 0, 1 (mod 3)`, written out with explicit signs.
    Split,
}

/// A false theta function to the given order.
pub fn false_theta(which: FalseTheta, form: FalseThetaForm, order: i64) -> QSeries {
    let mut out = QSeries::zero(order.max(1));
    let mut push = |q: i64, t: i64, c: i64| {
        if q < order {
            out.add_term(q, t, &BigInt::from(c));
        }
    };
    match form {
        FalseThetaForm::Character => {
            for k in 0.. {
                let (q, t) = match which {
                    FalseTheta::One => (k * (k + 1), -k),
                    FalseTheta::Two => (k * k, k),
                };
                if q >= order {
                    break;
                }
                push(q, t, chi3(k));
            }
        }
        FalseThetaForm::Split => {
            for k in 0.. {
                let (a, b) = (3 * k, 3 * k + 1);
                let ((qa, ta), (qb, tb)) = match which {
                    FalseTheta::One => ((a * (a + 1), -a), (b * (b + 1), -b)),
                    FalseTheta::Two => ((a * a, a), (b * b, b)),
                };
                if qa >= order {
                    break;
                }
                push(qa, ta, 1);
                push(qb, tb, -1);
            }
        }
    }
    out
}

/// Monomial `sign * x^n * q^extra`.
fn power_term(x: &Monomial, n: i64, extra_q: i64, sign: i64) -> Monomial {
    let xn = x.pow(n).expect("nonnegative power");
    Monomial::new(xn.coeff * sign, xn.t_exp, xn.q_exp + extra_q)
}

fn require_positive(x: &Monomial, what: &str) -> Result<(), SeriesError> {
    if x.q_exp < 1 {
        return Err(SeriesError::Divergent(format!("{what} with q-exponent {}", x.q_exp)));
    }
    Ok(())
}

/// Left and right sides of Euler's two product-to-sum expansions, in base
/// `q^modulus`:
///
/// - variant 1: `1/(x;q)_inf = sum x^n/(q;q)_n`
/// - variant 2: `(x;q)_inf = sum (-1)^n x^n q^{n(n-1)/2}/(q;q)_n`
pub fn euler_sides(
    variant: u8,
    x: &Monomial,
    modulus: i64,
    order: i64,
) -> Result<(QSeries, QSeries), SeriesError> {
    require_positive(x, "Euler argument")?;
    let qm = Monomial::q(modulus);
    let qpoch = |n: i64, w: i64| pochhammer_finite(&qm, modulus, n, w);
    match variant {
        1 => {
            let lhs = pochhammer_infinite(x, modulus, order)?.inv()?;
            let rhs = sum_over(order, |n| power_term(x, n, 0, 1), qpoch)?;
            Ok((lhs, rhs))
        }
        2 => {
            let lhs = pochhammer_infinite(x, modulus, order)?;
            let rhs = sum_over(
                order,
                |n| power_term(x, n, modulus * n * (n - 1) / 2, if n % 2 == 0 { 1 } else { -1 }),
                qpoch,
            )?;
            Ok((lhs, rhs))
        }
        v => Err(SeriesError::Divergent(format!("Euler variant {v}"))),
    }
}

/// The even-index sum `sum_{n even} q^{n(n-1)/2}/(q;q)_n`, the reciprocal
/// `1/(q;q^2)_inf`, and `(-q;q)_inf`, all in base `q^modulus`.
pub fn cauchy_even_sides(
    modulus: i64,
    order: i64,
) -> Result<(QSeries, QSeries, QSeries), SeriesError> {
    let qm = Monomial::q(modulus);
    let mut even = QSeries::zero(order);
    for n in (0..).step_by(2) {
        let e = modulus * n * (n - 1) / 2;
        if e >= order {
            break;
        }
        let term = QSeries::from_monomial(&Monomial::q(e), order)
            .checked_mul(&pochhammer_finite(&qm, modulus, n, order)?.inv()?)?;
        even = even.checked_add(&term)?;
    }
    let recip = pochhammer_infinite(&qm, 2 * modulus, order)?.inv()?;
    let prod = pochhammer_infinite(&qm.neg(), modulus, order)?;
    Ok((even, recip, prod))
}

/// Both sides of the Lost Notebook identity
///
/// ```text
/// sum q^n / ((-aq;q)_n (-bq;q)_n)
///   = (1 + 1/a) sum (-1)^n q^{n(n+1)/2} (b/a)^n / (-bq;q)_n
///     - (1/a) sum (-1)^n q^{n(n+1)/2} (b/a)^n / (-aq, -bq; q)_inf
/// ```
///
/// in base `q^modulus`. `a` must be a unit; `-aq` and `-bq` must have
/// positive `q`-exponent. The right side is evaluated with its `1 + 1/a`
/// prefactor as written, which may reach below `q^0`.
pub fn ramanujan_sides(
    a: &Monomial,
    b: &Monomial,
    modulus: i64,
    order: i64,
) -> Result<(QSeries, QSeries), SeriesError> {
    let ainv = a.inv().ok_or_else(|| SeriesError::NonUnitArgument(a.clone()))?;
    let aq = a.neg().shift_q(modulus);
    let bq = b.neg().shift_q(modulus);
    require_positive(&aq, "-aq")?;
    require_positive(&bq, "-bq")?;
    let ratio = b.mul(&ainv);

    let lhs = with_headroom(order, |w| {
        sum_over(
            w,
            |n| Monomial::q(modulus * n),
            |n, w2| Ok(&pochhammer_finite(&aq, modulus, n, w2)? * &pochhammer_finite(&bq, modulus, n, w2)?),
        )
    })?;

    let rhs = with_headroom(order, |w| {
        let mono = |n: i64| {
            power_term(&ratio, n, modulus * n * (n + 1) / 2, if n % 2 == 0 { 1 } else { -1 })
        };
        let first = sum_over(w, mono, |n, w2| pochhammer_finite(&bq, modulus, n, w2))?;
        let bare = sum_over(w, mono, |_, w2| Ok(QSeries::one(w2)))?;
        let infinite = pochhammer_multi_infinite(&[aq.clone(), bq.clone()], modulus, w)?;
        let one_plus_ainv =
            &QSeries::one(w) + &QSeries::from_monomial(&ainv, w);
        let ainv_s = QSeries::from_monomial(&ainv, w);
        let left = one_plus_ainv.checked_mul(&first)?;
        let right = ainv_s.checked_mul(&bare.checked_mul(&infinite.inv()?)?)?;
        left.checked_sub(&right)
    })?;
    Ok((lhs, rhs))
}

/// Both sides of Rogers' false theta identity
///
/// ```text
/// sum (-1)^n y^{2n} q^{n(n+1)/2} / (yq;q)_n
///   = sum (-1)^n y^{3n} q^{n(3n+1)/2} (1 - y^2 q^{2n+1})
/// ```
///
/// in base `q^modulus`. `yq` must have positive `q`-exponent. Either side may
/// start below `q^0` when `y` does.
pub fn rogers_sides(y: &Monomial, modulus: i64, order: i64) -> Result<(QSeries, QSeries), SeriesError> {
    let yq = y.shift_q(modulus);
    require_positive(&yq, "yq")?;
    let sign = |n: i64| if n % 2 == 0 { 1 } else { -1 };
    let lhs = with_headroom(order, |w| {
        sum_over(
            w,
            |n| power_term(y, 2 * n, modulus * n * (n + 1) / 2, sign(n)),
            |n, w2| pochhammer_finite(&yq, modulus, n, w2),
        )
    })?;
    let rhs = with_headroom(order, |w| {
        let y2 = y.pow(2).expect("square");
        let mut acc: Option<QSeries> = None;
        let mut prev = i64::MIN;
        for n in 0.. {
            let head = power_term(y, 3 * n, modulus * n * (3 * n + 1) / 2, sign(n));
            let tail = head.mul(&y2).shift_q(modulus * (2 * n + 1)).neg();
            let e = head.q_exp.min(tail.q_exp);
            if e >= w && e > prev {
                break;
            }
            prev = e;
            let lo = e.min(0);
            let mut term = QSeries::zero_window(lo, w.max(lo + 1));
            for m in [&head, &tail] {
                if m.q_exp < w && !m.is_zero() {
                    term.add_term(m.q_exp, m.t_exp, &m.coeff);
                }
            }
            acc = Some(match acc {
                None => term,
                Some(a) => a.checked_add(&term)?,
            });
        }
        Ok(acc.unwrap_or_else(|| QSeries::zero(w)))
    })?;
    Ok((lhs, rhs))
}

/// `sum_{k in Z} (-1)^k t^{-2k} q^{3k^2+k}` summed directly, and
/// `theta(-t^2 q^2; q^6)` from [`theta_sum`].
pub fn theta_assembly_sides(order: i64) -> Result<(QSeries, QSeries), SeriesError> {
    let mut direct = QSeries::zero(order);
    let bound = (order as f64).sqrt() as i64 + 2;
    for k in -bound..=bound {
        let e = 3 * k * k + k;
        if e < order {
            direct.add_term(e, -2 * k, &BigInt::from(if k % 2 == 0 { 1 } else { -1 }));
        }
    }
    let theta = theta_sum(&ThetaSpec::new(Monomial::new(-1, 2, 2), 6), order)?;
    Ok((direct, theta))
}

/// `sum_{k>=0} (-1)^k t^{2k+2} q^{3k^2+5k+2}` and
/// `-sum_{k<=-1} (-1)^k t^{-2k} q^{3k^2+k}`.
pub fn reindexing_sides(order: i64) -> (QSeries, QSeries) {
    let mut pos = QSeries::zero(order);
    let mut neg = QSeries::zero(order);
    let sign = |k: i64| BigInt::from(if k.rem_euclid(2) == 0 { 1 } else { -1 });
    for k in 0.. {
        let e = 3 * k * k + 5 * k + 2;
        if e >= order {
            break;
        }
        pos.add_term(e, 2 * k + 2, &sign(k));
    }
    for k in (1..).map(|j: i64| -j) {
        let e = 3 * k * k + k;
        if e >= order {
            break;
        }
        neg.add_term(e, -2 * k, &-sign(k));
    }
    (pos, neg)
}

/// `(-q^2, -q^3, -q^4, -q^6; q^6)_inf`.
pub fn product_c2(order: i64) -> Result<QSeries, SeriesError> {
    let args: Vec<Monomial> = [2, 3, 4, 6].iter().map(|&e| Monomial::new(-1, 0, e)).collect();
    pochhammer_multi_infinite(&args, 6, order)
}

/// `(-q, -q^3, -q^5, -q^6; q^6)_inf`.
pub fn product_c2star(order: i64) -> Result<QSeries, SeriesError> {
    let args: Vec<Monomial> = [1, 3, 5, 6].iter().map(|&e| Monomial::new(-1, 0, e)).collect();
    pochhammer_multi_infinite(&args, 6, order)
}

/// `(q^3; q^3)_inf`.
pub fn q3_pochhammer(order: i64) -> Result<QSeries, SeriesError> {
    pochhammer_infinite(&Monomial::q(3), 3, order)
}

/// `(-q^3; q^3)_inf`.
pub fn minus_q3_pochhammer(order: i64) -> Result<QSeries, SeriesError> {
    pochhammer_infinite(&Monomial::new(-1, 0, 3), 3, order)
}

/// `theta(t q^4; q^6) / (q^3; q^3)_inf`.
pub fn refined_c2_product(order: i64) -> Result<QSeries, SeriesError> {
    let theta = theta_product(&ThetaSpec::new(Monomial::tq(1, 4), 6), order)?;
    theta.checked_div(&q3_pochhammer(order)?)
}

/// `theta(t q; q^6) / (q^3; q^3)_inf`.
pub fn refined_c2star_product(order: i64) -> Result<QSeries, SeriesError> {
    let theta = theta_product(&ThetaSpec::new(Monomial::tq(1, 1), 6), order)?;
    theta.checked_div(&q3_pochhammer(order)?)
}

/// Number of nonzero terms of a series (used to observe the one-sided
/// growth of false theta functions).
pub fn term_count(s: &QSeries) -> usize {
    s.terms().filter(|(_, _, c)| !c.is_zero()).count()
}

/// True when every coefficient of `s` is 0 or ±1.
pub fn is_sign_series(s: &QSeries) -> bool {
    s.terms().all(|(_, _, c)| c.is_one() || (-c).is_one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::qs;

    #[test]
    fn theta_lowest_terms() {
        let s = theta_sum(&ThetaSpec::new(Monomial::tq(1, 4), 6), 15).unwrap();
        // t^k q^{3k^2 + k}: k = 0, -1, 1, -2, 2 -> exponents 0, 2, 4, 10, 14
        assert_eq!(
            s,
            qs(15, &[(0, 0, 1), (2, -1, 1), (4, 1, 1), (10, -2, 1), (14, 2, 1)])
        );
    }

    #[test]
    fn theta_with_sign() {
        let s = theta_sum(&ThetaSpec::new(Monomial::new(-1, 2, 2), 6), 15).unwrap();
        // (-1)^k t^{2k} q^{3k^2 - k}: k = 0, 1, -1, 2, -2 -> 0, 2, 4, 10, 14
        assert_eq!(
            s,
            qs(15, &[(0, 0, 1), (2, 2, -1), (4, -2, -1), (10, 4, 1), (14, -4, 1)])
        );
    }

    #[test]
    fn theta_order_one() {
        let s = theta_sum(&ThetaSpec::new(Monomial::tq(1, 4), 6), 1).unwrap();
        assert_eq!(s, QSeries::one(1));
    }

    #[test]
    fn chi3_values() {
        assert_eq!((chi3(0), chi3(1), chi3(2)), (1, -1, 0));
        assert_eq!((chi3(-1), chi3(-2), chi3(3)), (0, -1, 1));
    }

    #[test]
    fn false_theta_lowest_terms() {
        let t1 = false_theta(FalseTheta::One, FalseThetaForm::Character, 21);
        assert_eq!(t1, qs(21, &[(0, 0, 1), (2, -1, -1), (12, -3, 1), (20, -4, -1)]));
        let t2 = false_theta(FalseTheta::Two, FalseThetaForm::Character, 17);
        assert_eq!(t2, qs(17, &[(0, 0, 1), (1, 1, -1), (9, 3, 1), (16, 4, -1)]));
        let t2 = false_theta(FalseTheta::Two, FalseThetaForm::Split, 2);
        assert_eq!(t2, qs(2, &[(0, 0, 1), (1, 1, -1)]));
    }

    #[test]
    fn reindexing_small() {
        let (pos, neg) = reindexing_sides(40);
        assert_eq!(pos, neg);
        assert_eq!(pos.coeff_at(2, 2), BigInt::from(1));
    }
}
