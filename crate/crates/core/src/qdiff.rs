//! Finite recurrences for the bounded generating functions `C_M`, their
//! renormalizations `gamma_n` and `delta_n`, the two q-difference equations
//! in `z`, the closed finite evaluation, and the limit as `M -> inf`.
//!
//! Throughout, `D = 1 - alpha - beta` is the configuration's defect.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use thiserror::Error;

use crate::partition::{brute_force_series, GapConfig};
use crate::series::{
    pochhammer_finite, pochhammer_multi_infinite, qbinomial, sum_over, with_headroom,
    Discrepancy, Monomial, QSeries, SeriesError, ZPoly,
};
use crate::theta::{
    false_theta, minus_q3_pochhammer, q3_pochhammer, refined_c2_product, refined_c2star_product,
    theta_sum, FalseTheta, FalseThetaForm, ThetaSpec,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QdiffError {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("C_{0} is not defined: indices start at -2 and skip -1")]
    UndefinedIndex(i64),
    #[error("{what} needs index at least {min}, got {got}")]
    IndexTooSmall { what: &'static str, min: i64, got: i64 },
    #[error("order must be at least {min}, got {got}")]
    OrderTooSmall { min: i64, got: i64 },
    #[error("z-degree must be at least 3, got {0}")]
    DegreeTooSmall(usize),
    #[error("{what} is inconsistent at z^{degree}")]
    Inconsistent {
        what: &'static str,
        degree: usize,
        discrepancy: Option<Discrepancy>,
    },
}

type Result<T> = std::result::Result<T, QdiffError>;

/// `sum c t^a q^b` over the given triples, on `[min(0, min b), order)`;
/// terms at or above `order` are dropped.
fn poly(order: i64, terms: &[(i64, i64, i64)]) -> QSeries {
    let lo = terms.iter().map(|&(q, _, _)| q).min().unwrap_or(0).min(0);
    let mut s = QSeries::zero_window(lo, order.max(lo + 1));
    for &(q, t, c) in terms {
        if q < s.order() && c != 0 {
            s.add_term(q, t, &BigInt::from(c));
        }
    }
    s
}

fn mono_series(c: i64, t: i64, q: i64, order: i64) -> QSeries {
    poly(order, &[(q, t, c)])
}

/// `1 - q^k` on `[0, order)`.
fn one_minus_q(k: i64, order: i64) -> QSeries {
    poly(order, &[(0, 0, 1), (k, 0, -1)])
}

/// `(q^3; q^3)_n`.
fn q3_finite(n: i64, order: i64) -> Result<QSeries> {
    Ok(pochhammer_finite(&Monomial::q(3), 3, n, order)?)
}

fn mismatch(what: &'static str, degree: usize, a: &QSeries, b: &QSeries) -> QdiffError {
    QdiffError::Inconsistent {
        what,
        degree,
        discrepancy: a.first_discrepancy(b),
    }
}

/// Values of `C_M`, `gamma_n` and `delta_n` for one configuration.
#[derive(Clone, Debug)]
pub struct RecurrenceState {
    pub cfg: GapConfig,
    pub order: i64,
    c: BTreeMap<i64, QSeries>,
    gamma: Vec<QSeries>,
    delta: Vec<QSeries>,
}

impl RecurrenceState {
    /// Computes `C_M` for `M <= 3 n_max + 1`, and `gamma_n`, `delta_n` for
    /// `n <= n_max`.
    pub fn build(cfg: GapConfig, n_max: usize, order: i64) -> Result<Self> {
        if order < 1 {
            return Err(QdiffError::OrderTooSmall { min: 1, got: order });
        }
        let c = c_table(cfg, 3 * n_max as i64 + 1, order);
        let gamma = gamma_seq(cfg, n_max, order)?;
        let delta = delta_seq(cfg, n_max, order)?;
        for (n, g) in gamma.iter().enumerate() {
            let back = g.checked_mul(&q3_finite(n as i64, order)?)?;
            let cm = &c[&(3 * n as i64 - 2)];
            if back != *cm {
                return Err(mismatch("gamma_n (q^3;q^3)_n = C_{3n-2}", n, &back, cm));
            }
        }
        Ok(Self { cfg, order, c, gamma, delta })
    }

    /// `C_M`, if it was computed.
    pub fn c(&self, m: i64) -> Option<&QSeries> {
        self.c.get(&m)
    }

    pub fn gamma(&self) -> &[QSeries] {
        &self.gamma
    }

    pub fn delta(&self) -> &[QSeries] {
        &self.delta
    }
}

/// `C_M` for `M = -2, 0, 1, ..., m_max` (skipping `-1`).
fn c_table(cfg: GapConfig, m_max: i64, order: i64) -> BTreeMap<i64, QSeries> {
    let (a, b) = (cfg.alpha_i(), cfg.beta_i());
    let mut c = BTreeMap::new();
    c.insert(-2, QSeries::int(b, order));
    c.insert(0, QSeries::one(order));
    c.insert(1, poly(order, &[(0, 0, 1), (1, 1, a)]));
    c.insert(2, &c[&1] + &mono_series(b, -1, 2, order));
    c.insert(3, &c[&2] + &mono_series(1, 0, 3, order));
    c.insert(4, &c[&3] + &poly(order, &[(4, 1, 1), (6, 0, b)]));
    let mut n = 2;
    while 3 * n - 1 <= m_max {
        let m = |e: i64, t: i64| Monomial::tq(t, e);
        let c3n1 = &c[&(3 * n - 2)] + &c[&(3 * n - 5)].mul_monomial(&m(3 * n - 1, -1));
        let c3n = &c3n1 + &c[&(3 * n - 3)].mul_monomial(&m(3 * n, 0));
        let c3np1 = &(&c3n + &c[&(3 * n - 3)].mul_monomial(&m(3 * n + 1, 1)))
            + &c[&(3 * n - 5)].mul_monomial(&m(6 * n, 0));
        c.insert(3 * n - 1, c3n1.truncate(order));
        c.insert(3 * n, c3n.truncate(order));
        c.insert(3 * n + 1, c3np1.truncate(order));
        n += 1;
    }
    c.retain(|&k, _| k <= m_max.max(4));
    c
}

/// The generating function `C_M(t; q)` of configuration-weighted partitions
/// with parts at most `M`, from the three-line recurrence.
///
/// `M = -2` gives the extension value `beta`; `M = -1` is undefined.
pub fn finite_c(cfg: GapConfig, m: i64, order: i64) -> Result<QSeries> {
    if m < -2 {
        return Err(QdiffError::IndexTooSmall { what: "C_M", min: -2, got: m });
    }
    if m == -1 {
        return Err(QdiffError::UndefinedIndex(-1));
    }
    if order < 1 {
        return Err(QdiffError::OrderTooSmall { min: 1, got: order });
    }
    Ok(c_table(cfg, m, order).remove(&m).expect("computed"))
}

/// Whether
/// `C_{3n+1} = (1+q^{3n}) C_{3n-2} + (t^-1 q^{3n-1} + t q^{3n+1} + q^{6n}) C_{3n-5}
///             + q^{6n-3} (1 - q^{3n-3}) C_{3n-8}`
/// holds for the supplied values.
pub fn combined_recurrence_holds(
    n: i64,
    c3n1: &QSeries,
    c3n2: &QSeries,
    c3n5: &QSeries,
    c3n8: &QSeries,
) -> bool {
    combined_recurrence_rhs(n, c3n2, c3n5, c3n8)
        .map(|rhs| rhs == c3n1.truncate(rhs.order().min(c3n1.order())))
        .unwrap_or(false)
}

/// The right side of the combined recurrence for the supplied values.
pub fn combined_recurrence_rhs(
    n: i64,
    c3n2: &QSeries,
    c3n5: &QSeries,
    c3n8: &QSeries,
) -> Result<QSeries> {
    let order = c3n2.order().min(c3n5.order()).min(c3n8.order());
    let a = poly(order, &[(0, 0, 1), (3 * n, 0, 1)]);
    let b = poly(order, &[(3 * n - 1, -1, 1), (3 * n + 1, 1, 1), (6 * n, 0, 1)]);
    let c = poly(order, &[(6 * n - 3, 0, 1), (9 * n - 6, 0, -1)]);
    let rhs = a.checked_mul(c3n2)?.checked_add(&b.checked_mul(c3n5)?)?;
    Ok(rhs.checked_add(&c.checked_mul(c3n8)?)?.truncate(order))
}

/// The combined recurrence at index `n >= 2` for the values from
/// [`finite_c`].
pub fn combined_recurrence_check(cfg: GapConfig, n: i64, order: i64) -> Result<bool> {
    if n < 2 {
        return Err(QdiffError::IndexTooSmall { what: "combined recurrence", min: 2, got: n });
    }
    let c = c_table(cfg, 3 * n + 1, order);
    Ok(combined_recurrence_holds(
        n,
        &c[&(3 * n + 1)],
        &c[&(3 * n - 2)],
        &c[&(3 * n - 5)],
        &c[&(3 * n - 8)],
    ))
}

/// `gamma_0, ..., gamma_{n_max}` where `gamma_n = C_{3n-2} / (q^3; q^3)_n`,
/// from the three-step recurrence.
pub fn gamma_seq(cfg: GapConfig, n_max: usize, order: i64) -> Result<Vec<QSeries>> {
    let (a, b) = (cfg.alpha_i(), cfg.beta_i());
    let mut g = vec![QSeries::int(b, order)];
    if n_max >= 1 {
        g.push(poly(order, &[(0, 0, 1), (1, 1, a)]).checked_div(&one_minus_q(3, order))?);
    }
    if n_max >= 2 {
        let c4 = poly(order, &[(0, 0, 1), (1, 1, a), (2, -1, b), (3, 0, 1), (4, 1, 1), (6, 0, b)]);
        g.push(c4.checked_div(&q3_finite(2, order)?)?);
    }
    for n in 3..=n_max as i64 {
        let u = |k: usize| &g[n as usize - k];
        let rhs = one_minus_q(6 * n - 6, order)
            .checked_mul(u(1))?
            .checked_add(
                &poly(order, &[(3 * n - 4, -1, 1), (3 * n - 2, 1, 1), (6 * n - 6, 0, 1)])
                    .checked_mul(u(2))?,
            )?
            .checked_add(&u(3).shift_q(6 * n - 9))?;
        let lhs_factor = one_minus_q(3 * n, order).checked_mul(&one_minus_q(3 * n - 3, order))?;
        let next = rhs.checked_div(&lhs_factor)?.truncate(order);
        let back = next.checked_mul(&lhs_factor)?;
        if back != rhs.truncate(order) {
            return Err(mismatch("gamma recurrence division", n as usize, &back, &rhs));
        }
        g.push(next);
    }
    Ok(g)
}

/// `delta_0, ..., delta_{n_max}`, the coefficients of
/// `H(z) = F(z) / (-z; q^3)_inf`, from the two-step recurrence.
pub fn delta_seq(cfg: GapConfig, n_max: usize, order: i64) -> Result<Vec<QSeries>> {
    let (a, b, d) = (cfg.alpha_i(), cfg.beta_i(), cfg.defect());
    let mut out = vec![QSeries::int(b, order)];
    if n_max >= 1 {
        out.push(poly(order, &[(0, 0, 1 - b), (1, 1, a)]).checked_div(&one_minus_q(3, order))?);
    }
    for n in 2..=n_max as i64 {
        let num = poly(order, &[(0, 0, 1), (3 * n - 4, -1, 1)])
            .checked_mul(&poly(order, &[(0, 0, 1), (3 * n - 2, 1, 1)]))?;
        let den = one_minus_q(3 * n - 3, order).checked_mul(&one_minus_q(3 * n, order))?;
        let sign = if n % 2 == 0 { 1 } else { -1 };
        let inhom = mono_series(d * sign, 1, 3 * n - 2, order).checked_div(&q3_finite(n, order)?)?;
        let next = num
            .checked_mul(&den.inv()?)?
            .checked_mul(&out[n as usize - 2])?
            .checked_add(&inhom)?;
        out.push(next.truncate(order));
    }
    Ok(out)
}

/// Which of the two base-`q^6` products the closed forms use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Parity {
    /// `(-t^-1 q^2, -t q^4; q^6)`
    Even,
    /// `(-t^-1 q^5, -t q^7; q^6)`
    Odd,
}

impl Parity {
    fn args(self) -> [Monomial; 2] {
        match self {
            Parity::Even => [Monomial::new(-1, -1, 2), Monomial::new(-1, 1, 4)],
            Parity::Odd => [Monomial::new(-1, -1, 5), Monomial::new(-1, 1, 7)],
        }
    }

    /// `q`-exponent of the `l`-th numerator in the inner sum.
    fn ell_exp(self, l: i64) -> i64 {
        match self {
            Parity::Even => 6 * l - 2,
            Parity::Odd => 6 * l + 1,
        }
    }
}

/// Products `P_r` and inner sums `S_r = sum_{l=1}^r q^{e_l} / P_l`, for
/// `r = 0..=r_max`.
struct EllTable {
    prods: Vec<QSeries>,
    sums: Vec<QSeries>,
}

impl EllTable {
    fn new(p: Parity, r_max: usize, order: i64) -> Result<Self> {
        let mut prods = vec![QSeries::one(order)];
        let mut sums = vec![QSeries::zero(order)];
        let [x, y] = p.args();
        for l in 1..=r_max as i64 {
            let prev = prods.last().expect("nonempty");
            let k = 6 * (l - 1);
            let next = prev.mul_one_minus(&x.shift_q(k)).mul_one_minus(&y.shift_q(k));
            let e = p.ell_exp(l);
            let s = if e < order {
                sums.last()
                    .expect("nonempty")
                    .checked_add(&QSeries::from_monomial(&Monomial::q(e), order).checked_div(&next)?)?
            } else {
                sums.last().expect("nonempty").clone()
            };
            prods.push(next);
            sums.push(s);
        }
        Ok(Self { prods, sums })
    }

    /// `beta + t D S_r` for even parity, `1 - beta + alpha t q - t D S_r`
    /// for odd.
    fn bracket(&self, p: Parity, cfg: GapConfig, r: usize, order: i64) -> Result<QSeries> {
        let (a, b, d) = (cfg.alpha_i(), cfg.beta_i(), cfg.defect());
        let t_d_s = self.sums[r].mul_monomial(&Monomial::new(d, 1, 0));
        Ok(match p {
            Parity::Even => QSeries::int(b, order).checked_add(&t_d_s)?,
            Parity::Odd => poly(order, &[(0, 0, 1 - b), (1, 1, a)]).checked_sub(&t_d_s)?,
        })
    }
}

/// `delta_index` from its closed form:
///
/// ```text
/// delta_{2n}   = (-t^-1 q^2, -t q^4; q^6)_n / (q^3;q^3)_{2n}
///                (beta + t D sum_{l=1}^n q^{6l-2} / (-t^-1 q^2, -t q^4; q^6)_l)
/// delta_{2n+1} = (-t^-1 q^5, -t q^7; q^6)_n / (q^3;q^3)_{2n+1}
///                (1 - beta + alpha t q - t D sum_{l=1}^n q^{6l+1} / (-t^-1 q^5, -t q^7; q^6)_l)
/// ```
pub fn delta_closed(cfg: GapConfig, index: usize, order: i64) -> Result<QSeries> {
    let p = if index % 2 == 0 { Parity::Even } else { Parity::Odd };
    let n = index / 2;
    let table = EllTable::new(p, n, order)?;
    let bracket = table.bracket(p, cfg, n, order)?;
    Ok(table.prods[n]
        .checked_div(&q3_finite(index as i64, order)?)?
        .checked_mul(&bracket)?
        .truncate(order))
}

/// `F(z) = sum gamma_n z^n` and `H(z) = sum delta_n z^n` to `z`-degree `d`,
/// after checking `F = (-z; q^3)_inf H` coefficientwise in `z`.
pub fn build_f_h(cfg: GapConfig, d: usize, order: i64) -> Result<(ZPoly, ZPoly)> {
    if d < 3 {
        return Err(QdiffError::DegreeTooSmall(d));
    }
    let f = ZPoly::new(gamma_seq(cfg, d, order)?)?;
    let h = ZPoly::new(delta_seq(cfg, d, order)?)?;
    let product = minus_z_q3_product(d, order)?.mul(&h)?;
    for n in 0..=d {
        if product.coeff(n) != f.coeff(n) {
            return Err(mismatch("F = (-z;q^3)_inf H", n, f.coeff(n), product.coeff(n)));
        }
    }
    Ok((f, h))
}

/// `(-z; q^3)_inf = prod_{j>=0} (1 + z q^{3j})` expanded to `z`-degree `d`.
pub fn minus_z_q3_product(d: usize, order: i64) -> Result<ZPoly> {
    let mut zc = vec![QSeries::zero(order); d + 1];
    zc[0] = QSeries::one(order);
    let mut acc = ZPoly::new(zc)?;
    let mut j = 0;
    while 3 * j < order {
        let shifted = acc.shift_z(1).mul_series(&QSeries::from_monomial(&Monomial::q(3 * j), order))?;
        acc = acc.add(&shifted)?;
        j += 1;
    }
    Ok(acc)
}

/// The two q-difference equations in `z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Equation {
    /// `(1 - z) F(z) = (1 + q^-3 + z^2 t^-1 q^2 + z^2 t q^4) F(z q^3)
    ///   + (1 + z q^3)(-q^-3 + z^2 q^6) F(z q^6) + z^2 D t q^4`
    F,
    /// `(1 - z^2) H(z) = (1 + q^-3 + z^2 t^-1 q^2 + z^2 t q^4) H(z q^3)
    ///   + (-q^-3 + z^2 q^6) H(z q^6) + D t sum_n (-1)^n z^{n+2} q^{3n+4} / (q^3;q^3)_n`
    H,
}

/// A polynomial in `z` whose `z^k` coefficient is `poly(order, terms_k)`.
fn zpoly_of(d: usize, order: i64, coeffs: &[&[(i64, i64, i64)]]) -> Result<ZPoly> {
    let mut zc = vec![QSeries::zero(order); d + 1];
    for (k, terms) in coeffs.iter().enumerate().take(d + 1) {
        zc[k] = poly(order, terms);
    }
    Ok(ZPoly::new(zc)?)
}

/// Left side minus right side of `which`, multiplied through by `q^3`, for
/// the supplied `F` or `H`. Coefficient `z^k` depends only on the input's
/// coefficients of degree at most `k`.
pub fn qdiff_residual_of(which: Equation, cfg: GapConfig, p: &ZPoly) -> Result<ZPoly> {
    let (d, order) = (p.degree(), p.order());
    let def = cfg.defect();
    let shift3 = zpoly_of(d, order, &[&[(0, 0, 1), (3, 0, 1)], &[], &[(5, -1, 1), (7, 1, 1)]])?;
    let (lhs_factor, shift6, inhom) = match which {
        Equation::F => (
            zpoly_of(d, order, &[&[(3, 0, 1)], &[(3, 0, -1)]])?,
            zpoly_of(d, order, &[&[(0, 0, -1)], &[(3, 0, -1)], &[(9, 0, 1)], &[(12, 0, 1)]])?,
            zpoly_of(d, order, &[&[], &[], &[(7, 1, def)]])?,
        ),
        Equation::H => {
            let mut zc = vec![QSeries::zero(order); d + 1];
            for n in 0..=(d as i64 - 2) {
                let sign = if n % 2 == 0 { 1 } else { -1 };
                zc[n as usize + 2] = mono_series(sign * def, 1, 3 * n + 7, order)
                    .checked_div(&q3_finite(n, order)?)?;
            }
            (
                zpoly_of(d, order, &[&[(3, 0, 1)], &[], &[(3, 0, -1)]])?,
                zpoly_of(d, order, &[&[(0, 0, -1)], &[], &[(9, 0, 1)]])?,
                ZPoly::new(zc)?,
            )
        }
    };
    let lhs = lhs_factor.mul(p)?;
    let rhs = shift3
        .mul(&p.scale_z(3)?)?
        .add(&shift6.mul(&p.scale_z(6)?)?)?
        .add(&inhom)?;
    Ok(lhs.sub(&rhs)?)
}

/// The residual of `which` for the configuration's own `F` or `H`.
pub fn qdiff_residual(which: Equation, cfg: GapConfig, d: usize, order: i64) -> Result<ZPoly> {
    let (f, h) = build_f_h(cfg, d, order)?;
    qdiff_residual_of(which, cfg, if which == Equation::F { &f } else { &h })
}

/// The lowest `z`-degree in `0..=max_degree` with a nonzero residual, with
/// its first nonzero coefficient.
pub fn residual_defect(r: &ZPoly, max_degree: usize) -> Option<(usize, Discrepancy)> {
    (0..=max_degree.min(r.degree())).find_map(|k| {
        let c = r.coeff(k);
        c.first_discrepancy(&QSeries::zero(c.order())).map(|disc| (k, disc))
    })
}

/// `C_{3n-2}` from the finite double-sum evaluation: a sum over `j` of
/// `q^{3j(j-1)/2} [n, j]_{q^3} (q^3;q^3)_{2r} delta_{2r}`-shaped terms for the
/// even part and the odd part, with every Pochhammer and inner sum evaluated
/// directly.
pub fn lemma_eval(cfg: GapConfig, n: usize, order: i64) -> Result<QSeries> {
    let n_i = n as i64;
    let even = EllTable::new(Parity::Even, n / 2, order)?;
    let odd = EllTable::new(Parity::Odd, n / 2, order)?;
    let mut acc = QSeries::zero(order);
    for j in 0..=n_i {
        let lead = 3 * j * (j - 1) / 2;
        if lead >= order {
            continue;
        }
        let (p, table, r) = if (n_i - j) % 2 == 0 {
            (Parity::Even, &even, (n_i - j) / 2)
        } else {
            (Parity::Odd, &odd, (n_i - 1 - j) / 2)
        };
        let r = r as usize;
        let term = qbinomial(n_i, j, 3, order)?
            .shift_q(lead)
            .checked_mul(&table.prods[r])?
            .checked_mul(&table.bracket(p, cfg, r, order)?)?;
        acc = acc.checked_add(&term)?;
    }
    Ok(acc.truncate(order))
}

/// Each side of the limiting evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LimitChain {
    /// Even-index limit straight from the finite formula.
    pub c0_raw: QSeries,
    /// Even-index limit after the Ramanujan and Rogers steps.
    pub c0_final: QSeries,
    /// Odd-index limit straight from the finite formula.
    pub c1_raw: QSeries,
    /// Odd-index limit after the Ramanujan and Rogers steps.
    pub c1_final: QSeries,
    /// The theta-function form of the full generating function.
    pub theorem_rhs: QSeries,
}

fn sign(k: i64) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

fn theta6(c: i64, t: i64, q: i64, order: i64) -> Result<QSeries> {
    Ok(theta_sum(&ThetaSpec::new(Monomial::new(c, t, q), 6), order)?)
}

/// `sum_{l>=1} q^{e_l} / P_l` to `order`.
fn ell_sum_infinite(p: Parity, order: i64) -> Result<QSeries> {
    let args = p.args();
    Ok(sum_over(
        order,
        |l| Monomial::q(p.ell_exp(l + 1)),
        |l, w| Ok(crate::series::pochhammer_multi_finite(&args, 6, l + 1, w)?),
    )?)
}

/// `sum_{k>=0} (-1)^k t^{-2k} q^{3k^2+k}`.
fn alt_sum_c0(order: i64) -> QSeries {
    let mut s = QSeries::zero(order);
    for k in (0..).take_while(|k| 3 * k * k + k < order) {
        s.add_term(3 * k * k + k, -2 * k, &BigInt::from(sign(k)));
    }
    s
}

/// `sum_{k>=0} (-1)^k t^{2k+2} q^{3k^2+5k+2}`.
fn alt_sum_c1(order: i64) -> QSeries {
    let mut s = QSeries::zero(order);
    for k in (0..).take_while(|k| 3 * k * k + 5 * k + 2 < order) {
        s.add_term(3 * k * k + 5 * k + 2, 2 * k + 2, &BigInt::from(sign(k)));
    }
    s
}

/// `sum_{k>=0} (t^{3k+1} q^{(3k+1)^2} - t^{3k+3} q^{(3k+3)^2})`.
fn theta2_tail(order: i64) -> QSeries {
    let mut s = QSeries::zero(order);
    for k in (0..).take_while(|k| (3 * k + 1) * (3 * k + 1) < order) {
        s.add_term((3 * k + 1) * (3 * k + 1), 3 * k + 1, &BigInt::from(1));
        if (3 * k + 3) * (3 * k + 3) < order {
            s.add_term((3 * k + 3) * (3 * k + 3), 3 * k + 3, &BigInt::from(-1));
        }
    }
    s
}

/// The limits of the two halves of the finite evaluation, before and after
/// simplification, and the theta-function right side they add up to.
pub fn limit_chain(cfg: GapConfig, order: i64) -> Result<LimitChain> {
    if order < 4 {
        return Err(QdiffError::OrderTooSmall { min: 4, got: order });
    }
    let (a, b, d) = (cfg.alpha_i(), cfg.beta_i(), cfg.defect());
    let m3 = minus_q3_pochhammer(order)?;
    let theta1 = false_theta(FalseTheta::One, FalseThetaForm::Split, order);
    let theta2 = false_theta(FalseTheta::Two, FalseThetaForm::Split, order);
    let int = |c: i64| QSeries::int(c, order);
    let td = Monomial::new(d, 1, 0);

    let p0 = pochhammer_multi_infinite(&Parity::Even.args(), 6, order)?;
    let s0 = ell_sum_infinite(Parity::Even, order)?;
    let c0_raw = p0
        .checked_mul(&m3)?
        .checked_mul(&int(b).checked_add(&s0.mul_monomial(&td))?)?;
    let c0_final = m3.checked_mul(
        &alt_sum_c0(order)
            .scale(&BigInt::from(-d))
            .checked_add(&p0.checked_mul(&int(b).checked_add(&theta1.scale(&BigInt::from(d)))?)?)?,
    )?;

    let p1 = pochhammer_multi_infinite(&Parity::Odd.args(), 6, order)?;
    let s1 = ell_sum_infinite(Parity::Odd, order)?;
    let c1_raw = p1.checked_mul(&m3)?.checked_mul(
        &poly(order, &[(0, 0, 1 - b), (1, 1, a)]).checked_sub(&s1.mul_monomial(&td))?,
    )?;
    let p1_folded =
        pochhammer_multi_infinite(&[Monomial::new(-1, 1, 1), Monomial::new(-1, -1, 5)], 6, order)?;
    let c1_final = m3.checked_mul(
        &alt_sum_c1(order).scale(&BigInt::from(d)).checked_add(
            &p1_folded.checked_mul(&int(1 - b).checked_sub(&theta2_tail(order).scale(&BigInt::from(d)))?)?,
        )?,
    )?;

    let q3 = q3_pochhammer(order)?;
    let theorem_rhs = m3
        .checked_mul(&theta6(-1, 2, 2, order)?)?
        .scale(&BigInt::from(-d))
        .checked_add(
            &theta6(1, 1, 4, order)?
                .checked_div(&q3)?
                .checked_mul(&int(b).checked_add(&theta1.scale(&BigInt::from(d)))?)?,
        )?
        .checked_add(
            &theta6(1, 1, 1, order)?
                .checked_div(&q3)?
                .checked_mul(&int(a).checked_add(&theta2.scale(&BigInt::from(d)))?)?,
        )?;

    let t = |s: QSeries| s.truncate(order);
    Ok(LimitChain {
        c0_raw: t(c0_raw),
        c0_final: t(c0_final),
        c1_raw: t(c1_raw),
        c1_final: t(c1_final),
        theorem_rhs: t(theorem_rhs),
    })
}

/// The successive lines of the even-index simplification, each of which
/// should equal the first:
///
/// ```text
/// sum_{l>=1} q^{6l-2} / (-t^-1 q^2, -t q^4; q^6)_l
///   = q^4 / ((1 + t^-1 q^2)(1 + t q^4)) sum_{l>=0} q^{6l} / (-t^-1 q^8, -t q^10; q^6)_l
///   = q^4 / ((1 + t^-1 q^2)(1 + t q^4)) [ (1 + t^-1 q^-4) sum_k (-1)^k q^{3k^2+k} t^{-2k} / (-t^-1 q^8; q^6)_k
///       - t^-1 q^-4 sum_k (-1)^k q^{3k^2+k} t^{-2k} / (-t^-1 q^8, -t q^10; q^6)_inf ]
///   = t^-1 sum_k (-1)^k q^{3k^2+k} t^{-2k} / (-t^-1 q^2; q^6)_{k+1}
///       - t^-1 sum_k (-1)^k q^{3k^2+k} t^{-2k} / (-t^-1 q^2, -t q^4; q^6)_inf
/// ```
pub fn c0_ramanujan_lines(order: i64) -> Result<Vec<QSeries>> {
    let l1 = ell_sum_infinite(Parity::Even, order)?;
    let prefactor = |w: i64| {
        QSeries::from_monomial(&Monomial::q(4), w)
            .checked_div(&poly(w, &[(0, 0, 1), (2, -1, 1)]))?
            .checked_div(&poly(w, &[(0, 0, 1), (4, 1, 1)]))
    };
    let shifted_args = [Monomial::new(-1, -1, 8), Monomial::new(-1, 1, 10)];
    let alt = |k: i64| Monomial::new(sign(k), -2 * k, 3 * k * k + k);

    let l2 = with_headroom(order, |w| {
        let s = sum_over(w, |l| Monomial::q(6 * l), |l, w2| {
            crate::series::pochhammer_multi_finite(&shifted_args, 6, l, w2)
        })?;
        prefactor(w)?.checked_mul(&s)
    })?;

    let l3 = with_headroom(order, |w| {
        let first = sum_over(w, alt, |k, w2| pochhammer_finite(&shifted_args[0], 6, k, w2))?;
        let bare = sum_over(w, alt, |_, w2| Ok(QSeries::one(w2)))?;
        let inf = pochhammer_multi_infinite(&shifted_args, 6, w)?;
        let one_plus = poly(w, &[(0, 0, 1), (-4, -1, 1)]);
        let bracket = one_plus
            .checked_mul(&first)?
            .checked_sub(&bare.checked_div(&inf)?.mul_monomial(&Monomial::tq(-1, -4)))?;
        prefactor(w)?.checked_mul(&bracket)
    })?;

    let l4 = with_headroom(order, |w| {
        let first = sum_over(w, alt, |k, w2| pochhammer_finite(&Parity::Even.args()[0], 6, k + 1, w2))?;
        let bare = sum_over(w, alt, |_, w2| Ok(QSeries::one(w2)))?;
        let inf = pochhammer_multi_infinite(&Parity::Even.args(), 6, w)?;
        Ok(first
            .checked_sub(&bare.checked_div(&inf)?)?
            .mul_monomial(&Monomial::tq(-1, 0)))
    })?;
    Ok(vec![l1, l2, l3, l4])
}

/// The successive lines of the Rogers step for the even index, ending in
/// the split form of the first false theta function:
///
/// ```text
/// sum_{k>=0} (-1)^k q^{3k^2+k} t^{-2k} / (-t^-1 q^2; q^6)_{k+1}
///   = -sum_{k>=1} (-1)^k q^{3k^2-5k+2} t^{-2k+2} / (-t^-1 q^2; q^6)_k
///   = -t^2 q^2 (-1 + sum_{k>=0} t^{-3k} q^{9k^2-9k} (1 - t^-2 q^{12k-2}))
///   = sum_{k>=0} (t^{-3k} q^{3k(3k+1)} - t^{-(3k+1)} q^{(3k+1)(3k+2)})
/// ```
pub fn c0_rogers_lines(order: i64) -> Result<Vec<QSeries>> {
    let x = Parity::Even.args()[0].clone();
    let r1 = sum_over(
        order,
        |k| Monomial::new(sign(k), -2 * k, 3 * k * k + k),
        |k, w| pochhammer_finite(&x, 6, k + 1, w),
    )?;
    let r2 = sum_over(
        order,
        |k| {
            let k = k + 1;
            Monomial::new(-sign(k), -2 * k + 2, 3 * k * k - 5 * k + 2)
        },
        |k, w| pochhammer_finite(&x, 6, k + 1, w),
    )?;
    let r3 = with_headroom(order, |w| {
        let mut inner = QSeries::zero_window(-2, w);
        inner.add_term(0, 0, &BigInt::from(-1));
        for k in (0..).take_while(|k| 9 * k * k - 9 * k < w || 9 * k * k + 3 * k - 2 < w) {
            for (q, t, c) in [(9 * k * k - 9 * k, -3 * k, 1), (9 * k * k + 3 * k - 2, -3 * k - 2, -1)] {
                if q < w {
                    inner.add_term(q, t, &BigInt::from(c));
                }
            }
        }
        Ok(inner.mul_monomial(&Monomial::new(-1, 2, 2)))
    })?;
    let r4 = false_theta(FalseTheta::One, FalseThetaForm::Split, order);
    Ok(vec![r1, r2, r3, r4])
}

/// The successive lines of the odd-index simplification:
///
/// ```text
/// sum_{l>=1} q^{6l+1} / (-t^-1 q^5, -t q^7; q^6)_l
///   = q (-1 + sum_{l>=0} q^{6l} / (-t^-1 q^5, -t q^7; q^6)_l)
///   = -q + q (1 + t q) sum_k (-1)^k q^{3k^2+5k} t^{2k} / (-t q^7; q^6)_k
///       - t q^2 sum_k (-1)^k q^{3k^2+5k} t^{2k} / (-t^-1 q^5, -t q^7; q^6)_inf
/// ```
pub fn c1_ramanujan_lines(order: i64) -> Result<Vec<QSeries>> {
    let args = Parity::Odd.args();
    let l1 = ell_sum_infinite(Parity::Odd, order)?;
    let l2 = sum_over(order, |l| Monomial::q(6 * l), |l, w| {
        crate::series::pochhammer_multi_finite(&args, 6, l, w)
    })?
    .checked_sub(&QSeries::one(order))?
    .shift_q(1)
    .truncate(order);
    let alt = |k: i64| Monomial::new(sign(k), 2 * k, 3 * k * k + 5 * k);
    let first = sum_over(order, alt, |k, w| pochhammer_finite(&args[1], 6, k, w))?;
    let bare = sum_over(order, alt, |_, w| Ok(QSeries::one(w)))?;
    let inf = pochhammer_multi_infinite(&args, 6, order)?;
    let l3 = mono_series(-1, 0, 1, order)
        .checked_add(&first.checked_mul(&poly(order, &[(1, 0, 1), (2, 1, 1)]))?)?
        .checked_sub(&bare.checked_div(&inf)?.mul_monomial(&Monomial::tq(1, 2)))?
        .truncate(order);
    Ok(vec![l1, l2, l3])
}

/// Both sides of the Rogers step for the odd index:
///
/// ```text
/// sum_{k>=0} (-1)^k q^{3k^2+5k} t^{2k} / (-t q^7; q^6)_k
///   = sum_{k>=0} t^{3k} q^{9k^2+6k} (1 - t^2 q^{12k+8})
/// ```
pub fn c1_rogers_sides(order: i64) -> Result<(QSeries, QSeries)> {
    let y = Monomial::new(-1, 1, 7);
    let lhs = sum_over(
        order,
        |k| Monomial::new(sign(k), 2 * k, 3 * k * k + 5 * k),
        |k, w| pochhammer_finite(&y, 6, k, w),
    )?;
    let mut rhs = QSeries::zero(order);
    for k in (0..).take_while(|k| 9 * k * k + 6 * k < order) {
        rhs.add_term(9 * k * k + 6 * k, 3 * k, &BigInt::from(1));
        if 9 * k * k + 18 * k + 8 < order {
            rhs.add_term(9 * k * k + 18 * k + 8, 3 * k + 2, &BigInt::from(-1));
        }
    }
    Ok((lhs, rhs))
}

/// Both sides of the constant rewrite used to fold the odd-index inner sum
/// into the second false theta function:
/// `1 - beta - D (1 - Theta_2)` and `alpha + D Theta_2`.
pub fn theta2_fold_sides(cfg: GapConfig, order: i64) -> Result<(QSeries, QSeries)> {
    let (a, b, d) = (cfg.alpha_i(), cfg.beta_i(), cfg.defect());
    let theta2 = false_theta(FalseTheta::Two, FalseThetaForm::Split, order);
    let lhs = QSeries::int(1 - b, order).checked_sub(&theta2_tail(order).scale(&BigInt::from(d)))?;
    let rhs = QSeries::int(a, order).checked_add(&theta2.scale(&BigInt::from(d)))?;
    Ok((lhs, rhs))
}

/// The two lines of the unrefined-to-refined theorem, as
/// `[(C1, lhs_rhs), (C3, lhs_rhs)]`: with `C2`, `C2*` the theta quotients,
///
/// ```text
/// C1 = (-q^3;q^3)_inf theta(-t^2 q^2; q^6) + C2 (1 - Theta_1) + C2* (1 - Theta_2)
/// C3 = -(-q^3;q^3)_inf theta(-t^2 q^2; q^6) + C2 Theta_1 + C2* Theta_2
/// ```
///
/// where the left sides come from brute-force enumeration.
pub fn theorem_main_sides(order: i64) -> Result<[(QSeries, QSeries); 2]> {
    let c2 = refined_c2_product(order)?;
    let c2s = refined_c2star_product(order)?;
    let theta1 = false_theta(FalseTheta::One, FalseThetaForm::Character, order);
    let theta2 = false_theta(FalseTheta::Two, FalseThetaForm::Character, order);
    let lead = minus_q3_pochhammer(order)?.checked_mul(&theta6(-1, 2, 2, order)?)?;
    let one = QSeries::one(order);
    let c1_rhs = lead
        .checked_add(&c2.checked_mul(&one.checked_sub(&theta1)?)?)?
        .checked_add(&c2s.checked_mul(&one.checked_sub(&theta2)?)?)?;
    let c3_rhs = c2
        .checked_mul(&theta1)?
        .checked_add(&c2s.checked_mul(&theta2)?)?
        .checked_sub(&lead)?;
    Ok([
        (brute_force_series(GapConfig::C1, None, order), c1_rhs.truncate(order)),
        (brute_force_series(GapConfig::C3, None, order), c3_rhs.truncate(order)),
    ])
}
