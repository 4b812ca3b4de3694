//! Integer partitions, the level 3 gap condition, and generating functions
//! built by direct enumeration.
//!
//! This module is the brute-force side of every identity check, so it avoids
//! any q-series reasoning: it lists partitions and counts.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::series::QSeries;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts must be positive and weakly decreasing, got {0:?}")]
    NotAPartition(Vec<u32>),
}

/// A weakly decreasing list of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Self { parts })
        } else {
            Err(PartitionError::NotAPartition(parts))
        }
    }

    /// Sorts the parts into decreasing order first.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Result<Self, PartitionError> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// `|λ|`.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest(&self) -> Option<u32> {
        self.parts.first().copied()
    }

    pub fn smallest(&self) -> Option<u32> {
        self.parts.last().copied()
    }

    /// Number of parts congruent to `j` modulo 3.
    pub fn nu(&self, j: u32) -> i64 {
        self.parts.iter().filter(|&&p| p % 3 == j % 3).count() as i64
    }

    /// 1 if `j` is a part, else 0.
    pub fn psi(&self, j: u32) -> u8 {
        u8::from(self.parts.contains(&j))
    }

    /// The refinement statistic `nu_1 - nu_2`.
    pub fn t_statistic(&self) -> i64 {
        self.nu(1) - self.nu(2)
    }

    pub fn has_repeated_part(&self) -> bool {
        self.parts.windows(2).any(|w| w[0] == w[1])
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.parts)
    }
}

/// Adjacent parts differ by at least 2, and by exactly 2 or 3 only when
/// their sum is a multiple of 3.
pub fn is_level3_gap(p: &Partition) -> bool {
    p.parts.windows(2).all(|w| {
        let (a, b) = (w[0], w[1]);
        if a < b + 2 {
            return false;
        }
        let d = a - b;
        !(d == 2 || d == 3) || (a + b) % 3 == 0
    })
}

/// The same condition phrased through part indicators: no repeated part, and
/// for every `j >= 1`
///
/// ```text
/// psi(3j+2) + psi(3j) + psi(3j-1) <= 1
/// psi(3j+1) + psi(3j) + psi(3j-2) <= 1
/// psi(3j-1) + psi(3j-2)           <= 1
/// ```
pub fn is_level3_multiplicity(p: &Partition) -> bool {
    if p.has_repeated_part() {
        return false;
    }
    let max = p.largest().unwrap_or(0);
    let mut present = vec![0u8; max as usize + 3];
    for &part in &p.parts {
        present[part as usize] = 1;
    }
    let psi = |k: u32| present.get(k as usize).copied().unwrap_or(0);
    (1..=max / 3 + 1).all(|j| {
        psi(3 * j + 2) + psi(3 * j) + psi(3 * j - 1) <= 1
            && psi(3 * j + 1) + psi(3 * j) + psi(3 * j - 2) <= 1
            && psi(3 * j - 1) + psi(3 * j - 2) <= 1
    })
}

/// Every partition of `n` (with largest part at most `max_part`, if given),
/// each exactly once, in reverse lexicographic order.
pub fn enumerate_partitions(n: u32, max_part: Option<u32>) -> Partitions {
    Partitions::new(n, max_part)
}

/// Iterator behind [`enumerate_partitions`].
pub struct Partitions {
    current: Option<Vec<u32>>,
}

impl Partitions {
    fn new(n: u32, max_part: Option<u32>) -> Self {
        let m = max_part.unwrap_or(n).min(n);
        if n > 0 && m == 0 {
            return Self { current: None };
        }
        let mut first = Vec::new();
        if n > 0 {
            first = vec![m; (n / m) as usize];
            if n % m > 0 {
                first.push(n % m);
            }
        }
        Self { current: Some(first) }
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.current.take()?;
        let out = Partition { parts: cur.clone() };
        let mut next = cur;
        let ones = next.iter().rev().take_while(|&&p| p == 1).count();
        next.truncate(next.len() - ones);
        if let Some(last) = next.pop() {
            let v = last - 1;
            next.push(v);
            let mut rem = ones as u32 + 1;
            while rem >= v {
                next.push(v);
                rem -= v;
            }
            if rem > 0 {
                next.push(rem);
            }
            self.current = Some(next);
        }
        Some(out)
    }
}

/// The indicator parameters `(alpha, beta)`: whether part 1 (resp. part 2)
/// is permitted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GapConfig {
    pub alpha: bool,
    pub beta: bool,
}

impl GapConfig {
    /// Parts at least 1: `(1, 1)`.
    pub const C1: GapConfig = GapConfig { alpha: true, beta: true };
    /// Parts at least 2: `(0, 1)`.
    pub const C2: GapConfig = GapConfig { alpha: false, beta: true };
    /// No part equal to 2: `(1, 0)`.
    pub const C2_STAR: GapConfig = GapConfig { alpha: true, beta: false };
    /// Parts at least 3: `(0, 0)`.
    pub const C3: GapConfig = GapConfig { alpha: false, beta: false };

    pub const ALL: [GapConfig; 4] = [Self::C1, Self::C2, Self::C2_STAR, Self::C3];

    pub fn new(alpha: bool, beta: bool) -> Self {
        Self { alpha, beta }
    }

    pub fn alpha_i(self) -> i64 {
        i64::from(self.alpha)
    }

    pub fn beta_i(self) -> i64 {
        i64::from(self.beta)
    }

    /// `1 - alpha - beta`, the coefficient of the false theta terms.
    pub fn defect(self) -> i64 {
        1 - self.alpha_i() - self.beta_i()
    }

    /// `(1 - (1 - alpha) psi_1) (1 - (1 - beta) psi_2)`.
    pub fn weight(self, p: &Partition) -> i64 {
        (1 - (1 - self.alpha_i()) * i64::from(p.psi(1)))
            * (1 - (1 - self.beta_i()) * i64::from(p.psi(2)))
    }

    pub fn label(self) -> &'static str {
        match (self.alpha, self.beta) {
            (true, true) => "C1",
            (false, true) => "C2",
            (true, false) => "C2star",
            (false, false) => "C3",
        }
    }
}

impl fmt::Display for GapConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.alpha_i(), self.beta_i())
    }
}

/// `c_m(n)`: level 3 gap partitions of `n` with every part at least `m`.
pub fn count_cm(m: u32, n: u32) -> u64 {
    enumerate_partitions(n, None)
        .filter(|p| p.smallest().map_or(true, |s| s >= m) && is_level3_gap(p))
        .count() as u64
}

/// `c*_2(n)`: level 3 gap partitions of `n` without 2 as a part.
pub fn count_c2star(n: u32) -> u64 {
    enumerate_partitions(n, None)
        .filter(|p| p.psi(2) == 0 && is_level3_gap(p))
        .count() as u64
}

/// `d_j(n)`: partitions of `n` into distinct parts, none congruent to `±j`
/// modulo 6.
///
/// # Panics
/// Unless `j` is 1 or 2.
pub fn count_dj(j: u32, n: u32) -> u64 {
    assert!(j == 1 || j == 2, "d_j is defined for j in {{1, 2}}");
    let allowed: Vec<u32> = (1..=n)
        .filter(|p| {
            let r = p % 6;
            r != j && r != 6 - j
        })
        .collect();
    count_distinct(&allowed, n)
}

/// Counts subsets of `allowed` (ascending) summing to `n` by walking them
/// explicitly.
fn count_distinct(allowed: &[u32], n: u32) -> u64 {
    fn go(allowed: &[u32], start: usize, remaining: u32) -> u64 {
        if remaining == 0 {
            return 1;
        }
        let mut total = 0;
        for i in start..allowed.len() {
            let p = allowed[i];
            if p > remaining {
                break;
            }
            total += go(allowed, i + 1, remaining - p);
        }
        total
    }
    go(allowed, 0, n)
}

/// `sum_{n < order} c_m(n) q^n`.
pub fn count_series(m: u32, order: i64) -> QSeries {
    QSeries::from_terms(
        0,
        order,
        (0..order.max(0) as u32).map(|n| (n as i64, 0, BigInt::from(count_cm(m, n)))),
    )
}

/// The truncated generating function
/// `sum (1 - (1-alpha) psi_1)(1 - (1-beta) psi_2) t^{nu_1 - nu_2} q^{|λ|}`
/// over level 3 gap partitions with largest part at most `max_part`
/// (unbounded when `None`) and size below `order`.
pub fn brute_force_series(cfg: GapConfig, max_part: Option<u32>, order: i64) -> QSeries {
    assert!(order >= 1, "order must be positive");
    let mut out = QSeries::zero(order);
    for n in 0..order as u32 {
        for p in enumerate_partitions(n, max_part).filter(is_level3_gap) {
            let w = cfg.weight(&p);
            if w != 0 {
                out.add_term(n as i64, p.t_statistic(), &BigInt::from(w));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::qs;

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn rejects_non_partitions() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![3, 0]).is_err());
        assert_eq!(Partition::from_unsorted(vec![1, 3, 2]).unwrap(), part(&[3, 2, 1]));
    }

    #[test]
    fn statistics() {
        let p = part(&[8, 7, 4, 2, 1]);
        assert_eq!(p.size(), 22);
        assert_eq!(p.nu(1), 3);
        assert_eq!(p.nu(2), 2);
        assert_eq!(p.t_statistic(), 1);
        assert_eq!(p.psi(2), 1);
        assert_eq!(p.psi(3), 0);
    }

    #[test]
    fn gap_condition_examples() {
        assert!(is_level3_gap(&Partition::empty()));
        assert!(is_level3_gap(&part(&[4, 2])));
        assert!(!is_level3_gap(&part(&[8, 5])));
        assert!(!is_level3_gap(&part(&[3, 3])));
        assert!(!is_level3_gap(&part(&[5, 4])));
        assert!(is_level3_gap(&part(&[7, 5])));
        assert!(is_level3_gap(&part(&[9, 5])));
    }

    #[test]
    fn multiplicity_condition_examples() {
        assert!(is_level3_multiplicity(&Partition::empty()));
        assert!(is_level3_multiplicity(&part(&[4, 2])));
        assert!(!is_level3_multiplicity(&part(&[3, 1])));
        assert!(!is_level3_multiplicity(&part(&[5, 5])));
    }

    #[test]
    fn small_enumerations() {
        let zero: Vec<_> = enumerate_partitions(0, None).collect();
        assert_eq!(zero, vec![Partition::empty()]);
        assert_eq!(enumerate_partitions(4, None).count(), 5);
        let capped: Vec<_> = enumerate_partitions(5, Some(2)).collect();
        assert_eq!(capped, vec![part(&[2, 2, 1]), part(&[2, 1, 1, 1]), part(&[1, 1, 1, 1, 1])]);
        assert_eq!(enumerate_partitions(3, Some(0)).count(), 0);
    }

    #[test]
    fn small_counts() {
        assert_eq!(count_cm(2, 0), 1);
        assert_eq!(count_cm(2, 5), 1);
        assert_eq!(count_dj(1, 0), 1);
        assert_eq!(count_dj(1, 5), 1);
    }

    #[test]
    fn finite_generating_functions() {
        assert_eq!(
            brute_force_series(GapConfig::C1, Some(1), 10),
            qs(10, &[(0, 0, 1), (1, 1, 1)])
        );
        assert_eq!(
            brute_force_series(GapConfig::C1, Some(4), 20),
            qs(20, &[(0, 0, 1), (1, 1, 1), (2, -1, 1), (3, 0, 1), (4, 1, 1), (6, 0, 1)])
        );
        assert_eq!(
            brute_force_series(GapConfig::C2_STAR, Some(4), 20),
            qs(20, &[(0, 0, 1), (1, 1, 1), (3, 0, 1), (4, 1, 1)])
        );
    }

    #[test]
    fn weights() {
        let p = part(&[5, 2]);
        assert_eq!(GapConfig::C1.weight(&p), 1);
        assert_eq!(GapConfig::C2.weight(&p), 1);
        assert_eq!(GapConfig::C2_STAR.weight(&p), 0);
        assert_eq!(GapConfig::C3.weight(&p), 0);
        assert_eq!(GapConfig::C2.defect(), 0);
        assert_eq!(GapConfig::C3.defect(), 1);
        assert_eq!(GapConfig::C1.defect(), -1);
    }
}
