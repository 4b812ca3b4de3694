//! Named series for `qcap expand`.

use qcap::partition::{brute_force_series, count_c2star, count_series, GapConfig};
use qcap::qdiff;
use qcap::series::{Monomial, QSeries};
use qcap::theta::{false_theta, theta_sum, FalseTheta, FalseThetaForm, ThetaSpec};

pub struct Entry {
    pub pattern: &'static str,
    pub description: &'static str,
}

pub const ENTRIES: &[Entry] = &[
    Entry { pattern: "C{M}-finite", description: "C_M(t;q) from the recurrence (M >= -2, M != -1); uses --alpha/--beta" },
    Entry { pattern: "C1, C2, C3, C2star", description: "unrefined generating functions sum c(n) q^n" },
    Entry { pattern: "C1-refined, C2-refined, C3-refined, C2star-refined", description: "refined generating functions in t and q, by enumeration" },
    Entry { pattern: "Theta1, Theta2", description: "the two false theta functions" },
    Entry { pattern: "theta-tq4, theta-tq, theta-t2q2", description: "theta(tq^4;q^6), theta(tq;q^6), theta(-t^2q^2;q^6)" },
    Entry { pattern: "gamma{n}, delta{n}", description: "renormalized sequences; use --alpha/--beta" },
    Entry { pattern: "F{n}, H{n}", description: "z^n coefficients of F(z) and H(z); use --alpha/--beta" },
    Entry { pattern: "limit-even, limit-odd", description: "the two limiting halves, in final form; use --alpha/--beta" },
    Entry { pattern: "theorem-rhs", description: "theta and false theta form of the generating function; use --alpha/--beta" },
];

#[derive(Debug)]
pub enum CatalogError {
    Unknown(String),
    Compute(String),
}

fn parse_index<T: std::str::FromStr>(s: &str, prefix: &str, suffix: &str) -> Option<T> {
    s.strip_prefix(prefix)?.strip_suffix(suffix)?.parse().ok()
}

/// Evaluates a named series to `order`.
pub fn expand(name: &str, cfg: GapConfig, order: i64) -> Result<QSeries, CatalogError> {
    let compute = |e: &dyn std::fmt::Display| CatalogError::Compute(e.to_string());
    let theta = |z: Monomial| theta_sum(&ThetaSpec::new(z, 6), order).map_err(|e| compute(&e));
    let named = match name {
        "C1" => Some(count_series(1, order)),
        "C2" => Some(count_series(2, order)),
        "C3" => Some(count_series(3, order)),
        "C2star" => Some(QSeries::from_terms(
            0,
            order,
            (0..order as u32).map(|n| (n as i64, 0, count_c2star(n).into())),
        )),
        "C1-refined" => Some(brute_force_series(GapConfig::C1, None, order)),
        "C2-refined" => Some(brute_force_series(GapConfig::C2, None, order)),
        "C3-refined" => Some(brute_force_series(GapConfig::C3, None, order)),
        "C2star-refined" => Some(brute_force_series(GapConfig::C2_STAR, None, order)),
        "Theta1" => Some(false_theta(FalseTheta::One, FalseThetaForm::Character, order)),
        "Theta2" => Some(false_theta(FalseTheta::Two, FalseThetaForm::Character, order)),
        "theta-tq4" => Some(theta(Monomial::tq(1, 4))?),
        "theta-tq" => Some(theta(Monomial::tq(1, 1))?),
        "theta-t2q2" => Some(theta(Monomial::new(-1, 2, 2))?),
        "limit-even" | "limit-odd" | "theorem-rhs" => {
            let ch = qdiff::limit_chain(cfg, order).map_err(|e| compute(&e))?;
            Some(match name {
                "limit-even" => ch.c0_final,
                "limit-odd" => ch.c1_final,
                _ => ch.theorem_rhs,
            })
        }
        _ => None,
    };
    if let Some(s) = named {
        return Ok(s);
    }
    if let Some(m) = parse_index::<i64>(name, "C", "-finite") {
        return qdiff::finite_c(cfg, m, order).map_err(|e| compute(&e));
    }
    let pick = |v: Result<Vec<QSeries>, qdiff::QdiffError>| v.map(|mut v| v.pop().expect("nonempty")).map_err(|e| compute(&e));
    if let Some(n) = parse_index::<usize>(name, "gamma", "") {
        return pick(qdiff::gamma_seq(cfg, n, order));
    }
    if let Some(n) = parse_index::<usize>(name, "delta", "") {
        return pick(qdiff::delta_seq(cfg, n, order));
    }
    for (prefix, f) in [("F", true), ("H", false)] {
        if let Some(n) = parse_index::<usize>(name, prefix, "") {
            let (fz, hz) = qdiff::build_f_h(cfg, n.max(3), order).map_err(|e| compute(&e))?;
            return Ok(if f { fz } else { hz }.coeff(n).clone());
        }
    }
    Err(CatalogError::Unknown(name.to_string()))
}
