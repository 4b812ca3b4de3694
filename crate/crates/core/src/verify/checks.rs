use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{CheckFn, CheckInfo, CheckOutcome, Ctx, Params};
use crate::partition::{
    brute_force_series, count_c2star, count_cm, count_dj, enumerate_partitions, is_level3_gap,
    is_level3_multiplicity, GapConfig,
};
use crate::qdiff::{self, Equation};
use crate::series::{pochhammer_finite, Monomial, QSeries};
use crate::theta::{self, FalseTheta, FalseThetaForm, ThetaSpec};

const fn info(
    name: &'static str,
    description: &'static str,
    label: &'static str,
    default_order: i64,
    min_order: i64,
) -> CheckInfo {
    CheckInfo {
        name,
        description,
        label,
        default_order,
        min_order,
    }
}

/// Every registered check, in declaration order.
pub static REGISTRY: &[CheckInfo] = &[
    info("gap-equivalence", "gap and multiplicity formulations accept the same partitions of each n < order", "level 3 gap condition, multiplicity form", 41, 1),
    info("capparelli-c2-d1", "c_2(n) = d_1(n) by two independent enumerators", "Capparelli: c_2(n) = d_1(n)", 61, 1),
    info("capparelli-c2star-d2", "c*_2(n) = d_2(n) by two independent enumerators", "Capparelli: c*_2(n) = d_2(n)", 61, 1),
    info("product-c2", "sum c_2(n) q^n = (-q^2,-q^3,-q^4,-q^6;q^6)_inf, also via the t = 1 theta form", "product form of C_2(q)", 60, 1),
    info("product-c2star", "sum c*_2(n) q^n = (-q,-q^3,-q^5,-q^6;q^6)_inf, also via the t = 1 theta form", "product form of C*_2(q)", 60, 1),
    info("refined-c2", "brute-force C_2(t;q) = theta(tq^4;q^6)/(q^3;q^3)_inf", "refined product for C_2(t;q)", 50, 1),
    info("refined-c2star", "brute-force C*_2(t;q) = theta(tq;q^6)/(q^3;q^3)_inf", "refined product for C*_2(t;q)", 50, 1),
    info("jtp", "Jacobi triple product at the three theta arguments and 20 seeded random ones", "theta function, triple product", 200, 1),
    info("euler1", "sum x^n/(q;q)_n = 1/(x;q)_inf for several arguments", "Euler, first identity", 60, 1),
    info("euler2", "sum (-x)^n q^{n(n-1)/2}/(q;q)_n = (x;q)_inf for several arguments", "Euler, second identity", 60, 1),
    info("cauchy-even", "even-index Euler sum = 1/(q;q^2)_inf = (-q;q)_inf, in bases q and q^3", "Cauchy-Euler even sum", 100, 1),
    info("ramanujan-lost", "Ramanujan's two-parameter identity at both limit instantiations and 10 seeded random pairs", "Ramanujan identity", 60, 1),
    info("rogers-false", "Rogers' false theta identity at both limit instantiations", "Rogers false theta identity", 60, 1),
    info("recurrence-cnrec", "three-line recurrence for C_M equals enumeration for M <= 30", "finite recurrences and initial values", 40, 1),
    info("recurrence-combined", "single recurrence for C_{3n+1} holds for n = 2..10", "combined recurrence", 40, 1),
    info("gamma-rec", "gamma_n (q^3;q^3)_n = C_{3n-2} for n <= 12", "gamma recurrence and initial values", 40, 1),
    info("delta-rec-vs-closed", "delta_n from its recurrence equals both closed forms for n <= 16", "delta recurrence and closed forms", 40, 1),
    info("fqdiff-residual", "F(z) = sum gamma_n z^n satisfies its q-difference equation", "q-difference equation for F", 40, 1),
    info("hqdiff-residual", "H(z) = sum delta_n z^n satisfies its q-difference equation and F = (-z;q^3)_inf H", "q-difference equation for H", 40, 1),
    info("lemma-finite", "finite double-sum evaluation equals recurrence and enumeration for n <= 10", "finite evaluation of C_{3n-2}", 40, 1),
    info("limit-c0", "even-index limit: raw form = final form, and each Ramanujan/Rogers step", "even-index limit chain", 50, 4),
    info("limit-c1", "odd-index limit: raw form = final form, each Ramanujan/Rogers step, and the Theta_2 fold", "odd-index limit chain", 50, 4),
    info("theorem-mainab", "brute force = theta/false theta form, all four (alpha, beta); limits add up; finite values stabilize", "main theorem, all four (alpha, beta)", 50, 4),
    info("theorem-main", "C_1 and C_3 in terms of C_2, C*_2 and the false theta functions", "main theorem, unrefined to refined", 50, 1),
    info("false-theta-forms", "character form of Theta_1, Theta_2 equals the split form", "false theta functions", 200, 1),
    info("theta-assembly", "sum_k (-1)^k t^{-2k} q^{3k^2+k} = theta(-t^2 q^2; q^6)", "theta assembly", 100, 1),
    info("reindexing", "sum_{k>=0} (-1)^k t^{2k+2} q^{3k^2+5k+2} = -sum_{k<=-1} (-1)^k t^{-2k} q^{3k^2+k}", "reindexing of the first sums", 100, 1),
];

pub(crate) fn function(name: &str) -> CheckFn {
    match name {
        "gap-equivalence" => gap_equivalence,
        "capparelli-c2-d1" => capparelli_c2_d1,
        "capparelli-c2star-d2" => capparelli_c2star_d2,
        "product-c2" => product_c2,
        "product-c2star" => product_c2star,
        "refined-c2" => refined_c2,
        "refined-c2star" => refined_c2star,
        "jtp" => jtp,
        "euler1" => euler1,
        "euler2" => euler2,
        "cauchy-even" => cauchy_even,
        "ramanujan-lost" => ramanujan,
        "rogers-false" => rogers,
        "recurrence-cnrec" => recurrence_cnrec,
        "recurrence-combined" => recurrence_combined,
        "gamma-rec" => gamma_rec,
        "delta-rec-vs-closed" => delta_rec,
        "fqdiff-residual" => fqdiff,
        "hqdiff-residual" => hqdiff,
        "lemma-finite" => lemma_finite,
        "limit-c0" => limit_c0,
        "limit-c1" => limit_c1,
        "theorem-mainab" => theorem_mainab,
        "theorem-main" => theorem_main,
        "false-theta-forms" => false_theta_forms,
        "theta-assembly" => theta_assembly,
        "reindexing" => reindexing,
        other => unreachable!("no check function for {other}"),
    }
}

fn counts(order: i64, f: impl Fn(u32) -> u64) -> QSeries {
    QSeries::from_terms(0, order, (0..order as u32).map(|n| (n as i64, 0, BigInt::from(f(n)))))
}

fn gap_equivalence(p: &Params, ctx: &mut Ctx) -> CheckOutcome {
    let mut gap = QSeries::zero(p.order);
    let mut mult = QSeries::zero(p.order);
    let mut disagree = QSeries::zero(p.order);
    for n in 0..p.order as u32 {
        for part in enumerate_partitions(n, None) {
            let (a, b) = (is_level3_gap(&part), is_level3_multiplicity(&part));
            let t = part.t_statistic();
            if a {
                gap.add_term(n as i64, t, &BigInt::from(1));
            }
            if b {
                mult.add_term(n as i64, t, &BigInt::from(1));
            }
            if a != b {
                disagree.add_term(n as i64, t, &BigInt::from(1));
            }
        }
    }
    ctx.compare("partitions accepted by exactly one formulation", &disagree, &QSeries::zero(p.order));
    ctx.compare("gap vs multiplicity generating functions", &gap, &mult);
    Ok(())
}

fn capparelli_c2_d1(p: &Params, ctx: &mut Ctx) -> CheckOutcome {
    ctx.compare("c_2 vs d_1", &counts(p.order, |n| count_cm(2, n)), &counts(p.order, |n| count_dj(1, n)));
    Ok(())
}

fn capparelli_c2star_d2(p: &Params, ctx: &mut Ctx) -> CheckOutcome {
    ctx.compare("c*_2 vs d_2", &counts(p.order, count_c2star), &counts(p.order, |n| count_dj(2, n)));
    Ok(())
}

fn product_c2(p: &Params, ctx: &mut Ctx) -> CheckOutcome {
    let c = counts(p.order, |n| count_cm(2, n));
    ctx.compare("counts vs product", &c, &theta::product_c2(p.order)?);
    ctx.compare("counts vs theta form at t = 1", &c, &theta::refined_c2_product(p.order)?.eval_t_one());
    Ok(())
}

fn product_c2star(p: &Params, ctx: &mut Ctx) -> CheckOutcome {
    let c = counts(p.order, count_c2star);
    ctx.compare("counts vs product", &c, &theta::product_c2star(p.order)?);
    ctx.compare("counts vs theta form at t = 1", &c, &theta::refined_c2star_product(p.order)?.eval_t_one());
    Ok(())
}

fn refined_c2(p: &Params, ctx: &mut Ctx) -> CheckOutcome {
    let bf = brute_force_series(GapConfig::C2, None, p.order);
    ctx.compare("enumeration vs theta quotient", &bf, &theta::refined_c2_product(p.order)?);
    Ok(())
}

fn refined_c2star(p: &Params, ctx: &mut Ctx) -> CheckOutcome {
    let bf = brute_force_series(GapConfig::C2_STAR, None, p.order);
    ctx.compare("enumeration vs theta quotient", &bf, &theta::refined_c2star_product(p.order)?);
    Ok(())
}

/// Seeded random unit monomials `c t^a q^b` with `b` in `b_range`.
fn random_monomials(seed: u64, count: usize, b_range: std::ops::RangeInclusive<i64>) -> Vec<Monomial> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let c = if rng.gen_bool(0.5) { 1 } else { -1 };
            Monomial::new(c, rng.gen_range(-2..=2), rng.gen_range(b_range.clone()))
        })
        .collect()
}

fn jtp(p: &Params, ctx: &mut Ctx) -> CheckOutcome {
    let mut specs: Vec<ThetaSpec> = [Monomial::tq(1, 4), Monomial::tq(1, 1), Monomial::new(-1, 2, 2)]
        .into_iter()
        .map(|z| ThetaSpec::new(z, 6))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x7a3);
    for z in random_monomials(0x7a4, 20, 0..=0) {
        let m = rng.gen_range(1..=6);
        let b = rng.gen_range(0..=m);
        specs.push(ThetaSpec::new(Monomial::new(z.coeff, z.t_exp, b), m));
    }
    for s in specs {
        let what = format!("z = {}, modulus {}", s.z, s.modulus);
        ctx.compare(what, &theta::theta_sum(&s, p.order)?, &theta::theta_product(&s, p.order)?);
    }
    Ok(())
}

fn euler_arguments() -> Vec<(Monomial, i64)> {
    vec![
        (Monomial::q(1), 1),
        (Monomial::q(1), 3),
        (Monomial::tq(1, 2), 6),
        (Monomial::new(-1, 1, 3), 3),
        (Monomial::new(2, -1, 1), 2),
    ]
}

fn euler_variant(v: u8, p: &Params, ctx: &mut Ctx) -> CheckOutcome {
    for (x, m) in euler_arguments() {
        let (l, r) = theta::euler_sides(v, &x, m, p.order)?;
        ctx.compare(format!("x = {x}, base q^{m}"), &l, &r);
    }
    Ok(())
}

fn euler1(p: &Params, ctx: &mut Ctx) -> CheckOutcome {
    euler_variant(1, p, ctx)
}

fn euler2(p: &Params, ctx: &mut Ctx) -> CheckOutcome {
    euler_variant(2, p, ctx)
}

fn cauchy_even(p: &Params, ctx: &mut Ctx) -> CheckOutcome {
    for m in [1, 3] {
        let (a, b, c) = theta::cauchy_even_sides(m, p.order)?;
        ctx.compare(format!("sum vs 1/(q;q^2) in base q^{m}"), &a, &b);
        ctx.compare(format!("sum vs (-q;q) in base q^{m}"), &a, &c);
    }
    Ok(())
}

/// The two limit instantiations followed by `count` seeded random pairs.
pub(crate) fn ramanujan_arguments(count: usize) -> Vec<(Monomial, Monomial, i64)> {
    let mut v = vec![
        (Monomial::tq(1, 4), Monomial::tq(-1, 2), 6),
        (Monomial::tq(-1, -1), Monomial::tq(1, 1), 6),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(0x5a1);
    let a = random_monomials(0x5a2, count, -2..=3);
    let b = random_monomials(0x5a3, count, -2..=3);
    for (a, b) in a.into_iter().zip(b) {
        let m = rng.gen_range(3..=6);
        v.push((a, b, m));
    }
    v
}

fn ramanujan(p: &Params, ctx: &mut Ctx) -> CheckOutcome {
    for (a, b, m) in ramanujan_arguments(10) {
        let (l, r) = theta::ramanujan_sides(&a, &b, m, p.order)?;
        ctx.compare(format!("a = {a}, b = {b}, base q^{m}"), &l, &r);
    }
    Ok(())
}

fn rogers(p: &Params, ctx: &mut Ctx) -> CheckOutcome {
    for y in [Monomial::new(-1, -1, -4), Monomial::new(-1, 1, 1)] {
        let (l, r) = theta::rogers_sides(&y, 6, p.order)?;
        ctx.compare(format!("y = {y}, base q^6"), &l, &r);
    }
    Ok(())
}

fn recurrence_cnrec(p: &Params, ctx: &mut Ctx) -> CheckOutcome {
    for cfg in p.configs() {
        for m in 0..=30 {
            let c = qdiff::finite_c(cfg, m, p.order)?;
            let bf = brute_force_series(cfg, Some(m as u32), p.order);
            ctx.compare(format!("{cfg} M = {m}"), &c, &bf);
        }
    }
    Ok(())
}

fn recurrence_combined(p: &Params, ctx: &mut Ctx) -> CheckOutcome {
    for cfg in p.configs() {
        for n in 2..=10 {
            let c = |m| qdiff::finite_c(cfg, m, p.order);
            let rhs = qdiff::combined_recurrence_rhs(n, &c(3 * n - 2)?, &c(3 * n - 5)?, &c(3 * n - 8)?)?;
            ctx.compare(format!("{cfg} n = {n}"), &c(3 * n + 1)?, &rhs);
        }
    }
    Ok(())
}

fn gamma_rec(p: &Params, ctx: &mut Ctx) -> CheckOutcome {
    for cfg in p.configs() {
        let g = qdiff::gamma_seq(cfg, 12, p.order)?;
        for (n, gn) in g.iter().enumerate() {
            let back = gn.checked_mul(&pochhammer_finite(&Monomial::q(3), 3, n as i64, p.order)?)?;
            ctx.compare(format!("{cfg} n = {n}"), &back, &qdiff::finite_c(cfg, 3 * n as i64 - 2, p.order)?);
        }
    }
    Ok(())
}

fn delta_rec(p: &Params, ctx: &mut Ctx) -> CheckOutcome {
    for cfg in p.configs() {
        for (n, d) in qdiff::delta_seq(cfg, 16, p.order)?.iter().enumerate() {
            ctx.compare(format!("{cfg} n = {n}"), d, &qdiff::delta_closed(cfg, n, p.order)?);
        }
    }
    Ok(())
}

fn residual(eq: Equation, p: &Params, ctx: &mut Ctx) -> CheckOutcome {
    if p.z_degree < 3 {
        return Err(format!("z-degree must be at least 3, got {}", p.z_degree).into());
    }
    for cfg in p.configs() {
        let r = qdiff::qdiff_residual(eq, cfg, p.z_degree, p.order)?;
        for k in 0..=p.z_degree - 2 {
            let c = r.coeff(k);
            ctx.compare(format!("{cfg} z^{k}"), c, &QSeries::zero_window(c.lo(), c.order()));
        }
    }
    Ok(())
}

fn fqdiff(p: &Params, ctx: &mut Ctx) -> CheckOutcome {
    residual(Equation::F, p, ctx)
}

fn hqdiff(p: &Params, ctx: &mut Ctx) -> CheckOutcome {
    if p.z_degree >= 3 {
        for cfg in p.configs() {
            let (f, h) = qdiff::build_f_h(cfg, p.z_degree, p.order)?;
            let prod = qdiff::minus_z_q3_product(p.z_degree, p.order)?.mul(&h)?;
            for k in 0..=p.z_degree {
                ctx.compare(format!("{cfg} F = (-z;q^3) H at z^{k}"), f.coeff(k), prod.coeff(k));
            }
        }
    }
    residual(Equation::H, p, ctx)
}

fn lemma_finite(p: &Params, ctx: &mut Ctx) -> CheckOutcome {
    for cfg in p.configs() {
        ctx.compare(format!("{cfg} n = 0"), &qdiff::lemma_eval(cfg, 0, p.order)?, &QSeries::int(cfg.beta_i(), p.order));
        for n in 1..=10usize {
            let l = qdiff::lemma_eval(cfg, n, p.order)?;
            let m = 3 * n as i64 - 2;
            ctx.compare(format!("{cfg} n = {n} vs recurrence"), &l, &qdiff::finite_c(cfg, m, p.order)?);
            ctx.compare(format!("{cfg} n = {n} vs enumeration"), &l, &brute_force_series(cfg, Some(m as u32), p.order));
        }
    }
    Ok(())
}

fn lines(ctx: &mut Ctx, what: &str, ls: &[QSeries]) {
    for (i, l) in ls.iter().enumerate().skip(1) {
        ctx.compare(format!("{what}, step {i}"), l, &ls[0]);
    }
}

fn limit_c0(p: &Params, ctx: &mut Ctx) -> CheckOutcome {
    lines(ctx, "Ramanujan step", &qdiff::c0_ramanujan_lines(p.order)?);
    lines(ctx, "Rogers step", &qdiff::c0_rogers_lines(p.order)?);
    for cfg in p.configs() {
        let ch = qdiff::limit_chain(cfg, p.order)?;
        ctx.compare(format!("{cfg} raw vs final"), &ch.c0_raw, &ch.c0_final);
    }
    Ok(())
}

fn limit_c1(p: &Params, ctx: &mut Ctx) -> CheckOutcome {
    lines(ctx, "Ramanujan step", &qdiff::c1_ramanujan_lines(p.order)?);
    let (l, r) = qdiff::c1_rogers_sides(p.order)?;
    ctx.compare("Rogers step", &l, &r);
    for cfg in p.configs() {
        let ch = qdiff::limit_chain(cfg, p.order)?;
        ctx.compare(format!("{cfg} raw vs final"), &ch.c1_raw, &ch.c1_final);
        let (l, r) = qdiff::theta2_fold_sides(cfg, p.order)?;
        ctx.compare(format!("{cfg} Theta_2 fold"), &l, &r);
    }
    Ok(())
}

fn theorem_mainab(p: &Params, ctx: &mut Ctx) -> CheckOutcome {
    let n = (p.order as usize + 1) / 3 + 1;
    for cfg in p.configs() {
        let ch = qdiff::limit_chain(cfg, p.order)?;
        let bf = brute_force_series(cfg, None, p.order);
        ctx.compare(format!("{cfg} enumeration vs theta form"), &bf, &ch.theorem_rhs);
        ctx.compare(format!("{cfg} sum of limits"), &ch.c0_final.checked_add(&ch.c1_final)?, &ch.theorem_rhs);
        ctx.compare(format!("{cfg} finite evaluation at n = {n}"), &qdiff::lemma_eval(cfg, n, p.order)?, &ch.theorem_rhs);
    }
    Ok(())
}

fn theorem_main(p: &Params, ctx: &mut Ctx) -> CheckOutcome {
    let [(c1, r1), (c3, r3)] = qdiff::theorem_main_sides(p.order)?;
    ctx.compare("C_1 line", &c1, &r1);
    ctx.compare("C_3 line", &c3, &r3);
    Ok(())
}

fn false_theta_forms(p: &Params, ctx: &mut Ctx) -> CheckOutcome {
    for (which, name) in [(FalseTheta::One, "Theta_1"), (FalseTheta::Two, "Theta_2")] {
        let c = theta::false_theta(which, FalseThetaForm::Character, p.order);
        let s = theta::false_theta(which, FalseThetaForm::Split, p.order);
        ctx.compare(name, &c, &s);
    }
    Ok(())
}

fn theta_assembly(p: &Params, ctx: &mut Ctx) -> CheckOutcome {
    let (d, t) = theta::theta_assembly_sides(p.order)?;
    ctx.compare("bilateral sum vs theta", &d, &t);
    Ok(())
}

fn reindexing(p: &Params, ctx: &mut Ctx) -> CheckOutcome {
    let (a, b) = theta::reindexing_sides(p.order);
    ctx.compare("k >= 0 vs k <= -1", &a, &b);
    Ok(())
}
