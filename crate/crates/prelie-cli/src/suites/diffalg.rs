//! The differential realization on Laurent polynomials: localization of
//! the product, the commutator bracket, residue bilinear forms and their
//! cocycle identities, and operator adjoints under the residue pairing.

use std::collections::BTreeSet;

use prelie::diffalg::{
    adjoint_residual, apply_operator, gen_cocycle_residual, gf_cocycle, gf_lie_cocycle_residual,
    lie_bracket, omega_hat, omega_hat_new, res, star, LaurentPoly, OpPrimitive, OperatorExpr,
};
use prelie::graded::{central_phi, StructureFamily};
use prelie::scalars::{rat, ratio, EpsPoly, Rat, RatFunc};
use rand::Rng;

use crate::report::{suite_rng, SuiteCtx, SuiteReport};

/// Compares two Laurent polynomials: exactly, or coefficient by
/// coefficient at the numeric parameter value (poles are failures).
fn check_laurent_eq(
    report: &mut SuiteReport,
    eps: &Option<Rat>,
    operation: &str,
    inputs: impl FnOnce() -> String,
    lhs: &LaurentPoly,
    rhs: &LaurentPoly,
) {
    match eps {
        None => report.check_true(
            operation,
            inputs,
            lhs == rhs,
            || lhs.to_string(),
            || rhs.to_string(),
        ),
        Some(e) => {
            report.cases += 1;
            let keys: BTreeSet<i64> = lhs
                .terms()
                .map(|(&k, _)| k)
                .chain(rhs.terms().map(|(&k, _)| k))
                .collect();
            for k in keys {
                match (lhs.coeff(k).eval(e), rhs.coeff(k).eval(e)) {
                    (Ok(a), Ok(b)) => {
                        if a != b {
                            report.fail(
                                operation,
                                format!("{} coefficient of x^{k}", inputs()),
                                a.to_string(),
                                b.to_string(),
                            );
                            return;
                        }
                    }
                    _ => {
                        report.fail(
                            operation,
                            format!("{} coefficient of x^{k}", inputs()),
                            format!("pole at eps = {e}"),
                            "a finite value".to_string(),
                        );
                        return;
                    }
                }
            }
        }
    }
}

fn random_laurent(rng: &mut impl Rng, pool: &[Rat]) -> LaurentPoly {
    let mut u = LaurentPoly::zero();
    for _ in 0..rng.random_range(1..=3) {
        let k = rng.random_range(-4..=4);
        u.add_term(
            k,
            RatFunc::from_rat(pool[rng.random_range(0..pool.len())].clone()),
        );
    }
    u
}

pub fn run(ctx: &SuiteCtx) -> SuiteReport {
    let mut report = SuiteReport::new("diffalg", ctx);
    let fam = StructureFamily::VirasoroEps;
    let mut rng = suite_rng(ctx, 5);
    let pool = [rat(1), rat(-1), rat(2), ratio(1, 2), ratio(-3, 2)];

    // The product of opposite-shifted monomials localizes to the
    // one-parameter structure constant.
    let sw = ctx.window.min(12);
    for p in -sw..=sw {
        for q in -sw..=sw {
            let lhs = star(&LaurentPoly::x_pow(1 - p), &LaurentPoly::x_pow(1 - q));
            let rhs = LaurentPoly::monomial(1 - p - q, fam.coeff(p, q));
            check_laurent_eq(
                &mut report,
                &ctx.eps,
                "star_localization",
                || format!("p={p} q={q}"),
                &lhs,
                &rhs,
            );
        }
    }

    // The commutator of the product is the vector-field bracket.
    for t in 0..ctx.trials {
        let u = random_laurent(&mut rng, &pool);
        let v = random_laurent(&mut rng, &pool);
        let lhs = &star(&u, &v) - &star(&v, &u);
        check_laurent_eq(
            &mut report,
            &ctx.eps,
            "star_commutator_is_bracket",
            || format!("trial={t} u={u} v={v}"),
            &lhs,
            &lie_bracket(&u, &v),
        );
    }

    // Monomial value of the first bilinear form.
    let mw = ctx.window.min(6);
    for p in -mw..=mw {
        for q in -mw..=mw {
            let lhs = omega_hat(&LaurentPoly::x_pow(1 - p), &LaurentPoly::x_pow(1 - q));
            let c = RatFunc::from_poly(EpsPoly::from_coeffs(vec![rat(p * p), rat(-p * p * p)]));
            check_laurent_eq(
                &mut report,
                &ctx.eps,
                "omega_hat_on_monomials",
                || format!("p={p} q={q}"),
                &lhs,
                &LaurentPoly::monomial(-1 - p - q, c),
            );
        }
    }

    // Generalized cocycle residuals on monomial triples.
    let ow = ctx.window.min(6);
    for a in -ow..=ow {
        for b in -ow..=ow {
            for c in -ow..=ow {
                let (u, v, w) = (
                    LaurentPoly::x_pow(a),
                    LaurentPoly::x_pow(b),
                    LaurentPoly::x_pow(c),
                );
                match gen_cocycle_residual("omega_hat", &u, &v, &w) {
                    Ok(r) => report.check_zero(
                        &ctx.eps,
                        "gen_cocycle_residual(omega_hat)",
                        || format!("a={a} b={b} c={c}"),
                        &r,
                    ),
                    Err(e) => report.fail_case(
                        "gen_cocycle_residual(omega_hat)",
                        format!("a={a} b={b} c={c}"),
                        format!("error: {e}"),
                        "a scalar residual".into(),
                    ),
                }
            }
        }
    }
    let nw = ctx.window.min(4);
    for a in -nw..=nw {
        for b in -nw..=nw {
            for c in -nw..=nw {
                let (u, v, w) = (
                    LaurentPoly::x_pow(a),
                    LaurentPoly::x_pow(b),
                    LaurentPoly::x_pow(c),
                );
                match gen_cocycle_residual("omega_hat_new", &u, &v, &w) {
                    Ok(r) => report.check_zero(
                        &ctx.eps,
                        "gen_cocycle_residual",
                        || format!("bilinear=omega_hat_new a={a} b={b} c={c}"),
                        &r,
                    ),
                    Err(e) => report.fail_case(
                        "gen_cocycle_residual",
                        format!("bilinear=omega_hat_new a={a} b={b} c={c}"),
                        format!("error: {e}"),
                        "a scalar residual".into(),
                    ),
                }
                report.check_zero(
                    &ctx.eps,
                    "gf_lie_cocycle_residual",
                    || format!("a={a} b={b} c={c}"),
                    &gf_lie_cocycle_residual(&u, &v, &w),
                );
            }
        }
    }
    // The classical form obeys only the Lie-cocycle identity: against the
    // star product its generalized residual must have a nonzero witness.
    let mut gf_witness = None;
    'scan: for a in -nw..=nw {
        for b in -nw..=nw {
            for c in -nw..=nw {
                let r = gen_cocycle_residual(
                    "gf_on_liealg",
                    &LaurentPoly::x_pow(a),
                    &LaurentPoly::x_pow(b),
                    &LaurentPoly::x_pow(c),
                );
                if matches!(&r, Ok(v) if !v.is_zero()) {
                    gf_witness = Some((a, b, c));
                    break 'scan;
                }
            }
        }
    }
    report.check_true(
        "gf_generalized_residual_witness",
        || format!("cube |a|,|b|,|c| <= {nw}"),
        gf_witness.is_some(),
        || "no nonzero residual in the window".into(),
        || "a monomial triple with nonzero residual".into(),
    );
    report.check_true(
        "unknown_bilinear_rejected",
        || "bilinear=bogus".into(),
        gen_cocycle_residual(
            "bogus",
            &LaurentPoly::x_pow(0),
            &LaurentPoly::x_pow(0),
            &LaurentPoly::x_pow(0),
        )
        .is_err(),
        || "the name was accepted".into(),
        || "an unknown-bilinear error".into(),
    );

    // The classical form is skew under the residue and reproduces the
    // degree-three charge on opposite-degree arguments.
    let gw = ctx.window.min(8);
    for a in -gw..=gw {
        for b in -gw..=gw {
            let (u, v) = (LaurentPoly::x_pow(a), LaurentPoly::x_pow(b));
            let skew = &res(&gf_cocycle(&u, &v)) + &res(&gf_cocycle(&v, &u));
            report.check_zero(
                &ctx.eps,
                "gf_residue_skewness",
                || format!("a={a} b={b}"),
                &skew,
            );
        }
    }
    for n in -ctx.window..=ctx.window {
        report.check_eq_scalar(
            &ctx.eps,
            "gf_charge",
            || format!("n={n}"),
            &res(&gf_cocycle(
                &LaurentPoly::x_pow(1 - n),
                &LaurentPoly::x_pow(1 + n),
            )),
            &RatFunc::from_int(n * n * n - n),
        );
        // The normalized form's residue on the same pair is the diagonal
        // charge of the central extension.
        let bw = ctx.window.min(12);
        if n.abs() <= bw {
            report.check_eq_scalar(
                &ctx.eps,
                "omega_hat_new_bridge",
                || format!("p={n}"),
                &res(&omega_hat_new(
                    &LaurentPoly::x_pow(1 - n),
                    &LaurentPoly::x_pow(1 + n),
                )),
                &central_phi(n),
            );
        }
    }

    // Adjoints under the residue pairing, on monomial pairs.
    let aw = ctx.window.min(10);
    let pipelines: [(&str, Vec<OpPrimitive>); 4] = [
        ("apply_o", vec![OpPrimitive::ApplyO]),
        ("mul_x^2", vec![OpPrimitive::MulByMonomial(2)]),
        ("mul_x^-3", vec![OpPrimitive::MulByMonomial(-3)]),
        ("derivative", vec![OpPrimitive::Derivative]),
    ];
    for (name, steps) in &pipelines {
        let op = OperatorExpr::new(steps.clone());
        for a in -aw..=aw {
            for b in -aw..=aw {
                match adjoint_residual(&op, &LaurentPoly::x_pow(a), &LaurentPoly::x_pow(b)) {
                    Ok(r) => report.check_zero(
                        &ctx.eps,
                        "adjoint_residual",
                        || format!("op={name} a={a} b={b}"),
                        &r,
                    ),
                    Err(e) => report.fail_case(
                        "adjoint_residual",
                        format!("op={name} a={a} b={b}"),
                        format!("error: {e}"),
                        "a scalar residual".into(),
                    ),
                }
            }
        }
    }
    report.check_true(
        "resolvent_has_no_adjoint_rule",
        || "op=resolvent".into(),
        OperatorExpr::new(vec![OpPrimitive::ApplyResolvent])
            .adjoint()
            .is_err(),
        || "an adjoint was produced".into(),
        || "a no-adjoint-rule error".into(),
    );

    // Operator identities, on random inputs: conjugating the diagonal
    // operator by a monomial shifts it.
    let shift_pairs = [
        (
            "(O+3) after x^-3 = x^-3 after O",
            OperatorExpr::new(vec![
                OpPrimitive::MulByMonomial(-3),
                OpPrimitive::OShift(RatFunc::from_int(3)),
            ]),
            OperatorExpr::new(vec![OpPrimitive::ApplyO, OpPrimitive::MulByMonomial(-3)]),
        ),
        (
            "x^-1 after (O-1) = O after x^-1",
            OperatorExpr::new(vec![
                OpPrimitive::OShift(RatFunc::from_int(-1)),
                OpPrimitive::MulByMonomial(-1),
            ]),
            OperatorExpr::new(vec![OpPrimitive::MulByMonomial(-1), OpPrimitive::ApplyO]),
        ),
    ];
    for t in 0..ctx.trials {
        let u = random_laurent(&mut rng, &pool);
        for (name, lhs_op, rhs_op) in &shift_pairs {
            check_laurent_eq(
                &mut report,
                &ctx.eps,
                "operator_identity",
                || format!("identity={name} trial={t} u={u}"),
                &apply_operator(lhs_op, &u),
                &apply_operator(rhs_op, &u),
            );
        }
    }
    report
}
