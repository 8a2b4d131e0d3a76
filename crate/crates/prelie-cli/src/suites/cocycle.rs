//! The diagonal central term: the cocycle residual on zero-sum triples,
//! the induced skew cocycle against its closed form, coboundaries, and
//! the windowed extension solver.

use prelie::graded::{
    antisymmetrize, central_phi, cocycle_residual, solve_central_extensions, trivial_cocycle,
    CentralCharge, DualVector, StructureFamily,
};
use prelie::scalars::{ratio, RatFunc};

use crate::report::{SuiteCtx, SuiteReport};

pub fn run(ctx: &SuiteCtx) -> SuiteReport {
    let mut report = SuiteReport::new("cocycle", ctx);
    let w = ctx.window;
    let fam = StructureFamily::VirasoroEps;
    // The residual at (p, q, -p-q) consults the charge at p + q, so the
    // table has to cover twice the sweep window.
    let cc = CentralCharge::table_from_fn(2 * w, central_phi);

    report.check_zero(&ctx.eps, "phi_at_zero", || "p=0".into(), &cc.phi(0));
    for p in -w..=w {
        for q in -w..=w {
            let r = -p - q;
            report.check_zero(
                &ctx.eps,
                "cocycle_residual",
                || format!("p={p} q={q} r={r}"),
                &cocycle_residual(&fam, &cc, p, q, r),
            );
        }
    }
    for p in -w..=w {
        report.check_eq_scalar(
            &ctx.eps,
            "antisymmetrized_charge",
            || format!("p={p} q={}", -p),
            &antisymmetrize(&cc, p, -p),
            &RatFunc::from_int(p * p * p - p),
        );
        report.probe_eps(&ctx.eps, "phi", || format!("p={p}"), &cc.phi(p));
    }
    for p in -2..=2i64 {
        report.check_zero(
            &ctx.eps,
            "antisymmetrized_charge_off_diagonal",
            || format!("p={p} q={}", p + 1),
            &antisymmetrize(&cc, p, p + 1),
        );
    }

    // Coboundaries of dual vectors satisfy the generalized cocycle
    // identity: the combination collapses to a multiple of the
    // associator-symmetry residual.
    let mut u = DualVector::term(0, RatFunc::one());
    u.add_term(1, RatFunc::from_rat(ratio(1, 2)));
    u.add_term(-2, RatFunc::from_int(-3));
    let cw = w.min(6);
    for p in -cw..=cw {
        for q in -cw..=cw {
            for r in -cw..=cw {
                let t1 = &fam.coeff(p, r) * &trivial_cocycle(&u, &fam, q, p + r);
                let t2 = &fam.coeff(q, r) * &trivial_cocycle(&u, &fam, p, q + r);
                let t3 = &fam.bracket_coeff(p, q) * &trivial_cocycle(&u, &fam, p + q, r);
                report.check_zero(
                    &ctx.eps,
                    "coboundary_cocycle_residual",
                    || format!("p={p} q={q} r={r}"),
                    &(&(&t1 - &t2) + &t3),
                );
            }
        }
    }

    // The windowed solver returns only diagonal charges whose residual
    // vanishes on every in-window zero-sum triple, and finds at least the
    // trivial and central directions.
    let sw = w.min(6);
    match solve_central_extensions(&fam, sw) {
        Err(e) => report.fail_case(
            "solve_central_extensions",
            format!("window={sw}"),
            format!("error: {e}"),
            "a basis of diagonal cocycles".into(),
        ),
        Ok(basis) => {
            report.check_true(
                "extension_space_dimension",
                || format!("window={sw}"),
                basis.len() >= 2,
                || format!("{} basis charges", basis.len()),
                || "at least 2 (trivial + central directions)".into(),
            );
            for (idx, b) in basis.iter().enumerate() {
                for p in -sw..=sw {
                    for q in -sw..=sw {
                        let r = -p - q;
                        if r.abs() > sw {
                            continue;
                        }
                        report.check_zero(
                            &ctx.eps,
                            "solver_basis_cocycle_residual",
                            || format!("basis={idx} p={p} q={q} r={r}"),
                            &cocycle_residual(&fam, b, p, q, r),
                        );
                    }
                }
            }
        }
    }
    report
}
