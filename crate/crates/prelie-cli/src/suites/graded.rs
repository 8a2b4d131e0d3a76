//! Structure-family sweeps: the associator-symmetry residual and the
//! bracket boundary condition for the built-in families, plus a finite
//! table cut out of the one-parameter family.

use prelie::graded::{StructureFamily, TableEntry};
use prelie::scalars::ratio;

use crate::report::{SuiteCtx, SuiteReport};

pub fn run(ctx: &SuiteCtx) -> SuiteReport {
    let mut report = SuiteReport::new("graded", ctx);
    let w = ctx.window;
    let families = [
        ("virasoro_eps", StructureFamily::VirasoroEps),
        ("lambda(5/3)", StructureFamily::Lambda(ratio(5, 3))),
    ];
    for (name, fam) in &families {
        for p in -w..=w {
            for q in -w..=w {
                for r in -w..=w {
                    report.check_zero(
                        &ctx.eps,
                        "quasiassoc_residual",
                        || format!("family={name} p={p} q={q} r={r}"),
                        &fam.quasiassoc_residual(p, q, r),
                    );
                }
                report.check_zero(
                    &ctx.eps,
                    "lie_boundary_residual",
                    || format!("family={name} p={p} q={q}"),
                    &fam.lie_boundary_residual(p, q),
                );
                report.probe_eps(
                    &ctx.eps,
                    "coeff",
                    || format!("family={name} p={p} q={q}"),
                    &fam.coeff(p, q),
                );
            }
        }
    }

    // A finite table cut out of the one-parameter family agrees with its
    // source on the support and vanishes off it.
    let tw = w.min(3);
    let src = StructureFamily::VirasoroEps;
    let mut entries = Vec::new();
    for p in -tw..=tw {
        for q in -tw..=tw {
            entries.push(TableEntry {
                p,
                q,
                ratfunc: src.coeff(p, q),
            });
        }
    }
    let table = StructureFamily::table_from_entries(entries);
    for p in -tw..=tw {
        for q in -tw..=tw {
            report.check_eq_scalar(
                &ctx.eps,
                "table_coeff_roundtrip",
                || format!("p={p} q={q}"),
                &table.coeff(p, q),
                &src.coeff(p, q),
            );
        }
    }
    report.check_zero(
        &ctx.eps,
        "table_coeff_off_support",
        || format!("p={} q=0", tw + 1),
        &table.coeff(tw + 1, 0),
    );
    report
}
