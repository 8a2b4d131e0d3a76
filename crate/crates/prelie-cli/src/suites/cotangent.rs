//! Phase-space extensions: the extended table stays quasiassociative, its
//! bracket splits into the base bracket and the negative-transpose action
//! on the dual block, the same action reproduces the table through the
//! semidirect construction, and the canonical pairing is a closed
//! 2-cocycle.

use prelie::findim::{
    cotangent, ehrenfest, fd_lie_constants, fd_quasiassoc_witness, semidirect,
    symplectic_cocycle_residual, FinAlgebra, LinearMap,
};
use prelie::scalars::RatFunc;
use rand::Rng;

use crate::report::{suite_rng, SuiteCtx, SuiteReport};

fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> LinearMap {
    let mut m = LinearMap::zero(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            *m.at_mut(i, j) = RatFunc::from_int(rng.random_range(-4..=4));
        }
    }
    m
}

/// A quasiassociative seed: two-block tables on even trials, semidirect
/// sums over a zero multiplication on odd ones. Base dimension stays at
/// most 4.
fn seed(rng: &mut impl Rng, t: u64) -> (String, FinAlgebra) {
    if t % 2 == 0 {
        let d = 1 + ((t / 2) % 2) as usize;
        let a = random_matrix(rng, d, d);
        (
            format!("two_block(d={d})"),
            ehrenfest(&a, d).expect("matching shape"),
        )
    } else {
        let mut a = LinearMap::zero(1, 1);
        *a.at_mut(0, 0) = RatFunc::from_int(rng.random_range(-4..=4));
        let r = ehrenfest(&a, 1).expect("1x1 shape");
        let chi = vec![random_matrix(rng, 1, 1), LinearMap::zero(1, 1)];
        (
            "semidirect(2+1)".to_string(),
            semidirect(&r, &FinAlgebra::zero(1), &chi).expect("valid action"),
        )
    }
}

pub fn run(ctx: &SuiteCtx) -> SuiteReport {
    let mut report = SuiteReport::new("cotangent", ctx);
    let mut rng = suite_rng(ctx, 10);
    let count = ctx.trials.clamp(10, 20);

    for t in 0..count {
        let (name, base) = seed(&mut rng, t);
        let d = base.dim();
        report.check_true(
            "seed_quasiassociative",
            || format!("trial={t} seed={name}"),
            fd_quasiassoc_witness(&base).is_none(),
            || "the seed fails the associator-symmetry sweep".into(),
            || "a quasiassociative seed".into(),
        );

        let cot = cotangent(&base);
        let witness = fd_quasiassoc_witness(&cot.full);
        report.check_true(
            "extension_quasiassociative",
            || format!("trial={t} seed={name}"),
            witness.is_none(),
            || format!("witness {witness:?}"),
            || "no witness".into(),
        );

        // The bracket splits block by block: the base bracket on the
        // first factor, the negative-transpose action on the dual factor,
        // nothing else.
        let full_lie = fd_lie_constants(&cot.full).constants;
        let base_lie = fd_lie_constants(&base).constants;
        for i in 0..d {
            for j in 0..d {
                for s in 0..d {
                    report.check_eq_scalar(
                        &ctx.eps,
                        "bracket_base_block",
                        || format!("trial={t} seed={name} s={s} i={i} j={j}"),
                        full_lie.at(s, i, j),
                        base_lie.at(s, i, j),
                    );
                    report.check_zero(
                        &ctx.eps,
                        "bracket_base_block_dual_leakage",
                        || format!("trial={t} seed={name} s={} i={i} j={j}", d + s),
                        full_lie.at(d + s, i, j),
                    );
                    report.check_eq_scalar(
                        &ctx.eps,
                        "bracket_dual_action_block",
                        || format!("trial={t} seed={name} s={} i={i} j={}", d + s, d + j),
                        full_lie.at(d + s, i, d + j),
                        &-(base.theta(j, i, s).clone()),
                    );
                    report.check_zero(
                        &ctx.eps,
                        "bracket_dual_action_base_leakage",
                        || format!("trial={t} seed={name} s={s} i={i} j={}", d + j),
                        full_lie.at(s, i, d + j),
                    );
                }
            }
        }
        for i in 0..d {
            for j in 0..d {
                for s in 0..2 * d {
                    report.check_zero(
                        &ctx.eps,
                        "bracket_dual_dual_block",
                        || format!("trial={t} seed={name} s={s} i={} j={}", d + i, d + j),
                        full_lie.at(s, d + i, d + j),
                    );
                }
            }
        }

        // Feeding the negative-transpose action to the semidirect
        // construction must succeed (it validates the representation and
        // derivation laws) and rebuild the same table entry for entry.
        let mut chi = Vec::with_capacity(d);
        for i in 0..d {
            let mut m = LinearMap::zero(d, d);
            for k in 0..d {
                for j in 0..d {
                    *m.at_mut(k, j) = -(base.theta(j, i, k).clone());
                }
            }
            chi.push(m);
        }
        match semidirect(&base, &FinAlgebra::zero(d), &chi) {
            Err(e) => report.fail_case(
                "semidirect_from_dual_action",
                format!("trial={t} seed={name}"),
                format!("error: {e}"),
                "the dual action accepted as a representation".into(),
            ),
            Ok(rebuilt) => {
                let mut mismatch = None;
                'scan: for s in 0..2 * d {
                    for i in 0..2 * d {
                        for j in 0..2 * d {
                            if rebuilt.theta(s, i, j) != cot.full.theta(s, i, j) {
                                mismatch = Some((s, i, j));
                                break 'scan;
                            }
                        }
                    }
                }
                report.check_true(
                    "semidirect_rebuilds_extension",
                    || format!("trial={t} seed={name}"),
                    mismatch.is_none(),
                    || format!("first differing entry {mismatch:?}"),
                    || "identical tables".into(),
                );
            }
        }

        // The canonical pairing satisfies the cocycle identity on every
        // basis triple of the extension.
        for a in 0..2 * d {
            for b in 0..2 * d {
                for c in 0..2 * d {
                    match symplectic_cocycle_residual(&base, a, b, c) {
                        Ok(r) => report.check_zero(
                            &ctx.eps,
                            "symplectic_cocycle_residual",
                            || format!("trial={t} seed={name} a={a} b={b} c={c}"),
                            &r,
                        ),
                        Err(e) => report.fail_case(
                            "symplectic_cocycle_residual",
                            format!("trial={t} seed={name} a={a} b={b} c={c}"),
                            format!("error: {e}"),
                            "a scalar residual".into(),
                        ),
                    }
                }
            }
        }
    }

    // Out-of-range indices are rejected with an error, not a crash.
    let line = FinAlgebra::zero(1);
    report.check_true(
        "symplectic_residual_range_checked",
        || "index 2 against a 1-dimensional base".into(),
        symplectic_cocycle_residual(&line, 2, 0, 0).is_err(),
        || "the index was accepted".into(),
        || "an index-out-of-range error".into(),
    );
    report
}
