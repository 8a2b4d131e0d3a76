//! The three appendix batteries: the impossibility replay, the
//! two-block/semidirect constructions with the dichotomy they witness,
//! and the derivation/associativity characterizations with the
//! multi-variable cross-check.

use prelie::diffalg::{nd_bracket, nd_star, nd_star_elements, NdElement};
use prelie::findim::{
    der_inclusion_check, ehrenfest, fd_lie_constants, fd_quasiassoc_witness, is_associative,
    no_associative_witness, semidirect, FinAlgebra, LinearMap,
};
use prelie::scalars::{rat, Rat, RatFunc};
use rand::Rng;

use crate::report::{for_each_tuple, suite_rng, SuiteCtx, SuiteReport};

// ---- appendix 1: the impossibility replay ------------------------------

pub fn run_appendix1(ctx: &SuiteCtx) -> SuiteReport {
    let mut report = SuiteReport::new("appendix1", ctx);

    let windows: [(&str, Vec<i64>); 2] = [
        ("standard", vec![0, 1, 2]),
        ("wide", (0..=ctx.window).collect()),
    ];
    for (name, degrees) in &windows {
        match no_associative_witness(degrees) {
            Err(e) => report.fail_case(
                "no_associative_witness",
                format!("window={name} degrees={degrees:?}"),
                format!("error: {e}"),
                "a contradiction trace".into(),
            ),
            Ok(trace) => {
                let c = &trace.contradiction;
                let disjoint = c
                    .candidates_from_r1
                    .iter()
                    .all(|v| !c.candidates_from_r2.contains(v));
                report.check_true(
                    "contradiction_candidates_disjoint",
                    || format!("window={name} r1={} r2={}", c.r1, c.r2),
                    disjoint && !c.candidates_from_r1.is_empty(),
                    || {
                        format!(
                            "candidates {:?} and {:?}",
                            c.candidates_from_r1, c.candidates_from_r2
                        )
                    },
                    || "disjoint nonempty candidate sets".into(),
                );
                report.check_true(
                    "trace_is_substantive",
                    || format!("window={name}"),
                    trace.steps.len() >= 7,
                    || format!("{} steps", trace.steps.len()),
                    || "at least 7 derivation steps".into(),
                );
                report.check_true(
                    "trace_records_assumptions",
                    || format!("window={name}"),
                    trace
                        .assumptions
                        .iter()
                        .any(|a| a.contains("zero divisors")),
                    || "no coefficient-ring assumption".into(),
                    || "the no-zero-divisors assumption".into(),
                );
                // The trace round-trips through its wire form.
                let roundtrip = serde_json::to_string(&trace)
                    .ok()
                    .and_then(|s| serde_json::from_str(&s).ok())
                    .map(|back: prelie::findim::ProofTrace| back == trace)
                    .unwrap_or(false);
                report.check_true(
                    "trace_roundtrips_through_json",
                    || format!("window={name}"),
                    roundtrip,
                    || "serialization changed the trace".into(),
                    || "an identical trace".into(),
                );
            }
        }
    }

    // Windows without two admissible degrees cannot run the argument.
    for degrees in [vec![0, 1, -1], vec![0]] {
        report.check_true(
            "inadmissible_window_rejected",
            || format!("degrees={degrees:?}"),
            no_associative_witness(&degrees).is_err(),
            || "a trace was produced".into(),
            || "a window-too-small error".into(),
        );
    }
    report
}

// ---- appendix 2: two-block and semidirect constructions ----------------

fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> LinearMap {
    let mut m = LinearMap::zero(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            *m.at_mut(i, j) = RatFunc::from_int(rng.random_range(-5..=5));
        }
    }
    m
}

pub fn run_appendix2(ctx: &SuiteCtx) -> SuiteReport {
    let mut report = SuiteReport::new("appendix2", ctx);
    let mut rng = suite_rng(ctx, 8);

    // Two-block tables from random matrices always pass the
    // associator-symmetry sweep; small ones also get the bracket check.
    let count = ctx.trials.clamp(20, 40);
    for t in 0..count {
        let d = 1 + (t % 5) as usize;
        let a = random_matrix(&mut rng, d, d);
        match ehrenfest(&a, d) {
            Err(e) => report.fail_case(
                "ehrenfest",
                format!("trial={t} d={d}"),
                format!("error: {e}"),
                "a two-block table".into(),
            ),
            Ok(alg) => {
                if d <= 3 {
                    // The constants builder sweeps quasiassociativity and,
                    // when it holds, the Jacobi identity in one pass.
                    let lie = fd_lie_constants(&alg);
                    report.check_true(
                        "two_block_quasiassociative",
                        || format!("trial={t} d={d}"),
                        lie.jacobi.is_some(),
                        || "an associator-symmetry witness exists".into(),
                        || "no witness".into(),
                    );
                    report.check_true(
                        "two_block_bracket_jacobi",
                        || format!("trial={t} d={d}"),
                        lie.jacobi == Some(None),
                        || format!("witness {:?}", lie.jacobi),
                        || "no witness".into(),
                    );
                } else {
                    let witness = fd_quasiassoc_witness(&alg);
                    report.check_true(
                        "two_block_quasiassociative",
                        || format!("trial={t} d={d}"),
                        witness.is_none(),
                        || format!("witness {witness:?}"),
                        || "no witness".into(),
                    );
                }
            }
        }
    }

    // Semidirect sums over a zero multiplication: any single matrix
    // paired with zero respects the two-block commutators, and the
    // result stays quasiassociative.
    for t in 0..20u64 {
        let scale = rng.random_range(-4..=4);
        let mut a = LinearMap::zero(1, 1);
        *a.at_mut(0, 0) = RatFunc::from_int(scale);
        let r = ehrenfest(&a, 1).expect("1x1 shape");
        let m = 1 + (t % 2) as usize;
        let chi = vec![random_matrix(&mut rng, m, m), LinearMap::zero(m, m)];
        match semidirect(&r, &FinAlgebra::zero(m), &chi) {
            Err(e) => report.fail_case(
                "semidirect",
                format!("trial={t} scale={scale} m={m}"),
                format!("error: {e}"),
                "an extended table".into(),
            ),
            Ok(alg) => {
                let witness = fd_quasiassoc_witness(&alg);
                report.check_true(
                    "semidirect_quasiassociative",
                    || format!("trial={t} scale={scale} m={m}"),
                    witness.is_none(),
                    || format!("witness {witness:?}"),
                    || "no witness".into(),
                );
            }
        }
    }

    // Invalid actions are rejected: a pair of identity matrices cannot
    // intertwine a nonzero commutator, and a non-derivation cannot act on
    // a unital multiplication.
    let mut unit = LinearMap::zero(1, 1);
    *unit.at_mut(0, 0) = RatFunc::one();
    let r = ehrenfest(&unit, 1).expect("1x1 shape");
    report.check_true(
        "semidirect_rejects_non_representation",
        || "chi=[I, I] over the two-block table".into(),
        semidirect(
            &r,
            &FinAlgebra::zero(2),
            &[LinearMap::identity(2), LinearMap::identity(2)],
        )
        .is_err(),
        || "the action was accepted".into(),
        || "a not-a-representation error".into(),
    );
    let mut unital = FinAlgebra::zero(1);
    unital.set_theta(0, 0, 0, RatFunc::one());
    report.check_true(
        "semidirect_rejects_non_derivation",
        || "chi=[I] over an idempotent line".into(),
        semidirect(&FinAlgebra::zero(1), &unital, &[LinearMap::identity(1)]).is_err(),
        || "the action was accepted".into(),
        || "a not-a-derivation error".into(),
    );

    // The dichotomy: the unit-scale two-block table is quasiassociative
    // but not associative.
    let witness = fd_quasiassoc_witness(&r);
    report.check_true(
        "dichotomy_quasiassociative_side",
        || "two-block table, d=1, scale=1".into(),
        witness.is_none(),
        || format!("witness {witness:?}"),
        || "no witness".into(),
    );
    report.check_true(
        "dichotomy_nonassociative_side",
        || "two-block table, d=1, scale=1".into(),
        !is_associative(&r),
        || "the table is associative".into(),
        || "a nonassociative table".into(),
    );
    report
}

// ---- appendix 3: derivations and the associativity characterization ----

/// Direct associator-symmetry decision from the multiplication itself,
/// independent of the residual formula.
fn symmetric_by_direct_products(alg: &FinAlgebra) -> bool {
    let dim = alg.dim();
    let basis = |t: usize| -> Vec<RatFunc> {
        let mut v = vec![RatFunc::zero(); dim];
        v[t] = RatFunc::one();
        v
    };
    let assoc = |a: usize, b: usize, c: usize| -> Vec<RatFunc> {
        let bc = alg.mul(&basis(b), &basis(c)).expect("shapes match");
        let ab = alg.mul(&basis(a), &basis(b)).expect("shapes match");
        let lhs = alg.mul(&basis(a), &bc).expect("shapes match");
        let rhs = alg.mul(&ab, &basis(c)).expect("shapes match");
        lhs.iter().zip(&rhs).map(|(l, r)| l - r).collect()
    };
    for a in 0..dim {
        for b in 0..dim {
            for c in 0..dim {
                let fwd = assoc(a, b, c);
                let swapped = assoc(b, a, c);
                if fwd.iter().zip(&swapped).any(|(l, r)| !(l - r).is_zero()) {
                    return false;
                }
            }
        }
    }
    true
}

/// The 2x2 matrix-unit algebra on the index map (a, b) -> 2a + b.
fn matrix_units() -> FinAlgebra {
    let mut alg = FinAlgebra::zero(4);
    let idx = |a: usize, b: usize| 2 * a + b;
    for a in 0..2 {
        for b in 0..2 {
            for c in 0..2 {
                for d in 0..2 {
                    if b == c {
                        alg.set_theta(idx(a, d), idx(a, b), idx(c, d), RatFunc::one());
                    }
                }
            }
        }
    }
    alg
}

/// A dense table that fails the associator-symmetry sweep.
fn dense_counterexample() -> FinAlgebra {
    let mut alg = FinAlgebra::zero(2);
    for s in 0..2 {
        for i in 0..2 {
            for j in 0..2 {
                alg.set_theta(s, i, j, RatFunc::from_int((s + 2 * i + 3 * j + 1) as i64));
            }
        }
    }
    alg
}

pub fn run_appendix3(ctx: &SuiteCtx) -> SuiteReport {
    let mut report = SuiteReport::new("appendix3", ctx);

    let mut unit = LinearMap::zero(1, 1);
    *unit.at_mut(0, 0) = RatFunc::from_int(2);
    let seeds: [(&str, FinAlgebra); 4] = [
        ("zero", FinAlgebra::zero(2)),
        ("matrix_units", matrix_units()),
        ("two_block", ehrenfest(&unit, 1).expect("1x1 shape")),
        ("dense", dense_counterexample()),
    ];

    for (name, alg) in &seeds {
        // The residual sweep agrees with the direct product computation,
        // on positive and negative examples alike.
        let by_residual = fd_quasiassoc_witness(alg).is_none();
        let by_products = symmetric_by_direct_products(alg);
        report.check_true(
            "residual_sweep_matches_direct_products",
            || format!("seed={name}"),
            by_residual == by_products,
            || format!("residual sweep says {by_residual}, direct products say {by_products}"),
            || "agreement".into(),
        );

        // Inner maps are bracket derivations whenever the bracket
        // satisfies the Jacobi identity; being an algebra derivation
        // always implies being a bracket derivation.
        if by_residual {
            for u in 0..alg.dim() {
                let mut vec = vec![RatFunc::zero(); alg.dim()];
                vec[u] = RatFunc::one();
                let ad = alg.ad(&vec).expect("shapes match");
                match der_inclusion_check(alg, &ad) {
                    Err(e) => report.fail_case(
                        "der_inclusion_check",
                        format!("seed={name} u={u}"),
                        format!("error: {e}"),
                        "a derivation report".into(),
                    ),
                    Ok(rep) => {
                        report.check_true(
                            "inner_map_is_bracket_derivation",
                            || format!("seed={name} u={u}"),
                            rep.lie_derivation,
                            || format!("witness {:?}", rep.lie_witness),
                            || "no witness".into(),
                        );
                        report.check_true(
                            "derivation_inclusion",
                            || format!("seed={name} u={u}"),
                            rep.inclusion_holds,
                            || "an algebra derivation failing the bracket rule".into(),
                            || "inclusion".into(),
                        );
                    }
                }
            }
        }

        // On these seeds, every inner map being an algebra derivation
        // happens exactly for the associative tables.
        let all_inner_derive = (0..alg.dim()).all(|u| {
            let mut vec = vec![RatFunc::zero(); alg.dim()];
            vec[u] = RatFunc::one();
            let ad = alg.ad(&vec).expect("shapes match");
            der_inclusion_check(alg, &ad)
                .map(|rep| rep.algebra_derivation)
                .unwrap_or(false)
        });
        report.check_true(
            "inner_derivations_characterize_associativity",
            || format!("seed={name}"),
            all_inner_derive == is_associative(alg),
            || {
                format!(
                    "inner maps all derive: {all_inner_derive}, associative: {}",
                    is_associative(alg)
                )
            },
            || "agreement".into(),
        );
    }

    // Cross-check with the two-variable analog on the unit box: the
    // antisymmetrized product is the bracket and the associator is
    // symmetric there too.
    let lambda: Rat = rat(1);
    for i in 1..=2usize {
        for j in 1..=2usize {
            for_each_tuple(2, -1, 1, |sigma| {
                let sigma = sigma.to_vec();
                for_each_tuple(2, -1, 1, |nu| {
                    let ab = nd_star(i, &sigma, j, nu, &lambda).expect("dimensions match");
                    let ba = nd_star(j, nu, i, &sigma, &lambda).expect("dimensions match");
                    let lhs = ab.sub(&ba).expect("dimensions match");
                    let rhs = nd_bracket(
                        &NdElement::basis(i, sigma.clone()).expect("direction in range"),
                        &NdElement::basis(j, nu.to_vec()).expect("direction in range"),
                    )
                    .expect("dimensions match");
                    report.check_true(
                        "nd_cross_check_bracket",
                        || format!("i={i} j={j} sigma={sigma:?} nu={nu:?}"),
                        lhs == rhs,
                        || "antisymmetrization differs from the bracket".into(),
                        || "agreement".into(),
                    );
                });
            });
        }
    }
    for_each_tuple(2, -1, 1, |sigma| {
        let sigma = sigma.to_vec();
        for_each_tuple(2, -1, 1, |rho| {
            let x = NdElement::basis(1, sigma.clone()).expect("direction in range");
            let y = NdElement::basis(2, vec![1, -1]).expect("direction in range");
            let z = NdElement::basis(2, rho.to_vec()).expect("direction in range");
            let assoc = |a: &NdElement, b: &NdElement, c: &NdElement| {
                let bc = nd_star_elements(b, c, &lambda).expect("dimensions match");
                let ab = nd_star_elements(a, b, &lambda).expect("dimensions match");
                nd_star_elements(a, &bc, &lambda)
                    .expect("dimensions match")
                    .sub(&nd_star_elements(&ab, c, &lambda).expect("dimensions match"))
                    .expect("dimensions match")
            };
            report.check_true(
                "nd_cross_check_associator_symmetry",
                || format!("sigma={sigma:?} rho={rho:?}"),
                assoc(&x, &y, &z) == assoc(&y, &x, &z),
                || "the associator is not symmetric".into(),
                || "symmetry".into(),
            );
        });
    });
    report
}
