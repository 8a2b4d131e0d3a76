//! The n-variable analog: the antisymmetrized product reproduces the
//! bracket for every parameter value, and the associator of the product
//! is symmetric in its first two arguments.

use prelie::diffalg::{nd_bracket, nd_star, nd_star_elements, NdElement};
use prelie::scalars::{rat, ratio, Rat};
use rand::Rng;

use crate::report::{for_each_tuple, suite_rng, SuiteCtx, SuiteReport};

fn render_nd(e: &NdElement) -> String {
    let terms: Vec<String> = e
        .terms()
        .map(|(bv, c)| format!("({c}) e^{}_{:?}", bv.direction, bv.degree))
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

fn associator(
    x: &NdElement,
    y: &NdElement,
    z: &NdElement,
    lambda: &Rat,
) -> Result<NdElement, prelie::diffalg::DiffError> {
    let yz = nd_star_elements(y, z, lambda)?;
    let xy = nd_star_elements(x, y, lambda)?;
    nd_star_elements(x, &yz, lambda)?.sub(&nd_star_elements(&xy, z, lambda)?)
}

fn check_nd_eq(
    report: &mut SuiteReport,
    operation: &str,
    inputs: impl FnOnce() -> String,
    lhs: &NdElement,
    rhs: &NdElement,
) {
    report.check_true(
        operation,
        inputs,
        lhs == rhs,
        || render_nd(lhs),
        || render_nd(rhs),
    );
}

pub fn run(ctx: &SuiteCtx) -> SuiteReport {
    let mut report = SuiteReport::new("ndim", ctx);
    let b = ctx.window.min(3);
    let mut rng = suite_rng(ctx, 6);
    let lambdas = [rat(1), ratio(3, 4)];

    // Two variables: the bracket comparison sweeps the full degree box.
    for lambda in &lambdas {
        for i in 1..=2usize {
            for j in 1..=2usize {
                for_each_tuple(2, -b, b, |sigma| {
                    let sigma = sigma.to_vec();
                    for_each_tuple(2, -b, b, |nu| {
                        let ab = nd_star(i, &sigma, j, nu, lambda).expect("dimensions match");
                        let ba = nd_star(j, nu, i, &sigma, lambda).expect("dimensions match");
                        let lhs = ab.sub(&ba).expect("dimensions match");
                        let rhs = nd_bracket(
                            &NdElement::basis(i, sigma.clone()).expect("direction in range"),
                            &NdElement::basis(j, nu.to_vec()).expect("direction in range"),
                        )
                        .expect("dimensions match");
                        check_nd_eq(
                            &mut report,
                            "nd_antisymmetrization_is_bracket",
                            || format!("n=2 lambda={lambda} i={i} j={j} sigma={sigma:?} nu={nu:?}"),
                            &lhs,
                            &rhs,
                        );
                    });
                });
            }
        }
    }

    // Two variables: associator symmetry, exhaustive in the directions
    // and the third degree, sampled in the first two degrees.
    let lambda = ratio(3, 4);
    let samples = ctx.trials.max(20);
    for t in 0..samples {
        let sigma: Vec<i64> = (0..2).map(|_| rng.random_range(-b..=b)).collect();
        let nu: Vec<i64> = (0..2).map(|_| rng.random_range(-b..=b)).collect();
        for i in 1..=2usize {
            for j in 1..=2usize {
                for k in 1..=2usize {
                    for_each_tuple(2, -b, b, |rho| {
                        let x = NdElement::basis(i, sigma.clone()).expect("direction in range");
                        let y = NdElement::basis(j, nu.clone()).expect("direction in range");
                        let z = NdElement::basis(k, rho.to_vec()).expect("direction in range");
                        let lhs = associator(&x, &y, &z, &lambda).expect("dimensions match");
                        let rhs = associator(&y, &x, &z, &lambda).expect("dimensions match");
                        check_nd_eq(
                            &mut report,
                            "nd_associator_symmetry",
                            || {
                                format!(
                                "n=2 trial={t} i={i} j={j} k={k} sigma={sigma:?} nu={nu:?} rho={rho:?}"
                            )
                            },
                            &lhs,
                            &rhs,
                        );
                    });
                }
            }
        }
    }

    // Three variables: sampled bracket comparisons, and associator
    // symmetry exhaustive in directions and the third degree.
    for t in 0..samples {
        let i = rng.random_range(1..=3usize);
        let j = rng.random_range(1..=3usize);
        let sigma: Vec<i64> = (0..3).map(|_| rng.random_range(-b..=b)).collect();
        let nu: Vec<i64> = (0..3).map(|_| rng.random_range(-b..=b)).collect();
        let lambda = &lambdas[(t % 2) as usize];
        let ab = nd_star(i, &sigma, j, &nu, lambda).expect("dimensions match");
        let ba = nd_star(j, &nu, i, &sigma, lambda).expect("dimensions match");
        let lhs = ab.sub(&ba).expect("dimensions match");
        let rhs = nd_bracket(
            &NdElement::basis(i, sigma.clone()).expect("direction in range"),
            &NdElement::basis(j, nu.clone()).expect("direction in range"),
        )
        .expect("dimensions match");
        check_nd_eq(
            &mut report,
            "nd_antisymmetrization_is_bracket",
            || format!("n=3 trial={t} lambda={lambda} i={i} j={j} sigma={sigma:?} nu={nu:?}"),
            &lhs,
            &rhs,
        );
    }
    let s3 = (ctx.trials / 20).clamp(2, 10);
    for t in 0..s3 {
        let sigma: Vec<i64> = (0..3).map(|_| rng.random_range(-b..=b)).collect();
        let nu: Vec<i64> = (0..3).map(|_| rng.random_range(-b..=b)).collect();
        for i in 1..=3usize {
            for j in 1..=3usize {
                for k in 1..=3usize {
                    for_each_tuple(3, -b, b, |rho| {
                        let x = NdElement::basis(i, sigma.clone()).expect("direction in range");
                        let y = NdElement::basis(j, nu.clone()).expect("direction in range");
                        let z = NdElement::basis(k, rho.to_vec()).expect("direction in range");
                        let lhs = associator(&x, &y, &z, &lambda).expect("dimensions match");
                        let rhs = associator(&y, &x, &z, &lambda).expect("dimensions match");
                        check_nd_eq(
                            &mut report,
                            "nd_associator_symmetry",
                            || {
                                format!(
                                "n=3 trial={t} i={i} j={j} k={k} sigma={sigma:?} nu={nu:?} rho={rho:?}"
                            )
                            },
                            &lhs,
                            &rhs,
                        );
                    });
                }
            }
        }
    }

    // Mixed dimensions are rejected with an error, not a crash.
    report.check_true(
        "dimension_mismatch_rejected",
        || "n=1 against n=2".into(),
        nd_bracket(
            &NdElement::basis(1, vec![1]).expect("direction in range"),
            &NdElement::basis(1, vec![1, 2]).expect("direction in range"),
        )
        .is_err(),
        || "the bracket was accepted".into(),
        || "a dimension-mismatch error".into(),
    );
    report
}
