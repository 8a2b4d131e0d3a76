//! The verification suites behind `prelie verify`: each runs a battery of
//! exact identity checks and returns a [`SuiteReport`].

pub mod appendix;
pub mod cocycle;
pub mod complexsuite;
pub mod cotangent;
pub mod diffalg;
pub mod graded;
pub mod homology;
pub mod ndim;

use std::time::Instant;

use crate::report::{SuiteCtx, SuiteReport};

/// Suite names in the order `verify all` runs them.
pub const SUITE_NAMES: [&str; 10] = [
    "graded",
    "cocycle",
    "complex",
    "homology",
    "diffalg",
    "ndim",
    "appendix1",
    "appendix2",
    "appendix3",
    "cotangent",
];

fn run_one(name: &str, ctx: &SuiteCtx) -> Option<SuiteReport> {
    let start = Instant::now();
    let mut report = match name {
        "graded" => graded::run(ctx),
        "cocycle" => cocycle::run(ctx),
        "complex" => complexsuite::run(ctx),
        "homology" => homology::run(ctx),
        "diffalg" => diffalg::run(ctx),
        "ndim" => ndim::run(ctx),
        "appendix1" => appendix::run_appendix1(ctx),
        "appendix2" => appendix::run_appendix2(ctx),
        "appendix3" => appendix::run_appendix3(ctx),
        "cotangent" => cotangent::run(ctx),
        _ => return None,
    };
    report.elapsed = start.elapsed();
    Some(report)
}

/// Runs one suite by name, or every suite in order for `"all"`. `None`
/// for an unknown name.
pub fn run_suite(name: &str, ctx: &SuiteCtx) -> Option<Vec<SuiteReport>> {
    if name == "all" {
        return Some(
            SUITE_NAMES
                .iter()
                .map(|s| run_one(s, ctx).expect("listed suites all dispatch"))
                .collect(),
        );
    }
    run_one(name, ctx).map(|r| vec![r])
}
