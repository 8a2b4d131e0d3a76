//! Chains against cochains: the boundary operator is the exact transpose
//! of the coboundary under the pairing, and it squares to zero.

use prelie::complex::{
    boundary, duality_residual, Chain, Cochain, ModuleTag, ModuleValue, RightAction,
};
use prelie::graded::StructureFamily;
use prelie::scalars::{rat, ratio, RatFunc};

use rand::Rng;

use crate::report::{suite_rng, SuiteCtx, SuiteReport};

pub fn run(ctx: &SuiteCtx) -> SuiteReport {
    let mut report = SuiteReport::new("homology", ctx);
    let fam = StructureFamily::VirasoroEps;
    let mut rng = suite_rng(ctx, 4);
    let pool = [rat(1), rat(-1), rat(2), ratio(1, 2), ratio(-3, 2)];
    let w = ctx.window;

    for t in 0..ctx.trials {
        let m = 2 + (t % 3) as usize;
        let mut chain = Chain::new(m, 2).expect("arity >= 2 admits kappa 2");
        for _ in 0..3 {
            let m0 = rng.random_range(-w..=w);
            let tuple: Vec<i64> = (0..m).map(|_| rng.random_range(-w..=w)).collect();
            let c = RatFunc::from_rat(pool[rng.random_range(0..pool.len())].clone());
            chain.insert_skew(m0, &tuple, &c);
        }
        let pk = if m > 2 { 2 } else { 0 };
        let mut psi = Cochain::new(m - 1, pk, ModuleTag::Scalar).expect("valid kappa");
        for _ in 0..3 {
            let tuple: Vec<i64> = (0..m - 1).map(|_| rng.random_range(-w..=w)).collect();
            let c = RatFunc::from_rat(pool[rng.random_range(0..pool.len())].clone());
            psi.insert(&tuple, ModuleValue::Scalar(c));
        }

        match duality_residual(&chain, &psi, &fam) {
            Ok(r) => report.check_zero(
                &ctx.eps,
                "duality_residual",
                || format!("trial={t} chain_arity={m}"),
                &r,
            ),
            Err(e) => report.fail_case(
                "duality_residual",
                format!("trial={t} chain_arity={m}"),
                format!("error: {e}"),
                "a scalar residual".into(),
            ),
        }

        match boundary(&chain, &fam, &RightAction::Trivial)
            .and_then(|b| boundary(&b, &fam, &RightAction::Trivial))
        {
            Ok(bb) => report.check_true(
                "double_boundary",
                || format!("trial={t} chain_arity={m}"),
                bb.is_zero(),
                || "a nonzero chain".into(),
                || "0".into(),
            ),
            Err(e) => report.fail_case(
                "double_boundary",
                format!("trial={t} chain_arity={m}"),
                format!("error: {e}"),
                "the zero chain".into(),
            ),
        }
    }

    // Arity mismatches surface as errors, not crashes.
    let chain = Chain::new(3, 2).expect("valid kappa");
    let psi = Cochain::constant(ModuleValue::Scalar(RatFunc::one()));
    report.check_true(
        "arity_mismatch_rejected",
        || "chain arity 3 against cochain arity 0".into(),
        duality_residual(&chain, &psi, &fam).is_err(),
        || "the pairing was accepted".into(),
        || "an arity-mismatch error".into(),
    );
    report
}
