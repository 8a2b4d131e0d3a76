//! Coboundary sweeps: the double coboundary vanishes identically for the
//! zero action and for every table action passing the strong
//! compatibility law, while the left-multiplication action — a Lie
//! representation only — admits an explicit nonvanishing witness.

use std::cell::RefCell;
use std::collections::{BTreeMap, BTreeSet, HashMap};

use prelie::complex::{
    check_representation, delta, delta_squared_residual, search_strong_reps, Cochain, CochainEval,
    ModuleTag, ModuleValue, RepCheckMode, Representation,
};
use prelie::graded::{GradedElement, StructureFamily, TableEntry};
use prelie::scalars::{rat, ratio, Rat, RatFunc};
use rand::Rng;

use crate::report::{for_each_tuple, suite_rng, SuiteCtx, SuiteReport};

fn pool() -> Vec<Rat> {
    vec![rat(1), rat(-1), rat(2), ratio(1, 2), ratio(-3, 2), rat(3)]
}

/// The one-parameter family restricted to a finite lookup table covering
/// every structure constant a window-`ew` double-coboundary sweep can
/// consult: probe entries are bounded by `ew` and merge once before any
/// coefficient pairs them, so arguments stay within `3 * ew`.
fn table_family(ew: i64) -> StructureFamily {
    let src = StructureFamily::VirasoroEps;
    let bound = 3 * ew;
    let mut entries = Vec::new();
    for p in -bound..=bound {
        for q in -bound..=bound {
            entries.push(TableEntry {
                p,
                q,
                ratfunc: src.coeff(p, q),
            });
        }
    }
    StructureFamily::table_from_entries(entries)
}

fn random_cochain(
    rng: &mut impl Rng,
    arity: usize,
    tag: ModuleTag,
    window: i64,
    pool: &[Rat],
) -> Cochain {
    let kappa = if arity >= 2 { 2 } else { 0 };
    let mut psi = Cochain::new(arity, kappa, tag).expect("arity >= 2 admits kappa 2");
    let entries = if arity >= 4 { 2 } else { 3 };
    for _ in 0..entries {
        // Probe sums are conserved term-by-term, so support tuples with
        // distinct coordinate sums never interact; at the widest arity,
        // drawing both tuples from the sum-zero slice makes them meet in
        // the same probes and keeps the sweep to a single interesting sum.
        let tuple: Vec<i64> = if arity >= 4 {
            loop {
                let head: Vec<i64> = (0..arity - 1)
                    .map(|_| rng.random_range(-window..=window))
                    .collect();
                let last = -head.iter().sum::<i64>();
                if last.abs() <= window {
                    break head.into_iter().chain([last]).collect();
                }
            }
        } else {
            (0..arity)
                .map(|_| rng.random_range(-window..=window))
                .collect()
        };
        let c = RatFunc::from_rat(pool[rng.random_range(0..pool.len())].clone());
        let value = match tag {
            ModuleTag::Scalar => ModuleValue::Scalar(c),
            ModuleTag::Graded => {
                ModuleValue::Graded(GradedElement::term(rng.random_range(-2..=2), c))
            }
        };
        psi.insert(&tuple, value);
    }
    psi
}

fn render_value(v: &ModuleValue) -> String {
    match v {
        ModuleValue::Scalar(s) => s.to_string(),
        ModuleValue::Graded(g) => g.to_string(),
    }
}

/// Sweeps `delta(delta(psi))` over the window and reports the first
/// nonzero value, if any.
///
/// Under a zero action (the trivial representation or an empty action
/// table) every term of the double coboundary either evaluates `psi` at a
/// tuple carrying the probe tuple's coordinate sum (merge and bracket
/// terms preserve it) or is an action on some value, which the zero
/// action annihilates. Probes whose sum misses every support sum are
/// therefore zero term by term and are skipped without evaluation.
/// Caches another evaluator's basis values: the outer coboundary probes
/// the inner one at the same tuples many thousands of times across a
/// sweep, and the evaluation is pure.
struct Memo<'a, C: CochainEval> {
    inner: &'a C,
    cache: RefCell<HashMap<Vec<i64>, ModuleValue>>,
}

impl<'a, C: CochainEval> Memo<'a, C> {
    fn new(inner: &'a C) -> Self {
        Memo {
            inner,
            cache: RefCell::new(HashMap::new()),
        }
    }
}

impl<C: CochainEval> CochainEval for Memo<'_, C> {
    fn arity(&self) -> usize {
        self.inner.arity()
    }

    fn kappa(&self) -> usize {
        self.inner.kappa()
    }

    fn module_tag(&self) -> ModuleTag {
        self.inner.module_tag()
    }

    fn eval_basis(&self, tuple: &[i64]) -> ModuleValue {
        if let Some(v) = self.cache.borrow().get(tuple) {
            return v.clone();
        }
        let v = self.inner.eval_basis(tuple);
        self.cache.borrow_mut().insert(tuple.to_vec(), v.clone());
        v
    }
}

fn delta_squared_sweep(
    psi: &Cochain,
    rep: &Representation,
    fam: &StructureFamily,
    ew: i64,
) -> Result<Option<(Vec<i64>, ModuleValue)>, String> {
    let sums: BTreeSet<i64> = psi.entries().map(|(t, _)| t.iter().sum()).collect();
    if sums.is_empty() {
        // The zero cochain: its double coboundary is zero everywhere;
        // spot-check the origin tuple.
        let tuple = vec![0i64; psi.arity() + 2];
        let v = delta_squared_residual(psi, rep, fam, &tuple).map_err(|e| e.to_string())?;
        return Ok(if v.is_zero() { None } else { Some((tuple, v)) });
    }
    let d1 = delta(psi, rep, fam).map_err(|e| e.to_string())?;
    let memo = Memo::new(&d1);
    let d2 = delta(&memo, rep, fam).map_err(|e| e.to_string())?;
    let mut first_bad: Option<(Vec<i64>, ModuleValue)> = None;
    for_each_tuple(psi.arity() + 2, -ew, ew, |tuple| {
        if first_bad.is_some() {
            return;
        }
        let s: i64 = tuple.iter().sum();
        if !sums.contains(&s) {
            return;
        }
        let v = d2.eval_basis(tuple);
        if !v.is_zero() {
            first_bad = Some((tuple.to_vec(), v));
        }
    });
    Ok(first_bad)
}

/// Searches the left-multiplication action for a probe where the double
/// coboundary of a constant cochain fails to vanish: returns the module
/// degree and the probe pair.
pub fn left_mult_witness(fam: &StructureFamily, window: i64) -> Option<(i64, i64, i64)> {
    let rep = Representation::LeftMult(fam.clone());
    for d in -2..=2 {
        let psi = Cochain::constant(ModuleValue::Graded(GradedElement::basis(d)));
        for p in -window..=window {
            for q in -window..=window {
                let v = delta_squared_residual(&psi, &rep, fam, &[p, q]).ok()?;
                if !v.is_zero() {
                    return Some((d, p, q));
                }
            }
        }
    }
    None
}

pub fn run(ctx: &SuiteCtx) -> SuiteReport {
    let mut report = SuiteReport::new("complex", ctx);
    let ew = ctx.window.min(6);
    let fam = table_family(ew);
    let exact_fam = StructureFamily::VirasoroEps;
    let pool = pool();
    let mut rng = suite_rng(ctx, 3);

    // The strong compatibility law pins the action table down completely
    // on a window: the solver must terminate with the zero table among
    // its solutions.
    let search = search_strong_reps(&exact_fam, 2);
    report.check_true(
        "strong_rep_search_resolved",
        || "window=2".into(),
        search.unresolved_branches == 0,
        || format!("{} unresolved branches", search.unresolved_branches),
        || "0".into(),
    );
    report.check_true(
        "strong_rep_search_contains_zero_table",
        || "window=2".into(),
        search.solutions.iter().any(|s| s.is_empty()),
        || format!("{} solutions, none empty", search.solutions.len()),
        || "the zero table".into(),
    );

    let mut reps: Vec<(String, Representation)> =
        vec![("trivial".to_string(), Representation::Trivial)];
    for (i, table) in search.solutions.iter().enumerate() {
        reps.push((
            format!("strong_table_{i}"),
            Representation::GradedTable(table.clone()),
        ));
    }
    // Every table the search returned must actually pass the strong law.
    for (name, rep) in reps.iter().skip(1) {
        let check = check_representation(rep, &exact_fam, RepCheckMode::Strong, ctx.window.min(3));
        report.check_true(
            "strong_law_check",
            || format!("rep={name} window={}", ctx.window.min(3)),
            check.ok(),
            || format!("counterexample {:?}", check.counterexample),
            || "no counterexample".into(),
        );
    }

    // Seeded double-coboundary sweeps: most trials at arity 2, the rest
    // split between arities 3 and 4.
    let t3 = ctx.trials * 16 / 100;
    let t4 = ctx.trials * 4 / 100;
    let t2 = ctx.trials - t3 - t4;
    for t in 0..ctx.trials {
        let arity = if t < t2 {
            2
        } else if t < t2 + t3 {
            3
        } else {
            4
        };
        let (rep_name, rep) = &reps[(t as usize) % reps.len()];
        let tag = match rep.module_tag() {
            None => ModuleTag::Scalar,
            Some(tag) => tag,
        };
        let psi = random_cochain(&mut rng, arity, tag, ctx.window, &pool);
        match delta_squared_sweep(&psi, rep, &fam, ew) {
            Ok(first_bad) => report.check_true(
                "delta_squared_sweep",
                || format!("trial={t} arity={arity} rep={rep_name} window={ew}"),
                first_bad.is_none(),
                || match &first_bad {
                    Some((tuple, v)) => format!("value {} at tuple {tuple:?}", render_value(v)),
                    None => unreachable!("rendered only on failure"),
                },
                || "0 at every probe tuple".into(),
            ),
            Err(e) => report.fail_case(
                "delta_squared_sweep",
                format!("trial={t} arity={arity} rep={rep_name} window={ew}"),
                format!("error: {e}"),
                "a module value".into(),
            ),
        }
    }

    // The left-multiplication action satisfies the commutator law but not
    // the strong law, and its double coboundary does not vanish: the
    // suite fails outright if no witness exists in window 4.
    let lw = ctx.window.min(4);
    let left = Representation::LeftMult(exact_fam.clone());
    let lie = check_representation(&left, &exact_fam, RepCheckMode::Lie, ctx.window.min(3));
    report.check_true(
        "left_mult_lie_law",
        || format!("window={}", ctx.window.min(3)),
        lie.ok(),
        || format!("counterexample {:?}", lie.counterexample),
        || "no counterexample".into(),
    );
    let strong = check_representation(&left, &exact_fam, RepCheckMode::Strong, ctx.window.min(3));
    report.check_true(
        "left_mult_strong_law_fails",
        || format!("window={}", ctx.window.min(3)),
        !strong.ok(),
        || "no counterexample found".into(),
        || "a strong-law counterexample".into(),
    );
    let witness = left_mult_witness(&exact_fam, lw);
    report.check_true(
        "left_mult_delta_squared_witness",
        || format!("window={lw}"),
        witness.is_some(),
        || "no probe with nonzero double coboundary".into(),
        || "a witness tuple".into(),
    );

    // Module mismatches are rejected up front rather than crashing.
    let scalar_psi = Cochain::constant(ModuleValue::Scalar(RatFunc::one()));
    let table_rep = Representation::GradedTable(BTreeMap::new());
    report.check_true(
        "module_mismatch_rejected",
        || "scalar cochain under a graded-table action".into(),
        delta(&scalar_psi, &table_rep, &exact_fam).is_err(),
        || "the coboundary was accepted".into(),
        || "a module-mismatch error".into(),
    );
    report
}
