//! Exact search for graded-table representations satisfying the strong
//! law on a window.
//!
//! On basis elements the strong law `chi(a * b) = chi(a)chi(b)` becomes
//! the quadratic system
//!
//! ```text
//! f(p, q) g(p+q, r) = g(p, q+r) g(q, r)
//! ```
//!
//! over the unknowns `g(p, q)` with `p, q` in the window, one equation
//! per in-window triple `(p, q, r)`. Index pairs leaving the window refer
//! to absent table entries and are fixed at zero (tables extend by zero),
//! so the system is exactly what `check_representation` sweeps. The
//! solver runs constraint propagation (zero/nonzero/value states) with
//! case splitting on undetermined zero-product constraints, under a
//! branch budget. Every returned table is re-verified against the full
//! equation list, so the output is unconditionally sound; completeness is
//! NOT claimed — branches cut by the budget, and branches whose remaining
//! freedom is a continuum (a nonzero product pinned only up to scaling),
//! are tallied in [`StrongRepSearch::unresolved_branches`].

use std::collections::BTreeMap;

use crate::graded::StructureFamily;
use crate::scalars::RatFunc;

/// Outcome of [`search_strong_reps`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrongRepSearch {
    /// The window the system was built over.
    pub window: i64,
    /// Fully determined solution tables (nonzero entries only; the empty
    /// table is the zero representation). Each is verified against every
    /// equation of the windowed system.
    pub solutions: Vec<BTreeMap<(i64, i64), RatFunc>>,
    /// Branches abandoned without a verdict: cut by the branch budget or
    /// left with continuum freedom.
    pub unresolved_branches: usize,
    /// Branch nodes explored.
    pub explored_branches: usize,
}

#[derive(Debug, Clone, PartialEq)]
enum VarState {
    Unknown,
    NonZero,
    Known(RatFunc), // Known(0) means the variable is zero
}

/// One instance of `a * x = y * z`. A missing `x` or `y` is an
/// out-of-window table entry, structurally zero. (`z = g(q, r)` always
/// lies in the window.)
#[derive(Debug, Clone)]
struct Equation {
    a: RatFunc,       // f(p, q)
    x: Option<usize>, // g(p+q, r)
    y: Option<usize>, // g(p, q+r)
    z: usize,         // g(q, r)
}

#[derive(Debug, Clone, PartialEq)]
enum Side {
    Known(RatFunc),
    NonZero,
    Open,
}

const BRANCH_BUDGET: usize = 4096;

/// Searches for graded tables `g` on `[-window, window]^2`, extended by
/// zero, satisfying the strong law at every triple `(p, q, r)` in the
/// window. The zero table always satisfies the system and is always
/// found.
///
/// # Panics
///
/// Panics when `window < 1`.
pub fn search_strong_reps(fam: &StructureFamily, window: i64) -> StrongRepSearch {
    assert!(window >= 1, "window must be at least 1");
    let w = window;
    let side = (2 * w + 1) as usize;
    let nvars = side * side;
    let var = |p: i64, q: i64| -> Option<usize> {
        (p.abs() <= w && q.abs() <= w).then(|| ((p + w) as usize) * side + ((q + w) as usize))
    };

    let mut equations = Vec::new();
    for p in -w..=w {
        for q in -w..=w {
            let a = fam.coeff(p, q);
            for r in -w..=w {
                let x = var(p + q, r);
                let y = var(p, q + r);
                let z = var(q, r).expect("q, r in window");
                // structurally 0 = 0: nothing to say
                if (a.is_zero() || x.is_none()) && y.is_none() {
                    continue;
                }
                equations.push(Equation {
                    a: a.clone(),
                    x,
                    y,
                    z,
                });
            }
        }
    }

    let mut search = Search {
        equations,
        solutions: Vec::new(),
        unresolved: 0,
        explored: 0,
    };
    search.solve(vec![VarState::Unknown; nvars]);

    let tables = search
        .solutions
        .iter()
        .map(|assignment| {
            let mut table = BTreeMap::new();
            for p in -w..=w {
                for q in -w..=w {
                    let v = var(p, q).expect("in window");
                    if let VarState::Known(val) = &assignment[v] {
                        if !val.is_zero() {
                            table.insert((p, q), val.clone());
                        }
                    }
                }
            }
            table
        })
        .collect::<Vec<_>>();
    let mut deduped: Vec<BTreeMap<(i64, i64), RatFunc>> = Vec::new();
    for t in tables {
        if !deduped.contains(&t) {
            deduped.push(t);
        }
    }
    StrongRepSearch {
        window,
        solutions: deduped,
        unresolved_branches: search.unresolved,
        explored_branches: search.explored,
    }
}

struct Search {
    equations: Vec<Equation>,
    solutions: Vec<Vec<VarState>>,
    unresolved: usize,
    explored: usize,
}

impl Search {
    fn solve(&mut self, mut state: Vec<VarState>) {
        self.explored += 1;
        if self.explored > BRANCH_BUDGET {
            self.unresolved += 1;
            return;
        }
        if self.propagate(&mut state).is_err() {
            return; // inconsistent branch
        }
        match self.pick_branch_var(&state) {
            Pick::AllSatisfied => {
                // complete: set leftover Unknowns to 0 and leftover
                // NonZeros to 1 (their exact value is masked by zero
                // partners in every equation), then re-verify
                let mut full = state;
                for s in &mut full {
                    match s {
                        VarState::Unknown => *s = VarState::Known(RatFunc::zero()),
                        VarState::NonZero => *s = VarState::Known(RatFunc::one()),
                        VarState::Known(_) => {}
                    }
                }
                if self.verify(&full) {
                    self.solutions.push(full);
                }
            }
            Pick::Branch(v) => {
                let mut zero_branch = state.clone();
                zero_branch[v] = VarState::Known(RatFunc::zero());
                self.solve(zero_branch);
                let mut nonzero_branch = state;
                nonzero_branch[v] = VarState::NonZero;
                self.solve(nonzero_branch);
            }
            Pick::Continuum => {
                self.unresolved += 1;
            }
        }
    }

    /// Runs propagation to a fixpoint. `Err(())` marks inconsistency.
    fn propagate(&self, state: &mut [VarState]) -> Result<(), ()> {
        loop {
            let mut changed = false;
            for eq in &self.equations {
                changed |= step(eq, state)?;
            }
            if !changed {
                return Ok(());
            }
        }
    }

    /// Chooses what to do after a fixpoint: report full satisfaction,
    /// branch on an undetermined variable of an unsatisfied equation, or
    /// give up on a continuum of solutions.
    fn pick_branch_var(&self, state: &[VarState]) -> Pick {
        let mut fallback: Option<Pick> = None;
        for eq in &self.equations {
            if satisfied(eq, state) {
                continue;
            }
            for v in [eq.y, Some(eq.z), eq.x].into_iter().flatten() {
                if matches!(state[v], VarState::Unknown) {
                    return Pick::Branch(v);
                }
            }
            // unsatisfied with no Unknown variable: values exist but are
            // pinned only up to scaling — a continuum, not enumerable
            fallback.get_or_insert(Pick::Continuum);
        }
        fallback.unwrap_or(Pick::AllSatisfied)
    }

    fn verify(&self, state: &[VarState]) -> bool {
        self.equations.iter().all(|eq| satisfied(eq, state))
    }
}

enum Pick {
    AllSatisfied,
    Branch(usize),
    Continuum,
}

fn known(state: &[VarState], v: usize) -> Option<&RatFunc> {
    match &state[v] {
        VarState::Known(val) => Some(val),
        _ => None,
    }
}

fn satisfied(eq: &Equation, state: &[VarState]) -> bool {
    let lhs = lhs_side(eq, state);
    let rhs = rhs_side(eq, state);
    matches!((lhs, rhs), (Side::Known(a), Side::Known(b)) if a == b)
}

fn lhs_side(eq: &Equation, state: &[VarState]) -> Side {
    let x = match eq.x {
        Some(x) if !eq.a.is_zero() => x,
        _ => return Side::Known(RatFunc::zero()),
    };
    match &state[x] {
        VarState::Known(v) => Side::Known(&eq.a * v),
        VarState::NonZero => Side::NonZero,
        VarState::Unknown => Side::Open,
    }
}

fn rhs_side(eq: &Equation, state: &[VarState]) -> Side {
    let y = match eq.y {
        Some(y) => &state[y],
        None => return Side::Known(RatFunc::zero()),
    };
    let z = &state[eq.z];
    if let Some(v) = known_zero(y).or(known_zero(z)) {
        return Side::Known(v);
    }
    match (y, z) {
        (VarState::Known(a), VarState::Known(b)) => Side::Known(a * b),
        (VarState::Known(_) | VarState::NonZero, VarState::Known(_) | VarState::NonZero) => {
            Side::NonZero
        }
        _ => Side::Open,
    }
}

fn known_zero(s: &VarState) -> Option<RatFunc> {
    match s {
        VarState::Known(v) if v.is_zero() => Some(RatFunc::zero()),
        _ => None,
    }
}

/// Unifies a variable with a new state. `Err(())` marks inconsistency.
fn assign(state: &mut [VarState], v: usize, new: VarState) -> Result<bool, ()> {
    let merged = match (&state[v], &new) {
        (VarState::Unknown, _) => new.clone(),
        (_, VarState::Unknown) => return Ok(false),
        (VarState::NonZero, VarState::NonZero) => return Ok(false),
        (VarState::NonZero, VarState::Known(val)) => {
            if val.is_zero() {
                return Err(());
            }
            new.clone()
        }
        (VarState::Known(val), VarState::NonZero) => {
            if val.is_zero() {
                return Err(());
            }
            return Ok(false);
        }
        (VarState::Known(a), VarState::Known(b)) => {
            if a == b {
                return Ok(false);
            }
            return Err(());
        }
    };
    state[v] = merged;
    Ok(true)
}

/// One propagation step on one equation. Returns whether anything changed.
///
/// Whenever a side is `NonZero` or `Open`, the variables it consulted are
/// live (present in the window), so the unwraps below cannot fire.
fn step(eq: &Equation, state: &mut [VarState]) -> Result<bool, ()> {
    let lhs = lhs_side(eq, state);
    let rhs = rhs_side(eq, state);
    match (lhs, rhs) {
        (Side::Known(a), Side::Known(b)) => {
            if a == b {
                Ok(false)
            } else {
                Err(())
            }
        }
        (Side::Known(a), Side::NonZero) => {
            if a.is_zero() {
                return Err(());
            }
            // rhs nonzero with value a: pin the factor lacking a value
            let y = eq.y.expect("rhs consulted y");
            if let Some(vy) = known(state, y).cloned() {
                let want = a.checked_div(&vy).expect("vy nonzero");
                return assign(state, eq.z, VarState::Known(want));
            }
            if let Some(vz) = known(state, eq.z).cloned() {
                let want = a.checked_div(&vz).expect("vz nonzero");
                return assign(state, y, VarState::Known(want));
            }
            Ok(false) // both factors NonZero without values: pending
        }
        (Side::NonZero, Side::Known(b)) => {
            if b.is_zero() {
                return Err(());
            }
            // a*x = b with a, b known nonzero: x = b/a
            let want = b.checked_div(&eq.a).expect("a nonzero");
            assign(state, eq.x.expect("lhs consulted x"), VarState::Known(want))
        }
        (Side::Known(a), Side::Open) => {
            let y = eq.y.expect("rhs consulted y");
            if a.is_zero() {
                // y*z = 0: kill the partner of a nonzero factor
                let y_nonzero = matches!(&state[y], VarState::NonZero)
                    || known(state, y).is_some_and(|v| !v.is_zero());
                let z_nonzero = matches!(&state[eq.z], VarState::NonZero)
                    || known(state, eq.z).is_some_and(|v| !v.is_zero());
                if y_nonzero {
                    return assign(state, eq.z, VarState::Known(RatFunc::zero()));
                }
                if z_nonzero {
                    return assign(state, y, VarState::Known(RatFunc::zero()));
                }
                Ok(false) // stall: branch candidate
            } else {
                // y*z equals a nonzero value: both factors are nonzero,
                // and a lone unknown factor is pinned by a known partner
                if let Some(vy) = known(state, y).cloned() {
                    let want = a.checked_div(&vy).expect("vy nonzero");
                    return assign(state, eq.z, VarState::Known(want));
                }
                if let Some(vz) = known(state, eq.z).cloned() {
                    let want = a.checked_div(&vz).expect("vz nonzero");
                    return assign(state, y, VarState::Known(want));
                }
                let c1 = assign(state, y, VarState::NonZero)?;
                let c2 = assign(state, eq.z, VarState::NonZero)?;
                Ok(c1 || c2)
            }
        }
        (Side::Open, Side::Known(b)) => {
            // a != 0 (else lhs were Known) and x unknown: x = b/a
            let want = b.checked_div(&eq.a).expect("a nonzero");
            assign(state, eq.x.expect("lhs consulted x"), VarState::Known(want))
        }
        (Side::Open, Side::NonZero) => {
            assign(state, eq.x.expect("lhs consulted x"), VarState::NonZero)
        }
        (Side::NonZero, Side::Open) => {
            let y = eq.y.expect("rhs consulted y");
            let c1 = assign(state, y, VarState::NonZero)?;
            let c2 = assign(state, eq.z, VarState::NonZero)?;
            Ok(c1 || c2)
        }
        (Side::NonZero, Side::NonZero) | (Side::Open, Side::Open) => Ok(false),
    }
}
