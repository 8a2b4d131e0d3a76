//! The impossibility argument: no associative graded product
//! `e_i e_j = g(i, j) e_{i+j}` has the degree-difference commutator
//! `g(i, j) - g(j, i) = i - j`.
//!
//! The derivation is a finite constraint propagation, not a search.
//! Writing associativity as `g(i,j) g(i+j,k) = g(j,k) g(i,j+k)` and
//! specializing `j = k = 0` and then `j = i = 0` forces, over a
//! coefficient ring with no zero divisors,
//!
//! ```text
//! g(r, 0) in {0, g00}    and    g(0, r) in {0, g00},   g00 = g(0, 0),
//! ```
//!
//! so the difference `g(r,0) - g(0,r)` lies in `{0, g00, -g00}` for every
//! degree `r`. The boundary condition demands that this difference equal
//! `r`; two nonzero degrees `r1 != +-r2` therefore pin `g00` to two
//! disjoint candidate sets, and no product exists. [`no_associative_witness`]
//! replays the chain on a concrete degree window and returns it as a
//! structured [`ProofTrace`].

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::FindimError;

/// One step of the derivation chain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    /// A short tag for the specialization performed.
    pub rule: String,
    /// The constraint obtained.
    pub claim: String,
}

/// The terminal contradiction: the candidate sets for `g(0,0)` forced by
/// the two chosen degrees are disjoint.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Contradiction {
    pub r1: i64,
    pub r2: i64,
    /// Values of `g(0,0)` compatible with the boundary condition at `r1`.
    pub candidates_from_r1: Vec<i64>,
    /// Values of `g(0,0)` compatible with the boundary condition at `r2`.
    pub candidates_from_r2: Vec<i64>,
    pub conclusion: String,
}

/// A machine-checkable replay of the impossibility argument.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofTrace {
    /// Standing hypotheses, including the no-zero-divisors assumption on
    /// the coefficient ring (the argument is stated over a field; rings
    /// with zero divisors are out of scope).
    pub assumptions: Vec<String>,
    pub steps: Vec<TraceStep>,
    pub contradiction: Contradiction,
}

/// The candidate values of `g(0,0)` forced by the boundary condition at a
/// nonzero degree `r`, branching over the four membership combinations of
/// `g(r,0) in {0, g00}` and `g(0,r) in {0, g00}`.
fn g00_candidates(r: i64) -> Vec<i64> {
    let mut out = BTreeSet::new();
    // (0, 0) and (g00, g00): difference 0, needs r = 0 — impossible.
    // (g00, 0): difference g00, needs g00 = r.
    out.insert(r);
    // (0, g00): difference -g00, needs g00 = -r.
    out.insert(-r);
    out.into_iter().collect()
}

/// Replays the impossibility derivation over a degree window.
///
/// The window must contain `0` and two distinct nonzero degrees `r1, r2`
/// with `r1 != +-r2`; otherwise the hypothesis fails with
/// [`FindimError::WindowTooSmall`]. On success the returned trace ends in
/// a [`Contradiction`] whose candidate sets are disjoint.
pub fn no_associative_witness(window: &[i64]) -> Result<ProofTrace, FindimError> {
    let degrees: BTreeSet<i64> = window.iter().copied().collect();
    if !degrees.contains(&0) {
        return Err(FindimError::WindowTooSmall(
            "the degree window must contain 0".into(),
        ));
    }
    let nonzero: Vec<i64> = degrees.iter().copied().filter(|&r| r != 0).collect();
    let mut pair = None;
    'search: for (idx, &r1) in nonzero.iter().enumerate() {
        for &r2 in &nonzero[idx + 1..] {
            if r1 != r2 && r1 != -r2 {
                pair = Some((r1, r2));
                break 'search;
            }
        }
    }
    let Some((r1, r2)) = pair else {
        return Err(FindimError::WindowTooSmall(
            "need two distinct nonzero degrees r1, r2 with r1 != +-r2".into(),
        ));
    };

    let mut steps = vec![
        TraceStep {
            rule: "rewrite boundary".into(),
            claim: "g(i,j) - g(j,i) = i - j for all degrees i, j".into(),
        },
        TraceStep {
            rule: "rewrite associativity".into(),
            claim: "g(i,j) g(i+j,k) = g(j,k) g(i,j+k) for all degrees i, j, k".into(),
        },
        TraceStep {
            rule: "specialize j = k = 0".into(),
            claim: "g(i,0) [g(i,0) - g(0,0)] = 0, hence g(i,0) in {0, g00}".into(),
        },
        TraceStep {
            rule: "specialize j = i = 0".into(),
            claim: "g(0,k) [g(0,k) - g(0,0)] = 0, hence g(0,k) in {0, g00}".into(),
        },
        TraceStep {
            rule: "combine".into(),
            claim: "g(r,0) - g(0,r) in {0, g00, -g00} for every degree r".into(),
        },
    ];
    for r in [r1, r2] {
        let candidates = g00_candidates(r);
        steps.push(TraceStep {
            rule: format!("boundary at r = {r}"),
            claim: format!(
                "g({r},0) - g(0,{r}) = {r} != 0 forces g00 in {candidates:?} \
                 (branches (0,0) and (g00,g00) give difference 0, excluded)"
            ),
        });
    }

    let candidates_from_r1 = g00_candidates(r1);
    let candidates_from_r2 = g00_candidates(r2);
    debug_assert!(candidates_from_r1
        .iter()
        .all(|c| !candidates_from_r2.contains(c)));

    Ok(ProofTrace {
        assumptions: vec![
            "a graded product e_i e_j = g(i,j) e_{i+j} with commutator coefficient i - j".into(),
            "associativity of the product".into(),
            "the coefficient ring has no zero divisors (we work over a field); \
             rings with zero divisors are out of scope"
                .into(),
        ],
        steps,
        contradiction: Contradiction {
            r1,
            r2,
            candidates_from_r1,
            candidates_from_r2,
            conclusion: format!(
                "no single value g(0,0) lies in both {{{r1}, {}}} and {{{r2}, {}}}; \
                 the boundary and associativity conditions are jointly unsatisfiable",
                -r1, -r2
            ),
        },
    })
}
