//! Suite reports: case counting, failure records, and the exact/numeric
//! check helpers shared by every verification suite.

use std::time::Duration;

use prelie::scalars::{rat, Rat, RatFunc};
use serde::{Deserialize, Serialize};

/// One failed check: the operation, the inputs it ran on, and the two
/// sides that should have agreed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub operation: String,
    pub inputs: String,
    pub lhs: String,
    pub rhs: String,
}

/// The outcome of one verification suite run.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub window: i64,
    pub trials: u64,
    pub seed: u64,
    /// Checks performed.
    pub cases: u64,
    pub failures: Vec<Failure>,
    /// Wall-clock time; deliberately excluded from the JSON form so that
    /// identical parameters produce byte-identical reports.
    #[serde(skip)]
    pub elapsed: Duration,
}

/// Parameters a suite runs under. `eps` switches scalar checks to
/// numeric evaluation at that rational value of the parameter, with
/// poles reported as failures.
#[derive(Debug, Clone)]
pub struct SuiteCtx {
    pub window: i64,
    pub trials: u64,
    pub seed: u64,
    pub eps: Option<Rat>,
}

impl SuiteReport {
    pub fn new(suite: &str, ctx: &SuiteCtx) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            window: ctx.window,
            trials: ctx.trials,
            seed: ctx.seed,
            cases: 0,
            failures: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn fail(&mut self, operation: &str, inputs: String, lhs: String, rhs: String) {
        self.failures.push(Failure {
            operation: operation.to_string(),
            inputs,
            lhs,
            rhs,
        });
    }

    /// Records one case that failed outright (an unexpected error from a
    /// module operation, captured instead of crashing).
    pub fn fail_case(&mut self, operation: &str, inputs: String, lhs: String, rhs: String) {
        self.cases += 1;
        self.fail(operation, inputs, lhs, rhs);
    }

    /// Checks that a scalar is exactly zero; in numeric mode the value is
    /// evaluated at the chosen parameter and a pole there is a failure.
    pub fn check_zero(
        &mut self,
        eps: &Option<Rat>,
        operation: &str,
        inputs: impl FnOnce() -> String,
        value: &RatFunc,
    ) {
        self.cases += 1;
        match eps {
            None => {
                if !value.is_zero() {
                    self.fail(operation, inputs(), value.to_string(), "0".to_string());
                }
            }
            Some(e) => match value.eval(e) {
                Ok(x) => {
                    if x != rat(0) {
                        self.fail(operation, inputs(), x.to_string(), "0".to_string());
                    }
                }
                Err(_) => self.fail(
                    operation,
                    inputs(),
                    format!("pole at eps = {e}"),
                    "a finite value".to_string(),
                ),
            },
        }
    }

    /// Checks that two scalars agree exactly (or numerically, under
    /// `eps`).
    pub fn check_eq_scalar(
        &mut self,
        eps: &Option<Rat>,
        operation: &str,
        inputs: impl FnOnce() -> String,
        lhs: &RatFunc,
        rhs: &RatFunc,
    ) {
        self.cases += 1;
        match eps {
            None => {
                if lhs != rhs {
                    self.fail(operation, inputs(), lhs.to_string(), rhs.to_string());
                }
            }
            Some(e) => match (lhs.eval(e), rhs.eval(e)) {
                (Ok(a), Ok(b)) => {
                    if a != b {
                        self.fail(operation, inputs(), a.to_string(), b.to_string());
                    }
                }
                _ => self.fail(
                    operation,
                    inputs(),
                    format!("pole at eps = {e}"),
                    "a finite value".to_string(),
                ),
            },
        }
    }

    /// Records a predicate check; `lhs`/`rhs` are rendered only on
    /// failure.
    pub fn check_true(
        &mut self,
        operation: &str,
        inputs: impl FnOnce() -> String,
        ok: bool,
        lhs: impl FnOnce() -> String,
        rhs: impl FnOnce() -> String,
    ) {
        self.cases += 1;
        if !ok {
            self.fail(operation, inputs(), lhs(), rhs());
        }
    }

    /// In numeric mode only: evaluates a quantity consulted by the suite
    /// and reports a pole as a failure. Exact runs skip this (the exact
    /// checks already cover the value).
    pub fn probe_eps(
        &mut self,
        eps: &Option<Rat>,
        operation: &str,
        inputs: impl FnOnce() -> String,
        value: &RatFunc,
    ) {
        if let Some(e) = eps {
            self.cases += 1;
            if value.eval(e).is_err() {
                self.fail(
                    operation,
                    inputs(),
                    format!("pole at eps = {e}"),
                    "a finite value".to_string(),
                );
            }
        }
    }
}

/// Deterministic per-suite generator: the user seed is mixed with a
/// per-suite salt so suites draw independent streams.
pub fn suite_rng(ctx: &SuiteCtx, salt: u64) -> rand_chacha::ChaCha8Rng {
    use rand::SeedableRng;
    rand_chacha::ChaCha8Rng::seed_from_u64(
        ctx.seed
            .wrapping_mul(0x9E37_79B9_7F4A_7C15)
            .wrapping_add(salt),
    )
}

/// Parses `"n"` or `"p/q"` into a rational.
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<num_bigint::BigInt, String> {
        t.trim()
            .parse::<num_bigint::BigInt>()
            .map_err(|_| format!("`{s}` is not an integer or a ratio p/q"))
    };
    match s.split_once('/') {
        None => Ok(Rat::from_integer(parse_int(s)?)),
        Some((p, q)) => {
            let num = parse_int(p)?;
            let den = parse_int(q)?;
            if den == num_bigint::BigInt::ZERO {
                return Err(format!("`{s}` has a zero denominator"));
            }
            Ok(Rat::new(num, den))
        }
    }
}

/// Visits every tuple in `[lo, hi]^arity` (odometer order).
pub fn for_each_tuple(arity: usize, lo: i64, hi: i64, mut f: impl FnMut(&[i64])) {
    if arity == 0 {
        f(&[]);
        return;
    }
    let mut tuple = vec![lo; arity];
    loop {
        f(&tuple);
        let mut slot = arity;
        loop {
            if slot == 0 {
                return;
            }
            slot -= 1;
            if tuple[slot] < hi {
                tuple[slot] += 1;
                break;
            }
            tuple[slot] = lo;
        }
    }
}
