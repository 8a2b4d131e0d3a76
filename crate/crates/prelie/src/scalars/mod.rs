//! Exact scalar arithmetic: rationals, polynomials in `eps`, and the
//! rational-function field `Q(eps)`.
//!
//! Everything in this crate computes over the field of rational functions in
//! a single formal parameter `eps` with arbitrary-precision rational
//! coefficients. The tower is:
//!
//! - [`Rat`], arbitrary-precision rationals (always stored reduced),
//! - [`EpsPoly`], finitely supported polynomials in `eps` over [`Rat`],
//! - [`RatFunc`], quotients of two [`EpsPoly`] values in canonical form.
//!
//! `RatFunc` equality is decidable because every value is kept canonical
//! (coprime numerator and denominator, monic denominator), so "is this
//! residual zero" is an exact structural test. There is no floating point
//! and no tolerance anywhere.

mod poly;
mod ratfunc;

pub use poly::EpsPoly;
pub use ratfunc::RatFunc;

use thiserror::Error;

/// Arbitrary-precision integer.
pub type Int = num_bigint::BigInt;

/// Arbitrary-precision rational, stored with gcd(num, den) = 1 and den > 0.
pub type Rat = num_rational::BigRational;

/// Errors from scalar construction and evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    /// A rational function was built with a zero denominator.
    #[error("zero denominator in rational function")]
    ZeroDenominator,
    /// Division of scalars by an exact zero.
    #[error("division by zero")]
    DivisionByZero,
    /// Evaluation at a rational point where the denominator vanishes.
    #[error("denominator vanishes at eps = {0}")]
    PoleAtEpsilon(Rat),
    /// A string did not parse as an exact rational.
    #[error("cannot parse {0:?} as a rational number")]
    Parse(String),
}

/// The rational `n`.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// The rational `n / d`.
///
/// # Panics
///
/// Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

/// Parses `"p"` or `"p/q"` (optionally signed) as an exact rational.
pub fn parse_rat(s: &str) -> Result<Rat, ScalarError> {
    let trimmed = s.trim();
    let parsed: Rat = trimmed
        .parse()
        .map_err(|_| ScalarError::Parse(trimmed.to_owned()))?;
    Ok(parsed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn parse_rat_accepts_plain_and_fraction_forms() {
        assert_eq!(parse_rat("3").unwrap(), rat(3));
        assert_eq!(parse_rat("-7/2").unwrap(), ratio(-7, 2));
        assert_eq!(parse_rat(" 5/10 ").unwrap(), ratio(1, 2));
        assert!(parse_rat("eps").is_err());
    }

    #[test]
    fn ratio_reduces_to_lowest_terms() {
        assert_eq!(ratio(6, -4), ratio(-3, 2));
        assert!(ratio(0, 5).is_zero());
    }
}
