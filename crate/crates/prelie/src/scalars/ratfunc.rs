//! The rational-function field `Q(eps)` in canonical form.
//!
//! A [`RatFunc`] is a quotient `num / den` of two [`EpsPoly`] values kept in
//! a unique canonical form:
//!
//! - `den` is nonzero, scaled so its lowest-degree nonzero coefficient is 1
//!   (so denominators like `1 + 3*eps` or `eps` stay in their natural form),
//! - `gcd(num, den) = 1`,
//! - the zero element is stored as `0 / 1`.
//!
//! Canonical form makes derived equality exact, which is what every residual
//! check in this crate relies on: a residual is zero iff its canonical
//! numerator is the zero polynomial. The inverse parameter `1/eps` needs no
//! special representation; it is simply the fraction with denominator `eps`.
//!
//! Serialized form (JSON): sparse coefficient lists of `[degree, "p/q"]`
//! pairs for numerator and denominator, e.g.
//! `{"num": [[0,"-2"],[1,"-4"]], "den": [[0,"1"],[1,"3"]]}`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{parse_rat, EpsPoly, Rat, ScalarError};

/// An element of `Q(eps)`, stored canonically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RatFuncRepr", into = "RatFuncRepr")]
pub struct RatFunc {
    num: EpsPoly,
    den: EpsPoly,
}

impl RatFunc {
    /// Builds `num / den` in canonical form.
    ///
    /// # Errors
    ///
    /// [`ScalarError::ZeroDenominator`] if `den` is the zero polynomial.
    pub fn new(num: EpsPoly, den: EpsPoly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::ZeroDenominator);
        }
        Ok(Self::normalized(num, den))
    }

    /// Canonicalizes a fraction whose denominator is already known nonzero.
    fn normalized(mut num: EpsPoly, mut den: EpsPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return RatFunc {
                num: EpsPoly::zero(),
                den: EpsPoly::one(),
            };
        }
        if den.degree() > Some(0) && num.degree() > Some(0) {
            let g = num.gcd(&den);
            if !g.is_one() {
                num = num.div_rem(&g).0;
                den = den.div_rem(&g).0;
            }
        }
        let lc = den.trailing_coeff().expect("nonzero denominator");
        if !lc.is_one() {
            let inv = lc.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RatFunc { num, den }
    }

    /// The zero element.
    pub fn zero() -> Self {
        RatFunc {
            num: EpsPoly::zero(),
            den: EpsPoly::one(),
        }
    }

    /// The unit element.
    pub fn one() -> Self {
        RatFunc {
            num: EpsPoly::one(),
            den: EpsPoly::one(),
        }
    }

    /// Embeds a polynomial.
    pub fn from_poly(p: EpsPoly) -> Self {
        RatFunc {
            num: p,
            den: EpsPoly::one(),
        }
    }

    /// Embeds a rational constant.
    pub fn from_rat(c: Rat) -> Self {
        Self::from_poly(EpsPoly::constant(c))
    }

    /// Embeds an integer constant.
    pub fn from_int(n: i64) -> Self {
        Self::from_rat(super::rat(n))
    }

    /// The parameter `eps`.
    pub fn epsilon() -> Self {
        Self::from_poly(EpsPoly::eps())
    }

    /// The inverse parameter `1/eps`.
    pub fn epsilon_inv() -> Self {
        RatFunc {
            num: EpsPoly::one(),
            den: EpsPoly::eps(),
        }
    }

    /// The canonical numerator.
    pub fn num(&self) -> &EpsPoly {
        &self.num
    }

    /// The canonical denominator (monic).
    pub fn den(&self) -> &EpsPoly {
        &self.den
    }

    /// True exactly for the zero element.
    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True exactly for the unit element.
    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// If the value is a rational constant, returns it.
    pub fn as_constant(&self) -> Option<Rat> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    /// The multiplicative inverse.
    ///
    /// # Errors
    ///
    /// [`ScalarError::DivisionByZero`] on the zero element.
    pub fn inverse(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    /// Exact division, surfacing a zero divisor as an error.
    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        Ok(self * &rhs.inverse()?)
    }

    /// Evaluates at the rational point `eps = x`.
    ///
    /// # Errors
    ///
    /// [`ScalarError::PoleAtEpsilon`] if the canonical denominator vanishes
    /// at `x`.
    pub fn eval(&self, x: &Rat) -> Result<Rat, ScalarError> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(ScalarError::PoleAtEpsilon(x.clone()));
        }
        Ok(self.num.eval(x) / d)
    }

    /// `self * c` for a rational constant, avoiding a full normalize.
    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() || self.is_zero() {
            return Self::zero();
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for RatFunc {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<Rat> for RatFunc {
    fn from(c: Rat) -> Self {
        Self::from_rat(c)
    }
}

// ---- Arithmetic ----

impl Add for &RatFunc {
    type Output = RatFunc;

    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFunc::normalized(&self.num + &rhs.num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RatFunc::normalized(num, den)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;

    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;

    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        RatFunc::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;

    /// Exact division.
    ///
    /// # Panics
    ///
    /// Panics when dividing by zero; use [`RatFunc::checked_div`] to get an
    /// error instead.
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;

    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;

    fn neg(self) -> RatFunc {
        -&self
    }
}

macro_rules! forward_ratfunc_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: RatFunc) -> RatFunc {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: &RatFunc) -> RatFunc {
                (&self).$method(rhs)
            }
        }
        impl $trait<RatFunc> for &RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: RatFunc) -> RatFunc {
                self.$method(&rhs)
            }
        }
    };
}

forward_ratfunc_binop!(Add, add);
forward_ratfunc_binop!(Sub, sub);
forward_ratfunc_binop!(Mul, mul);
forward_ratfunc_binop!(Div, div);

impl std::ops::AddAssign<&RatFunc> for RatFunc {
    fn add_assign(&mut self, rhs: &RatFunc) {
        *self = &*self + rhs;
    }
}

impl std::ops::SubAssign<&RatFunc> for RatFunc {
    fn sub_assign(&mut self, rhs: &RatFunc) {
        *self = &*self - rhs;
    }
}

// ---- Display ----

impl fmt::Display for RatFunc {
    /// Renders as `num` when the denominator is 1, else `(num)/(den)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

// ---- Serialization ----

/// Wire form: sparse `[degree, "p/q"]` coefficient lists.
#[derive(Serialize, Deserialize)]
struct RatFuncRepr {
    num: Vec<(usize, String)>,
    den: Vec<(usize, String)>,
}

fn poly_to_repr(p: &EpsPoly) -> Vec<(usize, String)> {
    p.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k, c.to_string()))
        .collect()
}

fn poly_from_repr(entries: &[(usize, String)]) -> Result<EpsPoly, ScalarError> {
    let max_deg = entries.iter().map(|(k, _)| *k).max();
    let mut coeffs = vec![Rat::zero(); max_deg.map_or(0, |d| d + 1)];
    for (k, s) in entries {
        coeffs[*k] += parse_rat(s)?;
    }
    Ok(EpsPoly::from_coeffs(coeffs))
}

impl From<RatFunc> for RatFuncRepr {
    fn from(v: RatFunc) -> Self {
        RatFuncRepr {
            num: poly_to_repr(&v.num),
            den: poly_to_repr(&v.den),
        }
    }
}

impl TryFrom<RatFuncRepr> for RatFunc {
    type Error = ScalarError;

    fn try_from(repr: RatFuncRepr) -> Result<Self, ScalarError> {
        RatFunc::new(poly_from_repr(&repr.num)?, poly_from_repr(&repr.den)?)
    }
}
