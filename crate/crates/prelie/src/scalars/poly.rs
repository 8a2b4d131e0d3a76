//! Polynomials in the formal parameter `eps` with rational coefficients.
//!
//! [`EpsPoly`] is a dense coefficient vector with no trailing zeros, so two
//! polynomials are equal exactly when their coefficient vectors are. The
//! degree of the zero polynomial is `None` (standing in for minus infinity).
//!
//! These polynomials exist to feed [`RatFunc`](super::RatFunc): the only
//! nontrivial algorithm here is [`EpsPoly::gcd`], a Euclidean gcd over the
//! rationals that keeps remainders monic to tame coefficient growth.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::Rat;

/// A polynomial in `eps` over the rationals, stored densely without
/// trailing zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct EpsPoly {
    /// `coeffs[k]` is the coefficient of `eps^k`; the last entry is nonzero.
    coeffs: Vec<Rat>,
}

impl EpsPoly {
    /// Builds a polynomial from raw coefficients (`coeffs[k]` on `eps^k`),
    /// trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        EpsPoly { coeffs }
    }

    /// The zero polynomial.
    pub fn zero() -> Self {
        EpsPoly { coeffs: Vec::new() }
    }

    /// The constant polynomial `1`.
    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    /// The constant polynomial `c`.
    pub fn constant(c: Rat) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The monomial `c * eps^k`.
    pub fn monomial(k: usize, c: Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        EpsPoly { coeffs }
    }

    /// The generator `eps`.
    pub fn eps() -> Self {
        Self::monomial(1, Rat::one())
    }

    /// True exactly for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True exactly for the constant polynomial `1`.
    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// The degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// The coefficient of `eps^k` (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    /// Coefficients of `eps^0, eps^1, ...` up to the degree.
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// The leading coefficient, or `None` for the zero polynomial.
    pub fn leading_coeff(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    /// The lowest-degree nonzero coefficient, or `None` for zero.
    pub fn trailing_coeff(&self) -> Option<&Rat> {
        self.coeffs.iter().find(|c| !c.is_zero())
    }

    /// If the polynomial is constant (degree <= 0), its value.
    pub fn as_constant(&self) -> Option<Rat> {
        match self.coeffs.len() {
            0 => Some(Rat::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// Multiplies every coefficient by the nonzero rational `c`.
    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        EpsPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Divides by the leading coefficient, or returns zero unchanged.
    pub fn into_monic(self) -> Self {
        match self.leading_coeff() {
            None => self,
            Some(lc) if lc.is_one() => self,
            Some(lc) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
        }
    }

    /// Exact Euclidean division: returns `(quotient, remainder)` with
    /// `self = quotient * divisor + remainder` and
    /// `deg remainder < deg divisor`.
    ///
    /// # Panics
    ///
    /// Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &EpsPoly) -> (EpsPoly, EpsPoly) {
        let dd = divisor.degree().expect("polynomial division by zero");
        let lc_inv = divisor
            .leading_coeff()
            .expect("polynomial division by zero")
            .recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let factor = &rem[rem.len() - 1] * &lc_inv;
            if !factor.is_zero() {
                for (i, dc) in divisor.coeffs.iter().enumerate() {
                    let t = dc * &factor;
                    rem[k + i] -= t;
                }
                quot[k] = factor;
            }
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (EpsPoly::from_coeffs(quot), EpsPoly::from_coeffs(rem))
    }

    /// The monic greatest common divisor. `gcd(0, 0) = 0`; otherwise the
    /// result is monic.
    pub fn gcd(&self, other: &EpsPoly) -> EpsPoly {
        let mut a = self.clone().into_monic();
        let mut b = other.clone().into_monic();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.into_monic();
        }
        a
    }

    /// Evaluates at `eps = x` by Horner's rule.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

// ---- Arithmetic ----

impl Add for &EpsPoly {
    type Output = EpsPoly;

    fn add(self, rhs: &EpsPoly) -> EpsPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            let a = self.coeffs.get(k);
            let b = rhs.coeffs.get(k);
            coeffs.push(match (a, b) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        EpsPoly::from_coeffs(coeffs)
    }
}

impl Sub for &EpsPoly {
    type Output = EpsPoly;

    fn sub(self, rhs: &EpsPoly) -> EpsPoly {
        self + &(-rhs)
    }
}

impl Neg for &EpsPoly {
    type Output = EpsPoly;

    fn neg(self) -> EpsPoly {
        EpsPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &EpsPoly {
    type Output = EpsPoly;

    fn mul(self, rhs: &EpsPoly) -> EpsPoly {
        if self.is_zero() || rhs.is_zero() {
            return EpsPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        EpsPoly::from_coeffs(coeffs)
    }
}

macro_rules! forward_poly_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<EpsPoly> for EpsPoly {
            type Output = EpsPoly;
            fn $method(self, rhs: EpsPoly) -> EpsPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&EpsPoly> for EpsPoly {
            type Output = EpsPoly;
            fn $method(self, rhs: &EpsPoly) -> EpsPoly {
                (&self).$method(rhs)
            }
        }
        impl $trait<EpsPoly> for &EpsPoly {
            type Output = EpsPoly;
            fn $method(self, rhs: EpsPoly) -> EpsPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_poly_binop!(Add, add);
forward_poly_binop!(Sub, sub);
forward_poly_binop!(Mul, mul);

impl Neg for EpsPoly {
    type Output = EpsPoly;

    fn neg(self) -> EpsPoly {
        -&self
    }
}

// ---- Display ----

impl fmt::Display for EpsPoly {
    /// Renders as `c0 + c1*eps + c2*eps^2 + ...`, skipping zero terms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &Rat::zero();
            let mag = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            if !(mag.is_one() && k > 0) {
                write!(f, "{mag}")?;
                if k > 0 {
                    write!(f, "*")?;
                }
            }
            match k {
                0 => {}
                1 => write!(f, "eps")?,
                _ => write!(f, "eps^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{rat, ratio};

    fn poly(cs: &[i64]) -> EpsPoly {
        EpsPoly::from_coeffs(cs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn trims_trailing_zeros_and_reports_degree() {
        let p = poly(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(EpsPoly::zero().degree(), None);
        assert_eq!(poly(&[5]).degree(), Some(0));
    }

    #[test]
    fn arithmetic_matches_hand_expansion() {
        // (1 + eps)(1 - eps) = 1 - eps^2
        let p = poly(&[1, 1]);
        let q = poly(&[1, -1]);
        assert_eq!(&p * &q, poly(&[1, 0, -1]));
        assert_eq!(&p + &q, poly(&[2]));
        assert_eq!(&p - &q, poly(&[0, 2]));
    }

    #[test]
    fn div_rem_reconstructs_dividend() {
        // (eps^3 - 1) / (eps - 1) = eps^2 + eps + 1 rem 0
        let a = poly(&[-1, 0, 0, 1]);
        let b = poly(&[-1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, poly(&[1, 1, 1]));
        assert!(r.is_zero());
        // generic case: remainder degree drops below divisor degree
        let a = poly(&[3, 1, 4, 1, 5]);
        let b = poly(&[2, 0, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn gcd_is_monic_and_divides_both() {
        // gcd((eps+1)^2 (eps-2), (eps+1)(eps+3)) = eps + 1
        let p1 = &(&poly(&[1, 1]) * &poly(&[1, 1])) * &poly(&[-2, 1]);
        let p2 = &poly(&[1, 1]) * &poly(&[3, 1]);
        assert_eq!(p1.gcd(&p2), poly(&[1, 1]));
        // coprime inputs give gcd 1 even with non-monic leading terms
        let p3 = poly(&[1, 0, 2]);
        let p4 = poly(&[1, 3]);
        assert!(p3.gcd(&p4).is_one());
        assert!(EpsPoly::zero().gcd(&EpsPoly::zero()).is_zero());
    }

    #[test]
    fn eval_uses_exact_rationals() {
        // 1 - 2 eps + eps^2 at eps = 1/2 is 1/4
        let p = poly(&[1, -2, 1]);
        assert_eq!(p.eval(&ratio(1, 2)), ratio(1, 4));
    }

    #[test]
    fn display_is_human_readable() {
        assert_eq!(poly(&[-2, -4]).to_string(), "-2 - 4*eps");
        assert_eq!(poly(&[0, 1]).to_string(), "eps");
        assert_eq!(poly(&[0, -1, 1]).to_string(), "-eps + eps^2");
        assert_eq!(EpsPoly::zero().to_string(), "0");
        assert_eq!(
            EpsPoly::from_coeffs(vec![ratio(-1, 2), rat(0), ratio(1, 2)]).to_string(),
            "-1/2 + 1/2*eps^2"
        );
    }
}
