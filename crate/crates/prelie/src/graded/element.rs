//! Finitely supported elements of the graded algebra with a central slot.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::scalars::RatFunc;

/// A finite linear combination `sum_p c_p e_p + c theta` with coefficients
/// in `Q(eps)`. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(from = "GradedElementRepr", into = "GradedElementRepr")]
pub struct GradedElement {
    terms: BTreeMap<i64, RatFunc>,
    central: RatFunc,
}

/// Interchange form: explicit `(degree, coefficient)` pairs plus the
/// central coefficient. Re-normalized (zero terms dropped, duplicates
/// merged) on the way back in.
#[derive(Serialize, Deserialize)]
struct GradedElementRepr {
    terms: Vec<(i64, RatFunc)>,
    central: RatFunc,
}

impl From<GradedElementRepr> for GradedElement {
    fn from(repr: GradedElementRepr) -> Self {
        let mut out = GradedElement::zero();
        for (p, c) in repr.terms {
            out.add_term(p, c);
        }
        out.set_central(repr.central);
        out
    }
}

impl From<GradedElement> for GradedElementRepr {
    fn from(v: GradedElement) -> Self {
        GradedElementRepr {
            terms: v.terms.into_iter().collect(),
            central: v.central,
        }
    }
}

impl GradedElement {
    /// The zero element.
    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis vector `e_p`.
    pub fn basis(p: i64) -> Self {
        Self::term(p, RatFunc::one())
    }

    /// The single term `c * e_p`.
    pub fn term(p: i64, c: RatFunc) -> Self {
        let mut out = Self::zero();
        out.add_term(p, c);
        out
    }

    /// The central element `theta`.
    pub fn theta() -> Self {
        GradedElement {
            terms: BTreeMap::new(),
            central: RatFunc::one(),
        }
    }

    /// Adds `c * e_p` in place, dropping the entry if it cancels.
    pub fn add_term(&mut self, p: i64, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(p) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += &c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Overwrites the central coefficient.
    pub fn set_central(&mut self, c: RatFunc) {
        self.central = c;
    }

    /// The coefficient of `e_p`, if stored (stored coefficients are nonzero).
    pub fn coeff(&self, p: i64) -> Option<&RatFunc> {
        self.terms.get(&p)
    }

    /// The central coefficient (of `theta`).
    pub fn central(&self) -> &RatFunc {
        &self.central
    }

    /// The graded terms in degree order.
    pub fn terms(&self) -> impl Iterator<Item = (&i64, &RatFunc)> {
        self.terms.iter()
    }

    /// True when every coefficient, central included, is zero.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() && self.central.is_zero()
    }

    /// Scalar multiple `c * self`.
    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        GradedElement {
            terms: self.terms.iter().map(|(&p, v)| (p, v * c)).collect(),
            central: &self.central * c,
        }
    }
}

// ---- Arithmetic ----

impl Add for &GradedElement {
    type Output = GradedElement;

    fn add(self, rhs: &GradedElement) -> GradedElement {
        let mut out = self.clone();
        for (&p, c) in rhs.terms.iter() {
            out.add_term(p, c.clone());
        }
        out.central = &out.central + &rhs.central;
        out
    }
}

impl Sub for &GradedElement {
    type Output = GradedElement;

    fn sub(self, rhs: &GradedElement) -> GradedElement {
        self + &(-rhs)
    }
}

impl Neg for &GradedElement {
    type Output = GradedElement;

    fn neg(self) -> GradedElement {
        GradedElement {
            terms: self.terms.iter().map(|(&p, c)| (p, -c)).collect(),
            central: -&self.central,
        }
    }
}

impl Neg for GradedElement {
    type Output = GradedElement;

    fn neg(self) -> GradedElement {
        -&self
    }
}

// ---- Display ----

impl fmt::Display for GradedElement {
    /// Renders as `(c)*e_p + ... + (c)*theta`, with unit coefficients
    /// elided.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        let mut write_term = |f: &mut fmt::Formatter<'_>, c: &RatFunc, name: &str| -> fmt::Result {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c.is_one() {
                write!(f, "{name}")
            } else {
                write!(f, "({c})*{name}")
            }
        };
        for (p, c) in self.terms.iter() {
            write_term(f, c, &format!("e_{p}"))?;
        }
        if !self.central.is_zero() {
            write_term(f, &self.central, "theta")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn terms_cancel_exactly() {
        let mut a = GradedElement::basis(3);
        a.add_term(3, RatFunc::from_int(-1));
        assert!(a.is_zero());
        let b = &GradedElement::basis(2) - &GradedElement::basis(2);
        assert!(b.is_zero());
    }

    #[test]
    fn display_elides_unit_coefficients() {
        let mut v = GradedElement::basis(-1);
        v.add_term(4, RatFunc::epsilon());
        v.set_central(RatFunc::from_int(2));
        assert_eq!(v.to_string(), "e_-1 + (eps)*e_4 + (2)*theta");
        assert_eq!(GradedElement::zero().to_string(), "0");
        assert_eq!(GradedElement::theta().to_string(), "theta");
    }
}
