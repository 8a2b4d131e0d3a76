//! The n-variable analog of the graded layer on basis symbols `e^i_sigma`
//! (`i` a direction, `1 <= i <= n`, and `sigma` an integer multi-degree of
//! length `n`).
//!
//! The bracket of two basis symbols is
//!
//! ```text
//! [e^i_sigma, e^j_nu] = (delta_ij - nu_i) e^j_{sigma+nu}
//!                     - (delta_ij - sigma_j) e^i_{sigma+nu}
//! ```
//!
//! ([`nd_bracket`]), and the one-parameter product
//!
//! ```text
//! e^i_sigma * e^j_nu = (lambda delta_ij - nu_i) e^j_{sigma+nu}
//! ```
//!
//! ([`nd_star`]) antisymmetrizes to it for every `lambda`. At `n = 1` both
//! collapse to the graded layer: the bracket coefficient is
//! `sigma - nu` and the product coefficient is `lambda - nu`.
//!
//! The product's output direction is the *second* factor's: only that
//! reading antisymmetrizes to the bracket above and reduces correctly at
//! `n = 1`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::scalars::{rat, Rat, RatFunc};

use super::DiffError;

/// A basis symbol `e^i_sigma`: a direction `1 <= i <= n` together with a
/// multi-degree `sigma` of length `n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NdBasisVector {
    pub direction: usize,
    pub degree: Vec<i64>,
}

impl NdBasisVector {
    /// Builds `e^direction_degree`, rejecting directions outside
    /// `1..=degree.len()`.
    pub fn new(direction: usize, degree: Vec<i64>) -> Result<Self, DiffError> {
        if direction == 0 || direction > degree.len() {
            return Err(DiffError::DimensionMismatch {
                expected: degree.len(),
                found: direction,
            });
        }
        Ok(Self { direction, degree })
    }

    /// The ambient dimension `n`.
    pub fn dim(&self) -> usize {
        self.degree.len()
    }
}

/// A finitely supported linear combination of [`NdBasisVector`] symbols of
/// one common dimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NdElement {
    dim: usize,
    terms: BTreeMap<NdBasisVector, RatFunc>,
}

impl NdElement {
    /// The zero element of dimension `n`.
    pub fn zero(n: usize) -> Self {
        Self {
            dim: n,
            terms: BTreeMap::new(),
        }
    }

    /// The basis symbol `e^direction_degree` with coefficient one.
    pub fn basis(direction: usize, degree: Vec<i64>) -> Result<Self, DiffError> {
        let bv = NdBasisVector::new(direction, degree)?;
        let mut out = Self::zero(bv.dim());
        out.add_term(bv, RatFunc::one())?;
        Ok(out)
    }

    /// The ambient dimension `n`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Adds `c e^i_sigma`, dropping the symbol if the total cancels.
    pub fn add_term(&mut self, bv: NdBasisVector, c: RatFunc) -> Result<(), DiffError> {
        if bv.dim() != self.dim {
            return Err(DiffError::DimensionMismatch {
                expected: self.dim,
                found: bv.dim(),
            });
        }
        if c.is_zero() {
            return Ok(());
        }
        let total = match self.terms.get(&bv) {
            Some(old) => old + &c,
            None => c,
        };
        if total.is_zero() {
            self.terms.remove(&bv);
        } else {
            self.terms.insert(bv, total);
        }
        Ok(())
    }

    /// Iterates over `(symbol, coefficient)` pairs.
    pub fn terms(&self) -> impl Iterator<Item = (&NdBasisVector, &RatFunc)> {
        self.terms.iter()
    }

    /// Whether this is the zero element.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &RatFunc) -> Self {
        let mut out = Self::zero(self.dim);
        for (bv, a) in &self.terms {
            out.add_term(bv.clone(), a * c)
                .expect("dimensions agree by construction");
        }
        out
    }

    /// `self - rhs`.
    pub fn sub(&self, rhs: &Self) -> Result<Self, DiffError> {
        if rhs.dim != self.dim {
            return Err(DiffError::DimensionMismatch {
                expected: self.dim,
                found: rhs.dim,
            });
        }
        let mut out = self.clone();
        for (bv, c) in &rhs.terms {
            out.add_term(bv.clone(), -c)?;
        }
        Ok(out)
    }
}

fn degree_sum(sigma: &[i64], nu: &[i64]) -> Vec<i64> {
    sigma.iter().zip(nu).map(|(a, b)| a + b).collect()
}

/// The product of two basis symbols:
/// `e^i_sigma * e^j_nu = (lambda delta_ij - nu_i) e^j_{sigma+nu}` — the
/// output direction is the second factor's.
pub fn nd_star(
    i: usize,
    sigma: &[i64],
    j: usize,
    nu: &[i64],
    lambda: &Rat,
) -> Result<NdElement, DiffError> {
    let a = NdBasisVector::new(i, sigma.to_vec())?;
    let b = NdBasisVector::new(j, nu.to_vec())?;
    if a.dim() != b.dim() {
        return Err(DiffError::DimensionMismatch {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    let delta = if i == j { rat(1) } else { rat(0) };
    let coeff = lambda.clone() * delta - rat(nu[i - 1]);
    let mut out = NdElement::zero(a.dim());
    out.add_term(
        NdBasisVector::new(j, degree_sum(sigma, nu))?,
        RatFunc::from_rat(coeff),
    )?;
    Ok(out)
}

/// The bilinear extension of [`nd_star`] to linear combinations.
pub fn nd_star_elements(
    x: &NdElement,
    y: &NdElement,
    lambda: &Rat,
) -> Result<NdElement, DiffError> {
    if x.dim() != y.dim() {
        return Err(DiffError::DimensionMismatch {
            expected: x.dim(),
            found: y.dim(),
        });
    }
    let mut out = NdElement::zero(x.dim());
    for (a, ca) in x.terms() {
        for (b, cb) in y.terms() {
            let prod = nd_star(a.direction, &a.degree, b.direction, &b.degree, lambda)?;
            for (bv, c) in prod.terms() {
                out.add_term(bv.clone(), &(ca * cb) * c)?;
            }
        }
    }
    Ok(out)
}

/// The bracket, extended bilinearly from
/// `[e^i_sigma, e^j_nu] = (delta_ij - nu_i) e^j_{sigma+nu}
///  - (delta_ij - sigma_j) e^i_{sigma+nu}`.
pub fn nd_bracket(x: &NdElement, y: &NdElement) -> Result<NdElement, DiffError> {
    if x.dim() != y.dim() {
        return Err(DiffError::DimensionMismatch {
            expected: x.dim(),
            found: y.dim(),
        });
    }
    let mut out = NdElement::zero(x.dim());
    for (a, ca) in x.terms() {
        for (b, cb) in y.terms() {
            let (i, sigma) = (a.direction, &a.degree);
            let (j, nu) = (b.direction, &b.degree);
            let delta = if i == j { 1 } else { 0 };
            let total = degree_sum(sigma, nu);
            let c = ca * cb;
            out.add_term(
                NdBasisVector::new(j, total.clone())?,
                c.scale(&rat(delta - nu[i - 1])),
            )?;
            out.add_term(
                NdBasisVector::new(i, total)?,
                c.scale(&rat(-(delta - sigma[j - 1]))),
            )?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::StructureFamily;
    use crate::scalars::ratio;

    fn basis(i: usize, deg: &[i64]) -> NdElement {
        NdElement::basis(i, deg.to_vec()).unwrap()
    }

    /// Small sweep values for one coordinate of a multi-degree.
    const DEGREES: [i64; 3] = [-2, 0, 1];

    fn degree_tuples(n: usize) -> Vec<Vec<i64>> {
        let mut out = vec![Vec::new()];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|t| {
                    DEGREES.iter().map(move |&d| {
                        let mut t2 = t.clone();
                        t2.push(d);
                        t2
                    })
                })
                .collect();
        }
        out
    }

    #[test]
    fn one_dimensional_star_matches_the_lambda_family() {
        let lambda = ratio(5, 3);
        let family = StructureFamily::Lambda(lambda.clone());
        for p in -4..=4 {
            for q in -4..=4 {
                let prod = nd_star(1, &[p], 1, &[q], &lambda).unwrap();
                let mut expected = NdElement::zero(1);
                expected
                    .add_term(
                        NdBasisVector::new(1, vec![p + q]).unwrap(),
                        family.coeff(p, q),
                    )
                    .unwrap();
                assert_eq!(prod, expected);
            }
        }
    }

    #[test]
    fn one_dimensional_bracket_matches_the_witt_coefficient() {
        for p in -4..=4 {
            for q in -4..=4 {
                let br = nd_bracket(&basis(1, &[p]), &basis(1, &[q])).unwrap();
                let mut expected = NdElement::zero(1);
                expected
                    .add_term(
                        NdBasisVector::new(1, vec![p + q]).unwrap(),
                        RatFunc::from_int(p - q),
                    )
                    .unwrap();
                assert_eq!(br, expected);
            }
        }
    }

    #[test]
    fn crossed_directions_with_vanishing_coefficients_bracket_to_zero() {
        let br = nd_bracket(&basis(1, &[1, 0]), &basis(2, &[0, 1])).unwrap();
        assert!(br.is_zero());
    }

    #[test]
    fn bracket_of_an_element_with_itself_vanishes() {
        let mut x = basis(1, &[1, -2, 0]);
        x.add_term(
            NdBasisVector::new(3, vec![0, 1, 1]).unwrap(),
            RatFunc::from_int(2),
        )
        .unwrap();
        assert!(nd_bracket(&x, &x).unwrap().is_zero());
    }

    #[test]
    fn antisymmetrized_star_equals_the_bracket() {
        for n in 1..=3usize {
            let lambda = ratio(-7, 2);
            let tuples = degree_tuples(n);
            for i in 1..=n {
                for j in 1..=n {
                    for sigma in &tuples {
                        for nu in &tuples {
                            let ab = nd_star(i, sigma, j, nu, &lambda).unwrap();
                            let ba = nd_star(j, nu, i, sigma, &lambda).unwrap();
                            let br = nd_bracket(&basis(i, sigma), &basis(j, nu)).unwrap();
                            assert_eq!(ab.sub(&ba).unwrap(), br, "n={n} i={i} j={j}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn associator_of_the_star_is_symmetric_in_the_first_two_arguments() {
        // The associator residual a*(b*c) - (a*b)*c depends on the degrees
        // only through the third factor's, so the sweep fixes generic
        // distinct degrees for a and b and varies everything else.
        let lambda = ratio(3, 4);
        for n in 1..=3usize {
            let sigma: Vec<i64> = (0..n as i64).map(|t| t + 1).collect();
            let nu: Vec<i64> = (0..n as i64).map(|t| -2 * t - 1).collect();
            let tuples = degree_tuples(n);
            for i in 1..=n {
                for j in 1..=n {
                    for k in 1..=n {
                        for rho in &tuples {
                            let a = basis(i, &sigma);
                            let b = basis(j, &nu);
                            let c = basis(k, rho);
                            let assoc = |x: &NdElement, y: &NdElement, z: &NdElement| {
                                let yz = nd_star_elements(y, z, &lambda).unwrap();
                                let xy = nd_star_elements(x, y, &lambda).unwrap();
                                nd_star_elements(x, &yz, &lambda)
                                    .unwrap()
                                    .sub(&nd_star_elements(&xy, z, &lambda).unwrap())
                                    .unwrap()
                            };
                            let lhs = assoc(&a, &b, &c);
                            let rhs = assoc(&b, &a, &c);
                            assert_eq!(lhs, rhs, "n={n} i={i} j={j} k={k} rho={rho:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn dimension_mismatch_is_rejected() {
        let err = nd_bracket(&basis(1, &[1]), &basis(1, &[1, 2])).unwrap_err();
        assert_eq!(
            err,
            DiffError::DimensionMismatch {
                expected: 1,
                found: 2
            }
        );
        let err = NdBasisVector::new(3, vec![0, 0]).unwrap_err();
        assert_eq!(
            err,
            DiffError::DimensionMismatch {
                expected: 2,
                found: 3
            }
        );
    }
}
