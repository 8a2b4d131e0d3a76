//! Graded quasiassociative products on the span of basis vectors `e_p`
//! (`p` an integer) plus a central element `theta`.
//!
//! A structure family assigns to every pair of degrees a scalar
//! `f(p, q)` and defines the product `e_p * e_q = f(p, q) e_{p+q}`. The
//! families provided:
//!
//! - [`StructureFamily::VirasoroEps`]: `f(p, q) = -q(1+eps*q) / (1+eps*(p+q))`,
//!   the one-parameter family whose commutator is the Witt bracket
//!   `(p - q) e_{p+q}`,
//! - [`StructureFamily::Lambda`]: `f(p, q) = lambda - q`, the classical
//!   one-line family with the same bracket,
//! - [`StructureFamily::Table`]: an explicit finitely supported table,
//!   zero off its support, for experiments and counterexamples.
//!
//! Verification is pointwise and exact: [`StructureFamily::quasiassoc_residual`]
//! vanishes at a degree triple exactly when the associator symmetry holds
//! there, and [`StructureFamily::lie_boundary_residual`] vanishes exactly
//! when the commutator reproduces the Witt coefficient `p - q`.
//!
//! Central terms and the second cohomology live in [`extensions`] (re-exported
//! here): [`CentralCharge`], [`central_phi`], [`cocycle_residual`],
//! [`antisymmetrize`], [`trivial_cocycle`], [`solve_central_extensions`].

mod element;
mod extensions;

pub use element::GradedElement;
pub use extensions::{
    antisymmetrize, central_phi, cocycle_residual, equivalent_modulo_trivial,
    solve_central_extensions, trivial_cocycle, CentralCharge, CentralChargeEntry, DualVector,
};

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalars::{rat, EpsPoly, Rat, RatFunc};

/// Errors from graded-algebra operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradedError {
    /// The central-extension solver needs a window of at least 2.
    #[error("window {0} is too small for the extension solver (need >= 2)")]
    InfeasibleWindow(i64),
}

/// One row of a structure-constant table: `e_p * e_q = ratfunc * e_{p+q}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    pub p: i64,
    pub q: i64,
    pub ratfunc: RatFunc,
}

/// A family of graded structure constants `f(p, q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StructureFamily {
    /// `f(p, q) = -q(1 + eps*q) / (1 + eps*(p + q))`.
    VirasoroEps,
    /// `f(p, q) = lambda - q` for a fixed rational `lambda`.
    Lambda(Rat),
    /// An explicit table, zero off its support.
    Table(BTreeMap<(i64, i64), RatFunc>),
}

impl StructureFamily {
    /// The `Lambda` family with an integer parameter.
    pub fn lambda(n: i64) -> Self {
        StructureFamily::Lambda(rat(n))
    }

    /// Builds a `Table` family from entry records; later duplicates of a
    /// `(p, q)` key overwrite earlier ones.
    pub fn table_from_entries(entries: impl IntoIterator<Item = TableEntry>) -> Self {
        let mut map = BTreeMap::new();
        for e in entries {
            if e.ratfunc.is_zero() {
                map.remove(&(e.p, e.q));
            } else {
                map.insert((e.p, e.q), e.ratfunc);
            }
        }
        StructureFamily::Table(map)
    }

    /// For a `Table` family, its entries sorted by `(p, q)`.
    pub fn table_entries(&self) -> Option<Vec<TableEntry>> {
        match self {
            StructureFamily::Table(map) => Some(
                map.iter()
                    .map(|(&(p, q), v)| TableEntry {
                        p,
                        q,
                        ratfunc: v.clone(),
                    })
                    .collect(),
            ),
            _ => None,
        }
    }

    /// The structure constant `f(p, q)` with `e_p * e_q = f(p, q) e_{p+q}`.
    pub fn coeff(&self, p: i64, q: i64) -> RatFunc {
        match self {
            StructureFamily::VirasoroEps => {
                // -q(1 + eps*q) / (1 + eps*(p + q))
                let qi = rat(q);
                let num = EpsPoly::from_coeffs(vec![-qi.clone(), -(&qi * &qi)]);
                let den = EpsPoly::from_coeffs(vec![rat(1), rat(p) + qi]);
                RatFunc::new(num, den).expect("denominator 1 + eps*(p+q) is nonzero")
            }
            StructureFamily::Lambda(lambda) => RatFunc::from_rat(lambda - rat(q)),
            StructureFamily::Table(map) => map.get(&(p, q)).cloned().unwrap_or_else(RatFunc::zero),
        }
    }

    /// The commutator coefficient `f(p, q) - f(q, p)` on `e_{p+q}`.
    pub fn bracket_coeff(&self, p: i64, q: i64) -> RatFunc {
        &self.coeff(p, q) - &self.coeff(q, p)
    }

    /// The centerless product `a * b`, extended bilinearly from
    /// `e_p * e_q = f(p, q) e_{p+q}`. Central components of the inputs are
    /// annihilated (`e_p * theta = theta * e_p = theta * theta = 0`) and the
    /// output has no central component.
    pub fn mul(&self, a: &GradedElement, b: &GradedElement) -> GradedElement {
        let mut out = GradedElement::zero();
        for (&p, ca) in a.terms() {
            if ca.is_zero() {
                continue;
            }
            for (&q, cb) in b.terms() {
                let f = self.coeff(p, q);
                if f.is_zero() {
                    continue;
                }
                out.add_term(p + q, &(&f * ca) * cb);
            }
        }
        out
    }

    /// The product in the one-dimensional central extension determined by
    /// `cc`: the graded part of [`StructureFamily::mul`] plus the central
    /// term `sum_{p+q=0} a_p b_q phi(p) * theta`.
    pub fn extended_mul(
        &self,
        cc: &CentralCharge,
        a: &GradedElement,
        b: &GradedElement,
    ) -> GradedElement {
        let mut out = self.mul(a, b);
        let mut central = RatFunc::zero();
        for (&p, ca) in a.terms() {
            if let Some(cb) = b.coeff(-p) {
                let phi = cc.phi(p);
                if !phi.is_zero() {
                    central += &(&(ca * cb) * &phi);
                }
            }
        }
        out.set_central(central);
        out
    }

    /// The commutator `a * b - b * a` of the centerless product.
    pub fn commutator(&self, a: &GradedElement, b: &GradedElement) -> GradedElement {
        &self.mul(a, b) - &self.mul(b, a)
    }

    /// The associator-symmetry residual at a degree triple:
    ///
    /// ```text
    /// [f(p,q) - f(q,p)] f(p+q,r) - f(q,r) f(p,q+r) + f(p,r) f(q,p+r)
    /// ```
    ///
    /// Zero exactly when `e_p * (e_q * e_r) - (e_p * e_q) * e_r` is
    /// symmetric under swapping `p` and `q`, i.e. when the product is
    /// quasiassociative at this triple.
    pub fn quasiassoc_residual(&self, p: i64, q: i64, r: i64) -> RatFunc {
        let lhs = &self.bracket_coeff(p, q) * &self.coeff(p + q, r);
        let t1 = &self.coeff(q, r) * &self.coeff(p, q + r);
        let t2 = &self.coeff(p, r) * &self.coeff(q, p + r);
        &(&lhs - &t1) + &t2
    }

    /// The bracket residual `f(p,q) - f(q,p) - (p - q)`: zero exactly when
    /// the commutator of the product is the Witt bracket at `(p, q)`.
    pub fn lie_boundary_residual(&self, p: i64, q: i64) -> RatFunc {
        &self.bracket_coeff(p, q) - &RatFunc::from_int(p - q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::ratio;

    fn rf(num: &[i64], den: &[i64]) -> RatFunc {
        RatFunc::new(
            EpsPoly::from_coeffs(num.iter().map(|&c| rat(c)).collect()),
            EpsPoly::from_coeffs(den.iter().map(|&c| rat(c)).collect()),
        )
        .unwrap()
    }

    #[test]
    fn structure_coeff_matches_closed_forms() {
        let fam = StructureFamily::VirasoroEps;
        // f(1,1) = (-1 - eps)/(1 + 2eps)
        assert_eq!(fam.coeff(1, 1), rf(&[-1, -1], &[1, 2]));
        // f(p, 0) = 0 for every p
        for p in -5..=5 {
            assert!(fam.coeff(p, 0).is_zero());
        }
        // f(0, q) = -q (the denominators cancel)
        for q in -5..=5 {
            assert_eq!(fam.coeff(0, q), RatFunc::from_int(-q));
        }
        // Lambda family is constant in p
        let lam = StructureFamily::Lambda(rat(5));
        assert_eq!(lam.coeff(3, 2), RatFunc::from_int(3));
        assert_eq!(lam.coeff(-7, 2), RatFunc::from_int(3));
        // Table family defaults to zero off support
        let tab = StructureFamily::table_from_entries([TableEntry {
            p: 1,
            q: 2,
            ratfunc: RatFunc::from_int(9),
        }]);
        assert_eq!(tab.coeff(1, 2), RatFunc::from_int(9));
        assert!(tab.coeff(2, 1).is_zero());
    }

    #[test]
    fn quasiassoc_residual_vanishes_for_the_eps_family() {
        let fam = StructureFamily::VirasoroEps;
        for p in -4..=4 {
            for q in -4..=4 {
                for r in -4..=4 {
                    assert!(
                        fam.quasiassoc_residual(p, q, r).is_zero(),
                        "nonzero residual at ({p},{q},{r})"
                    );
                }
            }
        }
    }

    #[test]
    fn quasiassoc_residual_vanishes_for_lambda_families() {
        for lam in [rat(0), rat(1), ratio(-3, 2)] {
            let fam = StructureFamily::Lambda(lam);
            for p in -3..=3 {
                for q in -3..=3 {
                    for r in -3..=3 {
                        assert!(fam.quasiassoc_residual(p, q, r).is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn quasiassoc_residual_detects_a_non_example() {
        // f(p, q) = p + q on |p|,|q| <= 9 is not quasiassociative:
        // at (1,2,3) the residual is -6
        let mut map = BTreeMap::new();
        for p in -9..=9_i64 {
            for q in -9..=9_i64 {
                if p + q != 0 {
                    map.insert((p, q), RatFunc::from_int(p + q));
                }
            }
        }
        let fam = StructureFamily::Table(map);
        assert_eq!(fam.quasiassoc_residual(1, 2, 3), RatFunc::from_int(-6));
    }

    #[test]
    fn lie_boundary_residual_vanishes_exactly_for_witt_compatible_families() {
        let fam = StructureFamily::VirasoroEps;
        for p in -6..=6 {
            for q in -6..=6 {
                assert!(fam.lie_boundary_residual(p, q).is_zero());
            }
        }
        let lam = StructureFamily::Lambda(ratio(7, 3));
        for p in -6..=6 {
            for q in -6..=6 {
                assert!(lam.lie_boundary_residual(p, q).is_zero());
            }
        }
        // f(p, q) = -q^2 fails: at (1,0) the residual is
        // f(1,0) - f(0,1) - 1 = 0 - (-1) - 1 = 0, but at (2,0) it is
        // f(2,0) - f(0,2) - 2 = 0 - (-4) - 2 = 2
        let mut map = BTreeMap::new();
        for p in -3..=3_i64 {
            for q in -3..=3_i64 {
                map.insert((p, q), RatFunc::from_int(-q * q));
            }
        }
        let fam = StructureFamily::Table(map);
        assert!(fam.lie_boundary_residual(1, 0).is_zero());
        assert_eq!(fam.lie_boundary_residual(2, 0), RatFunc::from_int(2));
    }

    #[test]
    fn mul_extends_bilinearly_and_annihilates_the_center() {
        let fam = StructureFamily::VirasoroEps;
        let e1 = GradedElement::basis(1);
        // e_1 * e_1 = f(1,1) e_2
        let sq = fam.mul(&e1, &e1);
        assert_eq!(sq, GradedElement::term(2, fam.coeff(1, 1)));
        // theta is annihilated on both sides
        let th = GradedElement::theta();
        assert!(fam.mul(&e1, &th).is_zero());
        assert!(fam.mul(&th, &e1).is_zero());
        // bilinearity: (2 e_1 + e_3) * e_2 = 2 f(1,2) e_3 + f(3,2) e_5
        let a = &GradedElement::term(1, RatFunc::from_int(2)) + &GradedElement::basis(3);
        let b = GradedElement::basis(2);
        let mut expect = GradedElement::term(3, fam.coeff(1, 2).scale(&rat(2)));
        expect.add_term(5, fam.coeff(3, 2));
        assert_eq!(fam.mul(&a, &b), expect);
    }

    #[test]
    fn commutator_of_basis_vectors_is_the_witt_bracket() {
        let fam = StructureFamily::VirasoroEps;
        for p in -4..=4 {
            for q in -4..=4 {
                let br = fam.commutator(&GradedElement::basis(p), &GradedElement::basis(q));
                let expect = GradedElement::term(p + q, RatFunc::from_int(p - q));
                assert_eq!(br, expect, "bracket mismatch at ({p},{q})");
            }
        }
    }

    #[test]
    fn table_entries_round_trip_through_json() {
        let fam = StructureFamily::table_from_entries([
            TableEntry {
                p: 0,
                q: 1,
                ratfunc: rf(&[1, 1], &[1]),
            },
            TableEntry {
                p: 2,
                q: -1,
                ratfunc: RatFunc::epsilon(),
            },
        ]);
        let entries = fam.table_entries().unwrap();
        let json = serde_json::to_string(&entries).unwrap();
        let back: Vec<TableEntry> = serde_json::from_str(&json).unwrap();
        assert_eq!(StructureFamily::table_from_entries(back), fam);
    }
}
