//! Diagonal central extensions of the graded products.
//!
//! A central term `Omega(e_p, e_q) = phi(p) delta(p+q, 0)` turns the
//! centerless product into a product on `span{e_p} + K*theta`. The extended
//! product stays quasiassociative exactly when `phi` satisfies a linear
//! cocycle condition; this module provides:
//!
//! - [`CentralCharge`], a total assignment `p -> phi(p)`,
//! - [`central_phi`], the distinguished charge
//!   `phi(p) = (p^3 - p^2/eps - p + eps*p^2) / 2`,
//! - [`cocycle_residual`], the pointwise cocycle condition,
//! - [`antisymmetrize`], the induced Lie 2-cocycle `phi(p) - phi(q)` on
//!   `p + q = 0` (for the distinguished charge this is `p^3 - p`),
//! - [`trivial_cocycle`], the coboundary `Omega_u(a, b) = <u, a*b>` of a
//!   dual vector `u`,
//! - [`solve_central_extensions`], an exact kernel computation for all
//!   diagonal charges on a degree window,
//! - [`equivalent_modulo_trivial`], which decides whether two charges
//!   differ by a coboundary supported at degree 0.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::linalg::Matrix;
use crate::scalars::{rat, EpsPoly, Int, Rat, RatFunc};

use super::{GradedError, StructureFamily};

/// One exported row of a central charge: `phi(p) = ratfunc`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralChargeEntry {
    pub p: i64,
    pub ratfunc: RatFunc,
}

/// A total assignment of a scalar `phi(p)` to every degree, defining the
/// diagonal central term `Omega(e_p, e_q) = phi(p) delta(p+q, 0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CentralCharge {
    /// The distinguished charge of [`central_phi`].
    Virasoro,
    /// A finitely supported table, zero off its support.
    Table(BTreeMap<i64, RatFunc>),
}

impl CentralCharge {
    /// The zero charge.
    pub fn zero() -> Self {
        CentralCharge::Table(BTreeMap::new())
    }

    /// A table charge from `phi(p)` values; zero values are dropped.
    pub fn table_from_fn(window: i64, mut phi: impl FnMut(i64) -> RatFunc) -> Self {
        let mut map = BTreeMap::new();
        for p in -window..=window {
            let v = phi(p);
            if !v.is_zero() {
                map.insert(p, v);
            }
        }
        CentralCharge::Table(map)
    }

    /// Builds a table charge from entry records.
    pub fn from_entries(entries: impl IntoIterator<Item = CentralChargeEntry>) -> Self {
        let mut map = BTreeMap::new();
        for e in entries {
            if e.ratfunc.is_zero() {
                map.remove(&e.p);
            } else {
                map.insert(e.p, e.ratfunc);
            }
        }
        CentralCharge::Table(map)
    }

    /// The entries of the charge on `|p| <= window`, omitting zeros.
    pub fn entries(&self, window: i64) -> Vec<CentralChargeEntry> {
        (-window..=window)
            .filter_map(|p| {
                let v = self.phi(p);
                (!v.is_zero()).then_some(CentralChargeEntry { p, ratfunc: v })
            })
            .collect()
    }

    /// The value `phi(p)`.
    pub fn phi(&self, p: i64) -> RatFunc {
        match self {
            CentralCharge::Virasoro => central_phi(p),
            CentralCharge::Table(map) => map.get(&p).cloned().unwrap_or_else(RatFunc::zero),
        }
    }
}

/// A finitely supported dual vector `u`, pairing `<u, e_p> = u_p`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DualVector(BTreeMap<i64, RatFunc>);

impl DualVector {
    /// The zero dual vector.
    pub fn zero() -> Self {
        Self::default()
    }

    /// The dual basis vector `e_p^*` scaled by `c`.
    pub fn term(p: i64, c: RatFunc) -> Self {
        let mut out = Self::zero();
        out.add_term(p, c);
        out
    }

    /// Adds `c * e_p^*` in place.
    pub fn add_term(&mut self, p: i64, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        let entry = self.0.entry(p).or_insert_with(RatFunc::zero);
        *entry += &c;
        if entry.is_zero() {
            self.0.remove(&p);
        }
    }

    /// The component `u_p`.
    pub fn coeff(&self, p: i64) -> RatFunc {
        self.0.get(&p).cloned().unwrap_or_else(RatFunc::zero)
    }
}

/// The distinguished central charge
/// `phi(p) = (p^3 - p^2/eps - p + eps*p^2) / 2`, equal to the factored form
/// `-p (1 - eps*p) (1 + p/eps) / 2`.
pub fn central_phi(p: i64) -> RatFunc {
    // (p^3 - p) eps + p^2 eps^2 - p^2, all over 2 eps
    let pi = Int::from(p);
    let p2 = Rat::from_integer(&pi * &pi);
    let p3 = Rat::from_integer(&pi * &pi * &pi);
    let num = EpsPoly::from_coeffs(vec![-p2.clone(), p3 - rat(p), p2]);
    let den = EpsPoly::monomial(1, rat(2));
    RatFunc::new(num, den).expect("denominator 2*eps is nonzero")
}

/// The cocycle residual of a diagonal charge at a degree triple:
///
/// ```text
/// Omega(e_q, e_p * e_r) - Omega(e_p, e_q * e_r) + Omega([e_p, e_q], e_r)
/// ```
///
/// expanded through `Omega(e_a, e_b) = phi(a) delta(a+b, 0)`. The result is
/// identically zero unless `p + q + r = 0`. The extended product of
/// [`StructureFamily::extended_mul`] is quasiassociative exactly when this
/// vanishes for all triples.
pub fn cocycle_residual(
    fam: &StructureFamily,
    cc: &CentralCharge,
    p: i64,
    q: i64,
    r: i64,
) -> RatFunc {
    if p + q + r != 0 {
        return RatFunc::zero();
    }
    let t1 = &fam.coeff(p, r) * &cc.phi(q);
    let t2 = &fam.coeff(q, r) * &cc.phi(p);
    let t3 = &fam.bracket_coeff(p, q) * &cc.phi(p + q);
    &(&t1 - &t2) + &t3
}

/// The Lie 2-cocycle induced by a diagonal charge:
/// `omega(e_p, e_q) = (phi(p) - phi(q)) delta(p+q, 0)`.
pub fn antisymmetrize(cc: &CentralCharge, p: i64, q: i64) -> RatFunc {
    if p + q != 0 {
        return RatFunc::zero();
    }
    &cc.phi(p) - &cc.phi(q)
}

/// The coboundary cocycle of a dual vector:
/// `Omega_u(e_p, e_q) = <u, e_p * e_q> = u_{p+q} f(p, q)`.
pub fn trivial_cocycle(u: &DualVector, fam: &StructureFamily, p: i64, q: i64) -> RatFunc {
    let c = u.coeff(p + q);
    if c.is_zero() {
        return RatFunc::zero();
    }
    &c * &fam.coeff(p, q)
}

/// Solves the diagonal cocycle condition exactly on a degree window:
/// returns a basis (as table charges on `|p| <= window`) of the space of
/// all `phi` with [`cocycle_residual`] zero for every in-window triple
/// `p + q + r = 0`.
///
/// # Errors
///
/// [`GradedError::InfeasibleWindow`] when `window < 2` (smaller windows
/// leave the system vacuous).
pub fn solve_central_extensions(
    fam: &StructureFamily,
    window: i64,
) -> Result<Vec<CentralCharge>, GradedError> {
    if window < 2 {
        return Err(GradedError::InfeasibleWindow(window));
    }
    let w = window;
    let ncols = (2 * w + 1) as usize;
    let col = |p: i64| (p + w) as usize;
    let mut rows = Vec::new();
    for p in -w..=w {
        // the residual row is antisymmetric under swapping p and q, so
        // p < q enumerates each constraint once (p = q rows are zero)
        for q in (p + 1)..=w {
            let r = -p - q;
            if r < -w || r > w {
                continue;
            }
            let mut row = vec![RatFunc::zero(); ncols];
            row[col(q)] += &fam.coeff(p, r);
            row[col(p)] -= &fam.coeff(q, r);
            row[col(p + q)] += &fam.bracket_coeff(p, q);
            if row.iter().any(|c| !c.is_zero()) {
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        // no constraints: the kernel is the whole coordinate space
        rows.push(vec![RatFunc::zero(); ncols]);
    }
    let matrix = Matrix::from_rows(rows);
    let basis = matrix
        .kernel_basis()
        .into_iter()
        .map(|v| {
            let mut map = BTreeMap::new();
            for (idx, value) in v.into_iter().enumerate() {
                if !value.is_zero() {
                    map.insert(idx as i64 - w, value);
                }
            }
            CentralCharge::Table(map)
        })
        .collect();
    Ok(basis)
}

/// Decides whether two charges differ by a coboundary supported at degree
/// zero on the window: looks for a single scalar `c` with
/// `a.phi(p) - b.phi(p) = c * f(p, -p)` for all `|p| <= window`, returning
/// it when one exists.
pub fn equivalent_modulo_trivial(
    a: &CentralCharge,
    b: &CentralCharge,
    fam: &StructureFamily,
    window: i64,
) -> Option<RatFunc> {
    let mut c: Option<RatFunc> = None;
    let mut diffs = Vec::new();
    for p in -window..=window {
        let d = &a.phi(p) - &b.phi(p);
        let t = fam.coeff(p, -p);
        if t.is_zero() {
            if !d.is_zero() {
                return None;
            }
        } else if c.is_none() {
            c = Some(&d / &t);
        }
        diffs.push((d, t));
    }
    let c = c.unwrap_or_else(RatFunc::zero);
    for (d, t) in diffs {
        if d != &c * &t {
            return None;
        }
    }
    Some(c)
}
