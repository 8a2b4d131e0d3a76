//! Finite-dimensional algebras given by structure constants
//! `theta^s_{ij}` (the coefficient of `e_s` in `e_i e_j`), with exact
//! checks for quasiassociativity, derivations, and the constructions that
//! preserve them.
//!
//! The defining identity — the associator `a(bc) - (ab)c` is symmetric in
//! `a, b` — translates on basis triples into a quadratic structure-constant
//! identity; [`fd_quasiassoc_residual`] computes its defect at one index
//! quadruple. Antisymmetrizing the product gives Lie structure constants
//! `c^s_{ij} = theta^s_{ij} - theta^s_{ji}` ([`fd_lie_constants`]), which
//! satisfy Jacobi whenever the residuals all vanish.
//!
//! Constructions live in [`constructions`] (re-exported here): the
//! semidirect sum of a quasiassociative pair along a Lie representation by
//! derivations, the two-block family [`ehrenfest`], the phase-space
//! extension [`cotangent`] with its symplectic form, and the derivation
//! dichotomy checks. The [`impossibility`] submodule derives the
//! contradiction showing that no associative product on a graded basis has
//! the degree-difference commutator.

mod constructions;
mod impossibility;

pub use constructions::{
    cotangent, der_inclusion_check, ehrenfest, semidirect, symplectic_cocycle_residual,
    CotangentAlgebra, DerInclusionReport,
};
pub use impossibility::{no_associative_witness, Contradiction, ProofTrace, TraceStep};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::Matrix;
use crate::scalars::RatFunc;

/// A linear endomorphism of the carrier, as a `d x d` matrix acting on
/// coordinate columns.
pub type LinearMap = Matrix;

/// Errors for the finite-dimensional layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FindimError {
    /// A basis index at or beyond the dimension.
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    /// Two objects disagree on the carrier dimension.
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    /// A matrix with the wrong shape.
    #[error("shape mismatch: expected {expected}x{expected}, found {rows}x{cols}")]
    ShapeMismatch {
        rows: usize,
        cols: usize,
        expected: usize,
    },
    /// The commutator law of a representation fails on a basis pair.
    #[error("chi is not a Lie representation: commutator law fails on basis pair ({i}, {j})")]
    NotLieRep { i: usize, j: usize },
    /// A representing map is not a derivation of the acted-on algebra.
    #[error("chi({chi_index}) is not a derivation: Leibniz fails on basis pair ({u}, {v})")]
    NotDerivation {
        chi_index: usize,
        u: usize,
        v: usize,
    },
    /// The impossibility argument needs more degrees than provided.
    #[error("window too small: {0}")]
    WindowTooSmall(String),
}

/// A finite-dimensional algebra by structure constants: `dim` basis
/// vectors with `e_i e_j = sum_s theta^s_{ij} e_s`.
///
/// Serializes as `{dim, labels, theta: [[s, i, j, ratfunc], ...]}` with
/// zero entries omitted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "FinAlgebraRepr", into = "FinAlgebraRepr")]
pub struct FinAlgebra {
    dim: usize,
    labels: Vec<String>,
    /// Flattened `d^3` array indexed by `(s * d + i) * d + j`.
    theta: Vec<RatFunc>,
}

impl FinAlgebra {
    /// The zero multiplication on `dim` basis vectors, labeled `e1..`.
    pub fn zero(dim: usize) -> Self {
        assert!(dim >= 1, "dimension must be at least 1");
        Self {
            dim,
            labels: (1..=dim).map(|i| format!("e{i}")).collect(),
            theta: vec![RatFunc::zero(); dim * dim * dim],
        }
    }

    /// Replaces the basis labels (must have length `dim`).
    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim, "one label per basis vector");
        self.labels = labels;
        self
    }

    /// The carrier dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The basis labels.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    fn idx(&self, s: usize, i: usize, j: usize) -> usize {
        (s * self.dim + i) * self.dim + j
    }

    /// The structure constant `theta^s_{ij}`.
    pub fn theta(&self, s: usize, i: usize, j: usize) -> &RatFunc {
        &self.theta[self.idx(s, i, j)]
    }

    /// Sets the structure constant `theta^s_{ij}`.
    pub fn set_theta(&mut self, s: usize, i: usize, j: usize, value: RatFunc) {
        let idx = self.idx(s, i, j);
        self.theta[idx] = value;
    }

    fn check_index(&self, index: usize) -> Result<(), FindimError> {
        if index >= self.dim {
            return Err(FindimError::IndexOutOfRange {
                index,
                dim: self.dim,
            });
        }
        Ok(())
    }

    /// The coordinates of `e_i e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> Vec<RatFunc> {
        (0..self.dim).map(|s| self.theta(s, i, j).clone()).collect()
    }

    /// The product of two coordinate vectors.
    pub fn mul(&self, x: &[RatFunc], y: &[RatFunc]) -> Result<Vec<RatFunc>, FindimError> {
        if x.len() != self.dim {
            return Err(FindimError::DimensionMismatch {
                expected: self.dim,
                found: x.len(),
            });
        }
        if y.len() != self.dim {
            return Err(FindimError::DimensionMismatch {
                expected: self.dim,
                found: y.len(),
            });
        }
        let mut out = vec![RatFunc::zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                for (s, slot) in out.iter_mut().enumerate() {
                    let t = self.theta(s, i, j);
                    if !t.is_zero() {
                        *slot += &(&c * t);
                    }
                }
            }
        }
        Ok(out)
    }

    /// The commutator `xy - yx` of two coordinate vectors.
    pub fn commutator(&self, x: &[RatFunc], y: &[RatFunc]) -> Result<Vec<RatFunc>, FindimError> {
        let xy = self.mul(x, y)?;
        let yx = self.mul(y, x)?;
        Ok(xy.into_iter().zip(yx).map(|(a, b)| &a - &b).collect())
    }

    /// The inner map `ad_u : v -> uv - vu`, as a matrix on coordinates.
    pub fn ad(&self, u: &[RatFunc]) -> Result<LinearMap, FindimError> {
        if u.len() != self.dim {
            return Err(FindimError::DimensionMismatch {
                expected: self.dim,
                found: u.len(),
            });
        }
        let mut m = Matrix::zero(self.dim, self.dim);
        for j in 0..self.dim {
            let mut basis = vec![RatFunc::zero(); self.dim];
            basis[j] = RatFunc::one();
            let col = self.commutator(u, &basis)?;
            for (i, value) in col.into_iter().enumerate() {
                *m.at_mut(i, j) = value;
            }
        }
        Ok(m)
    }

    /// Whether the multiplication table is identically zero.
    pub fn is_abelian_algebra(&self) -> bool {
        self.theta.iter().all(RatFunc::is_zero)
    }
}

#[derive(Serialize, Deserialize)]
struct FinAlgebraRepr {
    dim: usize,
    #[serde(default)]
    labels: Vec<String>,
    theta: Vec<(usize, usize, usize, RatFunc)>,
}

impl From<FinAlgebra> for FinAlgebraRepr {
    fn from(a: FinAlgebra) -> Self {
        let mut theta = Vec::new();
        for s in 0..a.dim {
            for i in 0..a.dim {
                for j in 0..a.dim {
                    let v = a.theta(s, i, j);
                    if !v.is_zero() {
                        theta.push((s, i, j, v.clone()));
                    }
                }
            }
        }
        FinAlgebraRepr {
            dim: a.dim,
            labels: a.labels,
            theta,
        }
    }
}

impl From<FinAlgebraRepr> for FinAlgebra {
    fn from(repr: FinAlgebraRepr) -> Self {
        let mut a = FinAlgebra::zero(repr.dim.max(1));
        if repr.labels.len() == a.dim {
            a.labels = repr.labels;
        }
        for (s, i, j, v) in repr.theta {
            if s < a.dim && i < a.dim && j < a.dim {
                a.set_theta(s, i, j, v);
            }
        }
        a
    }
}

// ---- residuals and derived structure -----------------------------------

/// The structure-constant form of the defining identity at one index
/// quadruple:
///
/// ```text
/// sum_s (theta^s_{jk} theta^r_{is} - theta^s_{ik} theta^r_{js})
///   - sum_s c^s_{ij} theta^r_{sk},      c^s_{ij} = theta^s_{ij} - theta^s_{ji}.
/// ```
///
/// Zero for all `(i, j, k, r)` exactly when the associator is symmetric in
/// its first two arguments on all basis triples.
pub fn fd_quasiassoc_residual(
    a: &FinAlgebra,
    i: usize,
    j: usize,
    k: usize,
    r: usize,
) -> Result<RatFunc, FindimError> {
    for index in [i, j, k, r] {
        a.check_index(index)?;
    }
    let mut acc = RatFunc::zero();
    for s in 0..a.dim() {
        acc += &(a.theta(s, j, k) * a.theta(r, i, s));
        acc -= &(a.theta(s, i, k) * a.theta(r, j, s));
        let c = a.theta(s, i, j) - a.theta(s, j, i);
        acc -= &(&c * a.theta(r, s, k));
    }
    Ok(acc)
}

/// The first index quadruple where [`fd_quasiassoc_residual`] is nonzero,
/// if any.
pub fn fd_quasiassoc_witness(a: &FinAlgebra) -> Option<(usize, usize, usize, usize)> {
    let d = a.dim();
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                for r in 0..d {
                    let resid = fd_quasiassoc_residual(a, i, j, k, r)
                        .expect("indices are in range by construction");
                    if !resid.is_zero() {
                        return Some((i, j, k, r));
                    }
                }
            }
        }
    }
    None
}

/// Whether every quasiassociativity residual vanishes.
pub fn is_quasiassociative(a: &FinAlgebra) -> bool {
    fd_quasiassoc_witness(a).is_none()
}

/// The associativity defect `((e_i e_j) e_k - e_i (e_j e_k))^r` as a
/// theta contraction: `sum_s (theta^s_{ij} theta^r_{sk} - theta^s_{jk} theta^r_{is})`.
pub fn fd_assoc_residual(
    a: &FinAlgebra,
    i: usize,
    j: usize,
    k: usize,
    r: usize,
) -> Result<RatFunc, FindimError> {
    for index in [i, j, k, r] {
        a.check_index(index)?;
    }
    let mut acc = RatFunc::zero();
    for s in 0..a.dim() {
        acc += &(a.theta(s, i, j) * a.theta(r, s, k));
        acc -= &(a.theta(s, j, k) * a.theta(r, i, s));
    }
    Ok(acc)
}

/// Whether the multiplication is associative on all basis triples.
pub fn is_associative(a: &FinAlgebra) -> bool {
    let d = a.dim();
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                for r in 0..d {
                    let resid = fd_assoc_residual(a, i, j, k, r)
                        .expect("indices are in range by construction");
                    if !resid.is_zero() {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Lie structure constants `c^s_{ij}` obtained by antisymmetrizing a
/// multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieConstants {
    dim: usize,
    c: Vec<RatFunc>,
}

impl LieConstants {
    /// The carrier dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The constant `c^s_{ij}`.
    pub fn at(&self, s: usize, i: usize, j: usize) -> &RatFunc {
        &self.c[(s * self.dim + i) * self.dim + j]
    }

    /// The bracket of two coordinate vectors.
    pub fn bracket(&self, x: &[RatFunc], y: &[RatFunc]) -> Vec<RatFunc> {
        let mut out = vec![RatFunc::zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                for (s, slot) in out.iter_mut().enumerate() {
                    let t = self.at(s, i, j);
                    if !t.is_zero() {
                        *slot += &(&c * t);
                    }
                }
            }
        }
        out
    }

    /// The `r`-component of the Jacobi defect
    /// `[[e_i, e_j], e_k] + [[e_j, e_k], e_i] + [[e_k, e_i], e_j]`.
    pub fn jacobi_residual(&self, i: usize, j: usize, k: usize, r: usize) -> RatFunc {
        let mut acc = RatFunc::zero();
        for s in 0..self.dim {
            acc += &(self.at(s, i, j) * self.at(r, s, k));
            acc += &(self.at(s, j, k) * self.at(r, s, i));
            acc += &(self.at(s, k, i) * self.at(r, s, j));
        }
        acc
    }

    /// The first index quadruple where the Jacobi defect is nonzero, if any.
    pub fn jacobi_witness(&self) -> Option<(usize, usize, usize, usize)> {
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    for r in 0..self.dim {
                        if !self.jacobi_residual(i, j, k, r).is_zero() {
                            return Some((i, j, k, r));
                        }
                    }
                }
            }
        }
        None
    }
}

/// The antisymmetrized structure constants of an algebra, together with a
/// Jacobi report produced when (and only when) the algebra passes the
/// quasiassociativity sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieStructure {
    pub constants: LieConstants,
    /// `Some(witness)` when the Jacobi sweep ran: `None` inside means the
    /// identity holds everywhere.
    pub jacobi: Option<Option<(usize, usize, usize, usize)>>,
}

/// Antisymmetrizes the multiplication table into Lie structure constants
/// `c^s_{ij} = theta^s_{ij} - theta^s_{ji}`; when the algebra is
/// quasiassociative the Jacobi identity is also swept and reported.
pub fn fd_lie_constants(a: &FinAlgebra) -> LieStructure {
    let d = a.dim();
    let mut c = vec![RatFunc::zero(); d * d * d];
    for s in 0..d {
        for i in 0..d {
            for j in 0..d {
                c[(s * d + i) * d + j] = a.theta(s, i, j) - a.theta(s, j, i);
            }
        }
    }
    let constants = LieConstants { dim: d, c };
    let jacobi = is_quasiassociative(a).then(|| constants.jacobi_witness());
    LieStructure { constants, jacobi }
}

/// The outcome of a derivation check: whether the Leibniz identity
/// `D(uv) = D(u)v + uD(v)` holds on all basis pairs, with the first
/// failing pair as witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationReport {
    pub ok: bool,
    pub witness: Option<(usize, usize)>,
}

/// Checks the Leibniz identity for `d` on all basis pairs of `a`.
pub fn fd_is_derivation(d: &LinearMap, a: &FinAlgebra) -> Result<DerivationReport, FindimError> {
    if d.rows() != a.dim() || d.cols() != a.dim() {
        return Err(FindimError::DimensionMismatch {
            expected: a.dim(),
            found: if d.rows() != a.dim() {
                d.rows()
            } else {
                d.cols()
            },
        });
    }
    let dim = a.dim();
    let column = |j: usize| -> Vec<RatFunc> { (0..dim).map(|i| d.at(i, j).clone()).collect() };
    for u in 0..dim {
        for v in 0..dim {
            let mut eu = vec![RatFunc::zero(); dim];
            eu[u] = RatFunc::one();
            let mut ev = vec![RatFunc::zero(); dim];
            ev[v] = RatFunc::one();
            let lhs = d.mul_vec(&a.basis_product(u, v));
            let rhs1 = a.mul(&column(u), &ev)?;
            let rhs2 = a.mul(&eu, &column(v))?;
            let holds = lhs
                .iter()
                .zip(rhs1.iter().zip(&rhs2))
                .all(|(l, (r1, r2))| (&(l - r1) - r2).is_zero());
            if !holds {
                return Ok(DerivationReport {
                    ok: false,
                    witness: Some((u, v)),
                });
            }
        }
    }
    Ok(DerivationReport {
        ok: true,
        witness: None,
    })
}
