//! Exact verification of the quasiassociative (pre-Lie) structure behind
//! the Virasoro algebra.
//!
//! A product `*` is quasiassociative (left-symmetric, pre-Lie) when its
//! associator `a*(b*c) - (a*b)*c` is symmetric in `a, b`; the commutator of
//! such a product automatically satisfies the Jacobi identity. This crate
//! realizes, over the exact scalar field `Q(eps)`, a family of graded
//! quasiassociative products whose commutators are the Witt/Virasoro
//! brackets, together with the machinery around them:
//!
//! - [`scalars`]: the exact scalar tower `Q -> Q[eps] -> Q(eps)`,
//! - [`graded`]: graded products, brackets, central terms, and an exact
//!   solver for diagonal central extensions,
//! - [`complex`]: cochain and chain complexes for quasiassociative
//!   cohomology and homology, with representation checks,
//! - [`diffalg`]: the differential-operator realization on Laurent
//!   polynomials in one variable, residues, cocycles, and adjoints, plus
//!   the n-variable analog,
//! - [`findim`]: finite-dimensional algebras given by structure constants,
//!   semidirect sums, cotangent extensions, and an impossibility trace for
//!   graded associative deformations,
//! - [`linalg`]: dense exact linear algebra over `Q(eps)` used by the
//!   solvers.
//!
//! All computation is exact; every "is this identity satisfied" question is
//! answered by canonical-form equality in `Q(eps)`, never by tolerance.

pub mod complex;
pub mod diffalg;
pub mod findim;
pub mod graded;
pub mod linalg;
pub mod scalars;

pub use scalars::{EpsPoly, Rat, RatFunc, ScalarError};
