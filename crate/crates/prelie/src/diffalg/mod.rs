//! Differential realization of the graded product on the Laurent ring
//! `K[x, 1/x]` with coefficients in the rational-function field `K = Q(eps)`.
//!
//! The basis monomial `x^{1-q}` plays the role of the degree-`q` basis
//! vector: the diagonal operator [`apply_o`] (`O = x d/dx - 1`) has it as
//! an eigenvector with eigenvalue `-q`, and the product
//!
//! ```text
//! u * v = (1 - eps O)^{-1} [ x^{-1} u (1 - eps O) O (v) ]
//! ```
//!
//! ([`star`]) localizes on monomials to the one-parameter structure
//! coefficient `-q(1+eps q)/(1+eps(p+q))` of the graded layer. Because the
//! image of `d/dx` is exactly the kernel of the residue, every "equal up to
//! a total derivative" statement becomes the decidable check "residues
//! agree": [`res`] is the arbiter for the bilinear-form identities
//! ([`gen_cocycle_residual`], [`adjoint_residual`]) and the
//! integration-by-parts calculus of [`OperatorExpr`] adjoints.
//!
//! The bilinear forms provided: [`gf_cocycle`] (`X Y'''`, the classical
//! degree-three form on vector fields), [`omega_hat`]
//! (`x^{-3} O^2 (1 + eps O)(u) v`), and its normalization
//! [`omega_hat_new`] whose residue on opposite-degree monomials reproduces
//! the central charge [`crate::graded::central_phi`].
//!
//! The [`ndim`] submodule (re-exported) carries the n-variable analog on
//! basis symbols `e^i_sigma`.

mod ndim;

pub use ndim::{nd_bracket, nd_star, nd_star_elements, NdBasisVector, NdElement};

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalars::{rat, EpsPoly, RatFunc};

/// Errors for the differential layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiffError {
    /// A bilinear-form name outside the published set.
    #[error("unknown bilinear form `{0}`")]
    UnknownBilinear(String),
    /// The operator contains a primitive with no integration-by-parts rule.
    #[error("no adjoint rule for {0}")]
    NoAdjointRule(&'static str),
    /// Two n-dimensional quantities disagree on n.
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}

// ---- Laurent polynomials ---------------------------------------------

/// A Laurent polynomial over `Q(eps)`: a finitely supported map from
/// integer exponents to nonzero coefficients.
///
/// Serializes as an array of `[exponent, ratfunc]` pairs.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(from = "LaurentRepr", into = "LaurentRepr")]
pub struct LaurentPoly {
    terms: BTreeMap<i64, RatFunc>,
}

impl LaurentPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Self::default()
    }

    /// The monomial `c x^k`.
    pub fn monomial(k: i64, c: RatFunc) -> Self {
        let mut u = Self::zero();
        u.add_term(k, c);
        u
    }

    /// The monomial `x^k`.
    pub fn x_pow(k: i64) -> Self {
        Self::monomial(k, RatFunc::one())
    }

    /// Adds `c x^k`, dropping the exponent if the total cancels.
    pub fn add_term(&mut self, k: i64, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(k).or_insert_with(RatFunc::zero);
        *entry += &c;
        if entry.is_zero() {
            self.terms.remove(&k);
        }
    }

    /// The coefficient of `x^k` (zero off the support).
    pub fn coeff(&self, k: i64) -> RatFunc {
        self.terms.get(&k).cloned().unwrap_or_else(RatFunc::zero)
    }

    /// Iterates over `(exponent, coefficient)` pairs in exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&i64, &RatFunc)> {
        self.terms.iter()
    }

    /// Whether this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &RatFunc) -> Self {
        let mut out = Self::zero();
        for (&k, a) in &self.terms {
            out.add_term(k, a * c);
        }
        out
    }

    /// Multiplies by the monomial `x^k` (shifts every exponent by `k`).
    pub fn mul_monomial(&self, k: i64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e + k, c.clone()))
                .collect(),
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, -c);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&j, a) in &self.terms {
            for (&k, b) in &rhs.terms {
                out.add_term(j + k, a * b);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

macro_rules! forward_laurent_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
        impl $trait<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_laurent_binop!(Add, add);
forward_laurent_binop!(Sub, sub);
forward_laurent_binop!(Mul, mul);

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&k, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{k}")?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct LaurentRepr(Vec<(i64, RatFunc)>);

impl From<LaurentPoly> for LaurentRepr {
    fn from(u: LaurentPoly) -> Self {
        LaurentRepr(u.terms.into_iter().collect())
    }
}

impl From<LaurentRepr> for LaurentPoly {
    fn from(repr: LaurentRepr) -> Self {
        let mut u = LaurentPoly::zero();
        for (k, c) in repr.0 {
            u.add_term(k, c);
        }
        u
    }
}

/// The rational function `(a0 + a1 eps) / (b0 + b1 eps)`.
fn eps_frac(a0: i64, a1: i64, b0: i64, b1: i64) -> RatFunc {
    RatFunc::new(
        EpsPoly::from_coeffs(vec![rat(a0), rat(a1)]),
        EpsPoly::from_coeffs(vec![rat(b0), rat(b1)]),
    )
    .expect("denominator is nonzero by construction")
}

// ---- derivative, residue, diagonal operators -------------------------

/// The derivative `d/dx`.
pub fn derivative(u: &LaurentPoly) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for (&k, c) in u.terms() {
        out.add_term(k - 1, c.scale(&rat(k)));
    }
    out
}

/// The residue: the coefficient of `x^{-1}`.
///
/// Its kernel is exactly the image of [`derivative`], so two Laurent
/// polynomials are equal up to a total derivative iff their residues agree.
pub fn res(u: &LaurentPoly) -> RatFunc {
    u.coeff(-1)
}

/// The diagonal operator `O = x d/dx - 1`, acting as `(k-1)` on `x^k`
/// (equivalently, as `-q` on `x^{1-q}`).
pub fn apply_o(u: &LaurentPoly) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for (&k, c) in u.terms() {
        out.add_term(k, c.scale(&rat(k - 1)));
    }
    out
}

/// `(1 + eps O)(u)`: multiplies the `x^k` coefficient by `1 + (k-1) eps`.
fn one_plus_eps_o(u: &LaurentPoly) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for (&k, c) in u.terms() {
        out.add_term(k, c * eps_frac(1, k - 1, 1, 0));
    }
    out
}

/// The resolvent `(1 - eps O)^{-1}`, acting termwise: the `x^k`
/// coefficient is divided by `1 - (k-1) eps`, which is invertible in
/// `Q(eps)` for every `k`.
pub fn apply_resolvent(u: &LaurentPoly) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for (&k, c) in u.terms() {
        out.add_term(k, c * eps_frac(1, 0, 1, 1 - k));
    }
    out
}

// ---- operator expressions and adjoints --------------------------------

/// A single factor of an operator pipeline on [`LaurentPoly`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum OpPrimitive {
    /// Multiplication by `x^k`.
    MulByMonomial(i64),
    /// The diagonal operator `O = x d/dx - 1`.
    ApplyO,
    /// The shifted diagonal operator `O + c`.
    OShift(RatFunc),
    /// The resolvent `(1 - eps O)^{-1}`.
    ApplyResolvent,
    /// The derivative `d/dx`.
    Derivative,
    /// Multiplication by a fixed Laurent polynomial.
    MulByPoly(LaurentPoly),
    /// Multiplication by a scalar.
    ScalarMul(RatFunc),
}

impl OpPrimitive {
    fn apply(&self, u: &LaurentPoly) -> LaurentPoly {
        match self {
            OpPrimitive::MulByMonomial(k) => u.mul_monomial(*k),
            OpPrimitive::ApplyO => apply_o(u),
            OpPrimitive::OShift(c) => &apply_o(u) + &u.scale(c),
            OpPrimitive::ApplyResolvent => apply_resolvent(u),
            OpPrimitive::Derivative => derivative(u),
            OpPrimitive::MulByPoly(v) => u * v,
            OpPrimitive::ScalarMul(c) => u.scale(c),
        }
    }

    /// The adjoint with respect to the residue pairing
    /// `(u, v) -> res(u v)`, as a pipeline fragment.
    fn adjoint(&self) -> Result<Vec<OpPrimitive>, DiffError> {
        Ok(match self {
            OpPrimitive::MulByMonomial(k) => vec![OpPrimitive::MulByMonomial(*k)],
            // O^dagger = -(O + 3).
            OpPrimitive::ApplyO => vec![
                OpPrimitive::OShift(RatFunc::from_int(3)),
                OpPrimitive::ScalarMul(RatFunc::from_int(-1)),
            ],
            // (O + c)^dagger = -(O + 3) + c = -(O + (3 - c)).
            OpPrimitive::OShift(c) => vec![
                OpPrimitive::OShift(RatFunc::from_int(3) - c),
                OpPrimitive::ScalarMul(RatFunc::from_int(-1)),
            ],
            OpPrimitive::ApplyResolvent => {
                return Err(DiffError::NoAdjointRule("the resolvent (1 - eps O)^{-1}"))
            }
            OpPrimitive::Derivative => vec![
                OpPrimitive::Derivative,
                OpPrimitive::ScalarMul(RatFunc::from_int(-1)),
            ],
            OpPrimitive::MulByPoly(v) => vec![OpPrimitive::MulByPoly(v.clone())],
            OpPrimitive::ScalarMul(c) => vec![OpPrimitive::ScalarMul(c.clone())],
        })
    }
}

/// A composition of [`OpPrimitive`] factors, applied first-to-last: the
/// pipeline `[A, B]` sends `u` to `B(A(u))`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct OperatorExpr {
    pub steps: Vec<OpPrimitive>,
}

impl OperatorExpr {
    /// The pipeline with the given factors, applied first-to-last.
    pub fn new(steps: Vec<OpPrimitive>) -> Self {
        Self { steps }
    }

    /// The adjoint pipeline with respect to `(u, v) -> res(u v)`: per-factor
    /// adjoints composed in reverse order.
    ///
    /// Fails with [`DiffError::NoAdjointRule`] if any factor is the
    /// resolvent.
    pub fn adjoint(&self) -> Result<OperatorExpr, DiffError> {
        let mut steps = Vec::new();
        for prim in self.steps.iter().rev() {
            steps.extend(prim.adjoint()?);
        }
        Ok(OperatorExpr::new(steps))
    }
}

/// Applies an operator pipeline to a Laurent polynomial.
pub fn apply_operator(a: &OperatorExpr, u: &LaurentPoly) -> LaurentPoly {
    let mut out = u.clone();
    for prim in &a.steps {
        out = prim.apply(&out);
    }
    out
}

/// `res(u A(v) - A^dagger(u) v)`: zero exactly when the computed adjoint
/// satisfies integration by parts on the given pair.
pub fn adjoint_residual(
    a: &OperatorExpr,
    u: &LaurentPoly,
    v: &LaurentPoly,
) -> Result<RatFunc, DiffError> {
    let lhs = u * &apply_operator(a, v);
    let rhs = &apply_operator(&a.adjoint()?, u) * v;
    Ok(res(&(&lhs - &rhs)))
}

// ---- the product and the bilinear forms -------------------------------

/// The quasiassociative product
/// `u * v = (1 - eps O)^{-1} [ x^{-1} u (1 - eps O) O (v) ]`.
///
/// On monomials it localizes: `x^{1-p} * x^{1-q}` is the one-parameter
/// structure coefficient `-q(1+eps q)/(1+eps(p+q))` times `x^{1-p-q}`.
pub fn star(u: &LaurentPoly, v: &LaurentPoly) -> LaurentPoly {
    let mut inner = LaurentPoly::zero();
    // (1 - eps O) O (v) multiplies the x^k coefficient by (k-1)(1-(k-1)eps).
    for (&k, c) in v.terms() {
        inner.add_term(k, c * eps_frac(k - 1, -(k - 1) * (k - 1), 1, 0));
    }
    apply_resolvent(&(u * &inner).mul_monomial(-1))
}

/// The vector-field bracket `[u, v] = u v' - u' v`, which coincides with
/// the commutator `u * v - v * u` of [`star`].
pub fn lie_bracket(u: &LaurentPoly, v: &LaurentPoly) -> LaurentPoly {
    &(u * &derivative(v)) - &(&derivative(u) * v)
}

/// The degree-three bilinear form `(X, Y) -> X Y'''` whose residue is the
/// classical central charge: `res(gf_cocycle(x^{1-n}, x^{1+n})) = n^3 - n`.
pub fn gf_cocycle(x: &LaurentPoly, y: &LaurentPoly) -> LaurentPoly {
    x * &derivative(&derivative(&derivative(y)))
}

/// The bilinear form `x^{-3} O^2 (1 + eps O)(u) v`; on monomials
/// `x^{1-p} * x^{1-q}` it evaluates to `p^2 (1 - eps p) x^{-1-p-q}`.
pub fn omega_hat(u: &LaurentPoly, v: &LaurentPoly) -> LaurentPoly {
    let s = apply_o(&apply_o(&one_plus_eps_o(u)));
    &s.mul_monomial(-3) * v
}

/// The normalized form
/// `-1/(2 eps) x^{-3} O^2 (1 + eps O)(u) v - 1/2 x^{-2} (u * v)`,
/// whose residue on opposite-degree monomials is the central charge
/// [`crate::graded::central_phi`].
pub fn omega_hat_new(u: &LaurentPoly, v: &LaurentPoly) -> LaurentPoly {
    let first = omega_hat(u, v).scale(&eps_frac(-1, 0, 0, 2));
    let second = star(u, v).mul_monomial(-2).scale(&eps_frac(-1, 0, 2, 0));
    &first + &second
}

/// The generalized-cocycle residual of a bilinear form `B` against the
/// [`star`] product: `res(B(v, u*w) - B(u, v*w) + B([u,v], w))`.
pub fn gen_cocycle_residual_of(
    b: impl Fn(&LaurentPoly, &LaurentPoly) -> LaurentPoly,
    u: &LaurentPoly,
    v: &LaurentPoly,
    w: &LaurentPoly,
) -> RatFunc {
    let t1 = b(v, &star(u, w));
    let t2 = b(u, &star(v, w));
    let t3 = b(&lie_bracket(u, v), w);
    res(&(&(&t1 - &t2) + &t3))
}

/// [`gen_cocycle_residual_of`] for a published bilinear form by name:
/// `"omega_hat"`, `"omega_hat_new"`, or `"gf_on_liealg"` (the form
/// `X Y'''` of [`gf_cocycle`]).
///
/// The residual is identically zero for `omega_hat` and `omega_hat_new`.
pub fn gen_cocycle_residual(
    bilinear: &str,
    u: &LaurentPoly,
    v: &LaurentPoly,
    w: &LaurentPoly,
) -> Result<RatFunc, DiffError> {
    let b: fn(&LaurentPoly, &LaurentPoly) -> LaurentPoly = match bilinear {
        "omega_hat" => omega_hat,
        "omega_hat_new" => omega_hat_new,
        "gf_on_liealg" => gf_cocycle,
        other => return Err(DiffError::UnknownBilinear(other.to_string())),
    };
    Ok(gen_cocycle_residual_of(b, u, v, w))
}

/// The Lie-cocycle residual of [`gf_cocycle`] under the residue pairing:
/// `res(gf([u,v], w) + gf([v,w], u) + gf([w,u], v))`; identically zero.
pub fn gf_lie_cocycle_residual(u: &LaurentPoly, v: &LaurentPoly, w: &LaurentPoly) -> RatFunc {
    let t1 = gf_cocycle(&lie_bracket(u, v), w);
    let t2 = gf_cocycle(&lie_bracket(v, w), u);
    let t3 = gf_cocycle(&lie_bracket(w, u), v);
    res(&(&(&t1 + &t2) + &t3))
}
