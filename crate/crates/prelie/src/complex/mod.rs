//! The quasiassociative cochain complex: module-valued multilinear
//! cochains with a distinguished last argument, partial skewsymmetry in
//! the leading block, the coboundary operator, and representation checks.
//!
//! A cochain of arity `n` assigns a module value to every `n`-tuple of
//! basis degrees; its skew degree `kappa` declares the leading block of
//! slots on which it is antisymmetric (`0` means no declared block; for
//! `n >= 2` a nonzero `kappa` lies in `2..=n`). Values are stored on
//! canonical representatives — first-`kappa` indices strictly increasing —
//! and evaluation on other tuples transports by the sign of the sorting
//! permutation, returning zero on repeated leading indices.
//!
//! The coboundary of a finitely supported cochain is *not* finitely
//! supported in general (the slot that receives a product `a_i * a`
//! constrains only a sum of degrees), so [`delta`] returns a lazy
//! [`Delta`] evaluator rather than a table; [`materialize`] restricts any
//! evaluator to a finite window when a table is wanted.
//!
//! Chain-side machinery (the homology differential and the duality
//! pairing) lives in [`chains`]; the search for strong graded
//! representations lives in [`strong`].

pub mod chains;
pub mod strong;

pub use chains::{boundary, duality_residual, pair, Chain, ChainRecord, ChainTable, RightAction};
pub use strong::{search_strong_reps, StrongRepSearch};

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graded::{GradedElement, StructureFamily};
use crate::scalars::RatFunc;

/// Errors from complex-module operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    /// A representation was paired with a cochain over the wrong module.
    #[error("module mismatch: representation needs {expected:?}, cochain is {found:?}")]
    ModuleMismatch {
        expected: ModuleTag,
        found: ModuleTag,
    },
    /// Arities that must line up do not.
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    /// Declared skew degrees that must line up do not.
    #[error("skew degree mismatch: {left} vs {right}")]
    KappaMismatch { left: usize, right: usize },
    /// A declared skew degree outside the legal range for the arity.
    #[error("skew degree {kappa} is invalid for arity {arity}")]
    InvalidKappa { kappa: usize, arity: usize },
    /// The right action fails its compatibility law at a witness triple.
    #[error("right action violates f(p,q)h(m,p+q) = -h(m,p)h(m+p,q) at m={m}, p={p}, q={q}")]
    InvalidRightAction { m: i64, p: i64, q: i64 },
    /// An operation that needs scalar-valued data received graded data.
    #[error("operation requires a scalar-valued cochain")]
    NonScalarModule,
}

/// Which module a cochain takes values in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModuleTag {
    /// The ground field `Q(eps)`.
    Scalar,
    /// The graded module spanned by `m_q`, `q` an integer.
    Graded,
}

/// A value in one of the two coefficient modules.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ModuleValue {
    Scalar(RatFunc),
    Graded(GradedElement),
}

impl ModuleValue {
    /// The zero value of the given module.
    pub fn zero(tag: ModuleTag) -> Self {
        match tag {
            ModuleTag::Scalar => ModuleValue::Scalar(RatFunc::zero()),
            ModuleTag::Graded => ModuleValue::Graded(GradedElement::zero()),
        }
    }

    /// Which module this value belongs to.
    pub fn tag(&self) -> ModuleTag {
        match self {
            ModuleValue::Scalar(_) => ModuleTag::Scalar,
            ModuleValue::Graded(_) => ModuleTag::Graded,
        }
    }

    /// True for the zero value.
    pub fn is_zero(&self) -> bool {
        match self {
            ModuleValue::Scalar(s) => s.is_zero(),
            ModuleValue::Graded(g) => g.is_zero(),
        }
    }

    /// The scalar inside, if this is a scalar value.
    pub fn as_scalar(&self) -> Option<&RatFunc> {
        match self {
            ModuleValue::Scalar(s) => Some(s),
            ModuleValue::Graded(_) => None,
        }
    }

    /// The graded element inside, if this is a graded value.
    pub fn as_graded(&self) -> Option<&GradedElement> {
        match self {
            ModuleValue::Graded(g) => Some(g),
            ModuleValue::Scalar(_) => None,
        }
    }

    /// Scalar multiple.
    #[must_use]
    pub fn scale(&self, c: &RatFunc) -> Self {
        match self {
            ModuleValue::Scalar(s) => ModuleValue::Scalar(s * c),
            ModuleValue::Graded(g) => ModuleValue::Graded(g.scale(c)),
        }
    }

    /// Negation.
    #[must_use]
    pub fn neg(&self) -> Self {
        self.scale(&RatFunc::from_int(-1))
    }

    /// Adds `other` (or its negation) in place.
    ///
    /// # Panics
    ///
    /// Panics if the tags differ; operations validate module tags at their
    /// boundaries, so a mismatch here is a bug.
    pub fn add_signed(&mut self, other: &ModuleValue, positive: bool) {
        match (self, other) {
            (ModuleValue::Scalar(a), ModuleValue::Scalar(b)) => {
                if positive {
                    *a += b;
                } else {
                    *a -= b;
                }
            }
            (ModuleValue::Graded(a), ModuleValue::Graded(b)) => {
                *a = if positive { &*a + b } else { &*a - b };
            }
            _ => panic!("module tags differ in add_signed"),
        }
    }
}

/// A left representation `chi` of the graded algebra on a module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Representation {
    /// `chi = 0`: every algebra element acts as zero. Compatible with both
    /// module tags.
    Trivial,
    /// `chi(e_p)(m_q) = g(p, q) m_{p+q}` for a finitely supported table
    /// `g`, zero off its support. Graded module only.
    GradedTable(BTreeMap<(i64, i64), RatFunc>),
    /// `chi(a) = ` left multiplication by `a` in the given family; the
    /// module is the algebra itself. Graded module only.
    LeftMult(StructureFamily),
}

impl Representation {
    /// The module tag this representation requires, or `None` when any
    /// module works (the trivial representation).
    pub fn module_tag(&self) -> Option<ModuleTag> {
        match self {
            Representation::Trivial => None,
            _ => Some(ModuleTag::Graded),
        }
    }

    /// True for the trivial (zero) representation.
    pub fn is_trivial(&self) -> bool {
        matches!(self, Representation::Trivial)
    }

    /// The action `chi(e_p)(v)`.
    ///
    /// # Panics
    ///
    /// Panics when a graded-only representation receives a scalar value;
    /// operations validate tags up front via [`Representation::module_tag`].
    pub fn act(&self, p: i64, v: &ModuleValue) -> ModuleValue {
        match self {
            Representation::Trivial => ModuleValue::zero(v.tag()),
            Representation::GradedTable(g) => {
                let el = v
                    .as_graded()
                    .expect("graded-table representation acting on a scalar value");
                let mut out = GradedElement::zero();
                for (&q, c) in el.terms() {
                    if let Some(gpq) = g.get(&(p, q)) {
                        out.add_term(p + q, gpq * c);
                    }
                }
                ModuleValue::Graded(out)
            }
            Representation::LeftMult(fam) => {
                let el = v
                    .as_graded()
                    .expect("left-multiplication representation acting on a scalar value");
                ModuleValue::Graded(fam.mul(&GradedElement::basis(p), el))
            }
        }
    }
}

/// Anything that evaluates like a cochain on basis tuples: stored tables
/// ([`Cochain`]) and lazy coboundaries ([`Delta`]).
pub trait CochainEval {
    /// Number of arguments.
    fn arity(&self) -> usize;
    /// Declared skew degree of the leading block (0 = none declared).
    fn kappa(&self) -> usize;
    /// Module the values live in.
    fn module_tag(&self) -> ModuleTag;
    /// Value on a tuple of basis degrees. Panics if `tuple.len() != arity`.
    fn eval_basis(&self, tuple: &[i64]) -> ModuleValue;
}

/// Sorts the first `kappa` entries of `tuple`; returns the canonical tuple
/// and the sign of the sorting permutation, or `None` when the leading
/// block has a repeated entry (the skew value is then zero).
fn canonicalize_block(tuple: &[i64], kappa: usize) -> Option<(Vec<i64>, bool)> {
    let mut out = tuple.to_vec();
    let mut positive = true;
    // insertion sort on the leading block, counting swaps
    for i in 1..kappa {
        let mut j = i;
        while j > 0 && out[j - 1] > out[j] {
            out.swap(j - 1, j);
            positive = !positive;
            j -= 1;
        }
    }
    for w in out[..kappa].windows(2) {
        if w[0] == w[1] {
            return None;
        }
    }
    Some((out, positive))
}

fn validate_kappa(arity: usize, kappa: usize) -> Result<(), ComplexError> {
    let ok = if arity <= 1 {
        kappa == 0
    } else {
        kappa == 0 || (2..=arity).contains(&kappa)
    };
    if ok {
        Ok(())
    } else {
        Err(ComplexError::InvalidKappa { kappa, arity })
    }
}

/// Serialized header of a cochain table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CochainHeader {
    pub n: usize,
    pub kappa: usize,
    pub module: ModuleTag,
}

/// One serialized cochain entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CochainRecord {
    pub tuple: Vec<i64>,
    pub value: ModuleValue,
}

/// A cochain in interchange form: header plus entry records.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CochainTable {
    pub header: CochainHeader,
    pub entries: Vec<CochainRecord>,
}

/// A finitely supported module-valued cochain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cochain {
    arity: usize,
    kappa: usize,
    tag: ModuleTag,
    entries: BTreeMap<Vec<i64>, ModuleValue>,
}

impl Cochain {
    /// An empty cochain. For `arity <= 1` the skew degree must be 0; for
    /// larger arities it is 0 (no declared block) or in `2..=arity`.
    pub fn new(arity: usize, kappa: usize, tag: ModuleTag) -> Result<Self, ComplexError> {
        validate_kappa(arity, kappa)?;
        Ok(Cochain {
            arity,
            kappa,
            tag,
            entries: BTreeMap::new(),
        })
    }

    /// The arity-0 cochain with the given value (an element of the module).
    pub fn constant(value: ModuleValue) -> Self {
        let tag = value.tag();
        let mut entries = BTreeMap::new();
        if !value.is_zero() {
            entries.insert(Vec::new(), value);
        }
        Cochain {
            arity: 0,
            kappa: 0,
            tag,
            entries,
        }
    }

    /// Adds `value` at `tuple`, canonicalizing the leading block: the
    /// entry is transported (with sign) to the representative with
    /// strictly increasing leading indices and accumulated there. A tuple
    /// with a repeated leading index contributes nothing.
    ///
    /// # Panics
    ///
    /// Panics on arity or module-tag mismatch.
    pub fn insert(&mut self, tuple: &[i64], value: ModuleValue) {
        assert_eq!(tuple.len(), self.arity, "tuple length != arity");
        assert_eq!(value.tag(), self.tag, "module tag mismatch");
        let (canon, positive) = if self.kappa >= 2 {
            match canonicalize_block(tuple, self.kappa) {
                Some(cs) => cs,
                None => return,
            }
        } else {
            (tuple.to_vec(), true)
        };
        let entry = self
            .entries
            .entry(canon.clone())
            .or_insert_with(|| ModuleValue::zero(self.tag));
        entry.add_signed(&value, positive);
        if entry.is_zero() {
            self.entries.remove(&canon);
        }
    }

    /// Builds a cochain storing `entries` verbatim (no canonicalization;
    /// exact duplicate tuples accumulate). Raw storage lets
    /// [`check_kappa_skew`] test whether declared skewness actually holds;
    /// the other operations expect canonically built cochains.
    pub fn from_raw_entries(
        arity: usize,
        kappa: usize,
        tag: ModuleTag,
        entries: impl IntoIterator<Item = (Vec<i64>, ModuleValue)>,
    ) -> Result<Self, ComplexError> {
        validate_kappa(arity, kappa)?;
        let mut map: BTreeMap<Vec<i64>, ModuleValue> = BTreeMap::new();
        for (tuple, value) in entries {
            if tuple.len() != arity {
                return Err(ComplexError::ArityMismatch {
                    expected: arity,
                    found: tuple.len(),
                });
            }
            if value.tag() != tag {
                return Err(ComplexError::ModuleMismatch {
                    expected: tag,
                    found: value.tag(),
                });
            }
            let entry = map.entry(tuple).or_insert_with(|| ModuleValue::zero(tag));
            entry.add_signed(&value, true);
        }
        map.retain(|_, v| !v.is_zero());
        Ok(Cochain {
            arity,
            kappa,
            tag,
            entries: map,
        })
    }

    /// The stored entries (canonical or raw, as built).
    pub fn entries(&self) -> impl Iterator<Item = (&Vec<i64>, &ModuleValue)> {
        self.entries.iter()
    }

    /// True when no entry is stored.
    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Multilinear extension to graded-element arguments by basis
    /// expansion. Central components of the arguments are ignored (the
    /// cochain arguments range over the centerless graded algebra).
    pub fn eval_elements(&self, args: &[GradedElement]) -> ModuleValue {
        assert_eq!(args.len(), self.arity, "argument count != arity");
        let mut acc = ModuleValue::zero(self.tag);
        let mut tuple = vec![0_i64; self.arity];
        expand(self, args, 0, &mut tuple, &RatFunc::one(), &mut acc);
        return acc;

        fn expand(
            psi: &Cochain,
            args: &[GradedElement],
            slot: usize,
            tuple: &mut Vec<i64>,
            coeff: &RatFunc,
            acc: &mut ModuleValue,
        ) {
            if slot == args.len() {
                let v = psi.eval_basis(tuple).scale(coeff);
                acc.add_signed(&v, true);
                return;
            }
            for (&p, c) in args[slot].terms() {
                tuple[slot] = p;
                expand(psi, args, slot + 1, tuple, &(coeff * c), acc);
            }
        }
    }

    /// Interchange form.
    pub fn to_table(&self) -> CochainTable {
        CochainTable {
            header: CochainHeader {
                n: self.arity,
                kappa: self.kappa,
                module: self.tag,
            },
            entries: self
                .entries
                .iter()
                .map(|(tuple, value)| CochainRecord {
                    tuple: tuple.clone(),
                    value: value.clone(),
                })
                .collect(),
        }
    }

    /// Rebuilds a cochain from interchange form, canonicalizing entries.
    pub fn from_table(table: &CochainTable) -> Result<Self, ComplexError> {
        let mut out = Cochain::new(table.header.n, table.header.kappa, table.header.module)?;
        for rec in &table.entries {
            if rec.tuple.len() != out.arity {
                return Err(ComplexError::ArityMismatch {
                    expected: out.arity,
                    found: rec.tuple.len(),
                });
            }
            if rec.value.tag() != out.tag {
                return Err(ComplexError::ModuleMismatch {
                    expected: out.tag,
                    found: rec.value.tag(),
                });
            }
            out.insert(&rec.tuple, rec.value.clone());
        }
        Ok(out)
    }
}

impl CochainEval for Cochain {
    fn arity(&self) -> usize {
        self.arity
    }

    fn kappa(&self) -> usize {
        self.kappa
    }

    fn module_tag(&self) -> ModuleTag {
        self.tag
    }

    /// Looks the tuple up directly first (so raw-stored entries answer
    /// verbatim), then transports from the canonical representative with
    /// the sign of the sorting permutation; repeated leading indices give
    /// zero.
    fn eval_basis(&self, tuple: &[i64]) -> ModuleValue {
        assert_eq!(tuple.len(), self.arity, "tuple length != arity");
        if let Some(v) = self.entries.get(tuple) {
            return v.clone();
        }
        if self.kappa >= 2 {
            match canonicalize_block(tuple, self.kappa) {
                None => ModuleValue::zero(self.tag),
                Some((canon, positive)) => match self.entries.get(&canon) {
                    Some(v) if positive => v.clone(),
                    Some(v) => v.neg(),
                    None => ModuleValue::zero(self.tag),
                },
            }
        } else {
            ModuleValue::zero(self.tag)
        }
    }
}

/// True iff the cochain's evaluation is antisymmetric under every
/// transposition of its first `kappa` slots, checked on the stored
/// support (and vacuously true for `kappa < 2`). Canonically built
/// cochains always pass; raw-stored tables can fail.
pub fn check_kappa_skew(psi: &Cochain) -> bool {
    let kappa = psi.kappa();
    if kappa < 2 {
        return true;
    }
    for (tuple, value) in psi.entries() {
        // a repeated leading index forces the value to be zero
        let repeated = (0..kappa).any(|i| ((i + 1)..kappa).any(|j| tuple[i] == tuple[j]));
        if repeated {
            if !value.is_zero() {
                return false;
            }
            continue;
        }
        // every adjacent transposition of the leading block must negate
        for i in 0..(kappa - 1) {
            let mut swapped = tuple.clone();
            swapped.swap(i, i + 1);
            let mut sum = psi.eval_basis(&swapped);
            sum.add_signed(value, true);
            if !sum.is_zero() {
                return false;
            }
        }
    }
    true
}

/// The lazy coboundary `delta(psi)`: an arity-`(n+1)` cochain evaluator.
///
/// On a tuple `(a_1, ..., a_n, a)` the value is
///
/// ```text
///   sum_i (-1)^(i+1) [ psi(..i^.., a_i * a)  -  a_i . psi(..i^.., a) ]
/// + sum_{i<j} (-1)^(i+j+1) psi([a_i, a_j], ..i^..j^.., a)
/// ```
///
/// with the bracket occupying the first slot, and for `n = 0` the value on
/// `(a)` is `-a . psi`. The action terms vanish for the trivial
/// representation.
pub struct Delta<'a, C: CochainEval> {
    psi: &'a C,
    rep: &'a Representation,
    fam: &'a StructureFamily,
}

/// Builds the lazy coboundary of `psi`, validating that the
/// representation's module matches the cochain's.
///
/// The true coboundary of a finitely supported cochain has infinite
/// support in general, so this returns an evaluator; use [`materialize`]
/// to restrict it to a finite table on a window.
pub fn delta<'a, C: CochainEval>(
    psi: &'a C,
    rep: &'a Representation,
    fam: &'a StructureFamily,
) -> Result<Delta<'a, C>, ComplexError> {
    if let Some(required) = rep.module_tag() {
        if required != psi.module_tag() {
            return Err(ComplexError::ModuleMismatch {
                expected: required,
                found: psi.module_tag(),
            });
        }
    }
    Ok(Delta { psi, rep, fam })
}

impl<C: CochainEval> CochainEval for Delta<'_, C> {
    fn arity(&self) -> usize {
        self.psi.arity() + 1
    }

    fn kappa(&self) -> usize {
        // the coboundary of a kappa-skew cochain of arity >= 2 is again
        // kappa-skew; coboundaries from arity <= 1 carry no skew block
        if self.psi.arity() >= 2 {
            self.psi.kappa()
        } else {
            0
        }
    }

    fn module_tag(&self) -> ModuleTag {
        self.psi.module_tag()
    }

    fn eval_basis(&self, tuple: &[i64]) -> ModuleValue {
        let n = self.psi.arity();
        assert_eq!(tuple.len(), n + 1, "tuple length != arity");
        let a = tuple[n];
        if n == 0 {
            return self.rep.act(a, &self.psi.eval_basis(&[])).neg();
        }
        let mut acc = ModuleValue::zero(self.psi.module_tag());
        let mut sub = Vec::with_capacity(n);
        for i in 0..n {
            let positive = i % 2 == 0; // (-1)^(i+1) with 1-based i
            sub.clear();
            sub.extend_from_slice(&tuple[..i]);
            sub.extend_from_slice(&tuple[i + 1..n]);
            // psi(..i^.., a_i * a); the cochain value is looked up first
            // so off-support tuples never pay for a coefficient
            sub.push(tuple[i] + a);
            let v = self.psi.eval_basis(&sub);
            sub.pop();
            if !v.is_zero() {
                let f = self.fam.coeff(tuple[i], a);
                if !f.is_zero() {
                    acc.add_signed(&v.scale(&f), positive);
                }
            }
            // - a_i . psi(..i^.., a)
            if !self.rep.is_trivial() {
                sub.push(a);
                let inner = self.psi.eval_basis(&sub);
                if !inner.is_zero() {
                    let v = self.rep.act(tuple[i], &inner);
                    acc.add_signed(&v, !positive);
                }
                sub.pop();
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                let positive = (i + j) % 2 == 1; // (-1)^(i+j+1) with 1-based i, j
                sub.clear();
                sub.push(tuple[i] + tuple[j]);
                for (k, &t) in tuple[..n].iter().enumerate() {
                    if k != i && k != j {
                        sub.push(t);
                    }
                }
                sub.push(a);
                let v = self.psi.eval_basis(&sub);
                if v.is_zero() {
                    continue;
                }
                let b = self.fam.bracket_coeff(tuple[i], tuple[j]);
                if !b.is_zero() {
                    acc.add_signed(&v.scale(&b), positive);
                }
            }
        }
        acc
    }
}

/// The value of `delta(delta(psi))` at a tuple of `arity + 2` basis
/// degrees. Zero whenever the representation satisfies the strong
/// compatibility law (the trivial representation always does) and `psi`
/// is 2-skew when its arity is at least 2.
pub fn delta_squared_residual(
    psi: &Cochain,
    rep: &Representation,
    fam: &StructureFamily,
    tuple: &[i64],
) -> Result<ModuleValue, ComplexError> {
    let d1 = delta(psi, rep, fam)?;
    let d2 = delta(&d1, rep, fam)?;
    Ok(d2.eval_basis(tuple))
}

/// Restricts an evaluator to a finite table over `[-window, window]`:
/// every in-window tuple (canonical representatives only, when a skew
/// block is declared) is evaluated and nonzero values are stored.
pub fn materialize<C: CochainEval>(src: &C, window: i64) -> Cochain {
    let arity = src.arity();
    let kappa = src.kappa();
    let mut out = Cochain::new(arity, kappa, src.module_tag())
        .expect("source evaluator carries a valid kappa");
    if arity == 0 {
        let v = src.eval_basis(&[]);
        if !v.is_zero() {
            out.insert(&[], v);
        }
        return out;
    }
    let mut tuple = vec![-window; arity];
    loop {
        let canonical = kappa < 2 || tuple[..kappa].windows(2).all(|w| w[0] < w[1]);
        if canonical {
            let v = src.eval_basis(&tuple);
            if !v.is_zero() {
                out.insert(&tuple, v);
            }
        }
        // odometer over [-window, window]^arity
        let mut slot = arity;
        loop {
            if slot == 0 {
                return out;
            }
            slot -= 1;
            if tuple[slot] < window {
                tuple[slot] += 1;
                for t in &mut tuple[slot + 1..] {
                    *t = -window;
                }
                break;
            }
        }
    }
}

/// Which compatibility law [`check_representation`] verifies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RepCheckMode {
    /// `chi(a)chi(b) - chi(b)chi(a) = chi([a, b])`: a representation of
    /// the commutator Lie algebra.
    Lie,
    /// `chi(a * b) = chi(a)chi(b)`: the strong law that makes the
    /// coboundary operator square to zero.
    Strong,
}

/// Outcome of a windowed representation check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepCheckReport {
    pub mode: RepCheckMode,
    pub window: i64,
    /// Basis triples `(p, q, r)` checked (0 for the trivial representation,
    /// which passes both laws identically).
    pub cases: usize,
    /// First `(p, q, module degree)` where the law fails, if any.
    pub counterexample: Option<(i64, i64, i64)>,
}

impl RepCheckReport {
    /// True when no counterexample was found.
    pub fn ok(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Checks the chosen compatibility law on all basis pairs `(e_p, e_q)` in
/// the window, acting on module basis elements `m_r` in the window;
/// reports the first counterexample or success.
pub fn check_representation(
    rep: &Representation,
    fam: &StructureFamily,
    mode: RepCheckMode,
    window: i64,
) -> RepCheckReport {
    let mut cases = 0;
    if rep.is_trivial() {
        return RepCheckReport {
            mode,
            window,
            cases,
            counterexample: None,
        };
    }
    for p in -window..=window {
        for q in -window..=window {
            for r in -window..=window {
                cases += 1;
                let m_r = ModuleValue::Graded(GradedElement::basis(r));
                let ab = rep.act(p, &rep.act(q, &m_r));
                let residual_zero = match mode {
                    RepCheckMode::Lie => {
                        let ba = rep.act(q, &rep.act(p, &m_r));
                        let mut lhs = ab;
                        lhs.add_signed(&ba, false);
                        let br = rep.act(p + q, &m_r).scale(&fam.bracket_coeff(p, q));
                        lhs.add_signed(&br, false);
                        lhs.is_zero()
                    }
                    RepCheckMode::Strong => {
                        let prod = rep.act(p + q, &m_r).scale(&fam.coeff(p, q));
                        let mut lhs = ab;
                        lhs.add_signed(&prod, false);
                        lhs.is_zero()
                    }
                };
                if !residual_zero {
                    return RepCheckReport {
                        mode,
                        window,
                        cases,
                        counterexample: Some((p, q, r)),
                    };
                }
            }
        }
    }
    RepCheckReport {
        mode,
        window,
        cases,
        counterexample: None,
    }
}

#[cfg(test)]
mod tests;
