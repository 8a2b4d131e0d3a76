//! Chains, the homology differential, and the duality pairing.
//!
//! A chain of arity `n` is a finitely supported formal sum of pure
//! tensors `m̄ ⊗ e_{p_1} ⊗ ... ⊗ e_{p_n}` with scalar coefficients, keyed
//! by the module degree `m` and the tuple of algebra degrees. Tensors are
//! stored raw — no skew canonicalization — because the differential and
//! the pairing are termwise linear in tensors and the duality identity
//! holds tensor by tensor; the declared skew degree `kappa` records which
//! skew subcomplex a chain is meant to inhabit, and [`Chain::insert_skew`]
//! embeds that subcomplex by expanding the alternating sum over the
//! leading block.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::graded::StructureFamily;
use crate::scalars::RatFunc;

use super::{
    canonicalize_block, delta, validate_kappa, CochainEval, ComplexError, ModuleTag, Representation,
};

/// A right action of the graded algebra on the integer-indexed module
/// spanned by `n̄_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RightAction {
    /// `n̄ • a = 0` for every `a`.
    Trivial,
    /// `n̄_m • e_p = h(m, p) n̄_{m+p}` for a finitely supported table `h`,
    /// zero off its support.
    Table(BTreeMap<(i64, i64), RatFunc>),
}

impl RightAction {
    /// The coefficient `h(m, p)`, `None` when it is zero.
    pub fn coeff(&self, m: i64, p: i64) -> Option<RatFunc> {
        match self {
            RightAction::Trivial => None,
            RightAction::Table(h) => h.get(&(m, p)).filter(|c| !c.is_zero()).cloned(),
        }
    }
}

/// Checks the compatibility law `f(p,q) h(m, p+q) = -h(m,p) h(m+p, q)` on
/// every combination of the given module and algebra degrees, returning
/// the first violating triple.
pub fn validate_right_action(
    action: &RightAction,
    fam: &StructureFamily,
    module_degrees: &[i64],
    algebra_degrees: &[i64],
) -> Result<(), ComplexError> {
    if matches!(action, RightAction::Trivial) {
        return Ok(());
    }
    let zero = RatFunc::zero();
    for &m in module_degrees {
        for &p in algebra_degrees {
            for &q in algebra_degrees {
                let lhs = match action.coeff(m, p + q) {
                    Some(h) => &fam.coeff(p, q) * &h,
                    None => zero.clone(),
                };
                let rhs = match (action.coeff(m, p), action.coeff(m + p, q)) {
                    (Some(h1), Some(h2)) => -&(&h1 * &h2),
                    _ => zero.clone(),
                };
                if lhs != rhs {
                    return Err(ComplexError::InvalidRightAction { m, p, q });
                }
            }
        }
    }
    Ok(())
}

/// One serialized chain entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainRecord {
    pub module_degree: i64,
    pub tuple: Vec<i64>,
    pub coeff: RatFunc,
}

/// A chain in interchange form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainTable {
    pub n: usize,
    pub kappa: usize,
    pub entries: Vec<ChainRecord>,
}

/// A finitely supported formal sum of pure tensors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    arity: usize,
    kappa: usize,
    entries: BTreeMap<(i64, Vec<i64>), RatFunc>,
}

impl Chain {
    /// An empty chain. The skew degree obeys the same rule as for
    /// cochains: 0 for arity <= 1, otherwise 0 or in `2..=arity`.
    pub fn new(arity: usize, kappa: usize) -> Result<Self, ComplexError> {
        validate_kappa(arity, kappa)?;
        Ok(Chain {
            arity,
            kappa,
            entries: BTreeMap::new(),
        })
    }

    /// Number of algebra slots.
    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Declared skew degree of the leading block.
    pub fn kappa(&self) -> usize {
        self.kappa
    }

    /// Adds one pure tensor `coeff * (n̄_m ⊗ e_{tuple})`, stored raw.
    ///
    /// # Panics
    ///
    /// Panics when `tuple.len() != arity`.
    pub fn insert(&mut self, m: i64, tuple: &[i64], coeff: &RatFunc) {
        assert_eq!(tuple.len(), self.arity, "tuple length != arity");
        if coeff.is_zero() {
            return;
        }
        let key = (m, tuple.to_vec());
        let entry = self
            .entries
            .entry(key.clone())
            .or_insert_with(RatFunc::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.entries.remove(&key);
        }
    }

    /// Adds the alternating expansion of a tensor over the leading block:
    /// the signed sum of `coeff * (n̄_m ⊗ e_{sigma(tuple)})` over all
    /// permutations `sigma` of the first `kappa` slots. This embeds the
    /// skew subcomplex into raw tensors; a repeated leading index makes
    /// the expansion vanish.
    pub fn insert_skew(&mut self, m: i64, tuple: &[i64], coeff: &RatFunc) {
        assert_eq!(tuple.len(), self.arity, "tuple length != arity");
        if self.kappa < 2 {
            self.insert(m, tuple, coeff);
            return;
        }
        let block: BTreeSet<i64> = tuple[..self.kappa].iter().copied().collect();
        if block.len() < self.kappa {
            return;
        }
        let mut perm = tuple.to_vec();
        let mut stack = vec![0_usize; self.kappa];
        // Heap's algorithm over the leading block, tracking parity
        self.insert(m, &perm, coeff);
        let mut positive = true;
        let mut i = 1;
        while i < self.kappa {
            if stack[i] < i {
                if i % 2 == 0 {
                    perm.swap(0, i);
                } else {
                    perm.swap(stack[i], i);
                }
                positive = !positive;
                let signed = if positive { coeff.clone() } else { -coeff };
                self.insert(m, &perm, &signed);
                stack[i] += 1;
                i = 1;
            } else {
                stack[i] = 0;
                i += 1;
            }
        }
    }

    /// The stored tensors.
    pub fn entries(&self) -> impl Iterator<Item = (&(i64, Vec<i64>), &RatFunc)> {
        self.entries.iter()
    }

    /// True when no tensor is stored.
    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// The distinct module degrees appearing in the support.
    pub fn module_degrees(&self) -> Vec<i64> {
        let set: BTreeSet<i64> = self.entries.keys().map(|(m, _)| *m).collect();
        set.into_iter().collect()
    }

    /// The distinct algebra degrees appearing in any slot of the support.
    pub fn algebra_degrees(&self) -> Vec<i64> {
        let set: BTreeSet<i64> = self
            .entries
            .keys()
            .flat_map(|(_, tuple)| tuple.iter().copied())
            .collect();
        set.into_iter().collect()
    }

    /// Projects onto the `kappa`-skew quotient: each tensor's leading
    /// `kappa`-block is brought to strictly increasing order with the
    /// sign of the sorting permutation, merging tensors that pair
    /// identically against every `kappa`-skew cochain; tensors with a
    /// repeated leading index are dropped. Two raw chains with the same
    /// reduction are the same functional on skew cochains, so this is
    /// where homological identities live: the squared differential of a
    /// skew chain reduces to zero even when its raw tensors survive.
    pub fn skew_reduce(&self, kappa: usize) -> Result<Chain, ComplexError> {
        let mut out = Chain::new(self.arity, kappa)?;
        for ((m, tuple), coeff) in &self.entries {
            if let Some((canon, positive)) = canonicalize_block(tuple, kappa) {
                out.insert(*m, &canon, &if positive { coeff.clone() } else { -coeff });
            }
        }
        Ok(out)
    }

    /// Interchange form.
    pub fn to_table(&self) -> ChainTable {
        ChainTable {
            n: self.arity,
            kappa: self.kappa,
            entries: self
                .entries
                .iter()
                .map(|((m, tuple), coeff)| ChainRecord {
                    module_degree: *m,
                    tuple: tuple.clone(),
                    coeff: coeff.clone(),
                })
                .collect(),
        }
    }

    /// Rebuilds a chain from interchange form.
    pub fn from_table(table: &ChainTable) -> Result<Self, ComplexError> {
        let mut out = Chain::new(table.n, table.kappa)?;
        for rec in &table.entries {
            if rec.tuple.len() != out.arity {
                return Err(ComplexError::ArityMismatch {
                    expected: out.arity,
                    found: rec.tuple.len(),
                });
            }
            out.insert(rec.module_degree, &rec.tuple, &rec.coeff);
        }
        Ok(out)
    }
}

/// The homology differential:
///
/// ```text
/// ∂(n̄ ⊗ a_1 ⊗ ... ⊗ a_n) =
///     sum_{i<n} (-1)^(i+1) n̄ ⊗ ..i^.. ⊗ (a_i * a_n)
///   + sum_{i<j<n} (-1)^(i+j+1) n̄ ⊗ [a_i, a_j] ⊗ ..i^..j^.. ⊗ a_n
///   + sum_{i<n} (-1)^(i+1) (n̄ • a_i) ⊗ ..i^.. ⊗ a_n
/// ```
///
/// with the bracket in the first slot and the last slot fixed;
/// `∂(n̄ ⊗ a) = n̄ • a` and `∂ = 0` on arity-0 chains. Before computing,
/// the right action is validated on every combination of module and
/// algebra degrees the chain touches.
///
/// # Errors
///
/// [`ComplexError::InvalidRightAction`] with the first witness triple.
pub fn boundary(
    chain: &Chain,
    fam: &StructureFamily,
    action: &RightAction,
) -> Result<Chain, ComplexError> {
    validate_right_action(
        action,
        fam,
        &chain.module_degrees(),
        &chain.algebra_degrees(),
    )?;
    let n = chain.arity;
    if n == 0 {
        return Chain::new(0, 0);
    }
    let mut out = Chain::new(n - 1, 0)?;
    for ((m, tuple), coeff) in &chain.entries {
        if n == 1 {
            if let Some(h) = action.coeff(*m, tuple[0]) {
                out.insert(m + tuple[0], &[], &(coeff * &h));
            }
            continue;
        }
        let last = tuple[n - 1];
        for i in 0..(n - 1) {
            let positive = i % 2 == 0; // (-1)^(i+1) with 1-based i
                                       // n̄ ⊗ ..i^.. ⊗ (a_i * a_n)
            let f = fam.coeff(tuple[i], last);
            if !f.is_zero() {
                let mut t: Vec<i64> = Vec::with_capacity(n - 1);
                t.extend_from_slice(&tuple[..i]);
                t.extend_from_slice(&tuple[i + 1..n - 1]);
                t.push(tuple[i] + last);
                let c = coeff * &f;
                out.insert(*m, &t, &if positive { c.clone() } else { -&c });
            }
            // (n̄ • a_i) ⊗ ..i^.. ⊗ a_n
            if let Some(h) = action.coeff(*m, tuple[i]) {
                let mut t: Vec<i64> = Vec::with_capacity(n - 1);
                t.extend_from_slice(&tuple[..i]);
                t.extend_from_slice(&tuple[i + 1..]);
                let c = coeff * &h;
                out.insert(m + tuple[i], &t, &if positive { c.clone() } else { -&c });
            }
        }
        for i in 0..(n - 1) {
            for j in (i + 1)..(n - 1) {
                let positive = (i + j) % 2 == 1; // (-1)^(i+j+1) with 1-based i, j
                let b = fam.bracket_coeff(tuple[i], tuple[j]);
                if b.is_zero() {
                    continue;
                }
                let mut t: Vec<i64> = Vec::with_capacity(n - 1);
                t.push(tuple[i] + tuple[j]);
                for (k, &v) in tuple[..n - 1].iter().enumerate() {
                    if k != i && k != j {
                        t.push(v);
                    }
                }
                t.push(last);
                let c = coeff * &b;
                out.insert(*m, &t, &if positive { c.clone() } else { -&c });
            }
        }
    }
    Ok(out)
}

/// The pairing `⟨chain, psi⟩ = sum coeff(m, tuple) * psi(tuple)` for a
/// scalar-valued cochain evaluator. Under trivial actions the module
/// degree is inert bookkeeping, so every entry pairs through its tuple
/// alone.
pub fn pair<C: CochainEval>(chain: &Chain, psi: &C) -> Result<RatFunc, ComplexError> {
    if psi.module_tag() != ModuleTag::Scalar {
        return Err(ComplexError::NonScalarModule);
    }
    if psi.arity() != chain.arity {
        return Err(ComplexError::ArityMismatch {
            expected: chain.arity,
            found: psi.arity(),
        });
    }
    let mut acc = RatFunc::zero();
    for ((_, tuple), coeff) in &chain.entries {
        let v = psi.eval_basis(tuple);
        let s = v.as_scalar().expect("scalar tag checked above");
        if !s.is_zero() {
            acc += &(coeff * s);
        }
    }
    Ok(acc)
}

/// The duality residual `⟨∂Psi, psi⟩ − ⟨Psi, delta(psi)⟩` for a chain of
/// arity `n` against a scalar cochain of arity `n − 1`, both with trivial
/// actions. Contract: identically zero — the differential and the
/// coboundary are exact transposes of one another, tensor by tensor.
///
/// # Errors
///
/// [`ComplexError::ArityMismatch`] unless `psi.arity() + 1 = Psi.arity()`;
/// [`ComplexError::NonScalarModule`] for graded-valued `psi`;
/// [`ComplexError::KappaMismatch`] when both sides declare skew blocks of
/// different degrees.
pub fn duality_residual(
    chain: &Chain,
    psi: &super::Cochain,
    fam: &StructureFamily,
) -> Result<RatFunc, ComplexError> {
    if psi.module_tag() != ModuleTag::Scalar {
        return Err(ComplexError::NonScalarModule);
    }
    if chain.arity == 0 || psi.arity() + 1 != chain.arity {
        return Err(ComplexError::ArityMismatch {
            expected: chain.arity.saturating_sub(1),
            found: psi.arity(),
        });
    }
    if chain.kappa >= 2 && psi.kappa() >= 2 && chain.kappa != psi.kappa() {
        return Err(ComplexError::KappaMismatch {
            left: chain.kappa,
            right: psi.kappa(),
        });
    }
    let lhs = pair(&boundary(chain, fam, &RightAction::Trivial)?, psi)?;
    let d = delta(psi, &Representation::Trivial, fam)?;
    let rhs = pair(chain, &d)?;
    Ok(&lhs - &rhs)
}
