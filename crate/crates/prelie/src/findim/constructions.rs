//! Constructions that produce quasiassociative algebras from smaller data:
//! semidirect sums along representations by derivations, the two-block
//! family [`ehrenfest`], and the phase-space extension [`cotangent`] with
//! its symplectic form.

use crate::scalars::RatFunc;

use super::{fd_is_derivation, fd_lie_constants, FinAlgebra, FindimError, LinearMap};

/// Builds the semidirect sum of `r` and `u` along `chi`, one matrix per
/// basis vector of `r` acting on `u`.
///
/// Preconditions, validated here: `chi` must represent the commutator of
/// `r` (`chi([e_i, e_j]) = chi_i chi_j - chi_j chi_i`), and every `chi_i`
/// must be a derivation of `u` — waived when `u` has the zero
/// multiplication, where every endomorphism is a derivation.
///
/// The output carries `r`'s basis first, then `u`'s; its blocks are `r`'s
/// table on the first factor, `chi` on mixed products with the `r` factor
/// on the left, zero on mixed products with the `u` factor on the left,
/// and `u`'s table on the second factor. When `r` and `u` pass the
/// quasiassociativity sweep, so does the output.
pub fn semidirect(
    r: &FinAlgebra,
    u: &FinAlgebra,
    chi: &[LinearMap],
) -> Result<FinAlgebra, FindimError> {
    if chi.len() != r.dim() {
        return Err(FindimError::DimensionMismatch {
            expected: r.dim(),
            found: chi.len(),
        });
    }
    for m in chi {
        if m.rows() != u.dim() || m.cols() != u.dim() {
            return Err(FindimError::DimensionMismatch {
                expected: u.dim(),
                found: if m.rows() != u.dim() {
                    m.rows()
                } else {
                    m.cols()
                },
            });
        }
    }

    // chi must intertwine the commutator of r with the matrix commutator.
    let lie = fd_lie_constants(r).constants;
    for i in 0..r.dim() {
        for j in 0..r.dim() {
            let comm = {
                let ij = chi[i].mul(&chi[j]);
                let ji = chi[j].mul(&chi[i]);
                let mut m = ij.clone();
                for a in 0..u.dim() {
                    for b in 0..u.dim() {
                        *m.at_mut(a, b) = ij.at(a, b) - ji.at(a, b);
                    }
                }
                m
            };
            let mut rep = LinearMap::zero(u.dim(), u.dim());
            for (s, chi_s) in chi.iter().enumerate() {
                let c = lie.at(s, i, j);
                if c.is_zero() {
                    continue;
                }
                for a in 0..u.dim() {
                    for b in 0..u.dim() {
                        *rep.at_mut(a, b) = rep.at(a, b) + &(c * chi_s.at(a, b));
                    }
                }
            }
            if comm != rep {
                return Err(FindimError::NotLieRep { i, j });
            }
        }
    }

    // Each chi_i must be a derivation of u, unless u is abelian.
    if !u.is_abelian_algebra() {
        for (index, m) in chi.iter().enumerate() {
            let report = fd_is_derivation(m, u)?;
            if let Some((a, b)) = report.witness {
                return Err(FindimError::NotDerivation {
                    chi_index: index,
                    u: a,
                    v: b,
                });
            }
        }
    }

    let (dr, du) = (r.dim(), u.dim());
    let mut labels: Vec<String> = r.labels().iter().map(|l| format!("r.{l}")).collect();
    labels.extend(u.labels().iter().map(|l| format!("u.{l}")));
    let mut out = FinAlgebra::zero(dr + du).with_labels(labels);
    for s in 0..dr {
        for i in 0..dr {
            for j in 0..dr {
                out.set_theta(s, i, j, r.theta(s, i, j).clone());
            }
        }
    }
    for (i, m) in chi.iter().enumerate() {
        for s in 0..du {
            for j in 0..du {
                out.set_theta(dr + s, i, dr + j, m.at(s, j).clone());
            }
        }
    }
    for s in 0..du {
        for i in 0..du {
            for j in 0..du {
                out.set_theta(dr + s, dr + i, dr + j, u.theta(s, i, j).clone());
            }
        }
    }
    Ok(out)
}

/// The two-block algebra on basis `(e_1..e_d, f_1..f_d)` whose only
/// nonzero products are `e_i f_j = A_{ji} f_j`: the semidirect sum of two
/// zero multiplications along the diagonal action encoded by `a`.
///
/// Its commutators are `[e_i, f_j] = A_{ji} f_j` with both blocks
/// self-commuting, and the table passes the quasiassociativity sweep for
/// every matrix `a`.
pub fn ehrenfest(a: &LinearMap, d: usize) -> Result<FinAlgebra, FindimError> {
    if a.rows() != d || a.cols() != d {
        return Err(FindimError::ShapeMismatch {
            rows: a.rows(),
            cols: a.cols(),
            expected: d,
        });
    }
    let mut labels: Vec<String> = (1..=d).map(|i| format!("e{i}")).collect();
    labels.extend((1..=d).map(|i| format!("f{i}")));
    let mut out = FinAlgebra::zero(2 * d).with_labels(labels);
    for i in 0..d {
        for j in 0..d {
            // e_i f_j = A_{ji} f_j.
            out.set_theta(d + j, i, d + j, a.at(j, i).clone());
        }
    }
    Ok(out)
}

/// The phase-space extension of `r`: the algebra on `r`'s basis followed
/// by a dual copy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CotangentAlgebra {
    /// The base algebra the extension was built from.
    pub base: FinAlgebra,
    /// The full `2d`-dimensional multiplication table.
    pub full: FinAlgebra,
}

/// Builds the phase-space extension of `r` on basis
/// `(e_1..e_d, e1*..ed*)`.
///
/// The base block keeps `r`'s products. A base factor acts on a dual
/// factor through the pairing: the `e_k*`-coefficient of `e_i e_j*` is
/// `-theta^j_{ik}`, so that pairing the product against `e_k` is the
/// negative of pairing `e_j*` against `e_i e_k`. Dual factors on the left
/// multiply to zero.
pub fn cotangent(r: &FinAlgebra) -> CotangentAlgebra {
    let d = r.dim();
    let mut labels: Vec<String> = r.labels().to_vec();
    labels.extend(r.labels().iter().map(|l| format!("{l}*")));
    let mut full = FinAlgebra::zero(2 * d).with_labels(labels);
    for s in 0..d {
        for i in 0..d {
            for j in 0..d {
                full.set_theta(s, i, j, r.theta(s, i, j).clone());
                // e_i e_j* = -sum_k theta^j_{ik} e_k*.
                full.set_theta(d + j, i, d + s, -r.theta(s, i, j));
            }
        }
    }
    CotangentAlgebra {
        base: r.clone(),
        full,
    }
}

/// The symplectic pairing on the phase-space basis: `+1` between `e_a*`
/// and `e_a`, `-1` the other way, zero otherwise.
fn symplectic_pairing(d: usize, a: usize, b: usize) -> RatFunc {
    if a < d && b >= d && b - d == a {
        RatFunc::from_int(-1)
    } else if a >= d && b < d && a - d == b {
        RatFunc::from_int(1)
    } else {
        RatFunc::zero()
    }
}

fn symplectic_against(d: usize, a: usize, w: &[RatFunc]) -> RatFunc {
    let mut acc = RatFunc::zero();
    for (b, coeff) in w.iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        let pairing = symplectic_pairing(d, a, b);
        if !pairing.is_zero() {
            acc += &(coeff * &pairing);
        }
    }
    acc
}

/// The cocycle residual of the symplectic form on the phase-space
/// extension of `r`, at one basis triple `(a, b, c)` of the `2d`-dim
/// carrier:
///
/// ```text
/// S(e_b, e_a e_c) - S(e_a, e_b e_c) + S([e_a, e_b], e_c),
/// ```
///
/// where `S` pairs a base vector with its dual partner. Identically zero
/// when `r` is quasiassociative.
pub fn symplectic_cocycle_residual(
    r: &FinAlgebra,
    a: usize,
    b: usize,
    c: usize,
) -> Result<RatFunc, FindimError> {
    let d = r.dim();
    let full = cotangent(r).full;
    for index in [a, b, c] {
        if index >= 2 * d {
            return Err(FindimError::IndexOutOfRange { index, dim: 2 * d });
        }
    }
    let basis = |t: usize| -> Vec<RatFunc> {
        let mut v = vec![RatFunc::zero(); 2 * d];
        v[t] = RatFunc::one();
        v
    };
    let ac = full.mul(&basis(a), &basis(c))?;
    let bc = full.mul(&basis(b), &basis(c))?;
    let ab = full.commutator(&basis(a), &basis(b))?;

    let mut acc = symplectic_against(d, b, &ac);
    acc -= &symplectic_against(d, a, &bc);
    // S([e_a, e_b], e_c) = -S(e_c, [e_a, e_b]) by skewness of the pairing.
    acc -= &symplectic_against(d, c, &ab);
    Ok(acc)
}

/// The two truth values of the derivation-inclusion check: Leibniz for the
/// multiplication, and Leibniz for the commutator bracket.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerInclusionReport {
    pub algebra_derivation: bool,
    pub algebra_witness: Option<(usize, usize)>,
    pub lie_derivation: bool,
    pub lie_witness: Option<(usize, usize)>,
    /// Algebra derivations are always bracket derivations; this is the
    /// verified implication.
    pub inclusion_holds: bool,
}

/// Checks whether `map` is a derivation of `r`'s multiplication and of its
/// commutator bracket, and that the first property implies the second.
pub fn der_inclusion_check(
    r: &FinAlgebra,
    map: &LinearMap,
) -> Result<DerInclusionReport, FindimError> {
    let algebra = fd_is_derivation(map, r)?;
    let lie = fd_lie_constants(r).constants;
    let dim = r.dim();
    let column = |j: usize| -> Vec<RatFunc> { (0..dim).map(|i| map.at(i, j).clone()).collect() };
    let mut lie_witness = None;
    'outer: for u in 0..dim {
        for v in 0..dim {
            let mut eu = vec![RatFunc::zero(); dim];
            eu[u] = RatFunc::one();
            let mut ev = vec![RatFunc::zero(); dim];
            ev[v] = RatFunc::one();
            let lhs = map.mul_vec(&lie.bracket(&eu, &ev));
            let rhs1 = lie.bracket(&column(u), &ev);
            let rhs2 = lie.bracket(&eu, &column(v));
            let holds = lhs
                .iter()
                .zip(rhs1.iter().zip(&rhs2))
                .all(|(l, (r1, r2))| (&(l - r1) - r2).is_zero());
            if !holds {
                lie_witness = Some((u, v));
                break 'outer;
            }
        }
    }
    let lie_derivation = lie_witness.is_none();
    Ok(DerInclusionReport {
        algebra_derivation: algebra.ok,
        algebra_witness: algebra.witness,
        lie_derivation,
        lie_witness,
        inclusion_holds: !algebra.ok || lie_derivation,
    })
}
