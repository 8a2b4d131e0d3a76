//! Property-based tests: field axioms for the scalar tower, canonical-form
//! idempotence, evaluation homomorphism, the algebraic laws of the graded
//! products (bilinearity, grading, Jacobi, cocycle identities), and the
//! complex-level identities (coboundary linearity, squared operators,
//! duality) on random finitely supported data.

use proptest::prelude::*;

use prelie::complex::{
    boundary, delta, delta_squared_residual, duality_residual, Chain, Cochain, ModuleTag,
    ModuleValue, Representation, RightAction,
};
use prelie::diffalg::{
    adjoint_residual, derivative, gf_cocycle, lie_bracket, nd_bracket, nd_star, res, star,
    LaurentPoly, NdElement, OpPrimitive, OperatorExpr,
};
use prelie::findim::{
    cotangent, ehrenfest, fd_lie_constants, fd_quasiassoc_witness, semidirect,
    symplectic_cocycle_residual, FinAlgebra,
};
use prelie::graded::{
    antisymmetrize, trivial_cocycle, CentralCharge, DualVector, GradedElement, StructureFamily,
};
use prelie::linalg::Matrix;
use prelie::scalars::{ratio, EpsPoly, Rat, RatFunc};

fn arb_rat() -> impl Strategy<Value = Rat> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| ratio(n, d))
}

fn arb_poly(max_len: usize) -> impl Strategy<Value = EpsPoly> {
    proptest::collection::vec(arb_rat(), 0..=max_len).prop_map(EpsPoly::from_coeffs)
}

fn arb_nonzero_poly(max_len: usize) -> impl Strategy<Value = EpsPoly> {
    arb_poly(max_len).prop_filter("nonzero", |p| !p.is_zero())
}

fn arb_ratfunc() -> impl Strategy<Value = RatFunc> {
    (arb_poly(3), arb_nonzero_poly(2))
        .prop_map(|(num, den)| RatFunc::new(num, den).expect("den nonzero"))
}

fn arb_family() -> impl Strategy<Value = StructureFamily> {
    prop_oneof![
        Just(StructureFamily::VirasoroEps),
        arb_rat().prop_map(StructureFamily::Lambda),
    ]
}

fn arb_tuple(n: usize) -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(-5i64..=5, n)
}

/// A scalar cochain with a 2-skew leading block, built through the
/// canonicalizing insert.
fn arb_skew_cochain(n: usize) -> impl Strategy<Value = Cochain> {
    proptest::collection::vec((arb_tuple(n), arb_ratfunc()), 0..=3).prop_map(move |entries| {
        let mut psi = Cochain::new(n, 2, ModuleTag::Scalar).unwrap();
        for (t, v) in entries {
            psi.insert(&t, ModuleValue::Scalar(v));
        }
        psi
    })
}

/// A scalar cochain with no declared skew block (raw storage).
fn arb_raw_cochain(n: usize) -> impl Strategy<Value = Cochain> {
    proptest::collection::vec((arb_tuple(n), arb_ratfunc()), 0..=3).prop_map(move |entries| {
        let mut psi = Cochain::new(n, 0, ModuleTag::Scalar).unwrap();
        for (t, v) in entries {
            psi.insert(&t, ModuleValue::Scalar(v));
        }
        psi
    })
}

/// A raw chain of the given arity.
fn arb_chain(n: usize) -> impl Strategy<Value = Chain> {
    proptest::collection::vec((-4i64..=4, arb_tuple(n), arb_ratfunc()), 0..=3).prop_map(
        move |entries| {
            let mut c = Chain::new(n, 0).unwrap();
            for (m, t, v) in entries {
                c.insert(m, &t, &v);
            }
            c
        },
    )
}

fn arb_element() -> impl Strategy<Value = GradedElement> {
    proptest::collection::btree_map(-8i64..=8, arb_ratfunc(), 0..=3).prop_map(|terms| {
        let mut out = GradedElement::zero();
        for (p, c) in terms {
            out.add_term(p, c);
        }
        out
    })
}

proptest! {
    // ---- scalar tower -------------------------------------------------

    #[test]
    fn addition_is_associative(a in arb_ratfunc(), b in arb_ratfunc(), c in arb_ratfunc()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
    }

    #[test]
    fn multiplication_distributes(a in arb_ratfunc(), b in arb_ratfunc(), c in arb_ratfunc()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn nonzero_elements_have_inverses(a in arb_ratfunc()) {
        prop_assume!(!a.is_zero());
        let inv = a.inverse().unwrap();
        prop_assert!((&a * &inv).is_one());
    }

    #[test]
    fn subtraction_of_self_is_zero(a in arb_ratfunc()) {
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn canonical_form_is_idempotent(a in arb_ratfunc()) {
        // rebuilding a value from its canonical parts reproduces it exactly
        let rebuilt = RatFunc::new(a.num().clone(), a.den().clone()).unwrap();
        prop_assert_eq!(&rebuilt, &a);
        // and scaling num and den by a common nonzero factor changes nothing
        let factor = EpsPoly::from_coeffs(vec![ratio(3, 2), ratio(-1, 5)]);
        let scaled = RatFunc::new(a.num() * &factor, a.den() * &factor).unwrap();
        prop_assert_eq!(scaled, a);
    }

    #[test]
    fn evaluation_is_a_homomorphism(
        a in arb_ratfunc(),
        b in arb_ratfunc(),
        n in -4i64..=4,
        d in 1i64..=3,
    ) {
        let eps0 = ratio(n, d);
        let (Ok(va), Ok(vb)) = (a.eval(&eps0), b.eval(&eps0)) else {
            return Ok(()); // pole in an operand: nothing to compare
        };
        if let Ok(vs) = (&a + &b).eval(&eps0) {
            prop_assert_eq!(vs, &va + &vb);
        }
        if let Ok(vd) = (&a - &b).eval(&eps0) {
            prop_assert_eq!(vd, &va - &vb);
        }
        if let Ok(vp) = (&a * &b).eval(&eps0) {
            prop_assert_eq!(vp, &va * &vb);
        }
        if !b.is_zero() {
            let quot = a.checked_div(&b).unwrap();
            if let Ok(vq) = quot.eval(&eps0) {
                if vb != Rat::from_integer(0.into()) {
                    prop_assert_eq!(vq, va / vb);
                }
            }
        }
    }

    #[test]
    fn division_with_remainder_reconstructs_the_dividend(
        a in arb_poly(5),
        b in arb_nonzero_poly(3),
    ) {
        let (q, r) = a.div_rem(&b);
        prop_assert_eq!(&(&(&q * &b) + &r), &a);
        if let Some(rd) = r.degree() {
            prop_assert!(rd < b.degree().unwrap());
        }
    }

    #[test]
    fn gcd_divides_both_arguments(a in arb_nonzero_poly(4), b in arb_nonzero_poly(4)) {
        let g = a.gcd(&b);
        prop_assert!(!g.is_zero());
        prop_assert!(a.div_rem(&g).1.is_zero());
        prop_assert!(b.div_rem(&g).1.is_zero());
    }

    // ---- graded products ---------------------------------------------

    #[test]
    fn quasiassociativity_holds_on_wide_random_triples(
        fam in arb_family(),
        p in -30i64..=30,
        q in -30i64..=30,
        r in -30i64..=30,
    ) {
        prop_assert!(fam.quasiassoc_residual(p, q, r).is_zero());
    }

    #[test]
    fn commutators_reproduce_the_witt_coefficient(
        fam in arb_family(),
        p in -30i64..=30,
        q in -30i64..=30,
    ) {
        prop_assert!(fam.lie_boundary_residual(p, q).is_zero());
    }

    #[test]
    fn mul_is_bilinear(
        fam in arb_family(),
        a in arb_element(),
        b in arb_element(),
        c in arb_element(),
    ) {
        prop_assert_eq!(fam.mul(&(&a + &b), &c), &fam.mul(&a, &c) + &fam.mul(&b, &c));
        prop_assert_eq!(fam.mul(&a, &(&b + &c)), &fam.mul(&a, &b) + &fam.mul(&a, &c));
    }

    #[test]
    fn products_of_basis_vectors_are_concentrated_in_one_degree(
        fam in arb_family(),
        p in -20i64..=20,
        q in -20i64..=20,
    ) {
        let prod = fam.mul(&GradedElement::basis(p), &GradedElement::basis(q));
        prop_assert!(prod.terms().all(|(&d, _)| d == p + q));
        prop_assert!(prod.central().is_zero());
    }

    #[test]
    fn commutator_satisfies_jacobi(
        fam in arb_family(),
        a in arb_element(),
        b in arb_element(),
        c in arb_element(),
    ) {
        let j = &(&fam.commutator(&fam.commutator(&a, &b), &c)
            + &fam.commutator(&fam.commutator(&b, &c), &a))
            + &fam.commutator(&fam.commutator(&c, &a), &b);
        prop_assert!(j.is_zero());
    }

    #[test]
    fn trivial_cocycles_satisfy_the_cocycle_identity(
        fam in arb_family(),
        support in proptest::collection::btree_map(-6i64..=6, arb_ratfunc(), 0..=3),
        p in -8i64..=8,
        q in -8i64..=8,
        r in -8i64..=8,
    ) {
        let mut u = DualVector::zero();
        for (deg, c) in support {
            u.add_term(deg, c);
        }
        let omega = |a: i64, b: i64| trivial_cocycle(&u, &fam, a, b);
        let lhs = &(&(&fam.coeff(p, r) * &omega(q, p + r))
            - &(&fam.coeff(q, r) * &omega(p, q + r)))
            + &(&fam.bracket_coeff(p, q) * &omega(p + q, r));
        prop_assert!(lhs.is_zero());
    }

    #[test]
    fn extended_commutator_adds_exactly_the_antisymmetrized_central_term(
        a in arb_element(),
        b in arb_element(),
    ) {
        let fam = StructureFamily::VirasoroEps;
        let cc = CentralCharge::Virasoro;
        let ext = &fam.extended_mul(&cc, &a, &b) - &fam.extended_mul(&cc, &b, &a);
        let plain = fam.commutator(&a, &b);
        let diff = &ext - &plain;
        prop_assert!(diff.terms().next().is_none(), "graded parts must agree");
        let mut expect = RatFunc::zero();
        for (&p, ca) in a.terms() {
            if let Some(cb) = b.coeff(-p) {
                expect += &(&(ca * cb) * &antisymmetrize(&cc, p, -p));
            }
        }
        prop_assert_eq!(diff.central(), &expect);
    }

    // ---- the cochain complex -------------------------------------------

    #[test]
    fn coboundary_is_linear(
        a in arb_skew_cochain(2),
        b in arb_skew_cochain(2),
        fam in arb_family(),
        t in arb_tuple(3),
    ) {
        let mut sum = a.clone();
        for (tuple, v) in b.entries() {
            sum.insert(tuple, v.clone());
        }
        let da = delta(&a, &Representation::Trivial, &fam).unwrap();
        let db = delta(&b, &Representation::Trivial, &fam).unwrap();
        let dsum = delta(&sum, &Representation::Trivial, &fam).unwrap();
        use prelie::complex::CochainEval;
        let mut resid = dsum.eval_basis(&t);
        resid.add_signed(&da.eval_basis(&t), false);
        resid.add_signed(&db.eval_basis(&t), false);
        prop_assert!(resid.is_zero());
    }

    #[test]
    fn coboundary_squares_to_zero_on_random_skew_cochains(
        psi2 in arb_skew_cochain(2),
        psi3 in arb_skew_cochain(3),
        fam in arb_family(),
        t4 in arb_tuple(4),
        t5 in arb_tuple(5),
    ) {
        let r2 = delta_squared_residual(&psi2, &Representation::Trivial, &fam, &t4).unwrap();
        prop_assert!(r2.is_zero());
        let r3 = delta_squared_residual(&psi3, &Representation::Trivial, &fam, &t5).unwrap();
        prop_assert!(r3.is_zero());
    }

    #[test]
    fn duality_residual_vanishes_on_random_trivial_pairs(
        c2 in arb_chain(2),
        psi1 in arb_raw_cochain(1),
        c3 in arb_chain(3),
        psi2 in arb_raw_cochain(2),
        fam in arb_family(),
    ) {
        prop_assert!(duality_residual(&c2, &psi1, &fam).unwrap().is_zero());
        prop_assert!(duality_residual(&c3, &psi2, &fam).unwrap().is_zero());
    }

    #[test]
    fn duality_residual_vanishes_on_skew_pairs(
        entries in proptest::collection::vec((-3i64..=3, arb_tuple(3), arb_ratfunc()), 0..=3),
        psi in arb_skew_cochain(2),
        fam in arb_family(),
    ) {
        let mut chain = Chain::new(3, 2).unwrap();
        for (m, t, v) in entries {
            chain.insert_skew(m, &t, &v);
        }
        prop_assert!(duality_residual(&chain, &psi, &fam).unwrap().is_zero());
    }

    #[test]
    fn differential_squares_to_zero_on_low_arity_chains(
        c3 in arb_chain(3),
        c4 in arb_chain(4),
        fam in arb_family(),
    ) {
        let dd = |c: &Chain| {
            boundary(
                &boundary(c, &fam, &RightAction::Trivial).unwrap(),
                &fam,
                &RightAction::Trivial,
            )
            .unwrap()
        };
        prop_assert!(dd(&c3).is_zero());
        prop_assert!(dd(&c4).is_zero());
    }
}

// ---- differential layer -------------------------------------------------

fn arb_laurent() -> impl Strategy<Value = LaurentPoly> {
    proptest::collection::vec((-6i64..=6, arb_ratfunc()), 0..=4).prop_map(|terms| {
        let mut u = LaurentPoly::zero();
        for (k, c) in terms {
            u.add_term(k, c);
        }
        u
    })
}

/// A pipeline of operator primitives that all carry adjoint rules.
fn arb_adjointable_operator() -> impl Strategy<Value = OperatorExpr> {
    let prim = prop_oneof![
        (-4i64..=4).prop_map(OpPrimitive::MulByMonomial),
        Just(OpPrimitive::ApplyO),
        arb_ratfunc().prop_map(OpPrimitive::OShift),
        Just(OpPrimitive::Derivative),
        arb_laurent().prop_map(OpPrimitive::MulByPoly),
        arb_ratfunc().prop_map(OpPrimitive::ScalarMul),
    ];
    proptest::collection::vec(prim, 0..=4).prop_map(OperatorExpr::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn residue_of_a_derivative_vanishes(u in arb_laurent()) {
        prop_assert!(res(&derivative(&u)).is_zero());
    }

    #[test]
    fn star_commutator_matches_the_vector_field_bracket(
        u in arb_laurent(),
        v in arb_laurent(),
    ) {
        let comm = &star(&u, &v) - &star(&v, &u);
        prop_assert_eq!(comm, lie_bracket(&u, &v));
    }

    #[test]
    fn gf_residue_is_skew_on_random_pairs(u in arb_laurent(), v in arb_laurent()) {
        let lhs = res(&gf_cocycle(&u, &v));
        let rhs = res(&gf_cocycle(&v, &u));
        prop_assert!((&lhs + &rhs).is_zero());
    }

    #[test]
    fn adjoint_residuals_vanish_for_random_pipelines(
        op in arb_adjointable_operator(),
        u in arb_laurent(),
        v in arb_laurent(),
    ) {
        prop_assert!(adjoint_residual(&op, &u, &v).unwrap().is_zero());
    }

    #[test]
    fn nd_star_antisymmetrizes_to_the_bracket_in_two_dimensions(
        i in 1usize..=2,
        j in 1usize..=2,
        sigma in arb_tuple(2),
        nu in arb_tuple(2),
        lambda in arb_rat(),
    ) {
        let ab = nd_star(i, &sigma, j, &nu, &lambda).unwrap();
        let ba = nd_star(j, &nu, i, &sigma, &lambda).unwrap();
        let a = NdElement::basis(i, sigma).unwrap();
        let b = NdElement::basis(j, nu).unwrap();
        prop_assert_eq!(ab.sub(&ba).unwrap(), nd_bracket(&a, &b).unwrap());
    }
}

// ---------------------------------------------------------------------------
// Finite-dimensional structure-constant algebras
// ---------------------------------------------------------------------------

fn arb_int_matrix(d: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(-5i64..=5, d * d).prop_map(move |entries| {
        Matrix::from_rows(
            (0..d)
                .map(|r| {
                    (0..d)
                        .map(|c| RatFunc::from_int(entries[r * d + c]))
                        .collect()
                })
                .collect(),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn two_block_algebras_are_quasiassociative_for_random_matrices(
        d in 1usize..=2,
        a in arb_int_matrix(2),
    ) {
        let a = Matrix::from_rows(
            (0..d).map(|r| (0..d).map(|c| a.at(r, c).clone()).collect()).collect(),
        );
        let alg = ehrenfest(&a, d).unwrap();
        prop_assert_eq!(fd_quasiassoc_witness(&alg), None);
        prop_assert_eq!(fd_lie_constants(&alg).jacobi, Some(None));
    }

    #[test]
    fn phase_space_extensions_stay_quasiassociative_and_closed(
        a in arb_int_matrix(1),
    ) {
        let base = ehrenfest(&a, 1).unwrap();
        let ext = cotangent(&base);
        prop_assert_eq!(fd_quasiassoc_witness(&ext.full), None);
        let n = ext.full.dim();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    prop_assert!(symplectic_cocycle_residual(&base, x, y, z)
                        .unwrap()
                        .is_zero());
                }
            }
        }
    }

    #[test]
    fn semidirect_sums_over_abelian_modules_are_quasiassociative(
        scale in -4i64..=4,
        action in arb_int_matrix(2),
    ) {
        // r = two-block algebra on the 1x1 matrix (scale); chi(f) = 0 turns
        // any chi(e) into a lawful action on an abelian module.
        let r = ehrenfest(
            &Matrix::from_rows(vec![vec![RatFunc::from_int(scale)]]),
            1,
        )
        .unwrap();
        let chi = vec![action, Matrix::zero(2, 2)];
        let out = semidirect(&r, &FinAlgebra::zero(2), &chi).unwrap();
        prop_assert_eq!(fd_quasiassoc_witness(&out), None);
    }
}
