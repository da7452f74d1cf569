//! The rational cohomology rings of `PΣ_n` and `PΣ_n⁺` as quotients of
//! exterior algebras, with exact graded bases, normal forms, products, and
//! Poincaré polynomials.

pub mod basis;
pub mod element;
pub mod linalg;
pub mod monomial;
pub mod presentation;
pub mod rewrite;
pub mod sampling;

pub use basis::{
    poincare_polynomial, verify_claimed_basis, BasisDegreeCheck, BasisReport, CapacityTier,
    DegreeData, GradedBasis, HilbertSeries,
};
pub use element::AlgElement;
pub use monomial::{ExtMonomial, GeneratorPair};
pub use presentation::{QuadraticPresentation, Variant};
pub use rewrite::{rewrite_reduce, Rewriter};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;

    fn g(i: usize, j: usize) -> GeneratorPair {
        GeneratorPair::new(i, j, 9).unwrap()
    }

    fn mono(factors: &[(usize, usize)]) -> ExtMonomial {
        let fs: Vec<GeneratorPair> = factors.iter().map(|&(i, j)| g(i, j)).collect();
        let (sign, m) = ExtMonomial::from_factors(&fs).unwrap();
        assert_eq!(sign, 1, "test monomials should be given in sorted order");
        m
    }

    fn setup(n: usize, variant: Variant) -> (QuadraticPresentation, GradedBasis) {
        let pres = QuadraticPresentation::new(n, variant).unwrap();
        let basis = GradedBasis::compute(&pres, &CapacityTier::default()).unwrap();
        (pres, basis)
    }

    #[test]
    fn dims_full_small() {
        let (_, b2) = setup(2, Variant::Full);
        assert_eq!(b2.dims(), &[1, 2, 0]);
        let (_, b3) = setup(3, Variant::Full);
        assert_eq!(b3.dims(), &[1, 6, 9, 0]);
        assert_eq!(b3.top_degree(), 2);
        assert_eq!(b3.vanishing_degree(), 3);
    }

    #[test]
    fn dims_plus_small() {
        let (_, b) = setup(4, Variant::Plus);
        assert_eq!(b.dims(), &[1, 6, 11, 6, 0]);
        let (_, b2) = setup(2, Variant::Plus);
        assert_eq!(b2.dims(), &[1, 1, 0]);
    }

    #[test]
    fn poincare_matches_closed_form() {
        for n in 2..=4 {
            let (_, b) = setup(n, Variant::Full);
            assert_eq!(
                poincare_polynomial(&b),
                HilbertSeries::closed_form(Variant::Full, n),
                "full n={n}"
            );
        }
        for n in 2..=5 {
            let (_, b) = setup(n, Variant::Plus);
            assert_eq!(
                poincare_polynomial(&b),
                HilbertSeries::closed_form(Variant::Plus, n),
                "plus n={n}"
            );
        }
        assert_eq!(
            HilbertSeries::closed_form(Variant::Plus, 5).coefficients(),
            &[1, 10, 35, 50, 24]
        );
        assert_eq!(
            HilbertSeries::closed_form(Variant::Full, 4).coefficients(),
            &[1, 12, 48, 64]
        );
    }

    #[test]
    fn capacity_tier_enforced() {
        let pres = QuadraticPresentation::new(6, Variant::Full).unwrap();
        let err = GradedBasis::compute(&pres, &CapacityTier::default());
        assert!(matches!(err, Err(crate::CoreError::Capacity(_))));
    }

    #[test]
    fn relation_monomial_projects_to_zero() {
        let (_, b) = setup(2, Variant::Full);
        let rel = AlgElement::from_monomial(mono(&[(1, 2), (2, 1)]));
        assert!(b.normal_form(&rel).is_zero());
    }

    #[test]
    fn normal_form_of_repeated_first_index() {
        // a_{2,1} a_{2,3} = a_{2,1} a_{1,3} + a_{3,1} a_{2,3}: in sorted
        // monomials, -a_{1,3}·a_{2,1} + a_{2,3}·a_{3,1}.
        let (_, b) = setup(3, Variant::Full);
        let input = AlgElement::from_monomial(mono(&[(2, 1), (2, 3)]));
        let nf = b.normal_form(&input);
        let mut expected = AlgElement::zero();
        expected.add_term(mono(&[(1, 3), (2, 1)]), rat_int(-1));
        expected.add_term(mono(&[(2, 3), (3, 1)]), rat_int(-1));
        assert_eq!(nf, expected);
    }

    #[test]
    fn normal_form_is_idempotent_and_fixes_basis() {
        let (_, b) = setup(3, Variant::Full);
        for q in 0..=b.top_degree() {
            for m in b.degree_data(q).unwrap().basis() {
                let e = AlgElement::from_monomial(m.clone());
                assert_eq!(b.normal_form(&e), e);
            }
        }
        let e = AlgElement::from_monomial(mono(&[(2, 1), (2, 3)]));
        let once = b.normal_form(&e);
        assert_eq!(b.normal_form(&once), once);
    }

    #[test]
    fn multiply_in_plus_quotient() {
        // a_{1,2} · a_{1,3} = a_{1,2} a_{2,3} in the plus quotient.
        let (_, b) = setup(3, Variant::Plus);
        let prod = b.multiply(
            &AlgElement::generator(g(1, 2)),
            &AlgElement::generator(g(1, 3)),
        );
        assert_eq!(prod, AlgElement::from_monomial(mono(&[(1, 2), (2, 3)])));
    }

    #[test]
    fn multiply_graded_commutative() {
        let (_, b) = setup(3, Variant::Full);
        let x = AlgElement::generator(g(1, 2));
        let y = AlgElement::generator(g(2, 1));
        // Both degree 1: xy = -yx.
        assert_eq!(b.multiply(&x, &y), b.multiply(&y, &x).neg());
        // Degree-1 squares vanish.
        assert!(b.multiply(&x, &x).is_zero());
        // Even-degree elements commute.
        let xy = b.multiply(&x, &AlgElement::generator(g(3, 1)));
        let z = AlgElement::generator(g(2, 3));
        assert_eq!(b.multiply(&xy, &z), b.multiply(&z, &xy));
    }

    #[test]
    fn top_degree_products_vanish() {
        // Any product of n degree-one generators is zero.
        let (pres, b) = setup(3, Variant::Full);
        assert_eq!(b.dim(3), 0);
        for m in pres.degree_monomials(3).into_iter().take(30) {
            assert!(b.normal_form(&AlgElement::from_monomial(m)).is_zero());
        }
    }

    #[test]
    fn claimed_basis_verifies() {
        for n in 2..=4 {
            let (pres, b) = setup(n, Variant::Full);
            assert!(
                verify_claimed_basis(&pres, &b).unwrap().passed,
                "full n={n}"
            );
            let (pres, b) = setup(n, Variant::Plus);
            assert!(
                verify_claimed_basis(&pres, &b).unwrap().passed,
                "plus n={n}"
            );
        }
    }

    #[test]
    fn computed_basis_equals_claimed_basis() {
        for (n, variant) in [(3, Variant::Full), (4, Variant::Plus)] {
            let (pres, b) = setup(n, variant);
            for q in 0..=b.top_degree() {
                assert_eq!(
                    b.degree_data(q).unwrap().basis(),
                    pres.claimed_basis(q).unwrap().as_slice(),
                    "{variant} n={n} q={q}"
                );
            }
        }
    }

    #[test]
    fn rewrite_matches_spot_values() {
        let (pres, _) = setup(3, Variant::Full);
        // a_{2,1} a_{2,3} rewrites in one step.
        let e = AlgElement::from_monomial(mono(&[(2, 1), (2, 3)]));
        let r = rewrite_reduce(&e, &pres).unwrap();
        let mut expected = AlgElement::zero();
        expected.add_term(mono(&[(1, 3), (2, 1)]), rat_int(-1));
        expected.add_term(mono(&[(2, 3), (3, 1)]), rat_int(-1));
        assert_eq!(r, expected);

        // Cyclic products die.
        let cyc = AlgElement::from_monomial(mono(&[(1, 2), (2, 1)]));
        assert!(rewrite_reduce(&cyc, &pres).unwrap().is_zero());

        let (plus, _) = setup(3, Variant::Plus);
        let e = AlgElement::from_monomial(mono(&[(1, 2), (1, 3)]));
        assert_eq!(
            rewrite_reduce(&e, &plus).unwrap(),
            AlgElement::from_monomial(mono(&[(1, 2), (2, 3)]))
        );
    }

    #[test]
    fn rewrite_agrees_with_projection_on_samples() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for variant in [Variant::Full, Variant::Plus] {
            for n in 2..=4 {
                let (pres, b) = setup(n, variant);
                let mut rw = Rewriter::new(&pres);
                for _ in 0..100 {
                    let q = rand::Rng::gen_range(&mut rng, 0..=(n - 1));
                    let e = sampling::random_homogeneous(&pres, q, 4, &mut rng);
                    assert_eq!(
                        rw.reduce(&e).unwrap(),
                        b.normal_form(&e),
                        "{variant} n={n} q={q}"
                    );
                }
            }
        }
    }

    #[test]
    fn cup_length_witness_chain() {
        // The chain a_{n,n-1} a_{n-1,n-2} ... a_{2,1} survives at top degree.
        for n in 2..=4 {
            let (_, b) = setup(n, Variant::Full);
            let factors: Vec<GeneratorPair> = (2..=n).rev().map(|k| g(k, k - 1)).collect();
            let (_, m) = ExtMonomial::from_factors(&factors).unwrap();
            assert!(!b.normal_form(&AlgElement::from_monomial(m)).is_zero());
        }
        for n in 2..=4 {
            let (_, b) = setup(n, Variant::Plus);
            let factors: Vec<GeneratorPair> = (1..n).map(|k| g(k, k + 1)).collect();
            let (_, m) = ExtMonomial::from_factors(&factors).unwrap();
            assert!(!b.normal_form(&AlgElement::from_monomial(m)).is_zero());
        }
    }
}
