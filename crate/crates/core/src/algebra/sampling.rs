//! Seeded random elements for oracle cross-checks.

use crate::algebra::element::AlgElement;
use crate::algebra::monomial::ExtMonomial;
use crate::algebra::presentation::QuadraticPresentation;
use crate::rational::Rat;
use num_bigint::BigInt;
use rand::Rng;

/// A random homogeneous element of the given degree: up to `max_terms`
/// monomials with small nonzero rational coefficients.
pub fn random_homogeneous(
    pres: &QuadraticPresentation,
    degree: usize,
    max_terms: usize,
    rng: &mut impl Rng,
) -> AlgElement {
    let mut out = AlgElement::zero();
    let nterms = rng.gen_range(1..=max_terms);
    for _ in 0..nterms {
        let mut numer = 0i64;
        while numer == 0 {
            numer = rng.gen_range(-9..=9);
        }
        let denom = rng.gen_range(1..=4i64);
        let coeff = Rat::new(BigInt::from(numer), BigInt::from(denom));
        out.add_term(random_monomial(pres, degree, rng), coeff);
    }
    out
}

/// A uniformly random degree-`q` square-free monomial.
pub fn random_monomial(
    pres: &QuadraticPresentation,
    degree: usize,
    rng: &mut impl Rng,
) -> ExtMonomial {
    let g = pres.generators().len();
    assert!(degree <= g, "degree exceeds generator count");
    // Floyd's subset sampling.
    let mut chosen: Vec<usize> = Vec::with_capacity(degree);
    for k in (g - degree)..g {
        let t = rng.gen_range(0..=k);
        if chosen.contains(&t) {
            chosen.push(k);
        } else {
            chosen.push(t);
        }
    }
    chosen.sort_unstable();
    ExtMonomial::from_sorted(chosen.iter().map(|&k| pres.generators()[k]).collect())
}
