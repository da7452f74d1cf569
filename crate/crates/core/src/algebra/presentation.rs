//! The quadratic presentations `E/I` and `E⁺/I⁺` of the rational cohomology
//! rings of `PΣ_n` and `PΣ_n⁺`.
//!
//! Full variant: generators `a_{i,j}` for all `i ≠ j`; relations
//! `a_{i,j} a_{j,i}` (unordered pairs) and
//! `a_{k,j} a_{j,i} - a_{k,j} a_{k,i} - a_{i,j} a_{k,i}` (distinct triples,
//! deduplicated up to sign).
//!
//! Plus variant: generators `a_{i,j}` for `i < j`; relations
//! `a_{i,j} a_{i,k} - a_{i,j} a_{j,k}` for `i < j < k`.

use crate::algebra::element::AlgElement;
use crate::algebra::monomial::{ExtMonomial, GeneratorPair};
use crate::error::CoreError;
use crate::rational::rat_int;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Full,
    Plus,
}

impl Variant {
    pub fn as_str(&self) -> &'static str {
        match self {
            Variant::Full => "full",
            Variant::Plus => "plus",
        }
    }

    pub fn admits(&self, i: usize, j: usize) -> bool {
        match self {
            Variant::Full => i != j,
            Variant::Plus => i < j,
        }
    }
}

impl std::fmt::Display for Variant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone)]
pub struct QuadraticPresentation {
    n: usize,
    variant: Variant,
    generators: Vec<GeneratorPair>,
    relations: Vec<AlgElement>,
}

impl QuadraticPresentation {
    /// Builds the presentation for the given rank and variant.
    pub fn new(n: usize, variant: Variant) -> Result<Self, CoreError> {
        if n < 2 {
            return Err(CoreError::RankTooSmall { n, min: 2 });
        }
        let mut generators = Vec::new();
        for i in 1..=n {
            for j in 1..=n {
                if variant.admits(i, j) {
                    generators.push(GeneratorPair::new(i, j, n)?);
                }
            }
        }
        generators.sort();

        let mut relations: Vec<AlgElement> = Vec::new();
        match variant {
            Variant::Full => {
                // a_{i,j} a_{j,i} for unordered pairs {i,j}.
                for i in 1..=n {
                    for j in (i + 1)..=n {
                        let (sign, m) = ExtMonomial::from_factors(&[
                            GeneratorPair::new(i, j, n)?,
                            GeneratorPair::new(j, i, n)?,
                        ])
                        .expect("distinct factors");
                        relations.push(AlgElement::from_terms([(m, rat_int(sign as i64))]));
                    }
                }
                // a_{k,j} a_{j,i} - a_{k,j} a_{k,i} - a_{i,j} a_{k,i},
                // one per ordered distinct triple, deduplicated up to sign.
                for i in 1..=n {
                    for j in 1..=n {
                        for k in 1..=n {
                            if i == j || i == k || j == k {
                                continue;
                            }
                            let rel = triple_relation(n, i, j, k)?;
                            if !relations.iter().any(|r| r == &rel || *r == rel.neg()) {
                                relations.push(rel);
                            }
                        }
                    }
                }
            }
            Variant::Plus => {
                // a_{i,j} a_{i,k} - a_{i,j} a_{j,k} for i < j < k.
                for i in 1..=n {
                    for j in (i + 1)..=n {
                        for k in (j + 1)..=n {
                            let mut rel = AlgElement::zero();
                            add_product_term(
                                &mut rel,
                                GeneratorPair::new(i, j, n)?,
                                GeneratorPair::new(i, k, n)?,
                                1,
                            );
                            add_product_term(
                                &mut rel,
                                GeneratorPair::new(i, j, n)?,
                                GeneratorPair::new(j, k, n)?,
                                -1,
                            );
                            relations.push(rel);
                        }
                    }
                }
            }
        }
        // Canonical element order keeps reports and row generation stable.
        relations.sort_by(|a, b| {
            let ka: Vec<_> = a.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
            let kb: Vec<_> = b.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
            ka.cmp(&kb)
        });
        Ok(QuadraticPresentation {
            n,
            variant,
            generators,
            relations,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn generators(&self) -> &[GeneratorPair] {
        &self.generators
    }

    pub fn relations(&self) -> &[AlgElement] {
        &self.relations
    }

    pub fn generator_index(&self, g: &GeneratorPair) -> Option<usize> {
        self.generators.binary_search(g).ok()
    }

    /// All square-free degree-`q` monomials in graded-lexicographic order.
    pub fn degree_monomials(&self, q: usize) -> Vec<ExtMonomial> {
        let g = self.generators.len();
        if q > g {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut idx: Vec<usize> = (0..q).collect();
        loop {
            out.push(ExtMonomial::from_sorted(
                idx.iter().map(|&k| self.generators[k]).collect(),
            ));
            // Next combination in lexicographic order.
            let mut p = q;
            loop {
                if p == 0 {
                    return out;
                }
                p -= 1;
                if idx[p] != p + g - q {
                    break;
                }
            }
            idx[p] += 1;
            for t in (p + 1)..q {
                idx[t] = idx[t - 1] + 1;
            }
        }
    }

    /// The combinatorial basis at degree `q`: for the full variant, products
    /// with pairwise distinct first indices and no cyclic sub-product; for the
    /// plus variant, products with strictly increasing first indices.
    pub fn claimed_basis(&self, q: usize) -> Result<Vec<ExtMonomial>, CoreError> {
        if q > self.n - 1 {
            return Err(CoreError::DegreeOutOfRange {
                degree: q,
                top: self.n - 1,
            });
        }
        Ok(self
            .degree_monomials(q)
            .into_iter()
            .filter(|m| self.is_claimed_basis_monomial(m))
            .collect())
    }

    pub fn is_claimed_basis_monomial(&self, m: &ExtMonomial) -> bool {
        match self.variant {
            Variant::Full => m.has_distinct_first_indices() && !m.has_directed_cycle(),
            Variant::Plus => m.has_distinct_first_indices(),
        }
    }
}

fn add_product_term(rel: &mut AlgElement, f1: GeneratorPair, f2: GeneratorPair, coeff: i64) {
    let (sign, m) = ExtMonomial::from_factors(&[f1, f2]).expect("distinct factors");
    rel.add_term(m, rat_int(coeff * sign as i64));
}

// The three-index relator in the form compatible with the reduction rule
// a_{k,j} a_{k,i} = a_{k,j} a_{j,i} + a_{i,j} a_{k,i}: once products of
// degree-one generators anticommute, this sign choice is the one that
// reproduces the Poincaré polynomial (1 + nt)^{n-1}.
fn triple_relation(n: usize, i: usize, j: usize, k: usize) -> Result<AlgElement, CoreError> {
    let mut rel = AlgElement::zero();
    add_product_term(
        &mut rel,
        GeneratorPair::new(k, j, n)?,
        GeneratorPair::new(j, i, n)?,
        1,
    );
    add_product_term(
        &mut rel,
        GeneratorPair::new(k, j, n)?,
        GeneratorPair::new(k, i, n)?,
        -1,
    );
    add_product_term(
        &mut rel,
        GeneratorPair::new(i, j, n)?,
        GeneratorPair::new(k, i, n)?,
        1,
    );
    Ok(rel)
}
