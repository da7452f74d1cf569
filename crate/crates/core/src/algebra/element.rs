//! Elements of the exterior algebra and its quotients: finite rational
//! combinations of exterior monomials.

use crate::algebra::monomial::{ExtMonomial, GeneratorPair};
use crate::rational::{rat_int, rat_one, Rat};
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

/// A finite `ℚ`-linear combination of exterior monomials. Zero coefficients
/// are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AlgElement {
    terms: BTreeMap<ExtMonomial, Rat>,
}

impl AlgElement {
    pub fn zero() -> Self {
        AlgElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn unit() -> Self {
        AlgElement::from_monomial(ExtMonomial::unit())
    }

    pub fn from_monomial(m: ExtMonomial) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(m, rat_one());
        AlgElement { terms }
    }

    pub fn generator(g: GeneratorPair) -> Self {
        AlgElement::from_monomial(ExtMonomial::single(g))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (ExtMonomial, Rat)>) -> Self {
        let mut out = AlgElement::zero();
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExtMonomial, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &ExtMonomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(|| rat_int(0))
    }

    /// Degree when homogeneous; `None` for 0 or mixed-degree elements.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys();
        let first = it.next()?.degree();
        it.all(|m| m.degree() == first).then_some(first)
    }

    /// Largest degree appearing, or `None` for zero.
    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(ExtMonomial::degree).max()
    }

    pub fn add_term(&mut self, m: ExtMonomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &AlgElement) -> AlgElement {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &AlgElement) -> AlgElement {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> AlgElement {
        AlgElement {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, s: &Rat) -> AlgElement {
        if s.is_zero() {
            return AlgElement::zero();
        }
        AlgElement {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect(),
        }
    }

    /// Plain exterior product, with no quotient reduction.
    pub fn mul_raw(&self, other: &AlgElement) -> AlgElement {
        let mut out = AlgElement::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some((sign, m)) = ma.mul(mb) {
                    out.add_term(m, ca * cb * rat_int(sign as i64));
                }
            }
        }
        out
    }

    /// Splits into homogeneous components, keyed by degree.
    pub fn homogeneous_parts(&self) -> BTreeMap<usize, AlgElement> {
        let mut parts: BTreeMap<usize, AlgElement> = BTreeMap::new();
        for (m, c) in &self.terms {
            parts
                .entry(m.degree())
                .or_default()
                .add_term(m.clone(), c.clone());
        }
        parts
    }
}

impl fmt::Display for AlgElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})·{m}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::monomial::GeneratorPair;

    fn gen(i: usize, j: usize) -> GeneratorPair {
        GeneratorPair::new(i, j, 9).unwrap()
    }

    #[test]
    fn terms_cancel() {
        let a = AlgElement::generator(gen(1, 2));
        let d = a.sub(&a);
        assert!(d.is_zero());
    }

    #[test]
    fn exterior_square_is_zero() {
        let a = AlgElement::generator(gen(1, 2));
        assert!(a.mul_raw(&a).is_zero());
        let sum = a.add(&AlgElement::generator(gen(2, 1)));
        assert!(sum.mul_raw(&sum).is_zero());
    }

    #[test]
    fn anticommutativity_degree_one() {
        let a = AlgElement::generator(gen(1, 2));
        let b = AlgElement::generator(gen(2, 3));
        assert_eq!(a.mul_raw(&b), b.mul_raw(&a).neg());
    }

    #[test]
    fn homogeneous_degree_detection() {
        let mut e = AlgElement::unit();
        assert_eq!(e.homogeneous_degree(), Some(0));
        e.add_term(ExtMonomial::single(gen(1, 2)), rat_one());
        assert_eq!(e.homogeneous_degree(), None);
        assert_eq!(e.max_degree(), Some(1));
    }
}
