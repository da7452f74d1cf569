//! Combinatorial reduction to the quotient basis by directed rewriting.
//!
//! Full variant: monomials containing a cyclic product are annihilated;
//! a repeated first index `k` with second indices `u < v` rewrites through
//! `a_{k,u} a_{k,v} = a_{k,u} a_{u,v} + a_{v,u} a_{k,v}`.
//!
//! Plus variant: a repeated first index `i` with second indices `u < v`
//! rewrites through the directed rule `a_{i,u} a_{i,v} → a_{i,u} a_{u,v}`;
//! here the sum of first indices strictly increases, so the rewriting
//! terminates.
//!
//! Confluence of the full-variant system is not assumed: reduction is
//! memoized over the finite monomial set with on-stack cycle detection and a
//! step budget, and any violation is reported as a defect rather than
//! silently accepted. The linear-algebra projection remains the authority;
//! this path exists to be cross-checked against it.

use crate::algebra::element::AlgElement;
use crate::algebra::monomial::{ExtMonomial, GeneratorPair};
use crate::algebra::presentation::{QuadraticPresentation, Variant};
use crate::error::CoreError;
use crate::rational::{rat_int, Rat};
use std::collections::{HashMap, HashSet};

pub const DEFAULT_STEP_BUDGET: u64 = 1_000_000;

pub struct Rewriter<'a> {
    pres: &'a QuadraticPresentation,
    memo: HashMap<ExtMonomial, AlgElement>,
    steps: u64,
    budget: u64,
}

impl<'a> Rewriter<'a> {
    pub fn new(pres: &'a QuadraticPresentation) -> Self {
        Rewriter {
            pres,
            memo: HashMap::new(),
            steps: 0,
            budget: DEFAULT_STEP_BUDGET,
        }
    }

    pub fn with_budget(pres: &'a QuadraticPresentation, budget: u64) -> Self {
        Rewriter {
            pres,
            memo: HashMap::new(),
            steps: 0,
            budget,
        }
    }

    /// Reduces an element to its rewriting normal form.
    pub fn reduce(&mut self, e: &AlgElement) -> Result<AlgElement, CoreError> {
        let mut out = AlgElement::zero();
        for (m, c) in e.terms() {
            let reduced = self.reduce_monomial(m)?;
            out = out.add(&reduced.scale(c));
        }
        Ok(out)
    }

    /// One-step expansion of a monomial, or `None` when it is a fixed point.
    fn expand(&self, m: &ExtMonomial) -> Option<Vec<(Rat, ExtMonomial)>> {
        if self.pres.variant() == Variant::Full && m.has_directed_cycle() {
            return Some(Vec::new());
        }
        let (p1, p2) = m.repeated_first_index_pair()?;
        let f1 = m.factors()[p1];
        let f2 = m.factors()[p2];
        let rest = m.without_pair(p1, p2);
        // Sign relating the stored monomial to the factor order
        // (f1, f2, rest...).
        let mut ordered: Vec<GeneratorPair> = vec![f1, f2];
        ordered.extend_from_slice(rest.factors());
        let (outer_sign, _) = ExtMonomial::from_factors(&ordered).expect("same factors");

        let (k, u, v) = (f1.i(), f1.j(), f2.j());
        debug_assert!(u < v && k == f2.i());
        let replacements: Vec<(i64, GeneratorPair, GeneratorPair)> = match self.pres.variant() {
            // a_{k,u} a_{k,v} = a_{k,u} a_{u,v} + a_{v,u} a_{k,v}
            Variant::Full => vec![
                (1, f1, GeneratorPair(u as u8, v as u8)),
                (1, GeneratorPair(v as u8, u as u8), f2),
            ],
            // a_{i,u} a_{i,v} → a_{i,u} a_{u,v}
            Variant::Plus => vec![(1, f1, GeneratorPair(u as u8, v as u8))],
        };

        let mut terms = Vec::new();
        for (coeff, g1, g2) in replacements {
            let mut factors = vec![g1, g2];
            factors.extend_from_slice(rest.factors());
            if let Some((inner_sign, mono)) = ExtMonomial::from_factors(&factors) {
                terms.push((rat_int(coeff * (outer_sign * inner_sign) as i64), mono));
            }
        }
        Some(terms)
    }

    fn reduce_monomial(&mut self, root: &ExtMonomial) -> Result<AlgElement, CoreError> {
        if let Some(done) = self.memo.get(root) {
            return Ok(done.clone());
        }

        struct Frame {
            mono: ExtMonomial,
            children: Vec<(Rat, ExtMonomial)>,
            next: usize,
            acc: AlgElement,
        }

        let mut on_stack: HashSet<ExtMonomial> = HashSet::new();
        let mut stack: Vec<Frame> = Vec::new();

        let push = |mono: ExtMonomial,
                    rewriter: &Self,
                    stack: &mut Vec<Frame>,
                    on_stack: &mut HashSet<ExtMonomial>|
         -> Result<(), CoreError> {
            if !on_stack.insert(mono.clone()) {
                return Err(CoreError::RewriteDefect(format!(
                    "rewriting cycle through {mono}"
                )));
            }
            match rewriter.expand(&mono) {
                None => {
                    // Fixed point: must be a combinatorial basis monomial.
                    debug_assert!(rewriter.pres.is_claimed_basis_monomial(&mono));
                    stack.push(Frame {
                        acc: AlgElement::from_monomial(mono.clone()),
                        mono,
                        children: Vec::new(),
                        next: 0,
                    });
                }
                Some(children) => stack.push(Frame {
                    mono,
                    children,
                    next: 0,
                    acc: AlgElement::zero(),
                }),
            }
            Ok(())
        };

        push(root.clone(), self, &mut stack, &mut on_stack)?;
        while let Some(frame) = stack.last_mut() {
            self.steps += 1;
            if self.steps > self.budget {
                return Err(CoreError::RewriteDefect(format!(
                    "step budget {} exhausted",
                    self.budget
                )));
            }
            if frame.next < frame.children.len() {
                let (coeff, child) = frame.children[frame.next].clone();
                if let Some(done) = self.memo.get(&child) {
                    frame.acc = frame.acc.add(&done.scale(&coeff));
                    frame.next += 1;
                } else {
                    push(child, self, &mut stack, &mut on_stack)?;
                }
            } else {
                let finished = stack.pop().expect("nonempty");
                on_stack.remove(&finished.mono);
                self.memo.insert(finished.mono, finished.acc.clone());
                if let Some(parent) = stack.last_mut() {
                    let (coeff, _) = parent.children[parent.next].clone();
                    parent.acc = parent.acc.add(&finished.acc.scale(&coeff));
                    parent.next += 1;
                }
            }
        }
        Ok(self.memo.get(root).expect("root reduced").clone())
    }
}

/// Reduces an element by rewriting alone. Fixed points are supported on the
/// combinatorial basis monomials; agreement with the linear-algebra
/// projection is checked by the test suite on random inputs.
pub fn rewrite_reduce(
    e: &AlgElement,
    pres: &QuadraticPresentation,
) -> Result<AlgElement, CoreError> {
    Rewriter::new(pres).reduce(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::monomial::GeneratorPair;
    use crate::algebra::Variant;

    #[test]
    fn budget_exhaustion_is_a_defect() {
        let pres = QuadraticPresentation::new(4, Variant::Full).unwrap();
        let factors: Vec<GeneratorPair> = vec![
            GeneratorPair::new(2, 1, 4).unwrap(),
            GeneratorPair::new(2, 3, 4).unwrap(),
            GeneratorPair::new(3, 4, 4).unwrap(),
        ];
        let (_, m) = ExtMonomial::from_factors(&factors).unwrap();
        let e = AlgElement::from_monomial(m);
        let mut tight = Rewriter::with_budget(&pres, 1);
        assert!(matches!(tight.reduce(&e), Err(CoreError::RewriteDefect(_))));
        let mut roomy = Rewriter::with_budget(&pres, 10_000);
        assert!(roomy.reduce(&e).is_ok());
    }
}
