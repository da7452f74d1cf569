//! The tensor square `A ⊗ A` of a quotient algebra, its zero-divisor ideal,
//! and cup-length certificates.
//!
//! Multiplication follows the graded sign rule
//! `(u₁⊗v₁)·(u₂⊗v₂) = (−1)^{|v₁|·|u₂|} u₁u₂ ⊗ v₁v₂`, with both tensor legs
//! reduced to quotient normal form after every product. The multiplication
//! map `μ : A⊗A → A` sends `u⊗v ↦ u·v`; its kernel is the zero-divisor ideal,
//! and for any `a` the element `ā = a⊗1 − 1⊗a` lies in it.

use crate::algebra::monomial::{ExtMonomial, GeneratorPair};
use crate::algebra::presentation::{QuadraticPresentation, Variant};
use crate::algebra::{AlgElement, GradedBasis};
use crate::error::{CapacityError, CoreError};
use crate::rational::{is_unit, rat_int, rat_to_string, Rat};
use num_traits::Zero;
use serde::ser::SerializeSeq;
use serde::{Deserialize, Serialize, Serializer};
use std::collections::BTreeMap;

/// An element of `A ⊗ A` with both legs in quotient normal form.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TensorElement {
    terms: BTreeMap<(ExtMonomial, ExtMonomial), Rat>,
}

impl TensorElement {
    pub fn zero() -> Self {
        TensorElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn unit() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert((ExtMonomial::unit(), ExtMonomial::unit()), rat_int(1));
        TensorElement { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(ExtMonomial, ExtMonomial), &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, left: &ExtMonomial, right: &ExtMonomial) -> Rat {
        self.terms
            .get(&(left.clone(), right.clone()))
            .cloned()
            .unwrap_or_else(|| rat_int(0))
    }

    pub fn add_term(&mut self, left: ExtMonomial, right: ExtMonomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((left, right)) {
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

    pub fn add(&self, other: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        for ((l, r), c) in &other.terms {
            out.add_term(l.clone(), r.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, s: &Rat) -> TensorElement {
        if s.is_zero() {
            return TensorElement::zero();
        }
        TensorElement {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c * s)).collect(),
        }
    }

    /// The pure tensor `a ⊗ b` of two quotient elements.
    pub fn pure(a: &AlgElement, b: &AlgElement, basis: &GradedBasis) -> TensorElement {
        let a = basis.normal_form(a);
        let b = basis.normal_form(b);
        let mut out = TensorElement::zero();
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                out.add_term(ma.clone(), mb.clone(), ca * cb);
            }
        }
        out
    }

    /// `ā = a⊗1 − 1⊗a`, a zero divisor for every `a`.
    pub fn bar(a: &AlgElement, basis: &GradedBasis) -> TensorElement {
        let nf = basis.normal_form(a);
        let mut out = TensorElement::zero();
        for (m, c) in nf.terms() {
            out.add_term(m.clone(), ExtMonomial::unit(), c.clone());
            out.add_term(ExtMonomial::unit(), m.clone(), -c.clone());
        }
        out
    }

    /// Product in `A ⊗ A` with the graded sign rule; both legs reduced.
    pub fn multiply(&self, other: &TensorElement, basis: &GradedBasis) -> TensorElement {
        let mut out = TensorElement::zero();
        for ((u1, v1), c1) in &self.terms {
            for ((u2, v2), c2) in &other.terms {
                let Some((su, u)) = u1.mul(u2) else { continue };
                let Some((sv, v)) = v1.mul(v2) else { continue };
                let koszul = if (v1.degree() * u2.degree()) % 2 == 0 {
                    1
                } else {
                    -1
                };
                let coeff = c1 * c2 * rat_int((su * sv * koszul) as i64);
                let left = basis.normal_form(&AlgElement::from_terms([(u, coeff)]));
                if left.is_zero() {
                    continue;
                }
                let right = basis.normal_form(&AlgElement::from_monomial(v));
                for (lm, lc) in left.terms() {
                    for (rm, rc) in right.terms() {
                        out.add_term(lm.clone(), rm.clone(), lc * rc);
                    }
                }
            }
        }
        out
    }

    /// The multiplication map `μ(u⊗v) = u·v`.
    pub fn mu(&self, basis: &GradedBasis) -> AlgElement {
        let mut out = AlgElement::zero();
        for ((u, v), c) in &self.terms {
            if let Some((sign, m)) = u.mul(v) {
                out.add_term(m, c * rat_int(sign as i64));
            }
        }
        basis.normal_form(&out)
    }

    /// Bidegrees present, each with the number of terms carrying it.
    pub fn bidegrees(&self) -> BTreeMap<(usize, usize), usize> {
        let mut out = BTreeMap::new();
        for (u, v) in self.terms.keys() {
            *out.entry((u.degree(), v.degree())).or_insert(0) += 1;
        }
        out
    }
}

impl Serialize for TensorElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for ((l, r), c) in &self.terms {
            seq.serialize_element(&(l, r, rat_to_string(c)))?;
        }
        seq.end()
    }
}

/// One factor of a zero-divisor product.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ZeroDivisorFactor {
    /// `a⊗1 − 1⊗a` for a degree-one generator.
    Bar { generator: GeneratorPair },
    /// The pure tensor `g ⊗ g`.
    PureTensor { generator: GeneratorPair },
}

impl ZeroDivisorFactor {
    pub fn to_tensor(&self, basis: &GradedBasis) -> TensorElement {
        match self {
            ZeroDivisorFactor::Bar { generator } => {
                TensorElement::bar(&AlgElement::generator(*generator), basis)
            }
            ZeroDivisorFactor::PureTensor { generator } => {
                let g = AlgElement::generator(*generator);
                TensorElement::pure(&g, &g, basis)
            }
        }
    }
}

pub(crate) fn ser_rat<S: Serializer>(r: &Rat, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&rat_to_string(r))
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessTerm {
    pub left: ExtMonomial,
    pub right: ExtMonomial,
    #[serde(serialize_with = "ser_rat")]
    pub coefficient: Rat,
}

#[derive(Debug, Clone, Serialize)]
pub struct NamedCheck {
    pub name: String,
    pub passed: bool,
}

/// A verified product of zero divisors witnessing a cup-length lower bound.
#[derive(Debug, Clone, Serialize)]
pub struct ZeroDivisorCertificate {
    pub label: String,
    pub n: usize,
    pub variant: Variant,
    pub factors: Vec<ZeroDivisorFactor>,
    pub length: usize,
    pub nonzero: bool,
    pub witness: Option<WitnessTerm>,
    /// Set when the expanded product is concentrated in one bidegree.
    pub bidegree: Option<(usize, usize)>,
    pub checks: Vec<NamedCheck>,
    pub passed: bool,
    /// Term count of the expanded product; the product itself is serialized
    /// only when small.
    pub product_terms: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub product: Option<TensorElement>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

impl ZeroDivisorCertificate {
    fn build(
        label: String,
        basis: &GradedBasis,
        factors: Vec<ZeroDivisorFactor>,
    ) -> (Self, TensorElement) {
        let mut product = TensorElement::unit();
        for f in &factors {
            product = product.multiply(&f.to_tensor(basis), basis);
        }
        let nonzero = !product.is_zero();
        let mut checks = vec![NamedCheck {
            name: "product_nonzero".into(),
            passed: nonzero,
        }];

        // Every factor must lie in ker(μ); this holds for bars by definition
        // and for g⊗g because g·g = 0 in the exterior quotient.
        let factors_in_kernel = factors
            .iter()
            .all(|f| f.to_tensor(basis).mu(basis).is_zero());
        checks.push(NamedCheck {
            name: "factors_in_ker_mu".into(),
            passed: factors_in_kernel,
        });

        let bidegrees = product.bidegrees();
        let bidegree = if bidegrees.len() == 1 {
            bidegrees.keys().next().copied()
        } else {
            None
        };
        let cert = ZeroDivisorCertificate {
            label,
            n: basis.n(),
            variant: basis.variant(),
            length: factors.len(),
            factors,
            nonzero,
            witness: None,
            bidegree,
            checks,
            passed: false,
            product_terms: product.num_terms(),
            product: None,
            wall_time_ms: None,
        };
        (cert, product)
    }

    fn finalize(mut self, product: TensorElement) -> Self {
        self.passed = self.checks.iter().all(|c| c.passed);
        if product.num_terms() <= 64 {
            self.product = Some(product);
        }
        self
    }
}

/// The product `M = x̄₁⋯x̄_{n−1} ȳ₁⋯ȳ_{n−1}` of `2n−2` zero divisors in the
/// full-variant tensor square, with `x_i = a_{i,i+1}` and `y_i = a_{i+1,i}`.
///
/// Checks: the product is nonzero; the coefficient of
/// `U_∅ ⊗ V_∅ = a_{n,n−1}⋯a_{2,1} ⊗ a_{1,2}⋯a_{n−1,n}` is ±1; the product is
/// concentrated in bidegree `(n−1, n−1)`; and the raw expansion agrees with
/// the subset formula `Σ_I (−1)^{|I|} U_I ⊗ V_I`.
pub fn certificate_m(basis: &GradedBasis) -> Result<ZeroDivisorCertificate, CoreError> {
    if basis.variant() != Variant::Full {
        return Err(CoreError::InvalidGenerator {
            i: 0,
            j: 0,
            reason: "certificate M needs the full variant",
        });
    }
    let n = basis.n();
    let mut factors = Vec::new();
    for i in 1..n {
        factors.push(ZeroDivisorFactor::Bar {
            generator: GeneratorPair::new(i, i + 1, n)?,
        });
    }
    for i in 1..n {
        factors.push(ZeroDivisorFactor::Bar {
            generator: GeneratorPair::new(i + 1, i, n)?,
        });
    }

    let (mut cert, product) = ZeroDivisorCertificate::build("M".into(), basis, factors);

    // Witness: the canonical form of U_∅ ⊗ V_∅.
    let u_factors: Vec<GeneratorPair> = (2..=n)
        .rev()
        .map(|k| GeneratorPair::new(k, k - 1, n))
        .collect::<Result<_, _>>()?;
    let v_factors: Vec<GeneratorPair> = (1..n)
        .map(|k| GeneratorPair::new(k, k + 1, n))
        .collect::<Result<_, _>>()?;
    let (su, u_mono) = ExtMonomial::from_factors(&u_factors).expect("distinct factors");
    let (sv, v_mono) = ExtMonomial::from_factors(&v_factors).expect("distinct factors");
    // Coefficient of the ordered product U_∅ ⊗ V_∅.
    let coeff = product.coeff(&u_mono, &v_mono) * rat_int((su * sv) as i64);
    cert.checks.push(NamedCheck {
        name: "witness_coefficient_is_unit".into(),
        passed: is_unit(&coeff),
    });
    cert.witness = Some(WitnessTerm {
        left: u_mono,
        right: v_mono,
        coefficient: coeff,
    });

    cert.checks.push(NamedCheck {
        name: format!("pure_bidegree_({},{})", n - 1, n - 1),
        passed: cert.bidegree == Some((n - 1, n - 1)),
    });

    cert.checks.push(NamedCheck {
        name: "subset_expansion_identity".into(),
        passed: m_expansion_identity_holds(n)?,
    });

    Ok(cert.finalize(product))
}

/// Checks, in the raw exterior tensor square — no quotient reduction beyond
/// discarding legs that contain a cyclic product — that expanding
/// `∏ x̄_i ∏ ȳ_i` equals `Σ_{I ⊆ [n−1]} (−1)^{|I|} U_I ⊗ V_I`.
fn m_expansion_identity_holds(n: usize) -> Result<bool, CoreError> {
    let mut raw: BTreeMap<(ExtMonomial, ExtMonomial), Rat> = BTreeMap::new();
    raw.insert((ExtMonomial::unit(), ExtMonomial::unit()), rat_int(1));
    let mut bars: Vec<GeneratorPair> = Vec::new();
    for i in 1..n {
        bars.push(GeneratorPair::new(i, i + 1, n)?);
    }
    for i in 1..n {
        bars.push(GeneratorPair::new(i + 1, i, n)?);
    }
    for g in bars {
        let gm = ExtMonomial::single(g);
        let mut next: BTreeMap<(ExtMonomial, ExtMonomial), Rat> = BTreeMap::new();
        let mut add = |l: ExtMonomial, r: ExtMonomial, c: Rat| {
            if c.is_zero() {
                return;
            }
            use std::collections::btree_map::Entry;
            match next.entry((l, r)) {
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
        };
        for ((u, v), c) in &raw {
            // (u⊗v)·(g⊗1) = (−1)^{|v|} ug ⊗ v
            if let Some((s, ug)) = u.mul(&gm) {
                let sign = if v.degree() % 2 == 0 { 1 } else { -1 };
                add(ug, v.clone(), c * rat_int((s * sign) as i64));
            }
            // (u⊗v)·(−1⊗g) = −(u ⊗ vg)
            if let Some((s, vg)) = v.mul(&gm) {
                add(u.clone(), vg, c * rat_int(-(s as i64)));
            }
        }
        raw = next;
    }
    raw.retain(|(u, v), _| !u.has_directed_cycle() && !v.has_directed_cycle());

    let mut expected: BTreeMap<(ExtMonomial, ExtMonomial), Rat> = BTreeMap::new();
    for mask in 0u32..(1 << (n - 1)) {
        let mut u_factors = Vec::new();
        let mut v_factors = Vec::new();
        let mut cardinality = 0u32;
        for i in 1..n {
            let x_i = GeneratorPair::new(i, i + 1, n)?;
            let y_i = GeneratorPair::new(i + 1, i, n)?;
            if mask & (1 << (i - 1)) != 0 {
                cardinality += 1;
                u_factors.push(x_i);
                v_factors.push(y_i);
            } else {
                u_factors.push(y_i);
                v_factors.push(x_i);
            }
        }
        let (su, um) = ExtMonomial::from_factors(&u_factors).expect("distinct");
        let (sv, vm) = ExtMonomial::from_factors(&v_factors).expect("distinct");
        let sign = if cardinality.is_multiple_of(2) {
            1i64
        } else {
            -1
        };
        expected.insert((um, vm), rat_int(sign * (su * sv) as i64));
    }

    Ok(raw == expected)
}

/// The product of the `2n−3` zero divisors
/// `ā_{1,n−1} ā_{1,n} ⋯ ā_{n−2,n−1} ā_{n−2,n} · (a_{n−1,n} ⊗ a_{n−1,n})`
/// in the plus-variant tensor square.
///
/// Checks: the product is nonzero; some surviving basis term has the shape
/// `a_{1,i₁}⋯a_{n−2,i_{n−2}} a_{n−1,n} ⊗ a_{1,j₁}⋯a_{n−2,j_{n−2}} a_{n−1,n}`
/// with `{i_p, j_p} = {n−1, n}` at each position; and the final factor lies
/// in `ker(μ)` even though it is not of the form `ā`.
pub fn certificate_n(basis: &GradedBasis) -> Result<ZeroDivisorCertificate, CoreError> {
    if basis.variant() != Variant::Plus {
        return Err(CoreError::InvalidGenerator {
            i: 0,
            j: 0,
            reason: "certificate N needs the plus variant",
        });
    }
    let n = basis.n();
    let mut factors = Vec::new();
    for i in 1..=n.saturating_sub(2) {
        factors.push(ZeroDivisorFactor::Bar {
            generator: GeneratorPair::new(i, n - 1, n)?,
        });
        factors.push(ZeroDivisorFactor::Bar {
            generator: GeneratorPair::new(i, n, n)?,
        });
    }
    let last = GeneratorPair::new(n - 1, n, n)?;
    factors.push(ZeroDivisorFactor::PureTensor { generator: last });

    let (mut cert, product) = ZeroDivisorCertificate::build("N".into(), basis, factors);

    // The final factor is a zero divisor because a_{n-1,n}² = 0 in the
    // exterior quotient; asserted rather than assumed.
    let last_in_kernel = {
        let g = AlgElement::generator(last);
        TensorElement::pure(&g, &g, basis).mu(basis).is_zero()
    };
    cert.checks.push(NamedCheck {
        name: "final_factor_in_ker_mu".into(),
        passed: last_in_kernel,
    });

    let witness = product.terms().find_map(|((l, r), c)| {
        surviving_shape(l, r, n).then(|| WitnessTerm {
            left: l.clone(),
            right: r.clone(),
            coefficient: c.clone(),
        })
    });
    cert.checks.push(NamedCheck {
        name: "surviving_term_shape".into(),
        passed: witness.is_some(),
    });
    cert.witness = witness;

    Ok(cert.finalize(product))
}

/// Both legs are `a_{1,i₁}⋯a_{n−2,i_{n−2}} a_{n−1,n}` with the two legs'
/// values `{i_p, j_p}` exhausting `{n−1, n}` at each position `p ≤ n−2`.
fn surviving_shape(left: &ExtMonomial, right: &ExtMonomial, n: usize) -> bool {
    if left.degree() != n - 1 || right.degree() != n - 1 {
        return false;
    }
    let lf = left.factors();
    let rf = right.factors();
    for p in 1..=(n - 1) {
        let (lp, rp) = (lf[p - 1], rf[p - 1]);
        if lp.i() != p || rp.i() != p {
            return false;
        }
        if p == n - 1 {
            if lp.j() != n || rp.j() != n {
                return false;
            }
        } else {
            let pair = [lp.j().min(rp.j()), lp.j().max(rp.j())];
            if pair != [n - 1, n] {
                return false;
            }
        }
    }
    true
}

/// Cup length of the quotient: the largest `q` with a nonzero product of `q`
/// degree-one generators, found by depth-first search with zero-prefix
/// pruning. A zero prefix never extends to a nonzero product, and the top
/// nonvanishing degree bounds the answer from above, so the search is exact.
pub fn cup_length(
    pres: &QuadraticPresentation,
    basis: &GradedBasis,
) -> (usize, Option<Vec<GeneratorPair>>) {
    let top = basis.top_degree();
    if top == 0 {
        return (0, None);
    }
    let gens = pres.generators();
    let mut stack: Vec<(usize, AlgElement, Vec<GeneratorPair>)> = Vec::new();
    for (k, g) in gens.iter().enumerate() {
        stack.push((k, AlgElement::generator(*g), vec![*g]));
    }
    let mut best: (usize, Option<Vec<GeneratorPair>>) = (1, stack.first().map(|s| s.2.clone()));
    while let Some((start, prefix, word)) = stack.pop() {
        if word.len() == top {
            return (top, Some(word));
        }
        if word.len() > best.0 {
            best = (word.len(), Some(word.clone()));
        }
        for (k, g) in gens.iter().enumerate().skip(start + 1) {
            let extended = basis.multiply(&prefix, &AlgElement::generator(*g));
            if !extended.is_zero() {
                let mut next_word = word.clone();
                next_word.push(*g);
                stack.push((k, extended, next_word));
            }
        }
    }
    best
}

/// Structural upper-bound check: every product of `k` degree-one tensor
/// elements vanishes when each bidegree `(p, k−p)` has a vanishing leg.
pub fn tensor_degree_vanishes(basis: &GradedBasis, k: usize) -> bool {
    (0..=k).all(|p| basis.dim(p) == 0 || basis.dim(k - p) == 0)
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchOutcome {
    pub certificate: ZeroDivisorCertificate,
    pub exhausted_budget: bool,
    pub steps: u64,
}

/// Best-effort search for long nonzero products of candidate degree-one zero
/// divisors (`bar(g)` and `g⊗g` for each generator `g`). The result is a
/// valid lower bound for the zero-divisor cup length, never claimed tight.
pub fn zcl_search(
    pres: &QuadraticPresentation,
    basis: &GradedBasis,
    budget: u64,
) -> Result<SearchOutcome, CapacityError> {
    let mut candidates: Vec<ZeroDivisorFactor> = Vec::new();
    for g in pres.generators() {
        candidates.push(ZeroDivisorFactor::Bar { generator: *g });
    }
    for g in pres.generators() {
        candidates.push(ZeroDivisorFactor::PureTensor { generator: *g });
    }
    let tensors: Vec<TensorElement> = candidates.iter().map(|f| f.to_tensor(basis)).collect();

    // Degree-one tensor elements anticommute, so products with a repeated
    // factor vanish and subsets in a fixed order suffice.
    let mut steps = 0u64;
    let mut exhausted = false;
    let mut best: Vec<usize> = Vec::new();
    let mut stack: Vec<(usize, TensorElement, Vec<usize>)> =
        vec![(0, TensorElement::unit(), Vec::new())];
    let max_len = 2 * basis.top_degree();
    'outer: while let Some((start, prefix, picked)) = stack.pop() {
        if picked.len() > best.len() {
            best = picked.clone();
            if best.len() == max_len {
                break;
            }
        }
        for (k, t) in tensors.iter().enumerate().skip(start) {
            if steps >= budget {
                exhausted = true;
                break 'outer;
            }
            steps += 1;
            let extended = prefix.multiply(t, basis);
            if !extended.is_zero() {
                let mut next = picked.clone();
                next.push(k);
                stack.push((k + 1, extended, next));
            }
        }
    }

    let factors: Vec<ZeroDivisorFactor> = best.iter().map(|&k| candidates[k].clone()).collect();
    let (mut cert, product) = ZeroDivisorCertificate::build("search".into(), basis, factors);
    cert.witness = product.terms().next().map(|((l, r), c)| WitnessTerm {
        left: l.clone(),
        right: r.clone(),
        coefficient: c.clone(),
    });
    let cert = cert.finalize(product);
    Ok(SearchOutcome {
        certificate: cert,
        exhausted_budget: exhausted,
        steps,
    })
}
