//! Graded quotient bases by exact Gaussian elimination.
//!
//! For each degree `q` the relation subspace is spanned by `m · r` over all
//! relations `r` and exterior monomials `m` of degree `q - 2`. Its row-echelon
//! form determines the quotient dimension, a monomial basis (the free
//! columns), and projection data rewriting every non-basis monomial as a
//! combination of basis monomials.
//!
//! Columns are ordered with the combinatorial basis monomials last, so pivot
//! selection prefers them as free columns. This makes the computed basis
//! coincide with the combinatorial basis whenever the latter is valid — if it
//! were not, some claimed monomial would be forced into a pivot position and
//! the discrepancy would surface in [`verify_claimed_basis`].
//!
//! Degrees are computed from 0 up to the first degree where the quotient
//! vanishes. Since the algebra is generated in degree 1, every higher degree
//! vanishes as well.

use crate::algebra::element::AlgElement;
use crate::algebra::linalg::{RrefBuilder, SparseVec};
use crate::algebra::monomial::ExtMonomial;
use crate::algebra::presentation::{QuadraticPresentation, Variant};
use crate::error::{CapacityError, CoreError};
use crate::rational::{rat_int, Rat};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Supported problem sizes. Exceeding a tier yields a capacity error instead
/// of unbounded work.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CapacityTier {
    pub max_full: usize,
    pub max_plus: usize,
}

impl Default for CapacityTier {
    fn default() -> Self {
        CapacityTier {
            max_full: 5,
            max_plus: 6,
        }
    }
}

impl CapacityTier {
    pub fn admits(&self, n: usize, variant: Variant) -> bool {
        match variant {
            Variant::Full => n <= self.max_full,
            Variant::Plus => n <= self.max_plus,
        }
    }

    pub fn check(
        &self,
        n: usize,
        variant: Variant,
        what: &'static str,
    ) -> Result<(), CapacityError> {
        if self.admits(n, variant) {
            Ok(())
        } else {
            Err(CapacityError {
                what,
                n,
                tier: format!("full ≤ {}, plus ≤ {}", self.max_full, self.max_plus),
            })
        }
    }
}

/// Cached payload per degree: basis monomials and projection rows.
pub(crate) type DegreeParts = (Vec<ExtMonomial>, BTreeMap<ExtMonomial, Vec<(u32, Rat)>>);

/// Per-degree quotient data: the monomial universe, the chosen basis, and
/// projection rows for every non-basis monomial.
#[derive(Debug, Clone)]
pub struct DegreeData {
    monomials: Vec<ExtMonomial>,
    basis: Vec<ExtMonomial>,
    /// Non-basis monomial -> combination over `basis` positions.
    projection: BTreeMap<ExtMonomial, Vec<(u32, Rat)>>,
}

impl DegreeData {
    pub fn monomials(&self) -> &[ExtMonomial] {
        &self.monomials
    }

    pub fn basis(&self) -> &[ExtMonomial] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn projection_rows(&self) -> &BTreeMap<ExtMonomial, Vec<(u32, Rat)>> {
        &self.projection
    }

    pub fn is_basis_monomial(&self, m: &ExtMonomial) -> bool {
        self.basis.binary_search(m).is_ok()
    }
}

/// Quotient bases for all degrees, up to and including the first vanishing
/// degree.
#[derive(Debug, Clone)]
pub struct GradedBasis {
    n: usize,
    variant: Variant,
    dims: Vec<usize>,
    degrees: Vec<DegreeData>,
}

impl GradedBasis {
    /// Computes the graded basis for a presentation within the given tier.
    pub fn compute(pres: &QuadraticPresentation, tier: &CapacityTier) -> Result<Self, CoreError> {
        tier.check(pres.n(), pres.variant(), "graded basis")?;
        let mut dims = Vec::new();
        let mut degrees = Vec::new();
        let mut q = 0usize;
        loop {
            let data = compute_degree(pres, q);
            let dim = data.dim();
            dims.push(dim);
            degrees.push(data);
            if dim == 0 {
                break;
            }
            q += 1;
        }
        Ok(GradedBasis {
            n: pres.n(),
            variant: pres.variant(),
            dims,
            degrees,
        })
    }

    /// Reassembles a basis from cached parts, revalidating the invariants
    /// that tie it to the presentation.
    pub(crate) fn from_parts(
        pres: &QuadraticPresentation,
        dims: Vec<usize>,
        parts: Vec<DegreeParts>,
    ) -> Result<Self, CoreError> {
        if dims.len() != parts.len() || dims.is_empty() || *dims.last().unwrap() != 0 {
            return Err(CoreError::RewriteDefect("inconsistent cached dims".into()));
        }
        let mut degrees = Vec::new();
        for (q, (basis, projection)) in parts.into_iter().enumerate() {
            let monomials = pres.degree_monomials(q);
            if basis.len() != dims[q] {
                return Err(CoreError::RewriteDefect(
                    "cached basis size mismatch".into(),
                ));
            }
            let mut covered = basis.len() + projection.len();
            if dims[q] == 0 {
                covered = monomials.len(); // empty-degree shortcut, nothing stored
            }
            if covered != monomials.len() {
                return Err(CoreError::RewriteDefect(
                    "cached projection incomplete".into(),
                ));
            }
            for m in &basis {
                if monomials.binary_search(m).is_err() {
                    return Err(CoreError::RewriteDefect(
                        "cached basis monomial unknown".into(),
                    ));
                }
            }
            for (m, combo) in &projection {
                if monomials.binary_search(m).is_err()
                    || combo.iter().any(|(k, _)| *k as usize >= basis.len())
                {
                    return Err(CoreError::RewriteDefect("cached projection invalid".into()));
                }
            }
            degrees.push(DegreeData {
                monomials,
                basis,
                projection,
            });
        }
        Ok(GradedBasis {
            n: pres.n(),
            variant: pres.variant(),
            dims,
            degrees,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    /// Quotient dimensions, ending with the first vanishing degree.
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, q: usize) -> usize {
        self.dims.get(q).copied().unwrap_or(0)
    }

    /// Largest degree with nonzero quotient.
    pub fn top_degree(&self) -> usize {
        self.dims
            .iter()
            .rposition(|&d| d > 0)
            .expect("degree 0 has dimension 1")
    }

    /// First degree where the quotient vanishes; all higher degrees vanish
    /// too because the algebra is generated in degree 1.
    pub fn vanishing_degree(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn degree_data(&self, q: usize) -> Option<&DegreeData> {
        self.degrees.get(q)
    }

    /// Projection onto the quotient basis: kills exactly the relation
    /// subspace, fixes basis monomials, and sends every degree at or above
    /// the vanishing degree to zero.
    pub fn normal_form(&self, e: &AlgElement) -> AlgElement {
        let mut out = AlgElement::zero();
        for (m, c) in e.terms() {
            let q = m.degree();
            if q >= self.vanishing_degree() {
                continue;
            }
            let data = &self.degrees[q];
            if data.is_basis_monomial(m) {
                out.add_term(m.clone(), c.clone());
            } else {
                let combo = data
                    .projection
                    .get(m)
                    .expect("every non-basis monomial has a projection row");
                for (k, v) in combo {
                    out.add_term(data.basis[*k as usize].clone(), c * v);
                }
            }
        }
        out
    }

    /// Exterior product followed by normal form.
    pub fn multiply(&self, a: &AlgElement, b: &AlgElement) -> AlgElement {
        self.normal_form(&a.mul_raw(b))
    }

    /// True if the element is already a combination of basis monomials.
    pub fn in_normal_form(&self, e: &AlgElement) -> bool {
        e.terms().all(|(m, _)| {
            self.degrees
                .get(m.degree())
                .is_some_and(|d| d.is_basis_monomial(m))
        })
    }
}

fn compute_degree(pres: &QuadraticPresentation, q: usize) -> DegreeData {
    let monomials = pres.degree_monomials(q);
    if q < 2 {
        // No relations reach below degree 2.
        return DegreeData {
            basis: monomials.clone(),
            monomials,
            projection: BTreeMap::new(),
        };
    }

    let col_of =
        |m: &ExtMonomial| -> u32 { monomials.binary_search(m).expect("degree-q monomial") as u32 };

    // Elimination order: non-claimed monomials first, claimed last.
    let claimed: Vec<bool> = monomials
        .iter()
        .map(|m| q < pres.n() && pres.is_claimed_basis_monomial(m))
        .collect();
    let mut elim_of = vec![0u32; monomials.len()];
    {
        let mut next = 0u32;
        for (k, &is_claimed) in claimed.iter().enumerate() {
            if !is_claimed {
                elim_of[k] = next;
                next += 1;
            }
        }
        for (k, &is_claimed) in claimed.iter().enumerate() {
            if is_claimed {
                elim_of[k] = next;
                next += 1;
            }
        }
    }
    let mut col_of_elim = vec![0u32; monomials.len()];
    for (k, &e) in elim_of.iter().enumerate() {
        col_of_elim[e as usize] = k as u32;
    }

    // Span rows m · r over all degree-(q-2) monomials m and relations r.
    let mut builder = RrefBuilder::new();
    let lower = pres.degree_monomials(q - 2);
    for rel in pres.relations() {
        for m in &lower {
            let mut coords: Vec<(u32, Rat)> = Vec::new();
            for (f, c) in rel.terms() {
                if let Some((sign, prod)) = m.mul(f) {
                    coords.push((elim_of[col_of(&prod) as usize], c * rat_int(sign as i64)));
                }
            }
            if !coords.is_empty() {
                builder.insert(SparseVec::from_coords(coords));
            }
        }
    }

    let rank = builder.rank();
    let dim = monomials.len() - rank;
    let mut basis = Vec::with_capacity(dim);
    {
        let pivot_set: Vec<bool> = {
            let mut v = vec![false; monomials.len()];
            for c in builder.pivot_cols() {
                v[c as usize] = true;
            }
            v
        };
        for (k, m) in monomials.iter().enumerate() {
            if !pivot_set[elim_of[k] as usize] {
                basis.push(m.clone());
            }
        }
    }

    let mut projection = BTreeMap::new();
    if dim > 0 {
        let basis_pos =
            |m: &ExtMonomial| -> u32 { basis.binary_search(m).expect("basis monomial") as u32 };
        for (pivot_elim, row) in builder.into_full_rref() {
            let pivot_mono = monomials[col_of_elim[pivot_elim as usize] as usize].clone();
            let mut combo: Vec<(u32, Rat)> = row.entries()[1..]
                .iter()
                .map(|(c, v)| {
                    let mono = &monomials[col_of_elim[*c as usize] as usize];
                    (basis_pos(mono), -v.clone())
                })
                .collect();
            combo.sort_by_key(|&(k, _)| k);
            projection.insert(pivot_mono, combo);
        }
    }
    // When the quotient vanishes, every monomial projects to zero; no rows
    // are stored and `normal_form` short-circuits on the degree.

    DegreeData {
        monomials,
        basis,
        projection,
    }
}

/// Graded dimension generating polynomial; index is the degree, trailing
/// zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertSeries(pub Vec<u64>);

impl HilbertSeries {
    pub fn from_dims(dims: &[usize]) -> Self {
        let mut coeffs: Vec<u64> = dims.iter().map(|&d| d as u64).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        HilbertSeries(coeffs)
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.0
    }

    /// `(1 + n t)^{n-1}` for the full variant, `∏_{k=1}^{n-1} (1 + k t)` for
    /// the plus variant.
    pub fn closed_form(variant: Variant, n: usize) -> Self {
        let mut coeffs = vec![1u64];
        match variant {
            Variant::Full => {
                for _ in 0..(n - 1) {
                    coeffs = poly_mul_linear(&coeffs, n as u64);
                }
            }
            Variant::Plus => {
                for k in 1..n {
                    coeffs = poly_mul_linear(&coeffs, k as u64);
                }
            }
        }
        HilbertSeries(coeffs)
    }
}

fn poly_mul_linear(coeffs: &[u64], a: u64) -> Vec<u64> {
    // coeffs * (1 + a t)
    let mut out = vec![0u64; coeffs.len() + 1];
    for (k, &c) in coeffs.iter().enumerate() {
        out[k] += c;
        out[k + 1] += c * a;
    }
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

/// Computes the quotient Hilbert series.
pub fn poincare_polynomial(basis: &GradedBasis) -> HilbertSeries {
    HilbertSeries::from_dims(basis.dims())
}

/// Outcome of validating the combinatorial basis at one degree.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BasisDegreeCheck {
    pub degree: usize,
    pub claimed_count: usize,
    pub computed_dim: usize,
    pub independent: bool,
    pub ok: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BasisReport {
    pub n: usize,
    pub variant: Variant,
    pub degrees: Vec<BasisDegreeCheck>,
    pub passed: bool,
}

/// Checks, degree by degree, that the combinatorial basis has the computed
/// dimension and is linearly independent modulo the relation subspace.
pub fn verify_claimed_basis(
    pres: &QuadraticPresentation,
    basis: &GradedBasis,
) -> Result<BasisReport, CoreError> {
    let mut degrees = Vec::new();
    for q in 0..=basis.top_degree() {
        let claimed = pres.claimed_basis(q)?;
        let data = basis.degree_data(q).expect("computed degree");
        // Exact rank of the claimed monomials' images in the quotient.
        let mut builder = RrefBuilder::new();
        for m in &claimed {
            let nf = basis.normal_form(&AlgElement::from_monomial(m.clone()));
            let coords: Vec<(u32, Rat)> = nf
                .terms()
                .map(|(bm, c)| {
                    (
                        data.basis.binary_search(bm).expect("basis monomial") as u32,
                        c.clone(),
                    )
                })
                .collect();
            builder.insert(SparseVec::from_coords(coords));
        }
        let independent = builder.rank() == claimed.len();
        let ok = independent && claimed.len() == data.dim();
        degrees.push(BasisDegreeCheck {
            degree: q,
            claimed_count: claimed.len(),
            computed_dim: data.dim(),
            independent,
            ok,
        });
    }
    let passed = degrees.iter().all(|d| d.ok);
    Ok(BasisReport {
        n: pres.n(),
        variant: pres.variant(),
        degrees,
        passed,
    })
}
