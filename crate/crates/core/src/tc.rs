//! Topological-complexity bounds assembled from dimension formulas and
//! zero-divisor certificates.
//!
//! Everything here uses the unreduced convention: `tc(point) = 1` and
//! `tc(S¹) = 2`. The bounds in play are
//!
//! * `tc(G) ≤ 2·geomdim(G) + 1`,
//! * `tc(G₁ × G₂) ≤ tc(G₁) + tc(G₂) − 1`,
//! * `tc(G) ≥ 1 + zcl(H*(G; ℚ))`,
//!
//! with dimension values taken from the known formulas
//! `cd(PΣ_n) = cd(PΣ_n⁺) = n−1` and `cd(PΣ_n⁺/center) = n−2`, cross-checked
//! against the top nonvanishing degree of the computed cohomology ring.

use crate::algebra::GradedBasis;
use crate::error::CoreError;
use crate::zerodiv::ZeroDivisorCertificate;
use serde::{Deserialize, Serialize};

pub const TC_CONVENTION: &str = "unreduced";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupFamily {
    /// The basis-conjugating automorphism group `PΣ_n`.
    Full,
    /// The upper triangular McCool group `PΣ_n⁺`.
    Plus,
    /// `PΣ_n⁺` modulo its infinite cyclic center.
    PlusQuotient,
    /// The free group `F_n`.
    Free,
    /// `ℤ`.
    Integers,
}

impl GroupFamily {
    pub fn as_str(&self) -> &'static str {
        match self {
            GroupFamily::Full => "full",
            GroupFamily::Plus => "plus",
            GroupFamily::PlusQuotient => "plus_quotient",
            GroupFamily::Free => "free",
            GroupFamily::Integers => "integers",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupId {
    pub family: GroupFamily,
    pub n: usize,
}

impl GroupId {
    pub fn new(family: GroupFamily, n: usize) -> Result<Self, CoreError> {
        let min = match family {
            GroupFamily::Full | GroupFamily::Plus | GroupFamily::PlusQuotient => 2,
            GroupFamily::Free => 1,
            GroupFamily::Integers => 0,
        };
        if n < min {
            return Err(CoreError::RankTooSmall { n, min });
        }
        Ok(GroupId { family, n })
    }
}

/// `(cd, geomdim)` from the cited dimension formulas. These are lookups, not
/// computations; the ring cross-check lives in [`dimension_cross_check`].
pub fn dimension(group: GroupId) -> (usize, usize) {
    let d = match group.family {
        GroupFamily::Full | GroupFamily::Plus => group.n - 1,
        GroupFamily::PlusQuotient => group.n - 2,
        GroupFamily::Free | GroupFamily::Integers => 1,
    };
    (d, d)
}

/// The top nonvanishing cohomological degree must equal `cd`.
pub fn dimension_cross_check(group: GroupId, basis: &GradedBasis) -> bool {
    match group.family {
        GroupFamily::Full | GroupFamily::Plus => basis.top_degree() == group.n - 1,
        _ => true,
    }
}

/// How a bound was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    /// Backed by a machine-verified certificate in this run.
    Certificate,
    /// A cited formula, not verified at this size.
    Formula,
}

/// Upper bound with a derivation trace.
pub fn tc_upper(group: GroupId) -> (usize, Vec<String>) {
    let (_, geomdim) = dimension(group);
    let dim_route = 2 * geomdim + 1;
    match group.family {
        GroupFamily::Plus => {
            // The center splits off: PΣ_n⁺ ≅ (PΣ_n⁺/center) × ℤ.
            let quotient = GroupId {
                family: GroupFamily::PlusQuotient,
                n: group.n,
            };
            let (q_upper, _) = tc_upper(quotient);
            let product_route = q_upper + 2 - 1;
            let value = dim_route.min(product_route);
            let mut trace = vec![format!(
                "tc ≤ 2·geomdim + 1 = {dim_route} (geomdim = {geomdim})"
            )];
            trace.push(format!(
                "tc ≤ tc(PΣ_n⁺/center) + tc(Z) − 1 = {q_upper} + 2 − 1 = {product_route} \
                 (center splitting, tc(Z) = 2)"
            ));
            trace.push(format!("upper bound: min = {value} via product route"));
            (value, trace)
        }
        GroupFamily::Integers => (2, vec!["tc(Z) = tc(S¹) = 2".into()]),
        GroupFamily::Free if group.n == 1 => (2, vec!["F_1 = Z, tc = 2".into()]),
        _ => (
            dim_route,
            vec![format!(
                "tc ≤ 2·geomdim + 1 = {dim_route} (geomdim = {geomdim})"
            )],
        ),
    }
}

/// Lower bound `1 + zcl` together with its provenance. With a verified
/// certificate of length L the bound is `1 + L`; otherwise it degrades to the
/// generic noncontractibility bound.
pub fn tc_lower(
    group: GroupId,
    certificate: Option<&ZeroDivisorCertificate>,
) -> (usize, usize, Provenance) {
    if let Some(cert) = certificate {
        if cert.passed {
            return (1 + cert.length, cert.length, Provenance::Certificate);
        }
    }
    // Noncontractible groups have a nonzero bar(a), hence zcl ≥ 1 and
    // tc ≥ 2; the trivial group has tc = 1.
    let (cd, _) = dimension(group);
    if cd == 0 {
        (1, 0, Provenance::Formula)
    } else {
        (2, 1, Provenance::Formula)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TCReport {
    pub family: GroupFamily,
    pub n: usize,
    pub convention: &'static str,
    pub cd: usize,
    pub geomdim: usize,
    pub zcl_lower: usize,
    pub zcl_provenance: Provenance,
    /// Exact zero-divisor cup length when certified by the sandwich
    /// `certificate ≤ zcl ≤ tc_upper − 1`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub zcl_exact: Option<usize>,
    pub tc_lower: usize,
    pub tc_upper: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tc_exact: Option<usize>,
    pub trace: Vec<String>,
    /// Labels of the machine-verified certificates backing the bounds.
    pub certificates: Vec<String>,
    pub dimension_cross_check: Option<bool>,
}

/// Assembles dimensions, the certificate-backed lower bound, and the upper
/// bound; `tc_exact` is set iff they agree.
pub fn tc_report(
    group: GroupId,
    certificate: Option<&ZeroDivisorCertificate>,
    basis: Option<&GradedBasis>,
) -> TCReport {
    let (cd, geomdim) = dimension(group);
    let (upper, mut trace) = tc_upper(group);
    let (lower, zcl_lower, provenance) = tc_lower(group, certificate);
    trace.push(match provenance {
        Provenance::Certificate => format!(
            "tc ≥ 1 + zcl ≥ 1 + {zcl_lower} (machine-verified certificate {})",
            certificate.map(|c| c.label.as_str()).unwrap_or("?")
        ),
        Provenance::Formula => {
            format!("tc ≥ {lower} (generic bound, no certificate at this size)")
        }
    });
    // A lower bound exceeding the upper bound means the build itself is
    // broken, not a data point.
    assert!(
        lower <= upper,
        "tc lower bound {lower} exceeds upper bound {upper}"
    );

    let tc_exact = (lower == upper).then_some(lower);
    if let Some(v) = tc_exact {
        trace.push(format!("bounds agree: tc = {v}"));
    }

    // Sandwich for the exact zero-divisor cup length: zcl ≤ tc − 1 ≤
    // upper − 1, and the certificate gives zcl ≥ its length.
    let zcl_exact = match (provenance, zcl_lower) {
        (Provenance::Certificate, l) if l == upper - 1 => {
            trace.push(format!("zcl = {l} (certificate length meets tc_upper − 1)"));
            Some(l)
        }
        _ => None,
    };

    let cross = basis.map(|b| dimension_cross_check(group, b));
    TCReport {
        family: group.family,
        n: group.n,
        convention: TC_CONVENTION,
        cd,
        geomdim,
        zcl_lower,
        zcl_provenance: provenance,
        zcl_exact,
        tc_lower: lower,
        tc_upper: upper,
        tc_exact,
        trace,
        certificates: certificate
            .filter(|c| c.passed)
            .map(|c| vec![c.label.clone()])
            .unwrap_or_default(),
        dimension_cross_check: cross,
    }
}
