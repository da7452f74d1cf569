use thiserror::Error;

/// A computation was requested beyond the supported size tier.
///
/// The supported tiers are `n ≤ 5` for the full variant and `n ≤ 6` for the
/// plus variant. Callers opt into larger sizes explicitly via
/// [`crate::algebra::CapacityTier`]; nothing in the crate attempts unbounded
/// work silently.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("capacity exceeded: {what} at n={n} is outside the {tier} tier")]
pub struct CapacityError {
    pub what: &'static str,
    pub n: usize,
    pub tier: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error("generator index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("invalid generator pair ({i},{j}): {reason}")]
    InvalidGenerator {
        i: usize,
        j: usize,
        reason: &'static str,
    },

    #[error("rank must be at least {min}, got {n}")]
    RankTooSmall { n: usize, min: usize },

    #[error("degree {degree} out of range (top computed degree {top})")]
    DegreeOutOfRange { degree: usize, top: usize },

    #[error(transparent)]
    Capacity(#[from] CapacityError),

    #[error("rewriting defect: {0}")]
    RewriteDefect(String),
}
