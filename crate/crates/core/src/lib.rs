//! Exact computational algebra for the basis-conjugating automorphism groups
//! `PΣ_n` (the McCool groups) and their upper triangular subgroups `PΣ_n⁺`.
//!
//! The crate has three layers:
//!
//! * [`freegroup`] — reduced words in a free group and automorphism
//!   composition, used to check the McCool presentation relations, the
//!   central element, and the semidirect-product action directly in
//!   `Aut(F_n)`.
//! * [`algebra`], [`zerodiv`], [`koszul`] — the rational cohomology rings
//!   `E/I` and `E⁺/I⁺` as quotients of exterior algebras, computed by exact
//!   Gaussian elimination over `ℚ`; products in the tensor square, zero-divisor
//!   cup-length certificates, quadratic-dual Hilbert series, and the freeness
//!   decomposition used for the Koszul property.
//! * [`tc`] — assembly of dimension formulas and certificates into
//!   topological-complexity bounds (unreduced convention, `tc(point) = 1`).
//!
//! All arithmetic in the algebra layer is arbitrary-precision rational; there
//! is no floating point anywhere in the crate.

pub mod algebra;
pub mod cache;
pub mod error;
pub mod freegroup;
pub mod koszul;
pub mod rational;
pub mod tc;
pub mod zerodiv;

pub use algebra::{
    AlgElement, ExtMonomial, GeneratorPair, GradedBasis, HilbertSeries, QuadraticPresentation,
    Variant,
};
pub use error::{CapacityError, CoreError};
pub use freegroup::{FreeEndo, FreeWord, McCoolWord};
pub use zerodiv::{TensorElement, ZeroDivisorCertificate};

/// Version tag for on-disk cache entries. Bump whenever the basis layout,
/// monomial order, or projection format changes.
pub const CACHE_FORMAT_VERSION: &str = "1";

/// Version of the JSON report schema emitted by report types.
pub const SCHEMA_VERSION: &str = "1";
