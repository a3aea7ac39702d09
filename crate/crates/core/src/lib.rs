//! Exact χ_y-genus arithmetic for smooth compact complex varieties.
//!
//! The crate is layered bottom-up:
//!
//! - [`exact_poly`]: integer, rational and formal-symbol polynomials in `y`.
//! - [`hodge_core`]: Hodge diamonds, chi-vectors, genus polynomials and the
//!   Euler/Todd/signature invariants.
//! - [`closed_forms`]: χ_y in terms of τ, σ, χ and low-index χ^i, by
//!   dimension class (odd, 4k, 4k+2), plus chi-vector reconstruction.
//! - [`bundle_analysis`]: multiplicativity defects of fiber bundles.
//! - [`symbolic_verify`]: formal proofs of the closed forms, the bundle
//!   difference identities and the mod-4 signature congruence.
//! - [`catalog`] and [`cli`]: file formats, built-in varieties, reports and
//!   the command-line surface.

pub mod bundle_analysis;
pub mod catalog;
pub mod cli;
pub mod closed_forms;
pub mod exact_poly;
pub mod hodge_core;
pub mod sampling;
pub mod serde_int;
pub mod symbolic_verify;

/// Whether constraint violations abort (`Strict`) or are carried along as a
/// flag for diagnostics (`Lax`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strictness {
    #[default]
    Strict,
    Lax,
}
