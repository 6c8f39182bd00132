//! Key-dependent "clone" s-boxes.
//!
//! A clone of a seed s-box `S` is `B2 ∘ S ∘ B1`, where `B1` and `B2` permute
//! the bit positions of the input and output words. Viewed through the
//! 2^n × n Boolean-matrix representation this is a row permutation induced by
//! the input permutation together with a column permutation of the output
//! bits. Both actions leave bijectivity, nonlinearity, the SAC dependence
//! multiset and the BIC statistics unchanged, so one strong seed yields
//! (n!)² key-selected boxes with identical measured strength.
//!
//! The crate is organised as:
//!
//! * [`sbox`], [`perm`], [`matrix`]: data model and conversions.
//! * [`cloning`]: the clone transform and fixed-point removal.
//! * [`keys`]: Lehmer-code derivation of the two permutations from a key.
//! * [`analysis`]: nonlinearity, SAC, BIC and report comparison.
//! * [`enumerate`]: sweeps over the (σ1, σ2) space with invariance checks.
//! * [`exec`]: sequential / rayon dispatch.

pub mod analysis;
pub mod cloning;
pub mod enumerate;
mod error;
pub mod exec;
pub mod keys;
pub mod known;
pub mod matrix;
pub mod perm;
pub mod sbox;

pub use analysis::{analyze, compare_reports, AnalysisReport, PropertyStats, ReportDiff};
pub use cloning::{
    bit_permute_value, clone_sbox, clone_sbox_avoiding_fixed_points, derive_row_permutation,
    find_fixed_points, CloneOptions, FixedPointReport,
};
pub use error::{Error, Result};
pub use exec::Exec;
pub use keys::{key_to_permutations, lehmer_decode, lehmer_encode, FactoradicIndex, KeyMaterial};
pub use matrix::{apply_column_permutation, from_boolean_matrix, to_boolean_matrix, BooleanMatrix};
pub use perm::BitPermutation;
pub use sbox::SBox;
