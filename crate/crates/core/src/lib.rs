//! Exact homology of the complex of labeled injective words.
//!
//! The crate builds the chain complex `C_*(A)` whose degree-`r` generators
//! are words of `r` distinct letters from `A = {1, …, n}` each carrying one of
//! `ℓ` labels, computes its integral homology by Smith normal form, and
//! checks the filtration argument for the vanishing of `H_r` below the top
//! degree together with the wreath-product combinatorics of the top rank.

pub mod complex;
pub mod error;
pub mod filtration;
pub mod homology;
pub mod words;
pub mod wreath;

pub use complex::{build_complex, restrict_complex, verify_dd_zero, ChainComplex};
pub use error::{Error, Result};
pub use homology::{
    betti_table, homology_at, smith_normal_form, HomologyGroup, SmithForm, SparseIntMatrix,
};
pub use words::{enumerate_generators, Alphabet, LabeledWord};
