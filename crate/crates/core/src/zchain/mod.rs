//! Exact integer chain complexes: sparse matrices, Smith normal form,
//! homology, and the permutation complex with its realizable subcomplexes.

pub mod complex;
pub mod homotopy;
pub mod matrix;
pub mod snf;

pub use complex::{boundary_matrix, perm_complex, quotient_complex, ChainComplex, HomologyGroup};
pub use homotopy::{dbar, verify_homotopy, verify_homotopy_sampled, verify_quotient_homotopy, HomotopyReport};
pub use matrix::SparseIntMatrix;
pub use snf::{snf, SnfResult, Transforms};

/// Largest permutation degree the complexes are built to by default.
pub const DEFAULT_DEGREE_CAP: usize = 7;
/// Hard ceiling on permutation degree; degree 8 takes minutes.
pub const MAX_DEGREE_CAP: usize = 8;
