//! Combinatorics of arc complexes on surfaces with boundary.
//!
//! The crate computes the permutation invariants of arc simplices, the
//! topology of the surfaces obtained by cutting along them, the permutation
//! chain complex and its realizable quotients together with their integral
//! homology, E¹ page skeletons of the associated spectral sequences, and a
//! ledger replaying the arithmetic of the homological stability argument.

pub mod e1;
pub mod error;
pub mod ledger;
pub mod perm;
pub mod ribbon;
pub mod surface;
pub mod zchain;

pub use error::{Error, Result};
pub use perm::{FormalSum, Perm};
pub use surface::{ArcClass, Gluing, Side, SurfaceType};
