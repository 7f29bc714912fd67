//! K-theoretic Littlewood-Richardson combinatorics.
//!
//! Structure constants for the K-theory of Grassmannians and maximal
//! orthogonal Grassmannians, computed by several independent rules:
//! ballot genomic tableaux, K-rectification of increasing tableaux,
//! set-valued tableaux with reverse-lattice column words, and K-puzzles.

pub mod error;
pub mod shapes;
pub mod shifted;
pub mod sweep;
pub mod jdt;
pub mod json;
pub mod kstd;
pub mod lr;
pub mod par;
pub mod puzzles;
pub mod schur;
pub mod tableaux;
pub mod words;

pub use error::{Error, Result};
