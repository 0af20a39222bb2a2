//! Exact computations with Jacobi-Trudi determinants of skew Schur functions
//! and their truncations over type `A_{n−1}`.
//!
//! The crate covers partitions and weights, Kostant's partition function and
//! Kostka numbers, symmetric functions in the monomial, complete and Schur
//! bases, Jacobi-Trudi expansions and their truncations, and an exact
//! Lorentzian polynomial checker. All arithmetic is exact.

pub mod cache;
pub mod dense;
pub mod error;
pub mod jt;
pub mod kostant;
pub mod lorentzian;
pub mod memo;
pub mod partition;
pub mod perm;
pub mod sweep;
pub mod symfunc;
pub mod tableau;
pub mod weight;

pub use dense::DensePoly;
pub use error::{Error, Result};
pub use jt::{jt_determinant, jt_terms, positivity_report, truncation, truncation_schur, JtTerm, PositivityReport};
pub use kostant::{chain_weight_mult, image_weight_mult, kostant_p, kostka, verma_weight_mult};
pub use lorentzian::{is_lorentzian, LorentzianVerdict};
pub use partition::{Partition, SkewShape};
pub use perm::Permutation;
pub use symfunc::{Basis, SymPoly};
pub use weight::{RootSystemA, Weight};
