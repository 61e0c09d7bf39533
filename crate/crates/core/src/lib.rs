//! Exact classification of real square matrices into the semimonotone
//! hierarchy: (strictly) semimonotone, almost (strictly) semimonotone, and
//! (strictly) semimonotone of exact order `k`.
//!
//! All arithmetic is over arbitrary-precision rationals. Membership in
//! `E0`/`E` is decided by enumerating supports and solving one exact
//! phase-1 linear program per support, so every negative verdict carries a
//! vector that can be checked by substitution.
//!
//! ```
//! use semimonotone::classify::{exact_order, ExactOrder, Variant};
//! use semimonotone::RatMatrix;
//!
//! let a = RatMatrix::from_ints(&[[0, -1, -1], [-2, 0, -1], [-3, -4, 0]]);
//! let r = exact_order(&a, Variant::E0).unwrap();
//! assert_eq!(r.outcome, ExactOrder::Exact(2));
//! ```

pub mod classify;
pub mod cli;
pub mod error;
pub mod explore;
pub mod feasibility;
pub mod fixtures;
pub mod lcp;
pub mod ratcore;
pub mod verify;

pub use error::{Error, Result};
pub use ratcore::{IndexSet, RatMatrix, Rational};
