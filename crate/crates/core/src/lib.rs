//! Exact homology invariants of periodic Takahashi manifolds `M_n(p/q, r/s)`
//! and of their branching knots.
//!
//! The crate is layered bottom-up:
//!
//! - [`exactalg`]: big-integer matrices, Smith normal form, polynomials and
//!   resultants.
//! - [`grouppres`]: words, presentations, abelianization, and the
//!   `2n`-generator and cyclic presentation families.
//! - [`knotkit`]: two-bridge knots, Fox calculus, reduced Burau, and
//!   homology of cyclic branched covers.
//! - [`manifolds`]: surgery-data normalization and the homology-level
//!   cross-checks between the routes above.
//! - [`claims`]: the reproducible claims harness behind `verify-paper`.

pub mod claims;
pub mod error;
pub mod exactalg;
pub mod grouppres;
pub mod knotkit;
pub mod manifolds;

pub use error::{Error, Result};
