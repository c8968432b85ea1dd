//! Exact computations in symplectic reflection algebras and rational Cherednik algebras.
//!
//! Everything is over ℚ with parameters kept symbolic as polynomials in `t, c_1, ..., c_r`.
//! The modules build bottom-up: [`coeffs`] for arithmetic, [`groups`] for finite symplectic
//! groups, [`sra`] for the PBW engine, [`centralizer`] for `Z(G, H, A)`, [`cherednik`] for the
//! Dunkl realization and finite-dimensionality scans, [`completion`] for truncated completions
//! at base points, and [`cli`] for the report-producing front end.

pub mod centralizer;
pub mod cli;
pub mod cherednik;
pub mod coeffs;
pub mod completion;
pub mod error;
pub mod groups;
pub mod sra;

pub use error::{Error, Result};
