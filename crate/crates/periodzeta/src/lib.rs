//! Exact computations around period polynomials of modular forms and
//! linear relations among regularized double zeta values.

pub mod error;
pub mod exact_linalg;
pub mod polyspace;
pub mod period_polys;
pub mod structure_maps;
pub mod seq_verifier;
pub mod det_lab;
pub mod regzeta;

pub use error::{Error, Result};
pub use exact_linalg::{Matrix, Subspace, Q};
