//! The periodzeta guide. Each module holds one chapter of the book so that
//! its code blocks run as doctests.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/linear-algebra.md")]
pub mod linear_algebra {}

#[doc = include_str!("../../../book/src/polynomials.md")]
pub mod polynomials {}

#[doc = include_str!("../../../book/src/period-spaces.md")]
pub mod period_spaces {}

#[doc = include_str!("../../../book/src/structure-maps.md")]
pub mod structure_maps {}

#[doc = include_str!("../../../book/src/relations.md")]
pub mod relations {}

#[doc = include_str!("../../../book/src/determinants.md")]
pub mod determinants {}

#[doc = include_str!("../../../book/src/regularization.md")]
pub mod regularization {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
