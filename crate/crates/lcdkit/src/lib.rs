//! Classification toolkit for linear complementary dual (LCD) codes over
//! GF(2) and GF(3) in dimensions 2 to 4.
//!
//! An LCD code intersects its dual trivially, which holds exactly when the
//! Gram matrix G G^T of a generator matrix G is nonsingular. For dimensions
//! up to 4 over these two fields, codes with dual distance at least 2 are
//! projections of simplex codes: a multiplicity vector over the projective
//! points determines the code up to monomial equivalence. This crate
//! implements that parametrization end to end:
//!
//! - [`gf`]: dense matrices over GF(2)/GF(3) with rank, determinant and RREF;
//! - [`simplex`]: the normative point order, induced point permutation group
//!   and point/message incidence table;
//! - [`code`]: multiplicity-vector codes, weights, LCD tests, dual distance,
//!   canonical forms and generator matrix construction;
//! - [`classify`]: exhaustive classification of optimal LCD codes for given
//!   parameters, with deduplication up to equivalence;
//! - [`theory`]: closed formulas for largest minimum weights, the Griesmer
//!   bound, residual parameters and length reduction;
//! - [`store`]: (de)serialization of classification results and lifting of
//!   stored base classifications to longer lengths.

pub mod classify;
pub mod code;
pub mod error;
pub mod gf;
pub mod simplex;
pub mod store;
pub mod theory;

pub use error::{Error, Result};
