// SPDX-License-Identifier: Apache-2.0

//! Exact construction and verification toolkit for Paley graphs `P(q²)`.
//!
//! The field tower `F_p → F_q → F_{q²}` is built with table arithmetic, the
//! graph is stored as bitset rows, and every structural claim about the
//! norm-one oval `Q = Q₀ ∪ Q₁` (its cliques, cocliques and the ±1
//! eigenfunction supported on it) is checked with integer arithmetic only.
//!
//! Module map:
//!
//! - [`field`]: prime-power fields and the quadratic extension
//! - [`graph`]: bitset graphs, Paley construction, strongly-regular checks
//! - [`affine`]: the affine plane `A(2,q)` on `F_{q²}`, lines and ovals
//! - [`constructions`]: `ω`, `Q₀`, `Q₁`, the oval cliques and affine maps
//! - [`spectral`]: eigenfunctions and the minimum-support oracle
//! - [`search`]: maximal clique enumeration and censuses
//! - [`certify`]: certificate assembly used by the `paley` binary

pub mod affine;
pub mod arith;
pub mod certify;
pub mod constructions;
pub mod error;
pub mod field;
pub mod graph;
pub mod linalg;
pub mod search;
pub mod spectral;

pub use error::{Error, Result};
