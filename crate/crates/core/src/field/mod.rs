// SPDX-License-Identifier: Apache-2.0

//! The field tower `F_p → F_q → F_{q²}`.
//!
//! `F_q = F_p[x]/(f)` with `f` the least monic irreducible of degree `m`, and
//! `F_{q²} = F_q[α]/(α² − d)` with `d` the least non-square of `F_q`. All
//! choices (modulus, primitive elements, `d`) are the least ones in canonical
//! order, so every downstream object is determined by `q` alone.

mod base;
mod quad;

pub use base::{is_irreducible, least_irreducible, Elem, Field, DEFAULT_FIELD_CAP};
pub use quad::{CoordPair, FieldDump, QuadElem, QuadExt};
