//! Exact ribbon-graph machinery and bound evaluation for counting critical
//! points of the systole function on the moduli space of genus-`g` surfaces.
//!
//! - [`map`]: rotation systems, face tracing, genus, filling tests, canonical codes.
//! - [`enumeration`]: plane trees, edge additions, rotation systems and the
//!   tree-plus-edges construction census.
//! - [`bounds`]: the counting bounds in exact big-integer and natural-log form,
//!   plus a checker for the inequality chain behind the asymptotic bounds.
//! - [`oracle`]: deliberately naive reference implementations used by tests.

pub mod bounds;
pub mod enumeration;
pub mod map;
pub mod oracle;
pub mod par;

pub use map::{CombinatorialMap, MapError};
