//! Exact enumerative combinatorics of billiard partitions and separable
//! integer partition classes.
//!
//! Everything here is computed in exact integer arithmetic over sparse
//! multivariate Laurent/q-series. The crate is `no_std` (alloc required), so
//! the algorithmic core can be reused from any host; IO, file formats and the
//! CLI live in the companion `bpart-cli` crate.
//!
//! Module map:
//!
//! - [`series`] — sparse exact series in `q` (Laurent), `a`, `x`, `z` with
//!   per-value truncation policies, q-Pochhammer symbols and Gaussian
//!   binomials.
//! - [`partition`] — partitions into distinct parts, the billiard class and
//!   its basis, exhaustive enumerators, the weighted series.
//! - [`sip`] — separable integer partition classes of types A and B,
//!   basis enumeration, the unique basal decomposition, and the
//!   Fibonacci/Lucas counting layer.
//! - [`genfun`] — closed-form, recursive and product-form generating
//!   functions for basal partitions (`s(d,m)`, `t(d,m)` and their
//!   z-aggregations).
//! - [`quiver`] — symmetric-quiver generating series and the identity
//!   between the stratified basal series and a two-node quiver.
//! - [`schroeder`] — weighted Schroder paths and the quotient identity
//!   relating them to the two-node quiver series.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod error;
pub mod genfun;
pub mod partition;
pub mod quiver;
pub mod schroeder;
pub mod series;
pub mod sip;

pub use error::Error;
pub use partition::Partition;
pub use series::{Monomial, MultiSeries, TruncationPolicy};
pub use sip::{SipClassA, SipClassB, SmallestPartMode};
