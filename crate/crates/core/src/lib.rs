//! Function-correcting codes for insertion-deletion channels.
//!
//! The crate provides exact insdel-metric primitives, the catalog of target
//! functions with locally-bounded analysis, requirement-matrix generators,
//! exact and greedy searches for irregular insdel-distance codes, closed-form
//! redundancy bounds, explicit encoder constructions, and an insdel channel
//! simulator with an exhaustive function decoder.

pub mod bounds;
pub mod channel;
pub mod constructions;
pub mod error;
pub mod fcidc;
pub mod functions;
pub mod matrices;
pub mod metric;
pub mod rational;
pub mod search;
pub mod word;

pub use error::{Error, Result};
pub use word::{BinaryWord, RunProfile};
