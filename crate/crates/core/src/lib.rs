//! Partition combinatorics for line-bundle cohomology on Grassmannians and flag
//! varieties, vanishing-bound calculators, and resolution bookkeeping for
//! symmetric degeneracy loci.
//!
//! Every closed formula here has a brute-force counterpart (box enumeration,
//! the Bott algorithm, LR tableaux) and the two are compared in [`verify`].

pub mod admissible;
pub mod bott;
pub mod bounds;
pub mod bracket;
pub mod degeneracy;
pub mod error;
pub mod extremal;
pub mod flag;
pub mod grassmann;
pub mod lr;
pub mod partition;
pub mod verify;

pub use error::{Error, Result};
pub use partition::{BoxSpec, Partition};
