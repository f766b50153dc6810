//! Pillow degenerations of K3 surfaces: the plane configuration, the
//! branch-curve characters of general projections, and the bookkeeping of how
//! nodes, cusps and branch points distribute over the degenerate branch curve.

pub mod cli;
pub mod degeneration;
pub mod error;
pub mod pillow;
pub mod report;
pub mod suite;
pub mod surface;

pub use error::{Error, Result};
pub use report::{Check, VerificationReport};
