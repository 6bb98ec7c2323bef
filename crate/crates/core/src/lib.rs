//! Exact computation of triple and double Hurwitz numbers with completed cycles.
//!
//! Everything is exact: scalars are [`Rat`], there is no floating point.
pub mod characters;
pub mod decomposition;
pub mod error;
pub mod exact_arith;
pub mod hurwitz;
pub mod oracle;
pub mod partitions;
pub mod polynomiality;
#[cfg(test)]
mod proptests;
pub mod shifted;
pub mod verify;

pub use error::{HurwitzError, Result};
pub use exact_arith::{Rat, TruncSeries};
pub use hurwitz::HurwitzQuery;
pub use partitions::{partitions_of, Partition};
