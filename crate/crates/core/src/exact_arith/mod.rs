//! Exact scalars, truncated series and classical sequences.

pub mod linalg;
mod rat;
mod sequences;
mod series;

pub use rat::Rat;
pub use sequences::{
    bernoulli, bernoulli_poly_order, binom, factorial, falling, multinomial, stirling1_unsigned,
    stirling2, zeta_neg,
};
pub use series::TruncSeries;
