//! Truncated power series over ℚ and the formal group law with arctangent logarithm.

mod export;
mod fgl;
mod multi;
mod trunc;

use thiserror::Error;

pub use export::{bivariate_csv, bivariate_json, univariate_csv, univariate_json};
pub use fgl::{associativity_sides, fgl_from_log, fgl_rational, formal_sum, log_of_fgl, log_sum};
pub use multi::{BiSeries, MultiSeries, TriSeries};
pub use trunc::{arctan_series, n_series, tan_series, TruncSeries};

/// Truncation order used when none is given.
pub const DEFAULT_ORDER: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("truncation orders differ ({0} vs {1})")]
    OrderMismatch(usize, usize),
    #[error("inner series must have zero constant term")]
    NonzeroConstantTerm,
    #[error("series is not reversible: linear coefficient is zero")]
    NotReversible,
    #[error("series has zero constant term and no multiplicative inverse")]
    NotInvertible,
}
