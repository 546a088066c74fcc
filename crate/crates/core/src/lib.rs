//! Exact computation of the extended minimal-excludant partition functions
//! `p_{A,a}(n)` and `p̄_{A,a}(n)`, the rank, crank and smallest-parts statistics
//! they relate to, and an executable registry of the identities connecting them.
//!
//! Everything is computed over arbitrary-precision integers. Each central
//! quantity is available through at least two independent routes (direct
//! enumeration, truncated q-series, or a recurrence) so that the identities in
//! [`identities`] always compare values produced by different code paths.
//!
//! ```
//! use mexstat::{mexfun, statistics::MexParams};
//!
//! let params = MexParams::new(2, 3).unwrap();
//! assert_eq!(mexfun::p_mex_enum(params, 6).unwrap(), 8u32.into());
//! assert_eq!(mexfun::p_mex_recurrence(params, 6), 8u32.into());
//! ```

pub mod cli;
pub mod error;
pub mod identities;
pub mod mexfun;
pub mod partitions;
pub mod series;
pub mod statistics;
pub mod tables;

pub use error::{Error, Result};
pub use partitions::Partition;
pub use series::{ResidueCondition, TruncatedSeries};
pub use statistics::MexParams;
