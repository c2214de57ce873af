//! Exact Bell partition polynomials `P_n`, their reciprocals `W_n`, and the
//! ratio coefficients `WP_n`, with closed forms for classical partition
//! functions checked against truncated power series.
//!
//! Module map:
//!
//! - [`arith`]: divisor sums, factorization, exact rationals
//! - [`partitions`]: partition streams and counting oracles
//! - [`series`], [`product`]: truncated series and product expansions
//! - [`bell`]: the partition-sum engine for `P_n`, `W_n`, `WP_n`
//! - [`partfun`]: named partition functions and product identities
//! - [`errata`]: published closed forms compared against the engine
//! - [`verify`]: identity suites used by the command line

pub mod arith;
pub mod bell;
pub mod errata;
pub mod error;
pub mod family;
pub mod partfun;
pub mod partitions;
pub mod product;
pub mod report;
pub mod series;
pub mod specfile;
pub mod verify;

pub use arith::Rational;
pub use error::{Error, Result};
pub use product::{Factor, GeneratingRatio, ProductSpec, SupportSet};
pub use series::TruncatedSeries;
