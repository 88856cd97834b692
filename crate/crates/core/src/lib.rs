//! Exact machinery for computing Apery's constant `zeta(3)` from WZ pairs.
//!
//! - [`term`]: hypergeometric terms in `n` and `k`, their exact values and
//!   shift ratios as rational functions.
//! - [`dsl`]: a text syntax for terms, used by the bundled catalog.
//! - [`wz`]: grid and certificate-based verification of WZ pairs and the
//!   acceleration transform that turns a pair into a faster series.
//! - [`catalog`]: the shipped series (`s1`, `s2`, `s3`, `lhs_s1`, `lhs_s2`)
//!   and pairs (`s1`, `s2`).
//! - [`precision`]: summation to certified decimal digits.
//! - [`cli`]: the `zeta3` command.
//!
//! ```
//! use zeta3::catalog::Catalog;
//! use zeta3::precision::{sum_to_digits, SumMode};
//!
//! let catalog = Catalog::bundled();
//! let report = sum_to_digits(catalog.series("s3").unwrap(), 20, SumMode::Exact).unwrap();
//! assert_eq!(report.decimal, "1.20205690315959428539");
//! ```

pub mod catalog;
pub mod cli;
pub mod dsl;
pub mod error;
pub mod numeric;
pub mod precision;
pub mod series;
pub mod term;
pub mod wz;

pub use error::{Error, Result};
