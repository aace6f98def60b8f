//! Exact distributions of colored descent statistics on the wreath
//! products of a cyclic color group with a symmetric group.
//!
//! Five independent pipelines compute the same histograms (brute-force
//! enumeration, closed formulas, block/composition sums, recurrences, and
//! generating-function expansion) and a verification matrix compares them
//! cell by cell. Everything runs in exact arithmetic: big integers, big
//! rationals, q-polynomials, and truncated series over the rational
//! functions in q.
//!
//! The printed closed form and generating function for same-color descents
//! disagree with ground truth whenever r != 2. Those routes are
//! implemented verbatim anyway; the [`erratum`] report documents the
//! deviations value by value instead of hiding them, and the [`verify`]
//! matrix quarantines them so its verdict stays meaningful.

pub mod algebra;
pub mod distribution;
pub mod egf;
pub mod erratum;
pub mod formulas;
pub mod group;
pub mod methods;
pub mod oracle;
pub mod recurrence;
pub mod stats;
pub mod verify;

pub use distribution::{DescentDistribution, Method};
pub use group::{ColoredLetter, ColoredPermutation, GroupParams, ZTauForm};
pub use methods::{compute_distribution, ComputeError};
pub use oracle::{BruteConfig, DEFAULT_ELEMENT_CAP};
pub use stats::DescentStatistic;
