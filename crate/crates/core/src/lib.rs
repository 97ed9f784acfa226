//! Exact computation of Bell polynomials, the partition function, divisor
//! sums and truncated q-series, together with checkers for
//!
//! `7 B_n(1! d_1, …, n! d_n) + 49 n B_{n-1}(1! e_1, …, (n-1)! e_{n-1}) = n! p(7n+5)`,
//!
//! the product formulas for `Σ p(5k+4) x^k` and `Σ p(7k+5) x^k`, and
//! Ramanujan's three partition congruences.
//!
//! Every value is an exact integer or rational; nothing is approximated.

pub mod arith;
pub mod bell;
pub mod error;
pub mod identity;
pub mod numtheory;
pub mod partitions;
pub mod qseries;
pub mod report;

pub use arith::{parse_rational, render_rational, ExactRational, Natural};
pub use bell::{complete_bell, partial_bell, partial_bell_oracle, ArgumentSequence};
pub use error::{Error, Result};
pub use identity::{theorem_lhs, theorem_rhs, verify_congruences, verify_theorem};
pub use numtheory::{
    d_coefficient, e_coefficient, seven_adic_split, seven_step_ratio, sigma, SevenAdicSplit,
};
pub use partitions::{partition_count, partition_count_brute, PartitionTable};
pub use qseries::{
    euler_product, extract_log_coefficients, series_g, series_h, verify_eq2, verify_eq3, LogTarget,
    TruncatedSeries,
};
pub use report::{ReportEntry, VerificationReport};
