//! Both sides of the Bell-polynomial identity for `p(7n + 5)`:
//!
//! `7 B_n(1! d_1, …, n! d_n) + 49 n B_{n-1}(1! e_1, …, (n-1)! e_{n-1}) = n! p(7n + 5)`
//!
//! for `n >= 1`, plus an empirical sweep of the three Ramanujan congruences.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::{factorial, rational_from_int, rational_from_natural, ExactRational, Natural};
use crate::bell::{complete_bell, complete_bell_sequence, ArgumentSequence};
use crate::error::{domain, Result};
use crate::numtheory::{d_coefficient, e_coefficient};
use crate::partitions::PartitionTable;
use crate::report::{ReportEntry, VerificationReport};

/// `(1!·d_1, …, n!·d_n)`.
pub fn d_arguments(n: usize) -> ArgumentSequence {
    let d: Vec<_> = (1..=n as u64)
        .map(|i| d_coefficient(i).expect("i >= 1"))
        .collect();
    ArgumentSequence::factorial_scaled(&d)
}

/// `(1!·e_1, …, n!·e_n)`.
pub fn e_arguments(n: usize) -> ArgumentSequence {
    let e: Vec<_> = (1..=n as u64)
        .map(|i| e_coefficient(i).expect("i >= 1"))
        .collect();
    ArgumentSequence::factorial_scaled(&e)
}

fn require_positive(n: usize) -> Result<()> {
    if n == 0 {
        return Err(domain("the identity is stated for n >= 1"));
    }
    Ok(())
}

fn combine(n: usize, b_d: &ExactRational, b_e: &ExactRational) -> ExactRational {
    rational_from_int(7) * b_d + rational_from_int(49 * n as i64) * b_e
}

/// `7 B_n(1! d_1, …) + 49 n B_{n-1}(1! e_1, …)`.
pub fn theorem_lhs(n: usize) -> Result<ExactRational> {
    require_positive(n)?;
    let b_d = complete_bell(n, &d_arguments(n))?;
    let b_e = complete_bell(n - 1, &e_arguments(n - 1))?;
    Ok(combine(n, &b_d, &b_e))
}

/// `n! p(7n + 5)`.
pub fn theorem_rhs(n: usize) -> Result<Natural> {
    require_positive(n)?;
    Ok(factorial(n) * PartitionTable::new().get(7 * n + 5))
}

/// Left-hand sides for `n = 1..=max_n`, sharing one pass of the Bell
/// recurrence over each argument sequence.
pub fn theorem_lhs_sequence(max_n: usize) -> Vec<ExactRational> {
    if max_n == 0 {
        return Vec::new();
    }
    let b_d = complete_bell_sequence(max_n, &d_arguments(max_n)).expect("length matches");
    let b_e = complete_bell_sequence(max_n - 1, &e_arguments(max_n - 1)).expect("length matches");
    (1..=max_n)
        .map(|n| combine(n, &b_d[n], &b_e[n - 1]))
        .collect()
}

/// Checks the identity for every `1 <= n <= max_n`. An entry passes when
/// the left side is an integer equal to `n! p(7n + 5)`.
pub fn verify_theorem(max_n: usize) -> Result<VerificationReport> {
    require_positive(max_n)?;
    let mut table = PartitionTable::new();
    table.fill_to(7 * max_n + 5);
    let entries = theorem_lhs_sequence(max_n)
        .into_iter()
        .enumerate()
        .map(|(i, lhs)| {
            let n = i + 1;
            let rhs = rational_from_natural(&(factorial(n) * table.get(7 * n + 5)));
            // Equality with an integer already forces denominator 1.
            ReportEntry::compare(n as u64, rhs, lhs)
        })
        .collect();
    Ok(VerificationReport::new(
        format!("7 B_n(k! d_k) + 49 n B_(n-1)(k! e_k) = n! p(7n+5), 1 <= n <= {max_n}"),
        entries,
    ))
}

/// The moduli and offsets `(m, r)` with `p(m k + r) ≡ 0 (mod m)`.
pub const RAMANUJAN_CONGRUENCES: [(usize, usize); 3] = [(5, 4), (7, 5), (11, 6)];

/// Checks `p(5k+4) ≡ 0 (mod 5)`, `p(7k+5) ≡ 0 (mod 7)` and
/// `p(11k+6) ≡ 0 (mod 11)` for `0 <= k <= max_k`.
///
/// Entries are grouped by modulus (5, then 7, then 11). Each entry's index is
/// the partition argument `m k + r`; the computed value is the residue of
/// `p(m k + r)` and the expected value is 0.
pub fn verify_congruences(max_k: usize) -> VerificationReport {
    let mut table = PartitionTable::new();
    table.fill_to(11 * max_k + 6);
    let mut entries = Vec::with_capacity(3 * (max_k + 1));
    for (modulus, offset) in RAMANUJAN_CONGRUENCES {
        let m = Natural::from(modulus);
        for k in 0..=max_k {
            let arg = modulus * k + offset;
            let residue = table.get(arg) % &m;
            entries.push(ReportEntry::compare(
                arg as u64,
                ExactRational::zero(),
                ExactRational::from_integer(BigInt::from(residue)),
            ));
        }
    }
    VerificationReport::new(
        format!("p(5k+4) = 0 mod 5, p(7k+5) = 0 mod 7, p(11k+6) = 0 mod 11, k <= {max_k}"),
        entries,
    )
}
