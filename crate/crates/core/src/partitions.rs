//! The partition function `p(n)`.

use num_traits::One;

use crate::arith::Natural;
use crate::error::{Error, Result};

/// Largest `n` accepted by [`partition_count_brute`].
pub const BRUTE_FORCE_LIMIT: u64 = 60;

/// Memoized `p(n)` via Euler's pentagonal-number recurrence
///
/// `p(n) = Σ_{k≥1} (-1)^(k+1) [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)]`.
///
/// The table is dense from 0 up to the largest `n` requested so far and is
/// only ever appended to. Give each thread its own table, or share one
/// behind a lock.
#[derive(Debug, Clone)]
pub struct PartitionTable {
    memo: Vec<Natural>,
}

impl Default for PartitionTable {
    fn default() -> Self {
        Self::new()
    }
}

impl PartitionTable {
    pub fn new() -> Self {
        Self {
            memo: vec![Natural::one()],
        }
    }

    /// Number of entries already computed (`p(0)..p(len-1)`).
    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }

    /// Extends the table through `p(n)`.
    pub fn fill_to(&mut self, n: usize) {
        self.memo.reserve((n + 1).saturating_sub(self.memo.len()));
        while self.memo.len() <= n {
            let i = self.memo.len();
            let mut plus = Natural::default();
            let mut minus = Natural::default();
            for k in 1usize.. {
                let g1 = k * (3 * k - 1) / 2;
                if g1 > i {
                    break;
                }
                let acc = if k % 2 == 1 { &mut plus } else { &mut minus };
                *acc += &self.memo[i - g1];
                let g2 = g1 + k;
                if g2 <= i {
                    *acc += &self.memo[i - g2];
                }
            }
            self.memo.push(plus - minus);
        }
    }

    pub fn get(&mut self, n: usize) -> &Natural {
        self.fill_to(n);
        &self.memo[n]
    }

    /// `p(0..=n)`.
    pub fn prefix(&mut self, n: usize) -> &[Natural] {
        self.fill_to(n);
        &self.memo[..=n]
    }
}

/// `p(n)` from a fresh table. Prefer [`PartitionTable`] for repeated calls.
pub fn partition_count(n: usize) -> Natural {
    PartitionTable::new().get(n).clone()
}

/// `p(n)` by recursive enumeration of partitions with bounded largest part.
///
/// Exponential time; this exists only as an independent check on the
/// recurrence and refuses `n > 60`.
pub fn partition_count_brute(n: u64) -> Result<Natural> {
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::Guard {
            what: "brute-force partition enumeration",
            limit: BRUTE_FORCE_LIMIT,
            got: n,
        });
    }
    // Partitions of `rest` whose parts are all at most `largest`.
    fn count(rest: u64, largest: u64) -> u64 {
        if rest == 0 {
            return 1;
        }
        (1..=largest.min(rest))
            .map(|part| count(rest - part, part))
            .sum()
    }
    Ok(Natural::from(count(n, n)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(v: u64) -> Natural {
        Natural::from(v)
    }

    #[test]
    fn recurrence_examples() {
        assert_eq!(partition_count(0), nat(1));
        assert_eq!(partition_count(4), nat(5));
        assert_eq!(partition_count(12), nat(77));
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(partition_count_brute(1).unwrap(), nat(1));
        assert_eq!(partition_count_brute(5).unwrap(), nat(7));
        assert_eq!(partition_count_brute(19).unwrap(), nat(490));
        assert!(matches!(
            partition_count_brute(61),
            Err(Error::Guard {
                limit: 60,
                got: 61,
                ..
            })
        ));
    }

    #[test]
    fn recurrence_matches_enumeration() {
        let mut table = PartitionTable::new();
        for n in 0..=BRUTE_FORCE_LIMIT {
            assert_eq!(
                *table.get(n as usize),
                partition_count_brute(n).unwrap(),
                "p({n})"
            );
        }
    }

    #[test]
    fn strictly_increasing_after_one() {
        let mut table = PartitionTable::new();
        let p = table.prefix(500).to_vec();
        for n in 1..500 {
            assert!(p[n + 1] > p[n], "p({}) <= p({n})", n + 1);
        }
    }

    #[test]
    fn known_large_value() {
        // p(100) = 190569292, p(1000) has 32 digits.
        assert_eq!(partition_count(100), nat(190_569_292));
        assert_eq!(
            partition_count(1000).to_string(),
            "24061467864032622473692149727991"
        );
    }

    #[test]
    fn table_only_grows() {
        let mut table = PartitionTable::new();
        table.fill_to(30);
        assert_eq!(table.len(), 31);
        table.fill_to(10);
        assert_eq!(table.len(), 31);
    }
}
