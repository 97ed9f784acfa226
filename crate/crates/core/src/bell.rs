//! Partial and complete exponential Bell polynomials over exact rationals.
//!
//! `B_{n,k}` is evaluated with the recurrence
//! `B_{n,k} = Σ_{i=1}^{n-k+1} C(n-1, i-1) x_i B_{n-i,k-1}`, and `B_n` with
//! `B_{n+1} = Σ_{k=0}^{n} C(n, k) x_{k+1} B_{n-k}`. The definitional sum over
//! index tuples is kept in [`partial_bell_oracle`] for cross-checking.

use num_traits::{One, Pow, Zero};

use crate::arith::{binomial_row, factorial, rational_from_natural, ExactRational};
use crate::error::{domain, Error, Result};

/// Largest `n` accepted by [`partial_bell_oracle`].
pub const ORACLE_LIMIT: u64 = 20;

/// The argument list `x_1, x_2, …` of a Bell polynomial. Indexing is 1-based.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ArgumentSequence(Vec<ExactRational>);

impl ArgumentSequence {
    pub fn new(entries: Vec<ExactRational>) -> Self {
        Self(entries)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `x_i` for `1 <= i <= len`.
    pub fn get(&self, i: usize) -> Option<&ExactRational> {
        i.checked_sub(1).and_then(|j| self.0.get(j))
    }

    pub fn entries(&self) -> &[ExactRational] {
        &self.0
    }

    /// `(1!·a_1, 2!·a_2, …, n!·a_n)`, the argument shape that turns
    /// `exp(Σ a_n x^n)` into `Σ B_n(…) x^n / n!`.
    pub fn factorial_scaled(coefficients: &[ExactRational]) -> Self {
        coefficients
            .iter()
            .enumerate()
            .map(|(i, a)| a * rational_from_natural(&factorial(i + 1)))
            .collect()
    }

    fn require(&self, needed: usize) -> Result<()> {
        if self.len() < needed {
            return Err(Error::Length {
                needed,
                got: self.len(),
            });
        }
        Ok(())
    }
}

impl FromIterator<ExactRational> for ArgumentSequence {
    fn from_iter<I: IntoIterator<Item = ExactRational>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl From<Vec<ExactRational>> for ArgumentSequence {
    fn from(v: Vec<ExactRational>) -> Self {
        Self(v)
    }
}

fn check_nk(n: usize, k: usize) -> Result<()> {
    if k < 1 || k > n {
        return Err(domain(format!(
            "partial Bell needs 1 <= k <= n, got n={n}, k={k}"
        )));
    }
    Ok(())
}

/// `B_{n,k}(x_1, …, x_{n-k+1})`.
pub fn partial_bell(n: usize, k: usize, args: &ArgumentSequence) -> Result<ExactRational> {
    check_nk(n, k)?;
    args.require(n - k + 1)?;
    let x = args.entries();

    // prev[m] = B_{m, j-1}; row j is built from row j-1.
    // Only m in j..=n-k+j matters for the final B_{n,k}.
    let mut prev: Vec<ExactRational> = vec![ExactRational::zero(); n + 1];
    prev[0] = ExactRational::one();
    for j in 1..=k {
        let mut cur = vec![ExactRational::zero(); n + 1];
        let lo = j;
        let hi = n - k + j;
        for (m, slot) in cur.iter_mut().enumerate().take(hi + 1).skip(lo) {
            let binom = binomial_row(m - 1);
            let mut acc = ExactRational::zero();
            for i in 1..=(m - j + 1) {
                let below = &prev[m - i];
                if below.is_zero() || x[i - 1].is_zero() {
                    continue;
                }
                acc += &binom[i - 1] * &x[i - 1] * below;
            }
            *slot = acc;
        }
        prev = cur;
    }
    Ok(prev[n].clone())
}

/// `B_{n,k}` from its defining sum over tuples `(j_1, …, j_{n-k+1})` of
/// non-negative integers with `Σ j_i = k` and `Σ i·j_i = n`:
///
/// `Σ n! / (j_1! ⋯ j_{n-k+1}!) · Π (x_i / i!)^{j_i}`.
///
/// Tuples are visited in lexicographic order. Refuses `n > 20`.
pub fn partial_bell_oracle(n: usize, k: usize, args: &ArgumentSequence) -> Result<ExactRational> {
    if n as u64 > ORACLE_LIMIT {
        return Err(Error::Guard {
            what: "definitional partial Bell sum",
            limit: ORACLE_LIMIT,
            got: n as u64,
        });
    }
    check_nk(n, k)?;
    let len = n - k + 1;
    args.require(len)?;

    let scaled: Vec<ExactRational> = (1..=len)
        .map(|i| &args.entries()[i - 1] / rational_from_natural(&factorial(i)))
        .collect();
    let n_fact = rational_from_natural(&factorial(n));

    let mut tuples = Vec::new();
    let mut current = vec![0usize; len];
    enumerate_tuples(0, k, n, &mut current, &mut tuples);

    let mut total = ExactRational::zero();
    for j in &tuples {
        let mut term = n_fact.clone();
        for (i, &ji) in j.iter().enumerate() {
            if ji > 0 {
                term *= Pow::pow(&scaled[i], ji as u32);
                term /= rational_from_natural(&factorial(ji));
            }
        }
        total += term;
    }
    Ok(total)
}

// Fills `current[pos..]` in lexicographic order so that the remaining
// count and weight are used up exactly.
fn enumerate_tuples(
    pos: usize,
    count_left: usize,
    weight_left: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if pos == current.len() {
        if count_left == 0 && weight_left == 0 {
            out.push(current.clone());
        }
        return;
    }
    let part = pos + 1;
    let max = count_left.min(weight_left / part);
    for j in 0..=max {
        current[pos] = j;
        enumerate_tuples(
            pos + 1,
            count_left - j,
            weight_left - j * part,
            current,
            out,
        );
    }
    current[pos] = 0;
}

/// `B_n(x_1, …, x_n)`, with `B_0 = 1`.
pub fn complete_bell(n: usize, args: &ArgumentSequence) -> Result<ExactRational> {
    let mut seq = complete_bell_sequence(n, args)?;
    Ok(seq.pop().expect("sequence has n + 1 entries"))
}

/// `B_0, B_1, …, B_n` over the same arguments in one pass.
pub fn complete_bell_sequence(n: usize, args: &ArgumentSequence) -> Result<Vec<ExactRational>> {
    args.require(n)?;
    let x = args.entries();
    let mut b = Vec::with_capacity(n + 1);
    b.push(ExactRational::one());
    for m in 0..n {
        let binom = binomial_row(m);
        let mut next = ExactRational::zero();
        for k in 0..=m {
            if x[k].is_zero() {
                continue;
            }
            next += &binom[k] * &x[k] * &b[m - k];
        }
        b.push(next);
    }
    Ok(b)
}

/// `B_n` as `Σ_{k=1}^{n} B_{n,k}`; `B_0 = 1`.
pub fn complete_bell_from_partials(n: usize, args: &ArgumentSequence) -> Result<ExactRational> {
    args.require(n)?;
    if n == 0 {
        return Ok(ExactRational::one());
    }
    (1..=n).try_fold(ExactRational::zero(), |acc, k| {
        Ok(acc + partial_bell(n, k, args)?)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{ratio, rational_from_int};
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ints(v: &[i64]) -> ArgumentSequence {
        v.iter().map(|&x| rational_from_int(x)).collect()
    }

    fn ones(n: usize) -> ArgumentSequence {
        ints(&vec![1; n])
    }

    fn random_args(rng: &mut ChaCha8Rng, n: usize) -> ArgumentSequence {
        (0..n)
            .map(|_| ratio(rng.gen_range(-9..=9), rng.gen_range(1..=6)))
            .collect()
    }

    /// Number of set partitions of an n-set, by growing partitions one
    /// element at a time (restricted growth strings).
    fn count_set_partitions(n: usize) -> u64 {
        fn go(placed: usize, blocks: usize, n: usize) -> u64 {
            if placed == n {
                return 1;
            }
            (0..=blocks)
                .map(|b| go(placed + 1, blocks.max(b + 1), n))
                .sum()
        }
        if n == 0 {
            1
        } else {
            go(1, 1, n)
        }
    }

    #[test]
    fn partial_bell_examples() {
        let mut x = vec![0; 5];
        x[0] = 2;
        assert_eq!(
            partial_bell(4, 4, &ints(&x)).unwrap(),
            rational_from_int(16)
        );
        let x = ints(&[3, 1, 4, 1, 9]);
        assert_eq!(partial_bell(5, 1, &x).unwrap(), rational_from_int(9));
        assert_eq!(partial_bell(4, 2, &ones(3)).unwrap(), rational_from_int(7));
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(
            partial_bell_oracle(2, 1, &ints(&[0, 5])).unwrap(),
            rational_from_int(5)
        );
        assert_eq!(
            partial_bell_oracle(3, 2, &ones(2)).unwrap(),
            rational_from_int(3)
        );
        assert_eq!(
            partial_bell_oracle(4, 2, &ones(3)).unwrap(),
            rational_from_int(7)
        );
    }

    #[test]
    fn partial_bell_errors() {
        assert!(matches!(
            partial_bell(3, 0, &ones(5)),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            partial_bell(3, 4, &ones(5)),
            Err(Error::Domain(_))
        ));
        assert_eq!(
            partial_bell(5, 2, &ones(3)),
            Err(Error::Length { needed: 4, got: 3 })
        );
        assert!(matches!(
            partial_bell_oracle(21, 3, &ones(21)),
            Err(Error::Guard {
                limit: 20,
                got: 21,
                ..
            })
        ));
    }

    #[test]
    fn complete_bell_examples() {
        assert_eq!(
            complete_bell(0, &ArgumentSequence::default()).unwrap(),
            rational_from_int(1)
        );
        assert_eq!(
            complete_bell(2, &ints(&[4, 12])).unwrap(),
            rational_from_int(28)
        );
        assert_eq!(complete_bell(4, &ones(4)).unwrap(), rational_from_int(15));
        assert_eq!(
            complete_bell(3, &ones(2)),
            Err(Error::Length { needed: 3, got: 2 })
        );
    }

    #[test]
    fn bell_numbers() {
        let expected = [1, 2, 5, 15, 52, 203, 877, 4140];
        for (i, &e) in expected.iter().enumerate() {
            let n = i + 1;
            assert_eq!(count_set_partitions(n), e);
            assert_eq!(
                complete_bell(n, &ones(n)).unwrap(),
                rational_from_int(e as i64)
            );
        }
    }

    #[test]
    fn recurrence_matches_definition() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        for n in 1..=12 {
            let args = random_args(&mut rng, n);
            for k in 1..=n {
                assert_eq!(
                    partial_bell(n, k, &args).unwrap(),
                    partial_bell_oracle(n, k, &args).unwrap(),
                    "B_{{{n},{k}}}"
                );
            }
        }
    }

    #[test]
    fn complete_matches_partial_sum() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let args = random_args(&mut rng, 30);
        let seq = complete_bell_sequence(30, &args).unwrap();
        for (n, b) in seq.iter().enumerate() {
            assert_eq!(*b, complete_bell_from_partials(n, &args).unwrap(), "B_{n}");
        }
    }

    proptest! {
        #[test]
        fn partial_bell_is_homogeneous(
            n in 1usize..=10,
            k_seed in 0usize..10,
            xs in proptest::collection::vec((-9i64..=9, 1i64..=5), 10),
            a in (-7i64..=7, 1i64..=4),
        ) {
            let k = 1 + k_seed % n;
            let args: ArgumentSequence = xs.iter().map(|&(p, q)| ratio(p, q)).collect();
            let a = ratio(a.0, a.1);
            let scaled: ArgumentSequence = args.entries().iter().map(|x| &a * x).collect();
            prop_assert_eq!(
                partial_bell(n, k, &scaled).unwrap(),
                Pow::pow(&a, k as u32) * partial_bell(n, k, &args).unwrap()
            );
        }
    }
}
