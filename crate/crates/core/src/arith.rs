//! Exact number types and the shared factorial / binomial tables.
//!
//! [`Natural`] and [`ExactRational`] are thin aliases over `num-bigint` and
//! `num-rational`. `BigRational` normalizes on every construction, so two
//! values compare equal exactly when their reduced forms agree.

use std::str::FromStr;
use std::sync::{LazyLock, RwLock};

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, Zero};

use crate::error::{domain, Result};

/// Arbitrary-precision non-negative integer.
pub type Natural = BigUint;

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type ExactRational = num_rational::BigRational;

pub fn rational_from_natural(n: &Natural) -> ExactRational {
    ExactRational::from_integer(BigInt::from_biguint(Sign::Plus, n.clone()))
}

pub fn rational_from_int(n: i64) -> ExactRational {
    ExactRational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> ExactRational {
    ExactRational::new(BigInt::from(num), BigInt::from(den))
}

/// Converts a rational to a natural number if it is a non-negative integer.
pub fn rational_to_natural(q: &ExactRational) -> Option<Natural> {
    if q.is_integer() && !q.is_negative() {
        q.numer().to_biguint()
    } else {
        None
    }
}

/// Renders `q` as `num/den`, or as a plain integer when the denominator is 1.
pub fn render_rational(q: &ExactRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `"a"` or `"a/b"` with an optional leading minus sign.
///
/// Decimal points, exponents, whitespace and a zero denominator are rejected.
pub fn parse_rational(text: &str) -> Result<ExactRational> {
    fn integer(part: &str, whole: &str) -> Result<BigInt> {
        let digits = part.strip_prefix('-').unwrap_or(part);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(domain(format!("malformed rational {whole:?}")));
        }
        BigInt::from_str(part).map_err(|_| domain(format!("malformed rational {whole:?}")))
    }

    match text.split_once('/') {
        None => Ok(ExactRational::from_integer(integer(text, text)?)),
        Some((num, den)) => {
            if den.starts_with('-') {
                return Err(domain(format!("malformed rational {text:?}")));
            }
            let num = integer(num, text)?;
            let den = integer(den, text)?;
            if den.is_zero() {
                return Err(domain(format!("zero denominator in {text:?}")));
            }
            Ok(ExactRational::new(num, den))
        }
    }
}

static FACTORIALS: LazyLock<RwLock<Vec<Natural>>> =
    LazyLock::new(|| RwLock::new(vec![Natural::one()]));

/// `n!`, served from a process-wide table that grows on demand.
pub fn factorial(n: usize) -> Natural {
    if let Some(v) = FACTORIALS.read().unwrap().get(n) {
        return v.clone();
    }
    let mut table = FACTORIALS.write().unwrap();
    while table.len() <= n {
        let next = table.last().unwrap() * Natural::from(table.len());
        table.push(next);
    }
    table[n].clone()
}

static PASCAL: LazyLock<RwLock<Vec<Vec<Natural>>>> =
    LazyLock::new(|| RwLock::new(vec![vec![Natural::one()]]));

/// Binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> Natural {
    if k > n {
        return Natural::zero();
    }
    if let Some(row) = PASCAL.read().unwrap().get(n) {
        return row[k].clone();
    }
    let mut rows = PASCAL.write().unwrap();
    while rows.len() <= n {
        let prev = rows.last().unwrap();
        let mut row = Vec::with_capacity(prev.len() + 1);
        row.push(Natural::one());
        for w in prev.windows(2) {
            row.push(&w[0] + &w[1]);
        }
        row.push(Natural::one());
        rows.push(row);
    }
    rows[n][k].clone()
}

/// A full row `C(n, 0..=n)` of Pascal's triangle as rationals.
pub(crate) fn binomial_row(n: usize) -> Vec<ExactRational> {
    binomial(n, 0);
    let rows = PASCAL.read().unwrap();
    rows[n].iter().map(rational_from_natural).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_integers_without_denominator() {
        assert_eq!(render_rational(&rational_from_int(-12)), "-12");
        assert_eq!(render_rational(&ratio(6, -4)), "-3/2");
        assert_eq!(render_rational(&ratio(0, 5)), "0");
    }

    #[test]
    fn parses_rationals() {
        assert_eq!(parse_rational("7").unwrap(), rational_from_int(7));
        assert_eq!(parse_rational("-3/6").unwrap(), ratio(-1, 2));
        assert_eq!(parse_rational("0/9").unwrap(), rational_from_int(0));
        for bad in [
            "", "-", "1.5", "1/0", "1/-2", "a", "1/", "/2", " 1", "+1", "1e3",
        ] {
            assert!(parse_rational(bad).is_err(), "{bad:?} should be rejected");
        }
    }

    #[test]
    fn factorials_and_binomials() {
        assert_eq!(factorial(0), Natural::one());
        assert_eq!(factorial(7), Natural::from(5040u32));
        assert_eq!(factorial(20), Natural::from(2_432_902_008_176_640_000u64));
        assert_eq!(binomial(6, 3), Natural::from(20u32));
        assert_eq!(binomial(3, 5), Natural::zero());
        assert_eq!(binomial(52, 5), Natural::from(2_598_960u32));
        let row = binomial_row(4);
        assert_eq!(row.len(), 5);
        assert_eq!(row[2], rational_from_int(6));
    }

    #[test]
    fn natural_conversion_rejects_fractions() {
        assert_eq!(
            rational_to_natural(&rational_from_int(5)),
            Some(Natural::from(5u8))
        );
        assert_eq!(rational_to_natural(&ratio(5, 2)), None);
        assert_eq!(rational_to_natural(&rational_from_int(-1)), None);
    }
}
