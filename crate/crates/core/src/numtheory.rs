//! Divisor sums, the 7-adic split `n = 7^m * n'`, and the coefficient
//! sequences `d_n`, `e_n` of the logarithms of the two products making up
//! the generating function of `p(7n + 5)`.

use num_bigint::BigInt;
use num_traits::{One, Pow};

use crate::arith::{rational_from_natural, ExactRational, Natural};
use crate::error::{domain, Result};

/// `n = 7^m * n_prime` with `7 ∤ n_prime`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SevenAdicSplit {
    pub m: u32,
    pub n_prime: u64,
}

impl SevenAdicSplit {
    pub fn value(&self) -> Natural {
        Natural::from(7u8).pow(self.m) * Natural::from(self.n_prime)
    }
}

/// Sum of all positive divisors of `n`, by trial division up to `√n`.
pub fn sigma(n: u64) -> Result<Natural> {
    if n == 0 {
        return Err(domain("sigma is undefined at 0"));
    }
    let n = n as u128;
    let mut total: u128 = 0;
    let mut d: u128 = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            total += d;
            let other = n / d;
            if other != d {
                total += other;
            }
        }
        d += 1;
    }
    Ok(Natural::from(total))
}

pub fn seven_adic_split(n: u64) -> Result<SevenAdicSplit> {
    if n == 0 {
        return Err(domain("0 has no 7-adic split"));
    }
    let mut m = 0;
    let mut rest = n;
    while rest.is_multiple_of(7) {
        rest /= 7;
        m += 1;
    }
    Ok(SevenAdicSplit { m, n_prime: rest })
}

fn seven_pow(e: u32) -> BigInt {
    BigInt::from(7u8).pow(e)
}

/// `(7^(m+1) - 1) / (7^m - 1)` for `n = 7^m * n'` with `m >= 1`.
///
/// This is the factor with `σ(n) = ratio * σ(n / 7)`.
pub fn seven_step_ratio(n: u64) -> Result<ExactRational> {
    if n == 0 || !n.is_multiple_of(7) {
        return Err(domain(format!("{n} is not a positive multiple of 7")));
    }
    let m = seven_adic_split(n)?.m;
    Ok(ExactRational::new(seven_pow(m + 1) - 1, seven_pow(m) - 1))
}

fn sigma_over_n(n: u64) -> Result<ExactRational> {
    Ok(rational_from_natural(&sigma(n)?) / ExactRational::from_integer(BigInt::from(n)))
}

/// `(σ(n)/n) * (1 + c / (7^(m+1) - 1))` with `m` the 7-adic exponent of `n`.
fn closed_form(n: u64, c: i64) -> Result<ExactRational> {
    let m = seven_adic_split(n)?.m;
    let correction =
        ExactRational::one() + ExactRational::new(BigInt::from(c), seven_pow(m + 1) - 1);
    Ok(sigma_over_n(n)? * correction)
}

/// `d_n`, the coefficient of `x^n` in `ln(G(x)/7)` where
/// `G(x) = 7 (x^7;x^7)^3 / (x;x)^4`.
pub fn d_coefficient(n: u64) -> Result<ExactRational> {
    closed_form(n, 18)
}

/// `e_n`, the coefficient of `x^n` in `ln(H(x)/(49x))` where
/// `H(x) = 49x (x^7;x^7)^7 / (x;x)^8`.
pub fn e_coefficient(n: u64) -> Result<ExactRational> {
    closed_form(n, 42)
}
