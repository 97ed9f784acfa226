//! Truncated formal power series with exact rational coefficients, the
//! Euler product `(x;x)_∞`, and the two product formulas for the
//! generating functions of `p(5k + 4)` and `p(7k + 5)`.
//!
//! A series of order `K` carries coefficients `c_0..=c_K` and stands for its
//! class modulo `x^(K+1)`. Binary operations return the smaller operand
//! order; nothing ever widens.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{rational_from_int, rational_from_natural, ExactRational};
use crate::error::{domain, Error, Result};
use crate::partitions::PartitionTable;
use crate::report::{ReportEntry, VerificationReport};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<ExactRational>,
}

impl TruncatedSeries {
    /// Series of order `order`; `coeffs` is zero-padded or cut to
    /// `order + 1` entries.
    pub fn new(order: usize, mut coeffs: Vec<ExactRational>) -> Self {
        coeffs.resize(order + 1, ExactRational::zero());
        Self { coeffs }
    }

    pub fn from_integers(order: usize, coeffs: &[i64]) -> Self {
        Self::new(
            order,
            coeffs.iter().map(|&c| rational_from_int(c)).collect(),
        )
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, Vec::new())
    }

    pub fn constant(order: usize, c: ExactRational) -> Self {
        Self::new(order, vec![c])
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, ExactRational::one())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficients(&self) -> &[ExactRational] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, or `None` beyond the truncation order.
    pub fn coeff(&self, i: usize) -> Option<&ExactRational> {
        self.coeffs.get(i)
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot widen a truncated series");
        Self::new(order, self.coeffs[..=order].to_vec())
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    fn zip_with(
        &self,
        other: &Self,
        f: impl Fn(&ExactRational, &ExactRational) -> ExactRational,
    ) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    /// Cauchy product, truncated to the smaller order.
    pub fn multiply(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = vec![ExactRational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(order + 1 - i).enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Self { coeffs: out }
    }

    /// Multiplicative inverse; requires a non-zero constant term.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::Singular);
        }
        let inv_c0 = c0.recip();
        let mut t: Vec<ExactRational> = Vec::with_capacity(self.coeffs.len());
        t.push(inv_c0.clone());
        for n in 1..=self.order() {
            let mut acc = ExactRational::zero();
            for i in 1..=n {
                if !self.coeffs[i].is_zero() {
                    acc += &self.coeffs[i] * &t[n - i];
                }
            }
            t.push(-acc * &inv_c0);
        }
        Ok(Self { coeffs: t })
    }

    /// `self^e`; negative exponents go through [`inverse`](Self::inverse).
    pub fn power(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut exp = e.unsigned_abs();
        let mut acc = Self::one(self.order());
        let mut sq = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.multiply(&sq);
            }
            exp >>= 1;
            if exp > 0 {
                sq = sq.multiply(&sq);
            }
        }
        Ok(acc)
    }

    /// `self(x^r)` at the same order.
    pub fn substitute_power(&self, r: usize) -> Result<Self> {
        if r == 0 {
            return Err(domain("substitution exponent must be at least 1"));
        }
        let order = self.order();
        let mut out = vec![ExactRational::zero(); order + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            let Some(pos) = i.checked_mul(r).filter(|&p| p <= order) else {
                break;
            };
            out[pos] = c.clone();
        }
        Ok(Self { coeffs: out })
    }

    /// `self / x` for a series with zero constant term. The result is one
    /// order shorter.
    pub fn divide_by_x(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(domain("series is not divisible by x"));
        }
        if self.order() == 0 {
            return Err(domain(
                "order-0 series has no information left after dividing by x",
            ));
        }
        Ok(Self {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    /// `ln(self)` for constant term exactly 1, from `L' · s = s'`:
    /// `n L_n = n c_n - Σ_{i=1}^{n-1} i L_i c_{n-i}`.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(domain("logarithm needs constant term 1"));
        }
        let c = &self.coeffs;
        let mut l = vec![ExactRational::zero(); c.len()];
        for n in 1..c.len() {
            let mut acc = rational_from_int(n as i64) * &c[n];
            for i in 1..n {
                if !l[i].is_zero() && !c[n - i].is_zero() {
                    acc -= rational_from_int(i as i64) * &l[i] * &c[n - i];
                }
            }
            l[n] = acc / rational_from_int(n as i64);
        }
        Ok(Self { coeffs: l })
    }

    /// `exp(self)` for constant term 0: `n E_n = Σ_{i=1}^{n} i c_i E_{n-i}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(domain("exponential needs constant term 0"));
        }
        let c = &self.coeffs;
        let mut e = Vec::with_capacity(c.len());
        e.push(ExactRational::one());
        for n in 1..c.len() {
            let mut acc = ExactRational::zero();
            for i in 1..=n {
                if !c[i].is_zero() {
                    acc += rational_from_int(i as i64) * &c[i] * &e[n - i];
                }
            }
            e.push(acc / rational_from_int(n as i64));
        }
        Ok(Self { coeffs: e })
    }

    /// `index<TAB>value` per coefficient, one per line.
    pub fn to_lines(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            writeln!(f, "{i}\t{}", crate::arith::render_rational(c))?;
        }
        Ok(())
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: Self) -> TruncatedSeries {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: Self) -> TruncatedSeries {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: Self) -> TruncatedSeries {
        self.multiply(rhs)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// `(x;x)_∞` truncated at `order`, from the pentagonal number theorem
/// `Σ_k (-1)^k x^(k(3k∓1)/2)`.
pub fn euler_product(order: usize) -> TruncatedSeries {
    let mut coeffs = vec![ExactRational::zero(); order + 1];
    coeffs[0] = ExactRational::one();
    for k in 1usize.. {
        let g1 = k * (3 * k - 1) / 2;
        if g1 > order {
            break;
        }
        let sign = if k % 2 == 0 { 1 } else { -1 };
        coeffs[g1] = rational_from_int(sign);
        let g2 = g1 + k;
        if g2 <= order {
            coeffs[g2] = rational_from_int(sign);
        }
    }
    TruncatedSeries { coeffs }
}

/// `Π_{k=1}^{order} (1 - x^k)` multiplied out literally. Factors with
/// `k > order` do not affect the retained coefficients.
pub fn euler_product_direct(order: usize) -> TruncatedSeries {
    let mut c = vec![BigInt::zero(); order + 1];
    c[0] = BigInt::one();
    for k in 1..=order {
        for i in (k..=order).rev() {
            let lower = c[i - k].clone();
            c[i] -= lower;
        }
    }
    TruncatedSeries {
        coeffs: c.into_iter().map(ExactRational::from_integer).collect(),
    }
}

/// `Σ_{i≥1} Σ_{j≥1} x^(r·i·j) / j` truncated at `order`, which is
/// `-ln((x^r; x^r)_∞)` expanded term by term.
pub fn divisor_log_series(r: usize, order: usize) -> Result<TruncatedSeries> {
    if r == 0 {
        return Err(domain("substitution exponent must be at least 1"));
    }
    let mut coeffs = vec![ExactRational::zero(); order + 1];
    for i in 1.. {
        if r * i > order {
            break;
        }
        for j in 1.. {
            let pos = r * i * j;
            if pos > order {
                break;
            }
            coeffs[pos] += ExactRational::new(BigInt::one(), BigInt::from(j));
        }
    }
    Ok(TruncatedSeries { coeffs })
}

/// `scale · (x^r; x^r)_∞^num_exp / (x; x)_∞^den_exp` at `order`.
fn eta_quotient(order: usize, scale: i64, r: usize, num_exp: i64, den_exp: i64) -> TruncatedSeries {
    let euler = euler_product(order);
    let numerator = euler
        .substitute_power(r)
        .and_then(|s| s.power(num_exp))
        .expect("r >= 1 and the exponent is non-negative");
    let denominator = euler
        .power(-den_exp)
        .expect("Euler product has constant term 1");
    numerator
        .multiply(&denominator)
        .scale(&rational_from_int(scale))
}

/// `5 (x^5;x^5)_∞^5 / (x;x)_∞^6`, whose coefficients are `p(5k + 4)`.
pub fn series_eq2(order: usize) -> TruncatedSeries {
    eta_quotient(order, 5, 5, 5, 6)
}

/// `G(x) = 7 (x^7;x^7)_∞^3 / (x;x)_∞^4`.
pub fn series_g(order: usize) -> TruncatedSeries {
    eta_quotient(order, 7, 7, 3, 4)
}

/// `H(x) = 49 x (x^7;x^7)_∞^7 / (x;x)_∞^8`.
pub fn series_h(order: usize) -> TruncatedSeries {
    if order == 0 {
        return TruncatedSeries::zero(0);
    }
    let body = eta_quotient(order - 1, 49, 7, 7, 8);
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(ExactRational::zero());
    coeffs.extend(body.coeffs);
    TruncatedSeries { coeffs }
}

fn compare_with_partitions(
    label: String,
    series: &TruncatedSeries,
    step: usize,
    offset: usize,
) -> VerificationReport {
    let order = series.order();
    let mut table = PartitionTable::new();
    table.fill_to(step * order + offset);
    let entries = series
        .coefficients()
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let expected = rational_from_natural(table.get(step * k + offset));
            ReportEntry::compare(k as u64, expected, c.clone())
        })
        .collect();
    VerificationReport::new(label, entries)
}

/// Checks that coefficient `k` of `5 (x^5;x^5)^5/(x;x)^6` is `p(5k + 4)`
/// for `0 <= k <= order`.
pub fn verify_eq2(order: usize) -> VerificationReport {
    compare_with_partitions(
        format!("sum p(5k+4) x^k = 5 (x^5;x^5)^5/(x;x)^6, k <= {order}"),
        &series_eq2(order),
        5,
        4,
    )
}

/// Checks that coefficient `n` of `G(x) + H(x)` is `p(7n + 5)` for
/// `0 <= n <= order`.
pub fn verify_eq3(order: usize) -> VerificationReport {
    compare_with_partitions(
        format!("sum p(7n+5) x^n = G(x) + H(x), n <= {order}"),
        &(&series_g(order) + &series_h(order)),
        7,
        5,
    )
}

/// Which product's logarithm to expand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LogTarget {
    /// `ln(G(x) / 7)`, coefficients `d_i`.
    G,
    /// `ln(H(x) / (49x))`, coefficients `e_i`.
    H,
}

/// Coefficients `1..=order` of `ln(G/7)` or `ln(H/(49x))`.
///
/// Dividing by `7` (resp. `49x`) before the logarithm is the same as
/// removing the constant `ln 7` (resp. `ln 49 + ln x`), which has no exact
/// rational representation.
pub fn extract_log_coefficients(which: LogTarget, order: usize) -> Result<Vec<ExactRational>> {
    if order == 0 {
        return Err(domain("log-coefficient extraction needs order >= 1"));
    }
    let normalized = match which {
        LogTarget::G => series_g(order).scale(&ExactRational::new(BigInt::one(), BigInt::from(7))),
        LogTarget::H => series_h(order + 1)
            .divide_by_x()?
            .scale(&ExactRational::new(BigInt::one(), BigInt::from(49))),
    };
    let log = normalized.log()?;
    Ok(log.coeffs[1..].to_vec())
}
