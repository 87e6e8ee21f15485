//! Exact rational arithmetic helpers.
//!
//! All values are [`BigRational`], which is always reduced with a positive
//! denominator. This module adds the textual form used across the crate and
//! a few combinatorial helpers (factorials, binomials) that return exact
//! values.

use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::ParseError;

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn from_bigint(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// `"num/den"` in lowest terms, or just `"num"` when integral.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational, ParseError> {
    let s = s.trim();
    let bad = || ParseError::Rational(s.to_string());
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(
            BigInt::from_str(s).map_err(|_| bad())?,
        )),
    }
}

pub fn factorial(n: u32) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

pub fn factorial_rat(n: u32) -> Rational {
    Rational::from_integer(BigInt::from(factorial(n)))
}

/// Binomial coefficient with a nonnegative top; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Generalized binomial `C(n, k)` for any integer top and `k >= 0`,
/// i.e. `n (n-1) ... (n-k+1) / k!`.
pub fn binomial_signed(n: i64, k: u64) -> BigInt {
    if n >= 0 {
        return BigInt::from(binomial(n as u64, k));
    }
    // C(-m, k) = (-1)^k C(m + k - 1, k)
    let m = (-n) as u64;
    let b = BigInt::from(binomial(m + k - 1, k));
    if k.is_multiple_of(2) {
        b
    } else {
        -b
    }
}

/// Generalized binomial with a rational top, `C(q, k) = q (q-1) ... (q-k+1) / k!`.
pub fn binomial_rational(q: &Rational, k: u32) -> Rational {
    let mut acc = Rational::one();
    for i in 0..k {
        acc *= q - rat(i as i64);
        acc /= rat(i as i64 + 1);
    }
    acc
}

pub fn pow_rat(q: &Rational, e: u32) -> Rational {
    num_traits::pow(q.clone(), e as usize)
}

pub fn two_pow(e: u32) -> Rational {
    Rational::from_integer(BigInt::one() << e as usize)
}

/// Parity of an integral rational; `None` if the value is not an integer.
pub fn integer_parity(q: &Rational) -> Option<bool> {
    if !q.denom().is_one() {
        return None;
    }
    Some(q.numer().is_odd())
}

/// Reduction mod 2 of a rational with odd denominator.
pub fn mod2(q: &Rational) -> Option<bool> {
    if q.denom().is_even() {
        return None;
    }
    Some(q.numer().is_odd())
}

pub fn to_i64(q: &Rational) -> Option<i64> {
    if q.denom().is_one() {
        q.numer().to_i64()
    } else {
        None
    }
}

pub fn abs(q: &Rational) -> Rational {
    q.abs()
}

pub fn lcm_denominators<'a>(it: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    it.into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}
