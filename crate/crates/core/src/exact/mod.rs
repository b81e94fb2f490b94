//! Exact arithmetic: rationals, real quadratic irrationals and low-degree
//! polynomial root isolation.

mod algebraic;
mod poly;
mod quad;
pub mod radical;

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

pub use algebraic::{compare_times, AlgebraicTime, Interval};
pub use poly::{evaluate_at_time, solve_quadratic, vanishes_at, vanishes_at_integer, RootReport};
pub use quad::{FieldMismatch, QuadValue};

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid integer `{0}` in rational literal")]
    BadInteger(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `num / den`; panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Canonical `num/den` form, e.g. `-3/4` or `7/1`.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `num/den` or a bare integer into a reduced rational.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let int = |t: &str| {
        BigInt::from_str(t.trim()).map_err(|_| ParseRationalError::BadInteger(t.to_string()))
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let n = int(n)?;
            let d = int(d)?;
            if d.is_zero() {
                return Err(ParseRationalError::ZeroDenominator(s.to_string()));
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(int(s)?)),
    }
}

/// Sign of a rational as -1, 0 or +1.
pub fn signum(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// `n` choose `k` for small arguments.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}
