use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::radical::exact_sqrt_signed;
use super::{format_rational, signum, AlgebraicTime, Rational};

/// Element `a + b*sqrt(d)` of a real quadratic field (or of Q when `b = 0`).
///
/// When `b = 0` the radicand is normalized to 1 so rational values compare
/// equal regardless of where they came from.
#[derive(Clone, Debug)]
pub struct QuadValue {
    a: Rational,
    b: Rational,
    d: BigInt,
}

/// Two operands live in fields `Q(sqrt(d1))` and `Q(sqrt(d2))` that differ.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("values from Q(sqrt({left})) and Q(sqrt({right})) cannot be combined")]
pub struct FieldMismatch {
    pub left: BigInt,
    pub right: BigInt,
}

impl QuadValue {
    pub fn rational(a: Rational) -> Self {
        QuadValue {
            a,
            b: Rational::zero(),
            d: BigInt::one(),
        }
    }

    /// `a + b*sqrt(d)`; `d` must be a positive non-square whenever `b != 0`.
    pub fn new(a: Rational, b: Rational, d: BigInt) -> Self {
        if b.is_zero() {
            return Self::rational(a);
        }
        debug_assert!(d.is_positive());
        QuadValue { a, b, d }
    }

    pub fn zero() -> Self {
        Self::rational(Rational::zero())
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn irrational_part(&self) -> &Rational {
        &self.b
    }

    pub fn radicand(&self) -> &BigInt {
        &self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Exact sign as -1, 0 or +1.
    pub fn signum(&self) -> i8 {
        let sa = signum(&self.a);
        let sb = signum(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        // Opposite signs: compare a^2 with b^2 d.
        let a2 = &self.a * &self.a;
        let b2d = &self.b * &self.b * Rational::from_integer(self.d.clone());
        match a2.cmp(&b2d) {
            std::cmp::Ordering::Greater => sa,
            std::cmp::Ordering::Less => sb,
            std::cmp::Ordering::Equal => 0,
        }
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        if self.b.is_zero() {
            return a;
        }
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        let d = self.d.to_f64().unwrap_or(f64::NAN);
        a + b * d.sqrt()
    }

    /// Converts back into a canonical time value.
    pub fn to_time(&self) -> AlgebraicTime {
        AlgebraicTime::from_rational_parts(&self.a, &self.b, &self.d)
            .expect("radicand of a QuadValue is positive")
    }

    /// Expresses `other`'s irrational coefficient over `self`'s radicand.
    fn align(&self, other: &Self) -> Result<(BigInt, Rational), FieldMismatch> {
        if other.b.is_zero() {
            return Ok((self.d.clone(), Rational::zero()));
        }
        if self.b.is_zero() || self.d == other.d {
            return Ok((other.d.clone(), other.b.clone()));
        }
        match exact_sqrt_signed(&(&self.d * &other.d)) {
            Some(s) => Ok((
                self.d.clone(),
                &other.b * Rational::new(s, self.d.clone()),
            )),
            None => Err(FieldMismatch {
                left: self.d.clone(),
                right: other.d.clone(),
            }),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, FieldMismatch> {
        let (d, ob) = self.align(other)?;
        Ok(QuadValue::new(&self.a + &other.a, &self.b + ob, d))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, FieldMismatch> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, FieldMismatch> {
        let (d, ob) = self.align(other)?;
        let dr = Rational::from_integer(d.clone());
        let a = &self.a * &other.a + &self.b * &ob * dr;
        let b = &self.a * &ob + &self.b * &other.a;
        Ok(QuadValue::new(a, b, d))
    }

    pub fn scale(&self, k: &Rational) -> Self {
        QuadValue::new(&self.a * k, &self.b * k, self.d.clone())
    }
}

impl PartialEq for QuadValue {
    fn eq(&self, other: &Self) -> bool {
        // A mismatch means both irrational parts are nonzero over independent radicals.
        self.checked_sub(other).map(|d| d.is_zero()).unwrap_or(false)
    }
}

impl Eq for QuadValue {}

impl From<Rational> for QuadValue {
    fn from(a: Rational) -> Self {
        QuadValue::rational(a)
    }
}

impl From<&AlgebraicTime> for QuadValue {
    fn from(t: &AlgebraicTime) -> Self {
        match t {
            AlgebraicTime::Rational(r) => QuadValue::rational(r.clone()),
            AlgebraicTime::Quadratic(s) => QuadValue::new(
                Rational::new(s.p().clone(), s.r().clone()),
                Rational::new(s.q().clone(), s.r().clone()),
                s.d().clone(),
            ),
        }
    }
}

impl Neg for &QuadValue {
    type Output = QuadValue;
    fn neg(self) -> QuadValue {
        QuadValue::new(-&self.a, -&self.b, self.d.clone())
    }
}

// The operator forms panic on a field mismatch; use the checked_* methods when
// operands may come from different fields.
impl Add for &QuadValue {
    type Output = QuadValue;
    fn add(self, rhs: &QuadValue) -> QuadValue {
        self.checked_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for &QuadValue {
    type Output = QuadValue;
    fn sub(self, rhs: &QuadValue) -> QuadValue {
        self.checked_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul for &QuadValue {
    type Output = QuadValue;
    fn mul(self, rhs: &QuadValue) -> QuadValue {
        self.checked_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl fmt::Display for QuadValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", format_rational(&self.a))
        } else {
            write!(
                f,
                "{} + ({})*sqrt({})",
                format_rational(&self.a),
                format_rational(&self.b),
                self.d
            )
        }
    }
}
