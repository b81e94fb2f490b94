use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::radical::{exact_sqrt_signed, isqrt, square_part};
use super::{format_rational, parse_rational, Rational};

/// Precision of the first enclosure used when ordering two times.
const INITIAL_BITS: u64 = 64;

/// An exact event time: a rational, or `(p + q*sqrt(d)) / r` with `d >= 2`
/// not a perfect square, `q != 0`, `r > 0` and `gcd(p, q, r) = 1`.
///
/// Equality and ordering are semantic (they compare the represented reals).
#[derive(Clone, Debug)]
pub enum AlgebraicTime {
    Rational(Rational),
    Quadratic(QuadraticIrrational),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticIrrational {
    p: BigInt,
    q: BigInt,
    d: BigInt,
    r: BigInt,
    certified: bool,
}

impl QuadraticIrrational {
    pub fn p(&self) -> &BigInt {
        &self.p
    }
    pub fn q(&self) -> &BigInt {
        &self.q
    }
    pub fn d(&self) -> &BigInt {
        &self.d
    }
    pub fn r(&self) -> &BigInt {
        &self.r
    }
    /// Whether `d` is known to be squarefree (trial division could certify it).
    pub fn radicand_certified(&self) -> bool {
        self.certified
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum TimeError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("negative radicand {0}")]
    NegativeRadicand(BigInt),
}

/// Closed rational interval `[lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

impl AlgebraicTime {
    pub fn rational(r: Rational) -> Self {
        AlgebraicTime::Rational(r)
    }

    /// Builds the canonical form of `(p + q*sqrt(d)) / r`.
    pub fn from_parts(p: BigInt, q: BigInt, d: BigInt, r: BigInt) -> Result<Self, TimeError> {
        if r.is_zero() {
            return Err(TimeError::ZeroDenominator);
        }
        if d.is_negative() {
            return Err(TimeError::NegativeRadicand(d));
        }
        if q.is_zero() || d.is_zero() {
            return Ok(AlgebraicTime::Rational(Rational::new(p, r)));
        }
        let split = square_part(d.magnitude());
        let mut q = q * BigInt::from(split.factor);
        let d = BigInt::from(split.radicand);
        if d.is_one() {
            return Ok(AlgebraicTime::Rational(Rational::new(p + q, r)));
        }
        let (mut p, mut r) = (p, r);
        if r.is_negative() {
            p = -p;
            q = -q;
            r = -r;
        }
        let g = p.gcd(&q).gcd(&r);
        if !g.is_one() {
            p /= &g;
            q /= &g;
            r /= &g;
        }
        Ok(AlgebraicTime::Quadratic(QuadraticIrrational {
            p,
            q,
            d,
            r,
            certified: split.certified,
        }))
    }

    /// `a + b*sqrt(d)` for rationals `a`, `b`.
    pub fn from_rational_parts(a: &Rational, b: &Rational, d: &BigInt) -> Result<Self, TimeError> {
        let r = a.denom().lcm(b.denom());
        let p = a.numer() * (&r / a.denom());
        let q = b.numer() * (&r / b.denom());
        Self::from_parts(p, q, d.clone(), r)
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, AlgebraicTime::Rational(_))
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            AlgebraicTime::Rational(r) => Some(r),
            AlgebraicTime::Quadratic(_) => None,
        }
    }

    /// Radicand of the field the value lives in (1 for rationals).
    pub fn radicand(&self) -> BigInt {
        match self {
            AlgebraicTime::Rational(_) => BigInt::one(),
            AlgebraicTime::Quadratic(s) => s.d.clone(),
        }
    }

    /// Re-runs canonicalization; the identity on canonical values.
    pub fn canonicalize(&self) -> Self {
        match self {
            AlgebraicTime::Rational(r) => AlgebraicTime::Rational(r.clone()),
            AlgebraicTime::Quadratic(s) => {
                Self::from_parts(s.p.clone(), s.q.clone(), s.d.clone(), s.r.clone())
                    .expect("canonical parts are valid")
            }
        }
    }

    /// Rational enclosure with `bits` fractional bits for the square root.
    pub fn enclose(&self, bits: u64) -> Interval {
        let (lo, hi, den) = self.bounds(bits);
        Interval {
            lo: Rational::new(lo, den.clone()),
            hi: Rational::new(hi, den),
        }
    }

    /// Unreduced enclosure `[lo/den, hi/den]` with `den > 0`.
    fn bounds(&self, bits: u64) -> (BigInt, BigInt, BigInt) {
        match self {
            AlgebraicTime::Rational(r) => (r.numer().clone(), r.numer().clone(), r.denom().clone()),
            AlgebraicTime::Quadratic(s) => {
                let scaled = s.d.magnitude() << (2 * bits);
                let floor = BigInt::from(isqrt(&scaled));
                let base = &s.p << bits;
                let low = &base + &s.q * &floor;
                let high = &base + &s.q * (floor + 1u32);
                let den = &s.r << bits;
                if s.q.is_positive() {
                    (low, high, den)
                } else {
                    (high, low, den)
                }
            }
        }
    }

    /// Non-authoritative floating-point approximation.
    pub fn approx(&self) -> f64 {
        match self {
            AlgebraicTime::Rational(r) => r.to_f64().unwrap_or(f64::NAN),
            AlgebraicTime::Quadratic(_) => {
                let iv = self.enclose(INITIAL_BITS);
                ((iv.lo + iv.hi) / Rational::from_integer(2.into()))
                    .to_f64()
                    .unwrap_or(f64::NAN)
            }
        }
    }

    /// Decides equality of the represented reals without approximation.
    pub fn symbolic_eq(&self, other: &Self) -> bool {
        match (self, other) {
            (AlgebraicTime::Rational(a), AlgebraicTime::Rational(b)) => a == b,
            // q != 0 and d is not a perfect square, so the value is irrational.
            (AlgebraicTime::Rational(_), AlgebraicTime::Quadratic(_))
            | (AlgebraicTime::Quadratic(_), AlgebraicTime::Rational(_)) => false,
            (AlgebraicTime::Quadratic(x), AlgebraicTime::Quadratic(y)) => {
                if x == y {
                    return true;
                }
                // Equal values need equal rational parts and same-signed
                // irrational parts; both are cheap to rule out.
                if x.q.sign() != y.q.sign() || &x.p * &y.r != &y.p * &x.r {
                    return false;
                }
                // 1, sqrt(d1), sqrt(d2) are linearly independent over Q unless
                // d1*d2 is a square, in which case sqrt(d2) = (s/d1) sqrt(d1).
                let Some(s) = exact_sqrt_signed(&(&x.d * &y.d)) else {
                    return false;
                };
                let lhs_irr = Rational::new(x.q.clone(), x.r.clone());
                let rhs_irr = Rational::new(&y.q * s, &y.r * &x.d);
                lhs_irr == rhs_irr
            }
        }
    }
}

/// Total order on exact times.
///
/// Enclosures start at 64 fractional bits and double until they separate;
/// overlapping enclosures of symbolically equal values end the search.
pub fn compare_times(x: &AlgebraicTime, y: &AlgebraicTime) -> Ordering {
    if let (AlgebraicTime::Rational(a), AlgebraicTime::Rational(b)) = (x, y) {
        return a.cmp(b);
    }
    let mut bits = INITIAL_BITS;
    let mut checked_equal = false;
    loop {
        let (xlo, xhi, xden) = x.bounds(bits);
        let (ylo, yhi, yden) = y.bounds(bits);
        if xhi * &yden < &ylo * &xden {
            return Ordering::Less;
        }
        if yhi * &xden < xlo * &yden {
            return Ordering::Greater;
        }
        if !checked_equal {
            if x.symbolic_eq(y) {
                return Ordering::Equal;
            }
            checked_equal = true;
        }
        bits *= 2;
    }
}

impl PartialEq for AlgebraicTime {
    fn eq(&self, other: &Self) -> bool {
        self.symbolic_eq(other)
    }
}

impl Eq for AlgebraicTime {}

impl PartialOrd for AlgebraicTime {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AlgebraicTime {
    fn cmp(&self, other: &Self) -> Ordering {
        compare_times(self, other)
    }
}

impl From<Rational> for AlgebraicTime {
    fn from(r: Rational) -> Self {
        AlgebraicTime::Rational(r)
    }
}

impl fmt::Display for AlgebraicTime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraicTime::Rational(r) => write!(f, "{}", format_rational(r)),
            AlgebraicTime::Quadratic(s) => {
                let sign = if s.q.sign() == Sign::Minus { '-' } else { '+' };
                write!(f, "({} {} {}*sqrt({}))/{}", s.p, sign, s.q.magnitude(), s.d, s.r)
            }
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum RadicandRepr {
    Number(u64),
    Text(String),
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum TimeRepr {
    Rational {
        value: String,
    },
    Quadratic {
        p: String,
        q: String,
        d: RadicandRepr,
        r: String,
        #[serde(default, skip_deserializing)]
        approx: f64,
    },
}

impl Serialize for AlgebraicTime {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let repr = match self {
            AlgebraicTime::Rational(r) => TimeRepr::Rational {
                value: format_rational(r),
            },
            AlgebraicTime::Quadratic(s) => TimeRepr::Quadratic {
                p: s.p.to_string(),
                q: s.q.to_string(),
                d: match s.d.to_u64() {
                    Some(n) => RadicandRepr::Number(n),
                    None => RadicandRepr::Text(s.d.to_string()),
                },
                r: s.r.to_string(),
                approx: self.approx(),
            },
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for AlgebraicTime {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let int = |s: &str| s.trim().parse::<BigInt>().map_err(D::Error::custom);
        match TimeRepr::deserialize(deserializer)? {
            TimeRepr::Rational { value } => parse_rational(&value)
                .map(AlgebraicTime::Rational)
                .map_err(D::Error::custom),
            TimeRepr::Quadratic { p, q, d, r, .. } => {
                let d = match d {
                    RadicandRepr::Number(n) => BigInt::from(n),
                    RadicandRepr::Text(s) => int(&s)?,
                };
                AlgebraicTime::from_parts(int(&p)?, int(&q)?, d, int(&r)?).map_err(D::Error::custom)
            }
        }
    }
}
