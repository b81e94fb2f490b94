use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::radical::{exact_sqrt_signed, square_part};
use super::{AlgebraicTime, QuadValue, Rational};

/// Real roots of a polynomial of degree at most two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootReport {
    /// Distinct real roots in ascending order.
    pub roots: Vec<AlgebraicTime>,
    /// All three coefficients vanish.
    pub identically_zero: bool,
    /// The single root is a double root of a genuine quadratic.
    pub double_root: bool,
}

/// Solves `c2 t^2 + c1 t + c0 = 0` exactly.
pub fn solve_quadratic(c2: &Rational, c1: &Rational, c0: &Rational) -> RootReport {
    let mut report = RootReport {
        roots: Vec::new(),
        identically_zero: false,
        double_root: false,
    };
    if c2.is_zero() {
        if c1.is_zero() {
            report.identically_zero = c0.is_zero();
        } else {
            report.roots.push(AlgebraicTime::Rational(-c0 / c1));
        }
        return report;
    }

    let two_a = c2 * Rational::from_integer(2.into());
    let disc = c1 * c1 - c2 * c0 * Rational::from_integer(4.into());
    if disc.is_negative() {
        return report;
    }
    let vertex = -c1 / &two_a;
    if disc.is_zero() {
        report.double_root = true;
        report.roots.push(AlgebraicTime::Rational(vertex));
        return report;
    }

    // sqrt(N/M) = sqrt(N*M) / M with N*M = f^2 d.
    let nm: BigInt = disc.numer() * disc.denom();
    if let Some(s) = exact_sqrt_signed(&nm) {
        let offset = Rational::new(s, disc.denom().clone()) / &two_a;
        let (lo, hi) = ordered(&vertex - &offset, &vertex + &offset);
        report.roots.push(AlgebraicTime::Rational(lo));
        report.roots.push(AlgebraicTime::Rational(hi));
        return report;
    }
    let split = square_part(nm.magnitude());
    let radicand = BigInt::from(split.radicand);
    let coeff = Rational::new(BigInt::from(split.factor), disc.denom().clone()) / &two_a;
    let coeff = coeff.abs();
    for b in [-coeff.clone(), coeff] {
        let root = AlgebraicTime::from_rational_parts(&vertex, &b, &radicand)
            .expect("positive radicand");
        report.roots.push(root);
    }
    report
}

fn ordered(a: Rational, b: Rational) -> (Rational, Rational) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Evaluates `poly[0] + poly[1] t + poly[2] t^2 + ...` exactly at `t`.
pub fn evaluate_at_time(poly: &[Rational], t: &AlgebraicTime) -> QuadValue {
    let t = QuadValue::from(t);
    poly.iter()
        .rev()
        .fold(QuadValue::zero(), |acc, c| &(&acc * &t) + &QuadValue::rational(c.clone()))
}

/// Whether `c2 t^2 + c1 t + c0` vanishes at `t`.
pub fn vanishes_at(c2: &Rational, c1: &Rational, c0: &Rational, t: &AlgebraicTime) -> bool {
    let den = c2.denom().lcm(c1.denom()).lcm(c0.denom());
    let int = |c: &Rational| c.numer() * (&den / c.denom());
    vanishes_at_integer(&int(c2), &int(c1), &int(c0), t)
}

/// [`vanishes_at`] for integer coefficients.
///
/// For irrational `t = (p + q sqrt(d)) / r` the polynomial vanishes iff it is a
/// rational multiple of the minimal polynomial `r^2 x^2 - 2pr x + p^2 - q^2 d`,
/// which avoids arithmetic in the quadratic field.
pub fn vanishes_at_integer(c2: &BigInt, c1: &BigInt, c0: &BigInt, t: &AlgebraicTime) -> bool {
    match t {
        AlgebraicTime::Rational(x) => {
            let (n, d) = (x.numer(), x.denom());
            (c2 * n * n + c1 * n * d + c0 * d * d).is_zero()
        }
        AlgebraicTime::Quadratic(s) => {
            if c2.is_zero() {
                return c1.is_zero() && c0.is_zero();
            }
            let (p, q, d, r) = (s.p(), s.q(), s.d(), s.r());
            let m2 = r * r;
            c1 * &m2 == c2 * (-(p * r) * 2) && c0 * &m2 == c2 * (p * p - q * q * d)
        }
    }
}
