//! Square-part extraction for radicands.
//!
//! A radicand `n` is split as `n = f^2 * d` with `d` free of every prime square
//! below the trial bound. Whether `d` is fully squarefree is reported separately:
//! the cofactor left after trial division is certified when it is a perfect
//! square, or smaller than `bound^3` (then it is 1, a prime, or a product of two
//! distinct primes above the bound).

use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};

/// Primes up to this bound are trial-divided out of every radicand.
pub const DEFAULT_TRIAL_BOUND: u32 = 1 << 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarePart {
    /// Square root of the extracted square factor.
    pub factor: BigUint,
    /// Remaining radicand, free of all square factors found.
    pub radicand: BigUint,
    /// `true` when `radicand` is provably squarefree.
    pub certified: bool,
}

fn primes_below(bound: u32) -> Vec<u32> {
    let n = bound as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            primes.push(i as u32);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}

fn default_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| primes_below(DEFAULT_TRIAL_BOUND))
}

/// Floor square root of a non-negative integer.
pub fn isqrt(n: &BigUint) -> BigUint {
    n.sqrt()
}

/// Returns the exact square root when `n` is a perfect square.
pub fn exact_sqrt(n: &BigUint) -> Option<BigUint> {
    let r = n.sqrt();
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

/// Signed variant of [`exact_sqrt`]; negative inputs are never squares.
pub fn exact_sqrt_signed(n: &BigInt) -> Option<BigInt> {
    match n.sign() {
        Sign::Minus => None,
        _ => exact_sqrt(n.magnitude()).map(BigInt::from),
    }
}

/// Splits `n` into `factor^2 * radicand` using the default trial bound.
pub fn square_part(n: &BigUint) -> SquarePart {
    square_part_with(n, DEFAULT_TRIAL_BOUND)
}

/// Splits `n` into `factor^2 * radicand`, trial-dividing by primes up to `bound`.
pub fn square_part_with(n: &BigUint, bound: u32) -> SquarePart {
    if n.is_zero() {
        return SquarePart {
            factor: BigUint::zero(),
            radicand: BigUint::zero(),
            certified: true,
        };
    }
    let owned;
    let primes: &[u32] = if bound == DEFAULT_TRIAL_BOUND {
        default_primes()
    } else {
        owned = primes_below(bound);
        &owned
    };

    let mut rest = n.clone();
    let mut factor = BigUint::one();
    let mut radicand = BigUint::one();
    for &p in primes {
        let p_big = BigUint::from(p);
        if &p_big * &p_big > rest {
            break;
        }
        let mut exp = 0u32;
        while (&rest % &p_big).is_zero() {
            rest /= &p_big;
            exp += 1;
        }
        if exp > 0 {
            factor *= p_big.pow(exp / 2);
            if exp % 2 == 1 {
                radicand *= &p_big;
            }
        }
    }

    let bound_big = BigUint::from(bound);
    let limit = &bound_big * &bound_big * &bound_big;
    let certified;
    if let Some(root) = exact_sqrt(&rest) {
        factor *= root;
        certified = true;
    } else {
        // Below bound^2 the cofactor is 1 or prime; below bound^3 it has at most
        // two prime factors and a repeated one would have been a perfect square.
        certified = rest < limit;
        radicand *= rest;
    }
    SquarePart {
        factor,
        radicand,
        certified,
    }
}
