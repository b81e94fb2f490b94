mod common;

use std::cmp::Ordering;

use common::{rational, time};
use kinetic_collinear::exact::{compare_times, evaluate_at_time, solve_quadratic, AlgebraicTime, Rational};
use num_bigint::BigInt;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn roots_resubstitute_to_zero(c2 in rational(30), c1 in rational(30), c0 in rational(30)) {
        let report = solve_quadratic(&c2, &c1, &c0);
        prop_assert!(report.roots.len() <= 2);
        for r in &report.roots {
            prop_assert!(evaluate_at_time(&[c0.clone(), c1.clone(), c2.clone()], r).is_zero(), "root {}", r);
        }
        for w in report.roots.windows(2) {
            prop_assert_eq!(compare_times(&w[0], &w[1]), Ordering::Less);
        }
    }

    #[test]
    fn compare_times_is_a_total_order(a in time(), b in time(), c in time()) {
        prop_assert_eq!(compare_times(&a, &a), Ordering::Equal);
        prop_assert_eq!(compare_times(&a, &b), compare_times(&b, &a).reverse());
        if compare_times(&a, &b) != Ordering::Greater && compare_times(&b, &c) != Ordering::Greater {
            prop_assert_ne!(compare_times(&a, &c), Ordering::Greater);
        }
        prop_assert_eq!(compare_times(&a, &b) == Ordering::Equal, a == b);
        let (fa, fb) = (a.approx(), b.approx());
        if (fa - fb).abs() > 1e-9 * (1.0 + fa.abs().max(fb.abs())) {
            prop_assert_eq!(compare_times(&a, &b), fa.partial_cmp(&fb).unwrap());
        }
    }

    #[test]
    fn canonicalization_is_idempotent(p in -50i64..50, q in -50i64..50, d in 0i64..200, r in (-96i64..=96).prop_filter("nonzero", |r| *r != 0)) {
        let t = AlgebraicTime::from_parts(BigInt::from(p), BigInt::from(q), BigInt::from(d), BigInt::from(r)).unwrap();
        let again = match &t {
            AlgebraicTime::Rational(v) => AlgebraicTime::from(v.clone()),
            AlgebraicTime::Quadratic(s) => {
                AlgebraicTime::from_parts(s.p().clone(), s.q().clone(), s.d().clone(), s.r().clone()).unwrap()
            }
        };
        prop_assert_eq!(format!("{t:?}"), format!("{again:?}"));
        // Value is preserved by canonicalization.
        let approx = (p as f64 + q as f64 * (d as f64).sqrt()) / r as f64;
        prop_assert!((t.approx() - approx).abs() <= 1e-9 * (1.0 + approx.abs()));
    }

    #[test]
    fn product_of_linear_factors(a in rational(40), b in rational(40)) {
        // (t - a)(t - b) = t² - (a + b) t + ab
        let report = solve_quadratic(&Rational::from_integer(1.into()), &-(&a + &b), &(&a * &b));
        let (lo, hi) = if a <= b { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
        if lo == hi {
            prop_assert!(report.double_root);
            prop_assert_eq!(report.roots, vec![AlgebraicTime::from(lo)]);
        } else {
            prop_assert!(!report.double_root);
            prop_assert_eq!(report.roots, vec![AlgebraicTime::from(lo), AlgebraicTime::from(hi)]);
        }
    }
}
