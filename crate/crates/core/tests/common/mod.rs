#![allow(dead_code)]

use kinetic_collinear::exact::{ratio, solve_quadratic, AlgebraicTime, Rational};
use kinetic_collinear::kinematics::{KineticPoint, Vec2};
use proptest::prelude::*;

pub fn rational(bound: i64) -> impl Strategy<Value = Rational> {
    (-bound..=bound, 1i64..=6).prop_map(|(n, d)| ratio(n, d))
}

pub fn vec2(bound: i64) -> impl Strategy<Value = Vec2> {
    (rational(bound), rational(bound)).prop_map(|(x, y)| Vec2::new(x, y))
}

pub fn point(id: &'static str, bound: i64) -> impl Strategy<Value = KineticPoint> {
    (vec2(bound), vec2(bound)).prop_map(move |(p, v)| KineticPoint::new(id, p, v))
}

/// Small integer coordinates: collisions, equal velocities and always-collinear
/// triples come up often.
pub fn lattice_point(id: &'static str) -> impl Strategy<Value = KineticPoint> {
    ((-2i64..=2), (-2i64..=2), (-2i64..=2), (-2i64..=2)).prop_map(move |(x, y, u, v)| {
        KineticPoint::new(id, Vec2::new(ratio(x, 1), ratio(y, 1)), Vec2::new(ratio(u, 1), ratio(v, 1)))
    })
}

pub fn triple() -> impl Strategy<Value = [KineticPoint; 3]> {
    prop_oneof![
        (point("a", 8), point("b", 8), point("c", 8)).prop_map(|(a, b, c)| [a, b, c]),
        (lattice_point("a"), lattice_point("b"), lattice_point("c")).prop_map(|(a, b, c)| [a, b, c]),
    ]
}

/// Rational times and roots of random quadratics.
pub fn time() -> impl Strategy<Value = AlgebraicTime> {
    prop_oneof![
        rational(20).prop_map(AlgebraicTime::from),
        (rational(9), rational(9), rational(9), any::<prop::sample::Index>()).prop_filter_map(
            "quadratic has a root",
            |(a, b, c, i)| {
                let roots = solve_quadratic(&a, &b, &c).roots;
                (!roots.is_empty()).then(|| roots[i.index(roots.len())].clone())
            }
        ),
    ]
}
