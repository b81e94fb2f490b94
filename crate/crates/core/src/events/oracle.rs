//! Brute-force event enumeration, independent of the triple-expansion path.
//!
//! Triple polynomials are recovered by interpolating the orientation
//! determinant at t = 0, 1, 2; at every candidate time each polynomial is
//! evaluated exactly and every subset of points is tested. Only the
//! exact-number layer is shared with [`super::enumerate_events`].

use num_traits::Zero;

use crate::exact::{evaluate_at_time, solve_quadratic, AlgebraicTime, QuadValue, Rational};
use crate::kinematics::Scene;

use super::{sort_dedup, CollinearityEvent};

pub const DEFAULT_ORACLE_CAP: usize = 8;

/// Hard ceiling on the subset enumeration regardless of the requested cap.
const MAX_SUBSET_POINTS: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("scene has {n} points; the brute-force oracle is capped at {cap}")]
    TooLarge { n: usize, cap: usize },
}

type Pt = (QuadValue, QuadValue);

fn det(a: &Pt, b: &Pt, c: &Pt) -> QuadValue {
    let l = &(&b.0 - &a.0) * &(&c.1 - &a.1);
    let r = &(&b.1 - &a.1) * &(&c.0 - &a.0);
    &l - &r
}

struct TriplePoly {
    c: [Rational; 3],
}

impl TriplePoly {
    fn always_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    fn double_root_at(&self, t: &AlgebraicTime) -> bool {
        let [c0, c1, c2] = &self.c;
        if c2.is_zero() {
            return false;
        }
        let disc = c1 * c1 - Rational::from_integer(4.into()) * c2 * c0;
        disc.is_zero() && AlgebraicTime::from(-c1 / (c2 * Rational::from_integer(2.into()))) == *t
    }
}

/// Enumerates events by testing every subset of points at every candidate
/// time. With `time_candidates = None` the candidates are all roots of all
/// triple polynomials. Refuses scenes with more than `cap` points.
pub fn brute_force_events(
    scene: &Scene,
    time_candidates: Option<&[AlgebraicTime]>,
    cap: usize,
) -> Result<Vec<CollinearityEvent>, OracleError> {
    let n = scene.len();
    let cap = cap.min(MAX_SUBSET_POINTS);
    if n > cap {
        return Err(OracleError::TooLarge { n, cap });
    }
    if n < 3 {
        return Ok(Vec::new());
    }
    let pts = scene.points();

    // Interpolate each triple determinant from samples at t = 0, 1, 2.
    let at = |idx: usize, t: i64| -> Pt {
        let t = Rational::from_integer(t.into());
        let p = &pts[idx];
        (
            QuadValue::rational(&p.pos.x + &t * &p.vel.x),
            QuadValue::rational(&p.pos.y + &t * &p.vel.y),
        )
    };
    let mut polys = std::collections::BTreeMap::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let s: Vec<Rational> = (0..3)
                    .map(|t| det(&at(i, t), &at(j, t), &at(k, t)).rational_part().clone())
                    .collect();
                let c0 = s[0].clone();
                let c2 = (&s[2] - &s[1] * Rational::from_integer(2.into()) + &s[0])
                    / Rational::from_integer(2.into());
                let c1 = &s[1] - &s[0] - &c2;
                polys.insert((i, j, k), TriplePoly { c: [c0, c1, c2] });
            }
        }
    }

    let mut times: Vec<AlgebraicTime> = match time_candidates {
        Some(ts) => ts.to_vec(),
        None => polys
            .values()
            .filter(|p| !p.always_zero())
            .flat_map(|p| solve_quadratic(&p.c[2], &p.c[1], &p.c[0]).roots)
            .collect(),
    };
    times.sort();
    times.dedup();

    let mut events = Vec::new();
    for t in &times {
        let tv = QuadValue::from(t);
        let pos: Vec<Pt> = pts
            .iter()
            .map(|p| {
                (
                    &QuadValue::rational(p.pos.x.clone()) + &tv.scale(&p.vel.x),
                    &QuadValue::rational(p.pos.y.clone()) + &tv.scale(&p.vel.y),
                )
            })
            .collect();

        // zero[a][b][q]: the determinant of (a, b, q) vanishes at t.
        let mut zero = vec![vec![vec![false; n]; n]; n];
        for (&(i, j, k), poly) in &polys {
            if evaluate_at_time(&poly.c, t).is_zero() {
                for [a, b, q] in [[i, j, k], [i, k, j], [j, i, k], [j, k, i], [k, i, j], [k, j, i]] {
                    zero[a][b][q] = true;
                }
            }
        }
        // line[a][b]: bitmask of points on the line through a and b.
        let mut line = vec![vec![0u32; n]; n];
        for a in 0..n {
            for b in a + 1..n {
                if pos[a] == pos[b] {
                    continue;
                }
                line[a][b] = (0..n)
                    .filter(|&q| q == a || q == b || zero[a][b][q])
                    .fold(0u32, |m, q| m | (1 << q));
            }
        }

        for mask in 1u32..(1u32 << n) {
            if mask.count_ones() < 3 {
                continue;
            }
            let members: Vec<usize> = (0..n).filter(|&q| mask & (1 << q) != 0).collect();
            let first = members[0];
            let Some(&second) = members.iter().find(|&&q| pos[q] != pos[first]) else {
                continue; // all members coincide
            };
            // Collinear and maximal: exactly the points on the anchors' line.
            if line[first][second] != mask {
                continue;
            }
            let mut member_triples = Vec::new();
            for (x, &p) in members.iter().enumerate() {
                for (y, &q) in members.iter().enumerate().skip(x + 1) {
                    for &r in &members[y + 1..] {
                        member_triples.push((p, q, r));
                    }
                }
            }
            if member_triples.iter().all(|key| polys[key].always_zero()) {
                continue;
            }
            let tangential = member_triples.iter().any(|key| polys[key].double_root_at(t));
            let contains_subcollision = members
                .iter()
                .enumerate()
                .any(|(x, &p)| members[x + 1..].iter().any(|&q| pos[p] == pos[q]));
            events.push(CollinearityEvent {
                time: t.clone(),
                members,
                anchors: (first, second),
                tangential,
                contains_subcollision,
            });
        }
    }
    sort_dedup(&mut events);
    Ok(events)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::kinematics::{KineticPoint, SceneMeta, Vec2};

    fn kp(id: &str, pos: (i64, i64), vel: (i64, i64)) -> KineticPoint {
        KineticPoint::new(id, Vec2::new(rat(pos.0), rat(pos.1)), Vec2::new(rat(vel.0), rat(vel.1)))
    }

    #[test]
    fn quadratic_triple() {
        let s = Scene::new(
            vec![kp("a", (0, 0), (0, 0)), kp("b", (0, 1), (1, 0)), kp("c", (4, 0), (0, 1))],
            SceneMeta::new(),
        )
        .unwrap();
        let events = brute_force_events(&s, None, DEFAULT_ORACLE_CAP).unwrap();
        assert_eq!(events.len(), 2);
        assert_eq!(events[0].time, rat(-2).into());
    }

    #[test]
    fn cap_enforced() {
        let pts = (0..9).map(|i| kp(&format!("p{i}"), (i, i * i), (0, 0))).collect();
        let s = Scene::new(pts, SceneMeta::new()).unwrap();
        assert_eq!(
            brute_force_events(&s, None, DEFAULT_ORACLE_CAP),
            Err(OracleError::TooLarge { n: 9, cap: 8 })
        );
        assert!(brute_force_events(&s, Some(&[]), 9).unwrap().is_empty());
    }

    #[test]
    fn restricted_candidates() {
        let s = Scene::new(
            vec![kp("a", (0, 0), (0, 0)), kp("b", (0, 1), (1, 0)), kp("c", (4, 0), (0, 1))],
            SceneMeta::new(),
        )
        .unwrap();
        let events = brute_force_events(&s, Some(&[rat(2).into(), rat(3).into()]), 8).unwrap();
        assert_eq!(events.len(), 1);
        assert_eq!(events[0].time, rat(2).into());
    }
}
