use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::exact::{solve_quadratic, vanishes_at_integer, AlgebraicTime, Rational};
use crate::kinematics::{collision_time, Collision, Scene};
use crate::par::{map_range, Execution};

use super::{sort_dedup, CollinearityEvent};

/// All collinearity events with at least `k_min` members, sorted by time and
/// then by member list.
pub fn enumerate_events(scene: &Scene, k_min: usize) -> Vec<CollinearityEvent> {
    enumerate_events_with(scene, k_min, Execution::default())
}

/// [`enumerate_events`] with an explicit scheduling mode. The output does not
/// depend on the mode.
pub fn enumerate_events_with(scene: &Scene, k_min: usize, mode: Execution) -> Vec<CollinearityEvent> {
    let n = scene.len();
    if n < 3 {
        return Vec::new();
    }
    let ctx = Context::new(scene);
    // One work item per lowest triple index.
    let batches = map_range(n - 2, mode, |i| ctx.events_from_first_index(i));
    let mut events: Vec<CollinearityEvent> = batches.into_iter().flatten().collect();
    sort_dedup(&mut events);
    events.retain(|e| e.k() >= k_min.max(3));
    events
}

/// Shared read-only data for all workers.
struct Context {
    n: usize,
    /// `[x, y, u, v]` scaled by the common denominator of the scene. Uniform
    /// scaling multiplies every collinearity polynomial by a positive
    /// constant, so roots and zero tests are unchanged.
    motions: Vec<[BigInt; 4]>,
    /// Pairwise collision times. Two points share a position at `t` iff they
    /// collide at `t`, which is always rational.
    collisions: Vec<Option<Rational>>,
}

impl Context {
    fn new(scene: &Scene) -> Self {
        let pts = scene.points();
        let n = pts.len();
        let den = pts.iter().fold(BigInt::one(), |acc, p| {
            [&p.pos.x, &p.pos.y, &p.vel.x, &p.vel.y]
                .iter()
                .fold(acc, |acc, c| acc.lcm(c.denom()))
        });
        let int = |c: &Rational| c.numer() * (&den / c.denom());
        let motions = pts
            .iter()
            .map(|p| [int(&p.pos.x), int(&p.pos.y), int(&p.vel.x), int(&p.vel.y)])
            .collect();
        let mut collisions = vec![None; n * n];
        for i in 0..n {
            for j in i + 1..n {
                if let Collision::At(t) = collision_time(&pts[i], &pts[j]) {
                    collisions[i * n + j] = Some(t.clone());
                    collisions[j * n + i] = Some(t);
                }
            }
        }
        Context { n, motions, collisions }
    }

    fn coincide(&self, a: usize, b: usize, t: &AlgebraicTime) -> bool {
        match (&self.collisions[a * self.n + b], t) {
            (Some(tc), AlgebraicTime::Rational(t)) => tc == t,
            _ => false,
        }
    }

    /// `[c2, c1, c0]` of the orientation determinant of `(a, b, c)` over time.
    fn poly(&self, a: usize, b: usize, c: usize) -> [BigInt; 3] {
        let [ax, ay, au, av] = &self.motions[a];
        let [bx, by, bu, bv] = &self.motions[b];
        let [cx, cy, cu, cv] = &self.motions[c];
        let (dx1, dy1, du1, dv1) = (bx - ax, by - ay, bu - au, bv - av);
        let (dx2, dy2, du2, dv2) = (cx - ax, cy - ay, cu - au, cv - av);
        [
            &du1 * &dv2 - &dv1 * &du2,
            &dx1 * &dv2 + &du1 * &dy2 - &dy1 * &du2 - &dv1 * &dx2,
            &dx1 * &dy2 - &dy1 * &dx2,
        ]
    }

    fn events_from_first_index(&self, i: usize) -> Vec<CollinearityEvent> {
        let n = self.n;
        let mut found: Vec<CollinearityEvent> = Vec::new();
        for j in i + 1..n {
            for k in j + 1..n {
                let [c2, c1, c0] = self.poly(i, j, k);
                if c2.is_zero() && c1.is_zero() && c0.is_zero() {
                    continue;
                }
                let roots = solve_quadratic(
                    &Rational::from_integer(c2),
                    &Rational::from_integer(c1),
                    &Rational::from_integer(c0),
                )
                .roots;
                for t in &roots {
                    // Already expanded from an earlier triple of this batch.
                    if found.iter().any(|e| e.contains_all(&[i, j, k]) && e.time == *t) {
                        continue;
                    }
                    if let Some(event) = self.expand([i, j, k], t) {
                        found.push(event);
                    }
                }
            }
        }
        found
    }

    /// Grows the triple's collinearity at `t` to the maximal member set and
    /// applies the degeneracy filters.
    fn expand(&self, triple: [usize; 3], t: &AlgebraicTime) -> Option<CollinearityEvent> {
        let [i, j, k] = triple;
        let (a, b) = if !self.coincide(i, j, t) {
            (i, j)
        } else if !self.coincide(i, k, t) {
            (i, k)
        } else {
            // All three coincide: every line through the collision point is
            // found from a triple containing a point elsewhere.
            return None;
        };

        // With a and b at distinct positions, q is on their line iff
        // det(a, b, q) vanishes at t. The member set is collinear at all times
        // iff every such determinant vanishes identically.
        let mut members = Vec::new();
        let mut always = true;
        for q in 0..self.n {
            if q == a || q == b {
                members.push(q);
                continue;
            }
            let [c2, c1, c0] = self.poly(a, b, q);
            if c2.is_zero() && c1.is_zero() && c0.is_zero() {
                members.push(q);
            } else if vanishes_at_integer(&c2, &c1, &c0, t) {
                members.push(q);
                always = false;
            }
        }
        if always {
            return None;
        }

        let first = members[0];
        let second = *members
            .iter()
            .find(|&&q| q != first && !self.coincide(first, q, t))
            .expect("anchors a and b have distinct positions");
        let contains_subcollision = members
            .iter()
            .enumerate()
            .any(|(x, &p)| members[x + 1..].iter().any(|&q| self.coincide(p, q, t)));

        Some(CollinearityEvent {
            time: t.clone(),
            tangential: self.has_tangential_triple(&members, t),
            members,
            anchors: (first, second),
            contains_subcollision,
        })
    }

    /// Some member triple has a double root at `t`. Member triples already
    /// vanish at `t`, so this is `c2 != 0` and a vanishing derivative
    /// `2 c2 t + c1`.
    fn has_tangential_triple(&self, members: &[usize], t: &AlgebraicTime) -> bool {
        let zero = BigInt::zero();
        for (x, &p) in members.iter().enumerate() {
            for (y, &q) in members.iter().enumerate().skip(x + 1) {
                for &r in &members[y + 1..] {
                    let [c2, c1, _] = self.poly(p, q, r);
                    if !c2.is_zero() && vanishes_at_integer(&zero, &(c2 * 2), &c1, t) {
                        return true;
                    }
                }
            }
        }
        false
    }
}
