use std::collections::BTreeSet;

use num_traits::Zero;
use serde::Serialize;

use crate::exact::binomial;
use crate::kinematics::{collinearity_polynomial, KineticPoint, Scene};

use super::{enumerate_events, CollinearityEvent};

/// Number of events with at least `k` members.
pub fn count_k_collinearities(scene: &Scene, k: usize) -> usize {
    enumerate_events(scene, 3).iter().filter(|e| e.k() >= k).count()
}

fn always_collinear(a: &KineticPoint, b: &KineticPoint, c: &KineticPoint) -> bool {
    let (c2, c1, c0) = collinearity_polynomial(a, b, c);
    c2.is_zero() && c1.is_zero() && c0.is_zero()
}

/// Maximal sets (of size at least three) of scene indices that are collinear
/// at all times, sorted.
///
/// Each pair's companions (points always collinear with the pair) form a
/// maximal group; pairs inside one group produce the same set.
pub fn always_collinear_group_indices(scene: &Scene) -> Vec<Vec<usize>> {
    let pts = scene.points();
    let n = pts.len();
    let mut groups = BTreeSet::new();
    for i in 0..n {
        for j in i + 1..n {
            let group: Vec<usize> = (0..n)
                .filter(|&q| q == i || q == j || always_collinear(&pts[i], &pts[j], &pts[q]))
                .collect();
            if group.len() >= 3 {
                groups.insert(group);
            }
        }
    }
    groups.into_iter().collect()
}

/// [`always_collinear_group_indices`] with point ids.
pub fn always_collinear_groups(scene: &Scene) -> Vec<Vec<String>> {
    always_collinear_group_indices(scene)
        .into_iter()
        .map(|g| g.into_iter().map(|i| scene.points()[i].id.clone()).collect())
        .collect()
}

/// Event counts of a scene checked against the triple-count upper bounds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundAudit {
    pub n: usize,
    pub k: usize,
    /// Events with at least `k` members.
    pub event_count: u64,
    /// Events with at least three members.
    pub event_count_3: u64,
    /// Sum over events of member triples that are not always collinear.
    pub triple_incidences: u64,
    /// `2 * C(n, 3)`.
    pub bound_3: u64,
    /// `floor(2 * C(n, 3) / C(k, 3))`.
    pub bound_k: u64,
    pub no_three_always_collinear: bool,
    pub pass: bool,
    pub violations: Vec<String>,
}

pub fn audit_bounds(scene: &Scene, k: usize) -> BoundAudit {
    let events = enumerate_events(scene, 3);
    audit_events(scene, &events, k)
}

/// Audits a precomputed event list (as returned by `enumerate_events(scene, 3)`).
pub fn audit_events(scene: &Scene, events: &[CollinearityEvent], k: usize) -> BoundAudit {
    let pts = scene.points();
    let n = scene.len();
    let k = k.max(3);
    let event_count_3 = events.iter().filter(|e| e.k() >= 3).count() as u64;
    let event_count = events.iter().filter(|e| e.k() >= k).count() as u64;

    let mut triple_incidences = 0u64;
    for e in events {
        let m = &e.members;
        for x in 0..m.len() {
            for y in x + 1..m.len() {
                for z in y + 1..m.len() {
                    if !always_collinear(&pts[m[x]], &pts[m[y]], &pts[m[z]]) {
                        triple_incidences += 1;
                    }
                }
            }
        }
    }

    let bound_3 = 2 * binomial(n as u64, 3);
    let bound_k = bound_3 / binomial(k as u64, 3);
    let no_three_always_collinear = always_collinear_group_indices(scene).is_empty();

    let mut violations = Vec::new();
    if event_count_3 > bound_3 {
        violations.push(format!(
            "{event_count_3} 3-collinearities exceed 2*C({n},3) = {bound_3}"
        ));
    }
    if no_three_always_collinear && event_count > bound_k {
        violations.push(format!(
            "{event_count} {k}-collinearities exceed 2*C({n},3)/C({k},3) = {bound_k}"
        ));
    }
    BoundAudit {
        n,
        k,
        event_count,
        event_count_3,
        triple_incidences,
        bound_3,
        bound_k,
        no_three_always_collinear,
        pass: violations.is_empty(),
        violations,
    }
}
