//! Collinearity events: a line and a time at which at least three points of a
//! scene lie on the line, the points on it do not all coincide, and they are
//! not collinear at all times.

mod audit;
mod enumerate;
mod oracle;

use std::cmp::Ordering;

use crate::exact::{compare_times, AlgebraicTime};

pub use audit::{
    always_collinear_group_indices, always_collinear_groups, audit_bounds, audit_events,
    count_k_collinearities, BoundAudit,
};
pub use enumerate::{enumerate_events, enumerate_events_with};
pub use oracle::{brute_force_events, OracleError, DEFAULT_ORACLE_CAP};

/// One `(line, time)` pair with the maximal set of scene points on the line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollinearityEvent {
    pub time: AlgebraicTime,
    /// Scene indices of every point on the line at `time`, ascending.
    pub members: Vec<usize>,
    /// Lowest-index member, and the lowest-index member at a different position.
    pub anchors: (usize, usize),
    /// Some member triple that is not always collinear touches collinearity
    /// at `time` without crossing (a double root of its polynomial).
    pub tangential: bool,
    /// Some, but not all, members coincide at `time`.
    pub contains_subcollision: bool,
}

impl CollinearityEvent {
    pub fn k(&self) -> usize {
        self.members.len()
    }

    pub fn contains_all(&self, indices: &[usize]) -> bool {
        indices.iter().all(|i| self.members.binary_search(i).is_ok())
    }
}

/// Output order: by time, then lexicographically by member list.
pub fn event_order(a: &CollinearityEvent, b: &CollinearityEvent) -> Ordering {
    compare_times(&a.time, &b.time).then_with(|| a.members.cmp(&b.members))
}

/// Sorts and removes duplicate `(time, members)` keys.
pub(crate) fn sort_dedup(events: &mut Vec<CollinearityEvent>) {
    events.sort_by(event_order);
    events.dedup_by(|b, a| a.members == b.members && a.time == b.time);
}
