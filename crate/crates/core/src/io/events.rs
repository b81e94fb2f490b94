use serde::{Deserialize, Serialize};

use crate::events::CollinearityEvent;
use crate::exact::AlgebraicTime;
use crate::kinematics::Scene;

/// An event with point ids in place of scene indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EventRecord {
    pub time: AlgebraicTime,
    pub members: Vec<String>,
    pub k: usize,
    pub anchors: [String; 2],
    pub tangential: bool,
    pub contains_subcollision: bool,
}

pub fn event_records(scene: &Scene, events: &[CollinearityEvent]) -> Vec<EventRecord> {
    let id = |i: usize| scene.points()[i].id.clone();
    events
        .iter()
        .map(|e| EventRecord {
            time: e.time.clone(),
            members: e.members.iter().map(|&i| id(i)).collect(),
            k: e.k(),
            anchors: [id(e.anchors.0), id(e.anchors.1)],
            tangential: e.tangential,
            contains_subcollision: e.contains_subcollision,
        })
        .collect()
}

/// Pretty-printed JSON array with a trailing newline.
pub fn events_to_json(scene: &Scene, events: &[CollinearityEvent]) -> String {
    let mut out = serde_json::to_string_pretty(&event_records(scene, events)).expect("events serialize");
    out.push('\n');
    out
}

#[derive(Serialize)]
struct CsvRow {
    time: String,
    time_approx: f64,
    k: usize,
    members: String,
    anchors: String,
    tangential: bool,
    contains_subcollision: bool,
}

/// CSV with the exact time, a float approximation, and space-separated ids.
pub fn events_to_csv(scene: &Scene, events: &[CollinearityEvent]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    if events.is_empty() {
        writer
            .write_record(["time", "time_approx", "k", "members", "anchors", "tangential", "contains_subcollision"])
            .expect("in-memory write");
    }
    for r in event_records(scene, events) {
        writer
            .serialize(CsvRow {
                time: r.time.to_string(),
                time_approx: r.time.approx(),
                k: r.k,
                members: r.members.join(" "),
                anchors: r.anchors.join(" "),
                tangential: r.tangential,
                contains_subcollision: r.contains_subcollision,
            })
            .expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("csv is utf-8")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::events::enumerate_events;
    use crate::exact::rat;
    use crate::kinematics::{KineticPoint, SceneMeta, Vec2};

    fn scene() -> Scene {
        let kp = |id: &str, p: (i64, i64), v: (i64, i64)| {
            KineticPoint::new(id, Vec2::new(rat(p.0), rat(p.1)), Vec2::new(rat(v.0), rat(v.1)))
        };
        Scene::new(
            vec![kp("a", (0, 0), (0, 0)), kp("b", (0, 1), (1, 0)), kp("c", (4, 0), (0, 1))],
            SceneMeta::new(),
        )
        .unwrap()
    }

    #[test]
    fn json_records() {
        let s = scene();
        let json = events_to_json(&s, &enumerate_events(&s, 3));
        let back: Vec<EventRecord> = serde_json::from_str(&json).unwrap();
        assert_eq!(back.len(), 2);
        assert_eq!(back[0].members, ["a", "b", "c"]);
        assert_eq!(back[0].anchors, ["a", "b"]);
        assert!(json.contains(r#""value": "-2/1""#));
    }

    #[test]
    fn csv_rows() {
        let s = scene();
        let csv = events_to_csv(&s, &enumerate_events(&s, 3));
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "time,time_approx,k,members,anchors,tangential,contains_subcollision");
        assert_eq!(lines[1], "-2/1,-2.0,3,a b c,a b,false,false");
        assert_eq!(events_to_csv(&s, &[]).lines().count(), 1);
    }
}
