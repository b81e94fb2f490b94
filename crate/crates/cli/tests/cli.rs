use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn kcol(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kcol")).args(args).output().expect("kcol runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn generate(dir: &Path, name: &str, args: &[&str]) -> PathBuf {
    let path = dir.join(name);
    let mut all = vec!["generate"];
    all.extend_from_slice(args);
    all.extend_from_slice(&["-o", path.to_str().unwrap()]);
    let out = kcol(&all);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    path
}

fn json_file(path: &Path) -> Value {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

const QUADRATIC_TRIPLE: &str = r#"{"version":1,"points":[
  {"id":"a","pos":["0/1","0/1"],"vel":["0/1","0/1"]},
  {"id":"b","pos":["0/1","1/1"],"vel":["1/1","0/1"]},
  {"id":"c","pos":["4/1","0/1"],"vel":["0/1","1/1"]}],"meta":{}}"#;

#[test]
fn generate_writes_scenes() {
    let dir = TempDir::new().unwrap();
    let tight = generate(dir.path(), "t.json", &["--construction", "tight", "--n", "5"]);
    let scene = json_file(&tight);
    assert_eq!(scene["version"], 1);
    assert_eq!(scene["points"].as_array().unwrap().len(), 5);
    assert_eq!(scene["meta"]["construction"], "tight");
    assert_eq!(scene["meta"]["precision_bits"], 40);

    let lb = generate(dir.path(), "lb.json", &["--construction", "lower_bound", "--n", "16", "--k", "4"]);
    assert_eq!(json_file(&lb)["points"].as_array().unwrap().len(), 16);
}

#[test]
fn generate_rejects_bad_parameters() {
    assert_eq!(code(&kcol(&["generate", "--construction", "tight", "--n", "2"])), 2);
    assert_eq!(code(&kcol(&["generate", "--construction", "spiral", "--n", "5"])), 2);
    assert_eq!(code(&kcol(&["generate", "--construction", "lower_bound", "--n", "16"])), 2);
    assert_eq!(code(&kcol(&["generate", "--construction", "tight", "--n", "5", "--bogus"])), 2);
}

#[test]
fn events_json_and_csv() {
    let dir = TempDir::new().unwrap();
    let tight = generate(dir.path(), "t.json", &["--construction", "tight", "--n", "3"]);
    let out = kcol(&["events", tight.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let events: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let events = events.as_array().unwrap();
    assert_eq!(events.len(), 2);
    for e in events {
        assert_eq!(e["k"], 3);
        assert_eq!(e["time"]["kind"], "quadratic");
        assert_eq!(e["members"], serde_json::json!(["p1", "p2", "p3"]));
    }

    let out = kcol(&["events", tight.to_str().unwrap(), "--format", "csv"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).lines().count(), 3);

    let none = generate(dir.path(), "n.json", &["--construction", "no_collinearity", "--n", "6"]);
    let out = kcol(&["events", none.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(serde_json::from_str::<Value>(&stdout(&out)).unwrap(), serde_json::json!([]));
}

#[test]
fn malformed_scenes_exit_one() {
    let dir = TempDir::new().unwrap();
    let truncated = dir.path().join("trunc.json");
    fs::write(&truncated, &QUADRATIC_TRIPLE[..60]).unwrap();
    let out = kcol(&["events", truncated.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line"));

    let bad_field = dir.path().join("field.json");
    fs::write(&bad_field, QUADRATIC_TRIPLE.replace(r#"["4/1","0/1"]"#, r#"["4/x","0/1"]"#)).unwrap();
    let out = kcol(&["count", bad_field.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("points[2].pos[0]"));

    let dup = dir.path().join("dup.json");
    fs::write(&dup, QUADRATIC_TRIPLE.replace(r#""id":"c""#, r#""id":"a""#)).unwrap();
    assert_eq!(code(&kcol(&["events", dup.to_str().unwrap()])), 1);

    assert_eq!(code(&kcol(&["events", dir.path().join("missing.json").to_str().unwrap()])), 1);
}

#[test]
fn count_and_pair_surface() {
    let dir = TempDir::new().unwrap();
    let lb = generate(dir.path(), "lb.json", &["--construction", "lower_bound", "--n", "16", "--k", "4"]);
    let out = kcol(&["count", lb.to_str().unwrap(), "--k", "4"]);
    assert_eq!(stdout(&out).trim(), "44");

    let scene = dir.path().join("q.json");
    fs::write(&scene, QUADRATIC_TRIPLE).unwrap();
    let out = kcol(&["pair-surface", scene.to_str().unwrap(), "--a", "a", "--b", "b"]);
    assert_eq!(code(&out), 0);
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["classification"], "hyperbolic_paraboloid");
    assert_eq!(report["coefficients"].as_object().unwrap().len(), 7);

    let out = kcol(&["pair-surface", scene.to_str().unwrap(), "--a", "a", "--b", "zz"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn pair_surface_collision_factor() {
    let dir = TempDir::new().unwrap();
    let scene = dir.path().join("c.json");
    fs::write(
        &scene,
        r#"{"version":1,"points":[
          {"id":"a","pos":["0/1","0/1"],"vel":["1/1","0/1"]},
          {"id":"b","pos":["2/1","0/1"],"vel":["0/1","0/1"]}],"meta":{}}"#,
    )
    .unwrap();
    let out = kcol(&["pair-surface", scene.to_str().unwrap(), "--a", "a", "--b", "b"]);
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["classification"], "horizontal_plus_non_horizontal_plane");
    assert_eq!(report["factor"]["collision_time"], "2/1");
}

#[test]
fn verify_exit_codes() {
    let dir = TempDir::new().unwrap();
    let tight = generate(dir.path(), "t.json", &["--construction", "tight", "--n", "6"]);
    let out = kcol(&["verify", tight.to_str().unwrap(), "--k", "3"]);
    assert_eq!(code(&out), 0);
    let audit: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(audit["event_count"], 40);
    assert_eq!(audit["bound_3"], 40);
    assert_eq!(audit["pass"], true);
    assert_eq!(audit["certificate"]["pass"], true);

    let random = generate(dir.path(), "r.json", &["--construction", "random", "--n", "6", "--seed", "7"]);
    let out = kcol(&["verify", random.to_str().unwrap(), "--oracle"]);
    assert_eq!(code(&out), 0);
    let audit: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(audit["oracle"]["equal"], true);

    let big = generate(dir.path(), "b.json", &["--construction", "random", "--n", "20"]);
    assert_eq!(code(&kcol(&["verify", big.to_str().unwrap(), "--oracle"])), 2);
}

#[test]
fn render_snapshots() {
    let dir = TempDir::new().unwrap();
    let tight = generate(dir.path(), "t.json", &["--construction", "tight", "--n", "5"]);
    let frames = dir.path().join("frames");
    let out = kcol(&["render", tight.to_str().unwrap(), "--times", "0", "-o", frames.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let svg = fs::read_to_string(frames.join("frame_000.svg")).unwrap();
    assert!(svg.contains(r#"version="1.1""#));
    assert_eq!(svg.matches("<circle").count(), 5);

    let scene = dir.path().join("q.json");
    fs::write(&scene, QUADRATIC_TRIPLE).unwrap();
    let out = kcol(&["render", scene.to_str().unwrap(), "--times=-2,1/2", "-o", frames.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let at_event = fs::read_to_string(frames.join("frame_000.svg")).unwrap();
    assert_eq!(at_event.matches(r##"stroke="#c0392b""##).count(), 1);
    let off_event = fs::read_to_string(frames.join("frame_001.svg")).unwrap();
    assert_eq!(off_event.matches(r##"stroke="#c0392b""##).count(), 0);
}

#[test]
fn render_usage_and_io_errors() {
    let dir = TempDir::new().unwrap();
    let scene = dir.path().join("q.json");
    fs::write(&scene, QUADRATIC_TRIPLE).unwrap();
    let s = scene.to_str().unwrap();
    let out_dir = dir.path().join("o");
    let o = out_dir.to_str().unwrap();
    assert_eq!(code(&kcol(&["render", s, "-o", o])), 2);
    assert_eq!(code(&kcol(&["render", s, "--times", "-o", o])), 2);
    assert_eq!(code(&kcol(&["render", s, "--times", "abc", "-o", o])), 2);
    // A regular file cannot hold the output directory.
    let blocked = scene.join("frames");
    assert_eq!(code(&kcol(&["render", s, "--times", "0", "-o", blocked.to_str().unwrap()])), 1);
}

#[test]
fn outputs_are_deterministic() {
    let a = TempDir::new().unwrap();
    let b = TempDir::new().unwrap();
    let args = ["--construction", "random", "--n", "6", "--seed", "3"];
    let pa = generate(a.path(), "s.json", &args);
    let pb = generate(b.path(), "s.json", &args);
    assert_eq!(fs::read(&pa).unwrap(), fs::read(&pb).unwrap());
    let ea = kcol(&["events", pa.to_str().unwrap(), "--format", "csv"]);
    let eb = kcol(&["events", pa.to_str().unwrap(), "--format", "csv"]);
    assert_eq!(ea.stdout, eb.stdout);

    let frames = [a.path().join("f"), b.path().join("f")];
    for f in &frames {
        assert_eq!(code(&kcol(&["render", pa.to_str().unwrap(), "--times", "0,1", "-o", f.to_str().unwrap()])), 0);
    }
    assert_eq!(
        fs::read(frames[0].join("frame_001.svg")).unwrap(),
        fs::read(frames[1].join("frame_001.svg")).unwrap()
    );
}
