use std::fs;
use std::io::Write;
use std::path::Path;

use kinetic_collinear::constructions::{
    default_certificate_time, generate as build, verify_tight_certificate, Construction, ConstructionParams,
    DEFAULT_COORD_BOUND,
};
use kinetic_collinear::events::{
    audit_events, brute_force_events, enumerate_events, OracleError, DEFAULT_ORACLE_CAP,
};
use kinetic_collinear::io::{
    events_to_csv, events_to_json, load_scene, parse_time, render_svg, scene_to_json, surface_report, Viewport,
};
use kinetic_collinear::kinematics::Scene;
use serde_json::json;

pub struct Failure {
    pub code: u8,
    pub message: String,
}

const USAGE: u8 = 2;
const INPUT: u8 = 1;
const VERIFY: u8 = 3;

fn fail(code: u8, message: impl ToString) -> Failure {
    Failure { code, message: message.to_string() }
}

type Outcome = Result<(), Failure>;

fn load(path: &Path) -> Result<Scene, Failure> {
    load_scene(path).map_err(|e| fail(INPUT, format!("{}: {e}", path.display())))
}

fn emit(text: &str) -> Outcome {
    std::io::stdout()
        .write_all(text.as_bytes())
        .map_err(|e| fail(INPUT, format!("cannot write output: {e}")))
}

pub fn generate(
    construction: &str,
    n: usize,
    k: Option<usize>,
    precision_bits: u32,
    seed: u64,
    output: Option<&Path>,
) -> Outcome {
    let construction: Construction = construction.parse().map_err(|e| fail(USAGE, e))?;
    let params = ConstructionParams {
        construction,
        n,
        k,
        precision_bits,
        seed,
        coord_bound: DEFAULT_COORD_BOUND,
    };
    let scene = build(&params).map_err(|e| fail(USAGE, e))?;
    let text = scene_to_json(&scene);
    match output {
        Some(path) => {
            fs::write(path, text).map_err(|e| fail(INPUT, format!("cannot write {}: {e}", path.display())))?;
            println!("{construction} n={} -> {}", scene.len(), path.display());
            Ok(())
        }
        None => emit(&text),
    }
}

pub fn events(path: &Path, kmin: usize, csv: bool) -> Outcome {
    let scene = load(path)?;
    let events = enumerate_events(&scene, kmin);
    emit(&if csv { events_to_csv(&scene, &events) } else { events_to_json(&scene, &events) })
}

pub fn count(path: &Path, k: usize) -> Outcome {
    let scene = load(path)?;
    println!("{}", enumerate_events(&scene, k).len());
    Ok(())
}

pub fn pair_surface(path: &Path, a: &str, b: &str) -> Outcome {
    let scene = load(path)?;
    let point = |id: &str| scene.get(id).ok_or_else(|| fail(USAGE, format!("no point with id `{id}`")));
    let report = surface_report(point(a)?, point(b)?).map_err(|e| fail(USAGE, e))?;
    emit(&format!("{}\n", serde_json::to_string_pretty(&report).expect("report serializes")))
}

pub fn verify(path: &Path, k: usize, oracle: bool) -> Outcome {
    let scene = load(path)?;
    let oracle_events = if oracle {
        match brute_force_events(&scene, None, DEFAULT_ORACLE_CAP) {
            Ok(events) => Some(events),
            Err(e @ OracleError::TooLarge { .. }) => return Err(fail(USAGE, e)),
        }
    } else {
        None
    };
    let events = enumerate_events(&scene, 3);
    let audit = audit_events(&scene, &events, k);
    let mut pass = audit.pass;

    let mut report = serde_json::to_value(&audit).expect("audit serializes");
    report["oracle"] = match &oracle_events {
        Some(expected) => {
            let equal = *expected == events;
            pass &= equal;
            json!({ "equal": equal, "oracle_event_count": expected.len() })
        }
        None => serde_json::Value::Null,
    };
    report["certificate"] = match verify_tight_certificate(&scene, &default_certificate_time()) {
        Ok(cert) => {
            pass &= cert.pass;
            serde_json::to_value(cert).expect("certificate serializes")
        }
        Err(_) => serde_json::Value::Null,
    };
    report["pass"] = json!(pass);
    emit(&format!("{}\n", serde_json::to_string_pretty(&report).expect("report serializes")))?;
    if pass {
        Ok(())
    } else {
        Err(fail(VERIFY, "verification failed"))
    }
}

pub fn render(path: &Path, times: &[String], dir: &Path) -> Outcome {
    let scene = load(path)?;
    let times = times
        .iter()
        .map(|t| parse_time(t).map_err(|e| fail(USAGE, e)))
        .collect::<Result<Vec<_>, _>>()?;
    if times.is_empty() {
        return Err(fail(USAGE, "--times needs at least one value"));
    }
    fs::create_dir_all(dir).map_err(|e| fail(INPUT, format!("cannot create {}: {e}", dir.display())))?;
    let view = Viewport::fit(&scene, &times);
    let all = enumerate_events(&scene, 3);
    for (i, t) in times.iter().enumerate() {
        let active: Vec<_> = all.iter().filter(|e| e.time == *t).cloned().collect();
        let file = dir.join(format!("frame_{i:03}.svg"));
        fs::write(&file, render_svg(&scene, t, &active, &view))
            .map_err(|e| fail(INPUT, format!("cannot write {}: {e}", file.display())))?;
        let note = if t.is_rational() { "" } else { " (approximate)" };
        println!("t = {t}{note}: {} event line(s) -> {}", active.len(), file.display());
    }
    Ok(())
}
