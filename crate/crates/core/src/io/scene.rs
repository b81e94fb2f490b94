use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::exact::{format_rational, parse_rational, Rational};
use crate::kinematics::{KineticPoint, Scene, SceneError, SceneMeta, Vec2};

pub const SCENE_VERSION: u32 = 1;

#[derive(Debug, thiserror::Error)]
pub enum SceneLoadError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{field}: {message}")]
    Field { field: String, message: String },
    #[error("unsupported scene version {0} (expected {SCENE_VERSION})")]
    Version(u32),
    #[error(transparent)]
    Scene(#[from] SceneError),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawScene {
    version: u32,
    points: Vec<RawPoint>,
    #[serde(default)]
    meta: SceneMeta,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPoint {
    id: String,
    pos: [String; 2],
    vel: [String; 2],
}

fn field(index: usize, name: &str, axis: usize, text: &str) -> Result<Rational, SceneLoadError> {
    parse_rational(text).map_err(|e| SceneLoadError::Field {
        field: format!("points[{index}].{name}[{axis}]"),
        message: format!("`{text}`: {e}"),
    })
}

/// Parses scene JSON. Coordinates may be any `num/den` or integer string and
/// are reduced on load.
pub fn parse_scene(text: &str) -> Result<Scene, SceneLoadError> {
    let raw: RawScene = serde_json::from_str(text).map_err(|e| SceneLoadError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    if raw.version != SCENE_VERSION {
        return Err(SceneLoadError::Version(raw.version));
    }
    let mut points = Vec::with_capacity(raw.points.len());
    for (i, p) in raw.points.iter().enumerate() {
        if p.id.is_empty() {
            return Err(SceneLoadError::Field {
                field: format!("points[{i}].id"),
                message: "empty id".into(),
            });
        }
        let pos = Vec2::new(field(i, "pos", 0, &p.pos[0])?, field(i, "pos", 1, &p.pos[1])?);
        let vel = Vec2::new(field(i, "vel", 0, &p.vel[0])?, field(i, "vel", 1, &p.vel[1])?);
        points.push(KineticPoint::new(p.id.clone(), pos, vel));
    }
    Ok(Scene::new(points, raw.meta)?)
}

pub fn load_scene(path: &Path) -> Result<Scene, SceneLoadError> {
    let text = fs::read_to_string(path).map_err(|source| SceneLoadError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_scene(&text)
}

/// Canonical pretty-printed scene JSON with a trailing newline.
pub fn scene_to_json(scene: &Scene) -> String {
    let raw = RawScene {
        version: SCENE_VERSION,
        points: scene
            .points()
            .iter()
            .map(|p| RawPoint {
                id: p.id.clone(),
                pos: [format_rational(&p.pos.x), format_rational(&p.pos.y)],
                vel: [format_rational(&p.vel.x), format_rational(&p.vel.y)],
            })
            .collect(),
        meta: scene.meta().clone(),
    };
    let mut out = serde_json::to_string_pretty(&raw).expect("scene serializes");
    out.push('\n');
    out
}

pub fn write_scene(scene: &Scene, path: &Path) -> std::io::Result<()> {
    fs::write(path, scene_to_json(scene))
}
