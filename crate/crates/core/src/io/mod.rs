//! File formats: scene JSON, event JSON and CSV, pair-surface JSON and SVG
//! snapshots.

mod events;
mod scene;
mod surface;
mod svg;
mod time;

pub use events::{event_records, events_to_csv, events_to_json, EventRecord};
pub use scene::{load_scene, parse_scene, scene_to_json, write_scene, SceneLoadError, SCENE_VERSION};
pub use surface::{surface_report, SurfaceReport};
pub use svg::{render_svg, Viewport};
pub use time::{parse_time, TimeParseError};
