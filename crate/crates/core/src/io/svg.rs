use std::fmt::Write;

use crate::events::CollinearityEvent;
use num_traits::ToPrimitive;

use crate::exact::{AlgebraicTime, Rational};
use crate::kinematics::Scene;

const SIZE: f64 = 640.0;
const MARGIN: f64 = 40.0;

/// World-space square shown in every snapshot of one render call.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Viewport {
    pub center_x: f64,
    pub center_y: f64,
    pub half_span: f64,
    /// World length of an arrow per unit of speed.
    pub arrow_scale: f64,
}

fn f(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

fn approx_positions(scene: &Scene, t: f64) -> Vec<(f64, f64)> {
    scene
        .points()
        .iter()
        .map(|p| {
            let x = f(&p.pos.x) + t * f(&p.vel.x);
            let y = f(&p.pos.y) + t * f(&p.vel.y);
            (x, y)
        })
        .collect()
}

impl Viewport {
    /// Smallest padded square containing every point at every time.
    pub fn fit(scene: &Scene, times: &[AlgebraicTime]) -> Viewport {
        let mut lo = (f64::INFINITY, f64::INFINITY);
        let mut hi = (f64::NEG_INFINITY, f64::NEG_INFINITY);
        for t in times {
            for (x, y) in approx_positions(scene, t.approx()) {
                lo = (lo.0.min(x), lo.1.min(y));
                hi = (hi.0.max(x), hi.1.max(y));
            }
        }
        if !lo.0.is_finite() {
            lo = (-1.0, -1.0);
            hi = (1.0, 1.0);
        }
        let half_span = ((hi.0 - lo.0).max(hi.1 - lo.1) / 2.0 * 1.1).max(1e-3);
        let max_speed = scene
            .points()
            .iter()
            .map(|p| f(&p.vel.x).hypot(f(&p.vel.y)))
            .fold(0.0, f64::max);
        Viewport {
            center_x: (lo.0 + hi.0) / 2.0,
            center_y: (lo.1 + hi.1) / 2.0,
            half_span,
            arrow_scale: if max_speed > 0.0 { 0.15 * half_span / max_speed } else { 0.0 },
        }
    }

    fn to_px(&self, x: f64, y: f64) -> (f64, f64) {
        let scale = (SIZE - 2.0 * MARGIN) / (2.0 * self.half_span);
        (
            SIZE / 2.0 + (x - self.center_x) * scale,
            SIZE / 2.0 - (y - self.center_y) * scale,
        )
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

/// SVG 1.1 snapshot at time `t`: labelled dots, velocity arrows, and a line
/// through the members of each event in `events` (expected to be the events
/// at `t`). Irrational times are drawn at their float approximation under a
/// visible watermark.
pub fn render_svg(scene: &Scene, t: &AlgebraicTime, events: &[CollinearityEvent], view: &Viewport) -> String {
    let pos = approx_positions(scene, t.approx());
    let mut s = String::new();
    let w = &mut s;
    writeln!(w, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        w,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    )
    .unwrap();
    writeln!(w, "<title>t = {}</title>", escape(&t.to_string())).unwrap();
    writeln!(
        w,
        r##"<defs><marker id="head" markerWidth="8" markerHeight="8" refX="7" refY="4" orient="auto"><path d="M0,0 L8,4 L0,8 z" fill="#4a6fa5"/></marker></defs>"##
    )
    .unwrap();
    writeln!(w, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();

    let reach = 4.0 * view.half_span;
    for e in events {
        let (a, b) = (pos[e.anchors.0], pos[e.anchors.1]);
        let (dx, dy) = (b.0 - a.0, b.1 - a.1);
        let len = dx.hypot(dy);
        if len == 0.0 {
            continue;
        }
        let (ux, uy) = (dx / len * reach, dy / len * reach);
        let p = view.to_px(a.0 - ux, a.1 - uy);
        let q = view.to_px(a.0 + ux, a.1 + uy);
        writeln!(
            w,
            r##"<line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="#c0392b" stroke-width="1.5"/>"##,
            p.0, p.1, q.0, q.1
        )
        .unwrap();
    }

    for (p, &(x, y)) in scene.points().iter().zip(&pos) {
        let from = view.to_px(x, y);
        let to = view.to_px(
            x + view.arrow_scale * f(&p.vel.x),
            y + view.arrow_scale * f(&p.vel.y),
        );
        if from != to {
            writeln!(
                w,
                r##"<line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="#4a6fa5" stroke-width="1" marker-end="url(#head)"/>"##,
                from.0, from.1, to.0, to.1
            )
            .unwrap();
        }
    }
    for (p, &(x, y)) in scene.points().iter().zip(&pos) {
        let (px, py) = view.to_px(x, y);
        writeln!(w, r#"<circle cx="{px:.3}" cy="{py:.3}" r="4" fill="black"/>"#).unwrap();
        writeln!(
            w,
            r#"<text x="{:.3}" y="{:.3}" font-family="sans-serif" font-size="11">{}</text>"#,
            px + 6.0,
            py - 6.0,
            escape(&p.id)
        )
        .unwrap();
    }

    writeln!(
        w,
        r#"<text x="10" y="20" font-family="sans-serif" font-size="13">t = {}</text>"#,
        escape(&t.to_string())
    )
    .unwrap();
    if !t.is_rational() {
        writeln!(
            w,
            r#"<text x="{}" y="{}" font-family="sans-serif" font-size="28" fill="red" fill-opacity="0.35" text-anchor="middle">approximate time {:.6}</text>"#,
            SIZE / 2.0,
            SIZE - 16.0,
            t.approx()
        )
        .unwrap();
    }
    writeln!(w, "</svg>").unwrap();
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::events::enumerate_events;
    use crate::exact::rat;
    use crate::kinematics::{KineticPoint, SceneMeta, Vec2};

    #[test]
    fn event_line_drawn_at_event_time() {
        let kp = |id: &str, p: (i64, i64), v: (i64, i64)| {
            KineticPoint::new(id, Vec2::new(rat(p.0), rat(p.1)), Vec2::new(rat(v.0), rat(v.1)))
        };
        let s = Scene::new(
            vec![kp("a", (0, 0), (0, 0)), kp("b", (0, 1), (1, 0)), kp("c", (4, 0), (0, 1))],
            SceneMeta::new(),
        )
        .unwrap();
        let t: AlgebraicTime = rat(2).into();
        let events: Vec<_> = enumerate_events(&s, 3).into_iter().filter(|e| e.time == t).collect();
        let view = Viewport::fit(&s, &[t.clone(), rat(0).into()]);
        let svg = render_svg(&s, &t, &events, &view);
        assert_eq!(svg.matches("<circle").count(), 3);
        assert_eq!(svg.matches(r##"stroke="#c0392b""##).count(), 1);
        assert!(!svg.contains("approximate"));
        assert_eq!(svg, render_svg(&s, &t, &events, &view));
    }
}
