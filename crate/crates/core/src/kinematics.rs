//! Kinetic points, scenes, and the collinearity polynomial of a triple.
//!
//! A point moving with constant velocity traces a nonhorizontal line in
//! `(x, y, t)`-space. Three points are collinear at time `t` exactly when the
//! orientation determinant of their positions vanishes; as a function of `t`
//! that determinant is a polynomial of degree at most two.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::Zero;

use crate::exact::{format_rational, solve_quadratic, AlgebraicTime, QuadValue, Rational};

/// Planar vector with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vec2 {
    pub x: Rational,
    pub y: Rational,
}

impl Vec2 {
    pub fn new(x: Rational, y: Rational) -> Self {
        Vec2 { x, y }
    }

    pub fn zero() -> Self {
        Vec2::new(Rational::zero(), Rational::zero())
    }

    pub fn sub(&self, other: &Vec2) -> Vec2 {
        Vec2::new(&self.x - &other.x, &self.y - &other.y)
    }

    pub fn cross(&self, other: &Vec2) -> Rational {
        &self.x * &other.y - &self.y * &other.x
    }

    pub fn dot(&self, other: &Vec2) -> Rational {
        &self.x * &other.x + &self.y * &other.y
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }
}

impl fmt::Display for Vec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", format_rational(&self.x), format_rational(&self.y))
    }
}

/// A point moving with constant velocity: `pos + t * vel`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KineticPoint {
    pub id: String,
    pub pos: Vec2,
    pub vel: Vec2,
}

impl KineticPoint {
    pub fn new(id: impl Into<String>, pos: Vec2, vel: Vec2) -> Self {
        KineticPoint {
            id: id.into(),
            pos,
            vel,
        }
    }

    /// Same motion (position and velocity) as `other`, ignoring ids.
    pub fn same_motion(&self, other: &KineticPoint) -> bool {
        self.pos == other.pos && self.vel == other.vel
    }

    pub fn position_at(&self, t: &AlgebraicTime) -> PlanePoint {
        let t = QuadValue::from(t);
        PlanePoint {
            x: &QuadValue::rational(self.pos.x.clone()) + &t.scale(&self.vel.x),
            y: &QuadValue::rational(self.pos.y.clone()) + &t.scale(&self.vel.y),
        }
    }

    pub fn position_at_rational(&self, t: &Rational) -> Vec2 {
        Vec2::new(&self.pos.x + t * &self.vel.x, &self.pos.y + t * &self.vel.y)
    }
}

/// A point whose coordinates lie in Q or a real quadratic field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanePoint {
    pub x: QuadValue,
    pub y: QuadValue,
}

impl PlanePoint {
    pub fn rational(v: &Vec2) -> Self {
        PlanePoint {
            x: QuadValue::rational(v.x.clone()),
            y: QuadValue::rational(v.y.clone()),
        }
    }
}

/// Exact position of `p` at time `t`.
pub fn position_at(p: &KineticPoint, t: &AlgebraicTime) -> PlanePoint {
    p.position_at(t)
}

/// Orientation determinant `(b - a) x (c - a)`; zero iff the points are collinear.
pub fn orientation(a: &PlanePoint, b: &PlanePoint, c: &PlanePoint) -> QuadValue {
    let abx = &b.x - &a.x;
    let aby = &b.y - &a.y;
    let acx = &c.x - &a.x;
    let acy = &c.y - &a.y;
    &(&abx * &acy) - &(&aby * &acx)
}

/// Coefficients `(c2, c1, c0)` of `det[[x_i(t), y_i(t), 1]]` for rows a, b, c.
pub fn collinearity_polynomial(
    a: &KineticPoint,
    b: &KineticPoint,
    c: &KineticPoint,
) -> (Rational, Rational, Rational) {
    let dp1 = b.pos.sub(&a.pos);
    let dv1 = b.vel.sub(&a.vel);
    let dp2 = c.pos.sub(&a.pos);
    let dv2 = c.vel.sub(&a.vel);
    let c2 = dv1.cross(&dv2);
    let c1 = dp1.cross(&dv2) + dv1.cross(&dp2);
    let c0 = dp1.cross(&dp2);
    (c2, c1, c0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TripleKind {
    AlwaysCollinear,
    CollinearAt,
    NeverCollinear,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleClassification {
    pub kind: TripleKind,
    /// Distinct collinearity times, ascending; empty unless `CollinearAt`.
    pub times: Vec<AlgebraicTime>,
    /// The single time is a double root (touches collinearity without crossing).
    pub tangential: bool,
    /// All three trajectories are the same line.
    pub coincident_all: bool,
}

pub fn classify_triple(a: &KineticPoint, b: &KineticPoint, c: &KineticPoint) -> TripleClassification {
    let (c2, c1, c0) = collinearity_polynomial(a, b, c);
    let report = solve_quadratic(&c2, &c1, &c0);
    let kind = if report.identically_zero {
        TripleKind::AlwaysCollinear
    } else if report.roots.is_empty() {
        TripleKind::NeverCollinear
    } else {
        TripleKind::CollinearAt
    };
    TripleClassification {
        kind,
        times: report.roots,
        tangential: report.double_root,
        coincident_all: a.same_motion(b) && b.same_motion(c),
    }
}

/// When two kinetic points occupy the same location.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Collision {
    Never,
    At(Rational),
    /// Same position and velocity; the points coincide at all times.
    Identical,
}

pub fn collision_time(a: &KineticPoint, b: &KineticPoint) -> Collision {
    let dp = a.pos.sub(&b.pos);
    let dv = b.vel.sub(&a.vel);
    if dv.is_zero() {
        return if dp.is_zero() {
            Collision::Identical
        } else {
            Collision::Never
        };
    }
    // dp = t * dv must hold in both coordinates.
    let t = if !dv.x.is_zero() {
        &dp.x / &dv.x
    } else {
        &dp.y / &dv.y
    };
    if &t * &dv.x == dp.x && &t * &dv.y == dp.y {
        Collision::At(t)
    } else {
        Collision::Never
    }
}

/// Free-form scene annotations.
pub type SceneMeta = BTreeMap<String, serde_json::Value>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SceneError {
    #[error("duplicate point id `{0}`")]
    DuplicateId(String),
    #[error("points `{first}` and `{second}` have identical position and velocity")]
    DuplicateMotion { first: String, second: String },
}

/// An ordered set of kinetic points with unique ids and distinct motions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scene {
    points: Vec<KineticPoint>,
    meta: SceneMeta,
}

impl Scene {
    pub fn new(points: Vec<KineticPoint>, meta: SceneMeta) -> Result<Self, SceneError> {
        let mut ids: HashMap<&str, usize> = HashMap::with_capacity(points.len());
        let mut motions: HashMap<(&Vec2, &Vec2), &str> = HashMap::with_capacity(points.len());
        for (i, p) in points.iter().enumerate() {
            if ids.insert(p.id.as_str(), i).is_some() {
                return Err(SceneError::DuplicateId(p.id.clone()));
            }
            if let Some(first) = motions.insert((&p.pos, &p.vel), p.id.as_str()) {
                return Err(SceneError::DuplicateMotion {
                    first: first.to_string(),
                    second: p.id.clone(),
                });
            }
        }
        Ok(Scene { points, meta })
    }

    pub fn points(&self) -> &[KineticPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn meta(&self) -> &SceneMeta {
        &self.meta
    }

    pub fn meta_mut(&mut self) -> &mut SceneMeta {
        &mut self.meta
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.points.iter().position(|p| p.id == id)
    }

    pub fn get(&self, id: &str) -> Option<&KineticPoint> {
        self.points.iter().find(|p| p.id == id)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio};

    fn kp(id: &str, pos: (i64, i64), vel: (i64, i64)) -> KineticPoint {
        KineticPoint::new(
            id,
            Vec2::new(rat(pos.0), rat(pos.1)),
            Vec2::new(rat(vel.0), rat(vel.1)),
        )
    }

    fn quad(p: i64, q: i64, d: i64, r: i64) -> AlgebraicTime {
        AlgebraicTime::from_parts(p.into(), q.into(), d.into(), r.into()).unwrap()
    }

    #[test]
    fn positions() {
        let p = kp("p", (0, 0), (1, 0));
        assert_eq!(p.position_at(&rat(2).into()), PlanePoint::rational(&Vec2::new(rat(2), rat(0))));
        let s = kp("s", (1, 1), (0, 0));
        assert_eq!(s.position_at(&quad(3, 1, 5, 2)), PlanePoint::rational(&Vec2::new(rat(1), rat(1))));
        let d = kp("d", (0, 0), (1, 1));
        let root2 = QuadValue::new(rat(0), rat(1), 2.into());
        assert_eq!(
            d.position_at(&quad(0, 1, 2, 1)),
            PlanePoint {
                x: root2.clone(),
                y: root2
            }
        );
    }

    #[test]
    fn polynomial_examples() {
        let a = kp("a", (0, 0), (0, 0));
        let b = kp("b", (0, 1), (1, 0));
        let c = kp("c", (4, 0), (0, 1));
        assert_eq!(collinearity_polynomial(&a, &b, &c), (rat(1), rat(0), rat(-4)));

        let s = [kp("a", (0, 0), (0, 0)), kp("b", (1, 0), (0, 0)), kp("c", (2, 0), (0, 0))];
        assert_eq!(collinearity_polynomial(&s[0], &s[1], &s[2]), (rat(0), rat(0), rat(0)));

        let b = kp("b", (1, 0), (0, 0));
        let c = kp("c", (2, 1), (0, -1));
        assert_eq!(collinearity_polynomial(&a, &b, &c), (rat(0), rat(-1), rat(1)));
    }

    #[test]
    fn classification_examples() {
        let a = kp("a", (0, 0), (0, 0));
        let b = kp("b", (0, 1), (1, 0));
        let c = kp("c", (4, 0), (0, 1));
        let cls = classify_triple(&a, &b, &c);
        assert_eq!(cls.kind, TripleKind::CollinearAt);
        assert_eq!(cls.times, vec![rat(-2).into(), rat(2).into()]);
        assert!(!cls.tangential && !cls.coincident_all);

        let cls = classify_triple(&kp("a", (0, 0), (0, 0)), &kp("b", (1, 0), (0, 0)), &kp("c", (0, 1), (0, 0)));
        assert_eq!(cls.kind, TripleKind::NeverCollinear);
        assert!(cls.times.is_empty());

        let cls = classify_triple(&kp("a", (0, 0), (1, 1)), &kp("b", (1, 1), (1, 1)), &kp("c", (2, 2), (1, 1)));
        assert_eq!(cls.kind, TripleKind::AlwaysCollinear);
    }

    #[test]
    fn tangential_triple() {
        // All three meet at the origin at t = 0 and the determinant is t^2.
        let a = kp("a", (0, 0), (0, 0));
        let b = kp("b", (0, 0), (1, 0));
        let c = kp("c", (0, 0), (0, 1));
        assert_eq!(collinearity_polynomial(&a, &b, &c), (rat(1), rat(0), rat(0)));
        let cls = classify_triple(&a, &b, &c);
        assert!(cls.tangential);
        assert_eq!(cls.times, vec![AlgebraicTime::from(rat(0))]);
    }

    #[test]
    fn collisions() {
        assert_eq!(collision_time(&kp("a", (0, 0), (1, 0)), &kp("b", (2, 0), (0, 0))), Collision::At(rat(2)));
        assert_eq!(collision_time(&kp("a", (0, 0), (1, 1)), &kp("b", (1, 0), (1, 1))), Collision::Never);
        assert_eq!(collision_time(&kp("a", (0, 0), (1, 0)), &kp("b", (0, 1), (1, 0))), Collision::Never);
        // Crossing paths at different times.
        assert_eq!(collision_time(&kp("a", (0, 0), (1, 0)), &kp("b", (2, -1), (0, 1))), Collision::Never);
        assert_eq!(collision_time(&kp("a", (1, 1), (0, 0)), &kp("b", (1, 1), (0, 0))), Collision::Identical);
        let a = KineticPoint::new("a", Vec2::new(ratio(1, 3), rat(0)), Vec2::new(rat(1), rat(2)));
        let b = KineticPoint::new("b", Vec2::new(rat(0), ratio(-2, 3)), Vec2::new(rat(2), rat(4)));
        let Collision::At(t) = collision_time(&a, &b) else {
            panic!("expected collision")
        };
        assert_eq!(a.position_at_rational(&t), b.position_at_rational(&t));
    }

    #[test]
    fn scene_rejects_duplicates() {
        let err = Scene::new(vec![kp("a", (0, 0), (1, 0)), kp("a", (1, 0), (1, 0))], SceneMeta::new()).unwrap_err();
        assert_eq!(err, SceneError::DuplicateId("a".into()));
        let err = Scene::new(vec![kp("a", (0, 0), (1, 0)), kp("b", (0, 0), (1, 0))], SceneMeta::new()).unwrap_err();
        assert_eq!(
            err,
            SceneError::DuplicateMotion {
                first: "a".into(),
                second: "b".into()
            }
        );
    }
}
