use serde::Serialize;

use crate::exact::format_rational;
use crate::kinematics::KineticPoint;
use crate::surfaces::{classify_surface, surface_of_pair, Plane, SurfaceClass, SurfaceError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Coefficients {
    pub alpha0: String,
    pub alpha1: String,
    pub beta0: String,
    pub beta1: String,
    pub gamma0: String,
    pub gamma1: String,
    pub gamma2: String,
}

/// Plane `x*X + y*Y + t*T + c = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PlaneRecord {
    pub x: String,
    pub y: String,
    pub t: String,
    pub c: String,
}

impl From<&Plane> for PlaneRecord {
    fn from(p: &Plane) -> Self {
        PlaneRecord {
            x: format_rational(&p.x),
            y: format_rational(&p.y),
            t: format_rational(&p.t),
            c: format_rational(&p.c),
        }
    }
}

/// `F = (t - collision_time) * linear`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorRecord {
    pub collision_time: String,
    pub linear: PlaneRecord,
}

/// The pair surface `F = x(α0 + α1 t) + y(β0 + β1 t) + γ0 + γ1 t + γ2 t²`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurfaceReport {
    pub a: String,
    pub b: String,
    pub coefficients: Coefficients,
    pub classification: &'static str,
    pub plane: Option<PlaneRecord>,
    pub factor: Option<FactorRecord>,
}

pub fn surface_report(a: &KineticPoint, b: &KineticPoint) -> Result<SurfaceReport, SurfaceError> {
    let s = surface_of_pair(a, b)?;
    let class = classify_surface(a, b)?;
    let f = format_rational;
    let (plane, factor) = match &class {
        SurfaceClass::NonHorizontalPlane { plane } => (Some(plane.into()), None),
        SurfaceClass::HorizontalPlusNonHorizontalPlane { collision_time, plane } => (
            None,
            Some(FactorRecord {
                collision_time: f(collision_time),
                linear: plane.into(),
            }),
        ),
        SurfaceClass::HyperbolicParaboloid => (None, None),
    };
    Ok(SurfaceReport {
        a: a.id.clone(),
        b: b.id.clone(),
        coefficients: Coefficients {
            alpha0: f(&s.alpha[0]),
            alpha1: f(&s.alpha[1]),
            beta0: f(&s.beta[0]),
            beta1: f(&s.beta[1]),
            gamma0: f(&s.gamma[0]),
            gamma1: f(&s.gamma[1]),
            gamma2: f(&s.gamma[2]),
        },
        classification: class.name(),
        plane,
        factor,
    })
}
