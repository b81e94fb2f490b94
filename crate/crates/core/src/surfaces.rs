//! The surface of point-time pairs collinear with two kinetic points.
//!
//! For kinetic points `a` and `b` the surface is the zero set of
//! `F(x, y, t) = det[[x, y, 1], [x_a(t), y_a(t), 1], [x_b(t), y_b(t), 1]]`,
//! which expands to
//! `x (α0 + α1 t) + y (β0 + β1 t) + (γ0 + γ1 t + γ2 t²)`.
//! Equal velocities give a nonhorizontal plane, a collision at `t_c` splits
//! off the horizontal plane `t = t_c`, and skew trajectories give a
//! hyperbolic paraboloid.

use num_traits::Zero;

use crate::exact::{AlgebraicTime, FieldMismatch, QuadValue, Rational};
use crate::kinematics::{collision_time, Collision, KineticPoint, PlanePoint};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfacePolynomial {
    pub alpha: [Rational; 2],
    pub beta: [Rational; 2],
    pub gamma: [Rational; 3],
}

/// Plane `x*X + y*Y + t*T + c = 0` in `(X, Y, T)`-space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Plane {
    pub x: Rational,
    pub y: Rational,
    pub t: Rational,
    pub c: Rational,
}

impl Plane {
    pub fn is_horizontal(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn contains(&self, x: &Rational, y: &Rational, t: &Rational) -> bool {
        (&self.x * x + &self.y * y + &self.t * t + &self.c).is_zero()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SurfaceClass {
    /// Equal velocities: the trajectories span one nonhorizontal plane.
    NonHorizontalPlane { plane: Plane },
    /// The points collide at `collision_time`; the surface is the horizontal
    /// plane through the collision plus the plane spanned by both trajectories.
    HorizontalPlusNonHorizontalPlane { collision_time: Rational, plane: Plane },
    HyperbolicParaboloid,
}

impl SurfaceClass {
    pub fn name(&self) -> &'static str {
        match self {
            SurfaceClass::NonHorizontalPlane { .. } => "non_horizontal_plane",
            SurfaceClass::HorizontalPlusNonHorizontalPlane { .. } => "horizontal_plus_non_horizontal_plane",
            SurfaceClass::HyperbolicParaboloid => "hyperbolic_paraboloid",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SurfaceError {
    #[error("`{0}` and `{1}` have the same trajectory; the surface is undefined")]
    CoincidentTrajectories(String, String),
}

pub fn surface_of_pair(a: &KineticPoint, b: &KineticPoint) -> Result<SurfacePolynomial, SurfaceError> {
    if a.same_motion(b) {
        return Err(SurfaceError::CoincidentTrajectories(a.id.clone(), b.id.clone()));
    }
    let (xa, ya, ua, va) = (&a.pos.x, &a.pos.y, &a.vel.x, &a.vel.y);
    let (xb, yb, ub, vb) = (&b.pos.x, &b.pos.y, &b.vel.x, &b.vel.y);
    Ok(SurfacePolynomial {
        alpha: [ya - yb, va - vb],
        beta: [xb - xa, ub - ua],
        gamma: [
            xa * yb - xb * ya,
            xa * vb + ua * yb - xb * va - ub * ya,
            ua * vb - ub * va,
        ],
    })
}

impl SurfacePolynomial {
    /// True when `F` has no `x*t`, `y*t` or `t²` terms.
    pub fn is_linear(&self) -> bool {
        self.alpha[1].is_zero() && self.beta[1].is_zero() && self.gamma[2].is_zero()
    }

    /// The linear polynomial itself, when `F` is linear.
    pub fn as_plane(&self) -> Option<Plane> {
        self.is_linear().then(|| Plane {
            x: self.alpha[0].clone(),
            y: self.beta[0].clone(),
            t: self.gamma[1].clone(),
            c: self.gamma[0].clone(),
        })
    }

    /// Exact quotient `F / (t - t0)` when it is a polynomial (necessarily linear).
    pub fn divide_by_time_factor(&self, t0: &Rational) -> Option<Plane> {
        // x-coefficient α0 + α1 t must equal α1 (t - t0), likewise for y.
        if &self.alpha[0] + &self.alpha[1] * t0 != Rational::zero()
            || &self.beta[0] + &self.beta[1] * t0 != Rational::zero()
        {
            return None;
        }
        // γ2 t² + γ1 t + γ0 = (t - t0)(γ2 t + k) + remainder.
        let k = &self.gamma[1] + &self.gamma[2] * t0;
        let remainder = &self.gamma[0] + &k * t0;
        if !remainder.is_zero() {
            return None;
        }
        Some(Plane {
            x: self.alpha[1].clone(),
            y: self.beta[1].clone(),
            t: self.gamma[2].clone(),
            c: k,
        })
    }

    /// A horizontal plane `t = t0` contained in the zero set, if any.
    pub fn horizontal_component(&self) -> Option<Rational> {
        let candidate = if !self.alpha[1].is_zero() {
            -&self.alpha[0] / &self.alpha[1]
        } else if !self.beta[1].is_zero() {
            -&self.beta[0] / &self.beta[1]
        } else {
            return None;
        };
        self.divide_by_time_factor(&candidate).map(|_| candidate)
    }

    pub fn evaluate(&self, x: &QuadValue, y: &QuadValue, t: &QuadValue) -> Result<QuadValue, FieldMismatch> {
        let lin = |c: &[Rational; 2]| QuadValue::rational(c[0].clone()).checked_add(&t.scale(&c[1]));
        let tt = t.checked_mul(t)?;
        let gamma = QuadValue::rational(self.gamma[0].clone())
            .checked_add(&t.scale(&self.gamma[1]))?
            .checked_add(&tt.scale(&self.gamma[2]))?;
        x.checked_mul(&lin(&self.alpha)?)?
            .checked_add(&y.checked_mul(&lin(&self.beta)?)?)?
            .checked_add(&gamma)
    }

    pub fn contains(&self, p: &PlanePoint, t: &AlgebraicTime) -> Result<bool, FieldMismatch> {
        surface_contains(self, &p.x, &p.y, t)
    }
}

/// Exact membership test `F(x, y, t) = 0`.
pub fn surface_contains(
    s: &SurfacePolynomial,
    x: &QuadValue,
    y: &QuadValue,
    t: &AlgebraicTime,
) -> Result<bool, FieldMismatch> {
    Ok(s.evaluate(x, y, &QuadValue::from(t))?.is_zero())
}

pub fn classify_surface(a: &KineticPoint, b: &KineticPoint) -> Result<SurfaceClass, SurfaceError> {
    let poly = surface_of_pair(a, b)?;
    if a.vel == b.vel {
        let plane = poly.as_plane().expect("equal velocities give a linear surface");
        return Ok(SurfaceClass::NonHorizontalPlane { plane });
    }
    match collision_time(a, b) {
        Collision::At(t_c) => {
            let plane = poly
                .divide_by_time_factor(&t_c)
                .expect("colliding trajectories factor through t - t_c");
            Ok(SurfaceClass::HorizontalPlusNonHorizontalPlane {
                collision_time: t_c,
                plane,
            })
        }
        Collision::Never => Ok(SurfaceClass::HyperbolicParaboloid),
        Collision::Identical => unreachable!("rejected by surface_of_pair"),
    }
}
