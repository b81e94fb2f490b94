//! Exact enumeration of collinearity events among points moving with
//! constant velocity in the plane.

pub mod exact;
pub mod kinematics;
pub mod surfaces;
pub mod constructions;
pub mod events;
pub mod io;
pub mod par;
