//! Double-integrator dynamics in the road-aligned frame: exact discrete
//! propagation, control admissibility, footprints, and trajectories.
//!
//! States are `(p, l, v_lon, v_lat)` with direct control of longitudinal and
//! lateral acceleration. The update is closed form: when the longitudinal
//! velocity would leave `[0, v_limit]` mid-step, the step is split at the
//! clamp time and position integrates the clamped profile, so trajectories
//! stay physically consistent for the danger-zone arithmetic downstream.

use alloc::vec::Vec;

use crate::geom::{Point, Rect};

/// Longitudinal acceleration bounds, m/s^2.
pub const A_LON_MIN: f64 = -8.0;
pub const A_LON_MAX: f64 = 4.0;
/// Friction-circle bound on total acceleration magnitude, m/s^2.
pub const A_TOTAL_MAX: f64 = 8.0;
/// Tolerance for admissibility checks, absorbing float rounding on the
/// friction circle.
const ADMISSIBLE_EPS: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct EgoState {
    /// Longitudinal progress along the reference path, m.
    pub p: f64,
    /// Lateral offset from the centerline, m.
    pub l: f64,
    /// Longitudinal velocity, m/s. Never negative.
    pub v_lon: f64,
    /// Lateral velocity, m/s.
    pub v_lat: f64,
    /// Absolute time, s.
    pub t: f64,
}

impl EgoState {
    pub fn new(p: f64, l: f64, v_lon: f64, v_lat: f64, t: f64) -> Self {
        EgoState { p, l, v_lon, v_lat, t }
    }

    pub fn position(&self) -> Point {
        Point::new(self.p, self.l)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ControlInput {
    pub a_lon: f64,
    pub a_lat: f64,
}

impl ControlInput {
    pub const ZERO: ControlInput = ControlInput { a_lon: 0.0, a_lat: 0.0 };

    pub fn new(a_lon: f64, a_lat: f64) -> Self {
        ControlInput { a_lon, a_lat }
    }
}

/// Axis-aligned footprint rectangle, centered on the agent's `(p, l)`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Footprint {
    pub length: f64,
    pub width: f64,
}

impl Footprint {
    pub fn new(length: f64, width: f64) -> Self {
        Footprint { length, width }
    }

    pub fn rect_at(&self, center: Point) -> Rect {
        Rect::centered(center, self.length, self.width)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum DynamicsError {
    /// Control violates the acceleration constraints.
    InadmissibleControl(ControlInput),
    /// Non-positive step duration.
    NonPositiveDt(f64),
}

impl core::fmt::Display for DynamicsError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            DynamicsError::InadmissibleControl(u) => {
                write!(f, "inadmissible control ({}, {})", u.a_lon, u.a_lat)
            }
            DynamicsError::NonPositiveDt(dt) => write!(f, "non-positive step duration {dt}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for DynamicsError {}

/// True iff `a_lon` is within its bounds and the total acceleration fits the
/// friction circle.
pub fn control_admissible(u: &ControlInput) -> bool {
    u.a_lon >= A_LON_MIN - ADMISSIBLE_EPS
        && u.a_lon <= A_LON_MAX + ADMISSIBLE_EPS
        && u.a_lon * u.a_lon + u.a_lat * u.a_lat <= A_TOTAL_MAX * A_TOTAL_MAX + ADMISSIBLE_EPS
}

/// One axis of the double integrator with velocity clamped to
/// `[v_min, v_max]`; the step is split at the clamp time so position is
/// integrated piecewise-exactly.
fn step_axis(x: f64, v: f64, a: f64, dt: f64, v_min: f64, v_max: f64) -> (f64, f64) {
    if a == 0.0 {
        let v = v.clamp(v_min, v_max);
        return (x + v * dt, v);
    }
    let bound = if a > 0.0 { v_max } else { v_min };
    let t_hit = (bound - v) / a;
    if t_hit >= dt {
        (x + v * dt + 0.5 * a * dt * dt, v + a * dt)
    } else {
        let t1 = t_hit.max(0.0);
        let x_mid = x + v * t1 + 0.5 * a * t1 * t1;
        (x_mid + bound * (dt - t1), bound)
    }
}

/// Exact discrete propagation under constant input for `dt` seconds.
/// Longitudinal velocity is clamped to `[0, v_limit]`; lateral velocity is
/// unconstrained by the dynamics (planners bound it through their input sets).
pub fn step(
    state: &EgoState,
    u: &ControlInput,
    dt: f64,
    v_limit: f64,
) -> Result<EgoState, DynamicsError> {
    if !control_admissible(u) {
        return Err(DynamicsError::InadmissibleControl(*u));
    }
    if dt <= 0.0 {
        return Err(DynamicsError::NonPositiveDt(dt));
    }
    let (p, v_lon) = step_axis(state.p, state.v_lon, u.a_lon, dt, 0.0, v_limit);
    let (l, v_lat) = step_axis(state.l, state.v_lat, u.a_lat, dt, f64::NEG_INFINITY, f64::INFINITY);
    Ok(EgoState { p, l, v_lon, v_lat, t: state.t + dt })
}

/// Distance covered from speed `v` to standstill under constant braking.
pub fn stopping_distance(v: f64, a_brake: f64) -> Result<f64, DynamicsError> {
    if a_brake <= 0.0 {
        return Err(DynamicsError::NonPositiveDt(a_brake));
    }
    Ok(v * v / (2.0 * a_brake))
}

/// Rectangle overlap between two footprints at the given poses; touching
/// boundaries count as overlap (conservative capture test).
pub fn footprints_overlap(pose_a: &Point, fp_a: &Footprint, pose_b: &Point, fp_b: &Footprint) -> bool {
    fp_a.rect_at(*pose_a).intersects(&fp_b.rect_at(*pose_b))
}

/// Time-stamped `(state, input)` samples at a fixed planning step. The input
/// stored with a sample is the one applied over the following interval;
/// `states.len() == inputs.len() + 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub dt: f64,
    pub states: Vec<EgoState>,
    pub inputs: Vec<ControlInput>,
}

impl Trajectory {
    /// Roll the dynamics forward from `x0` applying `inputs` in order.
    pub fn rollout(
        x0: EgoState,
        inputs: &[ControlInput],
        dt: f64,
        v_limit: f64,
    ) -> Result<Trajectory, DynamicsError> {
        let mut states = Vec::with_capacity(inputs.len() + 1);
        states.push(x0);
        let mut x = x0;
        for u in inputs {
            x = step(&x, u, dt, v_limit)?;
            states.push(x);
        }
        Ok(Trajectory { dt, states, inputs: inputs.to_vec() })
    }

    pub fn len_steps(&self) -> usize {
        self.inputs.len()
    }

    pub fn terminal(&self) -> &EgoState {
        self.states.last().expect("trajectory has at least the initial state")
    }

    /// Verify that consecutive states satisfy the exact update under the
    /// stored inputs and that every input is admissible.
    pub fn consistent(&self, v_limit: f64, tol: f64) -> bool {
        if self.states.len() != self.inputs.len() + 1 {
            return false;
        }
        for (i, u) in self.inputs.iter().enumerate() {
            if !control_admissible(u) {
                return false;
            }
            match step(&self.states[i], u, self.dt, v_limit) {
                Ok(next) => {
                    let got = &self.states[i + 1];
                    if (next.p - got.p).abs() > tol
                        || (next.l - got.l).abs() > tol
                        || (next.v_lon - got.v_lon).abs() > tol
                        || (next.v_lat - got.v_lat).abs() > tol
                    {
                        return false;
                    }
                }
                Err(_) => return false,
            }
        }
        true
    }
}
