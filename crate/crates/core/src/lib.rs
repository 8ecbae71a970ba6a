//! Occlusion-aware driving safety in the road-aligned frame.
//!
//! The library maintains a sound over-approximation of where an undetected
//! agent could be (the hidden set), approximates the closed-loop evasion game
//! with a finite family of bang-bang primitives (danger zones), and gates a
//! receding-horizon lattice planner on the resulting disjointness check: a
//! planned waypoint is safe iff no hidden state could already defeat every
//! evasive maneuver available from it. A two-mode executive switches between
//! open-loop planning and closed-loop evasion.
//!
//! The crate is `no_std`-compatible (with `alloc`); enable the `libm` feature
//! for builds without `std`. All types are plain values and every operation is
//! a pure function of its inputs, so everything can be evaluated speculatively
//! or in parallel.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod closed_loop;
pub mod dynamics;
pub mod executive;
pub mod geom;
pub mod hidden;
pub mod interval;
pub mod math;
pub mod perception;
pub mod planner;
pub mod safety;
pub mod world;

pub use dynamics::{ControlInput, EgoState, Footprint, Trajectory};
pub use hidden::{HiddenBox, HiddenSet};
pub use interval::{Interval, IntervalSet};
pub use perception::{FieldOfView, Observation};
// pub use safety::DangerZone; // restored when safety lands
pub use world::{Scenario, World};
