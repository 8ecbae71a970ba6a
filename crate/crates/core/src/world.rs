//! Scenario definition and ground-truth evolution: lanes, conflict corridors
//! where hidden agents may exist, static occluders, and scripted agents.
//!
//! A corridor is a 1-D path for a potential undetected agent. Its coordinate
//! `s` is the signed distance of the agent's front to the corridor's conflict
//! region with the ego route; `s > 0` means not yet arrived, and agents only
//! move toward the conflict region (`ds/dt = -v`, `v >= 0`). Every corridor
//! knows how to map a coordinate to the rectangle the agent occupies in the
//! road-aligned frame, which is the single geometric primitive behind
//! detection, capture, and occupancy checks.

use alloc::string::String;
use alloc::vec::Vec;

use crate::dynamics::{EgoState, Footprint};
use crate::geom::{point_in_polygon, Point, Rect};
use crate::interval::Interval;

#[derive(Debug, Clone, PartialEq)]
pub struct Lane {
    pub id: String,
    pub l_min: f64,
    pub l_max: f64,
    /// +1 along increasing p, -1 against.
    pub direction: i8,
    pub speed_limit: f64,
}

impl Lane {
    pub fn center(&self) -> f64 {
        0.5 * (self.l_min + self.l_max)
    }

    pub fn l_range(&self) -> Interval {
        Interval::new(self.l_min, self.l_max)
    }
}

/// How corridor coordinates map into the road-aligned frame.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CorridorPath {
    /// Agents travel along +p in a lane; `s_origin` is the p value at s = 0
    /// (typically the downstream end of the route).
    SameLane { center_l: f64, s_origin: f64 },
    /// Agents travel along -p (oncoming); `p_exit` is the front's p at s = 0.
    Oncoming { center_l: f64, p_exit: f64 },
    /// Agents cross the road at `p_center`; `l_entry` is the front's lateral
    /// position at s = 0 and `from_positive_l` the approach side.
    Crossing { p_center: f64, l_entry: f64, from_positive_l: bool },
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConflictCorridor {
    pub id: String,
    pub path: CorridorPath,
    /// Coordinate extent where agents may exist; agents advancing below
    /// `s_range.lo` have irreversibly left the corridor.
    pub s_range: Interval,
    /// ODD speed bound for agents in this corridor, m/s.
    pub v_max: f64,
    /// ODD acceleration bound, m/s^2.
    pub a_max: f64,
    /// Default agent footprint: length along travel, width across.
    pub footprint: Footprint,
    /// Whether the hidden-pursuer game is played against this corridor;
    /// non-adversarial corridors are handled by reachable-occupancy avoidance.
    pub adversarial: bool,
}

impl ConflictCorridor {
    /// Rectangle occupied by an agent whose front is at coordinate `s`.
    pub fn rect_at(&self, s: f64, fp: &Footprint) -> Rect {
        match self.path {
            CorridorPath::SameLane { center_l, s_origin } => {
                let p_front = s_origin - s;
                Rect::new(
                    p_front - fp.length,
                    p_front,
                    center_l - fp.width / 2.0,
                    center_l + fp.width / 2.0,
                )
            }
            CorridorPath::Oncoming { center_l, p_exit } => {
                let p_front = p_exit + s;
                Rect::new(
                    p_front,
                    p_front + fp.length,
                    center_l - fp.width / 2.0,
                    center_l + fp.width / 2.0,
                )
            }
            CorridorPath::Crossing { p_center, l_entry, from_positive_l } => {
                let (l_lo, l_hi) = if from_positive_l {
                    (l_entry + s, l_entry + s + fp.length)
                } else {
                    (l_entry - s - fp.length, l_entry - s)
                };
                Rect::new(p_center - fp.width / 2.0, p_center + fp.width / 2.0, l_lo, l_hi)
            }
        }
    }

    /// Set of coordinates whose occupied rectangle touches `rect`; empty when
    /// the corridor band does not even overlap laterally (or longitudinally,
    /// for crossings).
    pub fn s_overlapping(&self, rect: &Rect, fp: &Footprint) -> Interval {
        let empty = Interval::new(1.0, 0.0);
        match self.path {
            CorridorPath::SameLane { center_l, s_origin } => {
                let band = Interval::new(center_l - fp.width / 2.0, center_l + fp.width / 2.0);
                if !band.intersects(&rect.l_range()) {
                    return empty;
                }
                Interval::new(s_origin - rect.p_hi - fp.length, s_origin - rect.p_lo)
            }
            CorridorPath::Oncoming { center_l, p_exit } => {
                let band = Interval::new(center_l - fp.width / 2.0, center_l + fp.width / 2.0);
                if !band.intersects(&rect.l_range()) {
                    return empty;
                }
                Interval::new(rect.p_lo - p_exit - fp.length, rect.p_hi - p_exit)
            }
            CorridorPath::Crossing { p_center, l_entry, from_positive_l } => {
                let band = Interval::new(p_center - fp.width / 2.0, p_center + fp.width / 2.0);
                if !band.intersects(&rect.p_range()) {
                    return empty;
                }
                if from_positive_l {
                    Interval::new(rect.l_lo - l_entry - fp.length, rect.l_hi - l_entry)
                } else {
                    Interval::new(l_entry - rect.l_hi - fp.length, l_entry - rect.l_lo)
                }
            }
        }
    }

    /// Bounding strip of everything the corridor can occupy, for field-of-view
    /// row scans.
    pub fn strip(&self) -> Rect {
        let a = self.rect_at(self.s_range.lo, &self.footprint);
        let b = self.rect_at(self.s_range.hi, &self.footprint);
        a.hull(&b)
    }
}

/// Static occluder: an opaque polygon, or a visibility profile that caps the
/// forward view as a function of the ego's progress (vertical road geometry
/// such as a summit, without 3-D modeling).
#[derive(Debug, Clone, PartialEq)]
pub enum Occluder {
    Polygon(Vec<Point>),
    /// Sorted `(p, d_vis)` breakpoints, linearly interpolated.
    VisibilityProfile(Vec<(f64, f64)>),
}

impl Occluder {
    pub fn d_vis(&self, p: f64) -> Option<f64> {
        match self {
            Occluder::Polygon(_) => None,
            Occluder::VisibilityProfile(points) => {
                if points.is_empty() {
                    return None;
                }
                if p <= points[0].0 {
                    return Some(points[0].1);
                }
                for w in points.windows(2) {
                    let (p0, d0) = w[0];
                    let (p1, d1) = w[1];
                    if p <= p1 {
                        let f = (p - p0) / (p1 - p0);
                        return Some(d0 + f * (d1 - d0));
                    }
                }
                Some(points.last().unwrap().1)
            }
        }
    }
}

/// Piecewise-constant speed profile entry: speed holds from `t_from` until the
/// next entry.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpeedPiece {
    pub t_from: f64,
    pub speed: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScriptedAgent {
    pub corridor: usize,
    /// Time the agent materializes at `s0`. Before this it does not exist.
    pub spawn_time: f64,
    pub s0: f64,
    pub profile: Vec<SpeedPiece>,
    pub footprint: Footprint,
}

impl ScriptedAgent {
    /// Corridor coordinate and speed at absolute time `t`, or None before
    /// spawn. Motion is toward the conflict region: s decreases.
    pub fn state_at(&self, t: f64) -> Option<(f64, f64)> {
        if t < self.spawn_time {
            return None;
        }
        let mut s = self.s0;
        let mut speed = self.profile.first().map_or(0.0, |p| p.speed);
        let mut t_cursor = self.spawn_time;
        for (i, piece) in self.profile.iter().enumerate() {
            let start = piece.t_from.max(self.spawn_time);
            let end = self
                .profile
                .get(i + 1)
                .map_or(f64::INFINITY, |next| next.t_from)
                .max(self.spawn_time);
            if t <= start {
                break;
            }
            let seg_end = end.min(t);
            if seg_end > t_cursor {
                s -= piece.speed * (seg_end - t_cursor.max(start));
                t_cursor = seg_end;
            }
            speed = piece.speed;
            if t <= end {
                break;
            }
        }
        Some((s, speed))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlanningParams {
    pub horizon_steps: usize,
    /// Planning step, s.
    pub dt: f64,
    /// Lattice resolution in p and l, m.
    pub grid_res: f64,
    pub node_budget: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OddParams {
    /// Ego speed limit, m/s.
    pub v_limit: f64,
    /// Sensor range, m.
    pub sensor_range: f64,
    /// Lateral extent of the drivable road.
    pub road_l: Interval,
    /// Progress value treated as route completion.
    pub route_end: f64,
    /// Ego emergency braking deceleration, m/s^2.
    pub a_brake_ego: f64,
    /// Assumed braking capability of other agents, m/s^2.
    pub a_brake_other: f64,
    /// Additional safe-distance margin, m.
    pub safe_margin: f64,
    /// Progress intervals where stopping is not safe (junction interiors).
    pub forbidden_p: Vec<Interval>,
    /// Simulation cutoff, s.
    pub timeout: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub name: String,
    pub lanes: Vec<Lane>,
    pub corridors: Vec<ConflictCorridor>,
    pub occluders: Vec<Occluder>,
    pub ego_start: EgoState,
    pub ego_footprint: Footprint,
    /// Index of the lane the ego starts in (its "own" lane).
    pub ego_lane: usize,
    pub agents: Vec<ScriptedAgent>,
    pub planning: PlanningParams,
    pub odd: OddParams,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ValidationError {
    pub message: String,
}

impl core::fmt::Display for ValidationError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}", self.message)
    }
}

#[cfg(feature = "std")]
impl std::error::Error for ValidationError {}

impl Scenario {
    /// Checks every static invariant and returns all violations at once.
    pub fn validate(&self) -> Result<(), Vec<ValidationError>> {
        let mut errors = Vec::new();
        let mut err = |message: String| errors.push(ValidationError { message });

        if self.lanes.is_empty() {
            err(String::from("scenario declares no lanes"));
        }
        for lane in &self.lanes {
            if lane.l_min >= lane.l_max {
                err(alloc::format!("lane {}: l_min >= l_max", lane.id));
            }
            if lane.speed_limit <= 0.0 {
                err(alloc::format!("lane {}: non-positive speed limit", lane.id));
            }
        }
        if self.ego_lane >= self.lanes.len() {
            err(String::from("ego lane index out of range"));
        }
        let mut adversarial = 0usize;
        for c in &self.corridors {
            if c.s_range.is_empty() {
                err(alloc::format!("corridor {}: empty s range", c.id));
            }
            if c.v_max < 0.0 {
                err(alloc::format!("corridor {}: negative v_max", c.id));
            }
            if c.adversarial {
                adversarial += 1;
            }
        }
        if adversarial > 1 {
            err(String::from("more than one adversarial corridor"));
        }
        for (i, a) in self.agents.iter().enumerate() {
            match self.corridors.get(a.corridor) {
                None => err(alloc::format!("agent {i}: dangling corridor index {}", a.corridor)),
                Some(c) => {
                    let mut prev: Option<&SpeedPiece> = None;
                    for piece in &a.profile {
                        if piece.speed < 0.0 || piece.speed > c.v_max + 1e-9 {
                            err(alloc::format!(
                                "agent {i}: speed {} outside corridor ODD bound {}",
                                piece.speed,
                                c.v_max
                            ));
                        }
                        if let Some(pv) = prev {
                            let dt = piece.t_from - pv.t_from;
                            if dt <= 0.0 {
                                err(alloc::format!("agent {i}: speed profile times not increasing"));
                            } else if (piece.speed - pv.speed).abs() > c.a_max * dt + 1e-9 {
                                err(alloc::format!(
                                    "agent {i}: speed jump {} -> {} over {dt} s exceeds a_max {}",
                                    pv.speed,
                                    piece.speed,
                                    c.a_max
                                ));
                            }
                        }
                        prev = Some(piece);
                    }
                }
            }
        }
        if self.planning.horizon_steps < 1 {
            err(String::from("planning horizon must be at least 1 step"));
        }
        if self.planning.dt <= 0.0 {
            err(String::from("planning dt must be positive"));
        }
        if self.ego_start.v_lon < 0.0 || self.ego_start.v_lon > self.odd.v_limit {
            err(String::from("ego initial speed outside [0, v_limit]"));
        }
        let ego_rect = self.ego_footprint.rect_at(self.ego_start.position());
        if !self.odd.road_l.contains(ego_rect.l_lo) || !self.odd.road_l.contains(ego_rect.l_hi) {
            err(String::from("ego spawned outside the road's lateral extent"));
        }
        for occ in &self.occluders {
            if let Occluder::Polygon(poly) = occ {
                if poly.len() < 3 {
                    err(String::from("occluder polygon has fewer than 3 vertices"));
                }
                if point_in_polygon(&self.ego_start.position(), poly) {
                    err(String::from("ego spawned inside an occluder"));
                }
            }
        }
        if errors.is_empty() {
            Ok(())
        } else {
            Err(errors)
        }
    }

    pub fn lane_of(&self, idx: usize) -> &Lane {
        &self.lanes[idx]
    }

    /// Index of the single adversarial corridor, if any.
    pub fn adversarial_corridor(&self) -> Option<usize> {
        self.corridors.iter().position(|c| c.adversarial)
    }
}

/// A live agent at a moment in time.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AgentSnapshot {
    /// Index into the world's combined agent list.
    pub agent_idx: usize,
    pub corridor: usize,
    pub s: f64,
    pub v: f64,
    pub footprint: Footprint,
    pub rect: Rect,
}

/// Immutable world snapshot: scenario plus current time plus any injected
/// agents or occluders (used by sweeps and fault-injection runs).
#[derive(Debug, Clone)]
pub struct World<'a> {
    pub scenario: &'a Scenario,
    pub t: f64,
    pub extra_agents: Vec<ScriptedAgent>,
    pub extra_occluders: Vec<Occluder>,
}

impl<'a> World<'a> {
    pub fn new(scenario: &'a Scenario) -> Self {
        World { scenario, t: 0.0, extra_agents: Vec::new(), extra_occluders: Vec::new() }
    }

    pub fn advance(&self, dt: f64) -> World<'a> {
        debug_assert!(dt > 0.0);
        World {
            scenario: self.scenario,
            t: self.t + dt,
            extra_agents: self.extra_agents.clone(),
            extra_occluders: self.extra_occluders.clone(),
        }
    }

    pub fn at_time(&self, t: f64) -> World<'a> {
        World {
            scenario: self.scenario,
            t,
            extra_agents: self.extra_agents.clone(),
            extra_occluders: self.extra_occluders.clone(),
        }
    }

    fn all_agents(&self) -> impl Iterator<Item = (usize, &ScriptedAgent)> {
        self.scenario.agents.iter().chain(self.extra_agents.iter()).enumerate()
    }

    /// Agents alive at the world's current time, with their occupied rects,
    /// clipped to agents still inside their corridor extent.
    pub fn agents(&self) -> Vec<AgentSnapshot> {
        self.agents_at(self.t)
    }

    pub fn agents_at(&self, t: f64) -> Vec<AgentSnapshot> {
        let mut out = Vec::new();
        for (idx, agent) in self.all_agents() {
            if let Some((s, v)) = agent.state_at(t) {
                let corridor = &self.scenario.corridors[agent.corridor];
                if s < corridor.s_range.lo - corridor.footprint.length - agent.footprint.length {
                    continue; // left the corridor
                }
                out.push(AgentSnapshot {
                    agent_idx: idx,
                    corridor: agent.corridor,
                    s,
                    v,
                    footprint: agent.footprint,
                    rect: corridor.rect_at(s, &agent.footprint),
                });
            }
        }
        out
    }

    pub fn occluder_polygons(&self) -> impl Iterator<Item = &Vec<Point>> {
        self.scenario
            .occluders
            .iter()
            .chain(self.extra_occluders.iter())
            .filter_map(|o| match o {
                Occluder::Polygon(poly) => Some(poly),
                Occluder::VisibilityProfile(_) => None,
            })
    }

    /// Forward view cap from visibility profiles at ego progress `p`, if any.
    pub fn visibility_cap(&self, p: f64) -> Option<f64> {
        self.scenario
            .occluders
            .iter()
            .chain(self.extra_occluders.iter())
            .filter_map(|o| o.d_vis(p))
            .fold(None, |acc: Option<f64>, d| Some(acc.map_or(d, |a| a.min(d))))
    }
}

#[cfg(test)]
pub(crate) mod tests_support {
    use super::*;

    /// Straight two-lane road, own-lane corridor (index 0, non-adversarial)
    /// plus an adversarial oncoming corridor (index 1). No occluders, no
    /// agents.
    pub(crate) fn empty_road_scenario() -> Scenario {
        Scenario {
            name: String::from("empty-road"),
            lanes: alloc::vec![
                Lane {
                    id: String::from("own"),
                    l_min: -4.0,
                    l_max: 0.0,
                    direction: 1,
                    speed_limit: 15.0,
                },
                Lane {
                    id: String::from("opp"),
                    l_min: 0.0,
                    l_max: 4.0,
                    direction: -1,
                    speed_limit: 15.0,
                },
            ],
            corridors: alloc::vec![
                ConflictCorridor {
                    id: String::from("own-ahead"),
                    path: CorridorPath::SameLane { center_l: -2.0, s_origin: 300.0 },
                    s_range: Interval::new(0.0, 300.0),
                    v_max: 15.0,
                    a_max: 8.0,
                    footprint: Footprint::new(4.7, 2.0),
                    adversarial: false,
                },
                ConflictCorridor {
                    id: String::from("oncoming"),
                    path: CorridorPath::Oncoming { center_l: 2.0, p_exit: -20.0 },
                    s_range: Interval::new(0.0, 320.0),
                    v_max: 15.0,
                    a_max: 8.0,
                    footprint: Footprint::new(4.7, 2.0),
                    adversarial: true,
                },
            ],
            occluders: Vec::new(),
            ego_start: EgoState::new(0.0, -2.0, 10.0, 0.0, 0.0),
            ego_footprint: Footprint::new(4.7, 2.0),
            ego_lane: 0,
            agents: Vec::new(),
            planning: PlanningParams { horizon_steps: 6, dt: 0.5, grid_res: 0.25, node_budget: 100_000 },
            odd: OddParams {
                v_limit: 15.0,
                sensor_range: 100.0,
                road_l: Interval::new(-4.0, 4.0),
                route_end: 300.0,
                a_brake_ego: 8.0,
                a_brake_other: 8.0,
                safe_margin: 0.0,
                forbidden_p: Vec::new(),
                timeout: 60.0,
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn toy_scenario() -> Scenario {
        Scenario {
            name: String::from("toy"),
            lanes: alloc::vec![
                Lane {
                    id: String::from("own"),
                    l_min: -4.0,
                    l_max: 0.0,
                    direction: 1,
                    speed_limit: 15.0,
                },
                Lane {
                    id: String::from("opp"),
                    l_min: 0.0,
                    l_max: 4.0,
                    direction: -1,
                    speed_limit: 15.0,
                },
            ],
            corridors: alloc::vec![ConflictCorridor {
                id: String::from("oncoming"),
                path: CorridorPath::Oncoming { center_l: 2.0, p_exit: -20.0 },
                s_range: Interval::new(0.0, 300.0),
                v_max: 15.0,
                a_max: 8.0,
                footprint: Footprint::new(4.7, 2.0),
                adversarial: true,
            }],
            occluders: Vec::new(),
            ego_start: EgoState::new(0.0, -2.0, 10.0, 0.0, 0.0),
            ego_footprint: Footprint::new(4.7, 2.0),
            ego_lane: 0,
            agents: alloc::vec![ScriptedAgent {
                corridor: 0,
                spawn_time: 0.0,
                s0: 120.0,
                profile: alloc::vec![SpeedPiece { t_from: 0.0, speed: 15.0 }],
                footprint: Footprint::new(4.7, 2.0),
            }],
            planning: PlanningParams { horizon_steps: 6, dt: 0.5, grid_res: 0.25, node_budget: 100_000 },
            odd: OddParams {
                v_limit: 15.0,
                sensor_range: 100.0,
                road_l: Interval::new(-4.0, 4.0),
                route_end: 300.0,
                a_brake_ego: 8.0,
                a_brake_other: 8.0,
                safe_margin: 0.0,
                forbidden_p: Vec::new(),
                timeout: 60.0,
            },
        }
    }

    #[test]
    fn validates_toy() {
        assert!(toy_scenario().validate().is_ok());
    }

    #[test]
    fn agent_motion_constant_speed() {
        let scenario = toy_scenario();
        let world = World::new(&scenario);
        // 15 m/s toward the conflict region: s = 120 - 15 t
        let agents = world.agents_at(0.5);
        assert_eq!(agents.len(), 1);
        assert!((agents[0].s - 112.5).abs() < 1e-12);
        // constant-speed kinematics from the spec examples
        let a = &scenario.agents[0];
        let (s, _) = a.state_at(0.5).unwrap();
        assert!((s - 112.5).abs() < 1e-12);
    }

    #[test]
    fn agent_piecewise_profile() {
        let mut scenario = toy_scenario();
        scenario.agents[0].profile = alloc::vec![
            SpeedPiece { t_from: 0.0, speed: 15.0 },
            SpeedPiece { t_from: 2.0, speed: 12.0 },
        ];
        let a = &scenario.agents[0];
        // 2 s at 15 then 1 s at 12: s = 120 - 30 - 12 = 78
        let (s, v) = a.state_at(3.0).unwrap();
        assert!((s - 78.0).abs() < 1e-12);
        assert_eq!(v, 12.0);
    }

    #[test]
    fn agent_before_spawn_absent() {
        let mut scenario = toy_scenario();
        scenario.agents[0].spawn_time = 5.0;
        assert!(scenario.agents[0].state_at(4.9).is_none());
        let (s, _) = scenario.agents[0].state_at(5.0).unwrap();
        assert_eq!(s, 120.0);
    }

    #[test]
    fn advance_is_pure_and_deterministic() {
        let scenario = toy_scenario();
        let w0 = World::new(&scenario);
        let w1 = w0.advance(0.5);
        let w2 = w0.advance(0.5);
        assert_eq!(w1.t, w2.t);
        assert_eq!(w1.agents(), w2.agents());
        assert_eq!(w0.t, 0.0); // original untouched
    }

    #[test]
    fn corridor_rect_roundtrip() {
        let scenario = toy_scenario();
        let c = &scenario.corridors[0];
        let fp = c.footprint;
        // oncoming front at p_exit + s
        let r = c.rect_at(50.0, &fp);
        assert!((r.p_lo - 30.0).abs() < 1e-12);
        assert!((r.p_hi - 34.7).abs() < 1e-12);
        // the rect's own s-overlap window contains 50
        let iv = c.s_overlapping(&r, &fp);
        assert!(iv.contains(50.0));
    }

    #[test]
    fn crossing_geometry() {
        let c = ConflictCorridor {
            id: String::from("cross"),
            path: CorridorPath::Crossing { p_center: 64.0, l_entry: 4.0, from_positive_l: true },
            s_range: Interval::new(-20.0, 200.0),
            v_max: 15.0,
            a_max: 8.0,
            footprint: Footprint::new(4.7, 2.0),
            adversarial: true,
        };
        let fp = c.footprint;
        // approaching: above the road
        let r = c.rect_at(10.0, &fp);
        assert!(r.l_lo >= 14.0 - 1e-12);
        // inside the junction: s negative moves the body across the road
        let r = c.rect_at(-6.0, &fp);
        assert!(r.l_lo < 0.0 && r.l_hi > -4.7);
        // ego footprint in the junction maps to an s window straddling entry
        let ego = Rect::new(62.0, 66.0, -3.0, -1.0);
        let iv = c.s_overlapping(&ego, &fp);
        assert!(!iv.is_empty() && iv.lo < 0.0);
    }

    #[test]
    fn visibility_profile_interpolates() {
        let occ = Occluder::VisibilityProfile(alloc::vec![(0.0, 120.0), (100.0, 40.0)]);
        assert!((occ.d_vis(50.0).unwrap() - 80.0).abs() < 1e-12);
        assert_eq!(occ.d_vis(-5.0).unwrap(), 120.0);
        assert_eq!(occ.d_vis(150.0).unwrap(), 40.0);
    }

    #[test]
    fn validation_catches_bad_agent_speed() {
        let mut scenario = toy_scenario();
        scenario.agents[0].profile[0].speed = 99.0;
        let errs = scenario.validate().unwrap_err();
        assert!(errs.iter().any(|e| e.message.contains("ODD bound")));
    }
}
