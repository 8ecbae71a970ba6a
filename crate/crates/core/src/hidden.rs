//! Hidden-set maintenance: where an undetected agent could be.
//!
//! Per corridor the hidden set is a union of boxes `{s in [s_lo, s_hi], v in
//! [0, v_ub]}`. Propagation advances the fast edge toward the conflict region
//! and leaves the slow edge in place (the worst-case laggard may be stopped);
//! pruning subtracts everything a sensing tick proved empty; the velocity
//! bound tracker tightens `v_ub` for regions whose emptiness history rules
//! out fast entrants. All operations preserve the soundness direction: the
//! true state of any consistent undetected agent stays inside the set.

use alloc::vec::Vec;

use crate::interval::{Interval, IntervalSet};
use crate::math;
use crate::perception::{FieldOfView, Observation};
use crate::world::World;

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct HiddenBox {
    pub s_lo: f64,
    pub s_hi: f64,
    /// Velocity upper bound for agents in this box, m/s.
    pub v_ub: f64,
}

impl HiddenBox {
    pub fn interval(&self) -> Interval {
        Interval::new(self.s_lo, self.s_hi)
    }

    pub fn len(&self) -> f64 {
        (self.s_hi - self.s_lo).max(0.0)
    }
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct HiddenSet {
    pub t: f64,
    /// Boxes per corridor, disjoint and sorted by `s_lo`.
    pub corridors: Vec<Vec<HiddenBox>>,
}

impl HiddenSet {
    pub fn empty(t: f64, n_corridors: usize) -> Self {
        HiddenSet { t, corridors: alloc::vec![Vec::new(); n_corridors] }
    }

    pub fn is_empty(&self) -> bool {
        self.corridors.iter().all(|c| c.is_empty())
    }

    pub fn boxes(&self, corridor: usize) -> &[HiddenBox] {
        &self.corridors[corridor]
    }

    /// True iff the given corridor state lies inside the set (soundness
    /// probes index the set with ground-truth agent states).
    pub fn contains(&self, corridor: usize, s: f64, v: f64) -> bool {
        self.corridors[corridor]
            .iter()
            .any(|b| s >= b.s_lo && s <= b.s_hi && v >= 0.0 && v <= b.v_ub)
    }

    /// Occupied coordinate windows per corridor, dropping velocity.
    pub fn coordinate_set(&self, corridor: usize) -> IntervalSet {
        let mut out = IntervalSet::empty();
        for b in &self.corridors[corridor] {
            out.insert(b.interval());
        }
        out
    }
}

fn merge_boxes(mut boxes: Vec<HiddenBox>) -> Vec<HiddenBox> {
    boxes.sort_by(|a, b| a.s_lo.partial_cmp(&b.s_lo).unwrap());
    let mut out: Vec<HiddenBox> = Vec::with_capacity(boxes.len());
    for b in boxes {
        if b.s_lo > b.s_hi {
            continue;
        }
        if let Some(last) = out.last_mut() {
            if b.s_lo <= last.s_hi {
                last.s_hi = last.s_hi.max(b.s_hi);
                last.v_ub = last.v_ub.max(b.v_ub);
                continue;
            }
        }
        out.push(b);
    }
    out
}

/// Hidden set at first sensing: per corridor, everything not visible and not
/// occupied by a detected agent, at the full ODD velocity range.
pub fn initialize_hidden(world: &World, obs: &Observation) -> HiddenSet {
    let scenario = world.scenario;
    let mut corridors = Vec::with_capacity(scenario.corridors.len());
    for (ci, corridor) in scenario.corridors.iter().enumerate() {
        let mut occupied = IntervalSet::from_interval(corridor.s_range);
        occupied = occupied.subtract_set(obs.fov.corridor_visible(ci));
        for det in &obs.detections {
            let rect = scenario.corridors[det.corridor].rect_at(det.s, &det.footprint);
            let window = corridor.s_overlapping(&rect, &corridor.footprint);
            occupied = occupied.subtract(&window);
        }
        let boxes = occupied
            .iter()
            .map(|iv| HiddenBox { s_lo: iv.lo, s_hi: iv.hi, v_ub: corridor.v_max })
            .collect();
        corridors.push(boxes);
    }
    HiddenSet { t: obs.t, corridors }
}

/// Forward reach-avoid propagation without observations: every box's fast
/// edge advances (piecewise-exact, capped at the ODD speed), the slow edge
/// stays, and the velocity bound grows with the acceleration headroom.
pub fn propagate_hidden(h: &HiddenSet, dt: f64, world: &World) -> HiddenSet {
    debug_assert!(dt > 0.0);
    let scenario = world.scenario;
    let mut corridors = Vec::with_capacity(h.corridors.len());
    for (ci, boxes) in h.corridors.iter().enumerate() {
        let c = &scenario.corridors[ci];
        let mut out = Vec::with_capacity(boxes.len());
        for b in boxes {
            // v_ub = 0 only arises from emptiness evidence (see
            // refine_velocity_bound); such a region holds no undetected agent
            // and its extent stays put. Otherwise the fastest member may
            // accelerate through the whole step.
            let advance = if b.v_ub <= 0.0 {
                0.0
            } else {
                math::max_advance(b.v_ub, c.a_max, c.v_max, dt)
            };
            out.push(HiddenBox {
                s_lo: (b.s_lo - advance).max(c.s_range.lo),
                s_hi: b.s_hi,
                v_ub: (b.v_ub + c.a_max * dt).min(c.v_max),
            });
        }
        corridors.push(merge_boxes(out));
    }
    HiddenSet { t: h.t + dt, corridors }
}

/// Subtract per-corridor visible windows, splitting boxes as needed.
pub fn prune_by_windows(h: &HiddenSet, windows: &[IntervalSet]) -> HiddenSet {
    let mut corridors = Vec::with_capacity(h.corridors.len());
    for (ci, boxes) in h.corridors.iter().enumerate() {
        let mut out = Vec::new();
        for b in boxes {
            let mut remaining = IntervalSet::from_interval(b.interval());
            remaining = remaining.subtract_set(&windows[ci]);
            for iv in remaining.iter() {
                out.push(HiddenBox { s_lo: iv.lo, s_hi: iv.hi, v_ub: b.v_ub });
            }
        }
        corridors.push(merge_boxes(out));
    }
    HiddenSet { t: h.t, corridors }
}

/// Prune by an actual observation: visible windows plus the footprints of
/// detected agents (a detected agent is tracked, no longer hidden).
pub fn prune_observed(h: &HiddenSet, obs: &Observation, world: &World) -> HiddenSet {
    let scenario = world.scenario;
    let mut windows: Vec<IntervalSet> = (0..h.corridors.len())
        .map(|ci| obs.fov.corridor_visible(ci).clone())
        .collect();
    for det in &obs.detections {
        let rect = scenario.corridors[det.corridor].rect_at(det.s, &det.footprint);
        for (ci, corridor) in scenario.corridors.iter().enumerate() {
            let w = corridor.s_overlapping(&rect, &corridor.footprint);
            if !w.is_empty() {
                windows[ci].insert(w);
            }
        }
    }
    prune_by_windows(h, &windows)
}

/// Per-corridor record of what was visible at each sensing tick, for the
/// velocity-bound refinement.
#[derive(Debug, Clone, Default)]
pub struct VisibilityHistory {
    entries: Vec<HistoryEntry>,
}

#[derive(Debug, Clone)]
struct HistoryEntry {
    t: f64,
    visible: Vec<IntervalSet>,
}

impl VisibilityHistory {
    pub fn new() -> Self {
        VisibilityHistory { entries: Vec::new() }
    }

    pub fn record(&mut self, fov: &FieldOfView, n_corridors: usize) {
        let visible = (0..n_corridors).map(|ci| fov.corridor_visible(ci).clone()).collect();
        self.entries.push(HistoryEntry { t: fov.t, visible });
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Velocity bound for agents hidden in `box_iv`, from the observation
/// history: if the region (plus a watch strip beyond its far edge, wide
/// enough that nothing can cross it unseen between sensing ticks) was
/// observed empty at `now - tau` and the strip stayed visible since, any
/// agent now inside entered from rest at the far edge after that moment, so
/// its speed is capped by what acceleration alone achieves within `tau`
/// seconds and the region's length. Without usable history the ODD bound is
/// returned.
pub fn refine_velocity_bound(
    history: &VisibilityHistory,
    corridor_idx: usize,
    box_iv: &Interval,
    v_max: f64,
    a_max: f64,
    now: f64,
) -> f64 {
    if history.entries.is_empty() || box_iv.is_empty() {
        return v_max;
    }
    // widest sensing gap in the scanned chain determines the watch strip
    let mut prev_t = now;
    let mut max_gap: f64 = 0.0;
    let mut tau = None;
    for entry in history.entries.iter().rev() {
        if entry.t > now + 1e-9 {
            continue;
        }
        max_gap = max_gap.max(prev_t - entry.t);
        prev_t = entry.t;
        let strip = Interval::new(box_iv.hi, box_iv.hi + v_max * max_gap.max(1e-3));
        let visible = &entry.visible[corridor_idx];
        if !visible.covers(&strip) {
            break;
        }
        if visible.covers(box_iv) {
            tau = Some(now - entry.t);
            break;
        }
    }
    match tau {
        None => v_max,
        Some(tau) => {
            let by_time = a_max * tau;
            let by_distance = math::sqrt(2.0 * a_max * box_iv.len());
            v_max.min(by_time).min(by_distance)
        }
    }
}

/// Apply the history refinement to every box of a hidden set.
pub fn refine_hidden(h: &HiddenSet, history: &VisibilityHistory, world: &World) -> HiddenSet {
    let scenario = world.scenario;
    let mut corridors = Vec::with_capacity(h.corridors.len());
    for (ci, boxes) in h.corridors.iter().enumerate() {
        let c = &scenario.corridors[ci];
        let out = boxes
            .iter()
            .map(|b| {
                let refined =
                    refine_velocity_bound(history, ci, &b.interval(), c.v_max, c.a_max, h.t);
                HiddenBox { s_lo: b.s_lo, s_hi: b.s_hi, v_ub: b.v_ub.min(refined) }
            })
            .collect();
        corridors.push(out);
    }
    HiddenSet { t: h.t, corridors }
}

/// Reachable hidden occupancy over a horizon with no pruning by future
/// observations: `n + 1` snapshots, one per step including step 0. The
/// conservative baseline planner must avoid these entirely.
pub fn frs_baseline(h: &HiddenSet, n: usize, dt: f64, world: &World) -> Vec<HiddenSet> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(h.clone());
    let mut current = h.clone();
    for _ in 0..n {
        current = propagate_hidden(&current, dt, world);
        out.push(current.clone());
    }
    out
}
