//! Line-of-sight field of view and ground-truth observation filtering.
//!
//! The visible region is a grid mask at the lattice resolution, stored as
//! per-row interval sets. A cell is visible iff its center is within sensor
//! range and the segment from the eye to the center crosses no opaque shape
//! (occluder polygon or non-ego footprint); rays grazing a boundary count as
//! blocked, so the computed view under-approximates the true one. Visibility
//! profiles additionally cap the forward view. Per-corridor visible
//! coordinate windows are the projection of the mask through each corridor's
//! footprint map, so "visible at s" coincides with "an agent at s would be
//! detected".

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::geom::{Point, Rect};
use crate::interval::{Interval, IntervalSet};
use crate::math;
use crate::world::World;

/// Treat near-horizontal sight rays as parallel below this slope, m.
const PARALLEL_EPS: f64 = 1e-9;
/// Stand-in for an unbounded shadow reach before clipping to the row span.
const FAR: f64 = 1e12;

/// Shadow cast by one opaque segment onto the horizontal line `l = row_l`,
/// as seen from `eye`. Conservative: grazing rays are included, and segments
/// straddling the eye's own horizontal shadow the whole half-row beyond them.
fn edge_shadow_on_row(eye: &Point, a: &Point, b: &Point, row_l: f64) -> Option<Interval> {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    let mut push = |p: f64| {
        lo = lo.min(p);
        hi = hi.max(p);
    };

    // rays through the endpoints, extended to the row
    for v in [a, b] {
        let dl = v.l - eye.l;
        if dl.abs() > PARALLEL_EPS {
            let t = (row_l - eye.l) / dl;
            if t >= 1.0 - 1e-9 {
                push(eye.p + t * (v.p - eye.p));
            }
        }
    }
    // the segment itself crossing the row line
    let da = a.l - row_l;
    let db = b.l - row_l;
    if da == 0.0 && db == 0.0 {
        // collinear with the row: the segment body shadows itself
        push(a.p);
        push(b.p);
    } else if da * db <= 0.0 && (da - db).abs() > 0.0 {
        push(a.p + (b.p - a.p) * da / (da - db));
    }
    // the segment straddling the eye's horizontal blocks near-parallel rays
    let ea = a.l - eye.l;
    let eb = b.l - eye.l;
    if ea * eb <= 0.0 {
        let px = if (ea - eb).abs() > 0.0 { a.p + (b.p - a.p) * ea / (ea - eb) } else { a.p };
        if px >= eye.p {
            push(FAR);
        }
        if px <= eye.p {
            push(-FAR);
        }
    }

    if lo <= hi {
        Some(Interval::new(lo, hi))
    } else {
        None
    }
}

/// Which rows of the mask to compute.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RowCoverage {
    /// Every row the sensing disc touches (used by runtime sensing).
    FullDisc,
    /// Only rows that corridors can occupy (enough for planner predictions).
    CorridorStrips,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FieldOfView {
    pub t: f64,
    pub eye: Point,
    pub range: f64,
    res: f64,
    /// Visible p extents (snapped to cell extents) keyed by row index.
    rows: BTreeMap<i64, IntervalSet>,
    /// Lateral range the rows were computed over.
    row_coverage: Interval,
    /// Per-corridor visible coordinate windows (projection of the mask).
    corridor_visible: Vec<IntervalSet>,
}

impl FieldOfView {
    /// Compute the field of view from `eye` at time `t` against the given
    /// opaque agent rectangles (callers pass ground-truth or predicted rects).
    pub fn compute(
        world: &World,
        eye: Point,
        t: f64,
        range: f64,
        agent_rects: &[Rect],
        coverage: RowCoverage,
    ) -> FieldOfView {
        let res = world.scenario.planning.grid_res;
        let mut edges: Vec<(Point, Point)> = Vec::new();
        for poly in world.occluder_polygons() {
            let n = poly.len();
            for i in 0..n {
                edges.push((poly[i], poly[(i + 1) % n]));
            }
        }
        for rect in agent_rects {
            for (a, b) in rect.edges() {
                edges.push((a, b));
            }
        }
        let cap_p = world.visibility_cap(eye.p).map(|d| eye.p + d.max(0.0));

        let mut row_ranges: Vec<Interval> = Vec::new();
        match coverage {
            RowCoverage::FullDisc => {
                row_ranges.push(Interval::new(eye.l - range, eye.l + range));
            }
            RowCoverage::CorridorStrips => {
                for c in &world.scenario.corridors {
                    let strip = c.strip();
                    row_ranges.push(Interval::new(strip.l_lo, strip.l_hi));
                }
            }
        }
        let mut row_set = IntervalSet::empty();
        for iv in row_ranges {
            row_set.insert(iv);
        }
        let coverage_hull = row_set
            .iter()
            .fold(Interval::new(f64::INFINITY, f64::NEG_INFINITY), |acc, iv| {
                Interval::new(acc.lo.min(iv.lo), acc.hi.max(iv.hi))
            });

        let mut rows = BTreeMap::new();
        for band in row_set.iter() {
            // inclusive on both sides so boundary rows that merely touch a
            // corridor band still enter the mask
            let il_lo = math::floor(band.lo / res) as i64 - 1;
            let il_hi = math::ceil(band.hi / res) as i64;
            for il in il_lo..=il_hi {
                let row_l = (il as f64 + 0.5) * res;
                let dl = row_l - eye.l;
                if dl.abs() > range {
                    continue;
                }
                let half = math::sqrt(range * range - dl * dl);
                let mut visible =
                    IntervalSet::from_interval(Interval::new(eye.p - half, eye.p + half));
                for (a, b) in &edges {
                    if let Some(shadow) = edge_shadow_on_row(&eye, a, b, row_l) {
                        visible = visible.subtract(&shadow);
                    }
                }
                if let Some(cap) = cap_p {
                    visible = visible.subtract(&Interval::new(cap, f64::INFINITY));
                }
                let snapped = snap_to_cells(&visible, res);
                if !snapped.is_empty() {
                    rows.insert(il, snapped);
                }
            }
        }

        let mut fov = FieldOfView {
            t,
            eye,
            range,
            res,
            rows,
            row_coverage: coverage_hull,
            corridor_visible: Vec::new(),
        };
        let projected: Vec<IntervalSet> =
            world.scenario.corridors.iter().map(|c| fov.project_corridor(c)).collect();
        fov.corridor_visible = projected;
        fov
    }

    fn project_corridor(&self, corridor: &crate::world::ConflictCorridor) -> IntervalSet {
        let mut out = IntervalSet::empty();
        let fp = corridor.footprint;
        for (il, visible) in &self.rows {
            let row_lo = *il as f64 * self.res;
            let row_hi = row_lo + self.res;
            for iv in visible.iter() {
                let band = Rect::new(iv.lo, iv.hi, row_lo, row_hi);
                let s_win = corridor.s_overlapping(&band, &fp);
                let clipped = s_win.intersection(&corridor.s_range);
                if !clipped.is_empty() {
                    out.insert(clipped);
                }
            }
        }
        out
    }

    /// Cell-center visibility query for the cell containing `(p, l)`.
    pub fn visible_at(&self, p: f64, l: f64) -> bool {
        let il = math::floor(l / self.res) as i64;
        match self.rows.get(&il) {
            Some(set) => set.contains(p),
            None => false,
        }
    }

    /// Whether any visible cell touches the rectangle — the detection rule.
    pub fn rect_visible(&self, rect: &Rect) -> bool {
        let il_lo = math::floor(rect.l_lo / self.res) as i64;
        let il_hi = math::ceil(rect.l_hi / self.res) as i64;
        let p_range = rect.p_range();
        for il in il_lo..=il_hi {
            let row_lo = il as f64 * self.res;
            if row_lo > rect.l_hi || row_lo + self.res < rect.l_lo {
                continue;
            }
            if let Some(set) = self.rows.get(&il) {
                if set.intersects(&p_range) {
                    return true;
                }
            }
        }
        false
    }

    /// Visible coordinate windows for a corridor by index.
    pub fn corridor_visible(&self, corridor: usize) -> &IntervalSet {
        &self.corridor_visible[corridor]
    }

    pub fn row_coverage(&self) -> Interval {
        self.row_coverage
    }
}

fn snap_to_cells(set: &IntervalSet, res: f64) -> IntervalSet {
    let mut out = IntervalSet::empty();
    for iv in set.iter() {
        // cells whose centers fall inside [lo, hi]
        let ip_lo = math::ceil(iv.lo / res - 0.5 - 1e-9) as i64;
        let ip_hi = math::floor(iv.hi / res - 0.5 + 1e-9) as i64;
        if ip_lo <= ip_hi {
            out.insert(Interval::new(ip_lo as f64 * res, (ip_hi + 1) as f64 * res));
        }
    }
    out
}

/// One detected agent, with exact state (the sensor model is presence/absence
/// within the field of view, with perfect state estimates).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Detection {
    pub agent_idx: usize,
    pub corridor: usize,
    pub s: f64,
    pub v: f64,
    pub footprint: crate::dynamics::Footprint,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Observation {
    pub t: f64,
    pub detections: Vec<Detection>,
    pub fov: FieldOfView,
}

/// Runtime sensing: compute the field of view against ground-truth occupancy.
pub fn compute_fov(world: &World, ego: Point, range: f64) -> FieldOfView {
    let rects: Vec<Rect> = world.agents().iter().map(|a| a.rect).collect();
    FieldOfView::compute(world, ego, world.t, range, &rects, RowCoverage::FullDisc)
}

/// Ground truth filtered through the field of view: exactly the agents whose
/// footprint touches a visible cell.
pub fn observe(world: &World, fov: &FieldOfView) -> Observation {
    let mut detections = Vec::new();
    for agent in world.agents() {
        if fov.rect_visible(&agent.rect) {
            detections.push(Detection {
                agent_idx: agent.agent_idx,
                corridor: agent.corridor,
                s: agent.s,
                v: agent.v,
                footprint: agent.footprint,
            });
        }
    }
    Observation { t: fov.t, detections, fov: fov.clone() }
}

/// Constant-velocity prediction of a tracked agent's occupied rectangle.
pub fn predict_agent_rect(
    world: &World,
    corridor: usize,
    s: f64,
    v: f64,
    footprint: &crate::dynamics::Footprint,
    dt_ahead: f64,
) -> Rect {
    let c = &world.scenario.corridors[corridor];
    c.rect_at(s - v * dt_ahead, footprint)
}

/// Predicted field of view from a planned ego pose: same geometric rule as
/// sensing, applied to predicted occupancy (tracked agents at constant
/// velocity), restricted to corridor strips.
pub fn predict_fov(
    world: &World,
    planned_eye: Point,
    t_pred: f64,
    range: f64,
    predicted_rects: &[Rect],
) -> FieldOfView {
    FieldOfView::compute(world, planned_eye, t_pred, range, predicted_rects, RowCoverage::CorridorStrips)
}
