//! Axis-aligned rectangles and segment geometry in the road-aligned
//! (p, l) plane.

use alloc::vec::Vec;

use crate::interval::Interval;

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Point {
    pub p: f64,
    pub l: f64,
}

impl Point {
    pub fn new(p: f64, l: f64) -> Self {
        Point { p, l }
    }

    pub fn dist(&self, other: &Point) -> f64 {
        let dp = self.p - other.p;
        let dl = self.l - other.l;
        crate::math::sqrt(dp * dp + dl * dl)
    }
}

/// Axis-aligned rectangle; `p` along the route, `l` lateral.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Rect {
    pub p_lo: f64,
    pub p_hi: f64,
    pub l_lo: f64,
    pub l_hi: f64,
}

impl Rect {
    pub fn new(p_lo: f64, p_hi: f64, l_lo: f64, l_hi: f64) -> Self {
        Rect { p_lo, p_hi, l_lo, l_hi }
    }

    pub fn centered(center: Point, length: f64, width: f64) -> Self {
        Rect {
            p_lo: center.p - length / 2.0,
            p_hi: center.p + length / 2.0,
            l_lo: center.l - width / 2.0,
            l_hi: center.l + width / 2.0,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.p_lo > self.p_hi || self.l_lo > self.l_hi
    }

    pub fn p_range(&self) -> Interval {
        Interval::new(self.p_lo, self.p_hi)
    }

    pub fn l_range(&self) -> Interval {
        Interval::new(self.l_lo, self.l_hi)
    }

    /// Touching boundaries count as overlap (conservative).
    pub fn intersects(&self, other: &Rect) -> bool {
        !self.is_empty()
            && !other.is_empty()
            && self.p_lo <= other.p_hi
            && other.p_lo <= self.p_hi
            && self.l_lo <= other.l_hi
            && other.l_lo <= self.l_hi
    }

    pub fn contains_point(&self, pt: &Point) -> bool {
        pt.p >= self.p_lo && pt.p <= self.p_hi && pt.l >= self.l_lo && pt.l <= self.l_hi
    }

    pub fn contains_rect(&self, other: &Rect) -> bool {
        other.is_empty()
            || (other.p_lo >= self.p_lo
                && other.p_hi <= self.p_hi
                && other.l_lo >= self.l_lo
                && other.l_hi <= self.l_hi)
    }

    /// Smallest rectangle containing both.
    pub fn hull(&self, other: &Rect) -> Rect {
        Rect {
            p_lo: self.p_lo.min(other.p_lo),
            p_hi: self.p_hi.max(other.p_hi),
            l_lo: self.l_lo.min(other.l_lo),
            l_hi: self.l_hi.max(other.l_hi),
        }
    }

    pub fn inflate(&self, dp: f64, dl: f64) -> Rect {
        Rect {
            p_lo: self.p_lo - dp,
            p_hi: self.p_hi + dp,
            l_lo: self.l_lo - dl,
            l_hi: self.l_hi + dl,
        }
    }

    pub fn corners(&self) -> [Point; 4] {
        [
            Point::new(self.p_lo, self.l_lo),
            Point::new(self.p_hi, self.l_lo),
            Point::new(self.p_hi, self.l_hi),
            Point::new(self.p_lo, self.l_hi),
        ]
    }

    pub fn edges(&self) -> [(Point, Point); 4] {
        let c = self.corners();
        [(c[0], c[1]), (c[1], c[2]), (c[2], c[3]), (c[3], c[0])]
    }
}

/// Proper or touching intersection of two closed segments.
pub fn segments_intersect(a0: &Point, a1: &Point, b0: &Point, b1: &Point) -> bool {
    fn orient(a: &Point, b: &Point, c: &Point) -> f64 {
        (b.p - a.p) * (c.l - a.l) - (b.l - a.l) * (c.p - a.p)
    }
    fn on_segment(a: &Point, b: &Point, c: &Point) -> bool {
        c.p >= a.p.min(b.p) && c.p <= a.p.max(b.p) && c.l >= a.l.min(b.l) && c.l <= a.l.max(b.l)
    }
    let d1 = orient(b0, b1, a0);
    let d2 = orient(b0, b1, a1);
    let d3 = orient(a0, a1, b0);
    let d4 = orient(a0, a1, b1);
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
    {
        return true;
    }
    (d1 == 0.0 && on_segment(b0, b1, a0))
        || (d2 == 0.0 && on_segment(b0, b1, a1))
        || (d3 == 0.0 && on_segment(a0, a1, b0))
        || (d4 == 0.0 && on_segment(a0, a1, b1))
}

/// Ray-casting point-in-polygon test (boundary counts as inside).
pub fn point_in_polygon(pt: &Point, poly: &[Point]) -> bool {
    let n = poly.len();
    if n < 3 {
        return false;
    }
    let mut inside = false;
    let mut j = n - 1;
    for i in 0..n {
        let (a, b) = (&poly[i], &poly[j]);
        // boundary check via degenerate segment
        if segments_intersect(a, b, pt, pt) {
            return true;
        }
        if (a.l > pt.l) != (b.l > pt.l) {
            let cross_p = (b.p - a.p) * (pt.l - a.l) / (b.l - a.l) + a.p;
            if pt.p < cross_p {
                inside = !inside;
            }
        }
        j = i;
    }
    inside
}

/// Whether the closed segment from `a` to `b` touches a simple polygon
/// (boundary crossing or either endpoint inside).
pub fn segment_hits_polygon(a: &Point, b: &Point, poly: &[Point]) -> bool {
    let n = poly.len();
    if n < 2 {
        return false;
    }
    let mut j = n - 1;
    for i in 0..n {
        if segments_intersect(a, b, &poly[j], &poly[i]) {
            return true;
        }
        j = i;
    }
    point_in_polygon(a, poly) || point_in_polygon(b, poly)
}

pub fn rect_to_polygon(r: &Rect) -> Vec<Point> {
    r.corners().to_vec()
}
