//! Closed 1-D intervals and sorted disjoint interval unions.
//!
//! Hidden sets, field-of-view projections, and danger zones all reduce to
//! interval arithmetic along a corridor coordinate, so this module is the
//! workhorse behind the set operations.

use alloc::vec::Vec;

/// A closed interval `[lo, hi]`. Degenerate (`lo == hi`) is allowed;
/// `lo > hi` means empty.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Self {
        Interval { lo, hi }
    }

    pub fn is_empty(&self) -> bool {
        self.lo > self.hi
    }

    pub fn len(&self) -> f64 {
        (self.hi - self.lo).max(0.0)
    }

    pub fn contains(&self, x: f64) -> bool {
        x >= self.lo && x <= self.hi
    }

    /// Closed-interval overlap; touching endpoints count.
    pub fn intersects(&self, other: &Interval) -> bool {
        !self.is_empty() && !other.is_empty() && self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn intersection(&self, other: &Interval) -> Interval {
        Interval::new(self.lo.max(other.lo), self.hi.min(other.hi))
    }

    /// Whether `other` covers this interval entirely.
    pub fn subset_of(&self, other: &Interval) -> bool {
        self.is_empty() || (self.lo >= other.lo && self.hi <= other.hi)
    }
}

/// Union of disjoint closed intervals, kept sorted by `lo`.
#[derive(Debug, Clone, Default, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct IntervalSet {
    items: Vec<Interval>,
}

impl IntervalSet {
    pub fn empty() -> Self {
        IntervalSet { items: Vec::new() }
    }

    pub fn from_interval(iv: Interval) -> Self {
        let mut s = IntervalSet::empty();
        s.insert(iv);
        s
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Interval> {
        self.items.iter()
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn total_length(&self) -> f64 {
        self.items.iter().map(|iv| iv.len()).sum()
    }

    /// Insert an interval, merging any overlapping or touching members.
    pub fn insert(&mut self, iv: Interval) {
        if iv.is_empty() {
            return;
        }
        let mut merged = iv;
        let mut out = Vec::with_capacity(self.items.len() + 1);
        let mut placed = false;
        for item in self.items.drain(..) {
            if item.hi < merged.lo {
                out.push(item);
            } else if item.lo > merged.hi {
                if !placed {
                    out.push(merged);
                    placed = true;
                }
                out.push(item);
            } else {
                merged = Interval::new(merged.lo.min(item.lo), merged.hi.max(item.hi));
            }
        }
        if !placed {
            out.push(merged);
        }
        self.items = out;
    }

    pub fn union(&self, other: &IntervalSet) -> IntervalSet {
        let mut out = self.clone();
        for iv in &other.items {
            out.insert(*iv);
        }
        out
    }

    pub fn contains(&self, x: f64) -> bool {
        self.items.iter().any(|iv| iv.contains(x))
    }

    pub fn intersects(&self, iv: &Interval) -> bool {
        self.items.iter().any(|item| item.intersects(iv))
    }

    pub fn intersects_set(&self, other: &IntervalSet) -> bool {
        // both sorted; linear scan
        let (mut i, mut j) = (0, 0);
        while i < self.items.len() && j < other.items.len() {
            let a = &self.items[i];
            let b = &other.items[j];
            if a.intersects(b) {
                return true;
            }
            if a.hi < b.hi {
                i += 1;
            } else {
                j += 1;
            }
        }
        false
    }

    pub fn intersection(&self, other: &IntervalSet) -> IntervalSet {
        let mut out = IntervalSet::empty();
        let (mut i, mut j) = (0, 0);
        while i < self.items.len() && j < other.items.len() {
            let a = &self.items[i];
            let b = &other.items[j];
            let iv = a.intersection(b);
            if !iv.is_empty() {
                out.items.push(iv);
            }
            if a.hi < b.hi {
                i += 1;
            } else {
                j += 1;
            }
        }
        out
    }

    /// Subtract a single interval, splitting members as needed. Subtraction is
    /// open on the removed region boundary: the cut points remain.
    pub fn subtract(&self, cut: &Interval) -> IntervalSet {
        if cut.is_empty() {
            return self.clone();
        }
        let mut out = IntervalSet::empty();
        for item in &self.items {
            if !item.intersects(cut) {
                out.items.push(*item);
                continue;
            }
            if item.lo < cut.lo {
                out.items.push(Interval::new(item.lo, cut.lo.min(item.hi)));
            }
            if item.hi > cut.hi {
                out.items.push(Interval::new(cut.hi.max(item.lo), item.hi));
            }
        }
        out
    }

    pub fn subtract_set(&self, cuts: &IntervalSet) -> IntervalSet {
        let mut out = self.clone();
        for cut in &cuts.items {
            out = out.subtract(cut);
        }
        out
    }

    /// Whether `iv` is entirely covered (no gaps) by this set.
    pub fn covers(&self, iv: &Interval) -> bool {
        if iv.is_empty() {
            return true;
        }
        let mut lo = iv.lo;
        for item in &self.items {
            if item.hi < lo {
                continue;
            }
            if item.lo > lo {
                return false;
            }
            lo = item.hi;
            if lo >= iv.hi {
                return true;
            }
        }
        lo >= iv.hi
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_merges_overlaps() {
        let mut s = IntervalSet::empty();
        s.insert(Interval::new(0.0, 1.0));
        s.insert(Interval::new(2.0, 3.0));
        s.insert(Interval::new(0.5, 2.5));
        assert_eq!(s.len(), 1);
        assert_eq!(s.items[0], Interval::new(0.0, 3.0));
    }

    #[test]
    fn subtract_splits() {
        let s = IntervalSet::from_interval(Interval::new(30.0, 80.0));
        let cut = Interval::new(40.0, 60.0);
        let out = s.subtract(&cut);
        assert_eq!(out.len(), 2);
        assert_eq!(out.items[0], Interval::new(30.0, 40.0));
        assert_eq!(out.items[1], Interval::new(60.0, 80.0));
    }

    #[test]
    fn subtract_full_cover_removes() {
        let s = IntervalSet::from_interval(Interval::new(10.0, 20.0));
        let out = s.subtract(&Interval::new(5.0, 25.0));
        assert!(out.is_empty());
    }

    #[test]
    fn covers_requires_no_gaps() {
        let mut s = IntervalSet::empty();
        s.insert(Interval::new(0.0, 10.0));
        s.insert(Interval::new(12.0, 20.0));
        assert!(s.covers(&Interval::new(1.0, 9.0)));
        assert!(!s.covers(&Interval::new(8.0, 14.0)));
    }

    #[test]
    fn intersection_of_sets() {
        let mut a = IntervalSet::empty();
        a.insert(Interval::new(0.0, 5.0));
        a.insert(Interval::new(10.0, 15.0));
        let b = IntervalSet::from_interval(Interval::new(4.0, 11.0));
        let c = a.intersection(&b);
        assert_eq!(c.len(), 2);
        assert!(a.intersects_set(&b));
    }
}
