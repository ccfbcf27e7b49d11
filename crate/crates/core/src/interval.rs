//! Finite unions of closed rational intervals.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::UnitRational;

/// A closed interval `[lo, hi]`; `lo == hi` is a single point.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interval {
    pub lo: UnitRational,
    pub hi: UnitRational,
}

impl Interval {
    pub fn new(lo: UnitRational, hi: UnitRational) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidIntervalSet(format!("[{lo}, {hi}] is empty")));
        }
        Ok(Interval { lo, hi })
    }

    pub fn point(at: UnitRational) -> Self {
        Interval { lo: at.clone(), hi: at }
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &UnitRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_point() {
            write!(f, "{{{}}}", self.lo)
        } else {
            write!(f, "[{}, {}]", self.lo, self.hi)
        }
    }
}

/// A subset of `[0, 1]` that is a finite union of closed intervals and
/// isolated points.
///
/// Components are kept sorted, pairwise disjoint and non-touching: two
/// intervals sharing an endpoint are merged. Equality is therefore set
/// equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntervalSet {
    components: Vec<Interval>,
}

impl IntervalSet {
    pub fn new(components: impl IntoIterator<Item = Interval>) -> Self {
        let mut parts: Vec<Interval> = components.into_iter().collect();
        parts.sort();
        let mut merged: Vec<Interval> = Vec::with_capacity(parts.len());
        for part in parts {
            match merged.last_mut() {
                Some(last) if part.lo <= last.hi => {
                    if part.hi > last.hi {
                        last.hi = part.hi;
                    }
                }
                _ => merged.push(part),
            }
        }
        IntervalSet { components: merged }
    }

    pub fn empty() -> Self {
        IntervalSet::default()
    }

    /// The whole unit interval.
    pub fn unit() -> Self {
        IntervalSet::interval(UnitRational::zero(), UnitRational::one())
    }

    pub fn interval(lo: UnitRational, hi: UnitRational) -> Self {
        assert!(lo <= hi, "empty interval");
        IntervalSet::new([Interval { lo, hi }])
    }

    pub fn points(points: impl IntoIterator<Item = UnitRational>) -> Self {
        IntervalSet::new(points.into_iter().map(Interval::point))
    }

    pub fn components(&self) -> &[Interval] {
        &self.components
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// True when every component is a single point.
    pub fn is_finite(&self) -> bool {
        self.components.iter().all(Interval::is_point)
    }

    pub fn contains(&self, x: &UnitRational) -> bool {
        self.component_of(x).is_some()
    }

    fn component_of(&self, x: &UnitRational) -> Option<&Interval> {
        let idx = self.components.partition_point(|c| &c.hi < x);
        self.components.get(idx).filter(|c| c.contains(x))
    }

    pub fn union(&self, other: &IntervalSet) -> IntervalSet {
        IntervalSet::new(self.components.iter().chain(&other.components).cloned())
    }

    /// Exact containment. Each component of `self` has to sit inside a single
    /// component of `other`, because merged components are separated by gaps.
    pub fn is_subset(&self, other: &IntervalSet) -> bool {
        self.components.iter().all(|c| {
            other
                .component_of(&c.lo)
                .is_some_and(|host| c.hi <= host.hi)
        })
    }

    pub fn min(&self) -> Option<&UnitRational> {
        self.components.first().map(|c| &c.lo)
    }

    pub fn max(&self) -> Option<&UnitRational> {
        self.components.last().map(|c| &c.hi)
    }

    /// Greatest member `<= x`.
    pub fn floor(&self, x: &UnitRational) -> Option<UnitRational> {
        let idx = self.components.partition_point(|c| &c.lo <= x);
        let c = self.components.get(idx.checked_sub(1)?)?;
        Some(c.hi.meet(x))
    }

    /// Least member `>= x`.
    pub fn ceil(&self, x: &UnitRational) -> Option<UnitRational> {
        let idx = self.components.partition_point(|c| &c.hi < x);
        let c = self.components.get(idx)?;
        Some(c.lo.join(x))
    }

    /// Supremum of the members strictly below `x`, or `None` when there are
    /// none (the empty join, i.e. bottom).
    pub fn sup_below(&self, x: &UnitRational) -> Option<UnitRational> {
        let idx = self.components.partition_point(|c| &c.lo < x);
        let c = self.components.get(idx.checked_sub(1)?)?;
        Some(c.hi.meet(x))
    }

    /// `x` is a member and no member sequence approaches it strictly from
    /// below.
    pub fn is_isolated_from_below(&self, x: &UnitRational) -> bool {
        self.component_of(x).is_some_and(|c| &c.lo == x)
    }

    /// Members of `grid` plus every component endpoint, sorted and deduplicated.
    pub fn sample(&self, grid: &[UnitRational]) -> Vec<UnitRational> {
        let mut out: Vec<UnitRational> = grid.iter().filter(|x| self.contains(x)).cloned().collect();
        for c in &self.components {
            out.push(c.lo.clone());
            out.push(c.hi.clone());
        }
        out.sort();
        out.dedup();
        out
    }

    /// The member points, if the set is finite.
    pub fn finite_points(&self) -> Option<Vec<UnitRational>> {
        self.is_finite()
            .then(|| self.components.iter().map(|c| c.lo.clone()).collect())
    }
}

impl fmt::Display for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "{{}}");
        }
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, " ∪ ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum ComponentDoc {
    Range { lo: UnitRational, hi: UnitRational },
    Point { at: UnitRational },
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct IntervalSetDoc {
    components: Vec<ComponentDoc>,
}

impl Serialize for IntervalSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let doc = IntervalSetDoc {
            components: self
                .components
                .iter()
                .map(|c| {
                    if c.is_point() {
                        ComponentDoc::Point { at: c.lo.clone() }
                    } else {
                        ComponentDoc::Range {
                            lo: c.lo.clone(),
                            hi: c.hi.clone(),
                        }
                    }
                })
                .collect(),
        };
        doc.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntervalSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let doc = IntervalSetDoc::deserialize(deserializer)?;
        let mut parts = Vec::with_capacity(doc.components.len());
        for c in doc.components {
            parts.push(match c {
                ComponentDoc::Range { lo, hi } => Interval::new(lo, hi).map_err(serde::de::Error::custom)?,
                ComponentDoc::Point { at } => Interval::point(at),
            });
        }
        Ok(IntervalSet::new(parts))
    }
}
