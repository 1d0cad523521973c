//! Relational operations between two concepts, evaluated over a
//! [`MatchSet`] that stands in for the intersection of their attribute sets.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::concept::Concept;
use crate::error::{Error, Result};
use crate::matcher::MatchSet;

/// Exact similarity `100 * shared / union` kept as a fraction.
#[derive(Debug, Clone, Copy)]
pub struct Percentage {
    shared: u64,
    union: u64,
}

impl Percentage {
    pub fn new(shared: u64, union: u64) -> Result<Self> {
        if union == 0 {
            return Err(Error::NoAttributes);
        }
        assert!(shared <= union, "shared attributes exceed the union");
        Ok(Self { shared, union })
    }

    pub fn shared(&self) -> u64 {
        self.shared
    }

    pub fn union(&self) -> u64 {
        self.union
    }

    pub fn is_zero(&self) -> bool {
        self.shared == 0
    }

    pub fn is_full(&self) -> bool {
        self.shared == self.union
    }

    /// Value in tenths of a percent, rounded half up.
    pub fn tenths(&self) -> u64 {
        (2000 * self.shared + self.union) / (2 * self.union)
    }

    pub fn as_f64(&self) -> f64 {
        100.0 * self.shared as f64 / self.union as f64
    }

    /// One decimal place, rounded half up ("33.3").
    pub fn rounded(&self) -> String {
        let t = self.tenths();
        format!("{}.{}", t / 10, t % 10)
    }

    /// The rounded value as a number, for machine-readable output.
    pub fn rounded_f64(&self) -> f64 {
        self.tenths() as f64 / 10.0
    }
}

impl PartialEq for Percentage {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Percentage {}

impl PartialOrd for Percentage {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Percentage {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.shared * other.union).cmp(&(other.shared * self.union))
    }
}

impl fmt::Display for Percentage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}%", self.rounded())
    }
}

fn check_sizes(c1: &Concept, c2: &Concept, m: &MatchSet) {
    debug_assert_eq!(m.left_size(), c1.attributes().len());
    debug_assert_eq!(m.right_size(), c2.attributes().len());
}

/// The concepts share at least one matched attribute.
pub fn related(c1: &Concept, c2: &Concept, m: &MatchSet) -> bool {
    check_sizes(c1, c2, m);
    !m.is_empty()
}

pub fn independent(c1: &Concept, c2: &Concept, m: &MatchSet) -> bool {
    !related(c1, c2, m)
}

/// `100 * k / (|A1| + |A2| - k)` with `k` matched pairs; each matched pair
/// counts once in the union.
pub fn similarity(c1: &Concept, c2: &Concept, m: &MatchSet) -> Result<Percentage> {
    check_sizes(c1, c2, m);
    let a1 = c1.attributes().len() as u64;
    let a2 = c2.attributes().len() as u64;
    let k = m.len() as u64;
    Percentage::new(k, a1 + a2 - k)
}

fn object_labels(c: &Concept) -> BTreeSet<String> {
    c.objects().iter().map(|o| o.normalized_label()).collect()
}

/// Every attribute on both sides is matched and the object sets agree.
pub fn equivalent(c1: &Concept, c2: &Concept, m: &MatchSet) -> Result<bool> {
    let sim = similarity(c1, c2, m)?;
    Ok(sim.is_full() && object_labels(c1) == object_labels(c2))
}

/// `c1` has a strictly larger intension that contains all of `c2`'s
/// attributes.
pub fn sub_concept(c1: &Concept, c2: &Concept, m: &MatchSet) -> bool {
    check_sizes(c1, c2, m);
    let a1 = c1.attributes().len();
    let a2 = c2.attributes().len();
    m.len() == a2 && a1 > a2
}

pub fn super_concept(c1: &Concept, c2: &Concept, m: &MatchSet) -> bool {
    sub_concept(c2, c1, &m.mirrored())
}
