use std::cmp::Ordering;
use std::fmt;

use crate::partitions::Partition;

/// Which Schubert form a quadric label multiplies by `ω^power`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Branch {
    /// A pure power `ω^i` below the middle degree.
    None,
    /// The class `e` of an odd quadric.
    E,
    /// The ruling class `e_0` of an even quadric.
    E0,
    /// The other ruling `e_1`; only exists in the middle degree.
    E1,
}

/// `ω^power · branch` on a quadric.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QuadricLabel {
    pub power: u32,
    pub branch: Branch,
}

impl QuadricLabel {
    pub fn power(power: u32) -> Self {
        Self {
            power,
            branch: Branch::None,
        }
    }

    pub fn with(power: u32, branch: Branch) -> Self {
        Self { power, branch }
    }
}

impl Ord for QuadricLabel {
    /// Degree order within one quadric: pure powers, then the `e` classes.
    fn cmp(&self, other: &Self) -> Ordering {
        let key = |l: &Self| (l.branch != Branch::None, l.power, l.branch);
        key(self).cmp(&key(other))
    }
}

impl PartialOrd for QuadricLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for QuadricLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let branch = match self.branch {
            Branch::None => return write!(f, "w^{}", self.power),
            Branch::E => "e",
            Branch::E0 => "e0",
            Branch::E1 => "e1",
        };
        if self.power == 0 {
            f.write_str(branch)
        } else {
            write!(f, "w^{}*{branch}", self.power)
        }
    }
}

/// A Schubert basis label: a partition for the Grassmannian families, a
/// power/branch pair for quadrics.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Partition(Partition),
    Quadric(QuadricLabel),
}

impl Label {
    pub fn as_partition(&self) -> Option<&Partition> {
        match self {
            Label::Partition(p) => Some(p),
            Label::Quadric(_) => None,
        }
    }

    pub fn as_quadric(&self) -> Option<QuadricLabel> {
        match self {
            Label::Quadric(q) => Some(*q),
            Label::Partition(_) => None,
        }
    }
}

impl From<Partition> for Label {
    fn from(p: Partition) -> Self {
        Label::Partition(p)
    }
}

impl From<QuadricLabel> for Label {
    fn from(q: QuadricLabel) -> Self {
        Label::Quadric(q)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Partition(p) => p.fmt(f),
            Label::Quadric(q) => q.fmt(f),
        }
    }
}

pub(crate) fn parse_quadric_label(s: &str) -> Option<QuadricLabel> {
    let s = s.trim().replace(' ', "");
    let parse_branch = |b: &str| match b {
        "e" => Some(Branch::E),
        "e0" => Some(Branch::E0),
        "e1" => Some(Branch::E1),
        _ => None,
    };
    let parse_power = |w: &str| -> Option<u32> {
        match w {
            "w" => Some(1),
            _ => w.strip_prefix("w^")?.parse().ok(),
        }
    };
    if s == "1" {
        return Some(QuadricLabel::power(0));
    }
    if let Some(b) = parse_branch(&s) {
        return Some(QuadricLabel::with(0, b));
    }
    if let Some((w, b)) = s.split_once('*') {
        return Some(QuadricLabel::with(parse_power(w)?, parse_branch(b)?));
    }
    parse_power(&s).map(QuadricLabel::power)
}
