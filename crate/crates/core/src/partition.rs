//! The partition value type and the classes it can belong to.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition stored as its parts in ascending order.
///
/// The empty partition is a valid value (the unique partition of 0) and
/// prints as `0`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Builds a partition from parts in any order. Zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Parse {
                input: format!("{parts:?}"),
                reason: "parts must be positive".into(),
            });
        }
        parts.sort_unstable();
        Ok(Partition(parts))
    }

    /// Caller guarantees the parts are positive and ascending.
    pub(crate) fn from_sorted(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] <= w[1]));
        debug_assert!(!parts.contains(&0));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of the parts.
    pub fn sigma(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of parts plus number of even parts.
    pub fn m_statistic(&self) -> u32 {
        m_statistic(&self.0)
    }

    pub fn contains(&self, part: u32) -> bool {
        self.0.binary_search(&part).is_ok()
    }

    pub fn multiplicity(&self, part: u32) -> usize {
        self.0.iter().filter(|&&p| p == part).count()
    }

    pub fn smallest(&self) -> Option<u32> {
        self.0.first().copied()
    }

    pub fn largest(&self) -> Option<u32> {
        self.0.last().copied()
    }

    /// Multiset union.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        parts.extend_from_slice(&self.0);
        parts.extend_from_slice(&other.0);
        parts.sort_unstable();
        Partition(parts)
    }

    /// Removes one occurrence of `part`, returning `None` if it is absent.
    pub fn without(&self, part: u32) -> Option<Partition> {
        let idx = self.0.iter().position(|&p| p == part)?;
        let mut parts = self.0.clone();
        parts.remove(idx);
        Some(Partition(parts))
    }

    /// Inserts one occurrence of `part`.
    pub fn with(&self, part: u32) -> Partition {
        let mut parts = self.0.clone();
        let idx = parts.partition_point(|&p| p <= part);
        parts.insert(idx, part);
        Partition(parts)
    }

    /// Adds `delta` to every part; fails if a part would become non-positive.
    pub fn shifted(&self, delta: i32) -> Result<Partition> {
        let mut parts = Vec::with_capacity(self.len());
        for &p in &self.0 {
            let q = p as i64 + delta as i64;
            if q <= 0 {
                return Err(Error::Shift {
                    partition: self.clone(),
                    delta,
                });
            }
            parts.push(q as u32);
        }
        Ok(Partition(parts))
    }

    pub fn is_schur(&self) -> bool {
        is_schur(&self.0)
    }

    pub fn is_alladi(&self) -> bool {
        is_alladi(&self.0)
    }

    /// Schur, every odd part at least 3 and every even part at least 6.
    pub fn is_schur_star(&self) -> bool {
        self.is_schur()
            && self
                .0
                .iter()
                .all(|&p| if p % 2 == 1 { p >= 3 } else { p >= 6 })
    }

    /// Alladi with every part greater than 1.
    pub fn is_alladi_star(&self) -> bool {
        self.is_alladi() && !self.contains(1)
    }

    /// Both Schur and Alladi.
    pub fn is_schur_and_alladi(&self) -> bool {
        self.is_schur() && self.is_alladi()
    }

    pub fn classify(&self) -> Classification {
        let schur = self.is_schur();
        let alladi = self.is_alladi();
        let schur_star = schur && self.is_schur_star();
        Classification {
            schur,
            alladi,
            schur_star,
            alladi_star: alladi && !self.contains(1),
            schur_g: schur.then(|| schur_g_class(self)),
            alladi_g: alladi.then(|| self.multiplicity(1) as u8),
        }
    }
}

/// The g-class of a Schur partition: 0 on `D*`, 1 if exactly one of 1 and 4
/// is a part, 2 if it starts with 2 or with 1 and 4.
fn schur_g_class(p: &Partition) -> u8 {
    let has1 = p.contains(1);
    let has4 = p.contains(4);
    if p.contains(2) || (has1 && has4) {
        2
    } else if has1 || has4 {
        1
    } else {
        0
    }
}

pub fn m_statistic(parts: &[u32]) -> u32 {
    parts.iter().map(|&p| if p % 2 == 0 { 2 } else { 1 }).sum()
}

/// Ascending parts with gaps of at least 3 and no gap of exactly 3 between
/// multiples of 3.
pub fn is_schur(parts: &[u32]) -> bool {
    parts.windows(2).all(|w| {
        let gap = w[1].saturating_sub(w[0]);
        w[1] > w[0] && gap >= 3 && !(gap == 3 && w[0] % 3 == 0)
    })
}

/// Odd parts, each occurring at most twice (parts ascending).
pub fn is_alladi(parts: &[u32]) -> bool {
    parts.iter().all(|p| p % 2 == 1) && parts.windows(3).all(|w| !(w[0] == w[1] && w[1] == w[2]))
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `a+b+c` (whitespace ignored); `0` or an empty string is the
    /// empty partition.
    fn from_str(text: &str) -> Result<Self> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() || compact == "0" {
            return Ok(Partition::empty());
        }
        let err = |reason: String| Error::Parse {
            input: text.to_string(),
            reason,
        };
        let mut parts = Vec::new();
        for token in compact.split('+') {
            let value: i64 = token
                .parse()
                .map_err(|_| err(format!("{token:?} is not an integer")))?;
            if value <= 0 || value > u32::MAX as i64 {
                return Err(err(format!("part {value} is not a positive integer")));
            }
            parts.push(value as u32);
        }
        parts.sort_unstable();
        Ok(Partition(parts))
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

/// Class membership facts for one partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub schur: bool,
    pub alladi: bool,
    pub schur_star: bool,
    pub alladi_star: bool,
    /// g-class as a Schur partition.
    pub schur_g: Option<u8>,
    /// g-class as an Alladi partition (number of parts equal to 1).
    pub alladi_g: Option<u8>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClassKind {
    /// `D`: Schur partitions.
    Schur,
    /// `C`: Alladi partitions.
    Alladi,
    /// `D*`: Schur with odd parts at least 3 and even parts at least 6.
    SchurStar,
    /// `C*`: Alladi with all parts greater than 1.
    AlladiStar,
}

impl ClassKind {
    pub fn symbol(self) -> &'static str {
        match self {
            ClassKind::Schur => "D",
            ClassKind::Alladi => "C",
            ClassKind::SchurStar => "D*",
            ClassKind::AlladiStar => "C*",
        }
    }

    pub fn is_schur_family(self) -> bool {
        matches!(self, ClassKind::Schur | ClassKind::SchurStar)
    }
}

impl FromStr for ClassKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "schur" | "D" => Ok(ClassKind::Schur),
            "alladi" | "C" => Ok(ClassKind::Alladi),
            "schur-star" | "D*" => Ok(ClassKind::SchurStar),
            "alladi-star" | "C*" => Ok(ClassKind::AlladiStar),
            other => Err(Error::Parse {
                input: other.to_string(),
                reason: "unknown partition class".into(),
            }),
        }
    }
}

/// A partition class, optionally narrowed to a g-class and a part bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClassTag {
    pub kind: ClassKind,
    pub g: Option<u8>,
    pub max_part: Option<u32>,
}

impl ClassTag {
    pub fn new(kind: ClassKind) -> Self {
        ClassTag {
            kind,
            g: None,
            max_part: None,
        }
    }

    pub fn with_g(mut self, g: u8) -> Self {
        self.g = Some(g);
        self
    }

    pub fn with_max_part(mut self, max_part: u32) -> Self {
        self.max_part = Some(max_part);
        self
    }

    pub fn matches(&self, p: &Partition) -> bool {
        if let Some(k) = self.max_part {
            if p.largest().is_some_and(|l| l > k) {
                return false;
            }
        }
        let c = p.classify();
        let in_kind = match self.kind {
            ClassKind::Schur => c.schur,
            ClassKind::Alladi => c.alladi,
            ClassKind::SchurStar => c.schur_star,
            ClassKind::AlladiStar => c.alladi_star,
        };
        if !in_kind {
            return false;
        }
        match self.g {
            None => true,
            Some(g) if self.kind.is_schur_family() => c.schur_g == Some(g),
            Some(g) => c.alladi_g == Some(g),
        }
    }
}
