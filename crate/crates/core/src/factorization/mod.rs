//! Generic and refined factorizations of Schur partitions.
//!
//! The generic factorization splits the parts into pairs `[x, x+3]` and
//! singletons. Runs of parts with common difference 3 are paired
//! consecutively; a run of odd length leaves one endpoint unpaired. Which
//! endpoint depends on the orientation:
//!
//! | orientation | odd endpoints      | even endpoints     |
//! |-------------|--------------------|--------------------|
//! | upper       | largest unpaired   | smallest unpaired  |
//! | lower       | smallest unpaired  | largest unpaired   |
//!
//! In the lower orientation the part 1 never joins a run.
//!
//! The refined factorization additionally groups the longest minimal
//! segments (see [`segment`]) into single factors.

pub mod codeword;
pub mod segment;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Partition;

pub use codeword::{Codeword, Letter, Quadruple, SLetter, SWord};
pub use segment::{
    enumerate_upper_segments, is_minimal_segment_constructive, is_minimal_segment_gap_rules,
    segment_factors_follow_gap_rules,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Upper,
    Lower,
}

impl Orientation {
    pub fn name(self) -> &'static str {
        match self {
            Orientation::Upper => "upper",
            Orientation::Lower => "lower",
        }
    }

    pub fn opposite(self) -> Orientation {
        match self {
            Orientation::Upper => Orientation::Lower,
            Orientation::Lower => Orientation::Upper,
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Orientation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "upper" => Ok(Orientation::Upper),
            "lower" => Ok(Orientation::Lower),
            other => Err(Error::Parse {
                input: other.to_string(),
                reason: "orientation must be upper or lower".into(),
            }),
        }
    }
}

/// One factor of a factorization.
///
/// In a generic factorization every singleton is an `OddSingleton` or
/// `EvenSingleton`; in a refined factorization those are the free
/// singletons and segment members are grouped into `Segment`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Factor {
    OddSingleton {
        part: u32,
    },
    EvenSingleton {
        part: u32,
    },
    /// `high = low + 3`, `residue = low % 3` (1 or 2).
    Pair {
        low: u32,
        high: u32,
        residue: u8,
    },
    Segment {
        parts: Vec<u32>,
    },
}

impl Factor {
    pub fn singleton(part: u32) -> Factor {
        if part % 2 == 1 {
            Factor::OddSingleton { part }
        } else {
            Factor::EvenSingleton { part }
        }
    }

    pub fn pair(low: u32) -> Factor {
        Factor::Pair {
            low,
            high: low + 3,
            residue: (low % 3) as u8,
        }
    }

    pub fn is_singleton(&self) -> bool {
        matches!(
            self,
            Factor::OddSingleton { .. } | Factor::EvenSingleton { .. }
        )
    }

    pub fn first(&self) -> u32 {
        match self {
            Factor::OddSingleton { part } | Factor::EvenSingleton { part } => *part,
            Factor::Pair { low, .. } => *low,
            Factor::Segment { parts } => parts[0],
        }
    }

    pub fn last(&self) -> u32 {
        match self {
            Factor::OddSingleton { part } | Factor::EvenSingleton { part } => *part,
            Factor::Pair { high, .. } => *high,
            Factor::Segment { parts } => *parts.last().expect("segments are non-empty"),
        }
    }

    pub fn parts(&self) -> Vec<u32> {
        match self {
            Factor::OddSingleton { part } | Factor::EvenSingleton { part } => vec![*part],
            Factor::Pair { low, high, .. } => vec![*low, *high],
            Factor::Segment { parts } => parts.clone(),
        }
    }

    fn render(&self, out: &mut String, generic: &[Factor]) {
        match self {
            Factor::OddSingleton { part } | Factor::EvenSingleton { part } => {
                out.push_str(&part.to_string())
            }
            Factor::Pair { low, high, .. } => out.push_str(&format!("[{low},{high}]")),
            Factor::Segment { parts } => {
                out.push('{');
                let inner: Vec<&Factor> = generic
                    .iter()
                    .filter(|g| g.first() >= parts[0] && g.last() <= *parts.last().unwrap())
                    .collect();
                for (i, g) in inner.iter().enumerate() {
                    if i > 0 {
                        out.push('+');
                    }
                    g.render(out, &[]);
                }
                out.push('}');
            }
        }
    }
}

fn require_schur(p: &Partition) -> Result<()> {
    if p.is_schur() {
        Ok(())
    } else {
        Err(Error::NotInClass {
            class: "D",
            partition: p.clone(),
        })
    }
}

/// Pairs and singletons of a Schur partition in the given orientation.
pub fn generic_factorization(p: &Partition, orientation: Orientation) -> Result<Vec<Factor>> {
    require_schur(p)?;
    Ok(generic_factors(p.parts(), orientation))
}

/// Factorization of ascending parts known to be Schur.
pub(crate) fn generic_factors(parts: &[u32], orientation: Orientation) -> Vec<Factor> {
    let mut factors = Vec::with_capacity(parts.len());
    let mut i = 0;
    while i < parts.len() {
        if orientation == Orientation::Lower && parts[i] == 1 {
            factors.push(Factor::singleton(1));
            i += 1;
            continue;
        }
        // maximal run with common difference 3
        let mut j = i + 1;
        while j < parts.len() && parts[j] == parts[j - 1] + 3 {
            j += 1;
        }
        let run = &parts[i..j];
        if run.len() % 2 == 0 {
            factors.extend(run.chunks(2).map(|c| Factor::pair(c[0])));
        } else {
            let endpoints_odd = run[0] % 2 == 1;
            let smallest_first = endpoints_odd == (orientation == Orientation::Upper);
            if smallest_first {
                factors.extend(run[..run.len() - 1].chunks(2).map(|c| Factor::pair(c[0])));
                factors.push(Factor::singleton(run[run.len() - 1]));
            } else {
                factors.push(Factor::singleton(run[0]));
                factors.extend(run[1..].chunks(2).map(|c| Factor::pair(c[0])));
            }
        }
        i = j;
    }
    factors
}

/// A factorization in which the longest minimal segments are grouped.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RefinedFactorization {
    pub orientation: Orientation,
    pub factors: Vec<Factor>,
}

impl RefinedFactorization {
    /// Concatenated parts of all factors; equals the factorized partition.
    pub fn parts(&self) -> Vec<u32> {
        self.factors.iter().flat_map(Factor::parts).collect()
    }

    pub fn segments(&self) -> impl Iterator<Item = &[u32]> {
        self.factors.iter().filter_map(|f| match f {
            Factor::Segment { parts } => Some(parts.as_slice()),
            _ => None,
        })
    }

    /// Text form: pairs as `[a,b]`, segments as `{...}`, joined by `+`.
    pub fn render(&self) -> String {
        let generic = generic_factors(&self.parts(), self.orientation);
        let mut out = String::new();
        for (i, f) in self.factors.iter().enumerate() {
            if i > 0 {
                out.push('+');
            }
            f.render(&mut out, &generic);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// Text form of a generic factorization.
pub fn render_factors(factors: &[Factor]) -> String {
    if factors.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, f) in factors.iter().enumerate() {
        if i > 0 {
            out.push('+');
        }
        f.render(&mut out, factors);
    }
    out
}

/// Inclusive factor-index intervals `[i, j]` of the generic factorization
/// that satisfy the minimal-segment rules, restricted to the inclusion-maximal
/// ones. Maximal intervals are checked to be pairwise disjoint.
pub fn maximal_segment_intervals(
    p: &Partition,
    factors: &[Factor],
    orientation: Orientation,
) -> Result<Vec<(usize, usize)>> {
    let mut candidates = Vec::new();
    for i in 0..factors.len() {
        if !segment::can_start(&factors[i], orientation) {
            continue;
        }
        for j in i..factors.len() {
            if segment::can_end(&factors[j], orientation)
                && segment::segment_factors_follow_gap_rules(&factors[i..=j], orientation)
            {
                candidates.push((i, j));
            }
        }
    }
    let maximal: Vec<(usize, usize)> = candidates
        .iter()
        .copied()
        .filter(|&(a, b)| {
            !candidates
                .iter()
                .any(|&(c, d)| (c, d) != (a, b) && c <= a && b <= d)
        })
        .collect();
    for w in maximal.windows(2) {
        let ((a, b), (c, d)) = (w[0], w[1]);
        if c <= b {
            return Err(Error::SegmentOverlap {
                partition: p.clone(),
                first: (factors[a].first(), factors[b].last()),
                second: (factors[c].first(), factors[d].last()),
            });
        }
    }
    Ok(maximal)
}

/// Generic factorization with the longest minimal segments grouped.
pub fn refined_factorization(
    p: &Partition,
    orientation: Orientation,
) -> Result<RefinedFactorization> {
    let generic = generic_factorization(p, orientation)?;
    let intervals = maximal_segment_intervals(p, &generic, orientation)?;
    let mut factors = Vec::with_capacity(generic.len());
    let mut next = intervals.iter().peekable();
    let mut i = 0;
    while i < generic.len() {
        match next.peek() {
            Some(&&(a, b)) if a == i => {
                let parts = generic[a..=b].iter().flat_map(Factor::parts).collect();
                factors.push(Factor::Segment { parts });
                next.next();
                i = b + 1;
            }
            _ => {
                factors.push(generic[i].clone());
                i += 1;
            }
        }
    }
    Ok(RefinedFactorization {
        orientation,
        factors,
    })
}

/// Adds `delta` (typically ±3) to every part. The map `h` is `delta = -3`.
pub fn h_shift(p: &Partition, delta: i32) -> Result<Partition> {
    p.shifted(delta)
}

/// Counts per orientation: odd parts, even parts, parts in 1 (mod 3) pairs,
/// parts in 2 (mod 3) pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct PartStatistics {
    pub odd: u32,
    pub even: u32,
    pub p1: u32,
    pub p2: u32,
}

pub fn part_statistics(p: &Partition, orientation: Orientation) -> Result<PartStatistics> {
    let factors = generic_factorization(p, orientation)?;
    let odd = p.parts().iter().filter(|&&x| x % 2 == 1).count() as u32;
    let mut stats = PartStatistics {
        odd,
        even: p.len() as u32 - odd,
        p1: 0,
        p2: 0,
    };
    for f in &factors {
        match f {
            Factor::Pair { residue: 1, .. } => stats.p1 += 2,
            Factor::Pair { residue: 2, .. } => stats.p2 += 2,
            _ => {}
        }
    }
    Ok(stats)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    const ILLUSTRATION: &str = "12+17+21+25+28+31+34+37+42+60+70+73";

    #[test]
    fn generic_upper_illustration() {
        let f = generic_factorization(&p(ILLUSTRATION), Orientation::Upper).unwrap();
        assert_eq!(
            render_factors(&f),
            "12+17+21+[25,28]+[31,34]+37+42+60+[70,73]"
        );
    }

    #[test]
    fn generic_lower_illustration() {
        let f = generic_factorization(&p(ILLUSTRATION), Orientation::Lower).unwrap();
        assert_eq!(
            render_factors(&f),
            "12+17+21+25+[28,31]+[34,37]+42+60+[70,73]"
        );
    }

    #[test]
    fn generic_even_endpoint_run() {
        let f = generic_factorization(&p("28+31+36"), Orientation::Upper).unwrap();
        assert_eq!(render_factors(&f), "[28,31]+36");
        let f = generic_factorization(&p("40+43+46"), Orientation::Upper).unwrap();
        assert_eq!(render_factors(&f), "40+[43,46]");
        let f = generic_factorization(&p("40+43+46"), Orientation::Lower).unwrap();
        assert_eq!(render_factors(&f), "[40,43]+46");
    }

    #[test]
    fn part_one_is_a_lower_singleton() {
        let f = generic_factorization(&p("1+4+7"), Orientation::Lower).unwrap();
        assert_eq!(render_factors(&f), "1+[4,7]");
        let f = generic_factorization(&p("1+4"), Orientation::Lower).unwrap();
        assert_eq!(render_factors(&f), "1+4");
        let f = generic_factorization(&p("1+4"), Orientation::Upper).unwrap();
        assert_eq!(render_factors(&f), "[1,4]");
    }

    #[test]
    fn generic_rejects_non_schur() {
        assert!(matches!(
            generic_factorization(&p("3+6"), Orientation::Upper),
            Err(Error::NotInClass { .. })
        ));
    }

    #[test]
    fn refined_upper_illustration() {
        let r = refined_factorization(&p(ILLUSTRATION), Orientation::Upper).unwrap();
        assert_eq!(r.render(), "12+{17+21+[25,28]+[31,34]+37+42}+60+[70,73]");
        assert_eq!(r.parts(), p(ILLUSTRATION).parts());
    }

    #[test]
    fn refined_lower_illustration() {
        let r = refined_factorization(&p(ILLUSTRATION), Orientation::Lower).unwrap();
        assert_eq!(r.render(), "{12+17+21+25}+[28,31]+[34,37]+42+60+[70,73]");
    }

    #[test]
    fn refined_without_segments() {
        let r = refined_factorization(&p("3+8+11+15"), Orientation::Upper).unwrap();
        assert_eq!(
            r.factors,
            vec![
                Factor::OddSingleton { part: 3 },
                Factor::pair(8),
                Factor::OddSingleton { part: 15 },
            ]
        );
        assert_eq!(
            Factor::pair(8),
            Factor::Pair {
                low: 8,
                high: 11,
                residue: 2
            }
        );
    }

    #[test]
    fn refined_psi_illustration() {
        let r = refined_factorization(
            &p("15+20+35+40+43+46+50+55+60+73+77+82+85+90+94"),
            Orientation::Upper,
        )
        .unwrap();
        assert_eq!(
            r.render(),
            "{15+20}+{35+40+[43,46]+50}+{55+60}+73+77+[82,85]+90+94"
        );
    }

    #[test]
    fn pair_inside_run_keeps_segment_out() {
        // 31 is paired with 28, so 31+36 is not a segment here.
        let r = refined_factorization(&p("28+31+36"), Orientation::Upper).unwrap();
        assert_eq!(r.render(), "[28,31]+36");
    }

    #[test]
    fn h_shift_examples() {
        assert_eq!(h_shift(&p("5+10+14"), -3).unwrap(), p("2+7+11"));
        assert_eq!(h_shift(&p("2+6+11"), 3).unwrap(), p("5+9+14"));
        assert_eq!(h_shift(&p("4"), -3).unwrap(), p("1"));
        assert!(matches!(h_shift(&p("3"), -3), Err(Error::Shift { .. })));
    }

    #[test]
    fn statistics() {
        let s = part_statistics(&p("23+27+31+34+37+40+44+48+52+56"), Orientation::Upper).unwrap();
        assert_eq!(
            s,
            PartStatistics {
                odd: 4,
                even: 6,
                p1: 4,
                p2: 0
            }
        );
    }
}
