//! Brute-force generators for every partition class.
//!
//! Schur partitions are built by depth-first search over ascending parts with
//! the gap constraints applied while extending, Alladi partitions by odd parts
//! of multiplicity at most two. Output is in lexicographic order of the
//! ascending part lists.

use serde::{Deserialize, Serialize};

use crate::factorization::enumerate_upper_segments;
use crate::partition::{m_statistic, ClassKind, ClassTag, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EnumerationQuery {
    pub n: u32,
    pub m: Option<u32>,
    pub tag: ClassTag,
}

impl EnumerationQuery {
    pub fn new(kind: ClassKind, n: u32) -> Self {
        EnumerationQuery {
            n,
            m: None,
            tag: ClassTag::new(kind),
        }
    }

    pub fn with_m(mut self, m: u32) -> Self {
        self.m = Some(m);
        self
    }

    pub fn with_g(mut self, g: u8) -> Self {
        self.tag.g = Some(g);
        self
    }

    pub fn with_max_part(mut self, max_part: u32) -> Self {
        self.tag.max_part = Some(max_part);
        self
    }
}

/// Calls `visit` on every partition matching the query, in lexicographic order.
pub fn for_each(query: &EnumerationQuery, mut visit: impl FnMut(&[u32])) {
    let max_part = query.tag.max_part.unwrap_or(query.n).min(query.n);
    let mut filtered = |parts: &[u32]| {
        if query.m.is_some_and(|m| m_statistic(parts) != m) {
            return;
        }
        if query.tag.g.is_some() && !query.tag.matches(&Partition::from_sorted(parts.to_vec())) {
            return;
        }
        visit(parts);
    };
    let mut cur = Vec::new();
    match query.tag.kind {
        ClassKind::Schur | ClassKind::SchurStar => {
            let star = query.tag.kind == ClassKind::SchurStar;
            schur_dfs(query.n, 1, max_part, star, &mut cur, &mut filtered)
        }
        ClassKind::Alladi | ClassKind::AlladiStar => {
            let smallest = if query.tag.kind == ClassKind::AlladiStar {
                3
            } else {
                1
            };
            alladi_dfs(query.n, smallest, max_part, &mut cur, &mut filtered)
        }
    }
}

fn schur_dfs(
    remaining: u32,
    next_min: u32,
    max_part: u32,
    star: bool,
    cur: &mut Vec<u32>,
    visit: &mut impl FnMut(&[u32]),
) {
    if remaining == 0 {
        visit(cur);
        return;
    }
    let top = remaining.min(max_part);
    for x in next_min..=top {
        if star && matches!(x, 1 | 2 | 4) {
            continue;
        }
        // the remaining sum must be reachable: either x closes it, or there is
        // room for at least one more part above x
        let rest = remaining - x;
        let next = if x % 3 == 0 { x + 4 } else { x + 3 };
        if rest != 0 && rest < next {
            continue;
        }
        cur.push(x);
        schur_dfs(rest, next, max_part, star, cur, visit);
        cur.pop();
    }
}

fn alladi_dfs(
    remaining: u32,
    next_min: u32,
    max_part: u32,
    cur: &mut Vec<u32>,
    visit: &mut impl FnMut(&[u32]),
) {
    if remaining == 0 {
        visit(cur);
        return;
    }
    let top = remaining.min(max_part);
    let mut x = next_min | 1;
    while x <= top {
        let repeats = cur.len() >= 2 && cur[cur.len() - 1] == x && cur[cur.len() - 2] == x;
        if !repeats {
            cur.push(x);
            alladi_dfs(remaining - x, x, max_part, cur, visit);
            cur.pop();
        }
        x += 2;
    }
}

/// All partitions matching the query, each once, lexicographically ordered.
pub fn enumerate(query: &EnumerationQuery) -> Vec<Partition> {
    let mut out = Vec::new();
    for_each(query, |parts| {
        out.push(Partition::from_sorted(parts.to_vec()))
    });
    out
}

pub fn count(query: &EnumerationQuery) -> u64 {
    let mut total = 0;
    for_each(query, |_| total += 1);
    total
}

/// Every Schur partition with all parts at most `max_part` (any sum).
pub fn for_each_schur_with_max_part(max_part: u32, mut visit: impl FnMut(&[u32])) {
    fn go(next_min: u32, max_part: u32, cur: &mut Vec<u32>, visit: &mut impl FnMut(&[u32])) {
        visit(cur);
        for x in next_min..=max_part {
            cur.push(x);
            go(if x % 3 == 0 { x + 4 } else { x + 3 }, max_part, cur, visit);
            cur.pop();
        }
    }
    go(1, max_part, &mut Vec::new(), &mut visit);
}

/// Every standalone upper minimal segment with sum at most `max_sum`.
pub fn enumerate_upper_minimal_segments(max_sum: u32) -> Vec<Partition> {
    enumerate_upper_segments(max_sum)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn schur_cell_of_eight() {
        let q = EnumerationQuery::new(ClassKind::Schur, 8).with_m(2);
        assert_eq!(enumerate(&q), vec![p("1+7"), p("8")]);
        assert_eq!(count(&q), 2);
    }

    #[test]
    fn alladi_cell_of_eight() {
        let q = EnumerationQuery::new(ClassKind::Alladi, 8).with_m(2);
        assert_eq!(enumerate(&q), vec![p("1+7"), p("3+5")]);
        assert_eq!(count(&q), 2);
    }

    #[test]
    fn empty_partition_of_zero() {
        for kind in [
            ClassKind::Schur,
            ClassKind::Alladi,
            ClassKind::SchurStar,
            ClassKind::AlladiStar,
        ] {
            assert_eq!(
                enumerate(&EnumerationQuery::new(kind, 0)),
                vec![Partition::empty()]
            );
        }
    }

    #[test]
    fn schur_star_of_five() {
        let q = EnumerationQuery::new(ClassKind::SchurStar, 5).with_m(1);
        assert_eq!(enumerate(&q), vec![p("5")]);
    }

    #[test]
    fn g_classes_and_max_part() {
        let q = EnumerationQuery::new(ClassKind::Schur, 12).with_g(2);
        assert_eq!(enumerate(&q), vec![p("1+4+7"), p("2+10")]);
        let q = EnumerationQuery::new(ClassKind::Alladi, 9).with_g(2);
        assert_eq!(enumerate(&q), vec![p("1+1+7")]);
        let q = EnumerationQuery::new(ClassKind::Schur, 12).with_max_part(7);
        assert!(enumerate(&q).iter().all(|x| x.largest().unwrap() <= 7));
        assert!(enumerate(&q).contains(&p("1+4+7")));
    }

    #[test]
    fn exhaustive_against_filter() {
        for n in 0..=18 {
            for kind in [
                ClassKind::Schur,
                ClassKind::Alladi,
                ClassKind::SchurStar,
                ClassKind::AlladiStar,
            ] {
                let got = enumerate(&EnumerationQuery::new(kind, n));
                let want: Vec<Partition> = all_partitions(n)
                    .into_iter()
                    .filter(|x| ClassTag::new(kind).matches(x))
                    .collect();
                assert_eq!(got, want, "{kind:?} n={n}");
            }
        }
    }

    fn all_partitions(n: u32) -> Vec<Partition> {
        fn go(rem: u32, min: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition::from_sorted(cur.clone()));
                return;
            }
            for x in min..=rem {
                cur.push(x);
                go(rem - x, x, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, 1, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn bounded_part_visitor() {
        let mut seen = Vec::new();
        for_each_schur_with_max_part(3, |s| seen.push(s.to_vec()));
        assert_eq!(seen, vec![vec![], vec![1], vec![2], vec![3]]);
    }
}
