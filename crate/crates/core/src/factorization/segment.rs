//! Minimal segments.
//!
//! Two independent recognizers live here:
//!
//! - [`is_minimal_segment_constructive`] parses a partition against the
//!   primitive forms and the prefix/suffix production rules;
//! - [`is_minimal_segment_gap_rules`] checks the local gap rules on the
//!   generic factorization.
//!
//! Upper minimal segments begin with an odd singleton greater than 3 and end
//! with an even singleton. Lower minimal segments are exactly the upper ones
//! with 3 subtracted from every part.

use std::collections::{BTreeSet, HashMap};

use super::{generic_factors, Factor, Orientation};
use crate::partition::{is_schur, Partition};

/// Role of a factor inside an upper-oriented segment. For lower segments,
/// singleton parities are swapped so the same table applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Role {
    Odd,
    Even,
    Pair,
}

fn role(f: &Factor, orientation: Orientation) -> Option<Role> {
    let flip = orientation == Orientation::Lower;
    match f {
        Factor::OddSingleton { .. } => Some(if flip { Role::Even } else { Role::Odd }),
        Factor::EvenSingleton { .. } => Some(if flip { Role::Odd } else { Role::Even }),
        Factor::Pair { .. } => Some(Role::Pair),
        Factor::Segment { .. } => None,
    }
}

/// Required gap from the last part of one factor to the first part of the
/// next. `None` means the transition never occurs inside a segment.
fn required_gap(from: Role, to: Role) -> Option<u32> {
    use Role::*;
    match (from, to) {
        (Odd, Odd) | (Even, Even) => Some(4),
        (Odd, Even) => Some(5),
        (Odd, Pair) | (Pair, Even) => Some(4),
        (Even, Pair) | (Pair, Odd) => Some(3),
        (Pair, Pair) => Some(3),
        (Even, Odd) => None,
    }
}

pub(crate) fn can_start(f: &Factor, orientation: Orientation) -> bool {
    match (orientation, f) {
        (Orientation::Upper, Factor::OddSingleton { part }) => *part > 3,
        (Orientation::Lower, Factor::EvenSingleton { .. }) => true,
        _ => false,
    }
}

pub(crate) fn can_end(f: &Factor, orientation: Orientation) -> bool {
    matches!(
        (orientation, f),
        (Orientation::Upper, Factor::EvenSingleton { .. })
            | (Orientation::Lower, Factor::OddSingleton { .. })
    )
}

/// Whether a run of consecutive generic factors forms a minimal segment
/// under the gap rules.
pub fn segment_factors_follow_gap_rules(factors: &[Factor], orientation: Orientation) -> bool {
    let (Some(first), Some(last)) = (factors.first(), factors.last()) else {
        return false;
    };
    if !can_start(first, orientation) || !can_end(last, orientation) {
        return false;
    }
    let mut prev: Option<(Role, u32)> = None;
    for f in factors {
        let Some(r) = role(f, orientation) else {
            return false;
        };
        if let Some((pr, last_part)) = prev {
            match required_gap(pr, r) {
                Some(gap) if f.first() == last_part + gap => {}
                _ => return false,
            }
        }
        prev = Some((r, f.last()));
    }
    // Every even singleton exceeds every odd singleton: no Even role is ever
    // followed by an Odd role, and pairs cannot separate them.
    let mut seen_even = false;
    for f in factors {
        match role(f, orientation) {
            Some(Role::Even) => seen_even = true,
            Some(Role::Odd) if seen_even => return false,
            _ => {}
        }
    }
    true
}

/// Gap-rule recognizer on a standalone partition. The lower case is decided
/// on the partition with 3 added to every part.
pub fn is_minimal_segment_gap_rules(p: &Partition, orientation: Orientation) -> bool {
    let parts: Vec<u32> = match orientation {
        Orientation::Upper => p.parts().to_vec(),
        Orientation::Lower => p.parts().iter().map(|x| x + 3).collect(),
    };
    if !is_schur(&parts) {
        return false;
    }
    segment_factors_follow_gap_rules(
        &generic_factors(&parts, Orientation::Upper),
        Orientation::Upper,
    )
}

/// Constructive recognizer: upper segments are parsed as prefix blocks, one
/// primitive core and suffix blocks; lower segments are the images of upper
/// ones under subtracting 3.
pub fn is_minimal_segment_constructive(p: &Partition, orientation: Orientation) -> bool {
    let parts: Vec<u32> = match orientation {
        Orientation::Upper => p.parts().to_vec(),
        Orientation::Lower => p.parts().iter().map(|x| x + 3).collect(),
    };
    if parts.is_empty() || !is_schur(&parts) {
        return false;
    }
    Parser::new(&parts).member(0, parts.len() - 1)
}

struct Parser<'a> {
    parts: &'a [u32],
    memo: HashMap<(usize, usize), bool>,
}

impl<'a> Parser<'a> {
    fn new(parts: &'a [u32]) -> Self {
        Parser {
            parts,
            memo: HashMap::new(),
        }
    }

    /// Whether `parts[lo..=hi]` is in the closure.
    fn member(&mut self, lo: usize, hi: usize) -> bool {
        if let Some(&known) = self.memo.get(&(lo, hi)) {
            return known;
        }
        let result = is_primitive(&self.parts[lo..=hi])
            || self.strip_suffix(lo, hi)
            || self.strip_prefix(lo, hi);
        self.memo.insert((lo, hi), result);
        result
    }

    /// Suffix block `[e+3,e+6],...,[e+3(p-1),e+3p], e+3p+4, ..., e+3p+4y`
    /// with `p` even and positive, `y` positive, after a largest part `e`
    /// that is even and not a multiple of 3.
    fn strip_suffix(&mut self, lo: usize, hi: usize) -> bool {
        let s = self.parts;
        let mut y = 1;
        // e, two pair elements and y evens
        while hi + 1 >= lo + 3 + y {
            let first_even = hi + 1 - y;
            if s[first_even] % 2 != 0 || (y > 1 && s[first_even + 1] != s[first_even] + 4) {
                break;
            }
            let pair_end = first_even - 1;
            if s[pair_end] + 4 == s[first_even] {
                // pair elements are s[a..=pair_end], e = s[a - 1]
                let mut a = pair_end;
                while a > lo + 1 && s[a - 1] + 3 == s[a] {
                    a -= 1;
                    if (pair_end - a + 1) % 2 == 0 {
                        let e_idx = a - 1;
                        let e = s[e_idx];
                        if e + 3 == s[a] && e % 2 == 0 && e % 3 != 0 && self.member(lo, e_idx) {
                            return true;
                        }
                    }
                }
            }
            y += 1;
        }
        false
    }

    /// Prefix block `o', o'+4, ..., o'+4k, [o'+4k+4, o'+4k+7], ...,
    /// [o'+4k+3p-2, o'+4k+3p+1]` with `o' > 3` odd, `k >= 0`, `p` even and
    /// positive, before a smallest part `o = o'+4k+3p+4` not divisible by 3.
    fn strip_prefix(&mut self, lo: usize, hi: usize) -> bool {
        let s = self.parts;
        let o_prime = s[lo];
        if o_prime % 2 == 0 || o_prime <= 3 {
            return false;
        }
        // k+1 odd singletons with gap 4
        let mut last_odd = lo;
        loop {
            let pair_start = last_odd + 1;
            if pair_start <= hi && s[pair_start] == s[last_odd] + 4 {
                // pair elements with gap 3
                let mut end = pair_start;
                while end < hi && s[end + 1] == s[end] + 3 {
                    end += 1;
                    let count = end - pair_start + 1;
                    let o_idx = end + 1;
                    if count % 2 == 0 && o_idx <= hi {
                        let o = s[o_idx];
                        if o == s[end] + 3 && o % 3 != 0 && self.member(o_idx, hi) {
                            return true;
                        }
                    }
                }
            }
            if last_odd < hi && s[last_odd + 1] == s[last_odd] + 4 && s[last_odd + 1] % 2 == 1 {
                last_odd += 1;
            } else {
                return false;
            }
        }
    }
}

/// Primitive upper minimal segments.
///
/// Form 1: `o, o+4, ..., o+4x, o+4x+5, o+4x+9, ..., o+4(x+y)+5`.
/// Form 2: `o, ..., o+4x, [q+3, q+6], ..., [q+3p-3, q+3p], q+3p+4, ..., q+3p+4y`
/// where `q = o+4x+1` is not a multiple of 3, `p` is even and positive and
/// `y` is positive.
fn is_primitive(s: &[u32]) -> bool {
    let o = s[0];
    if o % 2 == 0 || o <= 3 {
        return false;
    }
    let evens_from = |start: usize| -> bool {
        start < s.len() && s[start] % 2 == 0 && s[start..].windows(2).all(|w| w[1] == w[0] + 4)
    };
    let mut run = 1;
    while run < s.len() && s[run] == s[run - 1] + 4 {
        run += 1;
    }
    // the first pair element is also 4 above the last odd singleton, so try
    // every split of the gap-4 run
    (1..=run.min(s.len() - 1)).any(|i| {
        let last_odd = s[i - 1];
        if s[i] == last_odd + 5 {
            return evens_from(i);
        }
        let q = last_odd + 1;
        if s[i] != q + 3 || q % 3 == 0 {
            return false;
        }
        let mut j = i + 1;
        while j < s.len() && s[j] == s[j - 1] + 3 {
            j += 1;
        }
        let pair_elements = j - i;
        pair_elements % 2 == 0 && j < s.len() && s[j] == s[j - 1] + 4 && evens_from(j)
    })
}

fn primitives(max_sum: u32, out: &mut BTreeSet<Vec<u32>>) {
    let mut o = 5;
    while o <= max_sum {
        // x+1 odd singletons
        let mut odds = vec![o];
        while odds.iter().sum::<u32>() <= max_sum {
            let base: u32 = odds.iter().sum();
            let last_odd = *odds.last().unwrap();
            // form 1
            let mut seg = odds.clone();
            let mut e = last_odd + 5;
            let mut total = base;
            while total + e <= max_sum {
                seg.push(e);
                total += e;
                out.insert(seg.clone());
                e += 4;
            }
            // form 2
            let q = last_odd + 1;
            if q % 3 != 0 {
                let mut pairs = odds.clone();
                let mut total = base;
                let mut k = 1;
                loop {
                    let a = q + 3 * (2 * k - 1);
                    let b = a + 3;
                    if total + a + b > max_sum {
                        break;
                    }
                    pairs.push(a);
                    pairs.push(b);
                    total += a + b;
                    let mut seg = pairs.clone();
                    let mut e = b + 4;
                    let mut t = total;
                    while t + e <= max_sum {
                        seg.push(e);
                        t += e;
                        out.insert(seg.clone());
                        e += 4;
                    }
                    k += 1;
                }
            }
            odds.push(last_odd + 4);
        }
        o += 2;
    }
}

fn suffix_extensions(seg: &[u32], max_sum: u32, out: &mut Vec<Vec<u32>>) {
    let e = *seg.last().unwrap();
    if e % 2 != 0 || e % 3 == 0 {
        return;
    }
    let base: u32 = seg.iter().sum();
    let mut with_pairs = seg.to_vec();
    let mut total = base;
    let mut top = e;
    loop {
        let (a, b) = (top + 3, top + 6);
        if total + a + b > max_sum {
            return;
        }
        with_pairs.push(a);
        with_pairs.push(b);
        total += a + b;
        top = b;
        let mut ext = with_pairs.clone();
        let mut t = total;
        let mut v = top + 4;
        while t + v <= max_sum {
            ext.push(v);
            t += v;
            out.push(ext.clone());
            v += 4;
        }
    }
}

fn prefix_extensions(seg: &[u32], max_sum: u32, out: &mut Vec<Vec<u32>>) {
    let o = seg[0];
    if o % 3 == 0 {
        return;
    }
    let base: u32 = seg.iter().sum();
    // o' + 4k + 3p + 4 = o
    let mut p = 2;
    while 3 * p + 4 + 5 <= o {
        let mut k = 0;
        while 4 * k + 3 * p + 4 + 5 <= o {
            let o_prime = o - 4 * k - 3 * p - 4;
            let mut block: Vec<u32> = (0..=k).map(|i| o_prime + 4 * i).collect();
            let first_pair = o_prime + 4 * k + 4;
            block.extend((0..p).map(|i| first_pair + 3 * i));
            if base + block.iter().sum::<u32>() <= max_sum {
                block.extend_from_slice(seg);
                out.push(block);
            }
            k += 1;
        }
        p += 2;
    }
}

/// Every standalone upper minimal segment with sum at most `max_sum`, built as
/// the closure of the primitive forms under the prefix and suffix rules.
/// Ascending lexicographic order.
pub fn enumerate_upper_segments(max_sum: u32) -> Vec<Partition> {
    let mut found = BTreeSet::new();
    primitives(max_sum, &mut found);
    let mut work: Vec<Vec<u32>> = found.iter().cloned().collect();
    let mut next = Vec::new();
    while let Some(seg) = work.pop() {
        next.clear();
        suffix_extensions(&seg, max_sum, &mut next);
        prefix_extensions(&seg, max_sum, &mut next);
        for ext in next.drain(..) {
            if is_schur(&ext) && found.insert(ext.clone()) {
                work.push(ext);
            }
        }
    }
    found
        .into_iter()
        .filter(|s| is_schur(s))
        .map(Partition::from_sorted)
        .collect()
}
