//! Exhaustive verification suites.
//!
//! Each suite walks every relevant partition up to a size bound and checks an
//! identity by exact comparison. Suites never stop at the first failure; they
//! count every failed check and keep a few witnesses.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use serde::Serialize;

use crate::enumeration::{enumerate, for_each, for_each_schur_with_max_part, EnumerationQuery};
use crate::error::{Error, Result};
use crate::factorization::{
    enumerate_upper_segments, generic_factorization, is_minimal_segment_constructive,
    is_minimal_segment_gap_rules, maximal_segment_intervals, part_statistics,
    refined_factorization, Factor, Orientation, Quadruple,
};
use crate::maps::{
    alladi_grouping, alladi_reduce, f, f_inverse, f_recursive, grouping, phi, phi_prime, rho,
    rho_by_quadruple, rho_inverse, schur_lift, schur_reduce,
};
use crate::partition::{ClassKind, Partition};
use crate::poly::{
    count_series, d_n, eq4_sides, eq5_sides, eq6_sides, truncated_product_eq2, verify_phi_star,
    PolyCache,
};
use crate::trace::{f_trace, row_sums_partition, to_two_modular, trace_result, StepKind};

/// Every suite name accepted by [`run_suite`], in run order.
pub const SUITES: [&str; 15] = [
    "eq1-counts",
    "g-classes",
    "thm2",
    "rho",
    "psi",
    "f-bijection",
    "diagrams",
    "fixed-points",
    "eq2-truncation",
    "eq4",
    "eq5",
    "eq6",
    "phi-star",
    "segment-defs",
    "trace",
];

/// Polynomial suites cap subscripts here: the number of Schur partitions with
/// parts at most `N` grows too fast past this point for a quick run.
pub const POLY_SUBSCRIPT_CAP: u32 = 24;

const MAX_WITNESSES: usize = 10;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub max_n: u32,
    pub checks: u64,
    pub failures: u64,
    /// The first few failed checks, described.
    pub witnesses: Vec<String>,
    pub elapsed_ms: f64,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Default)]
struct Checker {
    checks: u64,
    failures: u64,
    witnesses: Vec<String>,
}

impl Checker {
    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.fail(describe());
        }
    }

    fn fail(&mut self, witness: String) {
        self.failures += 1;
        if self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(witness);
        }
    }

    fn eq<T: PartialEq + std::fmt::Display>(
        &mut self,
        got: T,
        want: T,
        context: impl FnOnce() -> String,
    ) {
        let ok = got == want;
        self.check(ok, || format!("{}: got {got}, expected {want}", context()));
    }

    /// Records an error as a failed check and yields the value otherwise.
    fn ok<T>(&mut self, r: Result<T>, context: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.checks += 1;
                self.fail(format!("{}: {e}", context()));
                None
            }
        }
    }
}

fn p(text: &str) -> Partition {
    text.parse().expect("literal partition")
}

pub fn run_suite(name: &str, max_n: u32) -> Result<SuiteReport> {
    let start = Instant::now();
    let mut c = Checker::default();
    match name {
        "eq1-counts" => eq1_counts(&mut c, max_n),
        "g-classes" => g_classes(&mut c, max_n),
        "thm2" => thm2(&mut c, max_n),
        "rho" => rho_suite(&mut c, max_n),
        "psi" => psi_suite(&mut c, max_n),
        "f-bijection" => f_bijection(&mut c, max_n),
        "diagrams" => diagrams(&mut c, max_n),
        "fixed-points" => fixed_points(&mut c, max_n),
        "eq2-truncation" => eq2_truncation(&mut c, max_n),
        "eq4" => eq4_suite(&mut c, max_n),
        "eq5" => eq5_suite(&mut c, max_n),
        "eq6" => eq6_suite(&mut c, max_n),
        "phi-star" => phi_star_suite(&mut c, max_n),
        "segment-defs" => segment_defs(&mut c, max_n),
        "trace" => trace_suite(&mut c, max_n),
        _ => {
            return Err(Error::OutOfRange {
                what: "suite",
                detail: format!(
                    "unknown suite {name:?}; expected one of {}",
                    SUITES.join(", ")
                ),
            })
        }
    }
    Ok(SuiteReport {
        name: name.to_string(),
        max_n,
        checks: c.checks,
        failures: c.failures,
        witnesses: c.witnesses,
        elapsed_ms: start.elapsed().as_secs_f64() * 1000.0,
    })
}

pub fn run_all(max_n: u32) -> Vec<SuiteReport> {
    SUITES
        .iter()
        .map(|s| run_suite(s, max_n).expect("known suite"))
        .collect()
}

/// `(m, extra) -> count` over one class at sum `n`.
fn cell_counts(
    kind: ClassKind,
    n: u32,
    extra: impl Fn(&Partition) -> u8,
) -> BTreeMap<(u32, u8), u64> {
    let mut counts = BTreeMap::new();
    for_each(&EnumerationQuery::new(kind, n), |parts| {
        let q = Partition::from_sorted(parts.to_vec());
        *counts.entry((q.m_statistic(), extra(&q))).or_default() += 1;
    });
    counts
}

fn compare_counts(
    c: &mut Checker,
    left: &BTreeMap<(u32, u8), u64>,
    right: &BTreeMap<(u32, u8), u64>,
    label: impl Fn(u32, u8) -> String,
) {
    let keys: BTreeSet<_> = left.keys().chain(right.keys()).collect();
    for &(m, e) in keys {
        let (a, b) = (
            left.get(&(m, e)).copied().unwrap_or(0),
            right.get(&(m, e)).copied().unwrap_or(0),
        );
        c.eq(a, b, || label(m, e));
    }
}

fn schur_up_to(max_n: u32) -> Vec<Partition> {
    (0..=max_n)
        .flat_map(|n| enumerate(&EnumerationQuery::new(ClassKind::Schur, n)))
        .collect()
}

fn eq1_counts(c: &mut Checker, max_n: u32) {
    for n in 0..=max_n {
        let d = cell_counts(ClassKind::Schur, n, |_| 0);
        let a = cell_counts(ClassKind::Alladi, n, |_| 0);
        compare_counts(c, &d, &a, |m, _| format!("|D({m},{n})| vs |C({m},{n})|"));
    }
}

fn g_classes(c: &mut Checker, max_n: u32) {
    for n in 0..=max_n {
        let d = cell_counts(ClassKind::Schur, n, |q| {
            q.classify().schur_g.unwrap_or(u8::MAX)
        });
        let a = cell_counts(ClassKind::Alladi, n, |q| {
            q.classify().alladi_g.unwrap_or(u8::MAX)
        });
        compare_counts(c, &d, &a, |m, g| {
            format!("|[D({m},{n})]_{g}| vs |[C({m},{n})]_{g}|")
        });
        for_each(&EnumerationQuery::new(ClassKind::Schur, n), |parts| {
            let q = Partition::from_sorted(parts.to_vec());
            if let Some(gr) = c.ok(grouping(&q), || format!("G({q})")) {
                c.check(q.classify().schur_g == Some(gr.g), || {
                    format!("g-class of {q} disagrees with G drop {}", gr.g)
                });
            }
        });
    }
}

fn thm2(c: &mut Checker, max_n: u32) {
    for n in 0..=max_n {
        let ds = cell_counts(ClassKind::SchurStar, n, |_| 0);
        let cs = cell_counts(ClassKind::AlladiStar, n, |_| 0);
        compare_counts(c, &ds, &cs, |m, _| {
            format!("|D*({m},{n})| vs |C*({m},{n})|")
        });
        let ms: BTreeSet<u32> = ds.keys().chain(cs.keys()).map(|k| k.0).collect();
        for m in ms {
            let star = ds.get(&(m, 0)).copied().unwrap_or(0);
            let reduced = n
                .checked_sub(2 * m)
                .map(|r| {
                    enumerate(&EnumerationQuery::new(ClassKind::Schur, r).with_m(m)).len() as u64
                })
                .unwrap_or(0);
            c.eq(star, reduced, || {
                format!("|D*({m},{n})| vs |D({m},{n}-2m)|")
            });
        }
    }
}

fn rho_suite(c: &mut Checker, max_n: u32) {
    for (from, to) in [
        ("5+10+14", "2+6+11"),
        ("5+9+14", "2+7+11"),
        (
            "23+27+31+34+37+40+44+48+52+56",
            "20+24+28+31+34+37+40+44+49+53",
        ),
    ] {
        if let Some(img) = c.ok(rho(&p(from)), || format!("rho({from})")) {
            c.eq(img, p(to), || format!("rho({from})"));
        }
    }
    for seg in enumerate_upper_segments(max_n) {
        let Some(q) = c.ok(Quadruple::encode(&seg, Orientation::Upper), || {
            format!("encode {seg}")
        }) else {
            continue;
        };
        c.check(
            seg.parts()[0] % 2 == 1 && seg.parts()[seg.len() - 1] % 2 == 0,
            || format!("{seg} does not start odd and end even"),
        );
        let Some(img) = c.ok(rho(&seg), || format!("rho({seg})")) else {
            continue;
        };
        c.check(
            is_minimal_segment_gap_rules(&img, Orientation::Lower)
                && is_minimal_segment_constructive(&img, Orientation::Lower),
            || format!("rho({seg}) = {img} is not a lower minimal segment"),
        );
        if let Some(qi) = c.ok(Quadruple::encode(&img, Orientation::Lower), || {
            format!("encode {img}")
        }) {
            let want = Quadruple {
                smallest: q.smallest - 3,
                ..q.clone()
            };
            c.eq(qi, want, || format!("quadruple of rho({seg})"));
        }
        c.eq(seg.sigma() - img.sigma(), 2 * (q.odd + 2 * q.even), || {
            format!("weight drop of rho({seg})")
        });
        if let (Some(a), Some(b)) = (
            c.ok(part_statistics(&seg, Orientation::Upper), || {
                format!("stats {seg}")
            }),
            c.ok(part_statistics(&img, Orientation::Lower), || {
                format!("stats {img}")
            }),
        ) {
            c.check(a == b, || format!("rho({seg}) changes (odd, even, p1, p2)"));
        }
        if let Some(back) = c.ok(rho_inverse(&img), || format!("rho^-1({img})")) {
            c.eq(back, seg.clone(), || format!("rho^-1(rho({seg}))"));
        }
        if let Some(alt) = c.ok(rho_by_quadruple(&seg), || {
            format!("rho by quadruple ({seg})")
        }) {
            c.eq(alt, img.clone(), || format!("two routes for rho({seg})"));
        }
        // h sends the segment to a lower one with odd and even counts swapped
        if let Some(h) = c.ok(seg.shifted(-3), || format!("h({seg})")) {
            let want = Quadruple {
                word: q.word.clone(),
                odd: q.even,
                even: q.odd,
                smallest: q.smallest - 3,
            };
            let got = Quadruple::encode(&h, Orientation::Lower);
            c.check(got.as_ref() == Ok(&want), || {
                format!("h({seg}) = {h} has quadruple {got:?}, expected {want}")
            });
        }
    }
}

/// The refined lower factor each refined upper factor should go to under ψ.
fn psi_factor_image(factor: &Factor) -> Result<Factor> {
    Ok(match factor {
        Factor::OddSingleton { part } => Factor::singleton(part - 2),
        Factor::EvenSingleton { part } => Factor::singleton(part - 4),
        Factor::Pair { low, .. } => Factor::pair(low - 3),
        Factor::Segment { parts } => Factor::Segment {
            parts: rho(&Partition::from_sorted(parts.clone()))?.into_parts(),
        },
    })
}

fn psi_suite(c: &mut Checker, max_n: u32) {
    let example = p("15+20+35+40+43+46+50+55+60+73+77+82+85+90+94");
    let once = p("12+17+32+36+40+43+47+52+57+71+75+79+82+86+90");
    let twice = p("8+15+28+32+37+40+44+49+55+68+72+76+79+83+87");
    if let Some(img) = c.ok(schur_reduce(&example), || {
        "psi of the worked example".into()
    }) {
        c.eq(img.clone(), once.clone(), || {
            "psi of the worked example".into()
        });
        if let Some(img2) = c.ok(schur_reduce(&img), || "psi^2 of the worked example".into()) {
            c.eq(img2, twice, || "psi^2 of the worked example".into());
        }
    }
    for n in 0..=max_n {
        for q in enumerate(&EnumerationQuery::new(ClassKind::SchurStar, n)) {
            let Some(img) = c.ok(schur_reduce(&q), || format!("psi({q})")) else {
                continue;
            };
            c.check(img.is_schur(), || format!("psi({q}) = {img} is not Schur"));
            c.eq(q.sigma() - img.sigma(), 2 * q.m_statistic(), || {
                format!("weight drop of psi({q})")
            });
            c.eq(img.m_statistic(), q.m_statistic(), || {
                format!("m of psi({q})")
            });
            if let (Some(a), Some(b)) = (
                c.ok(part_statistics(&q, Orientation::Upper), || {
                    format!("stats {q}")
                }),
                c.ok(part_statistics(&img, Orientation::Lower), || {
                    format!("stats {img}")
                }),
            ) {
                c.check(a == b, || format!("psi({q}) changes (odd, even, p1, p2)"));
            }
            if let Some(back) = c.ok(schur_lift(&img), || format!("lift({img})")) {
                c.eq(back, q.clone(), || format!("lift(psi({q}))"));
            }
            if let (Some(up), Some(low)) = (
                c.ok(refined_factorization(&q, Orientation::Upper), || {
                    format!("refine {q}")
                }),
                c.ok(refined_factorization(&img, Orientation::Lower), || {
                    format!("refine {img}")
                }),
            ) {
                let mapped: Result<Vec<Factor>> = up.factors.iter().map(psi_factor_image).collect();
                if let Some(mapped) = c.ok(mapped, || format!("factor images of {q}")) {
                    c.check(mapped == low.factors, || {
                        format!("factors of {q} do not map onto the refined lower factors of {img}")
                    });
                }
            }
        }
        // the lift lands in D* and ψ undoes it
        for q in enumerate(&EnumerationQuery::new(ClassKind::Schur, n)) {
            if let Some(up) = c.ok(schur_lift(&q), || format!("lift({q})")) {
                c.check(up.is_schur_star(), || {
                    format!("lift({q}) = {up} is not in D*")
                });
                if let Some(down) = c.ok(schur_reduce(&up), || format!("psi({up})")) {
                    c.eq(down, q.clone(), || format!("psi(lift({q}))"));
                }
            }
        }
    }
}

fn f_bijection(c: &mut Checker, max_n: u32) {
    for n in 0..=max_n {
        let mut images: BTreeMap<u32, BTreeSet<Partition>> = BTreeMap::new();
        for q in enumerate(&EnumerationQuery::new(ClassKind::Schur, n)) {
            let Some(a) = c.ok(f(&q), || format!("f({q})")) else {
                continue;
            };
            c.check(a.is_alladi(), || format!("f({q}) = {a} is not Alladi"));
            c.eq(a.sigma(), q.sigma(), || format!("sum of f({q})"));
            c.eq(a.m_statistic(), q.m_statistic(), || format!("m of f({q})"));
            if let Some(r) = c.ok(f_recursive(&q), || format!("recursive f({q})")) {
                c.eq(r, a.clone(), || format!("unrolled vs recursive f({q})"));
            }
            if let Some(back) = c.ok(f_inverse(&a), || format!("f^-1({a})")) {
                c.eq(back, q.clone(), || format!("f^-1(f({q}))"));
            }
            let fresh = images.entry(q.m_statistic()).or_default().insert(a.clone());
            c.check(fresh, || format!("f is not injective at {a}"));
        }
        let mut alladi: BTreeMap<u32, BTreeSet<Partition>> = BTreeMap::new();
        for a in enumerate(&EnumerationQuery::new(ClassKind::Alladi, n)) {
            if let Some(q) = c.ok(f_inverse(&a), || format!("f^-1({a})")) {
                if let Some(back) = c.ok(f(&q), || format!("f({q})")) {
                    c.eq(back, a.clone(), || format!("f(f^-1({a}))"));
                }
            }
            alladi.entry(a.m_statistic()).or_default().insert(a);
        }
        c.check(images == alladi, || {
            format!("f(D(m,{n})) differs from C(m,{n}) for some m")
        });
    }
}

fn diagrams(c: &mut Checker, max_n: u32) {
    // the worked five-column diagram: top row by ψ, G, ψ, G; bottom row by f
    let top = ["3+7+14", "1+5+10", "5+10", "2+7", "7"];
    let bottom = ["3+5+5+11", "1+3+3+9", "3+3+9", "1+1+7", "7"];
    for (i, w) in top.windows(2).enumerate() {
        let (from, to) = (p(w[0]), p(w[1]));
        let step = if i % 2 == 0 {
            schur_reduce(&from)
        } else {
            grouping(&from).map(|g| g.image)
        };
        if let Some(got) = c.ok(step, || format!("diagram step from {from}")) {
            c.eq(got, to, || format!("diagram step from {from}"));
        }
    }
    for (i, w) in bottom.windows(2).enumerate() {
        let (from, to) = (p(w[0]), p(w[1]));
        let step = if i % 2 == 0 {
            alladi_reduce(&from)
        } else {
            alladi_grouping(&from).map(|g| g.image)
        };
        if let Some(got) = c.ok(step, || format!("diagram step from {from}")) {
            c.eq(got, to, || format!("diagram step from {from}"));
        }
    }
    for (t, b) in top.iter().zip(bottom) {
        if let Some(got) = c.ok(f(&p(t)), || format!("f({t})")) {
            c.eq(got, p(b), || format!("diagram column f({t})"));
        }
    }

    for n in 0..=max_n {
        let mut phi_cells: BTreeMap<u32, BTreeSet<Partition>> = BTreeMap::new();
        let mut phi_count: BTreeMap<u32, usize> = BTreeMap::new();
        for q in enumerate(&EnumerationQuery::new(ClassKind::Schur, n)) {
            let fq = c.ok(f(&q), || format!("f({q})"));
            let ph = c.ok(phi(&q), || format!("phi({q})"));
            if let (Some(fq), Some(ph)) = (&fq, &ph) {
                let left = f(ph);
                let right = phi_prime(fq);
                c.check(
                    left.is_ok() && left.as_ref().ok() == right.as_ref().ok(),
                    || format!("f(phi({q})) = {left:?} but phi'(f({q})) = {right:?}"),
                );
            }
            if let (Some(fq), Some(gq)) = (&fq, c.ok(grouping(&q), || format!("G({q})"))) {
                let left = alladi_grouping(fq);
                let right = f(&gq.image);
                c.check(
                    matches!((&left, &right), (Ok(l), Ok(r)) if l.image == *r && l.g == gq.g),
                    || format!("G'(f({q})) = {left:?} but f(G({q})) = {right:?}"),
                );
            }
            if q.is_schur_star() {
                if let Some(fq) = &fq {
                    let left = alladi_reduce(fq);
                    let right = schur_reduce(&q).and_then(|x| f(&x));
                    c.check(
                        left.is_ok() && left.as_ref().ok() == right.as_ref().ok(),
                        || format!("psi'(f({q})) = {left:?} but f(psi({q})) = {right:?}"),
                    );
                }
            }
            if let Some(ph) = ph {
                let m = q.m_statistic();
                let g = m.checked_sub(ph.m_statistic());
                let lands = matches!(g, Some(g @ 0..=2) if ph.sigma() + 2 * m == n + g);
                c.check(lands, || format!("phi({q}) = {ph} outside D(m-g, n-2m+g)"));
                *phi_count.entry(m).or_default() += 1;
                phi_cells.entry(m).or_default().insert(ph);
            }
        }
        // φ restricted to D(m, n) is onto ∪_g D(m-g, n-2m+g)
        for (m, image) in phi_cells {
            let mut union = BTreeSet::new();
            for g in 0..=2u32 {
                if let (Some(mm), Some(nn)) = (m.checked_sub(g), (n + g).checked_sub(2 * m)) {
                    union.extend(enumerate(
                        &EnumerationQuery::new(ClassKind::Schur, nn).with_m(mm),
                    ));
                }
            }
            c.check(image.len() == phi_count[&m] && image == union, || {
                format!("phi on D({m},{n}) is not a bijection onto the three-cell union")
            });
        }
    }
}

fn fixed_points(c: &mut Checker, max_n: u32) {
    for q in schur_up_to(max_n).into_iter().filter(Partition::is_alladi) {
        if let Some(a) = c.ok(f(&q), || format!("f({q})")) {
            c.eq(a, q.clone(), || format!("f({q})"));
        }
    }
}

fn eq2_truncation(c: &mut Checker, max_n: u32) {
    let terms = max_n / 2 + 1;
    let Some(product) = c.ok(truncated_product_eq2(terms, max_n), || {
        format!("product with {terms} factors")
    }) else {
        return;
    };
    let alladi = count_series(ClassKind::Alladi, max_n);
    let schur = count_series(ClassKind::Schur, max_n);
    c.check(product == alladi, || {
        format!(
            "{terms}-factor product differs from Alladi counts mod q^{}",
            max_n + 1
        )
    });
    c.check(product == schur, || {
        format!(
            "{terms}-factor product differs from Schur counts mod q^{}",
            max_n + 1
        )
    });
    // d_N agrees with the full series through q^N
    let cap = max_n.min(POLY_SUBSCRIPT_CAP);
    let d = d_n(cap as i64).truncate_q(cap);
    c.check(d == product.truncate_q(cap), || {
        format!("d_{cap} differs from the product through q^{cap}")
    });
}

fn poly_cap(max_n: u32) -> i64 {
    max_n.clamp(6, POLY_SUBSCRIPT_CAP) as i64
}

fn eq4_suite(c: &mut Checker, max_n: u32) {
    let mut cache = PolyCache::new();
    for n in 1..=poly_cap(max_n) / 2 {
        if let Some(sides) = c.ok(eq4_sides(&mut cache, n), || format!("eq4 N={n}")) {
            c.check(sides.holds(), || {
                format!("{} fails: lhs {} rhs {}", sides.name, sides.lhs, sides.rhs)
            });
        }
    }
    // every part of φ(π) is at most 2N − 3 when every part of π is at most 2N
    for q in schur_up_to(max_n) {
        let bound = 2 * q.largest().map_or(0, |l| l.div_ceil(2)) as i64 - 3;
        if let Some(ph) = c.ok(phi(&q), || format!("phi({q})")) {
            c.check(ph.largest().is_none_or(|l| l as i64 <= bound), || {
                format!("phi({q}) = {ph} has a part above {bound}")
            });
        }
    }
}

fn eq5_suite(c: &mut Checker, max_n: u32) {
    let mut cache = PolyCache::new();
    for n in 3..=(poly_cap(max_n) + 1) / 2 {
        if let Some(sides) = c.ok(eq5_sides(&mut cache, n), || format!("eq5 N={n}")) {
            c.check(sides.holds(), || {
                format!("{} fails: lhs {} rhs {}", sides.name, sides.lhs, sides.rhs)
            });
        }
    }
}

fn eq6_suite(c: &mut Checker, max_n: u32) {
    let mut cache = PolyCache::new();
    for n in 2..=poly_cap(max_n) {
        if let Some(sides) = c.ok(eq6_sides(&mut cache, n), || format!("eq6 N={n}")) {
            c.check(sides.holds(), || {
                format!("{} fails: lhs {} rhs {}", sides.name, sides.lhs, sides.rhs)
            });
        }
    }
}

fn phi_star_suite(c: &mut Checker, max_n: u32) {
    for (n_sub, bound) in [(1, 12), (2, 24)] {
        let bound = bound.min(max_n);
        if let Some(report) = c.ok(verify_phi_star(n_sub, bound), || format!("phi* N={n_sub}")) {
            c.checks += report.cells.len() as u64;
            for w in report.witnesses {
                c.fail(format!("phi* N={n_sub}: {w}"));
            }
        }
    }
}

fn segment_defs(c: &mut Checker, max_n: u32) {
    let schur = schur_up_to(max_n);
    for q in &schur {
        for orientation in [Orientation::Upper, Orientation::Lower] {
            let Some(factors) = c.ok(generic_factorization(q, orientation), || {
                format!("factor {q}")
            }) else {
                continue;
            };
            // every interval with singleton endpoints, judged by both definitions
            for i in 0..factors.len() {
                if !factors[i].is_singleton() {
                    continue;
                }
                for j in i..factors.len() {
                    if !factors[j].is_singleton() {
                        continue;
                    }
                    let parts: Vec<u32> = factors[i..=j].iter().flat_map(Factor::parts).collect();
                    let seg = Partition::from_sorted(parts);
                    let a = is_minimal_segment_constructive(&seg, orientation);
                    let b = is_minimal_segment_gap_rules(&seg, orientation);
                    c.check(a == b, || {
                        format!(
                            "{} {seg} inside {q}: constructive {a}, gap rules {b}",
                            orientation.name()
                        )
                    });
                }
            }
            match maximal_segment_intervals(q, &factors, orientation) {
                Ok(intervals) => {
                    let disjoint = intervals.windows(2).all(|w| w[0].1 < w[1].0);
                    c.check(disjoint, || format!("overlapping segments in {q}"));
                }
                Err(e) => {
                    c.checks += 1;
                    c.fail(e.to_string());
                }
            }
            if let Some(refined) = c.ok(refined_factorization(q, orientation), || {
                format!("refine {q}")
            }) {
                c.check(refined.parts() == q.parts(), || {
                    format!("refined factors of {q} do not cover it")
                });
                for seg in refined.segments() {
                    let gaps: Vec<u32> = seg.windows(2).map(|w| w[1] - w[0]).collect();
                    let fives = gaps.iter().filter(|&&g| g == 5).count();
                    let ok = gaps.iter().all(|g| (3..=5).contains(g))
                        && fives <= 1
                        && gaps.first().is_some_and(|&g| g >= 4)
                        && gaps.last().is_some_and(|&g| g >= 4);
                    c.check(ok, || format!("segment {seg:?} of {q} has gaps {gaps:?}"));
                }
            }
        }
    }
    // closure enumeration against filtering by the gap-rule recognizer
    let closure: BTreeSet<Partition> = enumerate_upper_segments(max_n).into_iter().collect();
    let filtered: BTreeSet<Partition> = schur
        .into_iter()
        .filter(|q| !q.is_empty() && is_minimal_segment_gap_rules(q, Orientation::Upper))
        .collect();
    c.check(closure == filtered, || {
        let extra: Vec<String> = closure
            .symmetric_difference(&filtered)
            .take(5)
            .map(|x| x.to_string())
            .collect();
        format!("closure and recognizer disagree on {}", extra.join(", "))
    });
}

fn trace_suite(c: &mut Checker, max_n: u32) {
    let worked = p("7+11+14+18");
    if let Some(steps) = c.ok(f_trace(&worked, true), || "worked trace".into()) {
        let states: Vec<String> = steps
            .iter()
            .take(5)
            .map(|s| s.schur_state.to_string())
            .collect();
        c.check(
            states == ["7+11+14+18", "4+8+11+15", "1+5+8+13", "2+5+11", "3+9"],
            || format!("worked trace states {states:?}"),
        );
        let gs: Vec<u8> = steps.iter().skip(1).take(4).map(|s| s.g_used).collect();
        c.check(gs == [0, 1, 1, 2], || {
            format!("worked trace g values {gs:?}")
        });
        let lens: Vec<u32> = steps
            .iter()
            .skip(1)
            .take(4)
            .map(|s| s.column_length)
            .collect();
        c.check(lens == [6, 6, 5, 4], || {
            format!("worked trace columns {lens:?}")
        });
        let result = trace_result(&steps);
        c.check(result.as_ref().ok() == Some(&p("3+5+7+7+11+17")), || {
            format!("worked trace result {result:?}")
        });
    }
    for q in schur_up_to(max_n) {
        let Some(fq) = c.ok(f(&q), || format!("f({q})")) else {
            continue;
        };
        for early in [true, false] {
            let Some(steps) = c.ok(f_trace(&q, early), || format!("trace {q}")) else {
                continue;
            };
            for w in steps.windows(2) {
                let (before, after) = (&w[0], &w[1]);
                if after.kind != StepKind::Column {
                    continue;
                }
                c.eq(
                    after.column_length,
                    before.schur_state.m_statistic(),
                    || format!("column length in trace of {q}"),
                );
                let col = after
                    .graph
                    .rows
                    .iter()
                    .take(after.column_length as usize)
                    .map(|r| *r.last().unwrap_or(&0));
                let want = (0..after.column_length).map(|i| {
                    if i + after.g_used as u32 >= after.column_length {
                        1
                    } else {
                        2
                    }
                });
                c.check(col.eq(want), || {
                    format!("appended column in trace of {q} has misplaced 1s")
                });
                c.check(after.graph.check_shape().is_ok(), || {
                    format!("graph shape in trace of {q}")
                });
            }
            if let Some(got) = c.ok(trace_result(&steps), || format!("trace result {q}")) {
                c.eq(got, fq.clone(), || format!("trace of {q} vs f"));
            }
        }
        // removing the leftmost column gives φ′(f(π))
        let last =
            to_two_modular(&fq).and_then(|g| row_sums_partition(&g.without_leftmost_column()));
        let want = phi_prime(&fq);
        c.check(
            last.is_ok() && last.as_ref().ok() == want.as_ref().ok(),
            || format!("leftmost column of f({q}) = {fq}: {last:?} vs {want:?}"),
        );
    }
}

/// Schur partitions with all parts at most `max_part`, used by benchmarks.
pub fn schur_with_max_part(max_part: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    for_each_schur_with_max_part(max_part, |parts| {
        out.push(Partition::from_sorted(parts.to_vec()))
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes_small() {
        for name in SUITES {
            let r = run_suite(name, 14).unwrap();
            assert!(r.passed(), "{name}: {:?}", r.witnesses);
            assert!(r.checks > 0, "{name}");
        }
    }

    #[test]
    fn unknown_suite() {
        assert!(run_suite("nope", 5).is_err());
    }
}
