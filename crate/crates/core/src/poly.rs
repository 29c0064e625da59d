//! Exact bivariate polynomials in `x` and `q`, the Alladi-Schur polynomials
//! `d_N(x)`, and the recurrences they satisfy.
//!
//! `d_N` is built by enumerating Schur partitions with parts at most `N`, so
//! the recurrence checks never use the recurrences themselves.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::enumeration::{enumerate, for_each_schur_with_max_part, EnumerationQuery};
use crate::error::{Error, Result};
use crate::maps::{phi, phi_inverse, DomainIndex};
use crate::partition::{ClassKind, Partition};

/// Sparse polynomial: `(x exponent, q exponent) -> coefficient`, no zeros
/// stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BivariatePoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BivariatePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn monomial(coeff: i64, x_exp: u32, q_exp: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(x_exp, q_exp, BigInt::from(coeff));
        p
    }

    /// `1 + xq + x²q²`.
    pub fn lambda() -> Self {
        Self::one() + Self::monomial(1, 1, 1) + Self::monomial(1, 2, 2)
    }

    pub fn add_term(&mut self, x_exp: u32, q_exp: u32, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry((x_exp, q_exp)).or_default();
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&(x_exp, q_exp));
        }
    }

    pub fn coeff(&self, x_exp: u32, q_exp: u32) -> BigInt {
        self.terms.get(&(x_exp, q_exp)).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms as `(x exponent, q exponent, coefficient)` sorted by `(q, x)`.
    pub fn terms(&self) -> Vec<(u32, u32, BigInt)> {
        let mut out: Vec<_> = self
            .terms
            .iter()
            .map(|(&(m, n), c)| (m, n, c.clone()))
            .collect();
        out.sort_by_key(|&(m, n, _)| (n, m));
        out
    }

    /// `x -> x q²`: each `x^m q^n` becomes `x^m q^(n+2m)`.
    pub fn substitute_x_q2(&self) -> Self {
        BivariatePoly {
            terms: self
                .terms
                .iter()
                .map(|(&(m, n), c)| ((m, n + 2 * m), c.clone()))
                .collect(),
        }
    }

    /// Drops every term with q exponent above `bound`.
    pub fn truncate_q(&self, bound: u32) -> Self {
        BivariatePoly {
            terms: self
                .terms
                .iter()
                .filter(|(&(_, n), _)| n <= bound)
                .map(|(&k, c)| (k, c.clone()))
                .collect(),
        }
    }

    pub fn max_q_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, n)| n).max()
    }

    fn mul_ref(&self, other: &Self, q_bound: Option<u32>) -> Self {
        let mut out = Self::zero();
        for (&(m1, n1), c1) in &self.terms {
            for (&(m2, n2), c2) in &other.terms {
                if q_bound.is_some_and(|b| n1 + n2 > b) {
                    continue;
                }
                out.add_term(m1 + m2, n1 + n2, c1 * c2);
            }
        }
        out
    }

    /// Product with every term of q exponent above `bound` discarded.
    pub fn mul_truncated(&self, other: &Self, bound: u32) -> Self {
        self.mul_ref(other, Some(bound))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms()
                .into_iter()
                .map(|(m, n, c)| {
                    let coeff = match c.to_i64() {
                        Some(v) => serde_json::Value::from(v),
                        None => serde_json::Value::from(c.to_string()),
                    };
                    serde_json::json!([m, n, coeff])
                })
                .collect(),
        )
    }
}

impl Serialize for BivariatePoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl fmt::Display for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, n, c)) in self.terms().into_iter().enumerate() {
            let negative = c.is_negative();
            let magnitude = c.abs();
            match (i == 0, negative) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            let mut factors = Vec::new();
            if !magnitude.is_one() || (m == 0 && n == 0) {
                factors.push(magnitude.to_string());
            }
            match m {
                0 => {}
                1 => factors.push("x".into()),
                _ => factors.push(format!("x^{m}")),
            }
            match n {
                0 => {}
                1 => factors.push("q".into()),
                _ => factors.push(format!("q^{n}")),
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

impl Add for BivariatePoly {
    type Output = BivariatePoly;
    fn add(mut self, rhs: BivariatePoly) -> BivariatePoly {
        for ((m, n), c) in rhs.terms {
            self.add_term(m, n, c);
        }
        self
    }
}

impl Neg for BivariatePoly {
    type Output = BivariatePoly;
    fn neg(self) -> BivariatePoly {
        BivariatePoly {
            terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect(),
        }
    }
}

impl Sub for BivariatePoly {
    type Output = BivariatePoly;
    fn sub(self, rhs: BivariatePoly) -> BivariatePoly {
        self + (-rhs)
    }
}

impl Mul for &BivariatePoly {
    type Output = BivariatePoly;
    fn mul(self, rhs: &BivariatePoly) -> BivariatePoly {
        self.mul_ref(rhs, None)
    }
}

impl Mul for BivariatePoly {
    type Output = BivariatePoly;
    fn mul(self, rhs: BivariatePoly) -> BivariatePoly {
        &self * &rhs
    }
}

/// `d_N(x) = Σ D_N(m, n) x^m q^n`, by enumeration. `d_N = 1` for `N ≤ 0`.
pub fn d_n(n: i64) -> BivariatePoly {
    let mut poly = BivariatePoly::zero();
    if n <= 0 {
        return BivariatePoly::one();
    }
    let mut counts: HashMap<(u32, u32), u64> = HashMap::new();
    for_each_schur_with_max_part(n as u32, |parts| {
        let m = crate::partition::m_statistic(parts);
        *counts.entry((m, parts.iter().sum())).or_default() += 1;
    });
    for ((m, s), c) in counts {
        poly.add_term(m, s, BigInt::from(c));
    }
    poly
}

/// Memoized `d_N` for repeated recurrence checks.
#[derive(Debug, Default)]
pub struct PolyCache {
    polys: HashMap<i64, BivariatePoly>,
}

impl PolyCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn d(&mut self, n: i64) -> BivariatePoly {
        self.polys.entry(n.max(0)).or_insert_with(|| d_n(n)).clone()
    }
}

/// Both sides of one instance of a recurrence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentitySides {
    pub name: String,
    pub lhs: BivariatePoly,
    pub rhs: BivariatePoly,
}

impl IdentitySides {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

fn out_of_range(what: &'static str, detail: String) -> Error {
    Error::OutOfRange { what, detail }
}

fn indicator(n: i64, modulus: i64) -> i64 {
    (n % modulus == 0) as i64
}

/// `d_{2N} = λ · d_{2N-3}(xq²)` for `N ≥ 1`.
pub fn eq4_sides(cache: &mut PolyCache, n: i64) -> Result<IdentitySides> {
    if n < 1 {
        return Err(out_of_range(
            "N",
            format!("even-subscript recurrence needs N >= 1, got {n}"),
        ));
    }
    let lhs = cache.d(2 * n);
    let rhs = &BivariatePoly::lambda() * &cache.d(2 * n - 3).substitute_x_q2();
    Ok(IdentitySides {
        name: format!("d_{} = lambda * d_{}(xq^2)", 2 * n, 2 * n - 3),
        lhs,
        rhs,
    })
}

/// `d_{2N-1} = λ · (d_{2N-4}(xq²) + x q^{2N-1} (1 - xq) d_{2N-7}(xq²))` for `N ≥ 3`.
pub fn eq5_sides(cache: &mut PolyCache, n: i64) -> Result<IdentitySides> {
    if n < 3 {
        return Err(out_of_range(
            "N",
            format!("odd-subscript recurrence needs N >= 3, got {n}"),
        ));
    }
    let lhs = cache.d(2 * n - 1);
    let shift = BivariatePoly::monomial(1, 1, (2 * n - 1) as u32)
        * (BivariatePoly::one() - BivariatePoly::monomial(1, 1, 1));
    let inner =
        cache.d(2 * n - 4).substitute_x_q2() + &shift * &cache.d(2 * n - 7).substitute_x_q2();
    let rhs = &BivariatePoly::lambda() * &inner;
    Ok(IdentitySides {
        name: format!(
            "d_{} = lambda * (d_{}(xq^2) + x*q^{}*(1 - x*q)*d_{}(xq^2))",
            2 * n - 1,
            2 * n - 4,
            2 * n - 1,
            2 * n - 7
        ),
        lhs,
        rhs,
    })
}

/// `d_N = d_{N-1} + x^{1+χ₂(N)} q^N d_{N-3-χ₃(N)}` for `N ≥ 2`.
pub fn eq6_sides(cache: &mut PolyCache, n: i64) -> Result<IdentitySides> {
    if n < 2 {
        return Err(out_of_range(
            "N",
            format!("part-removal recurrence needs N >= 2, got {n}"),
        ));
    }
    let x_exp = 1 + indicator(n, 2);
    let lower = n - 3 - indicator(n, 3);
    let lhs = cache.d(n);
    let rhs =
        cache.d(n - 1) + &BivariatePoly::monomial(1, x_exp as u32, n as u32) * &cache.d(lower);
    Ok(IdentitySides {
        name: format!("d_{n} = d_{} + x^{x_exp}*q^{n}*d_{lower}", n - 1),
        lhs,
        rhs,
    })
}

pub fn check_eq4(n: i64) -> Result<bool> {
    Ok(eq4_sides(&mut PolyCache::new(), n)?.holds())
}

pub fn check_eq5(n: i64) -> Result<bool> {
    Ok(eq5_sides(&mut PolyCache::new(), n)?.holds())
}

pub fn check_eq6(n: i64) -> Result<bool> {
    Ok(eq6_sides(&mut PolyCache::new(), n)?.holds())
}

/// `∏_{k=1}^{terms} (1 + x q^{2k-1} + x² q^{4k-2})` modulo `q^{bound+1}`.
///
/// Exact as a truncation of the infinite product when the first omitted
/// factor starts above the bound, i.e. `2·terms + 1 > bound`.
pub fn truncated_product_eq2(terms: u32, bound: u32) -> Result<BivariatePoly> {
    if terms == 0 || 2 * terms < bound {
        return Err(out_of_range(
            "factor count",
            format!("{terms} factors do not determine coefficients up to q^{bound}"),
        ));
    }
    let mut product = BivariatePoly::one();
    for k in 1..=terms {
        let factor = BivariatePoly::one()
            + BivariatePoly::monomial(1, 1, 2 * k - 1)
            + BivariatePoly::monomial(1, 2, 4 * k - 2);
        product = product.mul_truncated(&factor, bound);
    }
    Ok(product)
}

/// `Σ_{n ≤ bound} |class(m, n)| x^m q^n` by enumeration.
pub fn count_series(kind: ClassKind, bound: u32) -> BivariatePoly {
    let mut poly = BivariatePoly::zero();
    for n in 0..=bound {
        let mut counts: BTreeMap<u32, u64> = BTreeMap::new();
        crate::enumeration::for_each(&EnumerationQuery::new(kind, n), |parts| {
            *counts
                .entry(crate::partition::m_statistic(parts))
                .or_default() += 1;
        });
        for (m, c) in counts {
            poly.add_term(m, n, BigInt::from(c));
        }
    }
    poly
}

/// `D_K(m, n)` allowing out-of-range indices (empty) and `K ≤ 0` (only the
/// empty partition).
pub fn bounded_cell(max_part: i64, m: i64, n: i64) -> Vec<Partition> {
    if m < 0 || n < 0 {
        return Vec::new();
    }
    if max_part <= 0 {
        return if m == 0 && n == 0 {
            vec![Partition::empty()]
        } else {
            Vec::new()
        };
    }
    enumerate(
        &EnumerationQuery::new(ClassKind::Schur, n as u32)
            .with_m(m as u32)
            .with_max_part(max_part as u32),
    )
}

fn require_phi_star_domain(p: &Partition, n: u32) -> Result<()> {
    if n == 0 {
        return Err(out_of_range("N", "phi* needs N >= 1".into()));
    }
    if !p.is_schur() || p.largest().is_some_and(|l| l > 6 * n) {
        return Err(Error::NotInClass {
            class: "D_6N",
            partition: p.clone(),
        });
    }
    Ok(())
}

/// φ* on `D_{6N}`: apply φ, then delete one part `6N − 3` if present.
pub fn phi_star(p: &Partition, n: u32) -> Result<Partition> {
    require_phi_star_domain(p, n)?;
    let image = phi(p)?;
    Ok(image.without(6 * n - 3).unwrap_or(image))
}

/// Inverse of φ* for a partition in `I(6N, m, n)` with `(m, n)` the cell of
/// the intended preimage.
pub fn phi_star_inverse(p: &Partition, n: u32, target: DomainIndex) -> Result<Partition> {
    let (tm, tn) = (target.m as i64, target.n as i64);
    let (pm, ps) = (p.m_statistic() as i64, p.sigma() as i64);
    let plain = (0..=2).any(|i| pm == tm - i && ps == tn - 2 * tm + i);
    let removed = (0..=2).any(|i| pm == tm - i - 1 && ps == tn - 2 * tm + i - (6 * n as i64 - 3));
    let restored = match (plain, removed) {
        (true, _) => p.clone(),
        (false, true) => p.with(6 * n - 3),
        (false, false) => {
            return Err(Error::Domain {
                partition: p.clone(),
                m: target.m,
                n: target.n,
                reason: "not in I(6N, m, n)".into(),
            })
        }
    };
    phi_inverse(&restored, target)
}

/// `I(6N, m, n) = ∪_{i=0..2} D_{6N-4}(m-i, n-2m+i) ∪ D_{6N-7}(m-i-1, n-2m+i-(6N-3))`.
pub fn phi_star_target(n_sub: u32, m: u32, n: u32) -> BTreeSet<Partition> {
    let (k, m, n) = (n_sub as i64, m as i64, n as i64);
    let mut out = BTreeSet::new();
    for i in 0..=2 {
        out.extend(bounded_cell(6 * k - 4, m - i, n - 2 * m + i));
        out.extend(bounded_cell(
            6 * k - 7,
            m - i - 1,
            n - 2 * m + i - (6 * k - 3),
        ));
    }
    out
}

/// Sizes for one `(m, n)` cell of the φ* check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PhiStarCell {
    pub m: u32,
    pub n: u32,
    /// `|D_{6N}(m, n)|`
    pub domain: usize,
    /// `|I(6N, m, n)|`
    pub target: usize,
    /// `|φ*(D_{6N}(m, n))|`
    pub image: usize,
    /// `|D_{6N-1}(m, n)|`
    pub restricted: usize,
    /// `|D_{6N}(m, n) \ D_{6N-1}(m, n)|`
    pub with_top_part: usize,
    /// `|D_{6N-4}(m-2, n-6N)|`
    pub reduced_target: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PhiStarReport {
    pub n_sub: u32,
    pub n_bound: u32,
    pub cells: Vec<PhiStarCell>,
    /// Human-readable description of every collision or omission found.
    pub witnesses: Vec<String>,
}

impl PhiStarReport {
    pub fn passed(&self) -> bool {
        self.witnesses.is_empty()
    }
}

/// Checks, for every cell with `n ≤ n_bound`:
/// (a) φ* maps `D_{6N}(m, n)` bijectively onto `I(6N, m, n)`;
/// (b) its restriction to `D_{6N-1}(m, n)` is a bijection onto
///     `I(6N, m, n) \ φ*(D_{6N} \ D_{6N-1})`;
/// (c) φ*⁻¹ followed by deleting `6N` is a bijection from
///     `φ*(D_{6N} \ D_{6N-1})` onto `D_{6N-4}(m-2, n-6N)`.
pub fn verify_phi_star(n_sub: u32, n_bound: u32) -> Result<PhiStarReport> {
    if n_sub == 0 {
        return Err(out_of_range("N", "phi* needs N >= 1".into()));
    }
    let top = 6 * n_sub;
    let mut cells = Vec::new();
    let mut witnesses = Vec::new();
    for n in 0..=n_bound {
        for m in 0..=n {
            let domain = bounded_cell(top as i64, m as i64, n as i64);
            let target = phi_star_target(n_sub, m, n);
            if domain.is_empty() && target.is_empty() {
                continue;
            }
            let at = |what: &str| format!("(m={m}, n={n}) {what}");
            let mut image = BTreeSet::new();
            let mut restricted = BTreeSet::new();
            let mut removed = BTreeSet::new();
            let mut reduced = BTreeSet::new();
            let mut restricted_count = 0;
            let mut with_top = 0;
            for p in &domain {
                let tau = phi_star(p, n_sub)?;
                if !target.contains(&tau) {
                    witnesses.push(at(&format!("phi*({p}) = {tau} lies outside I")));
                }
                if !image.insert(tau.clone()) {
                    witnesses.push(at(&format!("phi* collides at {tau}")));
                }
                if p.contains(top) {
                    with_top += 1;
                    removed.insert(tau.clone());
                    let back = phi_star_inverse(&tau, n_sub, DomainIndex::new(m, n))?;
                    if &back != p {
                        witnesses.push(at(&format!("phi*^-1({tau}) = {back}, expected {p}")));
                    }
                    let smaller = back.without(top).expect("top part present");
                    if !reduced.insert(smaller.clone()) {
                        witnesses.push(at(&format!("deleting {top} collides at {smaller}")));
                    }
                } else {
                    restricted_count += 1;
                    restricted.insert(tau);
                }
            }
            if image != target {
                let missing: Vec<String> =
                    target.difference(&image).map(|p| p.to_string()).collect();
                witnesses.push(at(&format!("phi* misses {}", missing.join(", "))));
            }
            let expected_restricted: BTreeSet<Partition> =
                target.difference(&removed).cloned().collect();
            if restricted != expected_restricted || restricted.len() != restricted_count {
                witnesses.push(at(
                    "restriction to D_{6N-1} is not a bijection onto I minus the removed images",
                ));
            }
            let reduced_target: BTreeSet<Partition> =
                bounded_cell(top as i64 - 4, m as i64 - 2, n as i64 - top as i64)
                    .into_iter()
                    .collect();
            if reduced != reduced_target {
                witnesses.push(at(&format!(
                    "deleting {top} does not biject onto D_{}(m-2, n-{top})",
                    top - 4
                )));
            }
            cells.push(PhiStarCell {
                m,
                n,
                domain: domain.len(),
                target: target.len(),
                image: image.len(),
                restricted: restricted_count,
                with_top_part: with_top,
                reduced_target: reduced_target.len(),
            });
        }
    }
    Ok(PhiStarReport {
        n_sub,
        n_bound,
        cells,
        witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(c: i64, x: u32, q: u32) -> BivariatePoly {
        BivariatePoly::monomial(c, x, q)
    }

    #[test]
    fn arithmetic() {
        let lambda = BivariatePoly::lambda();
        assert_eq!(&lambda * &BivariatePoly::one(), lambda);
        assert_eq!(lambda.to_string(), "1 + x*q + x^2*q^2");
        let prod = (BivariatePoly::one() - m(1, 1, 1)) * (BivariatePoly::one() + m(1, 1, 1));
        assert_eq!(prod, BivariatePoly::one() - m(1, 2, 2));
        assert_eq!(prod.to_string(), "1 - x^2*q^2");
        assert!((lambda.clone() - lambda).is_zero());
        assert_eq!(BivariatePoly::zero().to_string(), "0");
        assert_eq!((m(3, 0, 0) + m(-2, 1, 4)).to_string(), "3 - 2*x*q^4");
    }

    #[test]
    fn substitution() {
        assert_eq!(m(1, 1, 1).substitute_x_q2(), m(1, 1, 3));
        assert_eq!(BivariatePoly::one().substitute_x_q2(), BivariatePoly::one());
        assert_eq!(
            d_n(2).substitute_x_q2(),
            BivariatePoly::one() + m(1, 1, 3) + m(1, 2, 6)
        );
    }

    #[test]
    fn small_alladi_schur_polynomials() {
        assert_eq!(d_n(-1), BivariatePoly::one());
        assert_eq!(d_n(0), BivariatePoly::one());
        assert_eq!(d_n(2), BivariatePoly::lambda());
        assert_eq!(d_n(3), BivariatePoly::lambda() + m(1, 1, 3));
        assert_eq!(d_n(3).to_string(), "1 + x*q + x^2*q^2 + x*q^3");
    }

    #[test]
    fn recurrence_instances() {
        assert!(check_eq4(3).unwrap());
        assert!(check_eq5(3).unwrap());
        assert!(check_eq6(3).unwrap());
        assert!(check_eq4(1).unwrap());
        assert!(check_eq5(2).is_err());
        assert!(check_eq6(1).is_err());
        assert!(check_eq4(0).is_err());
    }

    #[test]
    fn truncated_product() {
        assert_eq!(
            truncated_product_eq2(1, 2).unwrap(),
            BivariatePoly::lambda()
        );
        assert!(truncated_product_eq2(1, 3).is_err());
        assert!(truncated_product_eq2(0, 0).is_err());
        let p = truncated_product_eq2(21, 40).unwrap();
        assert_eq!(p.coeff(2, 4), BigInt::from(1));
    }

    #[test]
    fn phi_star_examples() {
        assert_eq!(
            phi_star(&"3".parse().unwrap(), 1).unwrap(),
            "1".parse().unwrap()
        );
        assert_eq!(
            phi_star(&"5".parse().unwrap(), 1).unwrap(),
            Partition::empty()
        );
        assert!(phi_star(&"7".parse().unwrap(), 1).is_err());
        assert!(verify_phi_star(1, 12).unwrap().passed());
    }

    #[test]
    fn json_form() {
        assert_eq!(
            BivariatePoly::lambda().to_json().to_string(),
            "[[0,0,1],[1,1,1],[2,2,1]]"
        );
    }
}
