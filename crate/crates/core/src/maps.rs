//! Grouping maps, reduction maps and the bijection `f`.
//!
//! | map                   | from → to                                   |
//! |-----------------------|---------------------------------------------|
//! | [`grouping`] (G)      | `D(m,n)` → `D*(m-g, n-g)`, g ∈ {0,1,2}      |
//! | [`alladi_grouping`] (G′) | `C(m,n)` → `C*(m-g, n-g)`                |
//! | [`schur_reduce`] (ψ)  | `D*(m,n)` → `D(m, n-2m)`                    |
//! | [`alladi_reduce`] (ψ′) | `C*(m,n)` → `C(m, n-2m)`                   |
//! | [`rho`] (ρ)           | upper minimal segments → lower ones         |
//! | [`phi`] (φ = ψ∘G)     | `D(m,n)` → `D(m-g, n-2m+g)`                 |
//! | [`phi_prime`] (φ′ = ψ′∘G′) | `C(m,n)` → `C(m-g, n-2m+g)`            |
//! | [`f`]                 | `D(m,n)` → `C(m,n)`                         |
//!
//! The grouping maps are not injective on their own: their inverses are only
//! defined relative to an intended domain `(m, n)`, so every inverse here takes
//! a [`DomainIndex`].

use serde::Serialize;

use crate::error::{Error, Result};
use crate::factorization::{refined_factorization, Factor, Orientation, Quadruple};
use crate::partition::Partition;

/// The `(m, n)` cell a grouping inverse should land in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct DomainIndex {
    pub m: u32,
    pub n: u32,
}

impl DomainIndex {
    pub fn new(m: u32, n: u32) -> Self {
        DomainIndex { m, n }
    }

    pub fn of(p: &Partition) -> Self {
        DomainIndex {
            m: p.m_statistic(),
            n: p.sigma(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupingResult {
    pub image: Partition,
    /// Drop in both σ and m.
    pub g: u8,
}

fn require(class: &'static str, p: &Partition, ok: bool) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::NotInClass {
            class,
            partition: p.clone(),
        })
    }
}

/// The drop `g` from `p` to `target`, which must be the same in σ and m and
/// lie in {0, 1, 2}.
fn grouping_drop(p: &Partition, target: DomainIndex) -> Result<u8> {
    let domain_err = |reason: String| Error::Domain {
        partition: p.clone(),
        m: target.m,
        n: target.n,
        reason,
    };
    let dn = target.n as i64 - p.sigma() as i64;
    let dm = target.m as i64 - p.m_statistic() as i64;
    if dn != dm {
        return Err(domain_err(format!(
            "sum changes by {dn} but m changes by {dm}"
        )));
    }
    if !(0..=2).contains(&dn) {
        return Err(domain_err(format!("difference {dn} is not 0, 1 or 2")));
    }
    Ok(dn as u8)
}

/// Schur grouping map G: drop parts below 3 and replace 4 by 3.
pub fn grouping(p: &Partition) -> Result<GroupingResult> {
    require("D", p, p.is_schur())?;
    let mut parts: Vec<u32> = p
        .parts()
        .iter()
        .filter_map(|&x| match x {
            1 | 2 => None,
            4 => Some(3),
            _ => Some(x),
        })
        .collect();
    parts.sort_unstable();
    let image = Partition::from_sorted(parts);
    let g = (p.sigma() - image.sigma()) as u8;
    Ok(GroupingResult { image, g })
}

/// Inverse of G relative to the intended domain.
pub fn grouping_inverse(p: &Partition, target: DomainIndex) -> Result<Partition> {
    require("D*", p, p.is_schur_star())?;
    let g = grouping_drop(p, target)?;
    let has3 = p.contains(3);
    let swap = |q: &Partition| q.without(3).expect("3 is a part").with(4);
    Ok(match (g, has3) {
        (0, _) => p.clone(),
        (1, true) => swap(p),
        (1, false) => p.with(1),
        (2, true) => swap(p).with(1),
        (2, false) => p.with(2),
        _ => unreachable!(),
    })
}

/// Alladi grouping map G′: drop every part equal to 1.
pub fn alladi_grouping(p: &Partition) -> Result<GroupingResult> {
    require("C", p, p.is_alladi())?;
    let image = Partition::from_sorted(p.parts().iter().copied().filter(|&x| x != 1).collect());
    let g = p.multiplicity(1) as u8;
    Ok(GroupingResult { image, g })
}

/// Inverse of G′: insert as many 1s as the domain requires.
pub fn alladi_grouping_inverse(p: &Partition, target: DomainIndex) -> Result<Partition> {
    require("C*", p, p.is_alladi_star())?;
    let g = grouping_drop(p, target)?;
    let ones = Partition::from_sorted(vec![1; g as usize]);
    Ok(p.union(&ones))
}

/// ψ′: subtract 2 from every part of a `C*` partition.
pub fn alladi_reduce(p: &Partition) -> Result<Partition> {
    require("C*", p, p.is_alladi_star())?;
    p.shifted(-2)
}

/// Inverse of ψ′: add 2 to every part.
pub fn alladi_lift(p: &Partition) -> Result<Partition> {
    require("C", p, p.is_alladi())?;
    Ok(add_two(p))
}

/// r: add 2 to every part.
pub fn add_two(p: &Partition) -> Partition {
    p.shifted(2).expect("adding keeps parts positive")
}

/// ρ on an upper minimal segment.
///
/// With `ω` odd and `ε` even parts: if `ω = ε` every part drops by 3. If
/// `ω > ε` the largest `ω − ε` odd singletons drop by 2 instead; if `ω < ε`
/// the smallest `ε − ω` even singletons drop by 4 instead.
pub fn rho(segment: &Partition) -> Result<Partition> {
    let q = Quadruple::encode(segment, Orientation::Upper)?;
    let surplus = q.odd as i64 - q.even as i64;
    let singletons: Vec<u32> =
        crate::factorization::generic_factors(segment.parts(), Orientation::Upper)
            .into_iter()
            .filter_map(|f| match f {
                Factor::OddSingleton { part } | Factor::EvenSingleton { part } => Some(part),
                _ => None,
            })
            .collect();
    let mut special: Vec<(u32, u32)> = Vec::new();
    if surplus > 0 {
        let odd: Vec<u32> = singletons.iter().copied().filter(|x| x % 2 == 1).collect();
        special.extend(odd[odd.len() - surplus as usize..].iter().map(|&x| (x, 2)));
    } else if surplus < 0 {
        let even = singletons.iter().copied().filter(|x| x % 2 == 0);
        special.extend(even.take((-surplus) as usize).map(|x| (x, 4)));
    }
    let parts = segment
        .parts()
        .iter()
        .map(|&x| {
            let drop = special.iter().find(|s| s.0 == x).map_or(3, |s| s.1);
            x - drop
        })
        .collect();
    Ok(Partition::from_sorted(parts))
}

/// ρ computed through quadruples: `(W, ω, ε, s)` → `(W, ω, ε, s − 3)`.
pub fn rho_by_quadruple(segment: &Partition) -> Result<Partition> {
    let mut q = Quadruple::encode(segment, Orientation::Upper)?;
    q.smallest -= 3;
    q.decode(Orientation::Lower)
}

/// ρ⁻¹ on a lower minimal segment: `(W, ω, ε, s)` → `(W, ω, ε, s + 3)`.
pub fn rho_inverse(segment: &Partition) -> Result<Partition> {
    let mut q = Quadruple::encode(segment, Orientation::Lower)?;
    q.smallest += 3;
    q.decode(Orientation::Upper)
}

/// ψ, the Schur reduction map on `D*`.
///
/// Acts factor by factor on the refined upper factorization: pair parts drop
/// by 3, free even singletons by 4, free odd singletons by 2 and each
/// longest minimal segment goes through [`rho`].
pub fn schur_reduce(p: &Partition) -> Result<Partition> {
    require("D*", p, p.is_schur_star())?;
    let refined = refined_factorization(p, Orientation::Upper)?;
    let mut parts = Vec::with_capacity(p.len());
    for f in &refined.factors {
        match f {
            Factor::OddSingleton { part } => parts.push(part - 2),
            Factor::EvenSingleton { part } => parts.push(part - 4),
            Factor::Pair { low, high, .. } => parts.extend([low - 3, high - 3]),
            Factor::Segment { parts: seg } => {
                parts.extend(rho(&Partition::from_sorted(seg.clone()))?.into_parts())
            }
        }
    }
    parts.sort_unstable();
    Ok(Partition::from_sorted(parts))
}

/// The Schur lift ψ⁻¹, acting on the refined lower factorization.
pub fn schur_lift(p: &Partition) -> Result<Partition> {
    require("D", p, p.is_schur())?;
    let refined = refined_factorization(p, Orientation::Lower)?;
    let mut parts = Vec::with_capacity(p.len());
    for f in &refined.factors {
        match f {
            Factor::OddSingleton { part } => parts.push(part + 2),
            Factor::EvenSingleton { part } => parts.push(part + 4),
            Factor::Pair { low, high, .. } => parts.extend([low + 3, high + 3]),
            Factor::Segment { parts: seg } => {
                parts.extend(rho_inverse(&Partition::from_sorted(seg.clone()))?.into_parts())
            }
        }
    }
    parts.sort_unstable();
    Ok(Partition::from_sorted(parts))
}

/// φ = ψ∘G.
pub fn phi(p: &Partition) -> Result<Partition> {
    schur_reduce(&grouping(p)?.image)
}

/// φ⁻¹ landing in `D(target.m, target.n)`.
pub fn phi_inverse(p: &Partition, target: DomainIndex) -> Result<Partition> {
    require("D", p, p.is_schur())?;
    grouping_inverse(&schur_lift(p)?, target)
}

/// φ′ = ψ′∘G′.
pub fn phi_prime(p: &Partition) -> Result<Partition> {
    alladi_reduce(&alladi_grouping(p)?.image)
}

/// φ′⁻¹ landing in `C(target.m, target.n)`.
pub fn phi_prime_inverse(p: &Partition, target: DomainIndex) -> Result<Partition> {
    alladi_grouping_inverse(&alladi_lift(p)?, target)
}

/// The bijection `D(m, n)` → `C(m, n)`:
/// `f(π) = 1^g ⊕ r(f(φ(π)))` with `f(∅) = ∅`, where `g = σ(π) − σ(G(π))`.
pub fn f(p: &Partition) -> Result<Partition> {
    require("D", p, p.is_schur())?;
    let mut ones = 0usize;
    let mut lifts = 0u32;
    let mut state = p.clone();
    let mut layers: Vec<(u8, u32)> = Vec::new();
    // Unrolled recursion: each layer contributes g ones after `lifts` shifts.
    while !state.is_empty() {
        let grouped = grouping(&state)?;
        layers.push((grouped.g, lifts));
        ones += grouped.g as usize;
        state = schur_reduce(&grouped.image)?;
        lifts += 1;
    }
    let mut parts = Vec::with_capacity(ones);
    for (g, depth) in layers {
        parts.extend(std::iter::repeat_n(1 + 2 * depth, g as usize));
    }
    parts.sort_unstable();
    Ok(Partition::from_sorted(parts))
}

/// Inverse of [`f`]: `f⁻¹(a) = G⁻¹_{m(a),σ(a)}(ψ⁻¹(f⁻¹(φ′(a))))`.
pub fn f_inverse(a: &Partition) -> Result<Partition> {
    require("C", a, a.is_alladi())?;
    let mut chain = Vec::new();
    let mut state = a.clone();
    while !state.is_empty() {
        chain.push(DomainIndex::of(&state));
        state = phi_prime(&state)?;
    }
    let mut schur = Partition::empty();
    for target in chain.into_iter().rev() {
        schur = phi_inverse(&schur, target)?;
    }
    Ok(schur)
}

/// `f` written literally as the recursion, used to cross-check the unrolled
/// form.
pub fn f_recursive(p: &Partition) -> Result<Partition> {
    require("D", p, p.is_schur())?;
    if p.is_empty() {
        return Ok(Partition::empty());
    }
    let grouped = grouping(p)?;
    let ones = Partition::from_sorted(vec![1; grouped.g as usize]);
    let rest = f_recursive(&schur_reduce(&grouped.image)?)?;
    Ok(ones.union(&add_two(&rest)))
}
