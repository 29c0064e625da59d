use alladi_core::factorization::{
    enumerate_upper_segments, generic_factorization, is_minimal_segment_constructive,
    is_minimal_segment_gap_rules, refined_factorization, Orientation, Quadruple,
};
use alladi_core::maps::{
    f, f_inverse, f_recursive, grouping, grouping_inverse, phi, phi_inverse, phi_prime,
    phi_prime_inverse, rho, rho_inverse, schur_lift, schur_reduce, DomainIndex,
};
use alladi_core::poly::BivariatePoly;
use alladi_core::trace::{f_trace, from_two_modular, to_two_modular, trace_result};
use alladi_core::Partition;
use proptest::prelude::*;

/// Schur partitions built from a start and a list of gaps; a gap of 3 after
/// a multiple of 3 is widened to 4.
fn schur() -> impl Strategy<Value = Partition> {
    (1u32..12, prop::collection::vec(3u32..9, 0..10)).prop_map(|(start, gaps)| {
        let mut parts = vec![start];
        for g in gaps {
            let last = *parts.last().unwrap();
            let g = if last % 3 == 0 && g == 3 { 4 } else { g };
            parts.push(last + g);
        }
        Partition::new(parts).unwrap()
    })
}

fn schur_or_empty() -> impl Strategy<Value = Partition> {
    prop_oneof![1 => Just(Partition::empty()), 9 => schur()]
}

/// Alladi partitions: odd parts `2k+1` with multiplicity 0, 1 or 2.
fn alladi() -> impl Strategy<Value = Partition> {
    prop::collection::vec(0usize..3, 0..14).prop_map(|mult| {
        let parts = mult
            .iter()
            .enumerate()
            .flat_map(|(k, &c)| std::iter::repeat_n(2 * k as u32 + 1, c))
            .collect();
        Partition::new(parts).unwrap()
    })
}

fn poly() -> impl Strategy<Value = BivariatePoly> {
    prop::collection::vec((-3i64..4, 0u32..4, 0u32..6), 0..6).prop_map(|terms| {
        terms
            .into_iter()
            .fold(BivariatePoly::zero(), |acc, (c, m, n)| {
                acc + BivariatePoly::monomial(c, m, n)
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn text_round_trip(p in schur_or_empty()) {
        let back: Partition = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn json_round_trip(p in alladi()) {
        let text = serde_json::to_string(&p).unwrap();
        let back: Partition = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn f_preserves_statistics_and_inverts(p in schur_or_empty()) {
        let a = f(&p).unwrap();
        prop_assert!(a.is_alladi());
        prop_assert_eq!(a.sigma(), p.sigma());
        prop_assert_eq!(a.m_statistic(), p.m_statistic());
        prop_assert_eq!(f_recursive(&p).unwrap(), a.clone());
        prop_assert_eq!(f_inverse(&a).unwrap(), p);
    }

    #[test]
    fn f_inverse_then_f(a in alladi()) {
        let p = f_inverse(&a).unwrap();
        prop_assert!(p.is_schur());
        prop_assert_eq!(f(&p).unwrap(), a);
    }

    #[test]
    fn phi_inverts_with_domain(p in schur_or_empty()) {
        let img = phi(&p).unwrap();
        prop_assert_eq!(phi_inverse(&img, DomainIndex::of(&p)).unwrap(), p);
    }

    #[test]
    fn phi_prime_inverts_with_domain(a in alladi()) {
        let img = phi_prime(&a).unwrap();
        prop_assert_eq!(phi_prime_inverse(&img, DomainIndex::of(&a)).unwrap(), a);
    }

    #[test]
    fn grouping_inverts_with_domain(p in schur_or_empty()) {
        let g = grouping(&p).unwrap();
        prop_assert!(g.image.is_schur_star());
        prop_assert_eq!(p.m_statistic() - g.image.m_statistic(), g.g as u32);
        prop_assert_eq!(grouping_inverse(&g.image, DomainIndex::of(&p)).unwrap(), p);
    }

    #[test]
    fn psi_and_lift(p in schur_or_empty()) {
        let up = schur_lift(&p).unwrap();
        prop_assert!(up.is_schur_star());
        prop_assert_eq!(up.sigma(), p.sigma() + 2 * p.m_statistic());
        prop_assert_eq!(schur_reduce(&up).unwrap(), p);
    }

    #[test]
    fn factorizations_cover(p in schur_or_empty()) {
        for o in [Orientation::Upper, Orientation::Lower] {
            let generic = generic_factorization(&p, o).unwrap();
            let parts: Vec<u32> = generic.iter().flat_map(|f| f.parts()).collect();
            prop_assert_eq!(parts.as_slice(), p.parts());
            let refined = refined_factorization(&p, o).unwrap();
            prop_assert_eq!(refined.parts(), p.parts().to_vec());
            for seg in refined.segments() {
                let seg = Partition::new(seg.to_vec()).unwrap();
                prop_assert!(is_minimal_segment_gap_rules(&seg, o));
                prop_assert!(is_minimal_segment_constructive(&seg, o));
            }
        }
    }

    #[test]
    fn trace_agrees_with_f(p in schur_or_empty(), early in any::<bool>()) {
        let steps = f_trace(&p, early).unwrap();
        prop_assert_eq!(trace_result(&steps).unwrap(), f(&p).unwrap());
    }

    #[test]
    fn graph_round_trip(a in alladi()) {
        prop_assert_eq!(from_two_modular(&to_two_modular(&a).unwrap()).unwrap(), a);
    }

    #[test]
    fn poly_ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(b.clone() + c.clone()), &a * &b + &a * &c);
        prop_assert!((a.clone() - a.clone()).is_zero());
        prop_assert_eq!((&a * &b).substitute_x_q2(), &a.substitute_x_q2() * &b.substitute_x_q2());
    }
}

#[test]
fn segment_quadruples_round_trip() {
    for seg in enumerate_upper_segments(90) {
        let q = Quadruple::encode(&seg, Orientation::Upper).unwrap();
        assert_eq!(q.decode(Orientation::Upper).unwrap(), seg);
        let low = rho(&seg).unwrap();
        let ql = Quadruple::encode(&low, Orientation::Lower).unwrap();
        assert_eq!(ql.decode(Orientation::Lower).unwrap(), low);
        assert_eq!(rho_inverse(&low).unwrap(), seg);
    }
}
