mod common;

use common::{chain, l2, pf};
use skewlat::census::enumerate_up_to;
use skewlat::models::build_pfn_algebra;
use skewlat::{
    check_identity, check_lemma_reg, check_symmetric, commutation_graph, down_set, green_d,
    is_homomorphism, natural_leq, quotient, restriction, Homomorphism, Identity, SkewLattice,
};

fn census() -> Vec<SkewLattice> {
    enumerate_up_to(4).unwrap()
}

#[test]
fn every_census_structure_is_regular() {
    for s in census() {
        assert!(
            check_identity(&s, Identity::Regular).verdict,
            "{}",
            s.as_raw()
        );
    }
}

#[test]
fn order_and_d_have_equivalent_join_forms() {
    for s in census() {
        for a in s.elements() {
            for b in s.elements() {
                assert_eq!(s.leq(a, b), s.leq_by_join(a, b));
                assert_eq!(s.d_related(a, b), s.d_related_by_join(a, b));
            }
        }
    }
}

#[test]
fn d_partition_invariants() {
    for s in census() {
        let d = green_d(&s);
        let mut seen: Vec<usize> = d.classes().iter().flatten().copied().collect();
        seen.sort_unstable();
        assert_eq!(seen, s.elements().collect::<Vec<_>>());
        for a in s.elements() {
            for b in s.elements() {
                assert_eq!(d.class_of(a) == d.class_of(b), s.d_related(a, b));
            }
        }
        let k = d.len();
        for u in 0..k {
            assert!(d.class_leq(u, u));
            for v in 0..k {
                if u != v {
                    assert!(!(d.class_leq(u, v) && d.class_leq(v, u)));
                }
                for w in 0..k {
                    if d.class_leq(u, v) && d.class_leq(v, w) {
                        assert!(d.class_leq(u, w));
                    }
                }
            }
        }
        // finite lattices always have both bounds
        assert!(d.top_class().is_some() && d.bottom_class().is_some());
    }
}

#[test]
fn quotient_is_commutative_and_projection_is_a_homomorphism() {
    for s in census() {
        let q = quotient(&s).unwrap();
        assert!(q.lattice.is_commutative());
        let h = Homomorphism::new(&s, &q.lattice, q.projection.clone()).unwrap();
        assert!(is_homomorphism(&h).verdict);
    }
}

#[test]
fn strong_distributivity_is_symmetric_distributive_normal() {
    for s in census() {
        let sd = check_identity(&s, Identity::StronglyDistributive).verdict;
        let parts = check_symmetric(&s).verdict
            && check_identity(&s, Identity::Distributive).verdict
            && check_identity(&s, Identity::Normal).verdict;
        assert_eq!(sd, parts, "{}", s.as_raw());
    }
}

#[test]
fn normal_iff_down_sets_are_lattices() {
    for s in census() {
        let normal = check_identity(&s, Identity::Normal).verdict;
        let local = s
            .elements()
            .all(|a| down_set(&s, a).unwrap().lattice.is_commutative());
        assert_eq!(normal, local, "{}", s.as_raw());
    }
}

#[test]
fn lemma_reg_holds_on_the_census() {
    for s in census() {
        assert!(check_lemma_reg(&s, &green_d(&s)).verdict);
    }
}

#[test]
fn homomorphic_images_of_commuting_sets_commute() {
    for s in census() {
        let q = quotient(&s).unwrap();
        let h = Homomorphism::new(&s, &q.lattice, q.projection.clone()).unwrap();
        for c in skewlat::enumerate_commuting_subsets(&s, None) {
            let image: Vec<usize> = c.members().iter().map(|&x| h.apply(x)).collect();
            assert!(commutation_graph(&q.lattice).is_clique(&image));
        }
    }
}

#[test]
fn restrictions_compose_and_reflect_the_class_order() {
    for s in census() {
        if !check_identity(&s, Identity::Normal).verdict {
            continue;
        }
        let d = green_d(&s);
        for a in s.elements() {
            let below: Vec<usize> = (0..d.len())
                .filter(|&u| d.class_leq(u, d.class_of(a)))
                .collect();
            for &u in &below {
                let au = restriction(&s, &d, a, u).unwrap();
                assert!(s.leq(au, a));
                for &v in &below {
                    let av = restriction(&s, &d, a, v).unwrap();
                    assert_eq!(s.leq(au, av), d.class_leq(u, v));
                    if d.class_leq(v, u) {
                        assert_eq!(restriction(&s, &d, au, v).unwrap(), av);
                    }
                }
            }
        }
    }
}

#[test]
fn pfn_2_2_structure() {
    let p = build_pfn_algebra(2, 2).unwrap();
    assert!(check_symmetric(&p).verdict);
    let d = green_d(&p);
    let mut sizes: Vec<usize> = d.classes().iter().map(Vec::len).collect();
    sizes.sort_unstable();
    assert_eq!(sizes, vec![1, 2, 2, 4]);

    let small = pf(2, &[(0, 1)]);
    let big = pf(2, &[(0, 1), (1, 0)]);
    assert!(natural_leq(&p, small, big).unwrap());
    assert!(!natural_leq(&p, big, small).unwrap());

    let ds = down_set(&p, big).unwrap();
    let expected = {
        let mut v = vec![0, small, pf(2, &[(1, 0)]), big];
        v.sort_unstable();
        v
    };
    assert_eq!(ds.members, expected);
    assert!(ds.lattice.is_commutative());

    let u = d.class_of(pf(2, &[(1, 1)]));
    assert_eq!(restriction(&p, &d, big, u).unwrap(), pf(2, &[(1, 0)]));
    assert_eq!(restriction(&p, &d, big, d.class_of(0)).unwrap(), 0);
    assert!(check_lemma_reg(&p, &d).verdict);

    let q = quotient(&p).unwrap();
    assert_eq!(q.order(), 4);
    let h = Homomorphism::new(&p, &q.lattice, q.projection.clone()).unwrap();
    assert!(is_homomorphism(&h).verdict);
}

#[test]
fn small_examples() {
    assert!(check_symmetric(&l2()).verdict);
    assert_eq!(green_d(&chain(3)).len(), 3);
    assert_eq!(down_set(&chain(3), 0).unwrap().members, vec![0]);
}
