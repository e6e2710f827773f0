mod common;

use common::{chain, l2, pf};
use skewlat::census::enumerate_up_to;
use skewlat::completeness::lattice_sections_by_transversals;
use skewlat::models::{build_pfn_algebra, om_window};
use skewlat::{
    check_ba, check_ex, check_identity, check_implication_chain, check_jc, check_ls,
    check_prop_joins, check_symmetric, commutation_graph, enumerate_commuting_subsets, green_d,
    inf_natural, join_fold, lattice_sections, meet_fold, quotient, sup_natural, Identity,
    SkewLattice,
};

fn normal_symmetric_census() -> Vec<SkewLattice> {
    enumerate_up_to(4)
        .unwrap()
        .into_iter()
        .filter(|s| check_identity(s, Identity::Normal).verdict && check_symmetric(s).verdict)
        .collect()
}

#[test]
fn join_fold_is_the_supremum() {
    let mut checked = 0;
    for s in normal_symmetric_census() {
        for c in enumerate_commuting_subsets(&s, None) {
            assert_eq!(
                Some(join_fold(&s, &c)),
                sup_natural(&s, c.members()).unwrap()
            );
            if s.zero().is_some() {
                assert_eq!(
                    Some(meet_fold(&s, &c)),
                    inf_natural(&s, c.members()).unwrap()
                );
            }
            checked += 1;
        }
    }
    assert!(checked > 100);
}

#[test]
fn sup_and_inf_are_stable_under_repetition() {
    for s in enumerate_up_to(3).unwrap() {
        for a in s.elements() {
            for b in s.elements() {
                assert_eq!(
                    sup_natural(&s, &[a, b]).unwrap(),
                    sup_natural(&s, &[a, b, a, b]).unwrap()
                );
                assert_eq!(
                    inf_natural(&s, &[a, b]).unwrap(),
                    inf_natural(&s, &[b, a, a]).unwrap()
                );
            }
            assert_eq!(sup_natural(&s, &[a]).unwrap(), Some(a));
        }
    }
}

#[test]
fn commuting_subsets_are_exactly_the_cliques() {
    for s in enumerate_up_to(4).unwrap() {
        let g = commutation_graph(&s);
        let n = s.order();
        let listed: Vec<Vec<usize>> = enumerate_commuting_subsets(&s, None)
            .map(|c| c.members().to_vec())
            .collect();
        let brute: Vec<Vec<usize>> = (1u32..1 << n)
            .map(|mask| (0..n).filter(|&i| mask >> i & 1 == 1).collect::<Vec<_>>())
            .filter(|c| g.is_clique(c))
            .collect();
        let mut sorted = brute.clone();
        sorted.sort();
        assert_eq!(listed, sorted);
    }
}

#[test]
fn sections_from_top_class_match_transversal_search() {
    for s in normal_symmetric_census() {
        assert_eq!(
            lattice_sections(&s).unwrap(),
            lattice_sections_by_transversals(&s).unwrap()
        );
        let q = quotient(&s).unwrap();
        for l in lattice_sections(&s).unwrap() {
            assert_eq!(l.members().len(), q.order());
        }
    }
}

#[test]
fn every_finite_structure_has_all_four_properties() {
    for s in normal_symmetric_census() {
        for check in [check_jc, check_ba, check_ex, check_ls] {
            assert!(check(&s).unwrap().verdict, "{}", s.as_raw());
        }
        assert!(check_implication_chain(&s).unwrap().verdict);
        assert!(check_prop_joins(&s).unwrap().verdict);
    }
}

#[test]
fn maximal_commuting_subsets_are_sections_on_finite_structures() {
    // EX through maximal cliques, an independent route to the EX verdict
    for s in normal_symmetric_census() {
        let d = green_d(&s);
        let all_sections = commutation_graph(&s)
            .maximal_cliques()
            .iter()
            .all(|c| skewlat::completeness::is_lattice_section(&s, &d, c));
        assert_eq!(all_sections, check_ex(&s).unwrap().verdict);
    }
}

#[test]
fn pairwise_infima_and_bounds_give_join_completeness() {
    for s in normal_symmetric_census() {
        let pairwise_infima = s.elements().all(|a| {
            s.elements()
                .all(|b| inf_natural(&s, &[a, b]).unwrap().is_some())
        });
        let ba = check_ba(&s).unwrap().verdict;
        let q = quotient(&s).unwrap();
        let shadow_complete = (1u32..1 << q.order()).all(|mask| {
            let c: Vec<usize> = (0..q.order()).filter(|&i| mask >> i & 1 == 1).collect();
            sup_natural(&q.lattice, &c).unwrap().is_some()
        });
        if pairwise_infima && ba && shadow_complete {
            assert!(check_jc(&s).unwrap().verdict);
        }
    }
}

#[test]
fn prop_joins_on_models() {
    assert!(
        check_prop_joins(&build_pfn_algebra(2, 2).unwrap())
            .unwrap()
            .verdict
    );
    assert!(check_prop_joins(&om_window(4)).unwrap().verdict);
    assert!(check_prop_joins(&chain(4)).unwrap().verdict);
}

#[test]
fn completeness_on_windows_and_trivial_structures() {
    let one = chain(1);
    for s in [one, om_window(3), l2()] {
        let p = skewlat::completeness_profile(&s).unwrap();
        assert!(p.jc && p.ba && p.ex && p.ls);
        assert!(check_implication_chain(&s).unwrap().verdict);
    }
}

#[test]
fn non_normal_structures_are_rejected() {
    let non_normal = enumerate_up_to(4)
        .unwrap()
        .into_iter()
        .find(|s| !check_identity(s, Identity::Normal).verdict)
        .expect("a non-normal skew lattice of order at most 4");
    assert!(matches!(
        check_jc(&non_normal),
        Err(skewlat::Error::Precondition(_))
    ));
    assert!(lattice_sections(&non_normal).is_err());
    assert!(check_prop_joins(&non_normal).is_err());
}

#[test]
fn pfn_fold_example() {
    let p = build_pfn_algebra(2, 2).unwrap();
    let c = skewlat::CommutingSubset::new(&p, &[pf(2, &[(0, 1)]), pf(2, &[(1, 0)])]).unwrap();
    assert_eq!(join_fold(&p, &c), pf(2, &[(0, 1), (1, 0)]));
}
