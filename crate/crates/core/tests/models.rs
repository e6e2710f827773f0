mod common;

use std::collections::BTreeSet;

use common::{boolean, isomorphic};
use proptest::prelude::*;
use skewlat::models::{
    build_pfn_algebra, fi_join, fi_meet, nat_window, om_id, om_window, pfn_carrier, FinCofinSet,
    FiniteImageElement, PartialFunction, SymbolicElement,
};
use skewlat::{
    check_identity, commutation_graph, enumerate_commuting_subsets, green_d, inf_natural,
    is_homomorphism, quotient, Homomorphism, Identity,
};

#[test]
fn partial_function_algebras_match_their_description() {
    for m in 1..=3usize {
        for b in 1..=2usize {
            let s = build_pfn_algebra(m, b).unwrap();
            assert_eq!(s.order(), (b + 1).pow(m as u32));
            assert!(check_identity(&s, Identity::StronglyDistributive).verdict);
            assert!(check_identity(&s, Identity::LeftHanded).verdict);
            assert_eq!(s.zero(), Some(0));
            assert_eq!(s.detect_zero(), Some(0));

            // D-classes are keyed by domain
            let carrier = pfn_carrier(m, b);
            let d = green_d(&s);
            for x in s.elements() {
                for y in s.elements() {
                    let same_domain = carrier[x].domain().eq(carrier[y].domain());
                    assert_eq!(d.class_of(x) == d.class_of(y), same_domain);
                }
            }

            // f ≤ g iff f is g restricted to dom f
            for x in s.elements() {
                for y in s.elements() {
                    let restricted = carrier[y].meet(&carrier[x]) == carrier[x];
                    assert_eq!(s.leq(x, y), restricted);
                }
            }

            let q = quotient(&s).unwrap();
            assert!(isomorphic(q.lattice.as_raw(), boolean(m as u32).as_raw()));
        }
    }
}

#[test]
fn one_point_domain() {
    let s = build_pfn_algebra(1, 2).unwrap();
    let d = green_d(&s);
    assert_eq!(s.order(), 3);
    let top = d.top_class().unwrap();
    assert_eq!(d.class(top).len(), 2);
}

#[test]
fn omega_window_profile() {
    let w = om_window(5);
    assert!(check_identity(&w, Identity::LeftHanded).verdict);
    assert!(check_identity(&w, Identity::StronglyDistributive).verdict);
    assert_eq!(w.zero(), Some(0));
    let (a, b) = (
        om_id(5, SymbolicElement::InfA).unwrap(),
        om_id(5, SymbolicElement::InfB).unwrap(),
    );
    assert_eq!(commutation_graph(&w).missing_edges(), vec![(a, b)]);
    for c in enumerate_commuting_subsets(&w, None) {
        assert!(!(c.members().contains(&a) && c.members().contains(&b)));
    }
    // all 2^8 - 1 nonempty subsets minus the 2^6 containing both infinities
    assert_eq!(enumerate_commuting_subsets(&w, None).count(), 255 - 64);
}

#[test]
fn omega_windows_embed() {
    for k in 1..6u64 {
        let (small, big) = (om_window(k), om_window(k + 1));
        let map = skewlat::models::omega::om_window_carrier(k)
            .into_iter()
            .map(|x| om_id(k + 1, x).unwrap())
            .collect();
        let h = Homomorphism::new(&small, &big, map).unwrap();
        assert!(is_homomorphism(&h).verdict);
    }
}

#[test]
fn chain_analogue_has_an_infimum() {
    // with ∞b gone, ∞a is the top of a chain and the pair collapses to it
    let w = om_window(3);
    let chain_part: Vec<usize> = (0..=4).collect();
    let sub = skewlat::subalgebra(&w, &chain_part).unwrap();
    assert!(sub.lattice.is_commutative());
    assert_eq!(inf_natural(&sub.lattice, &[4]).unwrap(), Some(4));
    assert_eq!(inf_natural(&w, &[4, 5]).unwrap(), Some(3));
}

#[test]
fn naturals_alone_form_a_chain() {
    let n = nat_window(6);
    assert!(n.is_commutative());
    assert_eq!(skewlat::lattice_sections(&n).unwrap().len(), 1);
}

fn fin_cofin() -> impl Strategy<Value = FinCofinSet> {
    (any::<bool>(), prop::collection::btree_set(0u64..60, 0..8)).prop_map(|(fin, s)| {
        if fin {
            FinCofinSet::Fin(s)
        } else {
            FinCofinSet::Cofin(s)
        }
    })
}

fn small_pfn() -> impl Strategy<Value = PartialFunction> {
    prop::collection::btree_map(0u64..8, 0u64..4, 0..8)
        .prop_map(|m| PartialFunction::from_pairs(m).unwrap())
}

proptest! {
    #[test]
    fn fin_cofin_algebra_is_pointwise(x in fin_cofin(), y in fin_cofin()) {
        let (i, u, d) = (x.intersection(&y), x.union(&y), x.difference(&y));
        for p in 0..=200u64 {
            prop_assert_eq!(i.contains(p), x.contains(p) && y.contains(p));
            prop_assert_eq!(u.contains(p), x.contains(p) || y.contains(p));
            prop_assert_eq!(d.contains(p), x.contains(p) && !y.contains(p));
        }
    }

    #[test]
    fn finite_image_ops_agree_with_partial_functions(f in small_pfn(), g in small_pfn()) {
        let (ff, gg) = (FiniteImageElement::from_partial_function(&f), FiniteImageElement::from_partial_function(&g));
        prop_assert_eq!(fi_meet(&ff, &gg).to_partial_function().unwrap(), f.meet(&g));
        prop_assert_eq!(fi_join(&ff, &gg).to_partial_function().unwrap(), f.join(&g));
        prop_assert!(fi_join(&ff, &gg).is_valid());
    }

    #[test]
    fn finite_image_ops_stay_valid(
        a in prop::collection::vec((0u64..5, fin_cofin()), 0..4),
        b in prop::collection::vec((0u64..5, fin_cofin()), 0..4),
    ) {
        // keep only fibers disjoint from earlier ones so the input is valid
        let clean = |fibers: Vec<(u64, FinCofinSet)>| {
            let mut used = FinCofinSet::empty();
            let mut values = BTreeSet::new();
            let mut out = Vec::new();
            for (v, p) in fibers {
                let p = p.difference(&used);
                if values.insert(v) {
                    used = used.union(&p);
                    out.push((v, p));
                }
            }
            FiniteImageElement::new(out).unwrap()
        };
        let (f, g) = (clean(a), clean(b));
        let (m, j) = (fi_meet(&f, &g), fi_join(&f, &g));
        prop_assert!(m.is_valid() && j.is_valid());
        for p in 0..80u64 {
            let expected_meet = if g.apply(p).is_some() { f.apply(p) } else { None };
            prop_assert_eq!(m.apply(p), expected_meet);
            prop_assert_eq!(j.apply(p), g.apply(p).or(f.apply(p)));
        }
    }
}
