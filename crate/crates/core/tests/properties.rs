mod common;

use std::sync::Arc;

use oni_kit::complex::FOREST_FACET_CAP;
use oni_kit::graph::{is_chordal_brute_force, realize_as_oni};
use oni_kit::gvd::{combine_disjoint, is_gvd, split, validate_certificate};
use oni_kit::universe::BRUTE_FORCE_CAP;
use oni_kit::{Graph, SimplicialComplex, SpernerFamily, SquareFreeIdeal, Universe, VertexSet};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;

fn masks(n: usize, max: usize) -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(1u64..(1u64 << n), 0..=max)
}

fn family(n: usize, max: usize) -> impl Strategy<Value = SpernerFamily> {
    masks(n, max).prop_map(move |ms| SpernerFamily::minimize(universe(n), ms.into_iter().map(set_from_mask)).unwrap())
}

fn sized_family() -> impl Strategy<Value = SpernerFamily> {
    (1usize..=7).prop_flat_map(|n| family(n, 8))
}

fn ideal() -> impl Strategy<Value = SquareFreeIdeal> {
    sized_family().prop_map(SquareFreeIdeal::from_family)
}

fn complex() -> impl Strategy<Value = SimplicialComplex> {
    (1usize..=6).prop_flat_map(|n| {
        masks(n, 6).prop_map(move |ms| SimplicialComplex::from_facets(universe(n), ms.into_iter().map(set_from_mask)).unwrap())
    })
}

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1usize..=max_n).prop_flat_map(|n| {
        prop::collection::vec(prop::bool::weighted(0.35), n * (n - 1) / 2).prop_map(move |bits| {
            let names: Vec<String> = (0..n).map(|i| format!("g{i}")).collect();
            let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
            let edges: Vec<(String, String)> = pairs
                .zip(bits)
                .filter(|(_, b)| *b)
                .map(|((i, j), _)| (names[i].clone(), names[j].clone()))
                .collect();
            Graph::new(names, edges).unwrap()
        })
    })
}

fn tree() -> impl Strategy<Value = Graph> {
    (any::<u64>(), 1usize..=12).prop_map(|(seed, n)| random_tree(&mut ChaCha8Rng::seed_from_u64(seed), n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn dual_is_an_involution_and_matches_the_oracle(f in sized_family()) {
        let dual = f.minimal_transversals();
        prop_assert_eq!(&dual, &f.minimal_transversals_brute_force(BRUTE_FORCE_CAP).unwrap());
        prop_assert_eq!(dual.minimal_transversals(), f);
    }

    #[test]
    fn minimize_keeps_only_minimal_members(ms in masks(6, 10)) {
        let f = SpernerFamily::minimize(universe(6), ms.iter().copied().map(set_from_mask)).unwrap();
        for a in f.iter() {
            prop_assert!(ms.iter().any(|&m| set_from_mask(m) == *a));
            for b in f.iter() {
                prop_assert!(a == b || !a.is_subset(b));
            }
        }
        for &m in &ms {
            prop_assert!(f.iter().any(|a| a.is_subset(&set_from_mask(m))));
        }
    }

    #[test]
    fn family_order_is_canonical(ms in masks(6, 10)) {
        let mut rev = ms.clone();
        rev.reverse();
        let a = SpernerFamily::minimize(universe(6), ms.into_iter().map(set_from_mask)).unwrap();
        let b = SpernerFamily::minimize(universe(6), rev.into_iter().map(set_from_mask)).unwrap();
        prop_assert!(a.sets().windows(2).all(|w| (w[0].len(), &w[0]) < (w[1].len(), &w[1])));
        prop_assert_eq!(a, b);
    }

    #[test]
    fn stanley_reisner_round_trip(i in ideal()) {
        prop_assert_eq!(i.stanley_reisner_complex().stanley_reisner_ideal(), i);
    }

    #[test]
    fn unmixed_iff_complex_is_pure(i in ideal()) {
        prop_assume!(!i.is_unit() && !i.is_zero());
        prop_assert_eq!(i.is_unmixed().unwrap(), i.stanley_reisner_complex().is_pure());
    }

    #[test]
    fn sum_and_intersection_laws(a in family(6, 6), b in family(6, 6), c in family(6, 6)) {
        let (a, b, c) = (SquareFreeIdeal::from_family(a), SquareFreeIdeal::from_family(b), SquareFreeIdeal::from_family(c));
        prop_assert_eq!(a.sum(&b).unwrap(), b.sum(&a).unwrap());
        prop_assert_eq!(a.intersect(&b).unwrap(), b.intersect(&a).unwrap());
        prop_assert_eq!(a.sum(&b).unwrap().sum(&c).unwrap(), a.sum(&b.sum(&c).unwrap()).unwrap());
        prop_assert_eq!(a.intersect(&b).unwrap().intersect(&c).unwrap(), a.intersect(&b.intersect(&c).unwrap()).unwrap());
        for m in 0u64..64 {
            let s = set_from_mask(m);
            prop_assert_eq!(a.sum(&b).unwrap().contains_monomial(&s), a.contains_monomial(&s) || b.contains_monomial(&s));
            prop_assert_eq!(a.intersect(&b).unwrap().contains_monomial(&s), a.contains_monomial(&s) && b.contains_monomial(&s));
        }
    }

    #[test]
    fn faces_split_by_a_vertex(c in complex(), v in 0usize..6) {
        prop_assume!(v < c.universe().len());
        let x = VertexSet::singleton(v);
        let del = c.deletion(&x);
        let lk = c.link(&x);
        for f in c.faces() {
            if f.contains(v) {
                prop_assert!(lk.contains_face(&f.without(v)));
            } else {
                prop_assert!(del.contains_face(&f));
            }
        }
        for f in del.faces() {
            prop_assert!(c.contains_face(&f) && !f.contains(v));
        }
        for f in lk.faces() {
            prop_assert!(c.contains_face(&f.with(v)));
        }
    }

    #[test]
    fn facet_ideal_primes_are_vertex_covers(c in complex()) {
        prop_assume!(c.kind() == oni_kit::ComplexKind::Ordinary);
        let primes = c.facet_ideal().unwrap().minimal_primes().unwrap().primes;
        prop_assert_eq!(primes, c.minimal_vertex_covers().unwrap());
    }

    #[test]
    fn vertex_decomposition_certificates_replay(c in complex()) {
        if !c.is_pure() {
            prop_assert!(c.is_vertex_decomposable().is_err());
        } else if let Some(cert) = c.is_vertex_decomposable().unwrap() {
            prop_assert!(cert.replay(&c));
        }
    }

    #[test]
    fn forest_test_matches_brute_force(c in complex()) {
        prop_assume!(c.kind() == oni_kit::ComplexKind::Ordinary);
        let fast = c.is_simplicial_forest(FOREST_FACET_CAP).unwrap();
        prop_assert_eq!(fast, c.is_simplicial_forest_brute_force(FOREST_FACET_CAP).unwrap());
        if c.is_cycle(FOREST_FACET_CAP).unwrap().is_cycle {
            prop_assert!(!fast);
        }
    }

    #[test]
    fn join_of_decomposable_complexes_is_decomposable(a in complex(), b in complex()) {
        prop_assume!(a.is_pure() && b.is_pure());
        let renamed = Arc::new(Universe::new(b.universe().labels().iter().map(|l| format!("y{l}"))).unwrap());
        let b = SimplicialComplex::from_facets(renamed, b.facets().to_vec()).unwrap();
        let a_vd = a.is_vertex_decomposable().unwrap().is_some();
        let b_vd = b.is_vertex_decomposable().unwrap().is_some();
        let j = a.join(&b).unwrap();
        if a_vd && b_vd {
            prop_assert!(j.is_vertex_decomposable().unwrap().is_some());
        }
    }

    #[test]
    fn td_sets_are_transversals_of_neighborhoods(g in graph(8)) {
        let all = g.vertices();
        prop_assert_eq!(g.minimal_td_sets().to_labels(), brute_force_td_sets(&g, &all, &all));
        let sr = g.oni().stanley_reisner_complex();
        for t in g.minimal_td_sets().iter() {
            prop_assert!(sr.facets().contains(&all.difference(t)));
        }
    }

    #[test]
    fn chordality_matches_induced_cycle_search(g in graph(8)) {
        prop_assert_eq!(g.is_chordal(), is_chordal_brute_force(&g));
    }

    #[test]
    fn realizations_reproduce_the_family(ms in masks(6, 6)) {
        let sets: Vec<VertexSet> = ms.into_iter().map(set_from_mask).filter(|s| s.len() >= 2).collect();
        let f = SpernerFamily::minimize(universe(6), sets).unwrap();
        prop_assume!(!f.is_empty());
        let f = f.translate(Arc::new(f.universe().restrict(&f.support()))).unwrap();
        let g = realize_as_oni(&f).unwrap();
        prop_assert_eq!(g.minimal_td_sets().to_labels(), f.to_labels());
        prop_assert!(g.is_chordal());
    }

    #[test]
    fn odd_td_sets_match_brute_force(t in tree()) {
        prop_assume!(t.is_balanced_tree());
        let h = t.heights();
        prop_assert_eq!(t.minimal_odd_td_sets().unwrap().to_labels(), brute_force_td_sets(&t, &h.odd(), &h.even()));
        prop_assert_eq!(t.is_td_unmixed_structural().unwrap(), t.is_td_unmixed());
    }

    #[test]
    fn searched_decompositions_verify(t in tree()) {
        prop_assume!(t.is_balanced_tree() && t.is_td_unmixed());
        if let Some(d) = t.search_decomposition(oni_kit::graph::SEARCH_VERTEX_CAP).unwrap() {
            prop_assert!(t.verify_decomposition(&d.first, &d.second).unwrap().holds());
        }
    }

    #[test]
    fn single_monomials_are_gvd(ms in 1u64..128) {
        let i = SquareFreeIdeal::from_supports(universe(7), [set_from_mask(ms)]).unwrap();
        let cert = is_gvd(&i).unwrap();
        prop_assert!(validate_certificate(&i, &cert));
    }

    #[test]
    fn disjoint_sums_combine(a in family(3, 4), b in family(3, 4)) {
        let (a, b) = (SquareFreeIdeal::from_family(a), SquareFreeIdeal::from_family(b));
        let both = Arc::new(Universe::new((0..6).map(|i| format!("x{i:02}"))).unwrap());
        let shifted = b.generators().sets().iter().map(|s| s.iter().map(|v| v + 3).collect::<VertexSet>());
        let b6 = SquareFreeIdeal::from_supports(both.clone(), shifted).unwrap();
        let a6 = a.translate(both).unwrap();
        let b_alone = b6.translate(Arc::new(b6.universe().restrict(&set_from_mask(0b111000)))).unwrap();
        if let (Some(ca), Some(cb)) = (is_gvd(&a), is_gvd(&b_alone)) {
            let sum = a6.sum(&b6).unwrap();
            prop_assert!(validate_certificate(&sum, &combine_disjoint(&ca, &cb)));
        }
    }

    #[test]
    fn fresh_variables_do_not_change_gvd(i in ideal()) {
        let wider = i.extend_universe(["fresh"]).unwrap();
        prop_assert_eq!(is_gvd(&i).is_some(), is_gvd(&wider).is_some());
        if let Some(c) = is_gvd(&i) {
            prop_assert!(validate_certificate(&wider, &c));
            prop_assert_eq!(is_gvd(&i), Some(c));
        }
    }

    #[test]
    fn split_pieces_contain_the_ideal(i in ideal(), y in 0usize..7) {
        prop_assume!(y < i.universe().len());
        let label = i.universe().label(y).to_string();
        let (c, n) = split(&i, &label).unwrap();
        let c = c.translate(i.universe().clone()).unwrap();
        let n = n.translate(i.universe().clone()).unwrap();
        for g in i.generators().iter() {
            prop_assert!(c.contains_monomial(&g.without(y)));
            if !g.contains(y) {
                prop_assert!(n.contains_monomial(g));
            }
        }
        prop_assert!(n.support().is_subset(&i.support().without(y)));
    }
}

#[test]
fn printed_dual_does_not_dualize_back() {
    let u = Arc::new(Universe::new(["v1", "v2", "v3", "v4", "v5"]).unwrap());
    let printed = SpernerFamily::from_labels(u, [["v1", "v3"], ["v1", "v5"], ["v2", "v3"], ["v2", "v4"], ["v3", "v4"]]).unwrap();
    let back: Vec<Vec<String>> = printed.minimal_transversals().to_labels();
    let expected: Vec<Vec<String>> = [["v1", "v2", "v3"], ["v1", "v2", "v4"], ["v1", "v3", "v4"], ["v2", "v3", "v5"], ["v3", "v4", "v5"]]
        .iter()
        .map(|s| s.iter().map(|x| x.to_string()).collect())
        .collect();
    assert_eq!(back, expected);
    assert_ne!(back, oni_kit::fixtures::beg_a().to_labels());
}

#[test]
fn o_sequences_stay_unmixed_balanced_trees() {
    for (seq, t) in o_sequence_trees(3) {
        assert!(t.is_balanced_tree(), "{seq:?}");
        assert!(t.is_td_unmixed(), "{seq:?}");
        assert_eq!(t.heights().height, 3, "{seq:?}");
    }
}
