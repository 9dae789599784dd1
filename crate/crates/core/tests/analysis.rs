mod common;

use std::cmp::Ordering;

use common::{arb_hypergraph, brute_hom};
use hypersid_core::analysis::*;
use hypersid_core::constructions::{apex_augment, cycle, from_links, tight_cycle_partite};
use hypersid_core::exact::{cmp_powers, frac, int, ln};
use hypersid_core::hom::{density, edge_density, HomConfig};
use hypersid_core::{Hypergraph, PartiteHypergraph, Rational};
use num_bigint::BigUint;
use proptest::prelude::*;

#[test]
fn c4_in_triangle_witness() {
    let w = exponent_ratio(&cycle(4).unwrap(), &Hypergraph::complete(2, 3), 10).unwrap();
    assert_eq!((w.p, w.q), (37, 10));
    assert!((w.ratio - 3.709511291351455).abs() < 1e-9);
    w.verify().unwrap();
    // 38/10 = 19/5 would not be certified
    assert_eq!(cmp_powers(&w.pattern_density, 5, &w.edge_density, 19), Ordering::Greater);
}

#[test]
fn search_baselines() {
    for k in 1..=4 {
        let f = hypersid_core::constructions::disjoint_edges(2, k).unwrap();
        let rep = exponent_lower_search(&f, &SearchConfig { budget: 2_000, ..SearchConfig::default() }).unwrap();
        assert_eq!(rep.best.certified, int(k as i64));
        rep.best.verify().unwrap();
    }
}

#[test]
fn hom_ratio_matches_brute_counts() {
    let c4 = cycle(4).unwrap();
    let k3 = Hypergraph::complete(2, 3);
    let chk = hom_ratio_check(&c4, &[0, 1], &k3, RatioMode::Dominating, &[]).unwrap();
    assert_eq!(chk.hom_whole, BigUint::from(brute_hom(&c4, &k3)));
    assert_eq!(chk.hom_rest, BigUint::from(6u32));
    assert!(chk.holds);
}

#[test]
fn unified_bound_on_apex_instance() {
    // links {01} and {12, 23} inside M = C_4
    let c4 = cycle(4).unwrap();
    let base = PartiteHypergraph::new(Hypergraph::empty(2, 4), vec![1, 2, 1, 2]).unwrap();
    let f = from_links(&base, &[Hypergraph::new(2, 4, [[0, 1]]).unwrap(), Hypergraph::new(2, 4, [[1, 2], [2, 3]]).unwrap()]).unwrap();
    let f = apex_augment(&f, &c4).unwrap();
    let cert = bound_unified(&f, &c4, UnifiedCase::Dominating, &[]).unwrap();
    // d_M of the three links: 4, 3 and 4
    assert_eq!(cert.bound, int(11));
    assert!(cert.transcript.iter().all(|c| c.passed));
    let host = Hypergraph::complete(3, 5);
    let trace = proof_trace(&f, &c4, &host, &HomConfig::default()).unwrap();
    assert!(trace.all_hold());
    assert_eq!(trace.hom_pattern, BigUint::from(brute_hom(f.hypergraph(), &host)));
}

#[test]
fn tight_cycle_lower_stays_below_upper() {
    let c6 = tight_cycle_partite(3, 6).unwrap();
    let rep = exponent_lower_search(c6.hypergraph(), &SearchConfig { budget: 300, ..SearchConfig::default() }).unwrap();
    let upper = bound_tight_cycle(2).unwrap();
    assert!(rep.best.certified <= upper.instance_bound.unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn sidorenko_for_even_cycle(h in arb_hypergraph(2, 6)) {
        prop_assume!(h.edge_count() > 0);
        let chk = sidorenko_check(&cycle(4).unwrap(), &h).unwrap();
        prop_assert!(chk.holds);
        prop_assert_eq!(chk.margin, chk.pattern_density.value - chk.target);
    }

    #[test]
    fn certified_exponent_is_sound(h in arb_hypergraph(2, 6)) {
        let f = hypersid_core::constructions::path(3).unwrap();
        let tk = edge_density(&h).unwrap();
        prop_assume!(tk > Rational::from_integer(0.into()) && tk < int(1));
        let tf = density(&f, &h).unwrap().value;
        let (p, q, ord) = certify_exponent(&tf, &tk, 10);
        prop_assert_ne!(ord, Ordering::Greater);
        prop_assert!(frac(p as i64, q as i64) <= int(3) || ln(&tf) / ln(&tk) >= p as f64 / q as f64 - 1e-12);
    }

    #[test]
    fn hom_ratio_for_disjoint_edges(h in arb_hypergraph(2, 6)) {
        prop_assume!(h.edge_count() > 0);
        let m = Hypergraph::new(2, 4, [[0, 1], [2, 3]]).unwrap();
        let chk = hom_ratio_check(&m, &[0, 1], &h, RatioMode::Components, &[]).unwrap();
        prop_assert!(chk.holds);
        prop_assert_eq!(chk.hom_whole, BigUint::from(brute_hom(&m, &h)));
    }
}
