mod common;

use common::{arb_hypergraph, brute_hom};
use hypersid_core::constructions::{complete_partite, cycle, path};
use hypersid_core::domination::*;
use hypersid_core::exact::{frac, to_f64};
use hypersid_core::hom::density;
use hypersid_core::{Hypergraph, Rational, Vertex};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

/// ∫ Π_e f(x_e) by trying every cell assignment, one rational at a time.
fn brute_integral(f: &Hypergraph, k: &WeightedKernel, absolute: bool) -> Rational {
    let n = k.resolution();
    let v = f.vertex_count();
    let mut x = vec![0 as Vertex; v];
    let mut total = Rational::zero();
    let mut count = 0u64;
    loop {
        let mut prod = Rational::one();
        for e in f.edges() {
            let t: Vec<Vertex> = e.iter().map(|&w| x[w as usize]).collect();
            let val = k.get(&t).clone();
            prod *= if absolute { val.abs() } else { val };
        }
        total += prod;
        count += 1;
        let mut i = 0;
        loop {
            if i == v {
                return total / Rational::from_integer(BigInt::from(count));
            }
            x[i] += 1;
            if (x[i] as usize) < n {
                break;
            }
            x[i] = 0;
            i += 1;
        }
    }
}

fn arb_kernel(r: usize, max_n: usize, signed: bool) -> impl Strategy<Value = WeightedKernel> {
    (1..=max_n, proptest::collection::vec((-8i64..=8, 1i64..=8), 64)).prop_map(move |(n, cells)| {
        let mut i = 0;
        WeightedKernel::from_fn(r, n, |_| {
            let (a, b) = cells[i % cells.len()];
            i += 1;
            frac(if signed { a } else { a.abs() }, b)
        })
        .unwrap()
    })
}

#[test]
fn hypergraph_kernel_matches_hom_density() {
    let k = kernel_of(&Hypergraph::complete(2, 3)).unwrap();
    assert_eq!(kernel_density(&cycle(4).unwrap(), &k, false).unwrap(), frac(2, 9));
    let oct = complete_partite(&[2, 2, 2]).unwrap();
    let host = Hypergraph::new(3, 5, [[0, 1, 2], [0, 1, 3], [1, 2, 4], [2, 3, 4]]).unwrap();
    assert_eq!(kernel_density(oct.hypergraph(), &kernel_of(&host).unwrap(), false).unwrap(), density(oct.hypergraph(), &host).unwrap().value);
}

#[test]
fn domination_of_c4_over_its_subgraphs() {
    let c4 = cycle(4).unwrap();
    let k3 = Hypergraph::complete(2, 3);
    let chk = domination_check(&c4, &Hypergraph::complete(2, 2), &k3).unwrap();
    assert!(chk.holds);
    assert_eq!((chk.pattern_density, chk.sub_density), (frac(2, 9), frac(2, 3)));
    let out = dominating_falsify(&c4, &FalsifyConfig { max_host_vertices: 5, random_hosts: 10, seed: 7, ..FalsifyConfig::default() }).unwrap();
    assert!(matches!(out, FalsifyOutcome::Exhausted { .. }));
}

#[test]
fn non_dominating_path_is_caught() {
    // P_4 (3 edges) fails against its 2-edge subpath on a star host
    let p4 = path(4).unwrap();
    let out = dominating_falsify(&p4, &FalsifyConfig::default()).unwrap();
    match out {
        FalsifyOutcome::Counterexample { sub, host, check } => {
            assert!(!check.holds);
            let tf = frac(brute_hom(&p4, &host) as i64, (host.vertex_count() as i64).pow(4));
            assert_eq!(tf, check.pattern_density);
            assert!(sub.edge_count() < 3);
        }
        other => panic!("expected a counterexample, got {:?}", other),
    }
}

#[test]
fn weak_norming_suites() {
    let c4 = cycle(4).unwrap();
    let cfg = NormingConfig { trials: 40, seed: 11, ..NormingConfig::default() };
    let a = weakly_norming_suite(&c4, &cfg).unwrap();
    let b = weakly_norming_suite(&c4, &cfg).unwrap();
    assert_eq!(a, b);
    assert!(a.passed());
    assert_eq!(a.csg_passed, 40);

    let p4 = path(4).unwrap();
    let rep = weakly_norming_suite(&p4, &NormingConfig { trials: 2000, seed: 0, ..NormingConfig::default() }).unwrap();
    let c = rep.counterexample.expect("P_4 is not weakly norming");
    // ‖f+g‖^3 > (‖f‖ + ‖g‖)^3, re-derived through the brute integral
    let s = brute_integral(&p4, &c.f.add(&c.g).unwrap(), true);
    let x = brute_integral(&p4, &c.f, true);
    let y = brute_integral(&p4, &c.g, true);
    assert_eq!((s.clone(), x.clone(), y.clone()), (c.sum_power, c.f_power, c.g_power));
    assert!(to_f64(&s).cbrt() > to_f64(&x).cbrt() + to_f64(&y).cbrt());
}

#[test]
fn split_trials_agree_with_suite() {
    let k22 = complete_partite(&[2, 2]).unwrap().into_hypergraph();
    let cfg = NormingConfig { trials: 20, seed: 5, ..NormingConfig::default() };
    let whole = weakly_norming_suite(&k22, &cfg).unwrap();
    let a = norming_trials(&k22, &cfg, 0..10).unwrap();
    let b = norming_trials(&k22, &cfg, 10..20).unwrap();
    assert_eq!(merge_norming_reports([a, b], 5), whole);
    let p4 = path(4).unwrap();
    let cfg = NormingConfig { trials: 300, seed: 3, ..NormingConfig::default() };
    let whole = weakly_norming_suite(&p4, &cfg).unwrap();
    let parts = (0..3).map(|i| norming_trials(&p4, &cfg, i * 100..(i + 1) * 100).unwrap());
    assert_eq!(merge_norming_reports(parts, 3), whole);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn kernel_of_host_gives_hom_density(f in arb_hypergraph(2, 4), h in arb_hypergraph(2, 5)) {
        let k = kernel_of(&h).unwrap();
        prop_assert!(k.is_symmetric());
        prop_assert_eq!(kernel_density(&f, &k, false).unwrap(), density(&f, &h).unwrap().value);
    }

    #[test]
    fn kernel_density_matches_brute_integral(f in arb_hypergraph(2, 4), k in arb_kernel(2, 3, true)) {
        prop_assert!(k.is_symmetric());
        prop_assert_eq!(kernel_density(&f, &k, true).unwrap(), brute_integral(&f, &k, false).abs());
        prop_assert_eq!(kernel_density(&f, &k, false).unwrap(), brute_integral(&f, &k, true));
    }

    #[test]
    fn three_uniform_kernels(k in arb_kernel(3, 3, true)) {
        let oct = complete_partite(&[2, 1, 1]).unwrap().into_hypergraph();
        prop_assert_eq!(kernel_density(&oct, &k, false).unwrap(), brute_integral(&oct, &k, true));
    }

    #[test]
    fn uniform_colouring_is_tight(k in arb_kernel(2, 3, false)) {
        let c4 = cycle(4).unwrap();
        let chk = csg_check(&c4, &EdgeColoring::uniform(&c4), &[k], true).unwrap();
        prop_assert!(chk.holds);
        prop_assert_eq!(chk.lhs_power, chk.rhs_power);
    }

    #[test]
    fn csg_holds_for_even_cycle(a in arb_kernel(2, 3, false), b in arb_kernel(2, 3, false), mask in 0u8..16) {
        prop_assume!(a.resolution() == b.resolution());
        let c4 = cycle(4).unwrap();
        let chi = EdgeColoring::new(&c4, (0..4).map(|i| (mask >> i & 1) as usize).collect()).unwrap();
        prop_assert!(csg_check(&c4, &chi, &[a, b], true).unwrap().holds);
    }

    #[test]
    fn triangle_inequality_for_c4(a in arb_kernel(2, 3, false), b in arb_kernel(2, 3, false)) {
        prop_assume!(a.resolution() == b.resolution());
        let (ord, s, x, y) = triangle_check(&cycle(4).unwrap(), &a, &b, false, 2048).unwrap();
        prop_assert_ne!(ord, Some(std::cmp::Ordering::Greater));
        prop_assert!(to_f64(&s).powf(0.25) <= to_f64(&x).powf(0.25) + to_f64(&y).powf(0.25) + 1e-9);
    }
}
