use proptest::prelude::*;

use tyz_core::spectral::charpoly;
use tyz_core::zeta::det_a_minus_i;
use tyz_core::{disjoint_union, format_graph, parse_graph, z, MultiDigraph, Rational};

fn matrix(max_n: usize) -> impl Strategy<Value = MultiDigraph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(0u32..=3, n * n).prop_map(move |flat| {
            let rows: Vec<Vec<u32>> = flat.chunks(n).map(<[u32]>::to_vec).collect();
            MultiDigraph::from_rows(&rows)
        })
    })
}

fn stable(max_n: usize) -> impl Strategy<Value = MultiDigraph> {
    matrix(max_n).prop_filter("stable", MultiDigraph::is_stable)
}

fn with_perm(max_n: usize) -> impl Strategy<Value = (MultiDigraph, Vec<usize>)> {
    matrix(max_n).prop_flat_map(|g| {
        let n = g.vertex_count();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

fn factorial(n: u32) -> u64 {
    (1..=n as u64).product()
}

/// Every permutation of `0..n`, by insertion.
fn all_perms(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for v in 0..n {
        let mut next = Vec::new();
        for p in &out {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, v);
                next.push(q);
            }
        }
        out = next;
    }
    out
}

proptest! {
    #[test]
    fn canonical_key_ignores_labels((g, perm) in with_perm(5)) {
        let h = g.permuted(&perm);
        prop_assert_eq!(g.canonical_key(), h.canonical_key());
        prop_assert!(g.is_isomorphic_to(&h));
    }

    #[test]
    fn handshake(g in matrix(5)) {
        let d = g.degrees();
        let out: u32 = d.outdeg.iter().sum();
        let inn: u32 = d.indeg.iter().sum();
        prop_assert_eq!(out as usize, g.edge_count());
        prop_assert_eq!(inn as usize, g.edge_count());
    }

    #[test]
    fn stability_is_label_free((g, perm) in with_perm(5)) {
        let h = g.permuted(&perm);
        prop_assert_eq!(g.is_stable(), h.is_stable());
        prop_assert_eq!(g.is_semistable(), h.is_semistable());
        prop_assert_eq!(g.weight(), h.weight());
        prop_assert_eq!(det_a_minus_i(&g), det_a_minus_i(&h));
        prop_assert_eq!(charpoly(&g), charpoly(&h));
    }

    #[test]
    fn aut_order_matches_brute_force(g in matrix(4)) {
        let stab = all_perms(g.vertex_count())
            .into_iter()
            .filter(|p| g.permuted(p) == g)
            .count() as u64;
        let labels: u64 = g.flat().iter().map(|&a| factorial(a)).product();
        prop_assert_eq!(g.aut_order(), stab * labels);
    }

    #[test]
    fn text_round_trip(g in matrix(5)) {
        prop_assert_eq!(parse_graph(&format_graph(&g)).unwrap(), g);
    }

    #[test]
    fn z_is_label_free((g, perm) in with_perm(4)) {
        prop_assume!(g.is_semistable());
        prop_assert_eq!(z(&g).unwrap(), z(&g.permuted(&perm)).unwrap());
    }

    #[test]
    fn z_multiplies_over_components(g in stable(3), h in stable(3)) {
        prop_assume!(g.is_weakly_connected() && h.is_weakly_connected());
        let u = disjoint_union(&[g.clone(), h.clone()]);
        let sym = if g.is_isomorphic_to(&h) { 2 } else { 1 };
        let expected = z(&g).unwrap() * z(&h).unwrap() / Rational::from(sym);
        prop_assert_eq!(z(&u).unwrap(), expected);
    }
}
