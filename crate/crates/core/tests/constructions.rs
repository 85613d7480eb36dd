mod common;

use common::oracle::{big, Oracle};
use domlab_core::families::{lollipop, random_graph, random_tree};
use domlab_core::matching::has_perfect_matching;
use domlab_core::products::{
    direct_product, implicit_direct_domination_check, multiway_direct_complete,
};
use domlab_core::solvers::{
    build_diagonal_pds, build_pendant_product_ds, diagonal_matching, pair_dominating_set,
    pair_pendant_product, solve_gamma, solve_gamma_pr, PairedWitness,
};
use domlab_core::{Budget, Graph, VertexSet};
use proptest::prelude::*;

fn isolated_free(n: usize, seed: u64) -> Graph {
    (0..)
        .map(|i| random_graph(n, 0.5, seed.wrapping_add(i)).unwrap())
        .find(|g| !g.has_isolated_vertex())
        .unwrap()
}

/// The pairing of a paired dominating set, from a perfect matching of the
/// subgraph it induces.
fn pairing_of(g: &Graph, s: &VertexSet) -> PairedWitness {
    let sub = g.induced_subgraph(s).unwrap();
    let m = has_perfect_matching(&sub.graph).expect("paired set has a perfect matching");
    PairedWitness {
        pairs: m
            .into_iter()
            .map(|(a, b)| (sub.new_to_old[a], sub.new_to_old[b]))
            .collect(),
    }
}

#[test]
fn diagonals_for_small_complete_products() {
    for orders in [
        vec![4, 4, 4],
        vec![5, 4, 4],
        vec![5, 5, 5, 5],
        vec![6, 6, 6, 6, 6],
    ] {
        let t = orders.len();
        let g = multiway_direct_complete(&orders).unwrap();
        let d = build_diagonal_pds(&orders).unwrap();
        let pairs = diagonal_matching(&orders).unwrap();
        assert_eq!(d.len(), if t % 2 == 1 { t + 1 } else { t + 2 });
        assert!(big::paired_by(&g, &d.to_vec(), &pairs), "{orders:?}");
    }
    assert!(build_diagonal_pds(&[3, 3, 3]).is_err());
    assert!(build_diagonal_pds(&[4, 4]).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 60, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn pairing_a_dominating_set(n in 2usize..=12, seed in any::<u64>()) {
        let g = isolated_free(n, seed);
        let d = solve_gamma(&g, &Budget::unlimited()).unwrap().witness;
        let p = pair_dominating_set(&g, &d).unwrap();
        prop_assert!(p.len() <= 2 * d.len());
        prop_assert!(big::paired_by(&g, &p.vertices(), &p.pairs));
    }

    #[test]
    fn pendant_extension(n in 2usize..=5, m in 2usize..=4, seed in any::<u64>(), anchor in 0usize..5) {
        let g = isolated_free(n, seed);
        let h = isolated_free(m, seed ^ 0x5555);
        let v = anchor % n;
        let b = Budget::unlimited();
        let gh = direct_product(&g, &h).unwrap().0;
        let d = solve_gamma_pr(&gh, &b).unwrap().witness;
        let dh = solve_gamma_pr(&h, &b).unwrap().witness;
        let gp = lollipop(&g, 1, v).unwrap();
        let gph = direct_product(&gp, &h).unwrap().0;
        let d_pairs: Vec<(usize, usize)> = d.iter().map(|x| (x / m, x % m)).collect();

        let ds = build_pendant_product_ds(&g, &h, v, &d_pairs, &dh).unwrap();
        prop_assert!(implicit_direct_domination_check(&gp, &h, &ds));
        prop_assert!(ds.len() <= d.len() + dh.len());

        let pw = pair_pendant_product(&g, &h, v, &pairing_of(&gh, &d), &pairing_of(&h, &dh)).unwrap();
        prop_assert!(big::paired_by(&gph, &pw.vertices(), &pw.pairs));
        prop_assert!(pw.vertices().len() <= d.len() + 2 * dh.len());
        prop_assert!(pw.vertices().len() <= 2 * (d.len() + dh.len()));
    }

    #[test]
    fn trees_satisfy_the_packing_identity(n in 2usize..=14, seed in any::<u64>()) {
        let t = random_tree(n, seed);
        let b = Budget::unlimited();
        let pr = solve_gamma_pr(&t, &b).unwrap().value().unwrap();
        let o = Oracle::new(&t);
        prop_assert_eq!(pr, 2 * o.rho(3));
    }
}
