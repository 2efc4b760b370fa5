use proptest::prelude::*;

use nbgraphlets::catalog;
use nbgraphlets::census;
use nbgraphlets::eval::Evaluator;
use nbgraphlets::oracle::{count_simple_cycles, location_counts, location_counts_dedup, OracleConfig};
use nbgraphlets::pattern::RootedGraph;
use nbgraphlets::{EdgeMatrix, Graph};

fn graph() -> impl Strategy<Value = Graph> {
    (3usize..=8)
        .prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            let len = pairs.len();
            (Just(n), Just(pairs), prop::collection::vec(any::<bool>(), len))
        })
        .prop_map(|(n, pairs, keep)| {
            let edges = pairs.into_iter().zip(keep).filter(|(_, k)| *k).map(|(e, _)| e);
            Graph::from_edges(n, edges).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn b_has_one_entry_per_two_path(g in graph()) {
        let idx = g.directed_index();
        let b = EdgeMatrix::nonbacktracking(&g, &idx);
        prop_assert_eq!(b.nnz() as u64, g.path2_count());
        prop_assert_eq!(b.reverse_cols().reverse_cols(), b.clone());
        prop_assert_eq!(b.reverse_rows(), b.transpose().reverse_cols().transpose());
    }

    #[test]
    fn order4_catalog_matches_oracle(g in graph()) {
        let cfg = OracleConfig::default();
        let mut ev = Evaluator::new(&g);
        for (res, e) in catalog::eval_order4(&mut ev).unwrap().iter().zip(catalog::entries(4)) {
            let p = e.pattern();
            let want = match e.rooting {
                catalog::Rooting::Edge => nbgraphlets::oracle::edge_rooted_counts(&p, &g, ev.index(), &cfg).unwrap().into_vec(),
                catalog::Rooting::Vertex => nbgraphlets::oracle::vertex_rooted_counts(&p, &g, &cfg).unwrap().into_vec(),
            };
            prop_assert_eq!(res.values.as_slice(), &want[..], "{}", res.motif);
        }
    }

    #[test]
    fn census_matches_cycle_oracle(g in graph()) {
        let cfg = OracleConfig::default();
        let mut ev = Evaluator::new(&g);
        let report = census::census(&mut ev).unwrap();
        for k in 3..=9 {
            prop_assert_eq!(report.cycles(k), Some(count_simple_cycles(&g, k, &cfg).unwrap() as i64));
        }
    }

    #[test]
    fn oracle_strategies_agree(g in graph(), mask in 1u64..1 << 10, root in 0usize..5) {
        let edges = nbgraphlets::pattern::mask_edges(5, mask);
        let p = RootedGraph::from_edges(5, &edges, &[root], &[]).unwrap();
        let cfg = OracleConfig::default();
        prop_assert_eq!(location_counts(&p, &g, &cfg).unwrap(), location_counts_dedup(&p, &g, &cfg).unwrap());
    }
}
