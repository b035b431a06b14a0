use proptest::prelude::*;

use ::cfi::cfi::Parity;
use ::cfi::distinguish::distinguish;
use ::cfi::homcount::Subdivision;
use ::cfi::io::{from_json, read_dimacs, to_json, write_dimacs, GraphDoc};
use ::cfi::iso::{is_isomorphic, Colored};
use ::cfi::treewidth::treewidth;
use ::cfi::{BaseGraph, CfiGraph};

/// Connected graph on `2..=max_n` vertices: a random tree plus extra edges.
fn connected_graph(max_n: usize, max_degree: usize) -> impl Strategy<Value = BaseGraph> {
    (2..=max_n)
        .prop_flat_map(|n| {
            let parents: Vec<_> = (1..n).map(|v| 0..v).collect();
            (Just(n), parents, prop::collection::vec((0..n, 0..n), 0..n))
        })
        .prop_map(move |(n, parents, extra)| {
            let mut g = BaseGraph::empty(n);
            for (v, p) in parents.into_iter().enumerate() {
                g.add_edge(p, v + 1).unwrap();
            }
            for (a, b) in extra {
                if a != b && g.neighbors(a).len() < max_degree && g.neighbors(b).len() < max_degree {
                    g.add_edge(a, b).unwrap();
                }
            }
            g
        })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn twisted_graph_is_determined_by_parity(
        (g, twists) in connected_graph(5, 3).prop_flat_map(|g| {
            let m = g.edge_count();
            (Just(g), prop::collection::vec(0..m, 0..5))
        })
    ) {
        let edges = g.edges();
        let seq: Vec<_> = twists.iter().map(|&i| edges[i]).collect();
        let z = CfiGraph::new(&g, &seq, true).unwrap();
        let x = CfiGraph::x(&g).unwrap();
        let iso = x.with_colored(|a| z.with_colored(|b| is_isomorphic(a, b))).unwrap();
        prop_assert_eq!(iso, seq.len() % 2 == 0);
        let expected = if seq.len() % 2 == 0 { Parity::Original } else { Parity::Twisted };
        prop_assert_eq!(z.parity(), expected);
    }

    #[test]
    fn distinguisher_survives_relabelling(
        (g, perm, twisted) in connected_graph(7, 4).prop_flat_map(|g| {
            let c = CfiGraph::y(&g).unwrap();
            (Just(g), permutation(c.n()), any::<bool>())
        })
    ) {
        let c = if twisted { CfiGraph::y_tilde(&g).unwrap() } else { CfiGraph::y(&g).unwrap() };
        let z = c.graph().relabel(&perm).unwrap();
        let d = distinguish(&z).unwrap();
        let expected = if twisted { Parity::Twisted } else { Parity::Original };
        prop_assert_eq!(d.verdict, expected);
        prop_assert!(is_isomorphic(Colored::plain(&d.base), Colored::plain(&g)).unwrap());
    }

    #[test]
    fn subdivision_keeps_treewidth(g in connected_graph(5, 4)) {
        let s = Subdivision::new(&g);
        prop_assume!(s.graph().n() <= 16);
        prop_assert_eq!(treewidth(s.graph()).unwrap(), treewidth(&g).unwrap().max(1));
    }

    #[test]
    fn json_and_dimacs_round_trip(g in connected_graph(12, 5), colored in any::<bool>()) {
        let mut doc = GraphDoc::from_graph(&g);
        if colored {
            doc.colors = Some((0..g.n() as u32).map(|x| x % 3).collect());
        }
        prop_assert_eq!(from_json(&to_json(&doc)).unwrap(), doc);
        prop_assert_eq!(read_dimacs(&write_dimacs(&g)).unwrap(), g);
    }
}
