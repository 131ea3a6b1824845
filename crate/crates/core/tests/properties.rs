//! Randomized invariants over small signed graphs.

use std::collections::BTreeSet;

use proptest::prelude::*;

use signed_arboricity::graph::{
    class_subgraph, is_signed_tree_coloring, used_classes, ColorDomain, Coloring, SignedGraph,
};
use signed_arboricity::switch::{balance, is_balanced, switch_set, switch_vertex};

fn arb_graph() -> impl Strategy<Value = SignedGraph> {
    (3usize..=7).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .collect();
        let m = pairs.len();
        (Just(n), Just(pairs), prop::collection::vec(any::<bool>(), m), prop::collection::vec(any::<bool>(), m))
    })
    .prop_map(|(n, pairs, present, neg)| {
        let mut g = SignedGraph::new(n);
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if present[i] {
                g.add_edge(u, v, if neg[i] { -1 } else { 1 }).unwrap();
            }
        }
        g
    })
}

fn arb_coloring(n: u32, vertices: usize) -> impl Strategy<Value = Coloring> {
    let values = ColorDomain::new(n).unwrap().values();
    prop::collection::vec(prop::sample::select(values), vertices).prop_map(move |cols| {
        let mut c = Coloring::new(ColorDomain::new(n).unwrap());
        for (v, col) in cols.into_iter().enumerate() {
            c.set(v, col);
        }
        c
    })
}

proptest! {
    /// Every edge whose endpoints share a class lands in exactly that one
    /// class subgraph; edges across classes land in none.
    #[test]
    fn class_subgraphs_partition_the_monochromatic_edges(
        g in arb_graph(),
        c in arb_coloring(3, 7),
    ) {
        let mut covered = 0usize;
        for i in used_classes(&c) {
            let sub = class_subgraph(&g, &c, i).unwrap();
            for &(u, v) in &sub.edges {
                prop_assert_eq!(c.get(u).unwrap().unsigned_abs(), i);
                prop_assert_eq!(c.get(v).unwrap().unsigned_abs(), i);
            }
            covered += sub.edges.len();
        }
        let in_some_class = g.edges().filter(|&(u, v, s)| {
            let (cu, cv) = (c.get(u).unwrap(), c.get(v).unwrap());
            cu.abs() == cv.abs() && (if s == 1 { cu == cv } else { cu == -cv })
        }).count();
        prop_assert_eq!(covered, in_some_class);
    }

    /// Negating every color globally preserves the tree-coloring property.
    #[test]
    fn global_negation_invariance(g in arb_graph(), c in arb_coloring(3, 7)) {
        let mut neg = Coloring::new(c.domain());
        for (v, col) in c.iter() {
            neg.set(v, -col);
        }
        prop_assert_eq!(
            is_signed_tree_coloring(&g, &c),
            is_signed_tree_coloring(&g, &neg)
        );
    }

    /// Switching the same set twice is the identity.
    #[test]
    fn switching_is_an_involution(g in arb_graph(), raw in prop::collection::btree_set(0usize..7, 0..5)) {
        let s: BTreeSet<usize> = raw.into_iter().filter(|&v| v < g.vertex_count()).collect();
        let once = switch_set(&g, &s).unwrap();
        let twice = switch_set(&once, &s).unwrap();
        prop_assert_eq!(
            g.edges().collect::<Vec<_>>(),
            twice.edges().collect::<Vec<_>>()
        );
    }

    /// Switching a set equals switching its complement.
    #[test]
    fn switching_complement_agrees(g in arb_graph(), raw in prop::collection::btree_set(0usize..7, 0..5)) {
        let s: BTreeSet<usize> = raw.into_iter().filter(|&v| v < g.vertex_count()).collect();
        let comp: BTreeSet<usize> = (0..g.vertex_count()).filter(|v| !s.contains(v)).collect();
        let a = switch_set(&g, &s).unwrap();
        let b = switch_set(&g, &comp).unwrap();
        prop_assert_eq!(
            a.edges().collect::<Vec<_>>(),
            b.edges().collect::<Vec<_>>()
        );
    }

    /// Balance is preserved under single-vertex switching, and an accepting
    /// potential certifies every edge sign.
    #[test]
    fn balance_certificates_hold(g in arb_graph(), v in 0usize..7) {
        if let signed_arboricity::switch::Balance::Balanced(theta) = balance(&g) {
            for (u, w, s) in g.edges() {
                prop_assert_eq!(s, theta.get(u) * theta.get(w));
            }
        }
        if v < g.vertex_count() {
            let h = switch_vertex(&g, v).unwrap();
            prop_assert_eq!(is_balanced(&g), is_balanced(&h));
        }
    }

    /// A tree-coloring restricted check: deleting any edge never breaks it.
    #[test]
    fn edge_deletion_monotonicity(g in arb_graph(), c in arb_coloring(3, 7)) {
        if is_signed_tree_coloring(&g, &c) {
            if let Some((u, v, _)) = g.edges().next() {
                let mut smaller = SignedGraph::new(g.vertex_count());
                for (a, b, s) in g.edges() {
                    if (a, b) != (u, v) {
                        smaller.add_edge(a, b, s).unwrap();
                    }
                }
                prop_assert!(is_signed_tree_coloring(&smaller, &c));
            }
        }
    }
}
