// SPDX-License-Identifier: Apache-2.0

mod common;

use edcolor::{
    clique_number, max_clique, Coloring, Family, FamilyInstance, Graph, Tag, VertexLabel,
};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let len = pairs.len();
        proptest::collection::vec(any::<bool>(), len).prop_map(move |keep| {
            let edges = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&e, _)| e);
            Graph::build(n, edges).unwrap()
        })
    })
}

fn choose2(d: usize) -> usize {
    d * d.saturating_sub(1) / 2
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn line_graph_size_identities(g in arb_graph(10)) {
        let l = g.line_graph();
        prop_assert_eq!(l.n(), g.edge_count());
        let expected: usize = (0..g.n()).map(|v| choose2(g.degree(v))).sum();
        prop_assert_eq!(l.edge_count(), expected);
    }

    #[test]
    fn line_graph_ignores_edge_insertion_order(g in arb_graph(9), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut edges: Vec<(usize, usize)> = g.edges().collect();
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        edges.shuffle(&mut rng);
        let flipped = edges.iter().enumerate().map(|(i, &(u, v))| if i % 2 == 0 { (v, u) } else { (u, v) });
        let h = Graph::build(g.n(), flipped).unwrap();
        prop_assert_eq!(g.line_graph(), h.line_graph());
    }

    #[test]
    fn graph_invariants_hold(g in arb_graph(10)) {
        for v in 0..g.n() {
            prop_assert!(!g.neighbors(v).contains(&v));
            prop_assert!(g.neighbors(v).windows(2).all(|w| w[0] < w[1]));
            for &u in g.neighbors(v) {
                prop_assert!(g.has_edge(u, v));
            }
        }
    }

    #[test]
    fn json_round_trip_is_identity(g in arb_graph(10)) {
        let s = serde_json::to_string(&g).unwrap();
        let back: Graph = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(serde_json::to_string(&back).unwrap(), s);
        prop_assert_eq!(back, g);
    }

    #[test]
    fn clique_matches_subset_enumeration(g in arb_graph(8)) {
        let w = clique_number(&g, u64::MAX).unwrap();
        prop_assert_eq!(w, common::clique_brute_force(&g));
        prop_assert!(w <= g.n());
        prop_assert_eq!(w == g.n(), g.is_complete());
        let c = max_clique(&g, u64::MAX).unwrap();
        for (i, &u) in c.iter().enumerate() {
            for &v in &c[i + 1..] {
                prop_assert!(g.has_edge(u, v));
            }
        }
    }

    #[test]
    fn closed_neighborhood_is_vertex_plus_neighbors(g in arb_graph(10), pick in any::<usize>()) {
        let v = pick % g.n();
        let mut want: Vec<usize> = g.neighbors(v).to_vec();
        want.push(v);
        want.sort_unstable();
        prop_assert_eq!(g.closed_neighborhood(v).unwrap(), want);
    }

    /// Adding an edge never shrinks the classes an endpoint dominates and
    /// never repairs a monochromatic edge.
    #[test]
    fn domination_and_properness_are_monotone_in_edges(
        g in arb_graph(8),
        raw in proptest::collection::vec(1usize..5, 8),
        pick in any::<(usize, usize)>(),
    ) {
        let n = g.n();
        let c = Coloring::from_raw(&raw[..n]);
        let (u, v) = (pick.0 % n, pick.1 % n);
        prop_assume!(u != v && !g.has_edge(u, v));
        let bigger = Graph::build(n, g.edges().chain([(u, v)])).unwrap();
        for w in [u, v] {
            let before = c.dominated_classes(&g, w).unwrap();
            let after = c.dominated_classes(&bigger, w).unwrap();
            prop_assert!(before.iter().all(|j| after.contains(j)));
        }
        if !c.is_proper(&g).unwrap() {
            prop_assert!(!c.is_proper(&bigger).unwrap());
        }
    }

    /// If every closed neighborhood holds a singleton class, the coloring
    /// passes the dominator check.
    #[test]
    fn singleton_in_every_neighborhood_dominates(g in arb_graph(9), raw in proptest::collection::vec(1usize..6, 9)) {
        let c = Coloring::from_raw(&raw[..g.n()]);
        let sizes = c.class_sizes();
        let covered = (0..g.n()).all(|v| {
            g.closed_neighborhood(v).unwrap().iter().any(|&u| sizes[c.color(u) - 1] == 1)
        });
        if covered {
            let r = edcolor::validate_edc(&g, &c).unwrap();
            prop_assert!(r.dominator);
            prop_assert!(r.non_dominating.is_empty());
        }
    }
}

#[test]
fn small_line_graph_examples() {
    let l = common::path(3).line_graph();
    assert_eq!((l.n(), l.edge_count()), (2, 1));
    let l = common::cycle(5).line_graph();
    assert_eq!((l.n(), l.edge_count()), (5, 5));
    assert!(Graph::empty(3).line_graph().is_empty());
}

#[test]
fn clique_examples() {
    let k34 = FamilyInstance::pair(Family::CompleteBipartite, 3, 4)
        .unwrap()
        .generate_line();
    assert_eq!(clique_number(&k34, 1_000_000).unwrap(), 4);
    assert_eq!(clique_number(&Graph::empty(1), 10).unwrap(), 1);
    let w5 = FamilyInstance::single(Family::Wheel, 5)
        .unwrap()
        .generate_line();
    assert_eq!(
        clique_number(&w5, 1_000_000).unwrap(),
        common::clique_brute_force(&w5)
    );
    assert_eq!(common::clique_brute_force(&w5), 5);
}

#[test]
fn direct_line_graphs_match_the_transform() {
    let mut checked = 0;
    for f in Family::ALL {
        let instances: Vec<FamilyInstance> = if f.is_two_parameter() {
            (f.min_param()..=8)
                .flat_map(|a| {
                    (f.min_param()..=8).map(move |b| FamilyInstance::pair(f, a, b).unwrap())
                })
                .collect()
        } else {
            (f.min_param()..=40)
                .map(|t| FamilyInstance::single(f, t).unwrap())
                .collect()
        };
        for instance in instances.into_iter().filter(|s| s.line_order() <= 40) {
            let direct = instance.generate_line();
            let derived = instance.generate().line_graph();
            assert_eq!(direct.n(), derived.n(), "{instance}");
            assert_eq!(
                direct.edges().collect::<Vec<_>>(),
                derived.edges().collect::<Vec<_>>(),
                "{instance}"
            );
            checked += 1;
        }
    }
    assert!(checked > 100);
}

#[test]
fn wheel_line_degrees() {
    for t in 4..=15 {
        let l = FamilyInstance::single(Family::Wheel, t)
            .unwrap()
            .generate_line();
        for v in 0..l.n() {
            let want = if l.label(v).unwrap().tag == Tag::Spoke {
                t + 1
            } else {
                4
            };
            assert_eq!(l.degree(v), want, "t={t} {}", l.label(v).unwrap());
        }
    }
}

#[test]
fn rook_graph_adjacency_rule() {
    for a in 1..=5 {
        for b in 1..=5 {
            let l = FamilyInstance::pair(Family::CompleteBipartite, a, b)
                .unwrap()
                .generate_line();
            let idx = l.label_index();
            for i in 1..=a {
                for j in 1..=b {
                    for i2 in 1..=a {
                        for j2 in 1..=b {
                            let p = idx[&VertexLabel::cell(i, j)];
                            let q = idx[&VertexLabel::cell(i2, j2)];
                            assert_eq!(l.has_edge(p, q), (i == i2) != (j == j2));
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn labels_are_distinct_and_well_formed() {
    for f in Family::ALL {
        let instance = if f.is_two_parameter() {
            FamilyInstance::pair(f, 3, 4).unwrap()
        } else {
            FamilyInstance::single(f, 7).unwrap()
        };
        let l = instance.generate_line();
        let labels = l.labels().unwrap();
        assert_eq!(l.label_index().len(), labels.len());
        assert!(labels.iter().all(VertexLabel::is_well_formed));
        let s = serde_json::to_string(&l).unwrap();
        assert_eq!(serde_json::from_str::<Graph>(&s).unwrap(), l);
    }
}
