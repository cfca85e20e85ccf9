#![allow(clippy::needless_range_loop)]

mod common;

use std::collections::VecDeque;

use gridemb::graph::{generate_graph, growth_stats, parse_graph, Family};
use gridemb::{FiniteGraph, GridBox};
use proptest::prelude::*;

/// Floyd-Warshall, independent of the BFS cache.
fn all_pairs(g: &FiniteGraph) -> Vec<Vec<Option<usize>>> {
    let n = g.n();
    let mut d = vec![vec![None; n]; n];
    for u in 0..n {
        d[u][u] = Some(0);
        for &v in g.neighbors(u) {
            d[u][v] = Some(1);
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

fn arb_graph() -> impl Strategy<Value = FiniteGraph> {
    (1usize..14, 0.0f64..0.6, any::<u64>())
        .prop_map(|(n, p, seed)| common::random_graph(n, p, seed))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn distances_match_floyd_warshall(g in arb_graph()) {
        let fw = all_pairs(&g);
        for u in 0..g.n() {
            for v in 0..g.n() {
                prop_assert_eq!(g.dist(u, v).unwrap(), fw[u][v]);
            }
        }
    }

    #[test]
    fn balls_and_components_agree_with_distances(g in arb_graph(), r in 0usize..5) {
        let fw = all_pairs(&g);
        let labels = g.components();
        for u in 0..g.n() {
            let expect: Vec<_> = (0..g.n()).filter(|&v| fw[u][v].is_some_and(|d| d <= r)).collect();
            prop_assert_eq!(g.ball(u, r).unwrap(), expect);
            for v in 0..g.n() {
                prop_assert_eq!(labels[u] == labels[v], fw[u][v].is_some());
            }
        }
    }

    #[test]
    fn power_graph_joins_pairs_within_radius(g in arb_graph(), r in 1usize..4) {
        let fw = all_pairs(&g);
        let p = g.power_graph(r).unwrap();
        for u in 0..g.n() {
            for v in 0..g.n() {
                let near = u != v && fw[u][v].is_some_and(|d| d <= r);
                prop_assert_eq!(p.has_edge(u, v), near);
            }
        }
    }

    #[test]
    fn power_components_match_power_graph(g in arb_graph(), r in 1usize..4, keep in any::<u16>()) {
        let subset: Vec<_> = (0..g.n()).filter(|v| keep >> v & 1 == 1).collect();
        let (sub, ids) = g.power_graph(r).unwrap().induced_subgraph(&subset).unwrap();
        let expect: Vec<Vec<usize>> = sub
            .component_sets()
            .into_iter()
            .map(|c| c.into_iter().map(|i| ids[i]).collect())
            .collect();
        prop_assert_eq!(g.power_components(&subset, r), expect);
    }

    #[test]
    fn growth_never_drops_when_edges_are_added(g in arb_graph(), extra in any::<u64>()) {
        let before = growth_stats(&g).rho_stat;
        let mut edges: Vec<_> = g.edges().collect();
        let n = g.n();
        if n >= 2 {
            let (u, v) = ((extra % n as u64) as usize, ((extra >> 32) % n as u64) as usize);
            if u != v && !g.has_edge(u, v) {
                edges.push((u.min(v), u.max(v)));
            }
        }
        let h = FiniteGraph::new(n, edges, None).unwrap();
        prop_assert!(growth_stats(&h).rho_stat >= before);
    }

    #[test]
    fn edge_lists_round_trip(g in arb_graph()) {
        let mut text = String::new();
        for v in 0..g.n() {
            text.push_str(&format!("{v}\n"));
        }
        for (u, v) in g.edges() {
            text.push_str(&format!("{u} {v}\n"));
        }
        prop_assert_eq!(parse_graph(&text, false).unwrap(), g);
    }
}

#[test]
fn chunk_edges_are_king_moves() {
    let bx = GridBox::new(vec![(-2, 3), (1, 4)]).unwrap();
    let g = generate_graph(&Family::Chunk(bx.clone())).unwrap();
    assert_eq!(g.n() as u128, bx.len());
    let coords = g.coords().unwrap();
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let linf = coords[u]
                .coords()
                .iter()
                .zip(coords[v].coords())
                .map(|(a, b)| (a - b).abs())
                .max()
                .unwrap();
            assert_eq!(g.has_edge(u, v), linf == 1, "{u} {v}");
        }
    }
}

#[test]
fn coordinate_files_with_auto_edges() {
    let text = "v 0 0 0\nv 1 1 1\nv 2 2 1\nv 3 5 5\n";
    let g = parse_graph(text, true).unwrap();
    assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    let bare = parse_graph(text, false).unwrap();
    assert_eq!(bare.edge_count(), 0);
    assert!(parse_graph("v 0 0 0\nv 1 3 0\ne 0 1\n", false).is_err());
}

#[test]
fn connected_graph_counts() {
    let counts: Vec<_> = (1..=5).map(|n| common::connected_graphs(n).len()).collect();
    assert_eq!(counts, vec![1, 1, 2, 6, 21]);
}

#[test]
fn random_induced_chunks_are_reproducible() {
    let f: Family = "random:0..15,0..15:0.7:42".parse().unwrap();
    let a = generate_graph(&f).unwrap();
    let b = generate_graph(&f).unwrap();
    assert_eq!(a, b);
    let full = 16 * 16;
    assert!(a.n() > full / 2 && a.n() < full);
    let c = generate_graph(&"random:0..15,0..15:0.7:43".parse().unwrap()).unwrap();
    assert_ne!(a, c);
}

#[test]
fn diameter_by_bfs_layers() {
    let g = generate_graph(&Family::Cycle(11)).unwrap();
    let mut far = 0;
    let mut depth = vec![usize::MAX; g.n()];
    let mut queue = VecDeque::from([0]);
    depth[0] = 0;
    while let Some(u) = queue.pop_front() {
        far = far.max(depth[u]);
        for &v in g.neighbors(u) {
            if depth[v] == usize::MAX {
                depth[v] = depth[u] + 1;
                queue.push_back(v);
            }
        }
    }
    assert_eq!(g.diameter(), far);
    assert_eq!(far, 5);
}
