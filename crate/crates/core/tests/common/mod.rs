#![allow(dead_code)]

use gridemb::graph::{generate_graph, Family};
use gridemb::rng::XorShift64Star;
use gridemb::FiniteGraph;

/// All connected graphs on `n` vertices, one per isomorphism class.
///
/// Enumerates edge subsets of `K_n` and keeps those whose adjacency
/// bitmask is the smallest among all vertex relabellings.
pub fn connected_graphs(n: usize) -> Vec<FiniteGraph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let perms = permutations(n);
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let canonical = perms.iter().all(|p| relabel(&pairs, &edges, p) >= mask);
        if !canonical {
            continue;
        }
        let g = FiniteGraph::new(n, edges, None).unwrap();
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

fn relabel(pairs: &[(usize, usize)], edges: &[(usize, usize)], perm: &[usize]) -> u32 {
    edges
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
            1u32 << pairs.iter().position(|&e| e == (a, b)).unwrap()
        })
        .sum()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for slot in 0..n {
            let mut q = p.clone();
            q.insert(slot, n - 1);
            out.push(q);
        }
    }
    out
}

/// Paths, cycles, cliques and stars on at most six vertices, followed by
/// every connected graph on at most five.
pub fn catalog() -> Vec<(String, FiniteGraph)> {
    let mut out = Vec::new();
    for n in 1..=6 {
        let mut families = vec![Family::Path(n), Family::Clique(n), Family::Star(n)];
        if n >= 3 {
            families.push(Family::Cycle(n));
        }
        for f in families {
            out.push((f.to_string(), generate_graph(&f).unwrap()));
        }
    }
    for n in 1..=5 {
        for (i, g) in connected_graphs(n).into_iter().enumerate() {
            out.push((format!("connected:{n}#{i}"), g));
        }
    }
    out
}

/// Random graph on `n` vertices with edge probability `p`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> FiniteGraph {
    let mut rng = XorShift64Star::new(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.chance(p) {
                edges.push((u, v));
            }
        }
    }
    FiniteGraph::new(n, edges, None).unwrap()
}
