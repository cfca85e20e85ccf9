//! Brute-force embedding dimension for very small graphs.
//!
//! Deliberately naive: vertices are placed in id order on every point of
//! `[0, diam]^d`, edges are checked against already placed neighbours, and a
//! complete placement counts only if every axis attains the value 0. No
//! symmetry breaking, no distance pruning. Shares nothing with the solver
//! beyond the graph type.

use crate::error::{Error, Result};
use crate::graph::FiniteGraph;
use crate::grid::{linf, GridBox};

pub const ORACLE_MAX_VERTICES: usize = 7;

pub fn embedding_dimension_oracle(g: &FiniteGraph) -> Result<usize> {
    if g.n() > ORACLE_MAX_VERTICES {
        return Err(Error::SizeCap {
            found: g.n(),
            cap: ORACLE_MAX_VERTICES,
        });
    }
    if g.n() <= 1 {
        return Ok(0);
    }
    let components = g.component_sets();
    if components.len() > 1 {
        // components embed independently into disjoint translates
        let mut best = 1;
        for comp in components {
            let (sub, _) = g.induced_subgraph(&comp)?;
            best = best.max(connected_oracle(&sub));
        }
        return Ok(best);
    }
    Ok(connected_oracle(g))
}

fn connected_oracle(g: &FiniteGraph) -> usize {
    if g.n() <= 1 {
        return 0;
    }
    let diam = g.diameter() as i64;
    (1..=g.n())
        .find(|&d| feasible(g, d, diam))
        .expect("n dimensions always suffice")
}

fn feasible(g: &FiniteGraph, d: usize, side: i64) -> bool {
    let points: Vec<Vec<i64>> = GridBox::cube(d, side)
        .expect("nonempty")
        .points()
        .map(|p| p.0)
        .collect();
    let mut chosen: Vec<usize> = Vec::with_capacity(g.n());
    dfs(g, &points, &mut chosen)
}

fn dfs(g: &FiniteGraph, points: &[Vec<i64>], chosen: &mut Vec<usize>) -> bool {
    let v = chosen.len();
    if v == g.n() {
        let dim = points[0].len();
        return (0..dim).all(|axis| chosen.iter().any(|&i| points[i][axis] == 0));
    }
    for i in 0..points.len() {
        if chosen.contains(&i) {
            continue;
        }
        let ok = g
            .neighbors(v)
            .iter()
            .filter(|&&u| u < v)
            .all(|&u| linf(&points[chosen[u]], &points[i]) == 1);
        if !ok {
            continue;
        }
        chosen.push(i);
        if dfs(g, points, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate_graph, Family};

    fn oracle(f: Family) -> usize {
        embedding_dimension_oracle(&generate_graph(&f).unwrap()).unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(oracle(Family::Path(1)), 0);
        assert_eq!(oracle(Family::Path(5)), 1);
        assert_eq!(oracle(Family::Clique(4)), 2);
        assert_eq!(oracle(Family::Cycle(6)), 2);
        assert_eq!(oracle(Family::Star(4)), 2);
        assert_eq!(oracle(Family::Clique(5)), 3);
        assert_eq!(oracle(Family::Clique(7)), 3);
        assert_eq!(
            embedding_dimension_oracle(&FiniteGraph::empty(3)).unwrap(),
            1
        );
    }

    #[test]
    fn size_cap() {
        let k8 = generate_graph(&Family::Clique(8)).unwrap();
        assert!(matches!(
            embedding_dimension_oracle(&k8),
            Err(Error::SizeCap { .. })
        ));
    }
}
