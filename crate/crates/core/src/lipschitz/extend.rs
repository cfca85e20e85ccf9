//! Min-plus extension of 1-Lipschitz maps.
//!
//! Under the max-norm a map is 1-Lipschitz iff each coordinate is, so the
//! extension works one coordinate at a time:
//! `f*_i(u) = min_{a in A} (f_i(a) + dist(u, a))` on components meeting `A`,
//! and `0` elsewhere. Each coordinate is one multi-source Dijkstra run seeded
//! with the values on `A`.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::verify::is_k_lipschitz_on;
use super::{LatticeMap, PartialMap};
use crate::error::{Error, Result};
use crate::graph::{FiniteGraph, VertexId};
use crate::grid::GridPoint;

/// An extension together with, for every vertex and coordinate, one vertex
/// of `A` attaining the minimum (`None` off the components of `A`).
#[derive(Clone, Debug)]
pub struct Extension {
    pub map: LatticeMap,
    pub argmin: Vec<Vec<Option<VertexId>>>,
}

pub fn extend_lipschitz(g: &FiniteGraph, f: &PartialMap) -> Result<LatticeMap> {
    extend_lipschitz_traced(g, f).map(|e| e.map)
}

pub fn extend_lipschitz_traced(g: &FiniteGraph, f: &PartialMap) -> Result<Extension> {
    let pre = is_k_lipschitz_on(g, f, 1)?;
    if let Some((a, b)) = pre.witness {
        return Err(Error::NotLipschitz(a, b));
    }
    let n = g.n();
    let dim = f.dim();
    let mut coords = vec![vec![0i64; dim]; n];
    let mut argmin = vec![vec![None; dim]; n];
    let mut best: Vec<Option<i64>> = vec![None; n];
    let mut source: Vec<VertexId> = vec![0; n];
    let mut heap = BinaryHeap::new();
    for i in 0..dim {
        best.iter_mut().for_each(|b| *b = None);
        for (a, p) in f.iter() {
            heap.push(Reverse((p.0[i], a, a)));
        }
        while let Some(Reverse((val, u, src))) = heap.pop() {
            if best[u].is_some() {
                continue;
            }
            best[u] = Some(val);
            source[u] = src;
            let next = val.checked_add(1).ok_or_else(|| {
                Error::InvalidParameter("coordinate overflow during extension".into())
            })?;
            for &w in g.neighbors(u) {
                if best[w].is_none() {
                    heap.push(Reverse((next, w, src)));
                }
            }
        }
        for u in 0..n {
            if let Some(v) = best[u] {
                coords[u][i] = v;
                argmin[u][i] = Some(source[u]);
            }
        }
    }
    let map = LatticeMap::new(dim, coords.into_iter().map(GridPoint).collect())?;
    Ok(Extension { map, argmin })
}
