//! Finite simple graphs with a memoised BFS metric.

pub(crate) mod generate;
mod growth;
mod io;

use std::collections::hash_map::Entry;
use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::OnceLock;

pub use generate::{generate_graph, Family};
pub use growth::{growth_stats, GrowthStats};
pub use io::{load_graph, parse_graph};

use crate::error::{Error, Result};
use crate::grid::{linf, GridPoint};

pub type VertexId = usize;

/// Sentinel for "unreachable" in cached distance rows.
pub(crate) const UNREACHABLE: u32 = u32::MAX;

/// An immutable simple undirected graph on vertices `0..n`.
///
/// Distances are computed by BFS on demand, one source at a time, and the
/// rows are memoised behind a [`OnceLock`] so the graph can be shared
/// between threads.
pub struct FiniteGraph {
    adj: Vec<Vec<VertexId>>,
    coords: Option<Vec<GridPoint>>,
    edge_count: usize,
    rows: Vec<OnceLock<Box<[u32]>>>,
}

impl Clone for FiniteGraph {
    fn clone(&self) -> Self {
        Self {
            adj: self.adj.clone(),
            coords: self.coords.clone(),
            edge_count: self.edge_count,
            rows: fresh_rows(self.adj.len()),
        }
    }
}

impl fmt::Debug for FiniteGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGraph")
            .field("n", &self.n())
            .field("edges", &self.edge_count)
            .field("coord_dim", &self.coord_dim())
            .finish()
    }
}

impl PartialEq for FiniteGraph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj && self.coords == other.coords
    }
}

fn fresh_rows(n: usize) -> Vec<OnceLock<Box<[u32]>>> {
    (0..n).map(|_| OnceLock::new()).collect()
}

impl FiniteGraph {
    /// Builds and validates a graph. Rejects loops, duplicate edges, unknown
    /// ids, coordinate dimension mismatches, repeated coordinates and edges
    /// whose endpoints are not at max-norm distance one.
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
        coords: Option<Vec<GridPoint>>,
    ) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        let mut edge_count = 0;
        for (u, v) in edges {
            if u >= n {
                return Err(Error::UnknownVertex(u));
            }
            if v >= n {
                return Err(Error::UnknownVertex(v));
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
            edge_count += 1;
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        if let Some(cs) = &coords {
            if cs.len() != n {
                return Err(Error::InvalidParameter(format!(
                    "{} coordinate rows for {n} vertices",
                    cs.len()
                )));
            }
            if let Some(first) = cs.first() {
                let dim = first.dim();
                if let Some(bad) = cs.iter().find(|c| c.dim() != dim) {
                    return Err(Error::DimensionMismatch {
                        expected: dim,
                        found: bad.dim(),
                    });
                }
            }
            let mut seen: HashMap<&GridPoint, VertexId> = HashMap::with_capacity(n);
            for (v, c) in cs.iter().enumerate() {
                if let Some(&u) = seen.get(c) {
                    return Err(Error::DuplicateCoords(u, v));
                }
                seen.insert(c, v);
            }
            for (u, list) in adj.iter().enumerate() {
                for &v in list {
                    if u < v && linf(&cs[u].0, &cs[v].0) != 1 {
                        return Err(Error::NotGridEdge(u, v));
                    }
                }
            }
        }
        Ok(Self {
            rows: fresh_rows(n),
            adj,
            coords,
            edge_count,
        })
    }

    pub fn empty(n: usize) -> Self {
        Self::new(n, std::iter::empty(), None).expect("edgeless graph is valid")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn coords(&self) -> Option<&[GridPoint]> {
        self.coords.as_deref()
    }

    pub fn coord(&self, v: VertexId) -> Option<&GridPoint> {
        self.coords.as_ref().map(|c| &c[v])
    }

    /// Ambient dimension of the coordinates, if any.
    pub fn coord_dim(&self) -> Option<usize> {
        self.coords
            .as_ref()
            .map(|c| c.first().map_or(0, GridPoint::dim))
    }

    pub(crate) fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    /// BFS distance row from `u`; entries equal to [`UNREACHABLE`] mark other
    /// components. Panics on an unknown vertex.
    pub(crate) fn row(&self, u: VertexId) -> &[u32] {
        self.rows[u].get_or_init(|| self.bfs(u))
    }

    fn bfs(&self, src: VertexId) -> Box<[u32]> {
        let mut dist = vec![UNREACHABLE; self.n()];
        let mut queue = VecDeque::new();
        dist[src] = 0;
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            let next = dist[u] + 1;
            for &w in &self.adj[u] {
                if dist[w] == UNREACHABLE {
                    dist[w] = next;
                    queue.push_back(w);
                }
            }
        }
        dist.into_boxed_slice()
    }

    /// Graph distance; `None` stands for infinity.
    pub fn dist(&self, u: VertexId, v: VertexId) -> Result<Option<usize>> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.dist_unchecked(u, v))
    }

    pub(crate) fn dist_unchecked(&self, u: VertexId, v: VertexId) -> Option<usize> {
        match self.row(u)[v] {
            UNREACHABLE => None,
            d => Some(d as usize),
        }
    }

    /// Closed ball, sorted by vertex id. Only the radius-`r` frontier is
    /// explored; nothing is memoised.
    pub fn ball(&self, u: VertexId, r: usize) -> Result<Vec<VertexId>> {
        self.check_vertex(u)?;
        let mut out: Vec<_> = self
            .truncated_bfs(&[u], r)
            .into_iter()
            .map(|(v, _)| v)
            .collect();
        out.sort_unstable();
        Ok(out)
    }

    /// Multi-source BFS up to depth `r`, returning `(vertex, depth)` in
    /// visit order.
    pub(crate) fn truncated_bfs(&self, sources: &[VertexId], r: usize) -> Vec<(VertexId, usize)> {
        let mut seen: HashMap<VertexId, usize> = HashMap::new();
        let mut order = Vec::new();
        let mut queue = VecDeque::new();
        for &s in sources {
            if let Entry::Vacant(slot) = seen.entry(s) {
                slot.insert(0);
                order.push((s, 0));
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            let du = seen[&u];
            if du == r {
                continue;
            }
            for &w in &self.adj[u] {
                if let std::collections::hash_map::Entry::Vacant(e) = seen.entry(w) {
                    e.insert(du + 1);
                    order.push((w, du + 1));
                    queue.push_back(w);
                }
            }
        }
        order
    }

    /// Component label per vertex; labels are dense and ordered by the
    /// smallest vertex in each component.
    pub fn components(&self) -> Vec<usize> {
        let mut label = vec![usize::MAX; self.n()];
        let mut next = 0;
        let mut stack = Vec::new();
        for s in 0..self.n() {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = next;
            stack.push(s);
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if label[w] == usize::MAX {
                        label[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        label
    }

    /// Vertex lists of the components, each sorted, in label order.
    pub fn component_sets(&self) -> Vec<Vec<VertexId>> {
        group_by_label(&self.components())
    }

    pub fn is_connected(&self) -> bool {
        self.components().iter().all(|&c| c == 0)
    }

    /// Subgraph induced by `subset`. Vertex `i` of the result is
    /// `subset_sorted[i]`; that table is returned alongside.
    pub fn induced_subgraph(&self, subset: &[VertexId]) -> Result<(FiniteGraph, Vec<VertexId>)> {
        let mut keep: Vec<VertexId> = subset.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if let Some(&bad) = keep.iter().find(|&&v| v >= self.n()) {
            return Err(Error::UnknownVertex(bad));
        }
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let edges: Vec<_> = keep
            .iter()
            .flat_map(|&u| {
                let index = &index;
                self.adj[u]
                    .iter()
                    .filter(move |&&w| u < w && index[w] != usize::MAX)
                    .map(move |&w| (index[u], index[w]))
            })
            .collect();
        let coords = self
            .coords
            .as_ref()
            .map(|cs| keep.iter().map(|&v| cs[v].clone()).collect());
        Ok((FiniteGraph::new(keep.len(), edges, coords)?, keep))
    }

    /// `G^R`: same vertices, an edge for every pair at distance in `1..=R`.
    /// Coordinates are dropped.
    pub fn power_graph(&self, radius: usize) -> Result<FiniteGraph> {
        if radius == 0 {
            return Err(Error::InvalidParameter(
                "power graph radius must be >= 1".into(),
            ));
        }
        let mut edges = Vec::new();
        for u in 0..self.n() {
            for (v, _) in self.truncated_bfs(&[u], radius) {
                if u < v {
                    edges.push((u, v));
                }
            }
        }
        FiniteGraph::new(self.n(), edges, None)
    }

    /// Components of `(G^radius)[subset]`, each sorted, ordered by their
    /// smallest vertex. Vertices outside `subset` are ignored.
    pub fn power_components(&self, subset: &[VertexId], radius: usize) -> Vec<Vec<VertexId>> {
        let mut inside = vec![false; self.n()];
        for &v in subset {
            inside[v] = true;
        }
        let mut members: Vec<VertexId> = subset.to_vec();
        members.sort_unstable();
        members.dedup();
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for &s in &members {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for (w, _) in self.truncated_bfs(&[u], radius) {
                    if inside[w] && !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Largest `dist_G` between two vertices of `set` (finite pairs only).
    pub fn weak_diameter(&self, set: &[VertexId]) -> usize {
        set.iter()
            .map(|&u| {
                let row = self.row(u);
                set.iter()
                    .map(|&v| row[v])
                    .filter(|&d| d != UNREACHABLE)
                    .max()
                    .unwrap_or(0) as usize
            })
            .max()
            .unwrap_or(0)
    }

    /// Largest finite eccentricity over all vertices (0 for the empty graph).
    pub fn diameter(&self) -> usize {
        (0..self.n())
            .map(|u| self.eccentricity(u))
            .max()
            .unwrap_or(0)
    }

    /// Largest finite distance from `u`.
    pub fn eccentricity(&self, u: VertexId) -> usize {
        self.row(u)
            .iter()
            .filter(|&&d| d != UNREACHABLE)
            .max()
            .copied()
            .unwrap_or(0) as usize
    }

    /// The vertex at the given coordinates, if the graph has coordinates.
    pub fn vertex_at(&self) -> Option<HashMap<&GridPoint, VertexId>> {
        self.coords
            .as_ref()
            .map(|cs| cs.iter().enumerate().map(|(v, c)| (c, v)).collect())
    }
}

pub(crate) fn group_by_label(labels: &[usize]) -> Vec<Vec<VertexId>> {
    let count = labels.iter().copied().max().map_or(0, |m| m + 1);
    let mut sets = vec![Vec::new(); count];
    for (v, &l) in labels.iter().enumerate() {
        sets[l].push(v);
    }
    sets
}
