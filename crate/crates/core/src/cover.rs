//! Separated covers at a fixed scale.
//!
//! A cover is a family `U_0, ..., U_{m-1}` of vertex sets whose union is
//! `V(G)`. The locally injective construction wants every component of
//! `(G^{3R})[U_i]` to be small; the generators here produce such covers
//! explicitly and [`validate_cover`] measures what they achieved.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{FiniteGraph, VertexId};

/// Largest ambient dimension for brick covers (`2^a` colour classes).
const MAX_BRICK_DIM: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CoverKind {
    /// The single set `V(G)`.
    Trivial,
    /// Voronoi cells of a greedy net, greedily coloured.
    Net,
    /// Coordinate bricks of side `L`, coloured by brick-index parity.
    Brick,
}

impl fmt::Display for CoverKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CoverKind::Trivial => "trivial",
            CoverKind::Net => "net",
            CoverKind::Brick => "brick",
        })
    }
}

impl FromStr for CoverKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "trivial" => Ok(CoverKind::Trivial),
            "net" => Ok(CoverKind::Net),
            "brick" => Ok(CoverKind::Brick),
            _ => Err(Error::InvalidParameter(format!("unknown cover kind '{s}'"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoverParams {
    /// Brick side or net separation `L`.
    pub cell: u64,
    /// Target radius `R`; the cover aims at scale `3R`.
    pub radius: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cover {
    pub m: usize,
    pub scale: u64,
    pub kind: CoverKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cell: Option<u64>,
    pub sets: Vec<Vec<VertexId>>,
}

impl Cover {
    /// Builds a cover from explicit sets, sorting and deduplicating each.
    pub fn from_sets(
        kind: CoverKind,
        scale: u64,
        cell: Option<u64>,
        mut sets: Vec<Vec<VertexId>>,
    ) -> Result<Self> {
        if sets.is_empty() {
            return Err(Error::InvalidParameter(
                "a cover needs at least one set".into(),
            ));
        }
        for s in &mut sets {
            s.sort_unstable();
            s.dedup();
        }
        Ok(Self {
            m: sets.len(),
            scale,
            kind,
            cell,
            sets,
        })
    }

    /// Checks that the sets mention only vertices of `g` and cover all of them.
    pub fn check_covers(&self, g: &FiniteGraph) -> Result<()> {
        if self.m != self.sets.len() || self.m == 0 {
            return Err(Error::InvalidParameter(format!(
                "cover declares m = {} but has {} sets",
                self.m,
                self.sets.len()
            )));
        }
        let mut hit = vec![false; g.n()];
        for &v in self.sets.iter().flatten() {
            g.check_vertex(v)?;
            hit[v] = true;
        }
        match hit.iter().position(|&h| !h) {
            Some(v) => Err(Error::CoverIncomplete(v)),
            None => Ok(()),
        }
    }
}

pub fn make_cover(g: &FiniteGraph, kind: CoverKind, params: CoverParams) -> Result<Cover> {
    let scale = params
        .radius
        .checked_mul(3)
        .ok_or_else(|| Error::InvalidParameter("radius too large".into()))?;
    let need_cell = || {
        if params.cell < scale + 1 {
            Err(Error::InvalidParameter(format!(
                "cell size {} must be at least 3R + 1 = {}",
                params.cell,
                scale + 1
            )))
        } else {
            Ok(())
        }
    };
    match kind {
        CoverKind::Trivial => Cover::from_sets(kind, scale, None, vec![(0..g.n()).collect()]),
        CoverKind::Brick => {
            let coords = g.coords().ok_or(Error::MissingCoords)?;
            need_cell()?;
            let dim = g.coord_dim().unwrap_or(0);
            if dim > MAX_BRICK_DIM {
                return Err(Error::InvalidParameter(format!(
                    "brick covers support at most {MAX_BRICK_DIM} dimensions"
                )));
            }
            let side = i64::try_from(params.cell)
                .map_err(|_| Error::InvalidParameter("cell size too large".into()))?;
            let mut sets = vec![Vec::new(); 1 << dim];
            for (v, p) in coords.iter().enumerate() {
                let colour = p
                    .coords()
                    .iter()
                    .enumerate()
                    .map(|(axis, &c)| (c.div_euclid(side).rem_euclid(2) as usize) << axis)
                    .sum::<usize>();
                sets[colour].push(v);
            }
            Cover::from_sets(kind, scale, Some(params.cell), sets)
        }
        CoverKind::Net => {
            need_cell()?;
            let cell = usize::try_from(params.cell)
                .map_err(|_| Error::InvalidParameter("cell size too large".into()))?;
            let clusters = voronoi_clusters(g, &greedy_net(g, cell));
            let colours = greedy_colouring(g, &clusters, scale as usize);
            let m = colours.iter().copied().max().map_or(1, |c| c + 1);
            let mut sets = vec![Vec::new(); m];
            for (cluster, &c) in clusters.iter().zip(&colours) {
                sets[c].extend_from_slice(cluster);
            }
            Cover::from_sets(kind, scale, Some(params.cell), sets)
        }
    }
}

/// Greedy net in id order: a vertex joins unless some earlier net point is
/// within distance `cell - 1`. Net points are pairwise at distance `>= cell`
/// and every vertex is within `cell - 1` of the net.
pub fn greedy_net(g: &FiniteGraph, cell: usize) -> Vec<VertexId> {
    let mut covered = vec![false; g.n()];
    let mut net = Vec::new();
    for v in 0..g.n() {
        if covered[v] {
            continue;
        }
        net.push(v);
        for (w, _) in g.truncated_bfs(&[v], cell.saturating_sub(1)) {
            covered[w] = true;
        }
    }
    net
}

/// Assigns every vertex to its nearest net point, ties going to the earlier
/// net point. Returns the clusters in net order, each sorted.
pub fn voronoi_clusters(g: &FiniteGraph, net: &[VertexId]) -> Vec<Vec<VertexId>> {
    let mut owner = vec![usize::MAX; g.n()];
    let mut frontier = Vec::new();
    for (i, &p) in net.iter().enumerate() {
        owner[p] = i;
        frontier.push(p);
    }
    while !frontier.is_empty() {
        let mut proposal: std::collections::BTreeMap<VertexId, usize> = Default::default();
        for &u in &frontier {
            for &w in g.neighbors(u) {
                if owner[w] == usize::MAX {
                    let e = proposal.entry(w).or_insert(owner[u]);
                    *e = (*e).min(owner[u]);
                }
            }
        }
        frontier.clear();
        for (w, o) in proposal {
            owner[w] = o;
            frontier.push(w);
        }
    }
    let mut clusters = vec![Vec::new(); net.len()];
    for (v, &o) in owner.iter().enumerate() {
        clusters[o].push(v);
    }
    clusters
}

/// Colours clusters in order with the least colour unused by any earlier
/// cluster within distance `scale`.
fn greedy_colouring(g: &FiniteGraph, clusters: &[Vec<VertexId>], scale: usize) -> Vec<usize> {
    let mut owner = vec![0; g.n()];
    for (i, c) in clusters.iter().enumerate() {
        for &v in c {
            owner[v] = i;
        }
    }
    let mut adjacent = vec![std::collections::BTreeSet::new(); clusters.len()];
    for u in 0..g.n() {
        for (w, _) in g.truncated_bfs(&[u], scale) {
            if owner[w] != owner[u] {
                adjacent[owner[u]].insert(owner[w]);
            }
        }
    }
    let mut colour = vec![usize::MAX; clusters.len()];
    for i in 0..clusters.len() {
        let used: std::collections::BTreeSet<usize> = adjacent[i]
            .iter()
            .map(|&j| colour[j])
            .filter(|&c| c != usize::MAX)
            .collect();
        colour[i] = (0..).find(|c| !used.contains(c)).expect("unbounded");
    }
    colour
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SetReport {
    pub size: usize,
    pub components: usize,
    pub max_component_size: usize,
    /// Largest `dist_G` diameter of a component of `(G^s)[U_i]`.
    pub max_diameter: usize,
    pub exceeds_bound: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverReport {
    pub scale: usize,
    pub bound: Option<usize>,
    pub sets: Vec<SetReport>,
    /// Components of a finite graph are always finite.
    pub finite: bool,
    pub bounded_by: usize,
    pub within_bound: bool,
}

/// Exact component statistics of `(G^s)[U_i]` for every set of the cover.
pub fn validate_cover(
    g: &FiniteGraph,
    cover: &Cover,
    scale: usize,
    bound: Option<usize>,
) -> Result<CoverReport> {
    if scale == 0 {
        return Err(Error::InvalidParameter(
            "validation scale must be >= 1".into(),
        ));
    }
    cover.check_covers(g)?;
    let sets: Vec<SetReport> = cover
        .sets
        .iter()
        .map(|set| {
            let comps = g.power_components(set, scale);
            let max_diameter = comps.iter().map(|c| g.weak_diameter(c)).max().unwrap_or(0);
            SetReport {
                size: set.len(),
                components: comps.len(),
                max_component_size: comps.iter().map(Vec::len).max().unwrap_or(0),
                max_diameter,
                exceeds_bound: bound.is_some_and(|b| max_diameter > b),
            }
        })
        .collect();
    let bounded_by = sets.iter().map(|s| s.max_diameter).max().unwrap_or(0);
    Ok(CoverReport {
        scale,
        bound,
        finite: true,
        bounded_by,
        within_bound: sets.iter().all(|s| !s.exceeds_bound),
        sets,
    })
}
