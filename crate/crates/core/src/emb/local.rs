//! Box-valued locally injective maps on finite vertex sets.

use serde::Serialize;

use super::solver::{embeds_in_dim, SearchLimits, SearchOutcome};
use crate::error::{Error, Result};
use crate::graph::{FiniteGraph, VertexId, UNREACHABLE};
use crate::grid::GridPoint;
use crate::lipschitz::{fold_map, is_valid_embedding, LatticeMap, PartialMap};

/// Where the grid embedding feeding the fold comes from.
#[derive(Clone, Debug)]
pub enum Provider {
    /// Search an embedding of the neighbourhood subgraph in dimension `dim`.
    Solver { dim: usize, limits: SearchLimits },
    /// Use the graph's own coordinates.
    Ambient,
    /// A caller-supplied embedding of the whole graph.
    Supplied(LatticeMap),
}

impl Provider {
    pub fn name(&self) -> &'static str {
        match self {
            Provider::Solver { .. } => "solver",
            Provider::Ambient => "ambient",
            Provider::Supplied(_) => "supplied",
        }
    }

    /// Dimension of the grid embeddings this provider yields on `g`.
    pub fn grid_dim(&self, g: &FiniteGraph) -> Result<usize> {
        match self {
            Provider::Solver { dim, .. } => Ok(*dim),
            Provider::Ambient => g.coord_dim().ok_or(Error::MissingCoords),
            Provider::Supplied(m) => {
                if m.len() != g.n() {
                    return Err(Error::GraphMismatch {
                        left: g.n(),
                        right: m.len(),
                    });
                }
                Ok(m.dim())
            }
        }
    }
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct ProviderInfo {
    pub name: &'static str,
    pub grid_dim: usize,
}

/// A map `S -> {0..R}^{2d'}` that is `R`-locally injective and 1-Lipschitz
/// for `dist_G` restricted to `S`: a grid embedding of (a neighbourhood of)
/// `S` followed by the fold.
///
/// With the solver or a supplied map, the embedding is taken on the subgraph
/// `F` induced by all vertices within distance `D` of `S`, where `D` is the
/// largest finite distance inside `S`; `dist_F` agrees with `dist_G` on `S`.
/// Ambient coordinates are 1-Lipschitz and injective on all of `G`, so no
/// neighbourhood is needed.
pub fn local_box_map(
    g: &FiniteGraph,
    subset: &[VertexId],
    radius: u64,
    provider: &Provider,
) -> Result<PartialMap> {
    for &s in subset {
        g.check_vertex(s)?;
    }
    let grid_dim = provider.grid_dim(g)?;
    let mut out = PartialMap::new(2 * grid_dim, Default::default())?;
    if subset.is_empty() {
        return Ok(out);
    }
    let embedded: Vec<(VertexId, GridPoint)> = match provider {
        Provider::Ambient => {
            let coords = g.coords().ok_or(Error::MissingCoords)?;
            subset.iter().map(|&s| (s, coords[s].clone())).collect()
        }
        Provider::Solver { dim, limits } => {
            let (f, ids) = neighbourhood(g, subset)?;
            let witness = match embeds_in_dim(&f, *dim, *limits).outcome {
                SearchOutcome::Embedded(w) => w,
                SearchOutcome::NotEmbeddable => return Err(Error::NoEmbedding(*dim)),
                SearchOutcome::BudgetExceeded => return Err(Error::BudgetExceeded(*dim)),
            };
            subset
                .iter()
                .map(|&s| {
                    let i = ids.binary_search(&s).expect("subset inside neighbourhood");
                    (s, witness.value(i).clone())
                })
                .collect()
        }
        Provider::Supplied(m) => {
            let (f, ids) = neighbourhood(g, subset)?;
            let restricted =
                LatticeMap::new(m.dim(), ids.iter().map(|&v| m.value(v).clone()).collect())?;
            let check = is_valid_embedding(&f, &restricted)?;
            if let Some((a, b)) = check.witness {
                return Err(Error::InvalidEmbedding(format!(
                    "supplied map fails on vertices {} and {}",
                    ids[a], ids[b]
                )));
            }
            subset.iter().map(|&s| (s, m.value(s).clone())).collect()
        }
    };
    for (s, p) in embedded {
        out.insert(s, fold_map(radius, &p)?)?;
    }
    Ok(out)
}

/// Subgraph induced by the `D`-neighbourhood of `subset`.
fn neighbourhood(g: &FiniteGraph, subset: &[VertexId]) -> Result<(FiniteGraph, Vec<VertexId>)> {
    let spread = subset
        .iter()
        .map(|&s| {
            let row = g.row(s);
            subset
                .iter()
                .map(|&t| row[t])
                .filter(|&d| d != UNREACHABLE)
                .max()
                .unwrap_or(0)
        })
        .max()
        .unwrap_or(0) as usize;
    let around: Vec<_> = g
        .truncated_bfs(subset, spread)
        .into_iter()
        .map(|(v, _)| v)
        .collect();
    g.induced_subgraph(&around)
}
