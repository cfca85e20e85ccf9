//! From a cover and local grid embeddings to a global map that is
//! 1-Lipschitz and `R`-locally injective, plus the merge, cocycle and chart
//! tools that operate on its output.

mod chart;
mod cocycle;
mod merge;

pub use chart::{shift_chart, ChartEntry, ShiftChart};
pub use cocycle::{
    extract_cocycle, strong_embedding, verify_cocycle, Cocycle, CocycleCheck, Displacements,
    EXHAUSTIVE_LIMIT,
};
pub use merge::{displacement, merge_maps, MergeReport};

use rayon::prelude::*;
use serde::Serialize;

use crate::cover::{Cover, CoverKind};
use crate::emb::{local_box_map, Provider};
use crate::error::{Error, Result};
use crate::graph::{FiniteGraph, VertexId};
use crate::grid::GridPoint;
use crate::lipschitz::{
    extend_lipschitz, is_k_lipschitz, is_r_locally_injective, Check, LatticeMap, PartialMap,
};

/// Intermediate data for one cover set `U_i`.
#[derive(Clone, Debug, Serialize)]
pub struct SetStage {
    /// `V_i`: all vertices within distance `R` of `U_i`.
    pub neighbourhood: Vec<VertexId>,
    /// Components of `(G^R)[V_i]`.
    pub components: Vec<Vec<VertexId>>,
    /// Box-valued map on `V_i`, one fold per component.
    pub local: PartialMap,
    /// Its 1-Lipschitz extension to all of `G`.
    pub extended: LatticeMap,
}

#[derive(Clone, Debug, Serialize)]
pub struct PipelineParams {
    pub radius: u64,
    pub cover_kind: CoverKind,
    pub cover_scale: u64,
    pub m: usize,
    pub provider: &'static str,
    pub grid_dim: usize,
    pub output_dim: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Verification {
    pub lipschitz: Check,
    pub locally_injective: Check,
}

#[derive(Clone, Debug, Serialize)]
pub struct PipelineReport {
    pub params: PipelineParams,
    pub cover: Cover,
    pub stages: Vec<SetStage>,
    pub output: LatticeMap,
    pub verification: Verification,
    pub warnings: Vec<String>,
}

impl PipelineReport {
    pub fn holds(&self) -> bool {
        self.verification.lipschitz.holds && self.verification.locally_injective.holds
    }
}

/// Builds `f* = (f*_1, ..., f*_m)` into `Z^{2 d' m}`.
///
/// For each cover set, the `R`-neighbourhood is split into components of the
/// `R`-th power graph, each component gets its own box-valued map from the
/// provider, and the union is extended to `G` coordinatewise. The result is
/// checked for the Lipschitz and local injectivity properties before
/// returning; a failure is reported, not raised.
pub fn key_lemma_map(
    g: &FiniteGraph,
    radius: u64,
    cover: &Cover,
    provider: &Provider,
) -> Result<PipelineReport> {
    if radius == 0 {
        return Err(Error::InvalidParameter("radius must be at least 1".into()));
    }
    cover.check_covers(g)?;
    let grid_dim = provider.grid_dim(g)?;
    let r =
        usize::try_from(radius).map_err(|_| Error::InvalidParameter("radius too large".into()))?;
    let mut warnings = Vec::new();
    if cover.scale != 3 * radius {
        warnings.push(format!(
            "cover scale {} differs from 3R = {}; local injectivity is not guaranteed",
            cover.scale,
            3 * radius
        ));
    }

    let stages = cover
        .sets
        .par_iter()
        .map(|set| {
            let neighbourhood: Vec<VertexId> = {
                let mut v: Vec<_> = g
                    .truncated_bfs(set, r)
                    .into_iter()
                    .map(|(v, _)| v)
                    .collect();
                v.sort_unstable();
                v
            };
            let components = g.power_components(&neighbourhood, r);
            let mut local = PartialMap::new(2 * grid_dim, Default::default())?;
            for comp in &components {
                for (v, p) in local_box_map(g, comp, radius, provider)?.iter() {
                    local.insert(v, p.clone())?;
                }
            }
            let extended = extend_lipschitz(g, &local)?;
            Ok(SetStage {
                neighbourhood,
                components,
                local,
                extended,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let output_dim = 2 * grid_dim * cover.m;
    let values = (0..g.n())
        .map(|v| {
            GridPoint(
                stages
                    .iter()
                    .flat_map(|s| s.extended.value(v).coords().iter().copied())
                    .collect(),
            )
        })
        .collect();
    let output = LatticeMap::new(output_dim, values)?;
    let verification = Verification {
        lipschitz: is_k_lipschitz(g, &output, 1)?,
        locally_injective: is_r_locally_injective(g, &output, r)?,
    };
    Ok(PipelineReport {
        params: PipelineParams {
            radius,
            cover_kind: cover.kind,
            cover_scale: cover.scale,
            m: cover.m,
            provider: provider.name(),
            grid_dim,
            output_dim,
        },
        cover: cover.clone(),
        stages,
        output,
        verification,
        warnings,
    })
}
