use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::VertexId;
use crate::grid::linf;
use crate::lipschitz::{Check, LatticeMap};

/// Product of two maps, `u -> (f(u), h(u))`, with the max-norm identity
/// `||f*(u) - f*(v)|| = max(||f(u) - f(v)||, ||h(u) - h(v)||)` checked on
/// every pair.
#[derive(Clone, Debug, Serialize)]
pub struct MergeReport {
    pub map: LatticeMap,
    pub max_identity: Check,
}

pub fn displacement(m: &LatticeMap, u: VertexId, v: VertexId) -> u64 {
    linf(&m.value(u).0, &m.value(v).0)
}

pub fn merge_maps(f: &LatticeMap, h: &LatticeMap) -> Result<MergeReport> {
    if f.len() != h.len() {
        return Err(Error::GraphMismatch {
            left: f.len(),
            right: h.len(),
        });
    }
    let values = f
        .values()
        .iter()
        .zip(h.values())
        .map(|(a, b)| a.concat(b))
        .collect();
    let mut map = LatticeMap::new(f.dim() + h.dim(), values)?.with_lip(f.lip().max(h.lip()));
    if let Some(tags) = f.tags() {
        map = map.with_tags(tags.to_vec())?;
    }
    let n = map.len();
    let witness = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .find(|&(u, v)| {
            displacement(&map, u, v) != displacement(f, u, v).max(displacement(h, u, v))
        });
    Ok(MergeReport {
        map,
        max_identity: Check {
            holds: witness.is_none(),
            witness,
        },
    })
}
