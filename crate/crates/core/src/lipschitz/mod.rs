//! Lattice-valued maps on graph vertices.

mod extend;
mod fold;
mod verify;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

pub use extend::{extend_lipschitz, extend_lipschitz_traced, Extension};
pub use fold::{fold_box, fold_map, fold_point};
pub use verify::{
    check_distance_lower_bound, is_k_lipschitz, is_k_lipschitz_on, is_r_locally_injective,
    is_r_locally_injective_on, is_valid_embedding, Check,
};

use crate::error::{Error, Result};
use crate::graph::VertexId;
use crate::grid::{GridBox, GridPoint};

/// A total map `V(G) -> Z^dim`, indexed by vertex id.
///
/// `lip` is the Lipschitz constant the producer claims; the verifiers in
/// this module are what establish it. `tags` optionally carries component
/// labels for strong embeddings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "MapFile", try_from = "MapFile")]
pub struct LatticeMap {
    dim: usize,
    lip: u64,
    values: Vec<GridPoint>,
    codomain_box: Option<GridBox>,
    tags: Option<Vec<i64>>,
}

impl LatticeMap {
    pub fn new(dim: usize, values: Vec<GridPoint>) -> Result<Self> {
        check_all_dims(dim, values.iter())?;
        Ok(Self {
            dim,
            lip: 1,
            values,
            codomain_box: None,
            tags: None,
        })
    }

    /// Convenience for tests and literals: one coordinate vector per vertex.
    pub fn from_rows(dim: usize, rows: &[&[i64]]) -> Result<Self> {
        Self::new(dim, rows.iter().map(|r| GridPoint(r.to_vec())).collect())
    }

    pub fn with_lip(mut self, lip: u64) -> Self {
        self.lip = lip;
        self
    }

    pub fn with_box(mut self, bx: GridBox) -> Result<Self> {
        if bx.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: bx.dim(),
            });
        }
        if let Some(v) = self
            .values
            .iter()
            .position(|p| !bx.contains(p).unwrap_or(false))
        {
            return Err(Error::InvalidParameter(format!(
                "value of vertex {v} lies outside the declared box"
            )));
        }
        self.codomain_box = Some(bx);
        Ok(self)
    }

    pub fn with_tags(mut self, tags: Vec<i64>) -> Result<Self> {
        if tags.len() != self.values.len() {
            return Err(Error::GraphMismatch {
                left: self.values.len(),
                right: tags.len(),
            });
        }
        self.tags = Some(tags);
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn lip(&self) -> u64 {
        self.lip
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn value(&self, v: VertexId) -> &GridPoint {
        &self.values[v]
    }

    pub fn values(&self) -> &[GridPoint] {
        &self.values
    }

    pub fn codomain_box(&self) -> Option<&GridBox> {
        self.codomain_box.as_ref()
    }

    pub fn tags(&self) -> Option<&[i64]> {
        self.tags.as_deref()
    }

    pub fn into_partial(self) -> PartialMap {
        PartialMap {
            dim: self.dim,
            values: self.values.into_iter().enumerate().collect(),
        }
    }
}

/// A map defined on a subset of the vertices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "MapFile", try_from = "MapFile")]
pub struct PartialMap {
    dim: usize,
    values: BTreeMap<VertexId, GridPoint>,
}

impl PartialMap {
    pub fn new(dim: usize, values: BTreeMap<VertexId, GridPoint>) -> Result<Self> {
        check_all_dims(dim, values.values())?;
        Ok(Self { dim, values })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, v: VertexId) -> Option<&GridPoint> {
        self.values.get(&v)
    }

    pub fn domain(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.values.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexId, &GridPoint)> {
        self.values.iter().map(|(&v, p)| (v, p))
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn insert(&mut self, v: VertexId, p: GridPoint) -> Result<()> {
        if p.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: p.dim(),
            });
        }
        self.values.insert(v, p);
        Ok(())
    }

    /// The total map, if the domain is exactly `0..n`.
    pub fn into_total(self, n: usize) -> Result<LatticeMap> {
        if let Some(missing) = (0..n).find(|v| !self.values.contains_key(v)) {
            return Err(Error::InvalidParameter(format!(
                "map has no value for vertex {missing}"
            )));
        }
        if let Some(&extra) = self.values.keys().find(|&&v| v >= n) {
            return Err(Error::UnknownVertex(extra));
        }
        LatticeMap::new(self.dim, self.values.into_values().collect())
    }
}

fn check_all_dims<'a>(dim: usize, mut values: impl Iterator<Item = &'a GridPoint>) -> Result<()> {
    match values.find(|p| p.dim() != dim) {
        Some(bad) => Err(Error::DimensionMismatch {
            expected: dim,
            found: bad.dim(),
        }),
        None => Ok(()),
    }
}

fn default_lip() -> u64 {
    1
}

/// On-disk form shared by total and partial maps:
/// `{"dim": k, "lip": 1, "values": {"<vid>": [ints]}, "tags": {"<vid>": int}}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MapFile {
    pub dim: usize,
    #[serde(default = "default_lip")]
    pub lip: u64,
    pub values: BTreeMap<VertexId, GridPoint>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tags: Option<BTreeMap<VertexId, i64>>,
    #[serde(rename = "box", default, skip_serializing_if = "Option::is_none")]
    pub codomain_box: Option<GridBox>,
}

impl From<LatticeMap> for MapFile {
    fn from(m: LatticeMap) -> Self {
        MapFile {
            dim: m.dim,
            lip: m.lip,
            values: m.values.into_iter().enumerate().collect(),
            tags: m.tags.map(|t| t.into_iter().enumerate().collect()),
            codomain_box: m.codomain_box,
        }
    }
}

impl TryFrom<MapFile> for LatticeMap {
    type Error = Error;

    fn try_from(f: MapFile) -> Result<Self> {
        let n = f.values.len();
        let mut map = PartialMap::new(f.dim, f.values)?
            .into_total(n)?
            .with_lip(f.lip);
        if let Some(tags) = f.tags {
            if tags.len() != n || tags.keys().any(|&v| v >= n) {
                return Err(Error::InvalidParameter(
                    "tags must cover exactly the map's vertices".into(),
                ));
            }
            map = map.with_tags(tags.into_values().collect())?;
        }
        if let Some(bx) = f.codomain_box {
            map = map.with_box(bx)?;
        }
        Ok(map)
    }
}

impl From<PartialMap> for MapFile {
    fn from(m: PartialMap) -> Self {
        MapFile {
            dim: m.dim,
            lip: 1,
            values: m.values,
            tags: None,
            codomain_box: None,
        }
    }
}

impl TryFrom<MapFile> for PartialMap {
    type Error = Error;

    fn try_from(f: MapFile) -> Result<Self> {
        PartialMap::new(f.dim, f.values)
    }
}
