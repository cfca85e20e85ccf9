use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{FiniteGraph, VertexId};
use crate::grid::{GridBox, GridPoint};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChartEntry {
    pub offset: GridPoint,
    pub vertex: Option<VertexId>,
}

/// The translation pattern around `v`: for each offset `k` in the window,
/// the vertex sitting at `coords(v) + k`, if any. Entries are in
/// lexicographic order of `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShiftChart {
    pub vertex: VertexId,
    pub window: GridBox,
    pub entries: Vec<ChartEntry>,
}

pub fn shift_chart(g: &FiniteGraph, v: VertexId, window: &GridBox) -> Result<ShiftChart> {
    g.check_vertex(v)?;
    let lookup = g.vertex_at().ok_or(Error::MissingCoords)?;
    let base = g.coord(v).expect("coords present");
    if window.dim() != base.dim() {
        return Err(Error::DimensionMismatch {
            expected: base.dim(),
            found: window.dim(),
        });
    }
    let entries = window
        .points()
        .map(|k| {
            let at = base.checked_add(&k)?;
            Ok(ChartEntry {
                vertex: lookup.get(&at).copied(),
                offset: k,
            })
        })
        .collect::<Result<_>>()?;
    Ok(ShiftChart {
        vertex: v,
        window: window.clone(),
        entries,
    })
}
