//! Displacement cocycles of lattice maps.
//!
//! For a map `f` into `Z^k`, `delta(u, v) = f(v) - f(u)` on pairs in the same
//! component. It is stored as one offset per vertex relative to the first
//! vertex of its component, so identity and additivity hold by
//! construction; [`verify_cocycle`] checks them for any table implementing
//! [`Displacements`].

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{group_by_label, FiniteGraph, VertexId};
use crate::grid::GridPoint;
use crate::lipschitz::{is_valid_embedding, Check, LatticeMap};
use crate::rng::XorShift64Star;

/// Exhaustive verification up to this many vertices, sampling beyond.
pub const EXHAUSTIVE_LIMIT: usize = 200;

/// A displacement table on the connectedness relation of a graph.
pub trait Displacements {
    fn dim(&self) -> usize;
    fn vertex_count(&self) -> usize;
    /// Class label; pairs with equal labels have a displacement.
    fn class(&self, v: VertexId) -> usize;
    fn delta(&self, u: VertexId, v: VertexId) -> Option<GridPoint>;
}

#[derive(Clone, Debug, Serialize)]
pub struct Cocycle {
    pub dim: usize,
    pub labels: Vec<usize>,
    pub offsets: Vec<GridPoint>,
    /// `E_delta` is trivial iff no two distinct vertices of one component
    /// have zero displacement, i.e. `f` is injective on components.
    pub kernel_trivial: Check,
}

impl Displacements for Cocycle {
    fn dim(&self) -> usize {
        self.dim
    }

    fn vertex_count(&self) -> usize {
        self.offsets.len()
    }

    fn class(&self, v: VertexId) -> usize {
        self.labels[v]
    }

    fn delta(&self, u: VertexId, v: VertexId) -> Option<GridPoint> {
        if self.labels[u] != self.labels[v] {
            return None;
        }
        self.offsets[v].checked_sub(&self.offsets[u]).ok()
    }
}

pub fn extract_cocycle(g: &FiniteGraph, f: &LatticeMap) -> Result<Cocycle> {
    if f.len() != g.n() {
        return Err(Error::GraphMismatch {
            left: g.n(),
            right: f.len(),
        });
    }
    let labels = g.components();
    let sets = group_by_label(&labels);
    let mut offsets = vec![GridPoint::default(); g.n()];
    let mut witness: Option<(VertexId, VertexId)> = None;
    for comp in &sets {
        let root = f.value(comp[0]);
        let mut first: HashMap<GridPoint, VertexId> = HashMap::new();
        for &v in comp {
            let off = f.value(v).checked_sub(root)?;
            if let Some(&u) = first.get(&off) {
                witness = witness.min(Some((u, v))).or(Some((u, v)));
            } else {
                first.insert(off.clone(), v);
            }
            offsets[v] = off;
        }
    }
    Ok(Cocycle {
        dim: f.dim(),
        labels,
        offsets,
        kernel_trivial: Check {
            holds: witness.is_none(),
            witness,
        },
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CocycleCheck {
    pub holds: bool,
    /// `(u, u, u)` for an identity failure, `(u, v, w)` for additivity.
    pub witness: Option<(VertexId, VertexId, VertexId)>,
    pub exhaustive: bool,
}

/// Checks `delta(u, u) = 0` and `delta(u, v) + delta(v, w) = delta(u, w)`
/// within every class: on all triples up to [`EXHAUSTIVE_LIMIT`] vertices,
/// otherwise on `samples` seeded random triples.
pub fn verify_cocycle<D: Displacements + ?Sized>(c: &D, samples: usize, seed: u64) -> CocycleCheck {
    let n = c.vertex_count();
    let zero = GridPoint::origin(c.dim());
    let fail = |w, exhaustive| CocycleCheck {
        holds: false,
        witness: Some(w),
        exhaustive,
    };
    if let Some(u) = (0..n).find(|&u| c.delta(u, u).as_ref() != Some(&zero)) {
        return fail((u, u, u), n <= EXHAUSTIVE_LIMIT);
    }
    let additive = |u, v, w| -> bool {
        match (c.delta(u, v), c.delta(v, w), c.delta(u, w)) {
            (Some(a), Some(b), Some(ab)) => a.checked_add(&b).ok().as_ref() == Some(&ab),
            _ => false,
        }
    };
    let labels: Vec<usize> = (0..n).map(|v| c.class(v)).collect();
    let classes = group_by_label(&labels);
    if n <= EXHAUSTIVE_LIMIT {
        for class in &classes {
            for &u in class {
                for &v in class {
                    for &w in class {
                        if !additive(u, v, w) {
                            return fail((u, v, w), true);
                        }
                    }
                }
            }
        }
    } else {
        let mut rng = XorShift64Star::new(seed);
        let pick = |rng: &mut XorShift64Star, class: &[VertexId]| {
            class[rng.below(class.len() as u64) as usize]
        };
        for _ in 0..samples {
            let u = rng.below(n as u64) as usize;
            let class = &classes[labels[u]];
            let v = pick(&mut rng, class);
            let w = pick(&mut rng, class);
            if !additive(u, v, w) {
                return fail((u, v, w), false);
            }
        }
    }
    CocycleCheck {
        holds: true,
        witness: None,
        exhaustive: n <= EXHAUSTIVE_LIMIT,
    }
}

/// Tags each vertex of a verified embedding with its component, so vertices
/// of different components land in different copies of the grid.
pub fn strong_embedding(g: &FiniteGraph, f: &LatticeMap) -> Result<LatticeMap> {
    let check = is_valid_embedding(g, f)?;
    if let Some((u, v)) = check.witness {
        return Err(Error::InvalidEmbedding(format!("vertices {u} and {v}")));
    }
    let tags = g.components().into_iter().map(|c| c as i64).collect();
    f.clone().with_tags(tags)
}
