//! Property verifiers.
//!
//! Every verifier reports the lexicographically smallest violating pair
//! `(u, v)` with `u < v`, independent of how the scan is scheduled.

use rayon::prelude::*;
use serde::Serialize;

use super::{LatticeMap, PartialMap};
use crate::error::{Error, Result};
use crate::graph::{FiniteGraph, VertexId, UNREACHABLE};
use crate::grid::{linf, GridPoint};

/// Relative slack granted to the verified side when comparing against
/// `dist^(1 - eps)` in floating point.
const LOWER_BOUND_GUARD: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub holds: bool,
    pub witness: Option<(VertexId, VertexId)>,
}

impl Check {
    fn from_witness(witness: Option<(VertexId, VertexId)>) -> Self {
        Self {
            holds: witness.is_none(),
            witness,
        }
    }
}

fn check_len(g: &FiniteGraph, m: &LatticeMap) -> Result<()> {
    if m.len() != g.n() {
        return Err(Error::GraphMismatch {
            left: g.n(),
            right: m.len(),
        });
    }
    Ok(())
}

fn check_domain(g: &FiniteGraph, m: &PartialMap) -> Result<()> {
    match m.domain().find(|&v| v >= g.n()) {
        Some(v) => Err(Error::UnknownVertex(v)),
        None => Ok(()),
    }
}

/// Smallest `(u, v)` over `u` in `domain` (ascending) of `first_bad(u)`.
fn first_violation<F>(domain: &[VertexId], first_bad: F) -> Option<(VertexId, VertexId)>
where
    F: Fn(VertexId) -> Option<VertexId> + Sync,
{
    domain
        .par_iter()
        .find_map_first(|&u| first_bad(u).map(|v| (u, v)))
}

/// `||m(u) - m(v)|| <= k * dist(u, v)` for all same-component pairs.
///
/// The metric is a path metric, so the property holds iff it holds on every
/// edge; the all-pairs scan runs only to locate the smallest witness.
pub fn is_k_lipschitz(g: &FiniteGraph, m: &LatticeMap, k: u64) -> Result<Check> {
    check_len(g, m)?;
    let edge_ok = g
        .edges()
        .collect::<Vec<_>>()
        .par_iter()
        .all(|&(u, v)| linf(&m.value(u).0, &m.value(v).0) <= k);
    if edge_ok {
        return Ok(Check::from_witness(None));
    }
    let domain: Vec<_> = (0..g.n()).collect();
    Ok(Check::from_witness(lipschitz_scan(
        g,
        &domain,
        |v| Some(m.value(v)),
        k,
    )))
}

/// Lipschitz check for `dist_G` restricted to the map's domain.
pub fn is_k_lipschitz_on(g: &FiniteGraph, m: &PartialMap, k: u64) -> Result<Check> {
    check_domain(g, m)?;
    let domain: Vec<_> = m.domain().collect();
    Ok(Check::from_witness(lipschitz_scan(
        g,
        &domain,
        |v| m.get(v),
        k,
    )))
}

fn lipschitz_scan<'a, F>(
    g: &FiniteGraph,
    domain: &[VertexId],
    value: F,
    k: u64,
) -> Option<(VertexId, VertexId)>
where
    F: Fn(VertexId) -> Option<&'a GridPoint> + Sync,
{
    first_violation(domain, |u| {
        let row = g.row(u);
        let pu = value(u)?;
        domain.iter().copied().filter(|&v| v > u).find(|&v| {
            let d = row[v];
            d != UNREACHABLE
                && value(v).is_some_and(|pv| linf(&pu.0, &pv.0) > k.saturating_mul(d as u64))
        })
    })
}

/// No pair with `0 < dist(u, v) <= R` shares a value.
pub fn is_r_locally_injective(g: &FiniteGraph, m: &LatticeMap, radius: usize) -> Result<Check> {
    check_len(g, m)?;
    let domain: Vec<_> = (0..g.n()).collect();
    Ok(Check::from_witness(injectivity_scan(
        g,
        &domain,
        |v| Some(m.value(v)),
        radius,
    )))
}

pub fn is_r_locally_injective_on(g: &FiniteGraph, m: &PartialMap, radius: usize) -> Result<Check> {
    check_domain(g, m)?;
    let domain: Vec<_> = m.domain().collect();
    Ok(Check::from_witness(injectivity_scan(
        g,
        &domain,
        |v| m.get(v),
        radius,
    )))
}

fn injectivity_scan<'a, F>(
    g: &FiniteGraph,
    domain: &[VertexId],
    value: F,
    radius: usize,
) -> Option<(VertexId, VertexId)>
where
    F: Fn(VertexId) -> Option<&'a GridPoint> + Sync,
{
    first_violation(domain, |u| {
        let pu = value(u)?;
        g.truncated_bfs(&[u], radius)
            .into_iter()
            .map(|(v, _)| v)
            .filter(|&v| v > u && value(v) == Some(pu))
            .min()
    })
}

/// Injective, and every edge lands at max-norm distance exactly one.
pub fn is_valid_embedding(g: &FiniteGraph, m: &LatticeMap) -> Result<Check> {
    check_len(g, m)?;
    let mut groups: std::collections::HashMap<&GridPoint, Vec<VertexId>> = Default::default();
    for (v, p) in m.values().iter().enumerate() {
        groups.entry(p).or_default().push(v);
    }
    let collision = groups
        .values()
        .filter(|vs| vs.len() > 1)
        .map(|vs| (vs[0], vs[1]))
        .min();
    let bad_edge = g
        .edges()
        .find(|&(u, v)| linf(&m.value(u).0, &m.value(v).0) != 1);
    let witness = match (collision, bad_edge) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, b) => a.or(b),
    };
    Ok(Check::from_witness(witness))
}

/// Distance-reduction bound: for every pair with `dist_G(u, v) >= r0`,
/// finite distances must satisfy `||m(u) - m(v)|| >= dist^(1 - eps)` and
/// infinite ones must carry different component tags.
pub fn check_distance_lower_bound(
    g: &FiniteGraph,
    m: &LatticeMap,
    eps: f64,
    r0: usize,
) -> Result<Check> {
    check_len(g, m)?;
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "epsilon {eps} outside (0, 1)"
        )));
    }
    let tags = m.tags();
    if tags.is_none() && !g.is_connected() {
        return Err(Error::MissingTags);
    }
    let exponent = 1.0 - eps;
    let domain: Vec<_> = (0..g.n()).collect();
    let witness = first_violation(&domain, |u| {
        let row = g.row(u);
        (u + 1..g.n()).find(|&v| match row[v] {
            UNREACHABLE => {
                let t = tags.expect("tags checked above");
                t[u] == t[v]
            }
            d if (d as usize) >= r0 => {
                let need = (d as f64).powf(exponent);
                let have = linf(&m.value(u).0, &m.value(v).0) as f64;
                have < need * (1.0 - LOWER_BOUND_GUARD)
            }
            _ => false,
        })
    });
    Ok(Check::from_witness(witness))
}
