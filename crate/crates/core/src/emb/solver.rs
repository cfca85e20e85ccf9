//! Exact search for embeddings into the grid with diagonals.
//!
//! Vertices of each component are placed in BFS order from a maximum-degree
//! root fixed at the origin. A vertex is only ever placed next to its BFS
//! parent, on a free point within max-norm distance `dist_F(u, w)` of every
//! placed `u` (embeddings are 1-Lipschitz, and for neighbours this pins the
//! distance to exactly one). The hyperoctahedral symmetry of `Z^d` is broken
//! by requiring the second placed vertex to have nonnegative, nonincreasing
//! coordinates. Candidates are tried in lexicographic order, so the first
//! witness found is deterministic.

use std::collections::{HashSet, VecDeque};
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::Result;
use crate::graph::generate::unit_offsets;
use crate::graph::{FiniteGraph, VertexId};
use crate::grid::{linf, GridPoint};
use crate::lipschitz::{is_valid_embedding, LatticeMap};

const TIME_CHECK_INTERVAL: u64 = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_nodes: u64,
    pub time_limit: Duration,
}

impl Default for SearchLimits {
    fn default() -> Self {
        Self {
            max_nodes: 10_000_000,
            time_limit: Duration::from_secs(30),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub nodes: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Clone, Debug, PartialEq)]
pub enum SearchOutcome {
    Embedded(LatticeMap),
    NotEmbeddable,
    BudgetExceeded,
}

#[derive(Clone, Debug)]
pub struct EmbedSearch {
    pub outcome: SearchOutcome,
    pub stats: SearchStats,
}

struct Budget {
    limits: SearchLimits,
    start: Instant,
    nodes: u64,
}

impl Budget {
    /// Counts one node; `false` once a limit is hit.
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.limits.max_nodes {
            return false;
        }
        if self.nodes.is_multiple_of(TIME_CHECK_INTERVAL)
            && self.start.elapsed() > self.limits.time_limit
        {
            return false;
        }
        true
    }
}

enum Step {
    Found,
    Exhausted,
    OutOfBudget,
}

struct ComponentSearch<'a> {
    dim: usize,
    order: Vec<VertexId>,
    parent: Vec<usize>,
    /// `dist[t][s]` between `order[t]` and `order[s]`, for `s < t`.
    dist: Vec<Vec<u64>>,
    offsets: &'a [Vec<i64>],
    placed: Vec<Vec<i64>>,
    occupied: HashSet<Vec<i64>>,
}

impl<'a> ComponentSearch<'a> {
    fn new(g: &FiniteGraph, component: &[VertexId], dim: usize, offsets: &'a [Vec<i64>]) -> Self {
        let root = *component
            .iter()
            .max_by_key(|&&v| (g.degree(v), std::cmp::Reverse(v)))
            .expect("nonempty component");
        let mut order = vec![root];
        let mut parent = vec![usize::MAX];
        let mut position = std::collections::HashMap::from([(root, 0usize)]);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if let std::collections::hash_map::Entry::Vacant(slot) = position.entry(w) {
                    slot.insert(order.len());
                    parent.push(position[&u]);
                    order.push(w);
                    queue.push_back(w);
                }
            }
        }
        let dist = order
            .iter()
            .enumerate()
            .map(|(t, &w)| {
                order[..t]
                    .iter()
                    .map(|&u| g.dist_unchecked(w, u).expect("same component") as u64)
                    .collect()
            })
            .collect();
        Self {
            dim,
            order,
            parent,
            dist,
            offsets,
            placed: Vec::new(),
            occupied: HashSet::new(),
        }
    }

    fn run(&mut self, budget: &mut Budget) -> Step {
        let origin = vec![0; self.dim];
        self.occupied.insert(origin.clone());
        self.placed.push(origin);
        self.place(1, budget)
    }

    fn admissible(&self, t: usize, cand: &[i64]) -> bool {
        !self.occupied.contains(cand)
            && self.placed[..t]
                .iter()
                .zip(&self.dist[t])
                .all(|(p, &d)| linf(p, cand) <= d)
    }

    fn place(&mut self, t: usize, budget: &mut Budget) -> Step {
        if t == self.order.len() {
            return Step::Found;
        }
        let base = self.placed[self.parent[t]].clone();
        for off in self.offsets {
            if t == 1 && !(off.iter().all(|&c| c >= 0) && off.windows(2).all(|w| w[0] >= w[1])) {
                continue;
            }
            let cand: Vec<i64> = base.iter().zip(off).map(|(b, o)| b + o).collect();
            if !self.admissible(t, &cand) {
                continue;
            }
            if !budget.tick() {
                return Step::OutOfBudget;
            }
            self.occupied.insert(cand.clone());
            self.placed.push(cand);
            match self.place(t + 1, budget) {
                Step::Exhausted => {
                    let cand = self.placed.pop().expect("just pushed");
                    self.occupied.remove(&cand);
                }
                other => return other,
            }
        }
        Step::Exhausted
    }
}

/// Decides whether `g` embeds into the `d`-dimensional grid with diagonals.
///
/// Components are searched independently and laid out along axis 0 with
/// gaps wider than any component's diameter.
pub fn embeds_in_dim(g: &FiniteGraph, d: usize, limits: SearchLimits) -> EmbedSearch {
    let mut budget = Budget {
        limits,
        start: Instant::now(),
        nodes: 0,
    };
    let finish = |outcome, budget: &Budget| EmbedSearch {
        outcome,
        stats: SearchStats {
            nodes: budget.nodes,
            elapsed: budget.start.elapsed(),
        },
    };
    if d == 0 {
        let outcome = if g.n() <= 1 {
            SearchOutcome::Embedded(
                LatticeMap::new(0, vec![GridPoint::origin(0); g.n()]).expect("dim 0"),
            )
        } else {
            SearchOutcome::NotEmbeddable
        };
        return finish(outcome, &budget);
    }

    let offsets = unit_offsets(d);
    let components = g.component_sets();
    let gap = components
        .iter()
        .map(|c| c.iter().map(|&v| g.eccentricity(v)).max().unwrap_or(0))
        .max()
        .unwrap_or(0) as i64
        + 1;
    let mut values = vec![GridPoint::default(); g.n()];
    let mut shift = 0i64;
    for comp in &components {
        let mut search = ComponentSearch::new(g, comp, d, &offsets);
        match search.run(&mut budget) {
            Step::Found => {}
            Step::Exhausted => return finish(SearchOutcome::NotEmbeddable, &budget),
            Step::OutOfBudget => return finish(SearchOutcome::BudgetExceeded, &budget),
        }
        let lo = search.placed.iter().map(|p| p[0]).min().unwrap_or(0);
        let hi = search.placed.iter().map(|p| p[0]).max().unwrap_or(0);
        for (&v, mut p) in search.order.iter().zip(search.placed) {
            p[0] += shift - lo;
            values[v] = GridPoint(p);
        }
        shift += hi - lo + gap;
    }
    let witness = LatticeMap::new(d, values).expect("uniform dimension");
    debug_assert!(is_valid_embedding(g, &witness)
        .map(|c| c.holds)
        .unwrap_or(false));
    finish(SearchOutcome::Embedded(witness), &budget)
}

/// Result of the embedding-dimension search.
#[derive(Clone, Debug, Serialize)]
pub struct EmbeddingCertificate {
    pub d: usize,
    /// True when dimension `d - 1` was refuted exhaustively (or `d == 0`).
    pub minimal: bool,
    pub witness: LatticeMap,
    pub stats: CertificateStats,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct CertificateStats {
    pub nodes: u64,
    pub refuted: Vec<usize>,
    pub budget_exceeded: Vec<usize>,
    /// True when the witness is the `{0,1}^d` fallback rather than a search result.
    pub binary_fallback: bool,
    #[serde(skip)]
    pub elapsed: Duration,
}

fn ceil_log2(n: usize) -> usize {
    if n <= 1 {
        0
    } else {
        (usize::BITS - (n - 1).leading_zeros()) as usize
    }
}

/// Distinct vectors of `{0,1}^d` are pairwise at max-norm distance one, so
/// assigning them injectively embeds any graph on at most `2^d` vertices.
pub fn binary_embedding(g: &FiniteGraph) -> LatticeMap {
    let d = ceil_log2(g.n());
    let values = (0..g.n())
        .map(|v| GridPoint((0..d).rev().map(|b| ((v >> b) & 1) as i64).collect()))
        .collect();
    LatticeMap::new(d, values).expect("uniform dimension")
}

/// Least `d` such that `g` embeds into `Z^d` with diagonals, by increasing
/// `d` from zero. The search never needs to go past `ceil(log2 n)`, where
/// [`binary_embedding`] always succeeds.
pub fn embedding_dimension(g: &FiniteGraph, limits: SearchLimits) -> Result<EmbeddingCertificate> {
    let start = Instant::now();
    let upper = ceil_log2(g.n());
    let mut stats = CertificateStats::default();
    for d in 0..=upper {
        let search = embeds_in_dim(g, d, limits);
        stats.nodes += search.stats.nodes;
        match search.outcome {
            SearchOutcome::Embedded(witness) => {
                stats.elapsed = start.elapsed();
                return Ok(EmbeddingCertificate {
                    d,
                    minimal: d == 0 || stats.refuted.contains(&(d - 1)),
                    witness,
                    stats,
                });
            }
            SearchOutcome::NotEmbeddable => stats.refuted.push(d),
            SearchOutcome::BudgetExceeded => stats.budget_exceeded.push(d),
        }
    }
    // every search up to `upper` ran out of budget or was refuted
    stats.binary_fallback = true;
    stats.elapsed = start.elapsed();
    Ok(EmbeddingCertificate {
        d: upper,
        minimal: upper == 0 || stats.refuted.contains(&(upper - 1)),
        witness: binary_embedding(g),
        stats,
    })
}
