use serde::Serialize;

use super::FiniteGraph;

/// Exact ball-growth table of a finite graph.
///
/// `table[i] = (r, max_u |B(u, r)|)` for `r = 1..=diameter`, and `rho_stat`
/// is the least `rho` with `|B(u, r)| <= (r + 1)^rho` for every vertex and
/// every `r >= 1`. Radii beyond the diameter cannot raise the maximum since
/// balls stop growing there.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GrowthStats {
    pub table: Vec<(usize, usize)>,
    pub rho_stat: f64,
}

pub fn growth_stats(g: &FiniteGraph) -> GrowthStats {
    let diameter = g.diameter();
    let mut best = vec![0usize; diameter + 1];
    for u in 0..g.n() {
        // histogram of distances from u, accumulated into ball sizes
        let mut hist = vec![0usize; diameter + 1];
        for &d in g.row(u) {
            if d != super::UNREACHABLE {
                hist[d as usize] += 1;
            }
        }
        let mut size = 0;
        for (r, h) in hist.iter().enumerate() {
            size += h;
            best[r] = best[r].max(size);
        }
    }
    let table: Vec<_> = (1..=diameter).map(|r| (r, best[r])).collect();
    let rho_stat = table
        .iter()
        .map(|&(r, b)| (b as f64).ln() / ((r + 1) as f64).ln())
        .fold(0.0, f64::max);
    GrowthStats { table, rho_stat }
}
