use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use super::{FiniteGraph, VertexId};
use crate::error::{Error, Result};
use crate::grid::{linf, GridBox, GridPoint};
use crate::rng::XorShift64Star;

/// Largest box a chunk generator will materialise.
const MAX_CHUNK_POINTS: u128 = 20_000_000;

#[derive(Clone, Debug, PartialEq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Clique(usize),
    /// `n` vertices in total: centre 0 and leaves `1..n`.
    Star(usize),
    /// The grid with diagonals restricted to a box; carries coordinates.
    Chunk(GridBox),
    /// Each box point kept independently with probability `p`.
    RandomInduced {
        bx: GridBox,
        p: f64,
        seed: u64,
    },
}

pub fn generate_graph(family: &Family) -> Result<FiniteGraph> {
    let need_vertex = |n: usize| {
        if n == 0 {
            Err(Error::InvalidParameter(
                "family needs at least one vertex".into(),
            ))
        } else {
            Ok(())
        }
    };
    match family {
        Family::Path(n) => {
            need_vertex(*n)?;
            FiniteGraph::new(*n, (1..*n).map(|i| (i - 1, i)), None)
        }
        Family::Cycle(n) => {
            if *n < 3 {
                return Err(Error::InvalidParameter(
                    "cycle needs at least 3 vertices".into(),
                ));
            }
            FiniteGraph::new(*n, (0..*n).map(|i| (i, (i + 1) % n)), None)
        }
        Family::Clique(n) => {
            need_vertex(*n)?;
            let n = *n;
            FiniteGraph::new(
                n,
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))),
                None,
            )
        }
        Family::Star(n) => {
            need_vertex(*n)?;
            FiniteGraph::new(*n, (1..*n).map(|i| (0, i)), None)
        }
        Family::Chunk(bx) => {
            check_size(bx)?;
            grid_graph(bx.points().collect())
        }
        Family::RandomInduced { bx, p, seed } => {
            if !(*p > 0.0 && *p <= 1.0) {
                return Err(Error::InvalidParameter(format!(
                    "keep probability {p} outside (0, 1]"
                )));
            }
            check_size(bx)?;
            let mut rng = XorShift64Star::new(*seed);
            let kept = bx.points().filter(|_| rng.chance(*p)).collect();
            grid_graph(kept)
        }
    }
}

fn check_size(bx: &GridBox) -> Result<()> {
    if bx.len() > MAX_CHUNK_POINTS {
        return Err(Error::InvalidParameter(format!(
            "box has {} points, limit is {MAX_CHUNK_POINTS}",
            bx.len()
        )));
    }
    Ok(())
}

/// Induced subgraph of the grid with diagonals on `points`, vertex `i` at
/// `points[i]`.
pub(crate) fn grid_graph(points: Vec<GridPoint>) -> Result<FiniteGraph> {
    let edges = diagonal_adjacency(&points)?;
    FiniteGraph::new(points.len(), edges, Some(points))
}

/// All pairs `(i, j)`, `i < j`, at max-norm distance one.
pub(crate) fn diagonal_adjacency(points: &[GridPoint]) -> Result<Vec<(VertexId, VertexId)>> {
    let dim = points.first().map_or(0, GridPoint::dim);
    if let Some(bad) = points.iter().find(|p| p.dim() != dim) {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: bad.dim(),
        });
    }
    let mut edges = Vec::new();
    let offsets_needed = 3f64.powi(dim as i32);
    if offsets_needed > points.len() as f64 {
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                if linf(&points[i].0, &points[j].0) == 1 {
                    edges.push((i, j));
                }
            }
        }
        return Ok(edges);
    }
    let index: HashMap<&[i64], VertexId> = points
        .iter()
        .enumerate()
        .map(|(i, p)| (p.0.as_slice(), i))
        .collect();
    let offsets = unit_offsets(dim);
    let mut probe = vec![0i64; dim];
    for (i, p) in points.iter().enumerate() {
        for off in &offsets {
            let mut overflow = false;
            for a in 0..dim {
                match p.0[a].checked_add(off[a]) {
                    Some(c) => probe[a] = c,
                    None => overflow = true,
                }
            }
            if overflow {
                continue;
            }
            if let Some(&j) = index.get(probe.as_slice()) {
                if i < j {
                    edges.push((i, j));
                }
            }
        }
    }
    edges.sort_unstable();
    Ok(edges)
}

/// `{-1,0,1}^dim` minus the origin, lexicographic.
pub(crate) fn unit_offsets(dim: usize) -> Vec<Vec<i64>> {
    let cube = GridBox::symmetric(dim, -1, 1).expect("nonempty");
    cube.points()
        .filter(|p| !p.is_zero())
        .map(|p| p.0)
        .collect()
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn box_str(bx: &GridBox) -> String {
            bx.bounds()
                .iter()
                .map(|(lo, hi)| format!("{lo}..{hi}"))
                .collect::<Vec<_>>()
                .join(",")
        }
        match self {
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Clique(n) => write!(f, "clique:{n}"),
            Family::Star(n) => write!(f, "star:{n}"),
            Family::Chunk(bx) => write!(f, "chunk:{}", box_str(bx)),
            Family::RandomInduced { bx, p, seed } => write!(f, "random:{}:{p}:{seed}", box_str(bx)),
        }
    }
}

/// Parses `lo..hi,lo..hi,...` into a box.
pub(crate) fn parse_box(s: &str) -> Result<GridBox> {
    let bad = || Error::InvalidParameter(format!("bad box '{s}', expected lo..hi[,lo..hi...]"));
    let mut bounds = Vec::new();
    for part in s.split(',') {
        let (lo, hi) = part.trim().split_once("..").ok_or_else(bad)?;
        let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
        let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
        bounds.push((lo, hi));
    }
    GridBox::new(bounds)
}

impl FromStr for Family {
    type Err = Error;

    /// `path:N`, `cycle:N`, `clique:N`, `star:N`, `chunk:BOX`,
    /// `random:BOX:P:SEED` where `BOX` is `lo..hi,lo..hi,...`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("unknown graph family '{s}'"));
        let (kind, rest) = s.split_once(':').ok_or_else(bad)?;
        let count = || rest.trim().parse::<usize>().map_err(|_| bad());
        match kind.trim() {
            "path" => Ok(Family::Path(count()?)),
            "cycle" => Ok(Family::Cycle(count()?)),
            "clique" => Ok(Family::Clique(count()?)),
            "star" => Ok(Family::Star(count()?)),
            "chunk" => Ok(Family::Chunk(parse_box(rest)?)),
            "random" => {
                let parts: Vec<_> = rest.split(':').collect();
                if parts.len() != 3 {
                    return Err(bad());
                }
                Ok(Family::RandomInduced {
                    bx: parse_box(parts[0])?,
                    p: parts[1].trim().parse().map_err(|_| bad())?,
                    seed: parts[2].trim().parse().map_err(|_| bad())?,
                })
            }
            _ => Err(bad()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_edge_count(bx: &GridBox) -> usize {
        let pts: Vec<_> = bx.points().collect();
        let mut count = 0;
        for i in 0..pts.len() {
            for j in i + 1..pts.len() {
                if linf(&pts[i].0, &pts[j].0) == 1 {
                    count += 1;
                }
            }
        }
        count
    }

    #[test]
    fn small_families() {
        let p1 = generate_graph(&Family::Path(1)).unwrap();
        assert_eq!((p1.n(), p1.edge_count()), (1, 0));
        let c5 = generate_graph(&Family::Cycle(5)).unwrap();
        assert_eq!((c5.n(), c5.edge_count()), (5, 5));
        let k5 = generate_graph(&Family::Clique(5)).unwrap();
        assert_eq!(k5.edge_count(), 10);
        let s4 = generate_graph(&Family::Star(4)).unwrap();
        assert_eq!(s4.neighbors(0), &[1, 2, 3]);
        assert!(generate_graph(&Family::Path(0)).is_err());
        assert!(generate_graph(&Family::Cycle(2)).is_err());
    }

    #[test]
    fn chunk_counts_match_enumeration() {
        let unit = GridBox::cube(2, 1).unwrap();
        let g = generate_graph(&Family::Chunk(unit.clone())).unwrap();
        assert_eq!((g.n(), g.edge_count()), (4, 6));
        assert_eq!(brute_edge_count(&unit), 6);

        let three = GridBox::cube(2, 2).unwrap();
        let g = generate_graph(&Family::Chunk(three.clone())).unwrap();
        assert_eq!((g.n(), g.edge_count()), (9, 20));
        assert_eq!(brute_edge_count(&three), 20);

        for bx in [
            GridBox::new(vec![(-2, 3), (0, 4), (1, 2)]).unwrap(),
            GridBox::new(vec![(0, 6)]).unwrap(),
        ] {
            let g = generate_graph(&Family::Chunk(bx.clone())).unwrap();
            assert_eq!(g.edge_count(), brute_edge_count(&bx));
        }
    }

    #[test]
    fn random_induced_is_seeded() {
        let bx = GridBox::cube(2, 10).unwrap();
        let fam = |seed| Family::RandomInduced {
            bx: bx.clone(),
            p: 0.5,
            seed,
        };
        let a = generate_graph(&fam(3)).unwrap();
        let b = generate_graph(&fam(3)).unwrap();
        let c = generate_graph(&fam(4)).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
        let full = generate_graph(&Family::RandomInduced {
            bx: bx.clone(),
            p: 1.0,
            seed: 1,
        })
        .unwrap();
        assert_eq!(full, generate_graph(&Family::Chunk(bx.clone())).unwrap());
        assert!(generate_graph(&Family::RandomInduced {
            bx,
            p: 0.0,
            seed: 1
        })
        .is_err());
    }

    #[test]
    fn family_strings_round_trip() {
        for s in [
            "path:5",
            "cycle:6",
            "clique:3",
            "star:4",
            "chunk:0..5",
            "chunk:-1..2,0..3",
            "random:0..20,0..20:0.7:42",
        ] {
            let fam: Family = s.parse().unwrap();
            assert_eq!(fam.to_string(), s);
        }
        assert!("cube:3".parse::<Family>().is_err());
        assert!(matches!(
            "chunk:3..1".parse::<Family>(),
            Err(Error::EmptyBox)
        ));
    }
}
