//! Text formats.
//!
//! Edge lists: one `u v` pair of decimal ids per line, or a single `u` to
//! declare an isolated vertex. The vertex set is `0..=max id`.
//!
//! Coordinate files: `v <id> <c1> ... <ca>` lines giving every vertex a
//! point of `Z^a`, plus optional `e <id> <id>` lines. With `auto_edges`
//! every pair of listed points at max-norm distance one is joined.
//!
//! In both formats `#` starts a comment and blank lines are ignored.

use std::collections::BTreeSet;
use std::path::Path;

use super::generate::diagonal_adjacency;
use super::{FiniteGraph, VertexId};
use crate::error::{Error, Result};
use crate::grid::GridPoint;

pub fn load_graph(path: impl AsRef<Path>, auto_edges: bool) -> Result<FiniteGraph> {
    let text = std::fs::read_to_string(path)?;
    parse_graph(&text, auto_edges)
}

fn significant_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = line.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

pub fn parse_graph(text: &str, auto_edges: bool) -> Result<FiniteGraph> {
    let is_coordinate_file = significant_lines(text)
        .next()
        .is_some_and(|(_, t)| t[0] == "v" || t[0] == "e");
    if is_coordinate_file {
        parse_coordinates(text, auto_edges)
    } else {
        parse_edge_list(text)
    }
}

fn parse_id(token: &str, line: usize) -> Result<VertexId> {
    token.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("expected vertex id, found '{token}'"),
    })
}

fn parse_edge_list(text: &str) -> Result<FiniteGraph> {
    let mut n = 0;
    let mut edges = Vec::new();
    let mut seen = BTreeSet::new();
    for (line, tokens) in significant_lines(text) {
        match tokens.as_slice() {
            [u] => {
                let u = parse_id(u, line)?;
                n = n.max(u + 1);
            }
            [u, v] => {
                let (u, v) = (parse_id(u, line)?, parse_id(v, line)?);
                if u == v {
                    return Err(Error::SelfLoop(u));
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
                }
                n = n.max(u.max(v) + 1);
                edges.push((u, v));
            }
            _ => {
                return Err(Error::Parse {
                    line,
                    msg: format!("expected 'u v', found {} tokens", tokens.len()),
                })
            }
        }
    }
    FiniteGraph::new(n, edges, None)
}

fn parse_coordinates(text: &str, auto_edges: bool) -> Result<FiniteGraph> {
    let mut points: Vec<Option<GridPoint>> = Vec::new();
    let mut explicit = Vec::new();
    let mut dim = None;
    for (line, tokens) in significant_lines(text) {
        match tokens[0] {
            "v" => {
                if tokens.len() < 2 {
                    return Err(Error::Parse {
                        line,
                        msg: "missing vertex id".into(),
                    });
                }
                let id = parse_id(tokens[1], line)?;
                let coords = tokens[2..]
                    .iter()
                    .map(|t| {
                        t.parse::<i64>().map_err(|_| Error::Parse {
                            line,
                            msg: format!("expected integer coordinate, found '{t}'"),
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                match dim {
                    None => dim = Some(coords.len()),
                    Some(a) if a != coords.len() => {
                        return Err(Error::DimensionMismatch {
                            expected: a,
                            found: coords.len(),
                        })
                    }
                    _ => {}
                }
                if points.len() <= id {
                    points.resize(id + 1, None);
                }
                if points[id].is_some() {
                    return Err(Error::Parse {
                        line,
                        msg: format!("vertex {id} listed twice"),
                    });
                }
                points[id] = Some(GridPoint(coords));
            }
            "e" => {
                if tokens.len() != 3 {
                    return Err(Error::Parse {
                        line,
                        msg: "expected 'e u v'".into(),
                    });
                }
                explicit.push((line, parse_id(tokens[1], line)?, parse_id(tokens[2], line)?));
            }
            other => {
                return Err(Error::Parse {
                    line,
                    msg: format!("expected 'v' or 'e' record, found '{other}'"),
                })
            }
        }
    }
    let n = points.len();
    let points: Vec<GridPoint> = points
        .into_iter()
        .enumerate()
        .map(|(id, p)| {
            p.ok_or_else(|| Error::Parse {
                line: 0,
                msg: format!("vertex {id} has no 'v' record"),
            })
        })
        .collect::<Result<_>>()?;

    let mut edges = BTreeSet::new();
    for (line, u, v) in explicit {
        if u >= n || v >= n {
            return Err(Error::Parse {
                line,
                msg: format!("edge {u}-{v} names an unlisted vertex"),
            });
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if !edges.insert((u.min(v), u.max(v))) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
    }
    if auto_edges {
        edges.extend(diagonal_adjacency(&points)?);
    }
    FiniteGraph::new(n, edges, Some(points))
}
