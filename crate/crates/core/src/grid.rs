//! Geometry of `Z^k` under the max-norm.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A point of `Z^k`. Serialised as a plain JSON array of integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GridPoint(pub Vec<i64>);

impl GridPoint {
    pub fn new(coords: Vec<i64>) -> Self {
        Self(coords)
    }

    pub fn origin(dim: usize) -> Self {
        Self(vec![0; dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    /// Concatenation `(self, other)`.
    pub fn concat(&self, other: &GridPoint) -> GridPoint {
        let mut v = Vec::with_capacity(self.dim() + other.dim());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        GridPoint(v)
    }

    pub fn checked_add(&self, other: &GridPoint) -> Result<GridPoint> {
        check_dims(self, other)?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| {
                a.checked_add(*b)
                    .ok_or_else(|| Error::InvalidParameter("coordinate overflow".into()))
            })
            .collect::<Result<Vec<_>>>()
            .map(GridPoint)
    }

    pub fn checked_sub(&self, other: &GridPoint) -> Result<GridPoint> {
        check_dims(self, other)?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| {
                a.checked_sub(*b)
                    .ok_or_else(|| Error::InvalidParameter("coordinate overflow".into()))
            })
            .collect::<Result<Vec<_>>>()
            .map(GridPoint)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl From<Vec<i64>> for GridPoint {
    fn from(v: Vec<i64>) -> Self {
        Self(v)
    }
}

impl fmt::Display for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

fn check_dims(p: &GridPoint, q: &GridPoint) -> Result<()> {
    if p.dim() != q.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            found: q.dim(),
        });
    }
    Ok(())
}

/// `max_i |p_i - q_i|`, computed without overflow. Callers must pass points
/// of equal dimension.
pub(crate) fn linf(p: &[i64], q: &[i64]) -> u64 {
    debug_assert_eq!(p.len(), q.len());
    p.iter()
        .zip(q)
        .map(|(a, b)| a.abs_diff(*b))
        .max()
        .unwrap_or(0)
}

pub fn linf_distance(p: &GridPoint, q: &GridPoint) -> Result<u64> {
    check_dims(p, q)?;
    Ok(linf(&p.0, &q.0))
}

/// Adjacency in the grid with diagonals: max-norm distance exactly one.
pub fn is_grid_edge(p: &GridPoint, q: &GridPoint) -> Result<bool> {
    Ok(linf_distance(p, q)? == 1)
}

/// A product of closed integer intervals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridBox {
    bounds: Vec<(i64, i64)>,
}

/// `lo..hi[,lo..hi...]`, one range per axis.
impl FromStr for GridBox {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        crate::graph::generate::parse_box(s)
    }
}

impl GridBox {
    pub fn new(bounds: Vec<(i64, i64)>) -> Result<Self> {
        if bounds.iter().any(|&(lo, hi)| lo > hi) {
            return Err(Error::EmptyBox);
        }
        Ok(Self { bounds })
    }

    /// `{0, ..., side}^dim`.
    pub fn cube(dim: usize, side: i64) -> Result<Self> {
        Self::new(vec![(0, side); dim])
    }

    /// `[lo, hi]^dim`.
    pub fn symmetric(dim: usize, lo: i64, hi: i64) -> Result<Self> {
        Self::new(vec![(lo, hi); dim])
    }

    pub fn dim(&self) -> usize {
        self.bounds.len()
    }

    pub fn bounds(&self) -> &[(i64, i64)] {
        &self.bounds
    }

    pub fn contains(&self, p: &GridPoint) -> Result<bool> {
        if p.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: p.dim(),
            });
        }
        Ok(self
            .bounds
            .iter()
            .zip(&p.0)
            .all(|(&(lo, hi), &c)| lo <= c && c <= hi))
    }

    pub fn len(&self) -> u128 {
        self.bounds
            .iter()
            .map(|&(lo, hi)| (hi as i128 - lo as i128 + 1) as u128)
            .product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Max-norm diameter of the box.
    pub fn diameter(&self) -> u64 {
        self.bounds
            .iter()
            .map(|&(lo, hi)| hi.abs_diff(lo))
            .max()
            .unwrap_or(0)
    }

    /// All points in lexicographic order.
    pub fn points(&self) -> BoxPoints<'_> {
        BoxPoints {
            bounds: &self.bounds,
            next: Some(self.bounds.iter().map(|&(lo, _)| lo).collect()),
        }
    }
}

pub struct BoxPoints<'a> {
    bounds: &'a [(i64, i64)],
    next: Option<Vec<i64>>,
}

impl Iterator for BoxPoints<'_> {
    type Item = GridPoint;

    fn next(&mut self) -> Option<GridPoint> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut axis = succ.len();
        loop {
            if axis == 0 {
                break;
            }
            axis -= 1;
            if succ[axis] < self.bounds[axis].1 {
                succ[axis] += 1;
                self.next = Some(succ);
                break;
            }
            succ[axis] = self.bounds[axis].0;
        }
        Some(GridPoint(current))
    }
}
