//! The fold map `Z^d -> {0..R}^{2d}`.
//!
//! In one dimension, `k` goes to vertex `k mod 4R` of the boundary cycle of
//! the square with corners `(0,0), (R,0), (R,R), (0,R)`, walked from `(0,0)`
//! in the `+x` direction first. Higher dimensions apply this per coordinate
//! and concatenate. The result is 1-Lipschitz and `(4R-1)`-locally injective
//! for the max-norm, and `4R`-periodic along every axis.

use crate::error::{Error, Result};
use crate::grid::{GridBox, GridPoint};

/// Largest radius whose period `4R` fits in an `i64`.
const MAX_RADIUS: u64 = (i64::MAX / 4) as u64;

/// One-dimensional fold of `k` at radius `radius >= 1`.
pub fn fold_point(k: i64, radius: u64) -> (i64, i64) {
    debug_assert!((1..=MAX_RADIUS).contains(&radius));
    let r = radius as i64;
    let j = k.rem_euclid(4 * r);
    if j <= r {
        (j, 0)
    } else if j <= 2 * r {
        (r, j - r)
    } else if j <= 3 * r {
        (3 * r - j, r)
    } else {
        (0, 4 * r - j)
    }
}

/// Fold of a `d`-dimensional point into `I_R^{2d}`.
pub fn fold_map(radius: u64, p: &GridPoint) -> Result<GridPoint> {
    if !(1..=MAX_RADIUS).contains(&radius) {
        return Err(Error::InvalidParameter(format!(
            "fold radius {radius} out of range"
        )));
    }
    let mut out = Vec::with_capacity(2 * p.dim());
    for &c in p.coords() {
        let (x, y) = fold_point(c, radius);
        out.push(x);
        out.push(y);
    }
    Ok(GridPoint(out))
}

/// The codomain box `{0..R}^{2d}`.
pub fn fold_box(dim: usize, radius: u64) -> GridBox {
    GridBox::cube(2 * dim, radius as i64).expect("nonempty cube")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::linf;

    /// Boundary walk built by stepping, independent of the closed form.
    fn walk(r: i64) -> Vec<(i64, i64)> {
        let mut pts = vec![(0, 0)];
        let mut cur = (0, 0);
        for (dx, dy) in [(1, 0), (0, 1), (-1, 0), (0, -1)] {
            for _ in 0..r {
                cur = (cur.0 + dx, cur.1 + dy);
                pts.push(cur);
            }
        }
        assert_eq!(pts.pop(), Some((0, 0)));
        pts
    }

    #[test]
    fn matches_stepped_walk() {
        for r in 1..8 {
            let w = walk(r);
            assert_eq!(w.len(), 4 * r as usize);
            for k in -40i64..40 {
                let idx = k.rem_euclid(4 * r) as usize;
                assert_eq!(fold_point(k, r as u64), w[idx], "r={r} k={k}");
            }
        }
    }

    #[test]
    fn examples() {
        assert_eq!(
            walk(2),
            vec![
                (0, 0),
                (1, 0),
                (2, 0),
                (2, 1),
                (2, 2),
                (1, 2),
                (0, 2),
                (0, 1)
            ]
        );
        let f = |v: &[i64]| fold_map(2, &GridPoint(v.to_vec())).unwrap().0;
        assert_eq!(f(&[0]), vec![0, 0]);
        assert_eq!(f(&[3]), vec![2, 1]);
        assert_eq!(f(&[-1]), vec![0, 1]);
        assert_eq!(f(&[3, -1]), vec![2, 1, 0, 1]);
        assert_eq!(f(&[]), Vec::<i64>::new());
        assert!(fold_map(0, &GridPoint(vec![1])).is_err());
    }

    #[test]
    fn lands_in_box() {
        for r in 1..5u64 {
            let bx = fold_box(2, r);
            for a in -10..10 {
                for b in -10..10 {
                    assert!(bx
                        .contains(&fold_map(r, &GridPoint(vec![a, b])).unwrap())
                        .unwrap());
                }
            }
        }
    }

    #[test]
    fn one_dimensional_properties() {
        for r in 1..6u64 {
            let span = 4 * r as i64;
            for a in -2 * span..2 * span {
                let fa = fold_point(a, r);
                assert_eq!(fold_point(a + span, r), fa);
                for b in a + 1..a + span {
                    let fb = fold_point(b, r);
                    assert_ne!(fa, fb, "collision at {a},{b} for R={r}");
                    let d = linf(&[fa.0, fa.1], &[fb.0, fb.1]);
                    assert!(d <= (b - a) as u64);
                }
            }
        }
    }
}
