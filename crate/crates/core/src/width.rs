//! Lattice width, width directions, strip position and the simplex size.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{
    canonical_direction, det, ext_gcd, is_primitive, AffineUnimodularMap, LatticePoint,
    LatticePolygon,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WidthCertificate {
    /// `-1` stands for the empty polygon.
    pub width: i64,
    /// One representative per `±` pair, canonical sign, sorted.
    pub directions: Vec<(i64, i64)>,
}

pub fn width_along(p: &LatticePolygon, v: (i64, i64)) -> Result<i64> {
    if !is_primitive(v) {
        return Err(Error::NonPrimitiveDirection(v.0, v.1));
    }
    Ok(p.spread(v))
}

/// Box bound on `‖v‖∞` for directions of spread at most `w`, from a vertex with
/// adjacent edges `e1, e2`: Cramer's rule on `(<v,e1>, <v,e2>)`.
fn direction_bound(p: &LatticePolygon, w: i64) -> i64 {
    let v = p.vertices();
    let n = v.len();
    let mut best: Option<(i64, i64)> = None; // (det, norm sum)
    for k in 0..n {
        let a = v[(k + n - 1) % n];
        let b = v[k];
        let c = v[(k + 1) % n];
        let e1 = (a.i - b.i, a.j - b.j);
        let e2 = (c.i - b.i, c.j - b.j);
        let d = det(e1, e2).abs();
        let s = e1.0.abs().max(e1.1.abs()) + e2.0.abs().max(e2.1.abs());
        // maximize d / s
        if best.is_none_or(|(bd, bs)| (d as i128) * (bs as i128) > (bd as i128) * (s as i128)) {
            best = Some((d, s));
        }
    }
    let (d, s) = best.unwrap();
    ((w as i128 * s as i128) / d as i128) as i64
}

/// Canonical primitive directions with spread at most `w` (two-dimensional input).
fn directions_up_to(p: &LatticePolygon, w: i64) -> Vec<((i64, i64), i64)> {
    let b = direction_bound(p, w);
    let mut out = Vec::new();
    for x in 0..=b {
        let lo = if x == 0 { 1 } else { -b };
        for y in lo..=b {
            if !is_primitive((x, y)) {
                continue;
            }
            let s = p.spread((x, y));
            if s <= w {
                out.push(((x, y), s));
            }
        }
    }
    out
}

pub fn lattice_width(p: &LatticePolygon) -> WidthCertificate {
    let v = p.vertices();
    match p.dimension() {
        0 => WidthCertificate { width: 0, directions: vec![] },
        1 => {
            let (dx, dy) = (v[1].i - v[0].i, v[1].j - v[0].j);
            let g = crate::lattice::gcd(dx, dy);
            WidthCertificate {
                width: 0,
                directions: vec![canonical_direction((-dy / g, dx / g))],
            }
        }
        _ => {
            let seed = p.spread((1, 0)).min(p.spread((0, 1)));
            let cands = directions_up_to(p, seed);
            let width = cands.iter().map(|c| c.1).min().unwrap();
            let mut directions: Vec<(i64, i64)> =
                cands.into_iter().filter(|c| c.1 == width).map(|c| c.0).collect();
            directions.sort_unstable();
            WidthCertificate { width, directions }
        }
    }
}

/// Width of an optional polygon, with the convention `lw(∅) = -1`.
pub fn lattice_width_opt(p: Option<&LatticePolygon>) -> i64 {
    p.map_or(-1, |p| lattice_width(p).width)
}

/// A map sending `<v,·>` to the second coordinate, with `p` in `0 <= j <= spread`
/// and the lowest row starting at `i = 0`.
pub fn normalize_to_strip(p: &LatticePolygon, v: (i64, i64)) -> Result<AffineUnimodularMap> {
    if !is_primitive(v) {
        return Err(Error::NonPrimitiveDirection(v.0, v.1));
    }
    // s*v.1 - t*v.0 = 1, so the matrix has determinant 1
    let (_, s, t) = ext_gcd(v.1, -v.0);
    let lin = AffineUnimodularMap::linear([[s, t], [v.0, v.1]])?;
    let img: Vec<LatticePoint> = p.vertices().iter().map(|&x| lin.apply(x)).collect();
    let jmin = img.iter().map(|q| q.j).min().unwrap();
    let imin = img.iter().filter(|q| q.j == jmin).map(|q| q.i).min().unwrap();
    Ok(AffineUnimodularMap::translation(LatticePoint::new(-imin, -jmin)).compose(&lin))
}

/// The minimal `d` such that some unimodular image of `p` lies in a translate of `dΣ`.
/// Points give 0; the empty polygon is handled by [`simplex_size_opt`].
pub fn simplex_size(p: &LatticePolygon) -> i64 {
    match p.dimension() {
        0 => 0,
        1 => p.boundary_count() as i64 - 1,
        _ => {
            let d = |u: (i64, i64), w: (i64, i64)| {
                p.max_dot((u.0 + w.0, u.1 + w.1)) - p.min_dot(u) - p.min_dot(w)
            };
            let mut best = i64::MAX;
            for su in [1, -1] {
                for sw in [1, -1] {
                    best = best.min(d((su, 0), (0, sw)));
                }
            }
            let dirs: Vec<(i64, i64)> = directions_up_to(p, best)
                .into_iter()
                .flat_map(|(v, _)| [v, (-v.0, -v.1)])
                .collect();
            for &u in &dirs {
                for &w in &dirs {
                    if det(u, w).abs() == 1 {
                        best = best.min(d(u, w));
                    }
                }
            }
            best
        }
    }
}

/// `lw²` with the convention `lw²(∅) = -2`.
pub fn simplex_size_opt(p: Option<&LatticePolygon>) -> i64 {
    p.map_or(-2, simplex_size)
}
