//! Interior hulls, the onion sequence, moving out, maximal polygons and genus.

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{convex_hull, gcd, LatticePoint, LatticePolygon};

pub type Q = Ratio<i128>;

/// `{p : <p, normal> >= -offset}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HalfPlane {
    pub normal: (i64, i64),
    pub offset: i64,
}

impl HalfPlane {
    pub fn shifted(self) -> HalfPlane {
        HalfPlane { normal: self.normal, offset: self.offset + 1 }
    }
}

/// Supporting half-planes of a two-dimensional polygon, one per edge, primitive inner normals.
pub fn supporting_half_planes(g: &LatticePolygon) -> Vec<HalfPlane> {
    g.edges()
        .into_iter()
        .map(|(a, b)| {
            let (dx, dy) = (b.i - a.i, b.j - a.j);
            let k = gcd(dx, dy);
            let normal = (-dy / k, dx / k);
            HalfPlane { normal, offset: -a.dot(normal) }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoveOut {
    /// Counterclockwise vertices with exact rational coordinates.
    pub vertices: Vec<(Q, Q)>,
    pub is_lattice: bool,
}

impl MoveOut {
    pub fn to_lattice_polygon(&self) -> Option<LatticePolygon> {
        if !self.is_lattice {
            return None;
        }
        convex_hull(
            self.vertices
                .iter()
                .map(|(x, y)| LatticePoint::new(x.to_integer() as i64, y.to_integer() as i64)),
        )
        .ok()
    }
}

fn rcross(o: &(Q, Q), a: &(Q, Q), b: &(Q, Q)) -> Q {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

fn rational_hull(mut pts: Vec<(Q, Q)>) -> Vec<(Q, Q)> {
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut lower: Vec<(Q, Q)> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && rcross(&lower[lower.len() - 2], &lower[lower.len() - 1], p) <= Q::zero() {
            lower.pop();
        }
        lower.push(*p);
    }
    let mut upper: Vec<(Q, Q)> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && rcross(&upper[upper.len() - 2], &upper[upper.len() - 1], p) <= Q::zero() {
            upper.pop();
        }
        upper.push(*p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Intersection of the outward unit shifts of the supporting half-planes of `g`.
pub fn move_out(g: &LatticePolygon) -> Result<MoveOut> {
    if g.dimension() < 2 {
        return Err(Error::NotTwoDimensional);
    }
    let hs: Vec<HalfPlane> = supporting_half_planes(g).into_iter().map(HalfPlane::shifted).collect();
    let mut pts = Vec::new();
    for (a, ha) in hs.iter().enumerate() {
        for hb in &hs[a + 1..] {
            let (n1, n2) = (ha.normal, hb.normal);
            let d = (n1.0 as i128) * (n2.1 as i128) - (n1.1 as i128) * (n2.0 as i128);
            if d == 0 {
                continue;
            }
            // <p,n1> = -o1, <p,n2> = -o2
            let (c1, c2) = (-(ha.offset as i128), -(hb.offset as i128));
            let x = Q::new(c1 * n2.1 as i128 - c2 * n1.1 as i128, d);
            let y = Q::new(n1.0 as i128 * c2 - n2.0 as i128 * c1, d);
            let inside = hs.iter().all(|h| {
                x * Q::from(h.normal.0 as i128) + y * Q::from(h.normal.1 as i128)
                    >= Q::from(-(h.offset as i128))
            });
            if inside {
                pts.push((x, y));
            }
        }
    }
    let vertices = rational_hull(pts);
    let is_lattice = vertices.iter().all(|(x, y)| x.denom().is_one() && y.denom().is_one());
    Ok(MoveOut { vertices, is_lattice })
}

pub fn interior_hull(p: &LatticePolygon) -> Option<LatticePolygon> {
    convex_hull(p.interior_points()).ok()
}

/// `[Δ⁽¹⁾, Δ⁽²⁾, ...]` until the next hull is empty.
pub fn onion(p: &LatticePolygon) -> Vec<LatticePolygon> {
    let mut out = Vec::new();
    let mut cur = interior_hull(p);
    while let Some(q) = cur {
        cur = interior_hull(&q);
        out.push(q);
    }
    out
}

pub fn is_interior_polygon(g: &LatticePolygon) -> bool {
    if g.dimension() < 2 {
        return true;
    }
    match move_out(g).ok().and_then(|m| m.to_lattice_polygon()) {
        Some(m) => interior_hull(&m).as_ref() == Some(g),
        None => false,
    }
}

/// The largest polygon with interior hull `g`. Points and segments get a
/// conventional container instead (no maximum exists there).
pub fn max_polygon(g: &LatticePolygon) -> Result<LatticePolygon> {
    let v = g.vertices();
    match g.dimension() {
        0 => Ok(LatticePolygon::from_vertices(&[(-1, -1), (2, -1), (-1, 2)])?.translate(v[0])),
        1 => {
            // standard position: (0,0)..(k-1,0) sits inside conv{(-1,-1),(2k+1,-1),(-1,1)}
            let k = g.boundary_count() as i64;
            let std = LatticePolygon::from_vertices(&[(0, 0), (k - 1, 0)])?;
            let container = LatticePolygon::from_vertices(&[(-1, -1), (2 * k + 1, -1), (-1, 1)])?;
            let (nf, m) = crate::normal_form::normal_form(g);
            debug_assert_eq!(nf, std);
            Ok(crate::lattice::apply_map(&container, &m.inverse()))
        }
        _ => {
            let m = move_out(g)?.to_lattice_polygon().ok_or(Error::NotInteriorPolygon)?;
            if interior_hull(&m).as_ref() != Some(g) {
                return Err(Error::NotInteriorPolygon);
            }
            Ok(m)
        }
    }
}

/// Number of interior lattice points.
pub fn genus(p: &LatticePolygon) -> usize {
    p.interior_count()
}
