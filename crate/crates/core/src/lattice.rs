//! Lattice points, lattice polygons and affine unimodular maps.
//!
//! Coordinates are `i64`; every product that could overflow is formed in `i128`.
//! Points and segments are ordinary polygons of dimension 0 and 1.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "(i64, i64)", into = "(i64, i64)")]
pub struct LatticePoint {
    pub i: i64,
    pub j: i64,
}

impl LatticePoint {
    pub const fn new(i: i64, j: i64) -> Self {
        LatticePoint { i, j }
    }

    pub fn dot(self, v: (i64, i64)) -> i64 {
        self.i * v.0 + self.j * v.1
    }
}

impl From<(i64, i64)> for LatticePoint {
    fn from((i, j): (i64, i64)) -> Self {
        LatticePoint { i, j }
    }
}

impl From<LatticePoint> for (i64, i64) {
    fn from(p: LatticePoint) -> Self {
        (p.i, p.j)
    }
}

impl fmt::Debug for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

impl std::ops::Add for LatticePoint {
    type Output = LatticePoint;
    fn add(self, o: LatticePoint) -> LatticePoint {
        LatticePoint::new(self.i + o.i, self.j + o.j)
    }
}

impl std::ops::Sub for LatticePoint {
    type Output = LatticePoint;
    fn sub(self, o: LatticePoint) -> LatticePoint {
        LatticePoint::new(self.i - o.i, self.j - o.j)
    }
}

/// `(a - o) x (b - o)`, positive for a left turn.
pub fn cross(o: LatticePoint, a: LatticePoint, b: LatticePoint) -> i128 {
    let (ax, ay) = ((a.i - o.i) as i128, (a.j - o.j) as i128);
    let (bx, by) = ((b.i - o.i) as i128, (b.j - o.j) as i128);
    ax * by - ay * bx
}

pub fn det(u: (i64, i64), v: (i64, i64)) -> i64 {
    u.0 * v.1 - u.1 * v.0
}

pub fn gcd(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

pub fn is_primitive(v: (i64, i64)) -> bool {
    gcd(v.0, v.1) == 1
}

/// Extended gcd on non-negative-or-signed input: returns (g, s, t) with s*a + t*b = g >= 0.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let e = a.extended_gcd(&b);
    if e.gcd < 0 {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

/// Sign convention for direction pairs: first nonzero coordinate positive.
pub fn canonical_direction(v: (i64, i64)) -> (i64, i64) {
    if v.0 < 0 || (v.0 == 0 && v.1 < 0) {
        (-v.0, -v.1)
    } else {
        v
    }
}

/// Convex hull of finitely many lattice points.
///
/// Vertices are stored counterclockwise with no collinear triples, starting at the
/// lexicographically smallest vertex. A segment stores its two endpoints in
/// lexicographic order and a point stores itself.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<LatticePoint>", into = "Vec<LatticePoint>")]
pub struct LatticePolygon {
    vertices: Vec<LatticePoint>,
}

impl TryFrom<Vec<LatticePoint>> for LatticePolygon {
    type Error = Error;
    fn try_from(v: Vec<LatticePoint>) -> Result<Self> {
        convex_hull(v)
    }
}

impl From<LatticePolygon> for Vec<LatticePoint> {
    fn from(p: LatticePolygon) -> Self {
        p.vertices
    }
}

impl fmt::Debug for LatticePolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "conv{{")?;
        for (k, v) in self.vertices.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v:?}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for LatticePolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.vertices.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

pub fn convex_hull<I>(points: I) -> Result<LatticePolygon>
where
    I: IntoIterator<Item = LatticePoint>,
{
    let mut pts: Vec<LatticePoint> = points.into_iter().collect();
    pts.sort_unstable();
    pts.dedup();
    if pts.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    if pts.len() <= 2 {
        return Ok(LatticePolygon { vertices: pts });
    }
    // monotone chain; the result starts at the smallest point and runs counterclockwise
    let mut lower: Vec<LatticePoint> = Vec::with_capacity(pts.len());
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<LatticePoint> = Vec::with_capacity(pts.len());
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() == 2 {
        // collinear input: the chain visits both endpoints
        lower.sort_unstable();
    }
    Ok(LatticePolygon { vertices: lower })
}

impl LatticePolygon {
    pub fn from_vertices(v: &[(i64, i64)]) -> Result<Self> {
        convex_hull(v.iter().map(|&p| LatticePoint::from(p)))
    }

    pub fn point(p: LatticePoint) -> Self {
        LatticePolygon { vertices: vec![p] }
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn dimension(&self) -> u8 {
        match self.vertices.len() {
            1 => 0,
            2 => 1,
            _ => 2,
        }
    }

    /// Edges as (start, end) pairs in counterclockwise order. A segment has one edge.
    pub fn edges(&self) -> Vec<(LatticePoint, LatticePoint)> {
        let n = self.vertices.len();
        match n {
            1 => vec![],
            2 => vec![(self.vertices[0], self.vertices[1])],
            _ => (0..n)
                .map(|k| (self.vertices[k], self.vertices[(k + 1) % n]))
                .collect(),
        }
    }

    pub fn min_j(&self) -> i64 {
        self.vertices.iter().map(|p| p.j).min().unwrap()
    }

    pub fn max_j(&self) -> i64 {
        self.vertices.iter().map(|p| p.j).max().unwrap()
    }

    pub fn translate(&self, t: LatticePoint) -> LatticePolygon {
        LatticePolygon {
            vertices: self.vertices.iter().map(|&p| p + t).collect(),
        }
    }

    /// Integer range of `i` on row `j`, shrunk by `slack` in the edge inequalities
    /// (`slack = 0` closed polygon, `slack = 1` open interior). Two-dimensional only.
    fn row_range_with(&self, j: i64, slack: i128) -> Option<(i64, i64)> {
        let mut lo = i64::MIN;
        let mut hi = i64::MAX;
        for (a, b) in self.edges() {
            let dx = (b.i - a.i) as i128;
            let dy = (b.j - a.j) as i128;
            // left of a->b:  dx (j - a.j) - dy (i - a.i) >= slack
            let rhs = dx * (j - a.j) as i128 - slack;
            if dy == 0 {
                if rhs < 0 {
                    return None;
                }
            } else if dy > 0 {
                let bound = a.i as i128 + Integer::div_floor(&rhs, &dy);
                hi = hi.min(bound.clamp(i64::MIN as i128, i64::MAX as i128) as i64);
            } else {
                let bound = a.i as i128 + Integer::div_ceil(&rhs, &dy);
                lo = lo.max(bound.clamp(i64::MIN as i128, i64::MAX as i128) as i64);
            }
        }
        (lo <= hi).then_some((lo, hi))
    }

    /// Lattice points on row `j`, as an inclusive `i`-interval.
    pub fn row_range(&self, j: i64) -> Option<(i64, i64)> {
        match self.dimension() {
            2 => self.row_range_with(j, 0),
            _ => {
                let pts: Vec<LatticePoint> =
                    self.lattice_points().into_iter().filter(|p| p.j == j).collect();
                let lo = pts.iter().map(|p| p.i).min()?;
                let hi = pts.iter().map(|p| p.i).max()?;
                Some((lo, hi))
            }
        }
    }

    pub fn interior_row_range(&self, j: i64) -> Option<(i64, i64)> {
        if self.dimension() < 2 {
            return None;
        }
        self.row_range_with(j, 1)
    }

    pub fn lattice_points(&self) -> Vec<LatticePoint> {
        match self.dimension() {
            0 => self.vertices.clone(),
            1 => {
                let (a, b) = (self.vertices[0], self.vertices[1]);
                let g = gcd(b.i - a.i, b.j - a.j);
                let step = ((b.i - a.i) / g, (b.j - a.j) / g);
                (0..=g)
                    .map(|k| LatticePoint::new(a.i + k * step.0, a.j + k * step.1))
                    .collect()
            }
            _ => {
                let mut out = Vec::new();
                for j in self.min_j()..=self.max_j() {
                    if let Some((lo, hi)) = self.row_range_with(j, 0) {
                        out.extend((lo..=hi).map(|i| LatticePoint::new(i, j)));
                    }
                }
                out
            }
        }
    }

    pub fn interior_points(&self) -> Vec<LatticePoint> {
        if self.dimension() < 2 {
            return vec![];
        }
        let mut out = Vec::new();
        for j in self.min_j() + 1..self.max_j() {
            if let Some((lo, hi)) = self.row_range_with(j, 1) {
                out.extend((lo..=hi).map(|i| LatticePoint::new(i, j)));
            }
        }
        out
    }

    pub fn boundary_points(&self) -> Vec<LatticePoint> {
        if self.dimension() < 2 {
            return self.lattice_points();
        }
        self.lattice_points()
            .into_iter()
            .filter(|&p| self.on_boundary(p))
            .collect()
    }

    pub fn lattice_count(&self) -> usize {
        match self.dimension() {
            2 => self.interior_count() + self.boundary_count(),
            _ => self.boundary_count(),
        }
    }

    pub fn boundary_count(&self) -> usize {
        match self.dimension() {
            0 => 1,
            1 => {
                let (a, b) = (self.vertices[0], self.vertices[1]);
                gcd(b.i - a.i, b.j - a.j) as usize + 1
            }
            _ => self
                .edges()
                .iter()
                .map(|(a, b)| gcd(b.i - a.i, b.j - a.j) as usize)
                .sum(),
        }
    }

    pub fn interior_count(&self) -> usize {
        if self.dimension() < 2 {
            return 0;
        }
        // Pick
        ((self.area2() as i128 - self.boundary_count() as i128 + 2) / 2) as usize
    }

    /// Twice the Euclidean area.
    pub fn area2(&self) -> u64 {
        if self.dimension() < 2 {
            return 0;
        }
        let o = self.vertices[0];
        let mut s: i128 = 0;
        for k in 1..self.vertices.len() - 1 {
            s += cross(o, self.vertices[k], self.vertices[k + 1]);
        }
        s.unsigned_abs() as u64
    }

    pub fn contains(&self, p: LatticePoint) -> bool {
        match self.dimension() {
            0 => self.vertices[0] == p,
            1 => {
                let (a, b) = (self.vertices[0], self.vertices[1]);
                cross(a, b, p) == 0 && a <= p && p <= b
            }
            _ => self.edges().iter().all(|&(a, b)| cross(a, b, p) >= 0),
        }
    }

    pub fn contains_strictly(&self, p: LatticePoint) -> bool {
        self.dimension() == 2 && self.edges().iter().all(|&(a, b)| cross(a, b, p) > 0)
    }

    pub fn on_boundary(&self, p: LatticePoint) -> bool {
        self.contains(p) && !self.contains_strictly(p)
    }

    pub fn contains_polygon(&self, q: &LatticePolygon) -> bool {
        q.vertices.iter().all(|&v| self.contains(v))
    }

    /// Directional spread max<v,x> - min<v,x>; no primitivity check.
    pub fn spread(&self, v: (i64, i64)) -> i64 {
        let mut lo = i64::MAX;
        let mut hi = i64::MIN;
        for p in &self.vertices {
            let d = p.dot(v);
            lo = lo.min(d);
            hi = hi.max(d);
        }
        hi - lo
    }

    pub fn min_dot(&self, v: (i64, i64)) -> i64 {
        self.vertices.iter().map(|p| p.dot(v)).min().unwrap()
    }

    pub fn max_dot(&self, v: (i64, i64)) -> i64 {
        self.vertices.iter().map(|p| p.dot(v)).max().unwrap()
    }

    pub fn scale(&self, k: i64) -> LatticePolygon {
        assert!(k >= 1);
        LatticePolygon {
            vertices: self
                .vertices
                .iter()
                .map(|p| LatticePoint::new(p.i * k, p.j * k))
                .collect(),
        }
    }
}

pub fn lattice_points(p: &LatticePolygon) -> Vec<LatticePoint> {
    p.lattice_points()
}

pub fn boundary_points(p: &LatticePolygon) -> Vec<LatticePoint> {
    p.boundary_points()
}

pub fn interior_points(p: &LatticePolygon) -> Vec<LatticePoint> {
    p.interior_points()
}

pub fn area2(p: &LatticePolygon) -> u64 {
    p.area2()
}

pub fn vertex_count(p: &LatticePolygon) -> usize {
    p.vertex_count()
}

pub fn minkowski_sum(p: &LatticePolygon, q: &LatticePolygon) -> LatticePolygon {
    let mut pts = Vec::with_capacity(p.vertices.len() * q.vertices.len());
    for &a in &p.vertices {
        for &b in &q.vertices {
            pts.push(a + b);
        }
    }
    convex_hull(pts).expect("non-empty")
}

/// Mixed volume, doubled: `area2(p+q) - area2(p) - area2(q)`, i.e. twice the Euclidean
/// mixed volume `Vol(p+q) - Vol(p) - Vol(q)`. Always an integer.
pub fn mixed_volume(p: &LatticePolygon, q: &LatticePolygon) -> u64 {
    minkowski_sum(p, q).area2() - p.area2() - q.area2()
}

/// `x -> matrix * x + translation` with `|det(matrix)| = 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AffineUnimodularMap {
    pub matrix: [[i64; 2]; 2],
    pub translation: [i64; 2],
}

impl fmt::Debug for AffineUnimodularMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.matrix;
        write!(
            f,
            "[[{},{}],[{},{}]]+({},{})",
            m[0][0], m[0][1], m[1][0], m[1][1], self.translation[0], self.translation[1]
        )
    }
}

impl AffineUnimodularMap {
    pub fn new(matrix: [[i64; 2]; 2], translation: [i64; 2]) -> Result<Self> {
        let d = matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0];
        if d.abs() != 1 {
            return Err(Error::NotUnimodular(d));
        }
        Ok(AffineUnimodularMap { matrix, translation })
    }

    pub const fn identity() -> Self {
        AffineUnimodularMap {
            matrix: [[1, 0], [0, 1]],
            translation: [0, 0],
        }
    }

    pub fn translation(t: LatticePoint) -> Self {
        AffineUnimodularMap {
            matrix: [[1, 0], [0, 1]],
            translation: [t.i, t.j],
        }
    }

    pub fn linear(matrix: [[i64; 2]; 2]) -> Result<Self> {
        Self::new(matrix, [0, 0])
    }

    pub fn det(&self) -> i64 {
        let m = self.matrix;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    pub fn apply(&self, p: LatticePoint) -> LatticePoint {
        let m = self.matrix;
        LatticePoint::new(
            m[0][0] * p.i + m[0][1] * p.j + self.translation[0],
            m[1][0] * p.i + m[1][1] * p.j + self.translation[1],
        )
    }

    pub fn apply_linear(&self, v: (i64, i64)) -> (i64, i64) {
        let m = self.matrix;
        (m[0][0] * v.0 + m[0][1] * v.1, m[1][0] * v.0 + m[1][1] * v.1)
    }

    /// Transport of a linear functional: `<v, x> = <w, m(x)> + const` for `w = v * M^{-1}`.
    pub fn transport_functional(&self, v: (i64, i64)) -> (i64, i64) {
        let inv = self.inverse().matrix;
        (
            v.0 * inv[0][0] + v.1 * inv[1][0],
            v.0 * inv[0][1] + v.1 * inv[1][1],
        )
    }

    /// `self` after `inner`: `x -> self(inner(x))`.
    pub fn compose(&self, inner: &AffineUnimodularMap) -> AffineUnimodularMap {
        let a = self.matrix;
        let b = inner.matrix;
        let matrix = [
            [
                a[0][0] * b[0][0] + a[0][1] * b[1][0],
                a[0][0] * b[0][1] + a[0][1] * b[1][1],
            ],
            [
                a[1][0] * b[0][0] + a[1][1] * b[1][0],
                a[1][0] * b[0][1] + a[1][1] * b[1][1],
            ],
        ];
        let t = self.apply(LatticePoint::new(inner.translation[0], inner.translation[1]));
        AffineUnimodularMap {
            matrix,
            translation: [t.i, t.j],
        }
    }

    pub fn inverse(&self) -> AffineUnimodularMap {
        let m = self.matrix;
        let d = self.det();
        let inv = [[m[1][1] * d, -m[0][1] * d], [-m[1][0] * d, m[0][0] * d]];
        let lin = AffineUnimodularMap {
            matrix: inv,
            translation: [0, 0],
        };
        let t = lin.apply(LatticePoint::new(-self.translation[0], -self.translation[1]));
        AffineUnimodularMap {
            matrix: inv,
            translation: [t.i, t.j],
        }
    }
}

pub fn apply_map(p: &LatticePolygon, m: &AffineUnimodularMap) -> LatticePolygon {
    convex_hull(p.vertices.iter().map(|&v| m.apply(v))).expect("non-empty")
}

fn parse_err(s: &str) -> Error {
    Error::Parse(format!("malformed polygon literal: {s}"))
}

/// Parses `"(i,j) (i,j) ..."` or a JSON array `[[i,j], ...]`; U+2212 is accepted as a minus sign.
pub fn parse_points(s: &str) -> Result<Vec<LatticePoint>> {
    let s = s.replace('\u{2212}', "-");
    let t = s.trim();
    if t.starts_with('[') {
        let v: Vec<(i64, i64)> =
            serde_json::from_str(t).map_err(|e| Error::Parse(e.to_string()))?;
        return Ok(v.into_iter().map(LatticePoint::from).collect());
    }
    let mut out = Vec::new();
    let mut rest = t;
    while let Some(open) = rest.find('(') {
        if !rest[..open].trim().trim_matches(',').trim().is_empty() {
            return Err(parse_err(t));
        }
        let close = rest[open..].find(')').ok_or_else(|| parse_err(t))? + open;
        let inner = &rest[open + 1..close];
        let mut parts = inner.split(',');
        let i = parts.next().and_then(|x| x.trim().parse().ok());
        let j = parts.next().and_then(|x| x.trim().parse().ok());
        match (i, j, parts.next()) {
            (Some(i), Some(j), None) => out.push(LatticePoint::new(i, j)),
            _ => return Err(parse_err(t)),
        }
        rest = &rest[close + 1..];
    }
    if !rest.trim().trim_matches(',').trim().is_empty() {
        return Err(parse_err(t));
    }
    Ok(out)
}

impl FromStr for LatticePolygon {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        convex_hull(parse_points(s)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(v: &[(i64, i64)]) -> LatticePolygon {
        LatticePolygon::from_vertices(v).unwrap()
    }

    // bounding-box scan, independent of the row-range arithmetic
    fn scan(p: &LatticePolygon) -> (usize, usize) {
        let (mut b, mut i) = (0, 0);
        let xs: Vec<i64> = p.vertices().iter().map(|v| v.i).collect();
        let ys: Vec<i64> = p.vertices().iter().map(|v| v.j).collect();
        for x in *xs.iter().min().unwrap()..=*xs.iter().max().unwrap() {
            for y in *ys.iter().min().unwrap()..=*ys.iter().max().unwrap() {
                let q = LatticePoint::new(x, y);
                let e = p.edges();
                let c: Vec<i128> = e.iter().map(|&(a, bb)| cross(a, bb, q)).collect();
                if c.iter().all(|&z| z > 0) {
                    i += 1;
                } else if c.iter().all(|&z| z >= 0) {
                    b += 1;
                }
            }
        }
        (b, i)
    }

    #[test]
    fn hull_basics() {
        let s = convex_hull([(0, 0), (1, 0), (0, 1)].map(LatticePoint::from)).unwrap();
        assert_eq!(s.dimension(), 2);
        assert_eq!(s.vertices(), &[(0, 0).into(), (1, 0).into(), (0, 1).into()]);
        let seg = convex_hull([(2, 2), (0, 0), (1, 1)].map(LatticePoint::from)).unwrap();
        assert_eq!(seg.dimension(), 1);
        assert_eq!(seg.vertices(), &[(0, 0).into(), (2, 2).into()]);
        let ups = convex_hull([(-1, -1), (1, 0), (0, 1), (0, 0)].map(LatticePoint::from)).unwrap();
        assert_eq!(ups, poly(&[(-1, -1), (1, 0), (0, 1)]));
        assert_eq!(convex_hull(Vec::<LatticePoint>::new()), Err(Error::EmptyPointSet));
    }

    #[test]
    fn counts_against_scan() {
        let ups = poly(&[(-1, -1), (1, 0), (0, 1)]);
        assert_eq!((ups.lattice_count(), ups.boundary_count(), ups.interior_count()), (4, 3, 1));
        assert_eq!(ups.interior_points(), vec![LatticePoint::new(0, 0)]);
        let two_ups = poly(&[(-2, -2), (2, 0), (0, 2)]);
        assert_eq!((two_ups.lattice_count(), two_ups.boundary_count()), (10, 6));
        assert_eq!(scan(&two_ups), (6, 4));
        let pt = LatticePolygon::point(LatticePoint::new(3, 4));
        assert_eq!((pt.lattice_count(), pt.boundary_count(), pt.interior_count()), (1, 1, 0));
        let odd = poly(&[(1, 2), (3, 1), (5, 1), (6, 3), (5, 6), (1, 4)]);
        let (b, i) = scan(&odd);
        assert_eq!(odd.boundary_points().len(), b);
        assert_eq!(odd.interior_points().len(), i);
        assert_eq!(odd.lattice_points().len(), b + i);
    }

    #[test]
    fn areas_and_mixed_volume() {
        let s = poly(&[(0, 0), (1, 0), (0, 1)]);
        let sq = poly(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        assert_eq!(s.area2(), 1);
        assert_eq!(poly(&[(-1, -1), (1, 0), (0, 1)]).area2(), 3);
        assert_eq!(poly(&[(0, 0), (3, 3)]).area2(), 0);
        assert_eq!(mixed_volume(&s, &s), 2);
        assert_eq!(mixed_volume(&sq, &sq), 4);
        assert_eq!(mixed_volume(&sq, &LatticePolygon::point((7, 1).into())), 0);
    }

    #[test]
    fn maps() {
        let s = poly(&[(0, 0), (1, 0), (0, 1)]);
        let rot = AffineUnimodularMap::linear([[0, -1], [1, 0]]).unwrap();
        assert_eq!(apply_map(&s, &rot), poly(&[(0, 0), (0, 1), (-1, 0)]));
        assert_eq!(apply_map(&s, &AffineUnimodularMap::identity()), s);
        let shear = AffineUnimodularMap::linear([[1, 1], [0, 1]]).unwrap();
        assert_eq!(
            apply_map(&poly(&[(-1, -1), (1, 0), (0, 1)]), &shear),
            poly(&[(-2, -1), (1, 0), (1, 1)])
        );
        let m = AffineUnimodularMap::new([[2, 1], [1, 1]], [3, -4]).unwrap();
        let id = m.compose(&m.inverse());
        assert_eq!(id, AffineUnimodularMap::identity());
        assert!(AffineUnimodularMap::linear([[2, 0], [0, 1]]).is_err());
    }

    #[test]
    fn parsing() {
        let p: LatticePolygon = "(\u{2212}2,\u{2212}2) (2,0) (0,2)".parse().unwrap();
        assert_eq!(p, poly(&[(-2, -2), (2, 0), (0, 2)]));
        let q: LatticePolygon = "[[0,0],[1,0],[0,1]]".parse().unwrap();
        assert_eq!(q.area2(), 1);
        assert!("(1,2) garbage".parse::<LatticePolygon>().is_err());
        assert!("".parse::<LatticePolygon>().is_err());
        let json = serde_json::to_string(&q).unwrap();
        assert_eq!(json, "[[0,0],[1,0],[0,1]]");
    }
}
