//! Brute-force oracles, written without reusing the library's algorithms.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use npinv_core::LatticePolygon;
use num_rational::Ratio;
use proptest::prelude::*;

pub mod props;

pub type Pt = (i64, i64);

pub fn poly(v: &[Pt]) -> LatticePolygon {
    LatticePolygon::from_vertices(v).unwrap()
}

pub fn verts(p: &LatticePolygon) -> Vec<Pt> {
    p.vertices().iter().map(|q| (q.i, q.j)).collect()
}

fn cross(o: Pt, a: Pt, b: Pt) -> i128 {
    (a.0 - o.0) as i128 * (b.1 - o.1) as i128 - (a.1 - o.1) as i128 * (b.0 - o.0) as i128
}

/// Andrew's monotone chain; counter-clockwise, collinear points dropped.
pub fn hull(points: &[Pt]) -> Vec<Pt> {
    let mut pts: Vec<Pt> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut lower: Vec<Pt> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<Pt> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Position of `q` relative to the hull `h`: `Some(true)` strictly inside,
/// `Some(false)` on the boundary, `None` outside. Lower-dimensional hulls have
/// no strict interior.
fn locate(h: &[Pt], q: Pt) -> Option<bool> {
    match h.len() {
        0 => None,
        1 => (h[0] == q).then_some(false),
        2 => {
            let on_line = cross(h[0], h[1], q) == 0;
            let between = (h[0].0.min(h[1].0)..=h[0].0.max(h[1].0)).contains(&q.0)
                && (h[0].1.min(h[1].1)..=h[0].1.max(h[1].1)).contains(&q.1);
            (on_line && between).then_some(false)
        }
        n => {
            let mut strict = true;
            for k in 0..n {
                let c = cross(h[k], h[(k + 1) % n], q);
                if c < 0 {
                    return None;
                }
                if c == 0 {
                    strict = false;
                }
            }
            Some(strict)
        }
    }
}

fn bbox(h: &[Pt]) -> (i64, i64, i64, i64) {
    let xs = h.iter().map(|p| p.0);
    let ys = h.iter().map(|p| p.1);
    (xs.clone().min().unwrap(), xs.max().unwrap(), ys.clone().min().unwrap(), ys.max().unwrap())
}

/// Every lattice point of `conv(h)`, by scanning the bounding box.
pub fn brute_points(h: &[Pt]) -> Vec<Pt> {
    let h = hull(h);
    let (x0, x1, y0, y1) = bbox(&h);
    let mut out = Vec::new();
    for x in x0..=x1 {
        for y in y0..=y1 {
            if locate(&h, (x, y)).is_some() {
                out.push((x, y));
            }
        }
    }
    out
}

pub fn brute_interior(h: &[Pt]) -> Vec<Pt> {
    let h = hull(h);
    if h.len() < 3 {
        return Vec::new();
    }
    let (x0, x1, y0, y1) = bbox(&h);
    let mut out = Vec::new();
    for x in x0..=x1 {
        for y in y0..=y1 {
            if locate(&h, (x, y)) == Some(true) {
                out.push((x, y));
            }
        }
    }
    out
}

pub fn doubled_area(h: &[Pt]) -> i128 {
    let h = hull(h);
    let n = h.len();
    (0..n).map(|k| cross((0, 0), h[k], h[(k + 1) % n])).sum::<i128>().abs()
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

pub fn spread(h: &[Pt], v: Pt) -> i64 {
    let d: Vec<i64> = h.iter().map(|p| p.0 * v.0 + p.1 * v.1).collect();
    d.iter().max().unwrap() - d.iter().min().unwrap()
}

/// Lattice width and all width directions, normalized with a positive first
/// nonzero entry, by scanning every primitive functional in a box large enough
/// to contain all minimizers.
pub fn brute_width(h: &[Pt]) -> (i64, BTreeSet<Pt>) {
    let h = hull(h);
    let (x0, x1, y0, y1) = bbox(&h);
    // the minimizing functional is bounded by the width along an axis
    let bound = (x1 - x0).max(y1 - y0) + 1;
    let mut best = i64::MAX;
    let mut dirs = BTreeSet::new();
    for a in 0..=bound {
        for b in -bound..=bound {
            if (a == 0 && b <= 0) || gcd(a, b) != 1 {
                continue;
            }
            let s = spread(&h, (a, b));
            if s < best {
                best = s;
                dirs.clear();
            }
            if s == best {
                dirs.insert((a, b));
            }
        }
    }
    (best, dirs)
}

/// All `2×2` integer matrices of determinant `±1` carrying `p` onto `q` after
/// a translation, found by matching an oriented vertex-edge pair of `p` to
/// every vertex-edge pair of `q`.
pub fn brute_equivalent(p: &[Pt], q: &[Pt]) -> bool {
    let (p, q) = (hull(p), hull(q));
    if p.len() != q.len() {
        return false;
    }
    let n = p.len();
    if n < 3 {
        let lp = brute_points(&p).len();
        return lp == brute_points(&q).len();
    }
    let target: BTreeSet<Pt> = q.iter().copied().collect();
    let e1 = (p[1].0 - p[0].0, p[1].1 - p[0].1);
    let e2 = (p[n - 1].0 - p[0].0, p[n - 1].1 - p[0].1);
    let det = e1.0 * e2.1 - e1.1 * e2.0;
    for k in 0..n {
        for dir in [1usize, n - 1] {
            let a = q[k];
            let b = q[(k + dir) % n];
            let c = q[(k + n - dir) % n];
            let f1 = (b.0 - a.0, b.1 - a.1);
            let f2 = (c.0 - a.0, c.1 - a.1);
            // M e1 = f1, M e2 = f2  =>  M = F E^{-1}
            let m = [
                [
                    Ratio::new(f1.0 * e2.1 - f2.0 * e1.1, det),
                    Ratio::new(-f1.0 * e2.0 + f2.0 * e1.0, det),
                ],
                [
                    Ratio::new(f1.1 * e2.1 - f2.1 * e1.1, det),
                    Ratio::new(-f1.1 * e2.0 + f2.1 * e1.0, det),
                ],
            ];
            if m.iter().flatten().any(|x| !x.is_integer()) {
                continue;
            }
            let m = [[m[0][0].to_integer(), m[0][1].to_integer()], [m[1][0].to_integer(), m[1][1].to_integer()]];
            if (m[0][0] * m[1][1] - m[0][1] * m[1][0]).abs() != 1 {
                continue;
            }
            let image: BTreeSet<Pt> = p
                .iter()
                .map(|&(x, y)| {
                    let (dx, dy) = (x - p[0].0, y - p[0].1);
                    (a.0 + m[0][0] * dx + m[0][1] * dy, a.1 + m[1][0] * dx + m[1][1] * dy)
                })
                .collect();
            if image == target {
                return true;
            }
        }
    }
    false
}

/// Moves every edge of the two-dimensional hull `g` outward by lattice
/// distance one and returns the vertices of the result when they are all
/// integral.
pub fn brute_move_out(g: &[Pt]) -> Option<Vec<Pt>> {
    let g = hull(g);
    let n = g.len();
    // edge k: a x + b y <= c with primitive outer normal (a, b)
    let lines: Vec<(i64, i64, i64)> = (0..n)
        .map(|k| {
            let (p, q) = (g[k], g[(k + 1) % n]);
            let (dx, dy) = (q.0 - p.0, q.1 - p.1);
            let d = gcd(dx, dy);
            let (a, b) = (dy / d, -dx / d);
            (a, b, a * p.0 + b * p.1 + 1)
        })
        .collect();
    let mut out = Vec::new();
    for k in 0..n {
        let (a1, b1, c1) = lines[(k + n - 1) % n];
        let (a2, b2, c2) = lines[k];
        let det = a1 * b2 - a2 * b1;
        let x = Ratio::new(c1 * b2 - c2 * b1, det);
        let y = Ratio::new(a1 * c2 - a2 * c1, det);
        if !x.is_integer() || !y.is_integer() {
            return None;
        }
        out.push((x.to_integer(), y.to_integer()));
    }
    // a vertex that lies outside another shifted half-plane means some edge vanished
    for &(x, y) in &out {
        if lines.iter().any(|&(a, b, c)| a * x + b * y > c) {
            return None;
        }
    }
    Some(hull(&out))
}

/// Sparse polynomial arithmetic over `ℚ` keyed by exponent.
pub type Sparse = BTreeMap<Pt, num_rational::BigRational>;

pub fn shift(f: &Sparse, w: Pt) -> Sparse {
    f.iter().map(|(&(i, j), c)| ((i + w.0, j + w.1), c.clone())).collect()
}

/// A random convex lattice polygon: the hull of 3 to 8 points in a box.
pub fn arb_polygon(radius: i64) -> impl Strategy<Value = LatticePolygon> {
    prop::collection::vec((-radius..=radius, -radius..=radius), 3..9)
        .prop_filter_map("degenerate hull", |pts| {
            let h = hull(&pts);
            (h.len() >= 3).then(|| LatticePolygon::from_vertices(&h).unwrap())
        })
}

/// A random matrix of determinant `±1`, as a product of elementary moves.
pub fn arb_unimodular() -> impl Strategy<Value = ([[i64; 2]; 2], [i64; 2])> {
    (prop::collection::vec((0u8..4, -3i64..=3), 0..6), -20i64..=20, -20i64..=20).prop_map(|(moves, tx, ty)| {
        let mut m = [[1i64, 0], [0, 1]];
        for (kind, k) in moves {
            let e = match kind {
                0 => [[1, k], [0, 1]],
                1 => [[1, 0], [k, 1]],
                2 => [[0, 1], [1, 0]],
                _ => [[-1, 0], [0, 1]],
            };
            m = [
                [e[0][0] * m[0][0] + e[0][1] * m[1][0], e[0][0] * m[0][1] + e[0][1] * m[1][1]],
                [e[1][0] * m[0][0] + e[1][1] * m[1][0], e[1][0] * m[0][1] + e[1][1] * m[1][1]],
            ];
        }
        (m, [tx, ty])
    })
}

/// The figure polygons of the genus 3 to 10 classification, coordinates as drawn.
pub fn figures() -> Vec<(&'static str, i64, Vec<Pt>)> {
    let f = |name: &'static str, g: i64, v: &[Pt]| (name, g, v.to_vec());
    vec![
        f("G3hyp", 3, &[(1, 2), (3, 2)]),
        f("Sigma", 3, &[(1, 1), (2, 1), (1, 2)]),
        f("G4hyp", 4, &[(1, 2), (4, 2)]),
        f("Square", 4, &[(1, 2), (2, 2), (2, 3), (1, 3)]),
        f("Delta12", 4, &[(1, 2), (3, 2), (1, 3)]),
        f("Upsilon", 4, &[(0, 0), (2, 1), (1, 2)]),
        f("G5hyp", 5, &[(1, 2), (5, 2)]),
        f("G5trig", 5, &[(1, 2), (3, 2), (2, 3), (1, 3)]),
        f("G5_1", 5, &[(0, 1), (1, 0), (2, 1), (1, 2)]),
        f("G5_2", 5, &[(0, 1), (1, 0), (2, 0), (1, 2)]),
        f("G5_3", 5, &[(0, 0), (2, 0), (1, 2)]),
        f("G6hyp", 6, &[(1, 2), (6, 2)]),
        f("G6trig0", 6, &[(1, 2), (3, 2), (3, 3), (1, 3)]),
        f("G6trig2", 6, &[(1, 2), (4, 2), (2, 3), (1, 3)]),
        f("G6_1", 6, &[(0, 0), (2, 0), (0, 2)]),
        f("G6_2", 6, &[(0, 1), (0, 0), (1, 0), (2, 1), (1, 2)]),
        f("G6_3", 6, &[(0, 0), (2, 0), (2, 1), (1, 2)]),
        f("G7hyp", 7, &[(1, 2), (7, 2)]),
        f("G7trig1", 7, &[(1, 2), (4, 2), (3, 3), (1, 3)]),
        f("G7trig3", 7, &[(1, 2), (5, 2), (2, 3), (1, 3)]),
        f("G7_1", 7, &[(0, 0), (1, 0), (3, 1), (2, 2), (1, 2)]),
        f("G7_2", 7, &[(1, 0), (2, 0), (2, 1), (1, 2), (0, 2), (0, 1)]),
        f("G7_3", 7, &[(0, 0), (1, 0), (2, 1), (1, 2), (0, 2)]),
        f("G7_4", 7, &[(0, 0), (2, 0), (1, 2), (0, 2)]),
        f("G7_5", 7, &[(0, 0), (3, 0), (0, 2)]),
        f("G8hyp", 8, &[(1, 2), (8, 2)]),
        f("G8trig0", 8, &[(1, 2), (4, 2), (4, 3), (1, 3)]),
        f("G8trig2", 8, &[(1, 2), (5, 2), (3, 3), (1, 3)]),
        f("G8_1", 8, &[(0, 0), (1, 0), (4, 1), (2, 2), (1, 2)]),
        f("G8_2", 8, &[(0, 0), (1, 0), (3, 1), (3, 2), (2, 2), (0, 1)]),
        f("G8_3", 8, &[(0, 0), (1, 0), (3, 1), (2, 2), (1, 2), (0, 1)]),
        f("G8_4", 8, &[(0, 0), (1, 0), (3, 1), (1, 2), (0, 2)]),
        f("G8_5", 8, &[(0, 0), (2, 0), (3, 1), (2, 2), (1, 2)]),
        f("G8_6", 8, &[(0, 0), (3, 0), (2, 2), (1, 2)]),
        f("G8_7", 8, &[(0, 0), (2, 0), (3, 2), (1, 2)]),
        f("G8_8", 8, &[(0, 0), (2, 0), (2, 1), (1, 2), (0, 2)]),
        f("G8_9", 8, &[(0, 0), (3, 0), (2, 1), (0, 2)]),
        f("G9hyp", 9, &[(1, 3), (9, 3)]),
        f("G9trig1", 9, &[(1, 2), (5, 2), (4, 3), (1, 3)]),
        f("G9trig3", 9, &[(1, 2), (6, 2), (3, 3), (1, 3)]),
        f("G9_1", 9, &[(-1, 0), (1, -1), (2, -1), (1, 1), (0, 2), (-1, 1)]),
        f("G9_2", 9, &[(-1, 0), (2, -1), (3, -1), (2, 0), (-1, 2)]),
        f("G9_3", 9, &[(0, -1), (1, -1), (4, 0), (4, 1), (3, 1), (0, 0)]),
        f("G9_4", 9, &[(0, -1), (1, -1), (4, 0), (3, 1), (2, 1), (0, 0)]),
        f("G9_5", 9, &[(0, -1), (1, -1), (4, 0), (2, 1), (1, 1), (0, 0)]),
        f("G9_6", 9, &[(0, -1), (1, -1), (4, 0), (1, 1), (0, 1)]),
        f("G9_7", 9, &[(0, -1), (2, -1), (4, 0), (2, 1), (1, 1)]),
        f("G9_8", 9, &[(0, -1), (2, -1), (3, 0), (2, 1), (1, 1), (0, 0)]),
        f("G9_9", 9, &[(0, -1), (2, -1), (3, 0), (1, 1), (0, 1)]),
        f("G9_10", 9, &[(0, -1), (3, -1), (3, 0), (2, 1), (1, 1)]),
        f("G9_11", 9, &[(0, -1), (2, -1), (3, 0), (3, 1), (1, 1)]),
        f("G9_12", 9, &[(0, 0), (2, 0), (2, 2), (0, 2)]),
        f("G9_13", 9, &[(0, 0), (3, 0), (1, 2), (0, 2)]),
        f("G9_14", 9, &[(0, 0), (4, 0), (0, 2)]),
        f("G10hyp", 10, &[(1, 3), (10, 3)]),
        f("G10trig0", 10, &[(1, 3), (5, 3), (5, 4), (1, 4)]),
        f("G10trig2", 10, &[(1, 3), (6, 3), (4, 4), (1, 4)]),
        f("G10trig4", 10, &[(1, 3), (7, 3), (3, 4), (1, 4)]),
        f("G10_1", 10, &[(-1, -1), (3, 1), (1, 3)]),
        f("G10_2", 10, &[(-1, 1), (0, -1), (1, -1), (3, 0), (-1, 2)]),
        f("G10_3", 10, &[(-1, 0), (1, -1), (2, -1), (2, 0), (1, 1), (-1, 2)]),
        f("G10_4", 10, &[(-1, 0), (1, -1), (2, -1), (2, 0), (0, 2), (-1, 1)]),
        f("G10_5", 10, &[(-1, 0), (2, -1), (3, -1), (0, 2), (-1, 1)]),
        f("G10_6", 10, &[(-1, 0), (1, -1), (3, -1), (2, 0), (-1, 2)]),
        f("G10_7", 10, &[(0, 0), (3, 0), (0, 3)]),
        f("G10_8", 10, &[(0, -1), (2, -1), (4, 0), (3, 1), (2, 1), (0, 0)]),
        f("G10_9", 10, &[(0, -1), (2, -1), (4, 0), (2, 1), (1, 1), (0, 0)]),
        f("G10_10", 10, &[(0, -1), (2, -1), (4, 0), (1, 1), (0, 1)]),
        f("G10_11", 10, &[(0, -1), (3, -1), (4, 0), (2, 1), (1, 1)]),
        f("G10_12", 10, &[(0, -1), (2, -1), (4, 0), (3, 1), (1, 1)]),
        f("G10_13", 10, &[(0, -1), (3, -1), (3, 0), (2, 1), (1, 1), (0, 0)]),
        f("G10_14", 10, &[(0, -1), (2, -1), (3, 0), (3, 1), (1, 1), (0, 0)]),
        f("G10_15", 10, &[(0, -1), (3, -1), (3, 0), (1, 1), (0, 1)]),
        f("G10_16", 10, &[(0, -1), (2, -1), (3, 0), (2, 1), (0, 1)]),
        f("G10_17", 10, &[(0, -1), (4, -1), (2, 1), (1, 1)]),
        f("G10_18", 10, &[(0, -1), (3, -1), (3, 1), (1, 1)]),
    ]
}

pub fn figure(name: &str) -> LatticePolygon {
    let (_, _, v) = figures().into_iter().find(|f| f.0 == name).unwrap();
    LatticePolygon::from_vertices(&v).unwrap()
}

/// Whether `g` (a lattice point set given by its hull) is the interior hull of
/// some lattice polygon: the move-out is a lattice polygon whose interior
/// points span exactly `g`.
pub fn brute_is_interior(g: &[Pt]) -> bool {
    let g = hull(g);
    if g.len() < 3 {
        return true;
    }
    match brute_move_out(&g) {
        Some(d) => hull(&brute_interior(&d)) == g,
        None => false,
    }
}

/// Interior polygons with exactly `n` lattice points, up to equivalence, found
/// by running through every `n`-point subset of the box `[0, side)²` whose hull
/// contains no further lattice point. Classes are separated by `brute_equivalent`.
pub fn naive_interior_census(n: usize, side: i64) -> Vec<Vec<Pt>> {
    let grid: Vec<Pt> = (0..side).flat_map(|x| (0..side).map(move |y| (x, y))).collect();
    let index: BTreeMap<Pt, usize> = grid.iter().enumerate().map(|(k, &p)| (p, k)).collect();
    let mut found: Vec<Vec<Pt>> = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();

    fn recurse(
        grid: &[Pt],
        index: &BTreeMap<Pt, usize>,
        n: usize,
        chosen: &mut Vec<usize>,
        found: &mut Vec<Vec<Pt>>,
    ) {
        let pts: Vec<Pt> = chosen.iter().map(|&k| grid[k]).collect();
        if chosen.len() >= 2 {
            let h = hull(&pts);
            let inside = if h.len() >= 3 {
                brute_points(&h)
            } else {
                // collinear: the lattice points on the segment
                let (a, b) = (pts.iter().min().unwrap(), pts.iter().max().unwrap());
                let d = gcd(b.0 - a.0, b.1 - a.1).max(1);
                (0..=d).map(|t| (a.0 + t * (b.0 - a.0) / d, a.1 + t * (b.1 - a.1) / d)).collect()
            };
            let last = *chosen.last().unwrap();
            // a hull point that can no longer be added kills the branch
            if inside.iter().any(|q| !pts.contains(q) && index.get(q).is_none_or(|&k| k < last)) {
                return;
            }
            if chosen.len() == n {
                if inside.len() == n {
                    found.push(pts);
                }
                return;
            }
        }
        if chosen.len() == n {
            found.push(pts);
            return;
        }
        let start = chosen.last().map_or(0, |&k| k + 1);
        for k in start..grid.len() {
            chosen.push(k);
            recurse(grid, index, n, chosen, found);
            chosen.pop();
        }
    }

    recurse(&grid, &index, n, &mut chosen, &mut found);
    // translation normalisation: touch both axes
    found.retain(|s| s.iter().any(|p| p.0 == 0) && s.iter().any(|p| p.1 == 0));
    let mut classes: Vec<Vec<Pt>> = Vec::new();
    for s in found {
        if !brute_is_interior(&s) {
            continue;
        }
        let h = if hull(&s).len() >= 3 { hull(&s) } else { vec![*s.iter().min().unwrap(), *s.iter().max().unwrap()] };
        if !classes.iter().any(|c| brute_equivalent(c, &h)) {
            classes.push(h);
        }
    }
    classes
}
