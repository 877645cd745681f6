//! Canonical representatives of unimodular equivalence classes.
//!
//! Every candidate anchors one edge: the edge start goes to the origin, the edge
//! direction to (1,0), the polygon into the upper half-plane, and the residual shear
//! `x -> x + k y` is fixed by putting the vertex after the edge into `0 <= x < height`.
//! Candidates are compared by their counterclockwise vertex list from the origin; the
//! smallest one wins. An equivalence permutes edges, so equivalent polygons produce the
//! same candidate set.

use crate::lattice::{
    apply_map, ext_gcd, gcd, AffineUnimodularMap, LatticePoint, LatticePolygon,
};

const SWAP: AffineUnimodularMap = AffineUnimodularMap {
    matrix: [[0, 1], [1, 0]],
    translation: [0, 0],
};

fn edge_anchor(a: LatticePoint, b: LatticePoint, next: Option<LatticePoint>) -> AffineUnimodularMap {
    let (dx, dy) = (b.i - a.i, b.j - a.j);
    let g = gcd(dx, dy);
    let (d1, d2) = (dx / g, dy / g);
    let (_, s, t) = ext_gcd(d1, d2);
    let mut mat = [[s, t], [-d2, d1]];
    if let Some(q) = next {
        let qx = s * (q.i - a.i) + t * (q.j - a.j);
        let h = -d2 * (q.i - a.i) + d1 * (q.j - a.j);
        debug_assert!(h > 0);
        let k = -num_integer::Integer::div_floor(&qx, &h);
        mat = [[s + k * (-d2), t + k * d1], [-d2, d1]];
    }
    let lin = AffineUnimodularMap { matrix: mat, translation: [0, 0] };
    let o = lin.apply(a);
    AffineUnimodularMap { matrix: mat, translation: [-o.i, -o.j] }
}

/// Returns the normal form and a map sending `p` onto it.
pub fn normal_form(p: &LatticePolygon) -> (LatticePolygon, AffineUnimodularMap) {
    let v = p.vertices();
    match p.dimension() {
        0 => {
            let m = AffineUnimodularMap::translation(LatticePoint::new(-v[0].i, -v[0].j));
            (apply_map(p, &m), m)
        }
        1 => {
            let m = edge_anchor(v[0], v[1], None);
            (apply_map(p, &m), m)
        }
        _ => {
            let mut best: Option<(Vec<LatticePoint>, AffineUnimodularMap)> = None;
            let n = v.len();
            let mut key = Vec::with_capacity(n);
            for orient in [AffineUnimodularMap::identity(), SWAP] {
                // reflected vertices, re-ordered counterclockwise
                let w: Vec<LatticePoint> = if orient == SWAP {
                    v.iter().rev().map(|&x| orient.apply(x)).collect()
                } else {
                    v.to_vec()
                };
                for k in 0..n {
                    let m = edge_anchor(w[k], w[(k + 1) % n], Some(w[(k + 2) % n]));
                    key.clear();
                    key.extend((0..n).map(|r| m.apply(w[(k + r) % n])));
                    let better = match &best {
                        None => true,
                        Some((b, _)) => key < *b,
                    };
                    if better {
                        best = Some((key.clone(), m.compose(&orient)));
                    }
                }
            }
            let (_, m) = best.unwrap();
            (apply_map(p, &m), m)
        }
    }
}

/// A witness `w` with `apply_map(p, w) == q`, if one exists.
pub fn equivalent(p: &LatticePolygon, q: &LatticePolygon) -> Option<AffineUnimodularMap> {
    if p.vertex_count() != q.vertex_count() || p.area2() != q.area2() {
        return None;
    }
    let (np, mp) = normal_form(p);
    let (nq, mq) = normal_form(q);
    (np == nq).then(|| mq.inverse().compose(&mp))
}
