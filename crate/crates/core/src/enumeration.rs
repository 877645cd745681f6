//! Census of interior polygons with a given number of lattice points.
//!
//! Convex lattice polygons are grown one lattice point at a time: deleting a
//! vertex from a polygon with `n + 1` lattice points leaves the hull of the
//! remaining `n` points, so every class appears as an extension of a smaller one
//! (or of a segment, when the remaining points are collinear). A new point must
//! sit at lattice distance one beyond every edge it sees, which bounds the search.

use std::sync::{Mutex, OnceLock};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::adjunction::{is_interior_polygon, max_polygon};
use crate::error::{Error, Result};
use crate::invariants::fingerprint::{fingerprints, partition_by_fingerprint, CurveFingerprint};
use crate::lattice::{convex_hull, ext_gcd, gcd, LatticePoint, LatticePolygon};
use crate::normal_form::normal_form;

pub const DEFAULT_MAX_GENUS: i64 = 12;

/// One-point extensions of `q` that add exactly one lattice point.
fn extensions(q: &LatticePolygon) -> Vec<LatticePolygon> {
    let n = q.lattice_count();
    let v = q.vertices();
    let (min_i, max_i) = (v.iter().map(|p| p.i).min().unwrap(), v.iter().map(|p| p.i).max().unwrap());
    let (min_j, max_j) = (v.iter().map(|p| p.j).min().unwrap(), v.iter().map(|p| p.j).max().unwrap());
    let edges = q.edges();
    let step = edges
        .iter()
        .map(|(a, b)| {
            let (dx, dy) = (b.i - a.i, b.j - a.j);
            let g = gcd(dx, dy);
            (dx / g).abs().max((dy / g).abs())
        })
        .max()
        .unwrap();
    let margin = 2 * step + 2;
    let reach = (max_i - min_i).max(max_j - min_j) + 2 * margin;
    let inside_box = |p: LatticePoint| {
        (min_i - margin..=max_i + margin).contains(&p.i) && (min_j - margin..=max_j + margin).contains(&p.j)
    };
    let mut out = Vec::new();
    for (a, b) in edges {
        let (dx, dy) = (b.i - a.i, b.j - a.j);
        let g = gcd(dx, dy);
        let d = (dx / g, dy / g);
        let nrm = (-d.1, d.0);
        // a point on the outer parallel line at lattice distance one
        let (_, s, t) = ext_gcd(nrm.0, nrm.1);
        let c = a.dot(nrm) - 1;
        let base = LatticePoint::new(s * c, t * c);
        let k0 = if d.0 != 0 { (a.i - base.i) / d.0 } else { (a.j - base.j) / d.1 };
        for k in k0 - reach..=k0 + reach {
            let p = LatticePoint::new(base.i + k * d.0, base.j + k * d.1);
            if !inside_box(p) {
                continue;
            }
            let h = convex_hull(v.iter().copied().chain(std::iter::once(p))).expect("non-empty");
            if h.lattice_count() == n + 1 {
                out.push(h);
            }
        }
    }
    out
}

fn levels() -> &'static Mutex<Vec<Vec<LatticePolygon>>> {
    static LEVELS: OnceLock<Mutex<Vec<Vec<LatticePolygon>>>> = OnceLock::new();
    LEVELS.get_or_init(|| Mutex::new(Vec::new()))
}

/// Normal forms of all two-dimensional convex lattice polygons with exactly
/// `n` lattice points, sorted.
pub fn convex_polygons(n: usize) -> Vec<LatticePolygon> {
    if n < 3 {
        return Vec::new();
    }
    let mut cache = levels().lock().unwrap_or_else(|e| e.into_inner());
    if cache.is_empty() {
        cache.extend([Vec::new(), Vec::new(), Vec::new()]);
        cache.push(vec![normal_form(&LatticePolygon::from_vertices(&[(0, 0), (1, 0), (0, 1)]).unwrap()).0]);
    }
    while cache.len() <= n {
        let k = cache.len();
        let seed = LatticePolygon::from_vertices(&[(0, 0), (k as i64 - 2, 0), (0, 1)]).unwrap();
        let mut next: Vec<LatticePolygon> = cache[k - 1]
            .par_iter()
            .flat_map_iter(|q| extensions(q).into_iter().map(|p| normal_form(&p).0))
            .collect();
        next.push(normal_form(&seed).0);
        next.par_sort_unstable();
        next.dedup();
        cache.push(next);
    }
    cache[n].clone()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CensusEntry {
    /// Normal form of `Δ⁽¹⁾`.
    pub interior: LatticePolygon,
    pub max_polygon: LatticePolygon,
    pub fingerprint: CurveFingerprint,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusCensus {
    pub genus: i64,
    pub entries: Vec<CensusEntry>,
}

fn sort_key(p: &LatticePolygon) -> (usize, Vec<LatticePoint>) {
    (p.vertex_count(), p.vertices().to_vec())
}

/// All interior polygons with `genus` lattice points up to equivalence, with
/// their maximal polygons and fingerprints.
pub fn enumerate_interior_polygons(genus: i64) -> Result<GenusCensus> {
    enumerate_with_limit(genus, DEFAULT_MAX_GENUS)
}

pub fn enumerate_with_limit(genus: i64, max_genus: i64) -> Result<GenusCensus> {
    if genus < 1 || genus > max_genus {
        return Err(Error::GenusOutOfRange(genus, 1, max_genus));
    }
    let mut interiors: Vec<LatticePolygon> = match genus {
        1 => vec![LatticePolygon::point(LatticePoint::new(0, 0))],
        g => {
            let seg = LatticePolygon::from_vertices(&[(0, 0), (g - 1, 0)])?;
            let mut v: Vec<LatticePolygon> =
                convex_polygons(g as usize).into_par_iter().filter(is_interior_polygon).collect();
            v.push(normal_form(&seg).0);
            v
        }
    };
    interiors.sort_by_key(sort_key);
    let prints = fingerprints(&interiors)?;
    let entries = interiors
        .into_iter()
        .zip(prints)
        .map(|(interior, fingerprint)| {
            let max_polygon = max_polygon(&interior)?;
            Ok(CensusEntry { interior, max_polygon, fingerprint })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GenusCensus { genus, entries })
}

impl GenusCensus {
    /// One JSON object per line: `{fingerprint, genus, maxVertices, vertices}`.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let line = serde_json::json!({
                "genus": self.genus,
                "vertices": e.interior,
                "maxVertices": e.max_polygon,
                "fingerprint": e.fingerprint,
            });
            out.push_str(&line.to_string());
            out.push('\n');
        }
        out
    }

    pub fn partition(&self) -> Vec<Vec<usize>> {
        let prints: Vec<CurveFingerprint> = self.entries.iter().map(|e| e.fingerprint.clone()).collect();
        partition_by_fingerprint(&prints)
    }
}

/// `genus,count` rows for the given genera.
pub fn census_csv(genera: &[i64]) -> Result<String> {
    let mut out = String::from("genus,count\n");
    for &g in genera {
        out.push_str(&format!("{g},{}\n", enumerate_interior_polygons(g)?.entries.len()));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CensusReport {
    pub genus: i64,
    pub count: usize,
    pub entries: Vec<CensusEntry>,
    /// Blocks of entry indices with equal fingerprints.
    pub partition: Vec<Vec<usize>>,
    pub non_singleton_blocks: usize,
}

pub fn census_report(genus: i64) -> Result<CensusReport> {
    let census = enumerate_interior_polygons(genus)?;
    let partition = census.partition();
    let non_singleton_blocks = partition.iter().filter(|b| b.len() > 1).count();
    Ok(CensusReport { genus, count: census.entries.len(), entries: census.entries, partition, non_singleton_blocks })
}
