//! Fingerprints: the invariants shared by all curves with a given interior polygon.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{
    classify_special, clifford, gonality, is_well_aligned, pencils, schreyer_invariants,
    scrollar_invariants, secondary_scrollar_invariants, SpecialShape,
};
use crate::adjunction::{interior_hull, is_interior_polygon, max_polygon};
use crate::enumeration::enumerate_interior_polygons;
use crate::error::{Error, Result};
use crate::lattice::LatticePolygon;
use crate::normal_form::normal_form;
use crate::width::lattice_width;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SecondaryEntry {
    pub well_aligned: bool,
    /// Present only for well-aligned directions.
    pub multiset: Option<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CurveFingerprint {
    pub genus: usize,
    pub hyperelliptic: bool,
    pub gonality: i64,
    pub clifford_index: i64,
    pub clifford_dimension: i64,
    pub special_shape: SpecialShape,
    pub pencil_pair_count: Option<usize>,
    pub scrollar_multisets: Vec<Vec<i64>>,
    /// Literal `(b1, b2)` for tetragonal curves.
    pub schreyer: Option<(i64, i64)>,
    pub secondary: Option<Vec<SecondaryEntry>>,
    /// Normal form of `Δ⁽¹⁾` for tetragonal curves with `2|Δ⁽²⁾∩ℤ²| != g - 3`,
    /// where the canonical model determines the toric surface of `Δ⁽¹⁾`.
    pub recovered_interior: Option<LatticePolygon>,
    pub n_delta1: usize,
}

/// The fields compared by [`partition_by_fingerprint`]: everything except the
/// vertex count of `Δ⁽¹⁾`, which is not an invariant of the curve.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct CurveKey {
    genus: usize,
    gonality: i64,
    clifford: (i64, i64),
    shape: SpecialShape,
    pencils: Option<usize>,
    scrollar: Vec<Vec<i64>>,
    schreyer: Option<(i64, i64)>,
    secondary: Option<Vec<SecondaryEntry>>,
    recovered: Option<LatticePolygon>,
}

impl CurveFingerprint {
    /// Compact JSON with lexicographically sorted keys.
    pub fn to_json(&self) -> String {
        serde_json::to_value(self).expect("fingerprint serializes").to_string()
    }

    fn key(&self) -> CurveKey {
        CurveKey {
            genus: self.genus,
            gonality: self.gonality,
            clifford: (self.clifford_index, self.clifford_dimension),
            shape: self.special_shape,
            pencils: self.pencil_pair_count,
            scrollar: self.scrollar_multisets.clone(),
            schreyer: self.schreyer,
            secondary: self.secondary.clone(),
            recovered: self.recovered_interior.clone(),
        }
    }

    pub fn same_curve_data(&self, other: &CurveFingerprint) -> bool {
        self.key() == other.key()
    }
}

/// Fingerprint of an interior polygon `g`, computed on `Δ = Δᵐᵃˣ(g)`.
pub fn fingerprint(g: &LatticePolygon) -> Result<CurveFingerprint> {
    if !is_interior_polygon(g) {
        return Err(Error::NotInteriorPolygon);
    }
    let delta = max_polygon(g)?;
    let gon = gonality(&delta)?;
    let (ci, cd) = clifford(&delta)?;
    let dirs = pencils(&delta)?;
    let mut scrollar = Vec::new();
    for &v in dirs.iter().flatten() {
        scrollar.push(scrollar_invariants(&delta, v)?);
    }
    scrollar.sort();
    let schreyer = (gon == 4).then(|| schreyer_invariants(&delta)).transpose()?.map(|s| (s.b1, s.b2));
    let has_second = interior_hull(g).is_some();
    let secondary = match &dirs {
        Some(ds) if lattice_width(&delta).width >= 4 && has_second => {
            let mut entries = Vec::new();
            for &v in ds {
                let aligned = is_well_aligned(&delta, v)?.aligned;
                let multiset = aligned.then(|| secondary_scrollar_invariants(&delta, v)).transpose()?;
                entries.push(SecondaryEntry { well_aligned: aligned, multiset: multiset.map(|s| s.multiset) });
            }
            entries.sort();
            Some(entries)
        }
        _ => None,
    };
    let genus = g.lattice_count();
    let recovered_interior = match schreyer {
        Some((_, b2)) if 2 * (b2 + 1) != genus as i64 - 3 => Some(normal_form(g).0),
        _ => None,
    };
    Ok(CurveFingerprint {
        genus,
        hyperelliptic: g.dimension() == 1,
        gonality: gon,
        clifford_index: ci,
        clifford_dimension: cd,
        special_shape: classify_special(g),
        pencil_pair_count: dirs.as_ref().map(Vec::len),
        scrollar_multisets: scrollar,
        schreyer,
        secondary,
        recovered_interior,
        n_delta1: g.vertex_count(),
    })
}

/// Groups indices with identical curve data, in order of first appearance.
pub fn partition_by_fingerprint(prints: &[CurveFingerprint]) -> Vec<Vec<usize>> {
    let mut index: HashMap<CurveKey, usize> = HashMap::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for (k, fp) in prints.iter().enumerate() {
        let slot = *index.entry(fp.key()).or_insert_with(|| {
            blocks.push(Vec::new());
            blocks.len() - 1
        });
        blocks[slot].push(k);
    }
    blocks
}

/// Fingerprints of many interior polygons, in input order.
pub fn fingerprints(polys: &[LatticePolygon]) -> Result<Vec<CurveFingerprint>> {
    polys.par_iter().map(fingerprint).collect()
}

/// Blocks of census interior polygons of genus `genus` sharing a fingerprint.
pub fn distinguishability_partition(genus: i64) -> Result<Vec<Vec<LatticePolygon>>> {
    let census = enumerate_interior_polygons(genus)?;
    let prints: Vec<CurveFingerprint> = census.entries.iter().map(|e| e.fingerprint.clone()).collect();
    Ok(partition_by_fingerprint(&prints)
        .into_iter()
        .map(|b| b.into_iter().map(|k| census.entries[k].interior.clone()).collect())
        .collect())
}
