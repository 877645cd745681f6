//! ε corrections, well-alignedness and secondary scrollar invariants.

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use super::{pencils, require_2d, require_width_direction, row_profile, RowProfile};
use crate::adjunction::interior_hull;
use crate::error::{Error, Result};
use crate::lattice::{apply_map, is_primitive, LatticePoint, LatticePolygon};
use crate::width::{lattice_width, normalize_to_strip};

/// `ε_{j1,j2}` for `2 <= j1 <= j2 <= γ-2`.
pub fn epsilon(profile: &RowProfile, j1: i64, j2: i64) -> Result<u8> {
    if !(2 <= j1 && j1 <= j2 && j2 <= profile.gamma - 2) {
        return Err(Error::OutOfRange(format!("ε({j1},{j2}) with γ = {}", profile.gamma)));
    }
    let m = |l| profile.i_minus_at(l);
    let p = |l| profile.i_plus_at(l);
    let lower = m(j1) + m(j2) > m(j1 - 1) + m(j2 + 1);
    let upper = p(j1) + p(j2) < p(j1 - 1) + p(j2 + 1);
    Ok(u8::from(lower) + u8::from(upper))
}

/// Height pair chosen for one line of `Δ⁽²⁾` and one boundary point of Δ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlignmentChoice {
    /// `<v, w>` for the points `w` on the line.
    pub line: i64,
    pub point: LatticePoint,
    /// `h1 <= h2`, measured by `<v, ·>`.
    pub heights: (i64, i64),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WellAlignment {
    pub direction: (i64, i64),
    pub aligned: bool,
    pub certificate: Vec<AlignmentChoice>,
    /// First `(line, boundary point)` without a valid height pair.
    pub failure: Option<(i64, LatticePoint)>,
}

impl WellAlignment {
    pub fn heights_for(&self, line: i64, point: LatticePoint) -> Option<(i64, i64)> {
        self.certificate.iter().find(|c| c.line == line && c.point == point).map(|c| c.heights)
    }
}

fn rows_by_height(pts: &[LatticePoint], v: (i64, i64)) -> BTreeMap<i64, Vec<LatticePoint>> {
    let mut rows: BTreeMap<i64, Vec<LatticePoint>> = BTreeMap::new();
    for &q in pts {
        rows.entry(q.dot(v)).or_default().push(q);
    }
    rows
}

/// Checks, for every line `L` of `Δ⁽²⁾` orthogonal to `v` and every boundary
/// point `P` of Δ, that one height pair serves all `w ∈ L`: `P + w = u + u'`
/// with `u, u' ∈ Δ⁽¹⁾` at those heights.
pub fn is_well_aligned(p: &LatticePolygon, v: (i64, i64)) -> Result<WellAlignment> {
    require_2d(p)?;
    if !is_primitive(v) {
        return Err(Error::NonPrimitiveDirection(v.0, v.1));
    }
    let int = interior_hull(p).ok_or(Error::NoSecondInterior)?;
    let int2 = interior_hull(&int).ok_or(Error::NoSecondInterior)?;
    let pts1 = int.lattice_points();
    let set1: HashSet<LatticePoint> = pts1.iter().copied().collect();
    let rows1 = rows_by_height(&pts1, v);
    let rows2 = rows_by_height(&int2.lattice_points(), v);
    let boundary = p.boundary_points();
    let mut certificate = Vec::new();
    for (&line, ws) in &rows2 {
        for &bp in &boundary {
            let target = bp.dot(v) + line;
            let found = rows1.iter().find_map(|(&h1, us)| {
                let h2 = target - h1;
                if h1 > h2 || !rows1.contains_key(&h2) {
                    return None;
                }
                let ok = ws.iter().all(|&w| us.iter().any(|&u| set1.contains(&(bp + w - u))));
                ok.then_some((h1, h2))
            });
            match found {
                Some(heights) => certificate.push(AlignmentChoice { line, point: bp, heights }),
                None => {
                    return Ok(WellAlignment {
                        direction: v,
                        aligned: false,
                        certificate,
                        failure: Some((line, bp)),
                    })
                }
            }
        }
    }
    Ok(WellAlignment { direction: v, aligned: true, certificate, failure: None })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairTerm {
    pub j1: i64,
    pub j2: i64,
    pub value: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowTerm {
    pub height: i64,
    pub value: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SecondaryInvariants {
    pub gamma: i64,
    pub direction: (i64, i64),
    /// `B_{j1,j2} = E_{j1-1} + E_{j2+1} - ε_{j1,j2}`.
    pub pair_terms: Vec<PairTerm>,
    /// `B_ℓ = |Δ⁽²⁾ ∩ row ℓ| - 1`.
    pub row_terms: Vec<RowTerm>,
    /// Sorted union of both term lists.
    pub multiset: Vec<i64>,
    /// Some `E_ℓ` vanishes.
    pub min_e_zero: bool,
}

impl SecondaryInvariants {
    pub fn pair(&self, j1: i64, j2: i64) -> Option<i64> {
        self.pair_terms.iter().find(|t| t.j1 == j1 && t.j2 == j2).map(|t| t.value)
    }
    pub fn row(&self, l: i64) -> Option<i64> {
        self.row_terms.iter().find(|t| t.height == l).map(|t| t.value)
    }
}

fn check_narrow(p: &LatticePolygon) -> Result<()> {
    let lw = lattice_width(p).width;
    if lw < 4 {
        return Err(Error::TooNarrow(lw));
    }
    Ok(())
}

fn pair_terms_of(profile: &RowProfile) -> Result<Vec<PairTerm>> {
    let gamma = profile.gamma;
    let mut out = Vec::new();
    for j1 in 2..=gamma - 2 {
        for j2 in j1..=gamma - 2 {
            let eps = i64::from(epsilon(profile, j1, j2)?);
            let value = profile.e_at(j1 - 1) + profile.e_at(j2 + 1) - eps;
            out.push(PairTerm { j1, j2, value });
        }
    }
    Ok(out)
}

/// The terms `B_{j1,j2}` alone, without the well-alignedness requirement.
pub fn pair_terms(p: &LatticePolygon, v: (i64, i64)) -> Result<Vec<PairTerm>> {
    require_2d(p)?;
    check_narrow(p)?;
    require_width_direction(p, v)?;
    if pencils(p)?.is_none() {
        return Err(Error::ExcludedCase("2Υ and dΣ carry no combinatorial pencil"));
    }
    pair_terms_of(&row_profile(p, v)?)
}

pub fn secondary_scrollar_invariants(p: &LatticePolygon, v: (i64, i64)) -> Result<SecondaryInvariants> {
    require_2d(p)?;
    check_narrow(p)?;
    require_width_direction(p, v)?;
    let int2 = interior_hull(p).and_then(|q| interior_hull(&q)).ok_or(Error::NoSecondInterior)?;
    if pencils(p)?.is_none() {
        return Err(Error::ExcludedCase("2Υ and dΣ carry no combinatorial pencil"));
    }
    if !is_well_aligned(p, v)?.aligned {
        return Err(Error::NotWellAligned(v.0, v.1));
    }
    let profile = row_profile(p, v)?;
    let gamma = profile.gamma;
    let pair_terms = pair_terms_of(&profile)?;
    let strip2 = apply_map(&int2, &normalize_to_strip(p, v)?);
    let row_terms: Vec<RowTerm> = (2..=gamma - 2)
        .map(|l| {
            let n = strip2.row_range(l).map_or(0, |(a, b)| b - a + 1);
            RowTerm { height: l, value: n - 1 }
        })
        .collect();
    let mut multiset: Vec<i64> =
        pair_terms.iter().map(|t| t.value).chain(row_terms.iter().map(|t| t.value)).collect();
    multiset.sort_unstable();
    let min_e_zero = profile.e.contains(&0);
    Ok(SecondaryInvariants { gamma, direction: v, pair_terms, row_terms, multiset, min_e_zero })
}
