//! Combinatorial invariants of curves that are non-degenerate with respect to a
//! lattice polygon Δ: gonality, Clifford data, pencils, scrollar and Schreyer
//! invariants, special shapes, plane and ℙ¹×ℙ¹ models.

pub mod betti;
pub mod fingerprint;
pub mod secondary;

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::adjunction::interior_hull;
use crate::error::{Error, Result};
use crate::lattice::{apply_map, gcd, is_primitive, LatticePolygon};
use crate::normal_form::normal_form;
use crate::width::{lattice_width, lattice_width_opt, normalize_to_strip, width_along};

pub use betti::{predicted_betti, BettiFlag, BettiTable};
pub use fingerprint::{distinguishability_partition, fingerprint, partition_by_fingerprint, CurveFingerprint};
pub use secondary::{
    epsilon, is_well_aligned, pair_terms, secondary_scrollar_invariants, SecondaryInvariants,
    WellAlignment,
};

fn poly(v: &[(i64, i64)]) -> LatticePolygon {
    LatticePolygon::from_vertices(v).expect("hard-coded polygon")
}

pub fn upsilon() -> LatticePolygon {
    poly(&[(-1, -1), (1, 0), (0, 1)])
}

/// `dΣ = conv{(0,0),(d,0),(0,d)}`, `d >= 1`.
pub fn standard_simplex(d: i64) -> LatticePolygon {
    poly(&[(0, 0), (d, 0), (0, d)])
}

pub fn gamma_five(i: u8) -> LatticePolygon {
    match i {
        1 => poly(&[(0, 1), (1, 0), (2, 1), (1, 2)]),
        2 => poly(&[(0, 1), (1, 0), (2, 0), (1, 2)]),
        3 => poly(&[(0, 0), (2, 0), (1, 2)]),
        _ => panic!("no Γ⁵ with index {i}"),
    }
}

struct ShapeForms {
    upsilon: LatticePolygon,
    two_upsilon: LatticePolygon,
    gamma_five: [LatticePolygon; 3],
}

fn shape_forms() -> &'static ShapeForms {
    static FORMS: OnceLock<ShapeForms> = OnceLock::new();
    FORMS.get_or_init(|| ShapeForms {
        upsilon: normal_form(&upsilon()).0,
        two_upsilon: normal_form(&upsilon().scale(2)).0,
        gamma_five: [1, 2, 3].map(|i| normal_form(&gamma_five(i)).0),
    })
}

/// Recognized classes of (interior) polygons.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpecialShape {
    Empty,
    Point,
    /// A segment with `k` lattice points.
    Segment(usize),
    StandardSimplexMultiple(i64),
    Upsilon,
    TwoUpsilon,
    GammaFive(u8),
    /// `[0,a]×[0,b]` with `a >= b >= 1`.
    Rectangle(i64, i64),
    Generic,
}

impl fmt::Display for SpecialShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecialShape::Empty => write!(f, "Empty"),
            SpecialShape::Point => write!(f, "Point"),
            SpecialShape::Segment(k) => write!(f, "Segment({k})"),
            SpecialShape::StandardSimplexMultiple(d) => write!(f, "StandardSimplexMultiple({d})"),
            SpecialShape::Upsilon => write!(f, "Upsilon"),
            SpecialShape::TwoUpsilon => write!(f, "TwoUpsilon"),
            SpecialShape::GammaFive(i) => write!(f, "GammaFive({i})"),
            SpecialShape::Rectangle(a, b) => write!(f, "Rectangle({a},{b})"),
            SpecialShape::Generic => write!(f, "Generic"),
        }
    }
}

impl std::str::FromStr for SpecialShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown shape {s:?}"));
        let (tag, args) = match s.split_once('(') {
            Some((t, rest)) => (t, rest.strip_suffix(')').ok_or_else(bad)?),
            None => (s, ""),
        };
        let nums: Vec<i64> = if args.is_empty() {
            vec![]
        } else {
            args.split(',').map(|x| x.trim().parse().map_err(|_| bad())).collect::<Result<_>>()?
        };
        Ok(match (tag, nums.as_slice()) {
            ("Empty", []) => SpecialShape::Empty,
            ("Point", []) => SpecialShape::Point,
            ("Segment", [k]) if *k >= 2 => SpecialShape::Segment(*k as usize),
            ("StandardSimplexMultiple", [d]) if *d >= 1 => SpecialShape::StandardSimplexMultiple(*d),
            ("Upsilon", []) => SpecialShape::Upsilon,
            ("TwoUpsilon", []) => SpecialShape::TwoUpsilon,
            ("GammaFive", [i]) if (1..=3).contains(i) => SpecialShape::GammaFive(*i as u8),
            ("Rectangle", [a, b]) if a >= b && *b >= 1 => SpecialShape::Rectangle(*a, *b),
            ("Generic", []) => SpecialShape::Generic,
            _ => return Err(bad()),
        })
    }
}

impl Serialize for SpecialShape {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SpecialShape {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Shape class of `g` (which is usually an interior polygon).
pub fn classify_special(g: &LatticePolygon) -> SpecialShape {
    match g.dimension() {
        0 => return SpecialShape::Point,
        1 => return SpecialShape::Segment(g.boundary_count()),
        _ => {}
    }
    let nf = normal_form(g).0;
    let a2 = g.area2() as i64;
    let d = (a2 as f64).sqrt().round() as i64;
    if g.vertex_count() == 3 && d * d == a2 && nf == normal_form(&standard_simplex(d)).0 {
        return SpecialShape::StandardSimplexMultiple(d);
    }
    let forms = shape_forms();
    if nf == forms.upsilon {
        return SpecialShape::Upsilon;
    }
    if nf == forms.two_upsilon {
        return SpecialShape::TwoUpsilon;
    }
    if let Some(k) = forms.gamma_five.iter().position(|f| *f == nf) {
        return SpecialShape::GammaFive(k as u8 + 1);
    }
    if g.vertex_count() == 4 && a2 % 2 == 0 {
        let ab = a2 / 2;
        for b in (1..).take_while(|b| b * b <= ab) {
            if ab % b == 0 {
                let a = ab / b;
                if nf == normal_form(&poly(&[(0, 0), (a, 0), (a, b), (0, b)])).0 {
                    return SpecialShape::Rectangle(a, b);
                }
            }
        }
    }
    SpecialShape::Generic
}

/// Shape class of an optional interior hull.
pub fn classify_optional(g: Option<&LatticePolygon>) -> SpecialShape {
    g.map_or(SpecialShape::Empty, classify_special)
}

fn require_2d(p: &LatticePolygon) -> Result<()> {
    if p.dimension() < 2 {
        return Err(Error::NotTwoDimensional);
    }
    Ok(())
}

pub fn is_hyperelliptic(p: &LatticePolygon) -> bool {
    matches!(interior_hull(p), Some(i) if i.dimension() == 1)
}

/// Combinatorial gonality: `lw(Δ⁽¹⁾) + 2`, or 3 when `Δ⁽¹⁾ ≅ Υ`.
pub fn gonality(p: &LatticePolygon) -> Result<i64> {
    require_2d(p)?;
    let int = interior_hull(p);
    if classify_optional(int.as_ref()) == SpecialShape::Upsilon {
        return Ok(3);
    }
    Ok(lattice_width_opt(int.as_ref()) + 2)
}

/// `(ci, cd)`; genus 1 to 3 use the usual low-genus conventions.
pub fn clifford(p: &LatticePolygon) -> Result<(i64, i64)> {
    require_2d(p)?;
    let int = interior_hull(p).ok_or(Error::Undefined("Clifford index of a rational curve"))?;
    let g = int.lattice_count();
    if g <= 3 {
        let ci = i64::from(g == 3 && int.dimension() == 2);
        return Ok((ci, 1));
    }
    Ok(match classify_special(&int) {
        SpecialShape::StandardSimplexMultiple(k) if k >= 2 => (k - 1, 2),
        SpecialShape::Upsilon => (1, 1),
        SpecialShape::TwoUpsilon => (3, 3),
        _ => (lattice_width(&int).width, 1),
    })
}

/// Width directions of Δ, which compute the gonality pencils; `None` for the
/// classes `2Υ` and `dΣ` (`d >= 2`) where no combinatorial pencil exists.
pub fn pencils(p: &LatticePolygon) -> Result<Option<Vec<(i64, i64)>>> {
    let gon = gonality(p)?;
    let w = lattice_width(p);
    Ok((w.width == gon).then_some(w.directions))
}

/// Row data of `Δ⁽¹⁾` in strip coordinates along a direction `v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct RowProfile {
    pub gamma: i64,
    pub direction: (i64, i64),
    /// `e[ℓ-1] = E_ℓ` for `ℓ = 1..γ-1`.
    pub e: Vec<i64>,
    pub i_minus: Vec<i64>,
    pub i_plus: Vec<i64>,
}

impl RowProfile {
    pub fn e_at(&self, l: i64) -> i64 {
        self.e[(l - 1) as usize]
    }
    pub fn i_minus_at(&self, l: i64) -> i64 {
        self.i_minus[(l - 1) as usize]
    }
    pub fn i_plus_at(&self, l: i64) -> i64 {
        self.i_plus[(l - 1) as usize]
    }
}

/// Every row `1..γ-1` of the interior must be non-empty.
pub fn row_profile(p: &LatticePolygon, v: (i64, i64)) -> Result<RowProfile> {
    require_2d(p)?;
    let gamma = width_along(p, v)?;
    let m = normalize_to_strip(p, v)?;
    let int = interior_hull(p).map(|q| apply_map(&q, &m));
    let (mut e, mut i_minus, mut i_plus) = (vec![], vec![], vec![]);
    for l in 1..gamma {
        let (lo, hi) = int
            .as_ref()
            .and_then(|q| q.row_range(l))
            .ok_or(Error::Precondition("interior misses a row of the strip"))?;
        e.push(hi - lo);
        i_minus.push(lo);
        i_plus.push(hi);
    }
    Ok(RowProfile { gamma, direction: v, e, i_minus, i_plus })
}

fn require_width_direction(p: &LatticePolygon, v: (i64, i64)) -> Result<()> {
    if !is_primitive(v) {
        return Err(Error::NonPrimitiveDirection(v.0, v.1));
    }
    if p.spread(v) != lattice_width(p).width {
        return Err(Error::NotWidthDirection(v.0, v.1));
    }
    Ok(())
}

/// Sorted multiset `{E_1, ..., E_{γ-1}}` along the width direction `v`.
pub fn scrollar_invariants(p: &LatticePolygon, v: (i64, i64)) -> Result<Vec<i64>> {
    require_2d(p)?;
    require_width_direction(p, v)?;
    if pencils(p)?.is_none() {
        return Err(Error::ExcludedCase("2Υ and dΣ carry no combinatorial pencil"));
    }
    let mut e = row_profile(p, v)?.e;
    e.sort_unstable();
    Ok(e)
}

/// `h⁰(mD)` for the gonality divisor `D`, from the scrollar invariants.
pub fn h0_sequence(g: i64, scrollar: &[i64], m: i64) -> Result<i64> {
    let gamma = scrollar.len() as i64 + 1;
    let sum: i64 = scrollar.iter().sum();
    if m < 0 {
        return Err(Error::OutOfRange(format!("multiple {m}")));
    }
    if scrollar.iter().any(|&e| e < 0) || sum != g - gamma + 1 {
        return Err(Error::InconsistentScrollar(format!("{scrollar:?} for genus {g}")));
    }
    Ok(m + 1 + scrollar.iter().map(|&e| (m - e - 1).max(0)).sum::<i64>())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchreyerInvariants {
    pub b1: i64,
    pub b2: i64,
    /// `(max, min)` of the pair.
    pub sorted: (i64, i64),
    /// Set when the literal pair has `b1 < b2`.
    pub anomalous: bool,
}

/// `b1 = |∂Δ⁽¹⁾∩ℤ²| - 4`, `b2 = |Δ⁽²⁾∩ℤ²| - 1` for tetragonal Δ.
pub fn schreyer_invariants(p: &LatticePolygon) -> Result<SchreyerInvariants> {
    if gonality(p)? != 4 {
        return Err(Error::NotTetragonal);
    }
    let int = interior_hull(p).ok_or(Error::NotTetragonal)?;
    let b1 = int.boundary_count() as i64 - 4;
    let b2 = int.interior_count() as i64 - 1;
    Ok(SchreyerInvariants { b1, b2, sorted: (b1.max(b2), b1.min(b2)), anomalous: b1 < b2 })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CabCurve {
    pub polygon: LatticePolygon,
    pub genus: i64,
    pub gonality: i64,
}

/// `Δ_{a,b} = conv{(b,0),(0,a),(0,0)}`, the Newton polygon of a `C_{a,b}` curve.
pub fn cab_polygon(a: i64, b: i64) -> Result<CabCurve> {
    if a < 2 || b < 2 {
        return Err(Error::OutOfRange(format!("C_(a,b) needs a, b >= 2, got ({a},{b})")));
    }
    if gcd(a, b) != 1 {
        return Err(Error::NotCoprime(a, b));
    }
    let polygon = poly(&[(0, 0), (b, 0), (0, a)]);
    let genus = polygon.interior_count() as i64;
    let gonality = gonality(&polygon)?;
    Ok(CabCurve { polygon, genus, gonality })
}

/// Degree of a smooth plane model, if one exists. Rational curves report 2
/// (conics) unless Δ is the unit simplex itself.
pub fn is_smooth_plane(p: &LatticePolygon) -> Result<Option<i64>> {
    require_2d(p)?;
    if let SpecialShape::StandardSimplexMultiple(d) = classify_special(p) {
        return Ok(Some(d));
    }
    Ok(match classify_optional(interior_hull(p).as_ref()) {
        SpecialShape::Empty => Some(2),
        SpecialShape::Point => Some(3),
        SpecialShape::StandardSimplexMultiple(k) => Some(k + 3),
        _ => None,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ProductModel {
    /// Empty interior.
    Rational,
    /// `Δ⁽¹⁾ ≅ [0,a]×[0,b]`, `a >= b >= 0`.
    Rectangle(i64, i64),
}

/// Whether the curve has a smooth model on `ℙ¹×ℙ¹`.
pub fn is_p1xp1(p: &LatticePolygon) -> Result<Option<ProductModel>> {
    require_2d(p)?;
    if classify_special(p) == SpecialShape::TwoUpsilon {
        return Err(Error::ExcludedCase("2Υ"));
    }
    Ok(match classify_optional(interior_hull(p).as_ref()) {
        SpecialShape::Empty => Some(ProductModel::Rational),
        SpecialShape::Point => Some(ProductModel::Rectangle(0, 0)),
        SpecialShape::Segment(k) => Some(ProductModel::Rectangle(k as i64 - 1, 0)),
        SpecialShape::Rectangle(a, b) => Some(ProductModel::Rectangle(a, b)),
        _ => None,
    })
}
