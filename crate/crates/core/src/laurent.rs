//! Laurent polynomials in two variables, Newton polygons, and certified
//! non-degeneracy testing.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{format_rational, is_prime, parse_rational, Field, PrimeField, Rationals};
use crate::lattice::{convex_hull, cross, det, gcd, AffineUnimodularMap, LatticePoint, LatticePolygon};
use crate::normal_form::normal_form;
use crate::residue;
use crate::upoly::{self, BiPoly, Poly};

pub const DEFAULT_MODULUS: u64 = 10007;
pub const MAX_DRAWS: usize = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CoefficientField {
    Rationals,
    PrimeField(u64),
}

impl CoefficientField {
    pub fn prime(p: u64) -> Result<Self> {
        PrimeField::new(p).map(|_| CoefficientField::PrimeField(p)).ok_or(Error::BadModulus(p))
    }

    pub fn modulus(&self) -> Option<u64> {
        match self {
            CoefficientField::Rationals => None,
            CoefficientField::PrimeField(p) => Some(*p),
        }
    }
}

/// `Σ c_{i,j} x^i y^j` with finitely many nonzero coefficients.
///
/// Over a prime field the coefficients are stored as their representatives in `0..p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "LaurentFile", into = "LaurentFile")]
pub struct LaurentPolynomial {
    field: CoefficientField,
    terms: BTreeMap<LatticePoint, BigRational>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum CoeffText {
    Int(i64),
    Text(String),
}

#[derive(Serialize, Deserialize)]
struct TermRecord {
    i: i64,
    j: i64,
    c: CoeffText,
}

#[derive(Serialize, Deserialize)]
struct LaurentFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    modulus: Option<u64>,
    terms: Vec<TermRecord>,
}

impl TryFrom<LaurentFile> for LaurentPolynomial {
    type Error = Error;
    fn try_from(file: LaurentFile) -> Result<Self> {
        let field = match file.modulus {
            None => CoefficientField::Rationals,
            Some(p) => CoefficientField::prime(p)?,
        };
        let mut terms = Vec::with_capacity(file.terms.len());
        for t in file.terms {
            let c = match t.c {
                CoeffText::Int(n) => BigRational::from_integer(n.into()),
                CoeffText::Text(s) => parse_rational(&s).ok_or_else(|| Error::Parse(format!("bad coefficient {s:?}")))?,
            };
            terms.push((LatticePoint::new(t.i, t.j), c));
        }
        LaurentPolynomial::new(field, terms)
    }
}

impl From<LaurentPolynomial> for LaurentFile {
    fn from(f: LaurentPolynomial) -> Self {
        LaurentFile {
            modulus: f.field.modulus(),
            terms: f
                .terms
                .iter()
                .map(|(p, c)| TermRecord { i: p.i, j: p.j, c: CoeffText::Text(format_rational(c)) })
                .collect(),
        }
    }
}

fn reduce_mod(c: &BigRational, p: u64) -> Result<BigRational> {
    let k = PrimeField::new(p).ok_or(Error::BadModulus(p))?;
    let r = k.from_rational(c).ok_or(Error::Parse(format!("denominator of {} vanishes mod {p}", format_rational(c))))?;
    Ok(BigRational::from_integer(r.into()))
}

impl LaurentPolynomial {
    /// Sums repeated exponents and drops zero coefficients.
    pub fn new<I>(field: CoefficientField, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (LatticePoint, BigRational)>,
    {
        let mut map: BTreeMap<LatticePoint, BigRational> = BTreeMap::new();
        for (p, c) in terms {
            *map.entry(p).or_insert_with(BigRational::zero) += c;
        }
        if let CoefficientField::PrimeField(p) = field {
            for c in map.values_mut() {
                *c = reduce_mod(c, p)?;
            }
        }
        map.retain(|_, c| !c.is_zero());
        if map.is_empty() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(LaurentPolynomial { field, terms: map })
    }

    pub fn from_integers(field: CoefficientField, terms: &[((i64, i64), i64)]) -> Result<Self> {
        Self::new(field, terms.iter().map(|&(p, c)| (LatticePoint::from(p), BigRational::from_integer(c.into()))))
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("polynomial serializes")
    }

    pub fn field(&self) -> CoefficientField {
        self.field
    }

    pub fn terms(&self) -> &BTreeMap<LatticePoint, BigRational> {
        &self.terms
    }

    pub fn support(&self) -> Vec<LatticePoint> {
        self.terms.keys().copied().collect()
    }

    pub fn coefficient(&self, p: LatticePoint) -> Option<&BigRational> {
        self.terms.get(&p)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `f^η = Σ c_p (x,y)^{η(p)}`.
    pub fn apply_map(&self, m: &AffineUnimodularMap) -> LaurentPolynomial {
        LaurentPolynomial {
            field: self.field,
            terms: self.terms.iter().map(|(p, c)| (m.apply(*p), c.clone())).collect(),
        }
    }

    fn sub_polynomial(&self, keep: impl Fn(LatticePoint) -> bool) -> Option<LaurentPolynomial> {
        let terms: BTreeMap<_, _> = self.terms.iter().filter(|(p, _)| keep(**p)).map(|(p, c)| (*p, c.clone())).collect();
        (!terms.is_empty()).then_some(LaurentPolynomial { field: self.field, terms })
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (p, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            let mono: Vec<String> = [("x", p.i), ("y", p.j)]
                .iter()
                .filter(|(_, e)| *e != 0)
                .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
                .collect();
            if mono.is_empty() {
                write!(f, "{}", format_rational(&a))?;
            } else if a.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", format_rational(&a), mono.join("*"))?;
            }
        }
        if let CoefficientField::PrimeField(p) = self.field {
            write!(f, " (mod {p})")?;
        }
        Ok(())
    }
}

pub fn newton_polygon(f: &LaurentPolynomial) -> LatticePolygon {
    convex_hull(f.terms.keys().copied()).expect("support is non-empty")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum Face {
    Vertex { point: LatticePoint },
    Edge { from: LatticePoint, to: LatticePoint },
    Full,
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Face::Vertex { point } => write!(f, "vertex {point}"),
            Face::Edge { from, to } => write!(f, "edge {from}-{to}"),
            Face::Full => write!(f, "full"),
        }
    }
}

/// Vertices, then edges in counterclockwise order, then the polygon itself.
pub fn faces(p: &LatticePolygon) -> Vec<Face> {
    let mut out: Vec<Face> = p.vertices().iter().map(|&point| Face::Vertex { point }).collect();
    if p.dimension() == 2 {
        out.extend(p.edges().into_iter().map(|(from, to)| Face::Edge { from, to }));
    }
    if p.dimension() > 0 {
        out.push(Face::Full);
    }
    out
}

fn face_of(p: &LatticePolygon, face: &Face) -> Option<Face> {
    match *face {
        Face::Full => Some(Face::Full),
        Face::Vertex { point } => p.vertices().contains(&point).then_some(*face),
        Face::Edge { from, to } => p
            .edges()
            .into_iter()
            .find(|&(a, b)| (a, b) == (from, to) || (a, b) == (to, from))
            .filter(|_| p.dimension() == 2)
            .map(|(from, to)| Face::Edge { from, to }),
    }
}

fn on_face(face: &Face, q: LatticePoint) -> bool {
    match *face {
        Face::Full => true,
        Face::Vertex { point } => q == point,
        Face::Edge { from, to } => cross(from, to, q) == 0,
    }
}

/// `f_τ`: the terms of `f` supported on a face of `Δ(f)`.
pub fn face_restriction(f: &LaurentPolynomial, face: &Face) -> Result<LaurentPolynomial> {
    let face = face_of(&newton_polygon(f), face).ok_or(Error::ForeignFace)?;
    Ok(f.sub_polynomial(|q| on_face(&face, q)).expect("faces of the Newton polygon carry terms"))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "camelCase")]
pub enum FaceStatus {
    Certified,
    /// Smooth vertex of the container carrying no term.
    Exempt,
    Degenerate { witness: String },
    Undetermined { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct FaceReport {
    pub face: Face,
    #[serde(flatten)]
    pub status: FaceStatus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "camelCase")]
pub enum VerdictStatus {
    CertifiedNondegenerate,
    DegenerateWitnessed { face: Face, witness: String },
    Undetermined,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct NondegeneracyVerdict {
    #[serde(flatten)]
    pub status: VerdictStatus,
    pub per_face: Vec<FaceReport>,
}

impl NondegeneracyVerdict {
    fn from_reports(per_face: Vec<FaceReport>) -> Self {
        let degenerate = per_face.iter().find_map(|r| match &r.status {
            FaceStatus::Degenerate { witness } => Some((r.face, witness.clone())),
            _ => None,
        });
        let status = if let Some((face, witness)) = degenerate {
            VerdictStatus::DegenerateWitnessed { face, witness }
        } else if per_face.iter().all(|r| matches!(r.status, FaceStatus::Certified | FaceStatus::Exempt)) {
            VerdictStatus::CertifiedNondegenerate
        } else {
            VerdictStatus::Undetermined
        };
        NondegeneracyVerdict { status, per_face }
    }

    pub fn is_certified(&self) -> bool {
        self.status == VerdictStatus::CertifiedNondegenerate
    }

    pub fn is_degenerate(&self) -> bool {
        matches!(self.status, VerdictStatus::DegenerateWitnessed { .. })
    }
}

/// Checks `f`, `x∂f/∂x`, `y∂f/∂y` for common zeros on the torus, one face at a time.
pub fn is_nondegenerate(f: &LaurentPolynomial) -> Result<NondegeneracyVerdict> {
    let delta = newton_polygon(f);
    if delta.dimension() != 2 {
        return Err(Error::NotTwoDimensional);
    }
    let reports = faces(&delta)
        .into_iter()
        .map(|face| {
            let part = f.sub_polynomial(|q| on_face(&face, q));
            FaceReport { face, status: face_status(part.as_ref()) }
        })
        .collect();
    Ok(NondegeneracyVerdict::from_reports(reports))
}

/// Smooth: the primitive edge directions at the vertex span `ℤ²`.
pub fn is_smooth_vertex(p: &LatticePolygon, v: LatticePoint) -> bool {
    let vs = p.vertices();
    let Some(k) = vs.iter().position(|&q| q == v) else { return false };
    if p.dimension() != 2 {
        return false;
    }
    let n = vs.len();
    let prim = |a: LatticePoint, b: LatticePoint| {
        let d = (b.i - a.i, b.j - a.j);
        let g = gcd(d.0, d.1);
        (d.0 / g, d.1 / g)
    };
    det(prim(v, vs[(k + 1) % n]), prim(v, vs[(k + n - 1) % n])).abs() == 1
}

/// Non-degeneracy over the faces of a container polygon, with smooth vertices exempt.
pub fn is_weakly_nondegenerate(f: &LaurentPolynomial, container: &LatticePolygon) -> Result<NondegeneracyVerdict> {
    if container.dimension() != 2 {
        return Err(Error::NotTwoDimensional);
    }
    if let Some(&q) = f.terms.keys().find(|&&q| !container.contains(q)) {
        return Err(Error::SupportOutsideContainer(q));
    }
    let reports = faces(container)
        .into_iter()
        .map(|face| {
            let part = f.sub_polynomial(|q| on_face(&face, q));
            let status = match (face, &part) {
                (Face::Vertex { point }, None) if is_smooth_vertex(container, point) => FaceStatus::Exempt,
                _ => face_status(part.as_ref()),
            };
            FaceReport { face, status }
        })
        .collect();
    Ok(NondegeneracyVerdict::from_reports(reports))
}

fn face_status(part: Option<&LaurentPolynomial>) -> FaceStatus {
    let Some(g) = part else {
        return FaceStatus::Degenerate { witness: "face polynomial vanishes identically".into() };
    };
    match newton_polygon(g).dimension() {
        0 => FaceStatus::Certified,
        1 => match g.field {
            CoefficientField::Rationals => edge_status(&Rationals, g),
            CoefficientField::PrimeField(p) => edge_status(&PrimeField::new(p).expect("checked prime"), g),
        },
        _ => interior_status(g),
    }
}

/// Exponent matrix `M` of the chart in which the full face is decided.
type Chart = [[i64; 2]; 2];

const IDENTITY: Chart = [[1, 0], [0, 1]];

fn box_size(p: &LatticePolygon) -> i128 {
    (p.spread((1, 0)) as i128 + 1) * (p.spread((0, 1)) as i128 + 1)
}

/// Decides the full face in the normal-form chart when that shrinks the bounding box.
fn interior_status(g: &LaurentPolynomial) -> FaceStatus {
    let delta = newton_polygon(g);
    let (nf, map) = normal_form(&delta);
    let (g, chart) = if box_size(&nf) < box_size(&delta) {
        let linear = AffineUnimodularMap::linear(map.matrix).expect("unimodular");
        (g.apply_map(&linear), map.matrix)
    } else {
        (g.clone(), IDENTITY)
    };
    match g.field {
        CoefficientField::Rationals => interior_status_q(&g, chart),
        CoefficientField::PrimeField(p) => interior_status_p(&PrimeField::new(p).expect("checked prime"), &g, chart),
    }
}

fn elems<F: Field>(k: &F, g: &LaurentPolynomial) -> Vec<(LatticePoint, F::Elem)> {
    g.terms.iter().map(|(p, c)| (*p, k.from_rational(c).expect("coefficients reduce"))).collect()
}

fn format_poly<F: Field>(k: &F, a: &[F::Elem], var: &str) -> String {
    let mut out = String::new();
    for (e, c) in a.iter().enumerate().rev() {
        if k.is_zero(c) {
            continue;
        }
        let c = k.to_rational(c);
        let sign = if c.is_negative() { "-" } else { "+" };
        let mag = format_rational(&c.abs());
        let term = match (e, mag.as_str()) {
            (0, _) => mag,
            (1, "1") => var.to_string(),
            (_, "1") => format!("{var}^{e}"),
            (1, _) => format!("{mag}*{var}"),
            _ => format!("{mag}*{var}^{e}"),
        };
        if out.is_empty() {
            out = if sign == "-" { format!("-{term}") } else { term };
        } else {
            out.push_str(&format!(" {sign} {term}"));
        }
    }
    out
}

/// Collinear support: squarefreeness of the edge polynomial `q(t)`, where
/// `f_τ = (x,y)^a · q((x,y)^d)` for the primitive edge direction `d`.
fn edge_status<F: Field>(k: &F, g: &LaurentPolynomial) -> FaceStatus {
    let pts = g.support();
    let (a, b) = (pts[0], *pts.last().unwrap());
    let n = gcd(b.i - a.i, b.j - a.j);
    let d = ((b.i - a.i) / n, (b.j - a.j) / n);
    let mut q = vec![k.zero(); n as usize + 1];
    for (p, c) in elems(k, g) {
        let t = if d.0 != 0 { (p.i - a.i) / d.0 } else { (p.j - a.j) / d.1 };
        q[t as usize] = c;
    }
    let h = upoly::gcd(k, &q, &upoly::derivative(k, &q));
    if h.len() <= 1 {
        FaceStatus::Certified
    } else {
        FaceStatus::Degenerate { witness: format!("edge polynomial has the repeated factor {}", format_poly(k, &h, "t")) }
    }
}

/// `g₁ = f`, `g₂ = x f_x`, `g₃ = y f_y`, each shifted into `K[x][y]`.
fn shifted_system<F: Field>(k: &F, terms: &[(LatticePoint, F::Elem)]) -> [BiPoly<F>; 3] {
    let i0 = terms.iter().map(|(p, _)| p.i).min().unwrap();
    let j0 = terms.iter().map(|(p, _)| p.j).min().unwrap();
    let dy = terms.iter().map(|(p, _)| p.j - j0).max().unwrap() as usize;
    let dx = terms.iter().map(|(p, _)| p.i - i0).max().unwrap() as usize;
    let mut out: [BiPoly<F>; 3] = std::array::from_fn(|_| vec![vec![k.zero(); dx + 1]; dy + 1]);
    for (p, c) in terms {
        let (x, y) = ((p.i - i0) as usize, (p.j - j0) as usize);
        out[0][y][x] = c.clone();
        out[1][y][x] = k.mul(c, &k.from_i64(p.i));
        out[2][y][x] = k.mul(c, &k.from_i64(p.j));
    }
    out.map(|g| {
        let mut g: BiPoly<F> = g.into_iter().map(|row| upoly::trim(k, row)).collect();
        while g.last().is_some_and(|r| r.is_empty()) {
            g.pop();
        }
        g
    })
}

fn laurent_eval<F: Field>(k: &F, terms: &[(LatticePoint, F::Elem)], weight: impl Fn(LatticePoint) -> i64, x: &F::Elem, y: &F::Elem) -> F::Elem {
    let power = |b: &F::Elem, e: i64| {
        let p = k.pow(b, e.unsigned_abs());
        if e < 0 {
            k.inv(&p)
        } else {
            p
        }
    };
    terms.iter().fold(k.zero(), |acc, (p, c)| {
        let t = k.mul(&k.mul(c, &k.from_i64(weight(*p))), &k.mul(&power(x, p.i), &power(y, p.j)));
        k.add(&acc, &t)
    })
}

fn is_singular_point<F: Field>(k: &F, terms: &[(LatticePoint, F::Elem)], x: &F::Elem, y: &F::Elem) -> bool {
    !k.is_zero(x)
        && !k.is_zero(y)
        && k.is_zero(&laurent_eval(k, terms, |_| 1, x, y))
        && k.is_zero(&laurent_eval(k, terms, |p| p.i, x, y))
        && k.is_zero(&laurent_eval(k, terms, |p| p.j, x, y))
}

fn specialize_x<F: Field>(k: &F, g: &BiPoly<F>, x: &F::Elem) -> Poly<F> {
    upoly::trim(k, g.iter().map(|c| upoly::eval(k, c, x)).collect())
}

/// For each candidate `x₀` killing `h`, searches roots of the specialized system in `y`.
fn search_witness<F: Field>(
    k: &F,
    terms: &[(LatticePoint, F::Elem)],
    sys: &[BiPoly<F>; 3],
    h: &[F::Elem],
    roots: impl Fn(&[F::Elem]) -> Vec<F::Elem>,
) -> Option<(F::Elem, F::Elem)> {
    for x0 in roots(h) {
        let parts: Vec<Poly<F>> = sys.iter().map(|g| specialize_x(k, g, &x0)).collect();
        let hy = parts.iter().fold(Vec::new(), |acc, p| upoly::gcd(k, &acc, p));
        if hy.len() <= 1 {
            continue;
        }
        for y0 in roots(&hy) {
            if is_singular_point(k, terms, &x0, &y0) {
                return Some((x0, y0));
            }
        }
    }
    None
}

fn witness_text<F: Field>(k: &F, chart: Chart, u: &F::Elem, v: &F::Elem) -> String {
    // x^p y^q = u^(Mp)_1 v^(Mp)_2, so x = u^M00 v^M10 and y = u^M01 v^M11
    let power = |b: &F::Elem, e: i64| {
        let p = k.pow(b, e.unsigned_abs());
        if e < 0 {
            k.inv(&p)
        } else {
            p
        }
    };
    let x = k.mul(&power(u, chart[0][0]), &power(v, chart[1][0]));
    let y = k.mul(&power(u, chart[0][1]), &power(v, chart[1][1]));
    format!(
        "singular torus point (x,y) = ({},{})",
        format_rational(&k.to_rational(&x)),
        format_rational(&k.to_rational(&y))
    )
}

/// The chart coordinate `u` as a monomial in `x`, `y`.
fn chart_u(chart: Chart) -> String {
    let inv = AffineUnimodularMap::linear(chart).expect("unimodular").inverse();
    let (a, b) = (inv.matrix[0][0], inv.matrix[1][0]);
    let pow = |v: &str, e: i64| match e {
        0 => None,
        1 => Some(v.to_string()),
        _ => Some(format!("{v}^{e}")),
    };
    [pow("x", a), pow("y", b)].into_iter().flatten().collect::<Vec<_>>().join("*")
}

/// Exact decision once every common root has its `x`-coordinate among the roots of `h`.
fn algebraic_status<F: Field>(k: &F, chart: Chart, sys: &[BiPoly<F>; 3], h: &[F::Elem]) -> FaceStatus {
    // In characteristic zero the squarefree part has the same roots; in
    // characteristic p it might not, and dynamic evaluation does not need it.
    let dh = upoly::derivative(k, h);
    let m = if k.characteristic() == 0 && !dh.is_empty() {
        upoly::exact_div(k, h, &upoly::gcd(k, h, &dh))
    } else {
        h.to_vec()
    };
    let mut singular: Vec<Poly<F>> = Vec::new();
    for (mi, g12) in residue::gcd_branches(k, m, &sys[0], &sys[1]) {
        for (mj, g) in residue::gcd_branches(k, mi, &g12, &sys[2]) {
            singular.extend(residue::nonzero_root_branches(k, mj, &g));
        }
    }
    if singular.is_empty() {
        return FaceStatus::Certified;
    }
    let m = singular.iter().fold(vec![k.one()], |acc: Poly<F>, mi| upoly::mul(k, &acc, mi));
    let m = format_poly(k, &upoly::monic(k, &m), "u");
    FaceStatus::Degenerate { witness: format!("singular torus points with u = {} a root of {m}", chart_u(chart)) }
}

/// Drops a vanishing resultant in favour of the other one.
fn combined_resultant<F: Field>(k: &F, r1: &[F::Elem], r2: &[F::Elem]) -> Poly<F> {
    match (r1.is_empty(), r2.is_empty()) {
        (true, _) => r2.to_vec(),
        (_, true) => r1.to_vec(),
        _ => upoly::gcd(k, r1, r2),
    }
}

const BRUTE_FORCE_LIMIT: u64 = 1 << 20;

fn interior_status_p(k: &PrimeField, g: &LaurentPolynomial, chart: Chart) -> FaceStatus {
    let terms = elems(k, g);
    let sys = shifted_system(k, &terms);
    let r1 = upoly::strip_x(k, &upoly::resultant_y(k, &sys[0], &sys[1]));
    let r2 = upoly::strip_x(k, &upoly::resultant_y(k, &sys[0], &sys[2]));
    let h = combined_resultant(k, &r1, &r2);
    if h.len() == 1 {
        return FaceStatus::Certified;
    }
    if h.is_empty() {
        return FaceStatus::Undetermined { reason: "both resultants vanish identically".into() };
    }
    if k.modulus() <= BRUTE_FORCE_LIMIT {
        let roots = |a: &[u64]| -> Vec<u64> { (1..k.modulus()).filter(|x| upoly::eval(k, a, x) == 0).collect() };
        if let Some((x, y)) = search_witness(k, &terms, &sys, &h, roots) {
            return FaceStatus::Degenerate { witness: witness_text(k, chart, &x, &y) };
        }
    }
    algebraic_status(k, chart, &sys, &h)
}

// Primes just below 2^62.
const GOOD_PRIME_CANDIDATES: usize = 16;

fn modular_primes() -> impl Iterator<Item = u64> {
    let mut n = (1u64 << 62) - 1;
    std::iter::from_fn(move || {
        while !is_prime(n) {
            n -= 2;
        }
        let p = n;
        n -= 2;
        Some(p)
    })
    .take(GOOD_PRIME_CANDIDATES)
}

/// Integer multiple of a rational polynomial (denominators cleared).
fn integer_poly(a: &[BigRational]) -> Vec<BigInt> {
    let l = a.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    a.iter().map(|c| (c * BigRational::from_integer(l.clone())).to_integer()).collect()
}

/// `gcd(r₁, r₂)` is constant over `ℚ` if it is constant modulo a prime that
/// divides neither the leading nor the trailing coefficients.
fn modular_gcd_is_constant(r1: &[BigRational], r2: &[BigRational]) -> bool {
    let (a, b) = (integer_poly(r1), integer_poly(r2));
    for p in modular_primes() {
        let k = PrimeField::new(p).unwrap();
        let bad = |v: &[BigInt]| k.reduce_bigint(&v[0]) == 0 || k.reduce_bigint(v.last().unwrap()) == 0;
        if bad(&a) || bad(&b) {
            continue;
        }
        let ap: Vec<u64> = a.iter().map(|c| k.reduce_bigint(c)).collect();
        let bp: Vec<u64> = b.iter().map(|c| k.reduce_bigint(c)).collect();
        return upoly::gcd(&k, &ap, &bp).len() == 1;
    }
    false
}

const DIVISOR_LIMIT: u64 = 1 << 40;

fn divisors(n: &BigInt) -> Option<Vec<u64>> {
    let n = n.abs().to_u64().filter(|&n| n <= DIVISOR_LIMIT)?;
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            out.push(n / d);
        }
        d += 1;
    }
    Some(out)
}

/// Nonzero rational roots by the rational root theorem; empty when the
/// extreme coefficients are too large to factor by trial division.
fn rational_roots(a: &[BigRational]) -> Vec<BigRational> {
    let a = upoly::strip_x(&Rationals, a);
    if a.len() < 2 {
        return vec![];
    }
    let z = integer_poly(&a);
    let (Some(num), Some(den)) = (divisors(&z[0]), divisors(z.last().unwrap())) else { return vec![] };
    let mut out = Vec::new();
    for &p in &num {
        for &q in &den {
            for s in [1i64, -1] {
                let r = BigRational::new(BigInt::from(s) * BigInt::from(p), BigInt::from(q));
                if !out.contains(&r) && upoly::eval(&Rationals, &a, &r).is_zero() {
                    out.push(r);
                }
            }
        }
    }
    out.sort();
    out
}

fn interior_status_q(g: &LaurentPolynomial, chart: Chart) -> FaceStatus {
    let k = Rationals;
    let terms = elems(&k, g);
    let sys = shifted_system(&k, &terms);
    let r1 = upoly::strip_x(&k, &upoly::resultant_y(&k, &sys[0], &sys[1]));
    let r2 = upoly::strip_x(&k, &upoly::resultant_y(&k, &sys[0], &sys[2]));
    if r1.len() == 1 || r2.len() == 1 {
        return FaceStatus::Certified;
    }
    if !r1.is_empty() && !r2.is_empty() && modular_gcd_is_constant(&r1, &r2) {
        return FaceStatus::Certified;
    }
    let h = combined_resultant(&k, &r1, &r2);
    if h.len() == 1 {
        return FaceStatus::Certified;
    }
    if h.is_empty() {
        return FaceStatus::Undetermined { reason: "both resultants vanish identically".into() };
    }
    if let Some((x, y)) = search_witness(&k, &terms, &sys, &h, rational_roots) {
        return FaceStatus::Degenerate { witness: witness_text(&k, chart, &x, &y) };
    }
    algebraic_status(&k, chart, &sys, &h)
}

/// Rational coefficients are drawn as `a/b` with `|a|, b <= RATIONAL_HEIGHT`.
pub const RATIONAL_HEIGHT: i64 = 16;

/// Draws coefficients on every lattice point of `delta` (nonzero on vertices) until
/// the result is certified non-degenerate. Returns the polynomial and the number of draws.
pub fn random_nondegenerate_counted(
    delta: &LatticePolygon,
    field: CoefficientField,
    seed: u64,
) -> Result<(LaurentPolynomial, usize)> {
    if delta.dimension() != 2 {
        return Err(Error::NotTwoDimensional);
    }
    if let CoefficientField::PrimeField(p) = field {
        if p < 1009 || !is_prime(p) {
            return Err(Error::BadModulus(p));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points = delta.lattice_points();
    for draw in 1..=MAX_DRAWS {
        let terms = points.iter().map(|&q| {
            let vertex = delta.vertices().contains(&q);
            let c = match field {
                CoefficientField::PrimeField(p) => BigRational::from_integer(rng.gen_range(u64::from(vertex)..p).into()),
                CoefficientField::Rationals => {
                    let mut a = 0;
                    while a == 0 {
                        a = rng.gen_range(-RATIONAL_HEIGHT..=RATIONAL_HEIGHT);
                        if !vertex {
                            break;
                        }
                    }
                    BigRational::new(a.into(), rng.gen_range(1..=RATIONAL_HEIGHT).into())
                }
            };
            (q, c)
        });
        let f = LaurentPolynomial::new(field, terms.collect::<Vec<_>>())?;
        if is_nondegenerate(&f)?.is_certified() {
            return Ok((f, draw));
        }
    }
    Err(Error::GiveUp(MAX_DRAWS))
}

pub fn random_nondegenerate(delta: &LatticePolygon, field: CoefficientField, seed: u64) -> Result<LaurentPolynomial> {
    random_nondegenerate_counted(delta, field, seed).map(|(f, _)| f)
}
