//! Toric binomials, the quadrics `Q_w` of the canonical model, and the
//! discriminant quintic of genus-5 curves with Newton polygon `Δ⁵₁`.

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::adjunction::interior_hull;
use crate::error::{Error, Result};
use crate::field::{format_rational, Field, PrimeField, Rationals};
use crate::invariants::is_well_aligned;
use crate::laurent::{is_nondegenerate, newton_polygon, CoefficientField, LaurentPolynomial};
use crate::lattice::{LatticePoint, LatticePolygon};
use crate::normal_form::equivalent;

/// `X_{lhs[0]} X_{lhs[1]} ... - X_{rhs[0]} X_{rhs[1]} ...`, both sides sorted, `lhs < rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Binomial {
    pub lhs: Vec<LatticePoint>,
    pub rhs: Vec<LatticePoint>,
}

impl Binomial {
    pub fn degree(&self) -> usize {
        self.lhs.len()
    }

    fn exponent_sum(side: &[LatticePoint]) -> LatticePoint {
        side.iter().fold(LatticePoint::new(0, 0), |a, &b| a + b)
    }

    pub fn is_homogeneous_relation(&self) -> bool {
        self.lhs.len() == self.rhs.len() && Self::exponent_sum(&self.lhs) == Self::exponent_sum(&self.rhs)
    }
}

fn multisets(points: &[LatticePoint], k: usize) -> Vec<Vec<LatticePoint>> {
    fn go(points: &[LatticePoint], k: usize, start: usize, cur: &mut Vec<LatticePoint>, out: &mut Vec<Vec<LatticePoint>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for s in start..points.len() {
            cur.push(points[s]);
            go(points, k, s, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(points, k, 0, &mut Vec::new(), &mut out);
    out
}

fn binomials_of_degree(points: &[LatticePoint], k: usize) -> Vec<Binomial> {
    let mut groups: BTreeMap<LatticePoint, Vec<Vec<LatticePoint>>> = BTreeMap::new();
    for m in multisets(points, k) {
        groups.entry(Binomial::exponent_sum(&m)).or_default().push(m);
    }
    let mut out = Vec::new();
    for group in groups.values() {
        for (a, lhs) in group.iter().enumerate() {
            for rhs in &group[a + 1..] {
                // cubics sharing a variable are multiples of quadrics
                if k > 2 && lhs.iter().any(|p| rhs.contains(p)) {
                    continue;
                }
                out.push(Binomial { lhs: lhs.clone(), rhs: rhs.clone() });
            }
        }
    }
    out
}

/// Quadratic binomials of `Tor(g)`, and cubic ones when `g` has fewer than four boundary points.
pub fn toric_binomials(g: &LatticePolygon) -> Result<Vec<Binomial>> {
    if g.dimension() != 2 {
        return Err(Error::NotTwoDimensional);
    }
    let mut pts = g.lattice_points();
    pts.sort();
    let mut out = binomials_of_degree(&pts, 2);
    if g.boundary_count() < 4 {
        out.extend(binomials_of_degree(&pts, 3));
    }
    out.sort();
    Ok(out)
}

pub fn binomial_coefficient(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, t| acc * (n - t) / (t + 1))
}

/// `dim I₂(Tor(g)) = C(N+1, 2) - |2g ∩ ℤ²|`.
pub fn i2_dimension(g: &LatticePolygon) -> Result<usize> {
    if g.dimension() != 2 {
        return Err(Error::NotTwoDimensional);
    }
    Ok(binomial_coefficient(g.lattice_count() + 1, 2) - g.scale(2).lattice_count())
}

/// Rank of a matrix over a field by Gaussian elimination.
pub fn matrix_rank<F: Field>(k: &F, mut rows: Vec<Vec<F::Elem>>) -> usize {
    let ncols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r].get(c).is_some_and(|x| !k.is_zero(x))) else { continue };
        rows.swap(rank, p);
        let inv = k.inv(&rows[rank][c]);
        let pivot = rows[rank].clone();
        for r in rank + 1..rows.len() {
            let Some(x) = rows[r].get(c).filter(|x| !k.is_zero(x)).cloned() else { continue };
            let f = k.mul(&x, &inv);
            for (cc, pv) in pivot.iter().enumerate().skip(c) {
                rows[r][cc] = k.sub(&rows[r][cc], &k.mul(&f, pv));
            }
        }
        rank += 1;
    }
    rank
}

/// Kernel dimension of `X_u X_v ↦ (x,y)^{u+v}` computed by exact elimination.
pub fn i2_dimension_by_rank(g: &LatticePolygon) -> Result<usize> {
    if g.dimension() != 2 {
        return Err(Error::NotTwoDimensional);
    }
    let pts = g.lattice_points();
    let cols: Vec<LatticePoint> = g.scale(2).lattice_points();
    let index: BTreeMap<LatticePoint, usize> = cols.iter().enumerate().map(|(k, &p)| (p, k)).collect();
    let rows: Vec<Vec<BigRational>> = multisets(&pts, 2)
        .into_iter()
        .map(|m| {
            let mut row = vec![BigRational::zero(); cols.len()];
            row[index[&(m[0] + m[1])]] = BigRational::one();
            row
        })
        .collect();
    let n = rows.len();
    Ok(n - matrix_rank(&Rationals, rows))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum GeneratorKind {
    Binomial,
    CanonicalQuadric { w: LatticePoint },
}

/// A quadric `Σ c_{u,v} X_u X_v` in the coordinates of `Δ⁽¹⁾ ∩ ℤ²`, keyed by `u <= v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticGenerator {
    pub kind: GeneratorKind,
    pub coefficients: BTreeMap<(LatticePoint, LatticePoint), BigRational>,
}

#[derive(Serialize)]
struct QuadricTerm<'a> {
    pair: [LatticePoint; 2],
    coeff: &'a str,
}

impl Serialize for QuadraticGenerator {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let text: Vec<(LatticePoint, LatticePoint, String)> =
            self.coefficients.iter().map(|(&(u, v), c)| (u, v, format_rational(c))).collect();
        let terms: Vec<QuadricTerm> = text.iter().map(|(u, v, c)| QuadricTerm { pair: [*u, *v], coeff: c }).collect();
        let mut st = s.serialize_struct("QuadraticGenerator", 2)?;
        st.serialize_field("kind", &self.kind)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

fn ordered(u: LatticePoint, v: LatticePoint) -> (LatticePoint, LatticePoint) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

impl QuadraticGenerator {
    pub fn from_binomial(b: &Binomial) -> Result<Self> {
        if b.degree() != 2 {
            return Err(Error::Precondition("only quadratic binomials are quadrics"));
        }
        let mut coefficients = BTreeMap::new();
        coefficients.insert(ordered(b.lhs[0], b.lhs[1]), BigRational::one());
        coefficients.insert(ordered(b.rhs[0], b.rhs[1]), -BigRational::one());
        Ok(QuadraticGenerator { kind: GeneratorKind::Binomial, coefficients })
    }

    /// `χ(X_u X_v) = (x,y)^{u+v}`, summed termwise.
    pub fn chi(&self) -> BTreeMap<LatticePoint, BigRational> {
        let mut out: BTreeMap<LatticePoint, BigRational> = BTreeMap::new();
        for (&(u, v), c) in &self.coefficients {
            *out.entry(u + v).or_insert_with(BigRational::zero) += c;
        }
        out.retain(|_, c| !c.is_zero());
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecompositionMode {
    /// Lexicographically smallest `u`.
    Lexicographic,
    /// Heights fixed per line of `Δ⁽²⁾` by the well-alignedness certificate for this direction.
    WellAligned((i64, i64)),
}

fn field_of(f: &LaurentPolynomial) -> Option<PrimeField> {
    f.field().modulus().and_then(PrimeField::new)
}

fn same_coefficient(field: Option<&PrimeField>, a: &BigRational, b: &BigRational) -> bool {
    match field {
        None => a == b,
        Some(k) => k.from_rational(a) == k.from_rational(b),
    }
}

/// One `Q_w` per `w ∈ Δ⁽²⁾ ∩ ℤ²`, sorted by `w`, with `χ(Q_w) = (x,y)^w · f`.
pub fn canonical_quadrics(f: &LaurentPolynomial, mode: DecompositionMode) -> Result<Vec<QuadraticGenerator>> {
    if !is_nondegenerate(f)?.is_certified() {
        return Err(Error::Precondition("polynomial is not certified non-degenerate"));
    }
    canonical_quadrics_unchecked(f, mode)
}

/// [`canonical_quadrics`] without the non-degeneracy certificate.
pub fn canonical_quadrics_unchecked(f: &LaurentPolynomial, mode: DecompositionMode) -> Result<Vec<QuadraticGenerator>> {
    let delta = newton_polygon(f);
    let int1 = interior_hull(&delta).filter(|p| p.dimension() == 2).ok_or(Error::NotTwoDimensional)?;
    let int2 = interior_hull(&int1).ok_or(Error::NoSecondInterior)?;
    let mut pts1 = int1.lattice_points();
    pts1.sort();
    let set1: HashSet<LatticePoint> = pts1.iter().copied().collect();
    let alignment = match mode {
        DecompositionMode::Lexicographic => None,
        DecompositionMode::WellAligned(v) => {
            let a = is_well_aligned(&delta, v)?;
            if !a.aligned {
                return Err(Error::NotWellAligned(v.0, v.1));
            }
            Some(a)
        }
    };
    let modulus = field_of(f);
    let mut out = Vec::new();
    for w in int2.lattice_points() {
        let mut coefficients = BTreeMap::new();
        for (&p, c) in f.terms() {
            let target = p + w;
            let pair = match &alignment {
                Some(a) if !set1.contains(&p) => {
                    let v = a.direction;
                    let (h1, _) = a.heights_for(w.dot(v), p).ok_or(Error::DecompositionFailed(p))?;
                    pts1.iter().find(|u| u.dot(v) == h1 && set1.contains(&(target - **u))).map(|&u| (u, target - u))
                }
                Some(_) => Some((p, w)),
                None => pts1.iter().find(|&&u| set1.contains(&(target - u))).map(|&u| (u, target - u)),
            };
            let (u, v) = pair.ok_or(Error::DecompositionFailed(p))?;
            coefficients.insert(ordered(u, v), c.clone());
        }
        let q = QuadraticGenerator { kind: GeneratorKind::CanonicalQuadric { w }, coefficients };
        let chi = q.chi();
        let expected: BTreeMap<LatticePoint, &BigRational> = f.terms().iter().map(|(p, c)| (*p + w, c)).collect();
        let matches = chi.len() == expected.len()
            && chi.iter().all(|(p, c)| expected.get(p).is_some_and(|e| same_coefficient(modulus.as_ref(), c, e)));
        if !matches {
            return Err(Error::Precondition("χ-expansion of a quadric differs from (x,y)^w·f"));
        }
        out.push(q);
    }
    Ok(out)
}

/// Rank of a set of quadrics over the coefficient field, in the monomial basis `X_u X_v`.
pub fn quadric_rank(gens: &[QuadraticGenerator], field: CoefficientField) -> Result<usize> {
    let mut cols: BTreeMap<(LatticePoint, LatticePoint), usize> = BTreeMap::new();
    for g in gens {
        for key in g.coefficients.keys() {
            let n = cols.len();
            cols.entry(*key).or_insert(n);
        }
    }
    let dense = |conv: &dyn Fn(&BigRational) -> Option<BigRational>| -> Result<Vec<Vec<BigRational>>> {
        gens.iter()
            .map(|g| {
                let mut row = vec![BigRational::zero(); cols.len()];
                for (key, c) in &g.coefficients {
                    row[cols[key]] = conv(c).ok_or(Error::FieldMismatch)?;
                }
                Ok(row)
            })
            .collect()
    };
    match field {
        CoefficientField::Rationals => Ok(matrix_rank(&Rationals, dense(&|c| Some(c.clone()))?)),
        CoefficientField::PrimeField(p) => {
            let k = PrimeField::new(p).ok_or(Error::BadModulus(p))?;
            let rows = dense(&|c| Some(c.clone()))?
                .into_iter()
                .map(|r| r.iter().map(|c| k.from_rational(c).ok_or(Error::FieldMismatch)).collect::<Result<Vec<u64>>>())
                .collect::<Result<Vec<_>>>()?;
            Ok(matrix_rank(&k, rows))
        }
    }
}

/// Sparse polynomial in `(λ₁, λ₂, λ₃)` with rational coefficients.
type TriPoly = BTreeMap<[u32; 3], BigRational>;

fn tri_add(a: &TriPoly, b: &TriPoly) -> TriPoly {
    let mut out = a.clone();
    for (e, c) in b {
        *out.entry(*e).or_insert_with(BigRational::zero) += c;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn tri_mul(a: &TriPoly, b: &TriPoly) -> TriPoly {
    let mut out: TriPoly = BTreeMap::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]];
            *out.entry(e).or_insert_with(BigRational::zero) += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn tri_neg(a: &TriPoly) -> TriPoly {
    a.iter().map(|(e, c)| (*e, -c)).collect()
}

/// Laplace expansion along the first row.
fn tri_det(m: &[Vec<TriPoly>]) -> TriPoly {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = TriPoly::new();
    for c in 0..n {
        if m[0][c].is_empty() {
            continue;
        }
        let minor: Vec<Vec<TriPoly>> =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|(k, _)| *k != c).map(|(_, x)| x.clone()).collect()).collect();
        let term = tri_mul(&m[0][c], &tri_det(&minor));
        acc = if c % 2 == 0 { tri_add(&acc, &term) } else { tri_add(&acc, &tri_neg(&term)) };
    }
    acc
}

pub type Matrix5 = [[BigRational; 5]; 5];

/// `λ₁ M₁ + λ₂ M₂ + λ₃ M_Q` for a genus-5 curve with Newton polygon `Δ⁵₁`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricMatrixPencil {
    pub m1: Matrix5,
    pub m2: Matrix5,
    pub mq: Matrix5,
}

/// Variable order of the pencil.
pub const PENCIL_VARIABLES: [(i64, i64); 5] = [(-1, 0), (0, 0), (1, 0), (0, 1), (0, -1)];

pub fn delta51() -> LatticePolygon {
    LatticePolygon::from_vertices(&[(2, 0), (0, 2), (-2, 0), (0, -2)]).expect("valid polygon")
}

/// Symmetric matrix of `Σ c X_a X_b` with off-diagonal entries halved.
fn quadric_matrix(terms: &[((i64, i64), (i64, i64), BigRational)]) -> Matrix5 {
    let idx = |p: (i64, i64)| PENCIL_VARIABLES.iter().position(|&q| q == p).expect("pencil variable");
    let mut m: Matrix5 = std::array::from_fn(|_| std::array::from_fn(|_| BigRational::zero()));
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    for (a, b, c) in terms {
        let (r, s) = (idx(*a), idx(*b));
        if r == s {
            m[r][r] += c;
        } else {
            let h = c * &half;
            m[r][s] += &h;
            m[s][r] += &h;
        }
    }
    m
}

fn q_int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Moves `f` onto `conv{(±2,0),(0,±2)}` and builds the three matrices.
pub fn genus5_pencil(f: &LaurentPolynomial) -> Result<SymmetricMatrixPencil> {
    if f.field() != CoefficientField::Rationals {
        return Err(Error::FieldMismatch);
    }
    let target = delta51();
    let m = equivalent(&newton_polygon(f), &target).ok_or(Error::WrongPolygonClass("Newton polygon is not Δ⁵₁"))?;
    let f = f.apply_map(&m);
    let c = |i: i64, j: i64| f.coefficient(LatticePoint::new(i, j)).cloned().unwrap_or_else(BigRational::zero);
    let (xm, x0, xp, yp, ym) = ((-1, 0), (0, 0), (1, 0), (0, 1), (0, -1));
    let m1 = quadric_matrix(&[(x0, x0, q_int(1)), (xp, xm, q_int(-1))]);
    let m2 = quadric_matrix(&[(x0, x0, q_int(1)), (yp, ym, q_int(-1))]);
    let mq = quadric_matrix(&[
        (xp, xp, c(2, 0)),
        (yp, yp, c(0, 2)),
        (xm, xm, c(-2, 0)),
        (ym, ym, c(0, -2)),
        (xp, yp, c(1, 1)),
        (xp, ym, c(1, -1)),
        (xm, yp, c(-1, 1)),
        (xm, ym, c(-1, -1)),
        (xp, x0, c(1, 0)),
        (yp, x0, c(0, 1)),
        (xm, x0, c(-1, 0)),
        (ym, x0, c(0, -1)),
        (x0, x0, c(0, 0)),
    ]);
    Ok(SymmetricMatrixPencil { m1, m2, mq })
}

/// `δ(f) = Σ a_{i,j} λ₁^i λ₂^j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discriminant {
    pub coefficients: BTreeMap<(u32, u32), BigRational>,
}

impl Discriminant {
    pub fn coefficient(&self, i: u32, j: u32) -> BigRational {
        self.coefficients.get(&(i, j)).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn scaled(&self, k: i64) -> Discriminant {
        let k = q_int(k);
        Discriminant { coefficients: self.coefficients.iter().map(|(e, c)| (*e, c * &k)).collect() }
    }

    pub fn support(&self) -> Vec<LatticePoint> {
        self.coefficients.keys().map(|&(i, j)| LatticePoint::new(i as i64, j as i64)).collect()
    }

    pub fn total_degree(&self) -> u32 {
        self.coefficients.keys().map(|(i, j)| i + j).max().unwrap_or(0)
    }

    pub fn to_laurent(&self) -> Result<LaurentPolynomial> {
        LaurentPolynomial::new(
            CoefficientField::Rationals,
            self.coefficients.iter().map(|(&(i, j), c)| (LatticePoint::new(i as i64, j as i64), c.clone())),
        )
    }

    /// `{"(e1,e2)": "rational"}`.
    pub fn to_json_map(&self) -> serde_json::Value {
        let map: serde_json::Map<String, serde_json::Value> = self
            .coefficients
            .iter()
            .map(|((i, j), c)| (format!("({i},{j})"), serde_json::Value::String(format_rational(c))))
            .collect();
        serde_json::Value::Object(map)
    }
}

/// `Ξ⁵₁ = conv{(0,0),(3,0),(3,2),(2,3),(0,3)}`.
pub fn xi51() -> LatticePolygon {
    LatticePolygon::from_vertices(&[(0, 0), (3, 0), (3, 2), (2, 3), (0, 3)]).expect("valid polygon")
}

/// `det(λ₁M₁ + λ₂M₂ + λ₃M_Q)` dehomogenized at `λ₃ = 1`.
pub fn genus5_discriminant(f: &LaurentPolynomial) -> Result<Discriminant> {
    let pencil = genus5_pencil(f)?;
    if is_nondegenerate(f)?.is_degenerate() {
        return Err(Error::Precondition("polynomial is degenerate"));
    }
    let lin = |a: &BigRational, b: &BigRational, c: &BigRational| -> TriPoly {
        let mut t = TriPoly::new();
        for (e, x) in [([1, 0, 0], a), ([0, 1, 0], b), ([0, 0, 1], c)] {
            if !x.is_zero() {
                t.insert(e, x.clone());
            }
        }
        t
    };
    let m: Vec<Vec<TriPoly>> =
        (0..5).map(|r| (0..5).map(|s| lin(&pencil.m1[r][s], &pencil.m2[r][s], &pencil.mq[r][s])).collect()).collect();
    let det = tri_det(&m);
    let mut coefficients = BTreeMap::new();
    for (e, c) in det {
        *coefficients.entry((e[0], e[1])).or_insert_with(BigRational::zero) += c;
    }
    coefficients.retain(|_, c: &mut BigRational| !c.is_zero());
    Ok(Discriminant { coefficients })
}
