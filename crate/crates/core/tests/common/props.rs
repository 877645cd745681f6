//! Property bodies shared by the proptest suites and the acceptance run.

use std::collections::{BTreeMap, BTreeSet};

use npinv_core::adjunction::{genus, interior_hull};
use npinv_core::invariants::{pencils, predicted_betti, scrollar_invariants};
use npinv_core::laurent::{faces, is_nondegenerate, FaceStatus, VerdictStatus};
use npinv_core::lattice::{apply_map, LatticePoint};
use npinv_core::normal_form::normal_form;
use npinv_core::toric::{
    canonical_quadrics_unchecked, i2_dimension, i2_dimension_by_rank, quadric_rank, toric_binomials,
    DecompositionMode, QuadraticGenerator,
};
use npinv_core::width::{lattice_width, lattice_width_opt};
use npinv_core::{AffineUnimodularMap, CoefficientField, Face, LatticePolygon, LaurentPolynomial};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

use super::*;

type R = Result<(), TestCaseError>;

fn canon(v: Pt) -> Pt {
    if v.0 < 0 || (v.0 == 0 && v.1 < 0) {
        (-v.0, -v.1)
    } else {
        v
    }
}

pub fn pick(p: &LatticePolygon) -> R {
    let v = verts(p);
    let all = brute_points(&v).len() as i128;
    let int = brute_interior(&v).len() as i128;
    let b = all - int;
    prop_assert_eq!(p.lattice_count() as i128, all);
    prop_assert_eq!(p.interior_count() as i128, int);
    prop_assert_eq!(p.area2() as i128, doubled_area(&v));
    prop_assert_eq!(doubled_area(&v), 2 * int + b - 2);
    Ok(())
}

pub fn normal_form_stable(p: &LatticePolygon, m: ([[i64; 2]; 2], [i64; 2])) -> R {
    let map = AffineUnimodularMap::new(m.0, m.1).unwrap();
    let q = apply_map(p, &map);
    let (np, wp) = normal_form(p);
    prop_assert_eq!(&np, &normal_form(&q).0);
    prop_assert_eq!(&apply_map(p, &wp), &np);
    prop_assert!(brute_equivalent(&verts(p), &verts(&np)));
    Ok(())
}

pub fn width_directions(p: &LatticePolygon) -> R {
    let cert = lattice_width(p);
    let (w, dirs) = brute_width(&verts(p));
    prop_assert_eq!(cert.width, w);
    let mine: BTreeSet<Pt> = cert.directions.iter().map(|&d| canon(d)).collect();
    prop_assert_eq!(mine, dirs);
    prop_assert!(cert.directions.len() <= 4);
    Ok(())
}

pub fn width_area_bound(p: &LatticePolygon) -> R {
    let (w, _) = brute_width(&verts(p));
    // 3·lw² <= 8·Vol with Vol = area2 / 2
    prop_assert!(3 * (w as i128).pow(2) <= 4 * doubled_area(&verts(p)));
    Ok(())
}

/// `lw(Δ) = lw(Δ⁽¹⁾) + 2`, except `Δ ≅ dΣ` where the difference is 3.
pub fn width_drop(p: &LatticePolygon) -> R {
    let v = verts(p);
    let int = brute_interior(&v);
    if int.is_empty() {
        return Ok(());
    }
    let (w, _) = brute_width(&v);
    let h1 = hull(&int);
    // collinear interiors have width 0 along their normal
    let w1 = if h1.len() >= 3 { brute_width(&h1).0 } else { 0 };
    prop_assert_eq!(lattice_width_opt(interior_hull(p).as_ref()), w1);
    if w != w1 + 2 {
        prop_assert_eq!(w, w1 + 3);
        prop_assert!(brute_equivalent(&v, &[(0, 0), (w, 0), (0, w)]), "{:?}", v);
    }
    Ok(())
}

pub fn scrollar_sums(p: &LatticePolygon) -> R {
    let g = genus(p) as i64;
    let Some(dirs) = pencils(p).unwrap() else { return Ok(()) };
    if g < 2 || p.dimension() != 2 {
        return Ok(());
    }
    let gamma = lattice_width(p).width;
    for v in dirs {
        let e = scrollar_invariants(p, v).unwrap();
        prop_assert_eq!(e.len() as i64, gamma - 1);
        prop_assert_eq!(e.iter().sum::<i64>(), g - gamma + 1);
        for &x in &e {
            prop_assert!(x >= 0 && gamma * x <= 2 * g - 2, "E = {:?}, g = {}", e, g);
        }
    }
    Ok(())
}

fn rational(k: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(k))
}

/// `f` with the given nonzero integer coefficients cycled over the lattice points of `p`.
pub fn poly_on(p: &LatticePolygon, coeffs: &[i64], field: CoefficientField) -> LaurentPolynomial {
    let pts = p.lattice_points();
    let terms: Vec<(LatticePoint, BigRational)> =
        pts.iter().enumerate().map(|(k, &q)| (q, rational(coeffs[k % coeffs.len()]))).collect();
    LaurentPolynomial::new(field, terms).unwrap()
}

fn sparse(f: &LaurentPolynomial) -> Sparse {
    f.terms().iter().map(|(q, c)| ((q.i, q.j), c.clone())).collect()
}

fn expand(q: &QuadraticGenerator) -> Sparse {
    let mut out = Sparse::new();
    for (&(u, v), c) in &q.coefficients {
        *out.entry((u.i + v.i, u.j + v.j)).or_insert_with(BigRational::zero) += c;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Every `Q_w` uses only points of `Δ⁽¹⁾` and expands to `(x,y)^w · f`.
pub fn chi_expansion(p: &LatticePolygon, coeffs: &[i64]) -> R {
    let v = verts(p);
    let int1 = brute_interior(&v);
    if hull(&int1).len() < 3 || brute_interior(&hull(&int1)).is_empty() {
        return Ok(());
    }
    let f = poly_on(p, coeffs, CoefficientField::Rationals);
    let w2: BTreeSet<Pt> = brute_interior(&hull(&int1)).into_iter().collect();
    let allowed: BTreeSet<Pt> = int1.iter().copied().collect();
    let qs = canonical_quadrics_unchecked(&f, DecompositionMode::Lexicographic).unwrap();
    prop_assert_eq!(qs.len(), w2.len());
    let mut seen = BTreeSet::new();
    for q in &qs {
        let npinv_core::toric::GeneratorKind::CanonicalQuadric { w } = q.kind else {
            return Err(TestCaseError::fail("not a canonical quadric"));
        };
        seen.insert((w.i, w.j));
        for &(a, b) in q.coefficients.keys() {
            prop_assert!(allowed.contains(&(a.i, a.j)) && allowed.contains(&(b.i, b.j)));
        }
        prop_assert_eq!(expand(q), shift(&sparse(&f), (w.i, w.j)));
    }
    prop_assert_eq!(seen, w2);
    Ok(())
}

/// The kernel of `X_u X_v ↦ x^{u+v}` has dimension `#pairs - #sums`.
pub fn i2_rank(g: &LatticePolygon) -> R {
    let pts = brute_points(&verts(g));
    let n = pts.len();
    let mut sums = BTreeSet::new();
    for a in 0..n {
        for b in a..n {
            sums.insert((pts[a].0 + pts[b].0, pts[a].1 + pts[b].1));
        }
    }
    let oracle = n * (n + 1) / 2 - sums.len();
    prop_assert_eq!(i2_dimension(g).unwrap(), oracle);
    prop_assert_eq!(i2_dimension_by_rank(g).unwrap(), oracle);
    for b in toric_binomials(g).unwrap() {
        let s = |side: &[LatticePoint]| side.iter().fold((0, 0), |acc, q| (acc.0 + q.i, acc.1 + q.j));
        prop_assert_eq!(s(&b.lhs), s(&b.rhs));
        prop_assert_eq!(b.lhs.len(), b.rhs.len());
    }
    Ok(())
}

/// Combined rank of binomial quadrics and `Q_w` equals `i2 + |Δ⁽²⁾|`.
pub fn rank_identity(p: &LatticePolygon, coeffs: &[i64]) -> R {
    let Some(int1) = interior_hull(p) else { return Ok(()) };
    if int1.dimension() != 2 || interior_hull(&int1).is_none() {
        return Ok(());
    }
    let f = poly_on(p, coeffs, CoefficientField::Rationals);
    let mut gens: Vec<QuadraticGenerator> = toric_binomials(&int1)
        .unwrap()
        .iter()
        .filter(|b| b.degree() == 2)
        .map(|b| QuadraticGenerator::from_binomial(b).unwrap())
        .collect();
    gens.extend(canonical_quadrics_unchecked(&f, DecompositionMode::Lexicographic).unwrap());
    let n2 = brute_interior(&verts(&int1)).len();
    prop_assert_eq!(quadric_rank(&gens, CoefficientField::Rationals).unwrap(), i2_dimension(&int1).unwrap() + n2);
    Ok(())
}

/// `β_{i,j} = β_{g-2-i, g+1-j}` and all entries are non-negative.
pub fn betti_symmetry(p: &LatticePolygon) -> R {
    if genus(p) < 3 {
        return Ok(());
    }
    let Some(t) = predicted_betti(p).unwrap() else { return Ok(()) };
    let g = t.genus;
    for i in 0..=g - 2 {
        for j in 0..=g + 1 {
            let b = t.beta(i, j);
            prop_assert!(!b.is_negative());
            prop_assert_eq!(b, t.beta(g - 2 - i, g + 1 - j), "i = {}, j = {}", i, j);
        }
    }
    prop_assert_eq!(t.beta(0, 0), BigInt::one());
    Ok(())
}

fn verdict_kind(f: &LaurentPolynomial) -> u8 {
    match is_nondegenerate(f).unwrap().status {
        VerdictStatus::CertifiedNondegenerate => 0,
        VerdictStatus::DegenerateWitnessed { .. } => 1,
        VerdictStatus::Undetermined => 2,
    }
}

pub fn nondeg_equivariance(f: &LaurentPolynomial, m: ([[i64; 2]; 2], [i64; 2])) -> R {
    let map = AffineUnimodularMap::new(m.0, m.1).unwrap();
    prop_assert_eq!(verdict_kind(f), verdict_kind(&f.apply_map(&map)));
    Ok(())
}

// ---- modular brute force ----

fn modp(c: &BigRational, p: i64) -> i64 {
    let n = (c.numer() % BigInt::from(p)).to_string().parse::<i64>().unwrap();
    let d = (c.denom() % BigInt::from(p)).to_string().parse::<i64>().unwrap();
    let inv = (1..p).find(|&k| (d.rem_euclid(p) * k) % p == 1).unwrap();
    (n.rem_euclid(p) * inv) % p
}

fn pow_mod(mut b: i64, mut e: i64, p: i64) -> i64 {
    let mut r = 1;
    b = b.rem_euclid(p);
    if e < 0 {
        b = (1..p).find(|&k| (b * k) % p == 1).unwrap();
        e = -e;
    }
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Values of `g`, `x g_x`, `y g_y` at a torus point over `F_p`.
fn eval_mod(terms: &[(Pt, i64)], x: i64, y: i64, p: i64) -> (i64, i64, i64) {
    let (mut a, mut b, mut c) = (0, 0, 0);
    for &((i, j), k) in terms {
        let t = k * pow_mod(x, i, p) % p * pow_mod(y, j, p) % p;
        a = (a + t) % p;
        b = (b + t * i.rem_euclid(p)) % p;
        c = (c + t * j.rem_euclid(p)) % p;
    }
    (a, b, c)
}

fn singular_point(terms: &[(Pt, i64)], p: i64) -> Option<(i64, i64)> {
    (1..p).flat_map(|x| (1..p).map(move |y| (x, y))).find(|&(x, y)| eval_mod(terms, x, y, p) == (0, 0, 0))
}

/// Over small `F_p`: a certified face has no `F_p`-rational singular torus point,
/// and a witnessed torus point really is singular.
pub fn brute_soundness(f: &LaurentPolynomial, p: i64) -> R {
    let verdict = is_nondegenerate(f).unwrap();
    let newton = npinv_core::laurent::newton_polygon(f);
    for face in faces(&newton) {
        let restricted = npinv_core::laurent::face_restriction(f, &face).unwrap();
        let terms: Vec<(Pt, i64)> = restricted.terms().iter().map(|(q, c)| ((q.i, q.j), modp(c, p))).collect();
        let report = verdict.per_face.iter().find(|r| r.face == face).unwrap();
        match &report.status {
            FaceStatus::Certified => {
                prop_assert_eq!(singular_point(&terms, p), None, "face {:?} of {}", face, f);
            }
            // singular points exist only over an extension, so none is F_p-rational
            FaceStatus::Degenerate { witness } if witness.starts_with("singular torus points with") => {
                prop_assert_eq!(singular_point(&terms, p), None, "face {:?} of {}: {}", face, f, witness);
            }
            FaceStatus::Degenerate { witness } if witness.starts_with("singular torus point (x,y)") => {
                let nums: Vec<i64> = witness
                    .rsplit('(')
                    .next()
                    .unwrap()
                    .trim_end_matches(')')
                    .split(',')
                    .map(|s| s.trim().parse().unwrap())
                    .collect();
                prop_assert_eq!(eval_mod(&terms, nums[0], nums[1], p), (0, 0, 0));
            }
            _ => {}
        }
        if matches!(face, Face::Vertex { .. }) {
            prop_assert_eq!(&report.status, &FaceStatus::Certified);
        }
    }
    Ok(())
}

// ---- univariate oracle over ℚ ----

fn trim(mut a: Vec<BigRational>) -> Vec<BigRational> {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

fn rem(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db && !r.is_empty() {
        let k = r.len() - 1;
        let q = &r[k] / &b[db];
        for t in 0..=db {
            let s = &q * &b[t];
            r[k - db + t] -= s;
        }
        r = trim(r);
    }
    r
}

/// `deg gcd(a, a') > 0`, by the Euclidean algorithm.
pub fn has_repeated_factor(a: &[i64]) -> bool {
    let a: Vec<BigRational> = trim(a.iter().map(|&k| rational(k)).collect());
    let da: Vec<BigRational> = trim(a.iter().enumerate().skip(1).map(|(k, c)| c * rational(k as i64)).collect());
    let (mut x, mut y) = (a, da);
    while !y.is_empty() {
        let r = rem(&x, &y);
        x = y;
        y = r;
    }
    x.len() > 1
}

/// Edges of `y² = h(x)` over `ℚ`: the bottom edge is `h` itself, so its verdict
/// must match the Euclidean squarefree test.
pub fn edge_oracle(h: &[i64]) -> R {
    let mut terms: Vec<((i64, i64), i64)> = vec![((0, 2), 1)];
    terms.extend(h.iter().enumerate().filter(|(_, &c)| c != 0).map(|(k, &c)| ((k as i64, 0), -c)));
    let f = LaurentPolynomial::from_integers(CoefficientField::Rationals, &terms).unwrap();
    let newton = npinv_core::laurent::newton_polygon(&f);
    if newton.dimension() != 2 {
        return Ok(());
    }
    // strip the power of x so the edge polynomial is a torus polynomial
    let low = h.iter().position(|&c| c != 0).unwrap();
    let core: Vec<i64> = h[low..].iter().rev().skip_while(|&&c| c == 0).copied().collect::<Vec<_>>();
    let core: Vec<i64> = core.into_iter().rev().collect();
    let bottom = newton
        .edges()
        .into_iter()
        .find(|(a, b)| a.j == 0 && b.j == 0)
        .map(|(from, to)| Face::Edge { from, to });
    let Some(bottom) = bottom else { return Ok(()) };
    let verdict = is_nondegenerate(&f).unwrap();
    let status = &verdict.per_face.iter().find(|r| r.face == bottom).unwrap().status;
    if has_repeated_factor(&core) {
        prop_assert!(matches!(status, FaceStatus::Degenerate { .. }), "{:?} {:?}", h, status);
    } else {
        prop_assert_eq!(status, &FaceStatus::Certified, "{:?}", h);
    }
    Ok(())
}

pub fn poly_mod_p(p: &LatticePolygon, coeffs: &[i64], modulus: u64) -> LaurentPolynomial {
    let field = CoefficientField::prime(modulus).unwrap();
    let pts = p.lattice_points();
    let vset: BTreeSet<LatticePoint> = p.vertices().iter().copied().collect();
    let terms: BTreeMap<LatticePoint, BigRational> = pts
        .iter()
        .enumerate()
        .map(|(k, &q)| {
            let mut c = coeffs[k % coeffs.len()].rem_euclid(modulus as i64);
            if c == 0 && vset.contains(&q) {
                c = 1;
            }
            (q, rational(c))
        })
        .collect();
    LaurentPolynomial::new(field, terms).unwrap()
}
