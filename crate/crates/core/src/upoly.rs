//! Dense univariate polynomials over a [`Field`], little-endian coefficient vectors,
//! and resultants of bivariate polynomials viewed in `K[x][y]`.

use crate::field::Field;

pub type Poly<F> = Vec<<F as Field>::Elem>;

pub fn trim<F: Field>(k: &F, mut a: Poly<F>) -> Poly<F> {
    while a.last().is_some_and(|c| k.is_zero(c)) {
        a.pop();
    }
    a
}

/// `None` for the zero polynomial.
pub fn degree<F: Field>(a: &[F::Elem]) -> Option<usize> {
    a.len().checked_sub(1)
}

pub fn is_zero<F: Field>(a: &[F::Elem]) -> bool {
    a.is_empty()
}

pub fn constant<F: Field>(k: &F, c: F::Elem) -> Poly<F> {
    trim(k, vec![c])
}

pub fn add<F: Field>(k: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F> {
    let n = a.len().max(b.len());
    let z = k.zero();
    let out = (0..n)
        .map(|i| k.add(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z)))
        .collect();
    trim(k, out)
}

pub fn sub<F: Field>(k: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F> {
    let n = a.len().max(b.len());
    let z = k.zero();
    let out = (0..n)
        .map(|i| k.sub(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z)))
        .collect();
    trim(k, out)
}

pub fn scale<F: Field>(k: &F, a: &[F::Elem], c: &F::Elem) -> Poly<F> {
    trim(k, a.iter().map(|x| k.mul(x, c)).collect())
}

pub fn mul<F: Field>(k: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![k.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if k.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = k.add(&out[i + j], &k.mul(x, y));
        }
    }
    trim(k, out)
}

pub fn pow<F: Field>(k: &F, a: &[F::Elem], e: usize) -> Poly<F> {
    let mut acc = vec![k.one()];
    for _ in 0..e {
        acc = mul(k, &acc, a);
    }
    acc
}

/// Euclidean division; panics on a zero divisor.
pub fn divrem<F: Field>(k: &F, a: &[F::Elem], b: &[F::Elem]) -> (Poly<F>, Poly<F>) {
    let db = degree::<F>(b).expect("division by zero polynomial");
    let lc_inv = k.inv(&b[db]);
    let mut r: Poly<F> = a.to_vec();
    if r.len() <= db {
        return (vec![], r);
    }
    let mut q = vec![k.zero(); r.len() - db];
    while r.len() > db {
        let dr = r.len() - 1;
        let c = k.mul(&r[dr], &lc_inv);
        let shift = dr - db;
        for (i, bi) in b.iter().enumerate() {
            r[shift + i] = k.sub(&r[shift + i], &k.mul(&c, bi));
        }
        q[shift] = c;
        r = trim(k, r);
    }
    (trim(k, q), r)
}

/// Exact quotient; panics if the division leaves a remainder.
pub fn exact_div<F: Field>(k: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F> {
    let (q, r) = divrem(k, a, b);
    assert!(r.is_empty(), "inexact polynomial division");
    q
}

pub fn monic<F: Field>(k: &F, a: &[F::Elem]) -> Poly<F> {
    match a.last() {
        None => vec![],
        Some(lc) => {
            let inv = k.inv(lc);
            a.iter().map(|c| k.mul(c, &inv)).collect()
        }
    }
}

/// Monic gcd; `gcd(0, 0) = 0`.
pub fn gcd<F: Field>(k: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    while !b.is_empty() {
        let (_, r) = divrem(k, &a, &b);
        a = b;
        b = r;
    }
    monic(k, &a)
}

/// `(g, s)` with `g = gcd(a, b)` monic and `s·a ≡ g (mod b)`.
pub fn half_xgcd<F: Field>(k: &F, a: &[F::Elem], b: &[F::Elem]) -> (Poly<F>, Poly<F>) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut s0, mut s1) = (vec![k.one()], vec![]);
    while !r1.is_empty() {
        let (q, r) = divrem(k, &r0, &r1);
        let s = sub(k, &s0, &mul(k, &q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    match r0.last() {
        None => (vec![], vec![]),
        Some(lc) => {
            let inv = k.inv(lc);
            (scale(k, &r0, &inv), scale(k, &s0, &inv))
        }
    }
}

pub fn derivative<F: Field>(k: &F, a: &[F::Elem]) -> Poly<F> {
    trim(
        k,
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| k.mul(c, &k.from_i64(i as i64)))
            .collect(),
    )
}

pub fn eval<F: Field>(k: &F, a: &[F::Elem], x: &F::Elem) -> F::Elem {
    a.iter().rev().fold(k.zero(), |acc, c| k.add(&k.mul(&acc, x), c))
}

/// Removes factors of `x`.
pub fn strip_x<F: Field>(k: &F, a: &[F::Elem]) -> Poly<F> {
    let first = a.iter().position(|c| !k.is_zero(c)).unwrap_or(a.len());
    a[first..].to_vec()
}

/// Bivariate polynomial as coefficients of `y^0, y^1, ...`, each a polynomial in `x`.
pub type BiPoly<F> = Vec<Poly<F>>;

fn bi_trim<F: Field>(mut a: BiPoly<F>) -> BiPoly<F> {
    while a.last().is_some_and(|c| c.is_empty()) {
        a.pop();
    }
    a
}

fn bi_scale<F: Field>(k: &F, a: &BiPoly<F>, c: &[F::Elem]) -> BiPoly<F> {
    bi_trim::<F>(a.iter().map(|x| mul(k, x, c)).collect())
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b` in `K[x][y]`.
fn prem<F: Field>(k: &F, a: &BiPoly<F>, b: &BiPoly<F>) -> BiPoly<F> {
    let db = b.len() - 1;
    let lcb = &b[db];
    let mut r = a.clone();
    let mut steps = a.len() as i64 - db as i64;
    while !r.is_empty() && r.len() > db {
        let dr = r.len() - 1;
        let lcr = r[dr].clone();
        let shift = dr - db;
        let mut next: BiPoly<F> = r.iter().map(|c| mul(k, c, lcb)).collect();
        for (i, bi) in b.iter().enumerate() {
            next[shift + i] = sub(k, &next[shift + i], &mul(k, &lcr, bi));
        }
        r = bi_trim::<F>(next);
        steps -= 1;
    }
    if steps > 0 {
        let f = pow(k, lcb, steps as usize);
        r = bi_scale(k, &r, &f);
    }
    r
}

/// `Res_y(a, b)` by the subresultant algorithm over the domain `K[x]`.
pub fn resultant_y<F: Field>(k: &F, a: &BiPoly<F>, b: &BiPoly<F>) -> Poly<F> {
    let mut a = bi_trim::<F>(a.clone());
    let mut b = bi_trim::<F>(b.clone());
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut sign_neg = false;
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
        if (a.len() - 1) % 2 == 1 && (b.len() - 1) % 2 == 1 {
            sign_neg = true;
        }
    }
    let one = vec![k.one()];
    let mut g = one.clone();
    let mut h = one.clone();
    while b.len() > 1 {
        let (da, db) = (a.len() - 1, b.len() - 1);
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            sign_neg = !sign_neg;
        }
        let r = prem(k, &a, &b);
        a = b;
        if r.is_empty() {
            return vec![];
        }
        let den = mul(k, &g, &pow(k, &h, delta));
        b = r.iter().map(|c| exact_div(k, c, &den)).collect();
        g = a[a.len() - 1].clone();
        h = if delta == 0 {
            h
        } else {
            exact_div(k, &pow(k, &g, delta), &pow(k, &h, delta - 1))
        };
    }
    // b is a nonzero constant in y
    let da = a.len() - 1;
    let lcb = &b[0];
    let res = if da == 0 {
        one
    } else {
        exact_div(k, &pow(k, lcb, da), &pow(k, &h, da - 1))
    };
    if sign_neg {
        res.iter().map(|c| k.neg(c)).collect()
    } else {
        res
    }
}
