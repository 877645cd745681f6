//! Polynomials in `y` with coefficients in `K[x]/(m)`, by dynamic evaluation.
//!
//! A coefficient that is neither zero nor invertible modulo `m` splits `m` into
//! `gcd(c, m)` and `m / gcd(c, m)`, and the computation continues on both parts.
//! Every branch then specializes uniformly at each root of its modulus.

use crate::field::Field;
use crate::upoly::{self, BiPoly, Poly};

enum Unit<F: Field> {
    Invertible(Poly<F>),
    Zero,
    Split(Poly<F>, Poly<F>),
}

fn classify<F: Field>(k: &F, m: &[F::Elem], c: &[F::Elem]) -> Unit<F> {
    let c = upoly::divrem(k, c, m).1;
    if c.is_empty() {
        return Unit::Zero;
    }
    let (g, s) = upoly::half_xgcd(k, &c, m);
    if g.len() == 1 {
        Unit::Invertible(s)
    } else {
        Unit::Split(upoly::exact_div(k, m, &g), g)
    }
}

fn reduce<F: Field>(k: &F, m: &[F::Elem], a: &BiPoly<F>) -> BiPoly<F> {
    let mut out: BiPoly<F> = a.iter().map(|c| upoly::divrem(k, c, m).1).collect();
    while out.last().is_some_and(|c| c.is_empty()) {
        out.pop();
    }
    out
}

/// `a mod b` in `(K[x]/(m))[y]`, given the inverse of `lc(b)`.
fn rem<F: Field>(k: &F, m: &[F::Elem], a: BiPoly<F>, b: &BiPoly<F>, lc_inv: &[F::Elem]) -> BiPoly<F> {
    let db = b.len() - 1;
    let mut r = a;
    while r.len() > db {
        let dr = r.len() - 1;
        let c = upoly::divrem(k, &upoly::mul(k, &r[dr], lc_inv), m).1;
        for (i, bi) in b.iter().enumerate() {
            r[dr - db + i] = upoly::sub(k, &r[dr - db + i], &upoly::mul(k, &c, bi));
        }
        r = reduce(k, m, &r);
    }
    r
}

/// Branches `(mᵢ, gcd(a, b) over K[x]/(mᵢ))` whose moduli multiply to `m`.
pub fn gcd_branches<F: Field>(k: &F, m: Poly<F>, a: &BiPoly<F>, b: &BiPoly<F>) -> Vec<(Poly<F>, BiPoly<F>)> {
    let mut out = Vec::new();
    let mut stack = vec![(m, a.clone(), b.clone())];
    while let Some((m, a, b)) = stack.pop() {
        let (a, b) = (reduce(k, &m, &a), reduce(k, &m, &b));
        let Some(lc) = b.last() else {
            out.push((m, a));
            continue;
        };
        match classify(k, &m, lc) {
            Unit::Invertible(inv) => {
                let r = rem(k, &m, a, &b, &inv);
                stack.push((m, b, r));
            }
            Unit::Split(m1, m2) => {
                stack.push((m1, a.clone(), b.clone()));
                stack.push((m2, a, b));
            }
            Unit::Zero => unreachable!("reduced polynomials have a nonzero leading coefficient"),
        }
    }
    out
}

/// Branches of `m` on which `g(x₀, y)` has a root `y ≠ 0` (or vanishes identically)
/// for every root `x₀` of the branch modulus.
pub fn nonzero_root_branches<F: Field>(k: &F, m: Poly<F>, g: &BiPoly<F>) -> Vec<Poly<F>> {
    let mut out = Vec::new();
    let mut stack = vec![(m, g.clone())];
    'next: while let Some((m, g)) = stack.pop() {
        let g = reduce(k, &m, &g);
        let Some(lc) = g.last() else {
            out.push(m);
            continue;
        };
        if let Unit::Split(m1, m2) = classify(k, &m, lc) {
            stack.push((m1, g.clone()));
            stack.push((m2, g));
            continue;
        }
        for (lo, c) in g.iter().enumerate() {
            match classify(k, &m, c) {
                Unit::Zero => {}
                Unit::Invertible(_) => {
                    if g.len() - 1 > lo {
                        out.push(m);
                    }
                    continue 'next;
                }
                Unit::Split(m1, m2) => {
                    stack.push((m1, g.clone()));
                    stack.push((m2, g));
                    continue 'next;
                }
            }
        }
    }
    out
}
