//! Fixed inputs shared by the benchmarks.

use npinv_core::lattice::AffineUnimodularMap;
use npinv_core::{CoefficientField, LatticePolygon, LaurentPolynomial};

/// The genus-14 hexagon with two distinct width directions.
pub fn genus14() -> LatticePolygon {
    LatticePolygon::from_vertices(&[(1, 2), (3, 1), (5, 1), (6, 3), (5, 6), (1, 4)]).unwrap()
}

/// A skewed copy of `genus14`, so normal forms do real work.
pub fn skewed_genus14() -> LatticePolygon {
    let m = AffineUnimodularMap::new([[7, 3], [2, 1]], [-11, 5]).unwrap();
    npinv_core::lattice::apply_map(&genus14(), &m)
}

/// `y² = h(x)` with `deg h = 7` and `h` squarefree.
pub fn hyperelliptic7() -> LaurentPolynomial {
    LaurentPolynomial::from_integers(
        CoefficientField::Rationals,
        &[((0, 2), 1), ((7, 0), -1), ((5, 0), 3), ((3, 0), -2), ((1, 0), 5), ((0, 0), -7)],
    )
    .unwrap()
}

/// The genus-5 example on `conv{(±2,0),(0,±2)}`.
pub fn genus5_example() -> LaurentPolynomial {
    LaurentPolynomial::from_integers(
        CoefficientField::Rationals,
        &[((2, 0), 3), ((0, 2), 2), ((-2, 0), 1), ((0, -2), 1), ((1, 0), 1), ((0, 1), 1), ((-1, 0), 1), ((0, -1), 1)],
    )
    .unwrap()
}
