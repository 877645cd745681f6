//! Exact lattice-polygon geometry and the combinatorial invariants of curves
//! cut out by Laurent polynomials that are non-degenerate with respect to their
//! Newton polygon.

pub mod adjunction;
pub mod enumeration;
pub mod error;
pub mod field;
pub mod invariants;
pub mod laurent;
pub mod upoly;
pub mod lattice;
pub mod normal_form;
mod residue;
pub mod toric;
pub mod width;

pub use enumeration::{CensusEntry, GenusCensus};
pub use error::{Error, Result};
pub use invariants::{BettiTable, CurveFingerprint, SecondaryInvariants, SpecialShape};
pub use lattice::{AffineUnimodularMap, LatticePoint, LatticePolygon};
pub use laurent::{CoefficientField, Face, LaurentPolynomial, NondegeneracyVerdict};
pub use toric::{Binomial, Discriminant, QuadraticGenerator};
pub use width::WidthCertificate;
