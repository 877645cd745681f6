use thiserror::Error;

use crate::lattice::LatticePoint;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty point set")]
    EmptyPointSet,
    #[error("polygon must be two-dimensional")]
    NotTwoDimensional,
    #[error("not an interior polygon")]
    NotInteriorPolygon,
    #[error("direction ({0},{1}) is not primitive")]
    NonPrimitiveDirection(i64, i64),
    #[error("direction ({0},{1}) does not attain the lattice width")]
    NotWidthDirection(i64, i64),
    #[error("matrix is not unimodular (det = {0})")]
    NotUnimodular(i64),
    #[error("polygon is not tetragonal")]
    NotTetragonal,
    #[error("lattice width {0} is below 4")]
    TooNarrow(i64),
    #[error("second interior hull is empty")]
    NoSecondInterior,
    #[error("polygon is not well-aligned with respect to ({0},{1})")]
    NotWellAligned(i64, i64),
    #[error("excluded case: {0}")]
    ExcludedCase(&'static str),
    #[error("undefined: {0}")]
    Undefined(&'static str),
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("{0} and {1} are not coprime")]
    NotCoprime(i64, i64),
    #[error("inconsistent scrollar invariants: {0}")]
    InconsistentScrollar(String),
    #[error("genus {0} outside the supported range {1}..={2}")]
    GenusOutOfRange(i64, i64, i64),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("face does not belong to the Newton polygon")]
    ForeignFace,
    #[error("support point {0:?} lies outside the container")]
    SupportOutsideContainer(LatticePoint),
    #[error("coefficient field mismatch")]
    FieldMismatch,
    #[error("{0} is not a prime modulus")]
    BadModulus(u64),
    #[error("gave up after {0} rejected samples")]
    GiveUp(usize),
    #[error("cannot decompose {0:?} inside the interior hull")]
    DecompositionFailed(LatticePoint),
    #[error("wrong polygon class: {0}")]
    WrongPolygonClass(&'static str),
    #[error("precondition failed: {0}")]
    Precondition(&'static str),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
