//! Exact scalars, Laurent polynomials and localized coordinate rings.
//!
//! Nothing in this crate uses floating point; coefficients are rationals and
//! point counting runs in prime fields.

mod laurent;
mod matrix;
pub mod parse;
mod ring;
mod scalar;

use thiserror::Error;

pub use laurent::{vars, Exponents, LaurentPoly, PolyOp, Vars};
pub use matrix::{Matrix, RingElem};
pub use parse::{collect_vars, parse_poly, parse_poly_auto, ParseError};
pub use ring::{
    CoordinateRing, PresentationFile, Provenance, VarietyPresentation, DEFAULT_ENUMERATION_CAP,
};
pub use scalar::{check_prime, is_prime, parse_rational, Domain, Fp, Scalar, MAX_MODULUS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgError {
    #[error("variable lists differ: {left:?} vs {right:?}")]
    ArityMismatch { left: Vec<String>, right: Vec<String> },
    #[error("point has {got} coordinates but there are {expected} variables")]
    PointLength { expected: usize, got: usize },
    #[error("division by zero: `{0}` appears with a negative exponent and is assigned 0")]
    Pole(String),
    #[error("{0} is not a prime modulus at most 2^31")]
    NotPrime(u64),
    #[error("coefficient {coefficient} is undefined modulo {modulus}")]
    CoefficientModulus { coefficient: String, modulus: u64 },
    #[error("scalars from different fields")]
    DomainMismatch,
    #[error("enumerating {q}^{vars} assignments exceeds the cap {cap}")]
    CapExceeded { q: u64, vars: usize, cap: u64 },
    #[error("`{0}` has negative exponents where a polynomial is required")]
    NotPolynomial(String),
    #[error("`{0}` is not a Laurent unit")]
    NotInvertible(String),
    #[error("invalid or duplicate variable name `{0}`")]
    BadVariable(String),
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// `lhs op rhs` with an arity check.
pub fn poly_op(lhs: &LaurentPoly, rhs: &LaurentPoly, op: PolyOp) -> Result<LaurentPoly, AlgError> {
    lhs.op(op, rhs)
}

/// Value of `f` at `point`, optionally reduced modulo a prime.
pub fn evaluate(f: &LaurentPoly, point: &[Scalar], modulus: Option<u64>) -> Result<Scalar, AlgError> {
    f.evaluate(point, modulus)
}

/// All 𝔽_q-points of `ring` under the default enumeration cap.
pub fn enumerate_points(ring: &CoordinateRing, q: u64) -> Result<Vec<Vec<u64>>, AlgError> {
    ring.enumerate_points(q, DEFAULT_ENUMERATION_CAP)
}
