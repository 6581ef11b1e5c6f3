//! Exact scalar arithmetic and polynomial algebra.
//!
//! The coefficient domain everywhere is [`Scalar`]: an arbitrary-precision
//! rational or an element of a prime field `F_p`, tagged with its field so
//! mixed-field arithmetic is caught at the boundary. On top of scalars sit
//! univariate polynomials, binary forms (homogeneous in two variables), and
//! homogeneous ternary polynomials with their resultant and discriminant
//! machinery.

mod binary;
mod homog;
mod matrix;
mod parse;
mod scalar;
mod uni;

pub use binary::{BinaryForm, PointP1, RootEntry, SquarefreePart};
pub use homog::{
    discriminant_of_y_poly, form_space_dim, monomials, pencil_basis, restrict_to_pencil,
    HomogPoly, Mat3, PencilRestriction,
};
pub use matrix::{bareiss_det, det3, nullspace, rank, Entry};
pub use parse::{parse_point, parse_point_p1, parse_poly, parse_scalar, ParseError};
pub use scalar::{is_prime_u64, FieldTag, Scalar};
pub use uni::{rational_roots, UniPoly};

use alloc::string::String;
use core::fmt;

/// Errors raised by the algebra layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    /// Operands live over different fields.
    FieldMismatch { left: FieldTag, right: FieldTag },
    /// The zero polynomial was passed where a nonzero one is required.
    ZeroPolynomial,
    /// Division by zero (or inversion of zero).
    DivisionByZero,
    /// The leading coefficient vanishes identically, so the discriminant
    /// normalization is undefined (center on the curve or degenerate input).
    ZeroLeadingCoefficient,
    /// A polynomial that must be homogeneous of one degree is not.
    NotHomogeneous(String),
    /// The modulus of a prime field is not prime.
    NonPrimeModulus(u64),
    /// Characteristic too small for the requested operation.
    BadCharacteristic(String),
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::FieldMismatch { left, right } => {
                write!(f, "field mismatch: {} vs {}", left, right)
            }
            AlgebraError::ZeroPolynomial => write!(f, "zero polynomial not allowed here"),
            AlgebraError::DivisionByZero => write!(f, "division by zero"),
            AlgebraError::ZeroLeadingCoefficient => {
                write!(f, "leading coefficient vanishes identically")
            }
            AlgebraError::NotHomogeneous(s) => write!(f, "not homogeneous: {}", s),
            AlgebraError::NonPrimeModulus(p) => write!(f, "{} is not prime", p),
            AlgebraError::BadCharacteristic(s) => write!(f, "bad characteristic: {}", s),
        }
    }
}
