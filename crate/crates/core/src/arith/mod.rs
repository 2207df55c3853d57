//! Exact field arithmetic, weighted Laurent polynomials in `x, y` and univariate
//! polynomials over the ground field.

mod poly;
mod scalar;
mod unipoly;

pub use poly::{
    dehomogenize, graded_monomials, normal_form, normal_form_poly, rehomogenize, HomogeneousPoly,
    Monomial, Poly, Weights,
};
pub use scalar::{is_prime, Field, Scalar, MAX_PRIME};
pub use unipoly::UniPoly;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithError {
    #[error("{0} is not a prime below 2^61")]
    NotPrime(u64),
    #[error("unknown field {0:?}; expected \"q\" or \"p:PRIME\"")]
    BadField(String),
    #[error("cannot parse scalar {0:?}")]
    BadScalar(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("zero modulus")]
    ZeroModulus,
    #[error("not dehomogenizable: x-exponent {exponent} is not a multiple of {n}")]
    NotDehomogenizable { exponent: i64, n: u32 },
    #[error("weights ({m}, {n}) must be positive and coprime")]
    BadWeights { m: u32, n: u32 },
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
}
