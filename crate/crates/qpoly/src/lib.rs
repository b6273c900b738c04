//! Exact arithmetic for polynomials in `q` written as
//! `scalar · q^k · ∏ Φ_d^{m_d}`, together with the dense form used for
//! evaluation and comparison.

mod cyclotomic;
mod dense;
mod factored;

pub use cyclotomic::{cyclotomic, divisors, totient};
pub use dense::DensePoly;
pub use factored::{CycloPoly, NonFactorable};
pub use num::BigRational;

/// Errors raised by factored-polynomial operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QpolyError {
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("{numerator} is not divisible by {denominator}")]
    NotDivisible { numerator: String, denominator: String },
    #[error("polynomial syntax error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
}

/// Convenience constructor for an integer as an exact rational.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}
