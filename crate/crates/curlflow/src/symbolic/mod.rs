//! Exact symbolic kernel: arbitrary-precision rationals, multivariate
//! Laurent polynomials in three variables, polynomial-plus-logarithm
//! functions, and exact linear algebra.
//!
//! Everything downstream (exterior calculus, structure analysis, the
//! numeric cross-checks) is built on the types in this module. All values
//! are immutable after construction and canonical: equality is structural
//! equality of canonical forms.

mod laurent;
mod logfunc;
mod matrix;

pub use laurent::{Laurent, Monomial, VARS};
pub use logfunc::LogFunc;
pub use matrix::{exact_nullspace, RationalMatrix};

use thiserror::Error;

/// Exact rational scalar. `num_rational::BigRational` keeps the canonical
/// form we require: gcd(|numerator|, denominator) = 1, denominator > 0,
/// zero stored as 0/1.
pub type Rational = num_rational::BigRational;

/// Shorthand for a rational from a numerator/denominator pair.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(numer.into(), denom.into())
}

/// Shorthand for an integer rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Failures of exact algebraic operations that are only defined on a
/// restricted class of operands.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    /// Division is exact only by invertible elements: a nonzero rational
    /// times a single monomial.
    #[error("division by a non-monomial expression")]
    NonMonomialDivisor,
    /// Logarithmic terms enter linearly with rational coefficients; they
    /// cannot be multiplied by non-constant expressions.
    #[error("logarithmic terms may only be scaled by rational constants")]
    LogarithmProduct,
    /// ln(x) raised to a power other than 0 or 1 leaves the representable
    /// function class.
    #[error("logarithmic terms cannot be exponentiated")]
    LogarithmExponent,
    #[error("division by zero")]
    DivisionByZero,
}

/// Failures of floating-point evaluation at a concrete point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum EvalError {
    /// A negative exponent met a zero coordinate.
    #[error("pole at evaluation point: variable #{var} is zero with a negative exponent")]
    PoleAtPoint { var: usize },
    /// ln of a coordinate that is not strictly positive.
    #[error("logarithm of non-positive coordinate #{var}")]
    LogOfNonPositive { var: usize },
}

#[cfg(test)]
mod tests;
