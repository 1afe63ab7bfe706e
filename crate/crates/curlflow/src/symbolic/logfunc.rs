//! Laurent polynomials extended by rational multiples of coordinate
//! logarithms: the function class housing Hamiltonians and first
//! integrals such as ln x₁ + ln x₂ + ln x₃.
//!
//! Logarithms enter only linearly and only of single coordinates, so the
//! gradient of a `LogFunc` always has Laurent components
//! (∂ ln xᵢ/∂xᵢ = xᵢ⁻¹).

use super::{AlgebraError, EvalError, Laurent, Monomial, Rational, VARS};
use num_traits::Zero;
use std::ops::{Add, Neg, Sub};

/// A Laurent polynomial plus rational multiples of ln(xᵢ).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LogFunc {
    poly: Laurent,
    /// Coefficient of ln(xᵢ) per variable; zero means absent.
    log_coeffs: [Rational; VARS],
}

impl LogFunc {
    pub fn zero() -> Self {
        LogFunc::default()
    }

    pub fn from_laurent(poly: Laurent) -> Self {
        LogFunc {
            poly,
            log_coeffs: Default::default(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        LogFunc::from_laurent(Laurent::constant(c))
    }

    /// ln of the coordinate `var`.
    pub fn ln_var(var: usize) -> Self {
        let mut log_coeffs: [Rational; VARS] = Default::default();
        log_coeffs[var] = Rational::from_integer(1.into());
        LogFunc {
            poly: Laurent::zero(),
            log_coeffs,
        }
    }

    pub fn new(poly: Laurent, log_coeffs: [Rational; VARS]) -> Self {
        LogFunc { poly, log_coeffs }
    }

    pub fn poly(&self) -> &Laurent {
        &self.poly
    }

    pub fn log_coefficient(&self, var: usize) -> &Rational {
        &self.log_coeffs[var]
    }

    pub fn has_logs(&self) -> bool {
        self.log_coeffs.iter().any(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero() && !self.has_logs()
    }

    pub fn scale(&self, c: &Rational) -> LogFunc {
        let mut log_coeffs: [Rational; VARS] = Default::default();
        for (i, k) in log_coeffs.iter_mut().enumerate() {
            *k = &self.log_coeffs[i] * c;
        }
        LogFunc {
            poly: self.poly.scale(c),
            log_coeffs,
        }
    }

    /// Product, defined when at least one operand is log-free and, if the
    /// other has logs, the log-free side is a rational constant.
    pub fn try_mul(&self, rhs: &LogFunc) -> Result<LogFunc, AlgebraError> {
        match (self.has_logs(), rhs.has_logs()) {
            (false, false) => Ok(LogFunc::from_laurent(&self.poly * &rhs.poly)),
            (true, false) => match rhs.poly.as_constant() {
                Some(c) => Ok(self.scale(&c)),
                None => Err(AlgebraError::LogarithmProduct),
            },
            (false, true) => rhs.try_mul(self),
            (true, true) => Err(AlgebraError::LogarithmProduct),
        }
    }

    /// Quotient by an invertible Laurent (monomial × rational); the
    /// dividend may carry logs only when the divisor is constant.
    pub fn try_div(&self, rhs: &LogFunc) -> Result<LogFunc, AlgebraError> {
        if rhs.has_logs() {
            return Err(AlgebraError::LogarithmProduct);
        }
        let inv = rhs.poly.try_inverse()?;
        if self.has_logs() {
            match inv.as_constant() {
                Some(c) => Ok(self.scale(&c)),
                None => Err(AlgebraError::LogarithmProduct),
            }
        } else {
            Ok(LogFunc::from_laurent(&self.poly * &inv))
        }
    }

    /// Integer power. Negative exponents require an invertible base;
    /// logarithmic operands admit only exponents 0 and 1.
    pub fn try_pow(&self, n: i64) -> Result<LogFunc, AlgebraError> {
        if self.has_logs() {
            return match n {
                0 => Ok(LogFunc::constant(Rational::from_integer(1.into()))),
                1 => Ok(self.clone()),
                _ => Err(AlgebraError::LogarithmExponent),
            };
        }
        Ok(LogFunc::from_laurent(self.poly.try_pow(n)?))
    }

    /// Exact partial derivative; ∂(ln xᵢ)/∂xⱼ = δᵢⱼ·xᵢ⁻¹.
    pub fn partial(&self, var: usize) -> Laurent {
        let mut out = self.poly.partial(var);
        if !self.log_coeffs[var].is_zero() {
            let mut exps = [0i64; VARS];
            exps[var] = -1;
            out = &out + &Laurent::term(Monomial::new(exps), self.log_coeffs[var].clone());
        }
        out
    }

    /// All three partial derivatives.
    pub fn partials(&self) -> [Laurent; VARS] {
        [self.partial(0), self.partial(1), self.partial(2)]
    }

    /// Floating evaluation; logarithms require strictly positive
    /// coordinates.
    pub fn eval(&self, point: &[f64; VARS]) -> Result<f64, EvalError> {
        let mut out = self.poly.eval(point)?;
        for (var, c) in self.log_coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if point[var] <= 0.0 {
                return Err(EvalError::LogOfNonPositive { var });
            }
            out += num_traits::ToPrimitive::to_f64(c).unwrap_or(f64::NAN) * point[var].ln();
        }
        Ok(out)
    }
}

impl Add for &LogFunc {
    type Output = LogFunc;
    fn add(self, rhs: &LogFunc) -> LogFunc {
        let mut log_coeffs: [Rational; VARS] = Default::default();
        for (i, k) in log_coeffs.iter_mut().enumerate() {
            *k = &self.log_coeffs[i] + &rhs.log_coeffs[i];
        }
        LogFunc {
            poly: &self.poly + &rhs.poly,
            log_coeffs,
        }
    }
}

impl Sub for &LogFunc {
    type Output = LogFunc;
    fn sub(self, rhs: &LogFunc) -> LogFunc {
        self + &(-rhs)
    }
}

impl Neg for &LogFunc {
    type Output = LogFunc;
    fn neg(self) -> LogFunc {
        let mut log_coeffs: [Rational; VARS] = Default::default();
        for (i, k) in log_coeffs.iter_mut().enumerate() {
            *k = -self.log_coeffs[i].clone();
        }
        LogFunc {
            poly: -&self.poly,
            log_coeffs,
        }
    }
}

impl From<Laurent> for LogFunc {
    fn from(poly: Laurent) -> Self {
        LogFunc::from_laurent(poly)
    }
}
