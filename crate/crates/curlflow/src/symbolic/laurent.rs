//! Multivariate Laurent polynomials over the rationals in three variables.
//!
//! A `Laurent` is a finite map from exponent vectors (negative exponents
//! allowed, so monomial denominators such as y²/z² are first-class) to
//! nonzero rational coefficients. Terms are kept in graded-lexicographic
//! order, so the representation is canonical and equality is structural.

use super::{AlgebraError, EvalError, Rational};
use num_traits::{One, ToPrimitive, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Number of variables; fixed at three for the whole toolkit.
pub const VARS: usize = 3;

/// Exponent vector of a Laurent monomial, one signed entry per variable.
///
/// The ordering is graded lexicographic: first by total degree, ties
/// broken lexicographically on the exponent vector. Iterating a term map
/// in reverse therefore yields the leading term first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [i64; VARS],
}

impl Monomial {
    pub fn new(exps: [i64; VARS]) -> Self {
        Monomial { exps }
    }

    /// The monomial 1 (all exponents zero).
    pub fn unit() -> Self {
        Monomial { exps: [0; VARS] }
    }

    /// The single variable `var`.
    pub fn var(var: usize) -> Self {
        let mut exps = [0; VARS];
        exps[var] = 1;
        Monomial { exps }
    }

    pub fn exponent(&self, var: usize) -> i64 {
        self.exps[var]
    }

    pub fn exponents(&self) -> &[i64; VARS] {
        &self.exps
    }

    /// Total degree (sum of exponents; may be negative).
    pub fn total_degree(&self) -> i64 {
        self.exps.iter().sum()
    }

    pub fn is_unit(&self) -> bool {
        self.exps == [0; VARS]
    }

    /// Product of monomials = componentwise exponent sum.
    pub fn product(&self, other: &Monomial) -> Monomial {
        let mut exps = [0; VARS];
        for (i, e) in exps.iter_mut().enumerate() {
            *e = self.exps[i] + other.exps[i];
        }
        Monomial { exps }
    }

    pub fn inverse(&self) -> Monomial {
        let mut exps = [0; VARS];
        for (i, e) in exps.iter_mut().enumerate() {
            *e = -self.exps[i];
        }
        Monomial { exps }
    }

    fn eval(&self, point: &[f64; VARS]) -> Result<f64, EvalError> {
        let mut out = 1.0;
        for (var, &e) in self.exps.iter().enumerate() {
            if e < 0 && point[var] == 0.0 {
                return Err(EvalError::PoleAtPoint { var });
            }
            out *= point[var].powi(e as i32);
        }
        Ok(out)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.total_degree(), self.exps).cmp(&(other.total_degree(), other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Exact multivariate Laurent polynomial with rational coefficients.
///
/// Invariant: no stored coefficient is zero; the zero polynomial is the
/// empty term map.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Laurent {
    terms: BTreeMap<Monomial, Rational>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent::default()
    }

    pub fn one() -> Self {
        Laurent::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Laurent::term(Monomial::unit(), c)
    }

    /// The coordinate function of variable `var`.
    pub fn var(var: usize) -> Self {
        Laurent::term(Monomial::var(var), Rational::one())
    }

    /// A single term `c * x^m` (empty polynomial when `c` is zero).
    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Laurent { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(iter: I) -> Self {
        let mut out = Laurent::zero();
        for (m, c) in iter {
            out.add_term(m, c);
        }
        out
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in graded-lexicographic order (trailing term first).
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Terms with the leading (graded-lex greatest) term first.
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// The polynomial viewed as a single term, if it is one.
    pub fn as_single_term(&self) -> Option<(&Monomial, &Rational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// True when the constant term is the only term.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        match self.as_single_term() {
            Some((m, c)) if m.is_unit() => Some(c.clone()),
            _ => None,
        }
    }

    /// Multiplicative inverse, defined exactly for a nonzero single term.
    pub fn try_inverse(&self) -> Result<Laurent, AlgebraError> {
        match self.as_single_term() {
            Some((m, c)) => Ok(Laurent::term(m.inverse(), Rational::one() / c)),
            None if self.is_zero() => Err(AlgebraError::DivisionByZero),
            None => Err(AlgebraError::NonMonomialDivisor),
        }
    }

    /// True when `self` is a nonzero rational multiple of one monomial.
    pub fn is_invertible(&self) -> bool {
        self.as_single_term().is_some()
    }

    /// True when no exponent is negative.
    pub fn is_polynomial(&self) -> bool {
        self.terms
            .keys()
            .all(|m| m.exponents().iter().all(|&e| e >= 0))
    }

    pub fn scale(&self, c: &Rational) -> Laurent {
        if c.is_zero() {
            return Laurent::zero();
        }
        Laurent {
            terms: self.terms.iter().map(|(m, k)| (*m, k * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Laurent {
        Laurent {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.product(m), c.clone()))
                .collect(),
        }
    }

    /// Exact power; negative exponents require an invertible base.
    pub fn try_pow(&self, n: i64) -> Result<Laurent, AlgebraError> {
        if n < 0 {
            let inv = self.try_inverse()?;
            return inv.try_pow(-n);
        }
        let mut out = Laurent::one();
        for _ in 0..n {
            out = &out * self;
        }
        Ok(out)
    }

    /// Exact partial derivative with respect to variable `var`.
    pub fn partial(&self, var: usize) -> Laurent {
        let mut out = Laurent::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(var);
            if e != 0 {
                let mut exps = *m.exponents();
                exps[var] -= 1;
                out.add_term(Monomial::new(exps), c * Rational::from_integer(e.into()));
            }
        }
        out
    }

    /// Floating evaluation at a point; errors on poles.
    pub fn eval(&self, point: &[f64; VARS]) -> Result<f64, EvalError> {
        let mut out = 0.0;
        for (m, c) in &self.terms {
            let coeff = c.to_f64().unwrap_or(f64::NAN);
            out += coeff * m.eval(point)?;
        }
        Ok(out)
    }

    /// Smallest exponent of each variable over all terms (0 for the zero
    /// polynomial).
    pub fn min_exponents(&self) -> [i64; VARS] {
        let mut mins = [0i64; VARS];
        for m in self.terms.keys() {
            for (i, min) in mins.iter_mut().enumerate() {
                *min = (*min).min(m.exponent(i));
            }
        }
        mins
    }

    /// Multiplies by the smallest monomial that clears every negative
    /// exponent, returning the polynomial result. Preserves zeroness.
    pub fn clear_denominators(&self) -> Laurent {
        let mins = self.min_exponents();
        if mins.iter().all(|&e| e >= 0) {
            return self.clone();
        }
        let mut exps = [0i64; VARS];
        for (i, e) in exps.iter_mut().enumerate() {
            *e = (-mins[i]).max(0);
        }
        self.mul_monomial(&Monomial::new(exps))
    }

    /// Largest total degree over the terms; `None` for zero.
    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    /// Dot product of two 3-vectors of Laurent polynomials.
    pub fn dot(a: &[Laurent; VARS], b: &[Laurent; VARS]) -> Laurent {
        let mut out = Laurent::zero();
        for i in 0..VARS {
            out = &out + &(&a[i] * &b[i]);
        }
        out
    }

    /// Cross product of two 3-vectors of Laurent polynomials.
    pub fn cross(a: &[Laurent; VARS], b: &[Laurent; VARS]) -> [Laurent; VARS] {
        [
            &(&a[1] * &b[2]) - &(&a[2] * &b[1]),
            &(&a[2] * &b[0]) - &(&a[0] * &b[2]),
            &(&a[0] * &b[1]) - &(&a[1] * &b[0]),
        ]
    }
}

impl Add for &Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &Laurent {
    type Output = Laurent;
    fn sub(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl Mul for &Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.product(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

impl fmt::Display for Laurent {
    /// Debug-oriented display with positional variable names x, y, z.
    /// User-facing rendering with the system's own names lives in the
    /// parser module.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}",
            crate::parser::render_laurent(self, &["x".into(), "y".into(), "z".into()])
        )
    }
}

