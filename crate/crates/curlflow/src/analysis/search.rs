//! Exhaustive, deterministic searches: monomial Jacobi last multipliers
//! and polynomial(+log) first integrals by linear ansatz.
//!
//! No heuristics and no randomness — results are complete within the
//! declared bounds and come back in a fixed order.

use super::{check_multiplier, gradient, AnalysisError, VecField};
use crate::symbolic::{
    exact_nullspace, Laurent, LogFunc, Monomial, Rational, RationalMatrix, VARS,
};
use num_traits::{One, Zero};
use std::collections::BTreeSet;

const MAX_BOUND: u32 = 6;

/// All monomials x^a y^b z^c with every exponent in [−bound, bound] that
/// make m·v divergence free, in graded-lexicographic order.
pub fn search_monomial_multiplier(
    v: &VecField,
    bound: u32,
) -> Result<Vec<Laurent>, AnalysisError> {
    if bound > MAX_BOUND {
        return Err(AnalysisError::BoundTooLarge {
            given: bound,
            max: MAX_BOUND,
        });
    }
    let b = bound as i64;
    let mut candidates = Vec::new();
    for a in -b..=b {
        for c in -b..=b {
            for d in -b..=b {
                candidates.push(Monomial::new([a, c, d]));
            }
        }
    }
    candidates.sort();
    let mut found = Vec::new();
    for m in candidates {
        let candidate = Laurent::term(m, Rational::one());
        if check_multiplier(v, &candidate).verdict {
            found.push(candidate);
        }
    }
    Ok(found)
}

/// The ansatz basis functions for `find_polynomial_integrals`: monomials
/// of total degree 1..=dmax (no constant term), then ln(xᵢ) when
/// requested, in a fixed deterministic order.
fn ansatz_basis(dmax: u32, use_logs: bool) -> Vec<LogFunc> {
    let d = dmax as i64;
    let mut monomials = Vec::new();
    for a in 0..=d {
        for b in 0..=d {
            for c in 0..=d {
                let total = a + b + c;
                if total >= 1 && total <= d {
                    monomials.push(Monomial::new([a, b, c]));
                }
            }
        }
    }
    monomials.sort();
    let mut basis: Vec<LogFunc> = monomials
        .into_iter()
        .map(|m| LogFunc::from_laurent(Laurent::term(m, Rational::one())))
        .collect();
    if use_logs {
        for var in 0..VARS {
            basis.push(LogFunc::ln_var(var));
        }
    }
    basis
}

/// Builds the linear system for v·∇I ≡ 0 over the ansatz
/// I = Σ c_m x^m (+ Σ cᵢ ln xᵢ): one matrix column per ansatz function,
/// one row per monomial occurring in any v·∇(basis function). Returns the
/// matrix together with the basis it is indexed by.
pub fn integral_ansatz_matrix(
    v: &VecField,
    dmax: u32,
    use_logs: bool,
) -> (RationalMatrix, Vec<LogFunc>) {
    let basis = ansatz_basis(dmax, use_logs);
    let derivatives: Vec<Laurent> = basis.iter().map(|b| v.dot(&gradient(b))).collect();

    let mut seen: BTreeSet<Monomial> = BTreeSet::new();
    for d in &derivatives {
        for (m, _) in d.terms() {
            seen.insert(*m);
        }
    }
    // Rows in graded-lex order of their monomial.
    let ordered: Vec<Monomial> = seen.into_iter().collect();
    let mut matrix = RationalMatrix::zeros(ordered.len(), basis.len());
    for (col, d) in derivatives.iter().enumerate() {
        for (m, c) in d.terms() {
            let row = ordered.binary_search(m).expect("indexed above");
            matrix.set(row, col, c.clone());
        }
    }
    (matrix, basis)
}

/// Exhaustive first-integral discovery: returns a nullspace basis of the
/// ansatz system as functions, each an exact first integral of v. The
/// empty list means no integral of the requested shape exists.
pub fn find_polynomial_integrals(
    v: &VecField,
    dmax: u32,
    use_logs: bool,
) -> Result<Vec<LogFunc>, AnalysisError> {
    if dmax == 0 || dmax > MAX_BOUND {
        return Err(AnalysisError::BoundTooLarge {
            given: dmax,
            max: MAX_BOUND,
        });
    }
    let (matrix, basis) = integral_ansatz_matrix(v, dmax, use_logs);
    let nullspace = exact_nullspace(&matrix);
    Ok(nullspace
        .into_iter()
        .map(|coeffs| {
            let mut out = LogFunc::zero();
            for (c, b) in coeffs.iter().zip(&basis) {
                if !c.is_zero() {
                    out = &out + &b.scale(c);
                }
            }
            out
        })
        .collect())
}
