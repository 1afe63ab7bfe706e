//! Deterministic random sampling of symbolic values, shared by the
//! property-test suites and the `selftest` subcommand. All generators
//! take an explicit RNG so a seed reproduces the exact batch.

use crate::analysis::VecField;
use crate::exterior::DiffForm;
use crate::symbolic::{Laurent, LogFunc, Monomial, Rational, VARS};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small nonzero rational with numerator in ±1..=9 and denominator 1..=4.
pub fn rational<R: Rng>(rng: &mut R) -> Rational {
    let numer = loop {
        let n = rng.gen_range(-9i64..=9);
        if n != 0 {
            break n;
        }
    };
    let denom = rng.gen_range(1i64..=4);
    Rational::new(numer.into(), denom.into())
}

/// Monomial with each exponent drawn from the given range.
pub fn monomial<R: Rng>(rng: &mut R, lo: i64, hi: i64) -> Monomial {
    Monomial::new([
        rng.gen_range(lo..=hi),
        rng.gen_range(lo..=hi),
        rng.gen_range(lo..=hi),
    ])
}

/// Laurent polynomial with up to `terms` random terms and exponents in
/// [lo, hi] per variable.
pub fn laurent<R: Rng>(rng: &mut R, terms: usize, lo: i64, hi: i64) -> Laurent {
    let n = rng.gen_range(1..=terms.max(1));
    Laurent::from_terms((0..n).map(|_| (monomial(rng, lo, hi), rational(rng))))
}

/// Polynomial (no negative exponents) of total degree ≤ `max_degree`.
pub fn polynomial<R: Rng>(rng: &mut R, terms: usize, max_degree: i64) -> Laurent {
    let n = rng.gen_range(1..=terms.max(1));
    Laurent::from_terms((0..n).map(|_| {
        let m = loop {
            let m = monomial(rng, 0, max_degree);
            if m.total_degree() <= max_degree {
                break m;
            }
        };
        (m, rational(rng))
    }))
}

/// Polynomial function of total degree ≤ `max_degree` (no logs).
pub fn poly_logfunc<R: Rng>(rng: &mut R, terms: usize, max_degree: i64) -> LogFunc {
    LogFunc::from_laurent(polynomial(rng, terms, max_degree))
}

/// Laurent-plus-logs function for round-trip style tests.
pub fn logfunc<R: Rng>(rng: &mut R, terms: usize, lo: i64, hi: i64) -> LogFunc {
    let poly = laurent(rng, terms, lo, hi);
    let mut logs: [Rational; VARS] = Default::default();
    for slot in logs.iter_mut() {
        if rng.gen_bool(0.4) {
            *slot = rational(rng);
        }
    }
    LogFunc::new(poly, logs)
}

/// Vector field with polynomial components of degree ≤ `max_degree`.
pub fn poly_vecfield<R: Rng>(rng: &mut R, terms: usize, max_degree: i64) -> VecField {
    VecField::new([
        polynomial(rng, terms, max_degree),
        polynomial(rng, terms, max_degree),
        polynomial(rng, terms, max_degree),
    ])
}

/// Vector field with Laurent components.
pub fn laurent_vecfield<R: Rng>(rng: &mut R, terms: usize, lo: i64, hi: i64) -> VecField {
    VecField::new([
        laurent(rng, terms, lo, hi),
        laurent(rng, terms, lo, hi),
        laurent(rng, terms, lo, hi),
    ])
}

/// Differential form of the given degree with polynomial coefficients.
pub fn poly_form<R: Rng>(rng: &mut R, degree: usize, terms: usize, max_degree: i64) -> DiffForm {
    match degree {
        0 => DiffForm::scalar(polynomial(rng, terms, max_degree)),
        1 => DiffForm::one_form([
            polynomial(rng, terms, max_degree),
            polynomial(rng, terms, max_degree),
            polynomial(rng, terms, max_degree),
        ]),
        2 => DiffForm::two_form([
            polynomial(rng, terms, max_degree),
            polynomial(rng, terms, max_degree),
            polynomial(rng, terms, max_degree),
        ]),
        3 => DiffForm::volume_form(polynomial(rng, terms, max_degree)),
        _ => panic!("degree out of range"),
    }
}

/// Differential form with Laurent coefficients.
pub fn laurent_form<R: Rng>(rng: &mut R, degree: usize, terms: usize, lo: i64, hi: i64) -> DiffForm {
    match degree {
        0 => DiffForm::scalar(laurent(rng, terms, lo, hi)),
        1 => DiffForm::one_form([
            laurent(rng, terms, lo, hi),
            laurent(rng, terms, lo, hi),
            laurent(rng, terms, lo, hi),
        ]),
        2 => DiffForm::two_form([
            laurent(rng, terms, lo, hi),
            laurent(rng, terms, lo, hi),
            laurent(rng, terms, lo, hi),
        ]),
        3 => DiffForm::volume_form(laurent(rng, terms, lo, hi)),
        _ => panic!("degree out of range"),
    }
}
