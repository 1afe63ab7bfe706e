use super::*;
use crate::parser::parse_expression;
use crate::sample;
use num_traits::Zero;

fn xyz() -> [String; 3] {
    ["x".into(), "y".into(), "z".into()]
}

fn lf(src: &str) -> LogFunc {
    parse_expression(src, &xyz(), &Default::default()).expect("test expression parses")
}

fn lau(src: &str) -> Laurent {
    let f = lf(src);
    assert!(!f.has_logs(), "expected a log-free expression");
    f.poly().clone()
}

#[test]
fn laurent_product_difference_of_squares() {
    let lhs = &lau("x + y") * &lau("x - y");
    assert_eq!(lhs, lau("x^2 - y^2"));
}

#[test]
fn laurent_product_cancels_exponents() {
    let lhs = &lau("y^2*z^-2") * &lau("z^2");
    assert_eq!(lhs, lau("y^2"));
}

#[test]
fn laurent_subtraction_of_self_is_empty() {
    let f = lau("x*y + y*z + z*x");
    let diff = &f - &f;
    assert!(diff.is_zero());
    assert_eq!(diff.num_terms(), 0);
}

#[test]
fn partial_derivative_of_superintegrable_integral() {
    let f = lf("x*z - 1/2*y^2 - 1/3*x^3");
    assert_eq!(f.partial(0), lau("z - x^2"));
    assert_eq!(f.partial(1), lau("-y"));
    assert_eq!(f.partial(2), lau("x"));
}

#[test]
fn partial_derivative_of_log_sum() {
    let f = lf("ln(x) + ln(y) + ln(z)");
    assert_eq!(f.partial(1), lau("y^-1"));
}

#[test]
fn partial_derivative_of_constant_vanishes() {
    let f = lf("5");
    for var in 0..3 {
        assert!(f.partial(var).is_zero());
    }
}

#[test]
fn evaluate_polynomial() {
    let f = lf("1/2*x^2 - z");
    assert_eq!(f.eval(&[2.0, 0.0, 1.0]).unwrap(), 1.0);
}

#[test]
fn evaluate_reports_poles() {
    let f = lf("y^2*z^-2");
    assert_eq!(
        f.eval(&[0.0, 1.0, 0.0]),
        Err(EvalError::PoleAtPoint { var: 2 })
    );
}

#[test]
fn evaluate_rejects_log_of_non_positive() {
    let f = lf("ln(x)");
    assert_eq!(
        f.eval(&[-1.0, 0.0, 0.0]),
        Err(EvalError::LogOfNonPositive { var: 0 })
    );
}

#[test]
fn nullspace_of_rank_one_matrix() {
    let m = RationalMatrix::from_rows(vec![
        vec![rat_int(1), rat_int(2)],
        vec![rat_int(2), rat_int(4)],
    ]);
    let basis = exact_nullspace(&m);
    assert_eq!(basis, vec![vec![rat_int(-2), rat_int(1)]]);
}

#[test]
fn nullspace_of_identity_is_trivial() {
    let mut m = RationalMatrix::zeros(3, 3);
    for i in 0..3 {
        m.set(i, i, rat_int(1));
    }
    assert!(exact_nullspace(&m).is_empty());
}

#[test]
fn nullspace_of_zero_matrix_is_standard_basis() {
    let m = RationalMatrix::zeros(2, 3);
    let basis = exact_nullspace(&m);
    assert_eq!(basis.len(), 3);
    for (i, v) in basis.iter().enumerate() {
        for (j, c) in v.iter().enumerate() {
            assert_eq!(*c, rat_int((i == j) as i64));
        }
    }
}

#[test]
fn nullspace_entries_are_integral_with_content_one() {
    let m = RationalMatrix::from_rows(vec![vec![rat(1, 2), rat(1, 3), rat(1, 5)]]);
    for v in exact_nullspace(&m) {
        let mut gcd = num_bigint::BigInt::zero();
        for c in &v {
            assert_eq!(*c.denom(), 1.into(), "entries must be integers");
            gcd = num_integer::Integer::gcd(&gcd, c.numer());
        }
        assert_eq!(gcd, 1.into());
    }
}

#[test]
fn ring_axioms_hold_exactly() {
    let mut rng = sample::rng(11);
    for _ in 0..60 {
        let a = sample::laurent(&mut rng, 4, -3, 3);
        let b = sample::laurent(&mut rng, 4, -3, 3);
        let c = sample::laurent(&mut rng, 4, -3, 3);
        assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        assert_eq!(&a + &b, &b + &a);
        assert_eq!(&a * &b, &b * &a);
    }
}

#[test]
fn partial_derivative_satisfies_leibniz_rule() {
    let mut rng = sample::rng(12);
    for _ in 0..60 {
        let f = sample::laurent(&mut rng, 4, -3, 3);
        let g = sample::laurent(&mut rng, 4, -3, 3);
        for var in 0..3 {
            let lhs = (&f * &g).partial(var);
            let rhs = &(&f.partial(var) * &g) + &(&f * &g.partial(var));
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn nullspace_vectors_are_annihilated_exactly() {
    let mut rng = sample::rng(13);
    for _ in 0..40 {
        let rows = rand::Rng::gen_range(&mut rng, 1..=5usize);
        let cols = rand::Rng::gen_range(&mut rng, 1..=5usize);
        let mut m = RationalMatrix::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                if rand::Rng::gen_bool(&mut rng, 0.7) {
                    m.set(r, c, sample::rational(&mut rng));
                }
            }
        }
        let basis = exact_nullspace(&m);
        for v in &basis {
            for entry in m.mul_vec(v) {
                assert!(entry.is_zero());
            }
        }
    }
}

#[test]
fn canonical_form_is_idempotent() {
    let mut rng = sample::rng(14);
    for _ in 0..40 {
        let a = sample::laurent(&mut rng, 5, -3, 3);
        // Rebuilding from the term stream must not change anything, and
        // neutral operations must return the identical value.
        let rebuilt = Laurent::from_terms(a.terms().map(|(m, c)| (*m, c.clone())));
        assert_eq!(a, rebuilt);
        assert_eq!(&a + &Laurent::zero(), a);
        assert_eq!(&a * &Laurent::one(), a);
        assert_eq!(a.scale(&rat_int(1)), a);
    }
}

#[test]
fn try_inverse_requires_single_terms() {
    assert_eq!(
        lau("x + y").try_inverse(),
        Err(AlgebraError::NonMonomialDivisor)
    );
    assert_eq!(
        Laurent::zero().try_inverse(),
        Err(AlgebraError::DivisionByZero)
    );
    let inv = lau("2*x*y^2").try_inverse().unwrap();
    assert_eq!(inv, lau("1/2*x^-1*y^-2"));
}

#[test]
fn logfunc_products_with_logs_are_rejected() {
    let x = lf("x");
    let lnx = lf("ln(x)");
    assert_eq!(x.try_mul(&lnx), Err(AlgebraError::LogarithmProduct));
    assert_eq!(lnx.try_pow(2), Err(AlgebraError::LogarithmExponent));
    let two = lf("2");
    assert_eq!(two.try_mul(&lnx).unwrap(), lf("2*ln(x)"));
}

#[test]
fn clear_denominators_scales_to_polynomial() {
    let f = lau("y^2*z^-2 + x^-1");
    let cleared = f.clear_denominators();
    assert!(cleared.is_polynomial());
    assert_eq!(cleared, lau("x*y^2 + z^2"));
}
