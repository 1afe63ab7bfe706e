use super::*;
use crate::sample;
use crate::symbolic::{rat, rat_int, Laurent};
use std::collections::BTreeMap;

fn xyz() -> [String; 3] {
    ["x".into(), "y".into(), "z".into()]
}

fn parse(src: &str) -> Result<crate::symbolic::LogFunc, ParseError> {
    parse_expression(src, &xyz(), &BTreeMap::new())
}

fn kind_of(src: &str) -> ParseErrorKind {
    parse(src).expect_err("expected a parse error").kind
}

#[test]
fn parses_superintegrable_integral_in_division_form() {
    let f = parse("x*z - y^2/2 - x^3/3").unwrap();
    let g = parse("x*z - 1/2*y^2 - 1/3*x^3").unwrap();
    assert_eq!(f, g);
    assert_eq!(f.partial(0), parse("z - x^2").unwrap().poly().clone());
}

#[test]
fn parses_log_sums() {
    let vars: [String; 3] = ["x1".into(), "x2".into(), "x3".into()];
    let f = parse_expression("ln(x1)+ln(x2)+ln(x3)", &vars, &BTreeMap::new()).unwrap();
    assert!(f.has_logs());
    for var in 0..3 {
        assert_eq!(*f.log_coefficient(var), rat_int(1));
    }
    assert!(f.poly().is_zero());
}

#[test]
fn rejects_non_monomial_denominators() {
    assert_eq!(kind_of("1/(x+y)"), ParseErrorKind::NonMonomialDenominator);
    assert_eq!(kind_of("(x+y)^-1"), ParseErrorKind::NonMonomialDenominator);
}

#[test]
fn rejects_implicit_multiplication() {
    assert_eq!(kind_of("2x"), ParseErrorKind::Syntax);
}

#[test]
fn rejects_unknown_identifiers() {
    assert_eq!(kind_of("x + w"), ParseErrorKind::UnknownIdentifier);
}

#[test]
fn rejects_non_integer_exponents() {
    assert_eq!(kind_of("x^y"), ParseErrorKind::NonIntegerExponent);
    assert_eq!(kind_of("x^(2)"), ParseErrorKind::NonIntegerExponent);
}

#[test]
fn rejects_bad_log_arguments() {
    assert_eq!(kind_of("ln(2)"), ParseErrorKind::LogOfNonVariable);
    assert_eq!(kind_of("ln(x, y)"), ParseErrorKind::WrongArity);
    assert_eq!(kind_of("ln()"), ParseErrorKind::WrongArity);
}

#[test]
fn rejects_log_products_and_powers() {
    assert_eq!(kind_of("x*ln(x)"), ParseErrorKind::Syntax);
    assert_eq!(kind_of("ln(x)^2"), ParseErrorKind::Syntax);
}

#[test]
fn caret_binds_tighter_than_unary_minus() {
    let f = parse("-x^2").unwrap();
    assert_eq!(f, parse("0 - x^2").unwrap());
    let g = parse("(-x)^2").unwrap();
    assert_eq!(g, parse("x^2").unwrap());
}

#[test]
fn negative_exponents_on_monomials() {
    let f = parse("y^2*z^-2").unwrap();
    assert_eq!(f, parse("y^2/z^2").unwrap());
    let g = parse("(x*y)^-1").unwrap();
    assert_eq!(g, parse("1/(x*y)").unwrap());
}

#[test]
fn params_are_bound_as_rationals() {
    let mut params = BTreeMap::new();
    params.insert("r".to_string(), rat(1, 2));
    let f = parse_expression("r*x + r", &xyz(), &params).unwrap();
    assert_eq!(f, parse("1/2*x + 1/2").unwrap());
}

#[test]
fn errors_carry_positions() {
    let err = parse("x + + y").unwrap_err();
    assert_eq!(err.line, 1);
    assert_eq!(err.column, 5);
    let err = parse_expression_at("1/(x+y)", &xyz(), &BTreeMap::new(), 7, 3).unwrap_err();
    assert_eq!(err.line, 7);
    assert_eq!(err.column, 4);
}

#[test]
fn parse_is_deterministic() {
    let a = parse("x*z - y^2/2 - x^3/3 + ln(x)").unwrap();
    let b = parse("x*z - y^2/2 - x^3/3 + ln(x)").unwrap();
    assert_eq!(a, b);
    assert_eq!(render(&a, &xyz()), render(&b, &xyz()));
}

const MINIMAL_SYSTEM: &str = "\
[system]
name = demo
variables = x y z

[field]
x' = y
y' = z
z' = x*y
";

#[test]
fn parses_field_systems() {
    let def = parse_system(MINIMAL_SYSTEM).unwrap();
    assert_eq!(def.name, "demo");
    assert_eq!(def.variables, xyz());
    assert_eq!(*def.field.component(2), parse("x*y").unwrap().poly().clone());
    assert!(def.potential.is_none());
    assert!(def.integrals.is_empty());
}

#[test]
fn derives_field_from_potential() {
    let src = "\
[system]
name = curl-demo
variables = x y z

[potential]
components = 1/4*z^2 - 1/4*x*y^2; 1/4*x^2*y - 1/2*y*z; 1/4*y^2 - 1/2*x*z

[integrals]
x*z - 1/2*y^2 - 1/3*x^3
1/2*x^2 - z
";
    let def = parse_system(src).unwrap();
    assert!(def.potential.is_some());
    assert_eq!(def.integrals.len(), 2);
    let expected = crate::analysis::VecField::new([
        parse("y").unwrap().poly().clone(),
        parse("z").unwrap().poly().clone(),
        parse("x*y").unwrap().poly().clone(),
    ]);
    assert_eq!(def.field, expected);
}

#[test]
fn rejects_field_and_potential_together() {
    let src = "\
[system]
name = broken
variables = x y z

[field]
components = y; z; x*y

[potential]
components = x; y; z
";
    assert!(matches!(
        parse_system(src),
        Err(SystemError::BothFieldAndPotential { .. })
    ));
}

#[test]
fn parses_sir_with_params() {
    let src = "\
[system]
name = sir-demo
variables = S I R

[params]
r = 1
a = 1

[field]
S' = -r*S*I
I' = r*S*I - a*I
R' = a*I
";
    let def = parse_system(src).unwrap();
    let vars: [String; 3] = ["S".into(), "I".into(), "R".into()];
    let s_dot = parse_expression("-S*I", &vars, &BTreeMap::new()).unwrap();
    assert_eq!(*def.field.component(0), s_dot.poly().clone());
    assert_eq!(def.params.get("r"), Some(&rat_int(1)));
}

#[test]
fn missing_sections_are_reported() {
    assert!(matches!(
        parse_system("[field]\ncomponents = x; y; z\n"),
        Err(SystemError::MissingSection(_))
    ));
    assert!(matches!(
        parse_system("[system]\nname = n\nvariables = x y z\n"),
        Err(SystemError::MissingSection(_))
    ));
}

#[test]
fn unknown_and_duplicate_sections_are_rejected() {
    let src = "[system]\nname = n\nvariables = x y z\n[plotting]\n";
    assert!(matches!(
        parse_system(src),
        Err(SystemError::UnknownSection { .. })
    ));
    let src = "[system]\nname = n\nvariables = x y z\n[field]\ncomponents = y; z; x\n[field]\ncomponents = y; z; x\n";
    assert!(matches!(
        parse_system(src),
        Err(SystemError::DuplicateSection { .. })
    ));
}

#[test]
fn non_invertible_multiplier_is_rejected_at_parse_time() {
    let src = "\
[system]
name = n
variables = x y z

[field]
components = y; z; x*y

[multiplier]
x + y
";
    assert!(matches!(parse_system(src), Err(SystemError::Malformed { .. })));
}

#[test]
fn system_parse_errors_point_into_the_file() {
    let src = "\
[system]
name = n
variables = x y z

[field]
x' = y
y' = 1/(x+y)
z' = x
";
    match parse_system(src) {
        Err(SystemError::Parse(e)) => {
            assert_eq!(e.kind, ParseErrorKind::NonMonomialDenominator);
            assert_eq!(e.line, 7);
        }
        other => panic!("expected a positioned parse error, got {other:?}"),
    }
}

#[test]
fn renders_canonical_forms() {
    let f = parse("1/2*x^2 - z").unwrap();
    assert_eq!(render(&f, &xyz()), "1/2*x^2 - z");
    assert_eq!(render(&crate::symbolic::LogFunc::zero(), &xyz()), "0");
    let g = parse("ln(x) + ln(y) + ln(z)").unwrap();
    assert_eq!(render(&g, &xyz()), "ln(x) + ln(y) + ln(z)");
    let h = parse("-1/4*y^3 + x*y^2 - 2*ln(z)").unwrap();
    assert_eq!(render(&h, &xyz()), "x*y^2 - 1/4*y^3 - 2*ln(z)");
}

#[test]
fn render_orders_terms_by_graded_lex() {
    let f = parse("z + x^2*y - 4 + x*y*z + y^-2").unwrap();
    assert_eq!(render(&f, &xyz()), "x^2*y + x*y*z + z - 4 + y^-2");
}

#[test]
fn round_trip_on_random_functions() {
    let mut rng = sample::rng(61);
    for _ in 0..100 {
        let f = sample::logfunc(&mut rng, 5, -3, 3);
        let rendered = render(&f, &xyz());
        let reparsed = parse(&rendered).unwrap_or_else(|e| {
            panic!("canonical render must reparse: {rendered:?}: {e}");
        });
        assert_eq!(reparsed, f, "round trip of {rendered}");
    }
}

#[test]
fn laurent_display_uses_positional_names() {
    let f: Laurent = parse("x^2 - y").unwrap().poly().clone();
    assert_eq!(f.to_string(), "x^2 - y");
}
