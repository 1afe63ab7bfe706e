//! Canonical textual rendering of symbolic values.
//!
//! The output is the fixed canonical form: Laurent terms in descending
//! graded-lexicographic order, then logarithmic terms in variable order.
//! `parse_expression(render(f)) == f` holds for every representable
//! function.

use crate::symbolic::{Laurent, LogFunc, Monomial, Rational, VARS};
use num_traits::{One, Signed, Zero};

fn render_monomial(m: &Monomial, vars: &[String; VARS]) -> String {
    let mut parts = Vec::new();
    for (i, name) in vars.iter().enumerate() {
        match m.exponent(i) {
            0 => {}
            1 => parts.push(name.clone()),
            e => parts.push(format!("{name}^{e}")),
        }
    }
    parts.join("*")
}

/// One term as (is_negative, body-without-sign).
fn term_body(c: &Rational, m: &Monomial, vars: &[String; VARS]) -> (bool, String) {
    let mag = c.abs();
    let body = if m.is_unit() {
        format!("{mag}")
    } else if mag.is_one() {
        render_monomial(m, vars)
    } else {
        format!("{mag}*{}", render_monomial(m, vars))
    };
    (c.is_negative(), body)
}

fn join_terms(terms: Vec<(bool, String)>) -> String {
    let mut out = String::new();
    for (i, (neg, body)) in terms.iter().enumerate() {
        if i == 0 {
            if *neg {
                out.push('-');
            }
        } else {
            out.push_str(if *neg { " - " } else { " + " });
        }
        out.push_str(body);
    }
    out
}

/// Canonical rendering of a Laurent polynomial with the given variable
/// names.
pub fn render_laurent(f: &Laurent, vars: &[String; VARS]) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    join_terms(
        f.terms_desc()
            .map(|(m, c)| term_body(c, m, vars))
            .collect(),
    )
}

/// Canonical rendering of a polynomial-plus-logarithm function.
pub fn render(f: &LogFunc, vars: &[String; VARS]) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut terms: Vec<(bool, String)> = f
        .poly()
        .terms_desc()
        .map(|(m, c)| term_body(c, m, vars))
        .collect();
    for (i, name) in vars.iter().enumerate() {
        let c = f.log_coefficient(i);
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let body = if mag.is_one() {
            format!("ln({name})")
        } else {
            format!("{mag}*ln({name})")
        };
        terms.push((c.is_negative(), body));
    }
    join_terms(terms)
}
