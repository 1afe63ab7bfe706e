//! The system-definition file format.
//!
//! UTF-8, line oriented, `#` starts a comment. Sections in free order:
//!
//! ```text
//! [system]              name = <string>; variables = <id> <id> <id>
//! [params]              <id> = <rational>            (optional)
//! [field] | [potential] three lines "<var>' = <expr>"
//!                       or "components = <expr>; <expr>; <expr>"
//! [integrals]           zero or more "<expr>" lines   (optional)
//! [multiplier]          one "<expr>" line, invertible (optional)
//! [one_form]            "components = <expr>; <expr>; <expr>" (optional)
//! ```
//!
//! Exactly one of `[field]`/`[potential]` must be present; a potential is
//! differentiated into the field via the curl.

use super::expr::parse_expression_at;
use super::ParseError;
use crate::analysis::{curl, VecField};
use crate::symbolic::{Laurent, LogFunc, Rational, VARS};
use std::collections::BTreeMap;
use thiserror::Error;

/// A fully parsed and bound system description.
#[derive(Debug, Clone)]
pub struct SystemDef {
    pub name: String,
    pub variables: [String; VARS],
    /// The dynamics ẋ = v(x); derived via curl when a potential was given.
    pub field: VecField,
    /// The vector potential, when the file supplied one.
    pub potential: Option<VecField>,
    pub integrals: Vec<LogFunc>,
    pub multiplier: Option<Laurent>,
    /// Candidate Hamiltonian one-form η, when declared.
    pub one_form: Option<VecField>,
    pub params: BTreeMap<String, Rational>,
}

/// Failures of system-file parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SystemError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("missing required section: {0}")]
    MissingSection(String),
    #[error("line {line}: both [field] and [potential] given; declare exactly one")]
    BothFieldAndPotential { line: usize },
    #[error("line {line}: unknown section [{name}]")]
    UnknownSection { line: usize, name: String },
    #[error("line {line}: duplicate section [{name}]")]
    DuplicateSection { line: usize, name: String },
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
}

const SECTIONS: &[&str] = &[
    "system",
    "params",
    "field",
    "potential",
    "integrals",
    "multiplier",
    "one_form",
];

type Section = Vec<(usize, String)>;

fn malformed(line: usize, message: impl Into<String>) -> SystemError {
    SystemError::Malformed {
        line,
        message: message.into(),
    }
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

/// Splits `line` at its first `=`, returning (key, value, value column).
fn key_value(line: &str, lineno: usize) -> Result<(&str, &str, usize), SystemError> {
    let eq = line
        .find('=')
        .ok_or_else(|| malformed(lineno, "expected '<key> = <value>'"))?;
    let key = line[..eq].trim();
    let raw = &line[eq + 1..];
    let lead = raw.len() - raw.trim_start().len();
    let col0 = line[..eq + 1 + lead].chars().count() + 1;
    Ok((key, raw.trim(), col0))
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_alphanumeric() || c == '_')
}

/// Parses a system-definition file.
pub fn parse_system(src: &str) -> Result<SystemDef, SystemError> {
    // Pass 1: group lines by section.
    let mut sections: BTreeMap<String, Section> = BTreeMap::new();
    let mut order: Vec<(String, usize)> = Vec::new();
    let mut current: Option<String> = None;
    for (idx, raw) in src.lines().enumerate() {
        let lineno = idx + 1;
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        if let Some(name) = line.strip_prefix('[') {
            let name = name
                .strip_suffix(']')
                .ok_or_else(|| malformed(lineno, "unterminated section header"))?
                .trim()
                .to_string();
            if !SECTIONS.contains(&name.as_str()) {
                return Err(SystemError::UnknownSection { line: lineno, name });
            }
            if sections.contains_key(&name) {
                return Err(SystemError::DuplicateSection { line: lineno, name });
            }
            sections.insert(name.clone(), Vec::new());
            order.push((name.clone(), lineno));
            current = Some(name);
            continue;
        }
        let section = current
            .as_ref()
            .ok_or_else(|| malformed(lineno, "content before any [section] header"))?;
        sections
            .get_mut(section)
            .expect("current section exists")
            .push((lineno, strip_comment(raw).to_string()));
    }

    if sections.contains_key("field") && sections.contains_key("potential") {
        let line = order
            .iter()
            .filter(|(n, _)| n == "field" || n == "potential")
            .map(|(_, l)| *l)
            .max()
            .unwrap_or(1);
        return Err(SystemError::BothFieldAndPotential { line });
    }

    // Pass 2: fixed processing order so [params] is bound before any
    // expression, regardless of section order in the file.
    let system = sections
        .get("system")
        .ok_or_else(|| SystemError::MissingSection("system".into()))?;
    let (name, variables) = parse_system_section(system)?;

    let mut params: BTreeMap<String, Rational> = BTreeMap::new();
    if let Some(lines) = sections.get("params") {
        for (lineno, line) in lines {
            let (key, value, col0) = key_value(line, *lineno)?;
            if !is_identifier(key) || key == "ln" {
                return Err(malformed(*lineno, format!("invalid parameter name '{key}'")));
            }
            if variables.contains(&key.to_string()) {
                return Err(malformed(
                    *lineno,
                    format!("parameter '{key}' collides with a variable"),
                ));
            }
            if params.contains_key(key) {
                return Err(malformed(*lineno, format!("duplicate parameter '{key}'")));
            }
            let parsed = parse_expression_at(value, &variables, &params, *lineno, col0)?;
            let rational = parsed.poly().as_constant().filter(|_| !parsed.has_logs());
            match rational {
                Some(c) => {
                    params.insert(key.to_string(), c);
                }
                None => {
                    return Err(malformed(
                        *lineno,
                        format!("parameter '{key}' must be a rational constant"),
                    ))
                }
            }
        }
    }

    let field_given = sections.get("field");
    let potential_given = sections.get("potential");
    let (field, potential) = match (field_given, potential_given) {
        (Some(lines), None) => (parse_vector(lines, &variables, &params, "field")?, None),
        (None, Some(lines)) => {
            let a = parse_vector(lines, &variables, &params, "potential")?;
            (curl(&a), Some(a))
        }
        (None, None) => return Err(SystemError::MissingSection("field or potential".into())),
        (Some(_), Some(_)) => unreachable!("rejected above"),
    };

    let mut integrals = Vec::new();
    if let Some(lines) = sections.get("integrals") {
        for (lineno, line) in lines {
            let text = line.trim();
            let col0 = line.chars().count() - text.chars().count() + 1;
            integrals.push(parse_expression_at(text, &variables, &params, *lineno, col0)?);
        }
    }

    let mut multiplier = None;
    if let Some(lines) = sections.get("multiplier") {
        match lines.as_slice() {
            [(lineno, line)] => {
                let text = line.trim();
                let col0 = line.chars().count() - text.chars().count() + 1;
                let parsed = parse_expression_at(text, &variables, &params, *lineno, col0)?;
                if parsed.has_logs() {
                    return Err(malformed(*lineno, "multiplier cannot contain logarithms"));
                }
                if !parsed.poly().is_invertible() {
                    return Err(malformed(
                        *lineno,
                        "multiplier must be invertible (a rational multiple of one monomial)",
                    ));
                }
                multiplier = Some(parsed.poly().clone());
            }
            [] => return Err(SystemError::MissingSection("multiplier expression".into())),
            [_, (lineno, _), ..] => {
                return Err(malformed(*lineno, "multiplier section takes a single line"))
            }
        }
    }

    let mut one_form = None;
    if let Some(lines) = sections.get("one_form") {
        one_form = Some(parse_vector(lines, &variables, &params, "one_form")?);
    }

    Ok(SystemDef {
        name,
        variables,
        field,
        potential,
        integrals,
        multiplier,
        one_form,
        params,
    })
}

fn parse_system_section(lines: &Section) -> Result<(String, [String; VARS]), SystemError> {
    let mut name = None;
    let mut variables: Option<[String; VARS]> = None;
    for (lineno, line) in lines {
        let (key, value, _) = key_value(line, *lineno)?;
        match key {
            "name" => {
                if value.is_empty() {
                    return Err(malformed(*lineno, "empty system name"));
                }
                name = Some(value.to_string());
            }
            "variables" => {
                let ids: Vec<&str> = value.split_whitespace().collect();
                if ids.len() != VARS {
                    return Err(malformed(
                        *lineno,
                        format!("expected exactly {VARS} variables, got {}", ids.len()),
                    ));
                }
                for id in &ids {
                    if !is_identifier(id) || *id == "ln" {
                        return Err(malformed(*lineno, format!("invalid variable name '{id}'")));
                    }
                }
                if ids[0] == ids[1] || ids[0] == ids[2] || ids[1] == ids[2] {
                    return Err(malformed(*lineno, "variables must be distinct"));
                }
                variables = Some([ids[0].into(), ids[1].into(), ids[2].into()]);
            }
            other => {
                return Err(malformed(
                    *lineno,
                    format!("unknown key '{other}' in [system]"),
                ))
            }
        }
    }
    let first = lines.first().map_or(1, |(l, _)| *l);
    let name = name.ok_or_else(|| malformed(first, "missing 'name' in [system]"))?;
    let variables = variables.ok_or_else(|| malformed(first, "missing 'variables' in [system]"))?;
    Ok((name, variables))
}

/// Parses a three-component vector section, in either the
/// `components = e; e; e` or the per-variable `x' = e` form.
fn parse_vector(
    lines: &Section,
    variables: &[String; VARS],
    params: &BTreeMap<String, Rational>,
    section: &str,
) -> Result<VecField, SystemError> {
    let first_line = lines.first().map_or(1, |(l, _)| *l);
    if lines.is_empty() {
        return Err(malformed(first_line, format!("[{section}] is empty")));
    }

    let mut components: [Option<Laurent>; VARS] = [None, None, None];
    let fill = |idx: usize,
                    expr: LogFunc,
                    lineno: usize,
                    components: &mut [Option<Laurent>; VARS]|
     -> Result<(), SystemError> {
        if expr.has_logs() {
            return Err(malformed(
                lineno,
                "vector components must be free of logarithms",
            ));
        }
        if components[idx].is_some() {
            return Err(malformed(
                lineno,
                format!("component '{}' given twice", variables[idx]),
            ));
        }
        components[idx] = Some(expr.poly().clone());
        Ok(())
    };

    for (lineno, line) in lines {
        let (key, value, col0) = key_value(line, *lineno)?;
        if key == "components" {
            if lines.len() != 1 {
                return Err(malformed(
                    *lineno,
                    format!("'components =' must be the only line of [{section}]"),
                ));
            }
            let parts: Vec<&str> = value.split(';').collect();
            if parts.len() != VARS {
                return Err(malformed(
                    *lineno,
                    format!("expected {VARS} ';'-separated components"),
                ));
            }
            let mut offset = col0;
            for (idx, part) in parts.iter().enumerate() {
                let text = part.trim();
                let lead = part.chars().count() - part.trim_start().chars().count();
                let expr =
                    parse_expression_at(text, variables, params, *lineno, offset + lead)?;
                fill(idx, expr, *lineno, &mut components)?;
                offset += part.chars().count() + 1;
            }
        } else if let Some(var) = key.strip_suffix('\'') {
            let var = var.trim();
            let idx = variables
                .iter()
                .position(|v| v == var)
                .ok_or_else(|| malformed(*lineno, format!("unknown variable '{var}'")))?;
            let expr = parse_expression_at(value, variables, params, *lineno, col0)?;
            fill(idx, expr, *lineno, &mut components)?;
        } else {
            return Err(malformed(
                *lineno,
                format!("expected \"<var>' = <expr>\" or \"components = ...\" in [{section}]"),
            ));
        }
    }

    match components {
        [Some(a), Some(b), Some(c)] => Ok(VecField::new([a, b, c])),
        _ => Err(malformed(
            first_line,
            format!("[{section}] must define all {VARS} components"),
        )),
    }
}
