//! Recursive-descent parser for the expression grammar:
//!
//! ```text
//! expr   := term (("+"|"-") term)*
//! term   := factor (("*"|"/") factor)*
//! factor := base ("^" integer)?
//! base   := rational | identifier | "ln" "(" identifier ")"
//!         | "(" expr ")" | "-" factor
//! ```
//!
//! `^` binds tighter than unary minus, so `-x^2` parses as −(x²).
//! Implicit multiplication is rejected; parameters are substituted as
//! rational constants during parsing, so downstream algebra never sees
//! symbolic constants.

use super::lexer::{tokenize, Tok, Token};
use super::{ParseError, ParseErrorKind};
use crate::symbolic::{AlgebraError, LogFunc, Rational, VARS};
use num_bigint::BigInt;
use std::collections::BTreeMap;

pub struct ExprContext<'a> {
    pub variables: &'a [String; VARS],
    pub params: &'a BTreeMap<String, Rational>,
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    ctx: &'a ExprContext<'a>,
    end_line: usize,
    end_column: usize,
}

/// Parses an expression into a `LogFunc`, with `variables` mapping to the
/// three coordinates and `params` substituted as rational constants.
pub fn parse_expression(
    src: &str,
    variables: &[String; VARS],
    params: &BTreeMap<String, Rational>,
) -> Result<LogFunc, ParseError> {
    parse_expression_at(src, variables, params, 1, 1)
}

/// As `parse_expression`, but reporting positions relative to
/// (`line`, `col0`) inside an enclosing document.
pub fn parse_expression_at(
    src: &str,
    variables: &[String; VARS],
    params: &BTreeMap<String, Rational>,
    line: usize,
    col0: usize,
) -> Result<LogFunc, ParseError> {
    let tokens = tokenize(src, line, col0)?;
    let ctx = ExprContext { variables, params };
    let mut p = Parser {
        tokens,
        pos: 0,
        ctx: &ctx,
        end_line: line,
        end_column: col0 + src.chars().count(),
    };
    if p.tokens.is_empty() {
        return Err(p.error_at_end(ParseErrorKind::Syntax, "empty expression"));
    }
    let value = p.expr()?;
    if let Some(tok) = p.peek() {
        return Err(ParseError {
            line: tok.line,
            column: tok.column,
            kind: ParseErrorKind::Syntax,
            message: "unexpected token (implicit multiplication is not allowed)".into(),
        });
    }
    Ok(value)
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn error_at_end(&self, kind: ParseErrorKind, message: &str) -> ParseError {
        ParseError {
            line: self.end_line,
            column: self.end_column,
            kind,
            message: message.into(),
        }
    }

    fn error_at(&self, tok: &Token, kind: ParseErrorKind, message: String) -> ParseError {
        ParseError {
            line: tok.line,
            column: tok.column,
            kind,
            message,
        }
    }

    /// Maps an algebra failure to a positioned parse error.
    fn algebra(&self, err: AlgebraError, tok: &Token) -> ParseError {
        let kind = match err {
            AlgebraError::NonMonomialDivisor => ParseErrorKind::NonMonomialDenominator,
            AlgebraError::DivisionByZero => ParseErrorKind::NonMonomialDenominator,
            AlgebraError::LogarithmProduct | AlgebraError::LogarithmExponent => {
                ParseErrorKind::Syntax
            }
        };
        self.error_at(tok, kind, err.to_string())
    }

    fn expr(&mut self) -> Result<LogFunc, ParseError> {
        let mut acc = self.term()?;
        while let Some(tok) = self.peek() {
            match tok.tok {
                Tok::Plus => {
                    self.next();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.next();
                    acc = &acc - &self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<LogFunc, ParseError> {
        let mut acc = self.factor()?;
        while let Some(tok) = self.peek().cloned() {
            match tok.tok {
                Tok::Star => {
                    self.next();
                    let rhs = self.factor()?;
                    acc = acc.try_mul(&rhs).map_err(|e| self.algebra(e, &tok))?;
                }
                Tok::Slash => {
                    self.next();
                    let rhs = self.factor()?;
                    acc = acc.try_div(&rhs).map_err(|e| self.algebra(e, &tok))?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<LogFunc, ParseError> {
        let base = self.base()?;
        if let Some(tok) = self.peek().cloned() {
            if tok.tok == Tok::Caret {
                self.next();
                let exp = self.integer_exponent()?;
                return base.try_pow(exp).map_err(|e| self.algebra(e, &tok));
            }
        }
        Ok(base)
    }

    /// The exponent of `^`: an integer literal with optional sign.
    fn integer_exponent(&mut self) -> Result<i64, ParseError> {
        let mut negative = false;
        let Some(tok) = self.next() else {
            return Err(self.error_at_end(ParseErrorKind::NonIntegerExponent, "missing exponent"));
        };
        let digits_tok = match tok.tok {
            Tok::Minus => {
                negative = true;
                self.next().ok_or_else(|| {
                    self.error_at_end(ParseErrorKind::NonIntegerExponent, "missing exponent")
                })?
            }
            _ => tok,
        };
        match &digits_tok.tok {
            Tok::Int(digits) => {
                let value: i64 = digits.parse().map_err(|_| {
                    self.error_at(
                        &digits_tok,
                        ParseErrorKind::NonIntegerExponent,
                        "exponent out of range".into(),
                    )
                })?;
                Ok(if negative { -value } else { value })
            }
            _ => Err(self.error_at(
                &digits_tok,
                ParseErrorKind::NonIntegerExponent,
                "exponent must be an integer literal".into(),
            )),
        }
    }

    fn base(&mut self) -> Result<LogFunc, ParseError> {
        let Some(tok) = self.next() else {
            return Err(self.error_at_end(ParseErrorKind::Syntax, "unexpected end of expression"));
        };
        match &tok.tok {
            Tok::Int(digits) => {
                let n: BigInt = digits.parse().expect("lexer yields valid digit runs");
                Ok(LogFunc::constant(Rational::from_integer(n)))
            }
            Tok::Minus => {
                let inner = self.factor()?;
                Ok(-&inner)
            }
            Tok::LParen => {
                let inner = self.expr()?;
                self.expect_rparen()?;
                Ok(inner)
            }
            Tok::Ident(name) if name == "ln" => self.ln_call(&tok),
            Tok::Ident(name) => {
                if let Some(idx) = self.ctx.variables.iter().position(|v| v == name) {
                    Ok(LogFunc::from_laurent(crate::symbolic::Laurent::var(idx)))
                } else if let Some(value) = self.ctx.params.get(name) {
                    Ok(LogFunc::constant(value.clone()))
                } else {
                    Err(self.error_at(
                        &tok,
                        ParseErrorKind::UnknownIdentifier,
                        format!("unknown identifier '{name}'"),
                    ))
                }
            }
            _ => Err(self.error_at(
                &tok,
                ParseErrorKind::Syntax,
                "expected a number, identifier, 'ln(...)' or parenthesized expression".into(),
            )),
        }
    }

    fn ln_call(&mut self, ln_tok: &Token) -> Result<LogFunc, ParseError> {
        match self.next() {
            Some(t) if t.tok == Tok::LParen => {}
            _ => {
                return Err(self.error_at(
                    ln_tok,
                    ParseErrorKind::Syntax,
                    "expected '(' after ln".into(),
                ))
            }
        }
        let Some(arg) = self.next() else {
            return Err(self.error_at_end(ParseErrorKind::WrongArity, "ln expects one argument"));
        };
        let name = match &arg.tok {
            Tok::Ident(name) => name.clone(),
            Tok::RParen => {
                return Err(self.error_at(
                    &arg,
                    ParseErrorKind::WrongArity,
                    "ln expects exactly one argument".into(),
                ))
            }
            _ => {
                return Err(self.error_at(
                    &arg,
                    ParseErrorKind::LogOfNonVariable,
                    "ln takes a single system variable".into(),
                ))
            }
        };
        match self.next() {
            Some(t) if t.tok == Tok::RParen => {}
            Some(t) if t.tok == Tok::Comma => {
                return Err(self.error_at(
                    &t,
                    ParseErrorKind::WrongArity,
                    "ln expects exactly one argument".into(),
                ))
            }
            Some(t) => {
                return Err(self.error_at(
                    &t,
                    ParseErrorKind::LogOfNonVariable,
                    "ln takes a single system variable".into(),
                ))
            }
            None => {
                return Err(self.error_at_end(ParseErrorKind::Syntax, "missing ')'"));
            }
        }
        match self.ctx.variables.iter().position(|v| *v == name) {
            Some(idx) => Ok(LogFunc::ln_var(idx)),
            None => Err(self.error_at(
                ln_tok,
                ParseErrorKind::LogOfNonVariable,
                format!("ln argument '{name}' is not a system variable"),
            )),
        }
    }

    fn expect_rparen(&mut self) -> Result<(), ParseError> {
        match self.next() {
            Some(t) if t.tok == Tok::RParen => Ok(()),
            Some(t) => Err(self.error_at(&t, ParseErrorKind::Syntax, "expected ')'".into())),
            None => Err(self.error_at_end(ParseErrorKind::Syntax, "missing ')'")),
        }
    }
}
